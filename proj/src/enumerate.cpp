#include "oddplanar/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "oddplanar/parallel.hpp"

namespace oddplanar {

namespace {

// Edge pairs (i < j) in lexicographic order.
std::vector<std::pair<int, int>> all_pairs(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) out.push_back({i, j});
  }
  return out;
}

// Every configuration of one crossing multiset: crossing order along each
// edge, the side from which the second edge passes at each crossing, and
// the rotation at every real vertex. Darts are laid out per map segment as
// (2s at the segment's start node, 2s+1 at its end), so twin(d) = d ^ 1.
class Realizer {
 public:
  Realizer(const Multigraph& g, const CrossingMultiset& x) : g_(g), x_(x) {
    const auto edges = g.edges();
    m_ = static_cast<int>(edges.size());
    n_ = static_cast<int>(g.vertex_count());
    c_ = static_cast<int>(x.size());
    on_edge_.resize(m_);
    for (int k = 0; k < c_; ++k) {
      on_edge_[x[k].first].push_back(k);
      on_edge_[x[k].second].push_back(k);
    }
    offset_.resize(m_ + 1, 0);
    for (int i = 0; i < m_; ++i) offset_[i + 1] = offset_[i] + static_cast<int>(on_edge_[i].size()) + 1;
    darts_ = 2 * offset_[m_];
    next_.assign(darts_, -1);
    stamp_.assign(darts_, 0);

    vdarts_.resize(n_);
    for (int i = 0; i < m_; ++i) {
      vdarts_[*g.vertex_index(edges[i].u)].push_back(2 * offset_[i]);
      vdarts_[*g.vertex_index(edges[i].v)].push_back(2 * (offset_[i + 1] - 1) + 1);
    }
    perm_.resize(n_);
    for (int w = 0; w < n_; ++w) {
      perm_[w].resize(vdarts_[w].size());
      std::iota(perm_[w].begin(), perm_[w].end(), 0);
      if (vdarts_[w].empty()) ++isolated_;
    }

    // Components of the planarization do not depend on the configuration.
    std::vector<int> parent(n_ + c_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i = 0; i < m_; ++i) {
      int prev = *g.vertex_index(edges[i].u);
      for (int k : on_edge_[i]) {
        parent[find(prev)] = find(n_ + k);
        prev = n_ + k;
      }
      parent[find(prev)] = find(static_cast<int>(*g.vertex_index(edges[i].v)));
    }
    for (int a = 0; a < n_ + c_; ++a) components_ += find(a) == a;
    order_ = on_edge_;
    alt_.assign(c_, 0);
  }

  // Calls visit() on every genus-0 configuration and tick() on every
  // configuration. Either returning false stops the run; the result tells
  // whether the run went to completion.
  template <class Visit, class Tick>
  bool run(Visit&& visit, Tick&& tick) {
    for (auto& o : order_) std::sort(o.begin(), o.end());
    while (true) {
      const std::uint64_t alt_count = std::uint64_t{1} << c_;
      for (std::uint64_t a = 0; a < alt_count; ++a) {
        for (int k = 0; k < c_; ++k) alt_[k] = static_cast<char>((a >> k) & 1U);
        set_crossings();
        if (!run_rotations(visit, tick)) return false;
      }
      if (!advance_orders()) return true;
    }
  }

  Drawing materialize() const {
    const auto edges = g_.edges();
    std::vector<MapNode> nodes;
    for (int w = 0; w < n_; ++w) {
      MapNode node{NodeKind::Vertex, g_.vertices()[w], {}};
      for (int t : perm_[w]) node.rotation.push_back(vdarts_[w][t]);
      nodes.push_back(std::move(node));
    }
    for (int k = 0; k < c_; ++k) nodes.push_back({NodeKind::Crossing, kNone, crossing_rotation(k)});
    std::vector<MapDart> darts(darts_);
    std::vector<std::vector<DartId>> paths(m_);
    for (int i = 0; i < m_; ++i) {
      std::vector<int> path_nodes{static_cast<int>(*g_.vertex_index(edges[i].u))};
      for (int k : order_[i]) path_nodes.push_back(n_ + k);
      path_nodes.push_back(static_cast<int>(*g_.vertex_index(edges[i].v)));
      for (int s = 0; s + 1 < static_cast<int>(path_nodes.size()); ++s) {
        const int d = 2 * (offset_[i] + s);
        darts[d] = {d + 1, path_nodes[s], edges[i].id};
        darts[d + 1] = {d, path_nodes[s + 1], edges[i].id};
        paths[i].push_back(d);
      }
    }
    return Drawing(g_, std::move(nodes), std::move(darts), std::move(paths)).canonical();
  }

 private:
  int position(int edge, int k) const {
    const auto& o = order_[edge];
    return static_cast<int>(std::find(o.begin(), o.end(), k) - o.begin());
  }

  std::vector<DartId> crossing_rotation(int k) const {
    const auto [i, j] = x_[k];
    const int pi = position(i, k), pj = position(j, k);
    const int i_in = 2 * (offset_[i] + pi) + 1, i_out = 2 * (offset_[i] + pi + 1);
    const int j_in = 2 * (offset_[j] + pj) + 1, j_out = 2 * (offset_[j] + pj + 1);
    if (alt_[k] == 0) return {i_out, j_in, i_in, j_out};
    return {i_out, j_out, i_in, j_in};
  }

  void set_crossings() {
    for (int k = 0; k < c_; ++k) {
      const auto rot = crossing_rotation(k);
      for (int t = 0; t < 4; ++t) next_[rot[t]] = rot[(t + 1) % 4];
    }
  }

  void set_vertex(int w) {
    const auto& p = perm_[w];
    const auto& v = vdarts_[w];
    for (std::size_t t = 0; t < p.size(); ++t) next_[v[p[t]]] = v[p[(t + 1) % p.size()]];
  }

  bool advance_orders() {
    for (int i = m_ - 1; i >= 0; --i) {
      if (std::next_permutation(order_[i].begin(), order_[i].end())) return true;
    }
    return false;
  }

  int count_faces() {
    ++epoch_;
    int faces = 0;
    for (int d = 0; d < darts_; ++d) {
      if (stamp_[d] == epoch_) continue;
      ++faces;
      for (int e = d; stamp_[e] != epoch_; e = next_[e ^ 1]) stamp_[e] = epoch_;
    }
    return faces;
  }

  template <class Visit, class Tick>
  bool run_rotations(Visit& visit, Tick& tick) {
    for (int w = 0; w < n_; ++w) {
      std::iota(perm_[w].begin(), perm_[w].end(), 0);
      set_vertex(w);
    }
    const int target = 2 * components_ - isolated_ - (n_ + c_) + darts_ / 2;
    while (true) {
      if (!tick()) return false;
      if (count_faces() == target && !visit()) return false;
      int w = n_ - 1;
      for (; w >= 0; --w) {
        auto& p = perm_[w];
        const bool more = p.size() > 2 && std::next_permutation(p.begin() + 1, p.end());
        set_vertex(w);
        if (more) break;
      }
      if (w < 0) return true;
    }
  }

  const Multigraph& g_;
  const CrossingMultiset& x_;
  int m_ = 0, n_ = 0, c_ = 0, darts_ = 0;
  int components_ = 0, isolated_ = 0;
  std::vector<std::vector<int>> on_edge_, order_;
  std::vector<int> offset_;
  std::vector<std::vector<int>> vdarts_, perm_;
  std::vector<char> alt_;
  std::vector<int> next_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

class BudgetGuard {
 public:
  explicit BudgetGuard(const EnumerationBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Adds `n` candidates; false once the budget is spent.
  bool charge(std::int64_t n) {
    const std::int64_t total = used_.fetch_add(n) + n;
    if (budget_.max_candidates > 0 && total > budget_.max_candidates) exceeded_ = true;
    if (budget_.time_limit > 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > budget_.time_limit) exceeded_ = true;
    }
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }
  std::int64_t used() const { return used_; }

 private:
  EnumerationBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::int64_t> used_{0};
  std::atomic<bool> exceeded_{false};
};

// Charges the guard in batches to keep atomics off the hot path.
struct BatchedTick {
  BudgetGuard* guard;
  std::int64_t pending = 0;
  std::int64_t total = 0;
  bool operator()() {
    ++total;
    if (++pending < 1024) return guard ? !guard->exceeded() : true;
    return flush();
  }
  bool flush() {
    const bool ok = guard ? guard->charge(pending) : true;
    pending = 0;
    return ok;
  }
};

void require_simple(const Multigraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::InvalidArgument, "oracle needs a simple graph");
}

}  // namespace

std::vector<CrossingMultiset> crossing_multisets(int m, int size) {
  const auto pairs = all_pairs(m);
  std::vector<CrossingMultiset> out;
  if (size == 0) return {{}};
  if (pairs.empty()) return out;
  std::vector<int> idx(static_cast<std::size_t>(size), 0);
  const int p = static_cast<int>(pairs.size());
  while (true) {
    CrossingMultiset x;
    for (int i : idx) x.push_back(pairs[i]);
    out.push_back(std::move(x));
    int t = size - 1;
    while (t >= 0 && idx[t] == p - 1) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < size; ++u) idx[u] = idx[t];
  }
  return out;
}

std::optional<int> multiset_value(const Multigraph& g, const CrossingMultiset& x, Variant v, Rule r) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& pr : x) ++count[pr];
  int cr = 0, pcr = 0, ocr = 0;
  for (const auto& [pr, c] : count) {
    const bool adjacent = g.adjacent_at(static_cast<std::size_t>(pr.first), static_cast<std::size_t>(pr.second));
    if (adjacent && r == Rule::Plus) return std::nullopt;
    if (adjacent && r == Rule::Star && c % 2 == 1) return std::nullopt;
    if (adjacent && r == Rule::Minus) continue;
    cr += c;
    pcr += 1;
    ocr += c % 2;
  }
  return v == Variant::Cr ? cr : (v == Variant::Pcr ? pcr : ocr);
}

std::string canonical_key(const Drawing& d) {
  std::string key;
  auto put = [&](std::int32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  for (const Edge& e : d.graph().edges()) {
    put(e.id);
    put(e.u);
    put(e.v);
  }
  put(-2);
  for (const MapNode& n : d.nodes()) {
    put(n.kind == NodeKind::Vertex ? n.vertex : -3);
    put(static_cast<std::int32_t>(n.rotation.size()));
    for (DartId x : n.rotation) put(x);
  }
  put(-2);
  for (const MapDart& x : d.darts()) {
    put(x.twin);
    put(x.node);
    put(x.edge);
  }
  return key;
}

EnumerationStats enumerate_drawings(const Multigraph& g, const EnumerationBudget& budget,
                                    const std::function<bool(const Drawing&)>& sink) {
  require_simple(g);
  BudgetGuard guard(budget);
  EnumerationStats stats;
  std::unordered_set<std::string> seen;
  const int m = static_cast<int>(g.edge_count());
  for (int size = 0; size <= budget.max_crossings; ++size) {
    for (const CrossingMultiset& x : crossing_multisets(m, size)) {
      Realizer real(g, x);
      BatchedTick tick{&guard};
      bool stopped = false;
      const bool done = real.run(
          [&] {
            Drawing d = real.materialize();
            if (!seen.insert(canonical_key(d)).second) return true;
            ++stats.emitted;
            if (!sink(d)) stopped = true;
            return !stopped;
          },
          tick);
      tick.flush();
      stats.candidates = guard.used();
      if (stopped) return stats;
      if (!done || guard.exceeded()) {
        stats.complete = false;
        return stats;
      }
    }
  }
  return stats;
}

std::optional<Drawing> realize_multiset(const Multigraph& g, const CrossingMultiset& x,
                                        std::int64_t* candidates) {
  Realizer real(g, x);
  std::optional<Drawing> out;
  BatchedTick tick{nullptr};
  real.run(
      [&] {
        out = real.materialize();
        return false;
      },
      tick);
  if (candidates) *candidates += tick.total;
  return out;
}

namespace {

// Realizability of crossing multisets, cached across variant/rule queries.
class OracleSession {
 public:
  OracleSession(const Multigraph& g, const EnumerationBudget& budget, int threads)
      : g_(g), budget_(budget), guard_(budget), threads_(threads) {
    const int m = static_cast<int>(g.edge_count());
    for (int size = 0; size <= budget.max_crossings; ++size) {
      for (auto& x : crossing_multisets(m, size)) all_.push_back(std::move(x));
    }
    state_.assign(all_.size(), Unknown);
    cost_.assign(all_.size(), 0);
    witness_.resize(all_.size());
  }

  CrossingValue value(Variant v, Rule r) {
    struct Cand {
      int value;
      std::size_t index;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < all_.size(); ++i) {
      if (auto val = multiset_value(g_, all_[i], v, r)) cands.push_back({*val, i});
    }
    // all_ is already ordered by size, then lexicographically.
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.value < b.value; });
    CrossingValue out;
    const std::size_t chunk = 4 * static_cast<std::size_t>(threads_ > 0 ? threads_ : default_thread_count());
    for (std::size_t lo = 0; lo < cands.size(); lo += chunk) {
      const std::size_t hi = std::min(cands.size(), lo + chunk);
      std::vector<std::size_t> todo;
      for (std::size_t t = lo; t < hi; ++t) todo.push_back(cands[t].index);
      check(todo);
      for (std::size_t t = lo; t < hi; ++t) {
        // Count what a serial search would have examined, whatever ran ahead.
        out.candidates += cost_[cands[t].index];
        if (state_[cands[t].index] == Yes) {
          out.exact = true;
          out.value = cands[t].value;
          out.witness = witness_[cands[t].index];
          return out;
        }
      }
    }
    out.value = budget_.max_crossings + 1;
    return out;
  }

 private:
  enum State : char { Unknown, Yes, No };

  void check(const std::vector<std::size_t>& todo) {
    std::vector<std::size_t> open;
    for (std::size_t i : todo) {
      if (state_[i] == Unknown) open.push_back(i);
    }
    parallel_for(
        open.size(),
        [&](std::size_t t) {
          const std::size_t i = open[t];
          Realizer real(g_, all_[i]);
          BatchedTick tick{&guard_};
          std::optional<Drawing> found;
          const bool done = real.run(
              [&] {
                found = real.materialize();
                return false;
              },
              tick);
          tick.flush();
          if (!found && (!done || guard_.exceeded())) return;
          std::lock_guard lock(mutex_);
          cost_[i] = tick.total;
          witness_[i] = std::move(found);
          state_[i] = witness_[i] ? Yes : No;
        },
        threads_);
    if (guard_.exceeded()) {
      throw Error(ErrorKind::BudgetExceeded,
                  "oracle budget exhausted after " + std::to_string(guard_.used()) + " candidates");
    }
  }

  const Multigraph& g_;
  EnumerationBudget budget_;
  BudgetGuard guard_;
  int threads_;
  std::vector<CrossingMultiset> all_;
  std::vector<State> state_;
  std::vector<std::int64_t> cost_;
  std::vector<std::optional<Drawing>> witness_;
  std::mutex mutex_;
};

}  // namespace

CrossingValue exact_crossing_value(const Multigraph& g, Variant v, Rule r,
                                   const EnumerationBudget& budget, int threads) {
  require_simple(g);
  OracleSession s(g, budget, threads);
  return s.value(v, r);
}

std::vector<CrossingProfileEntry> crossing_profile(const Multigraph& g, const EnumerationBudget& budget,
                                                   int threads) {
  require_simple(g);
  OracleSession s(g, budget, threads);
  std::vector<CrossingProfileEntry> out;
  for (Variant v : {Variant::Cr, Variant::Pcr, Variant::Ocr}) {
    for (Rule r : {Rule::Plus, Rule::Zero, Rule::Minus, Rule::Star}) out.push_back({v, r, s.value(v, r)});
  }
  return out;
}

}  // namespace oddplanar
