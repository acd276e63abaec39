#include "oddplanar/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/surgery.hpp"
#include "oddplanar/validate.hpp"

namespace oddplanar {

std::vector<EdgeId> max_even_forest(const Drawing& d) {
  const Multigraph& g = d.graph();
  const PairCounts pc = pair_crossing_counts(d);
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const std::size_t a = find(*g.vertex_index(e.u));
    const std::size_t b = find(*g.vertex_index(e.v));
    if (a == b) continue;
    const bool even = std::all_of(chosen.begin(), chosen.end(),
                                  [&](std::size_t j) { return pc.pair(i, j) % 2 == 0; });
    if (!even) continue;
    parent[std::max(a, b)] = std::min(a, b);
    chosen.push_back(i);
  }
  std::vector<EdgeId> out;
  for (std::size_t i : chosen) out.push_back(g.edges()[i].id);
  return out;
}

PipelineTrace theorem2_transform(const Drawing& d, int k) {
  require_valid(d);
  if (!d.graph().is_simple()) {
    throw Error(ErrorKind::InvalidArgument, "the pipeline expects a simple graph");
  }
  if (k < 0 || !check_planarity_class(d, k, PlanarityMode::OddPlane)) {
    throw Error(ErrorKind::NotKOddPlane, "drawing is not " + std::to_string(k) + "-odd-plane");
  }
  PipelineTrace trace;
  trace.k = k;
  const Drawing clean = remove_self_crossings(d);
  trace.forest = max_even_forest(clean);

  const Multigraph& g = clean.graph();
  const PairCounts pc = pair_crossing_counts(clean);
  std::set<EdgeId> removed;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    for (EdgeId f : trace.forest) {
      if (pc.pair(i, *g.edge_index(f)) % 2 == 1) {
        removed.insert(g.edges()[i].id);
        break;
      }
    }
  }
  trace.removed.assign(removed.begin(), removed.end());
  trace.reduced = remove_edges(clean, removed);
  trace.reduced_sketch = parity_sketch(trace.reduced);

  const Multigraph& g1 = trace.reduced.graph();
  const std::set<EdgeId> forest(trace.forest.begin(), trace.forest.end());
  ParitySketch sketch = trace.reduced_sketch;
  for (const auto& comp : g1.components()) {
    ComponentTrace ct;
    ct.vertices = comp;
    ct.root = comp.front();
    const std::set<VertexId> inside(comp.begin(), comp.end());
    std::map<VertexId, std::vector<const Edge*>> tree_adj;
    for (const Edge& e : g1.edges()) {
      if (!inside.count(e.u)) continue;
      ++ct.edge_count;
      if (forest.count(e.id)) {
        tree_adj[e.u].push_back(&e);
        tree_adj[e.v].push_back(&e);
      }
    }
    // BFS from the root; each child is contracted into the merged root.
    std::set<VertexId> seen{ct.root};
    std::queue<VertexId> queue;
    queue.push(ct.root);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop();
      for (const Edge* e : tree_adj[x]) {
        const VertexId y = e->u == x ? e->v : e->u;
        if (!seen.insert(y).second) continue;
        queue.push(y);
        ct.tree_edges.push_back(e->id);
        auto [next, rec] = contract_even_edge(sketch, e->id, ct.root);
        sketch = std::move(next);
        ct.splits.push_back(std::move(rec));
      }
    }
    trace.components.push_back(std::move(ct));
  }

  Drawing assembled;
  bool first = true;
  for (ComponentTrace& ct : trace.components) {
    ct.contracted = OneVertexSketch::from_rotation(ct.root, sketch.rotation_at(ct.root));
    for (std::size_t a = 0; a < ct.contracted.loops.size(); ++a) {
      for (std::size_t b = a + 1; b < ct.contracted.loops.size(); ++b) {
        const EdgeId e = ct.contracted.loops[a];
        const EdgeId f = ct.contracted.loops[b];
        if (sketch.odd(e, f) != ct.contracted.odd(e, f)) ct.parity_matches_rotation = false;
      }
    }
    ct.redrawn = lemma1_redraw(ct.contracted);
    assembled = first ? ct.redrawn : overlay_disjoint(assembled, ct.redrawn);
    first = false;
  }
  for (const ComponentTrace& ct : trace.components) {
    for (auto it = ct.splits.rbegin(); it != ct.splits.rend(); ++it) {
      assembled = split_vertex(assembled, *it);
    }
  }
  trace.result = first ? Drawing::empty() : std::move(assembled);
  return trace;
}

Drawing hanani_tutte_embed(const Drawing& d) {
  require_valid(d);
  if (!parity_sketch(d).parity.is_zero()) {
    throw Error(ErrorKind::OddPairPresent, "some pair of edges crosses an odd number of times");
  }
  return theorem2_transform(d, 0).result;
}

}  // namespace oddplanar
