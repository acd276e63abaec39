#include "oddplanar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/parallel.hpp"
#include "oddplanar/parity.hpp"
#include "oddplanar/rng.hpp"
#include "oddplanar/surgery.hpp"

namespace oddplanar {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t to_i64(const cpp_int& v) { return v.convert_to<std::int64_t>(); }

// floor(sqrt(num / den)) for nonnegative integers.
std::int64_t floor_sqrt_ratio(const cpp_int& num, const cpp_int& den) {
  return to_i64(boost::multiprecision::sqrt(cpp_int(num / den)));
}

// floor(3.81 sqrt(k) n) = floor(sqrt(145161 k n^2 / 10000)).
std::int64_t crossing_lemma_cap(int k, std::int64_t n) {
  return floor_sqrt_ratio(cpp_int(145161) * k * n * n, cpp_int(10000));
}

}  // namespace

MkBound mk_upper_bound(int k, std::int64_t n) {
  if (n <= 2) return {n * (n - 1) / 2, false};
  std::int64_t v = 0;
  switch (k) {
    case 0: v = 3 * n - 6; break;
    case 1: v = 4 * n - 8; break;
    case 2: v = 5 * n - 10; break;
    case 3: v = (11 * n - 22) / 2; break;
    case 4: v = 6 * n - 12; break;
    default: v = crossing_lemma_cap(k, n); break;
  }
  if (k >= 2 && k <= 4) v = std::min(v, crossing_lemma_cap(k, n));
  return {v, k == 0 || (k == 1 && n >= 12)};
}

std::int64_t modd_upper(int k, std::int64_t n) {
  const std::int64_t mk = mk_upper(k, n);
  if (k == 0 || n <= 0) return mk;
  const std::int64_t linear = mk + static_cast<std::int64_t>(k) * (n - 1);
  return std::min(linear, floor_sqrt_ratio(cpp_int(32) * k * n * n, cpp_int(1)));
}

std::int64_t ocr_linear_lower(std::int64_t n, std::int64_t m) {
  return std::max<std::int64_t>({0, m - 3 * n, 2 * m - 8 * n});
}

const char* to_string(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::OcrStar: return "ocr_star";
    case LemmaVariant::OcrPt: return "ocr_pt";
    case LemmaVariant::CrClassic: return "cr_classic";
    case LemmaVariant::CrAckerman: return "cr_ackerman";
  }
  return "?";
}

LemmaConstants lemma_constants(LemmaVariant v) {
  switch (v) {
    case LemmaVariant::OcrStar: return {Rational(54), Rational(6)};
    case LemmaVariant::OcrPt: return {Rational(64), Rational(4)};
    case LemmaVariant::CrClassic: return {Rational(243, 4), Rational(9, 2)};
    case LemmaVariant::CrAckerman: return {Rational(29), Rational(7)};
  }
  return {};
}

std::optional<Rational> crossing_lemma_lower(std::int64_t n, std::int64_t m, LemmaVariant v) {
  if (n < 1) return std::nullopt;
  const auto c = lemma_constants(v);
  if (Rational(m) < c.threshold * n) return std::nullopt;
  const Rational mm(m), nn(n);
  return mm * mm * mm / (c.reciprocal * nn * nn);
}

std::int64_t floor_to_int(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return to_i64(q);
}

std::int64_t ceil_to_int(const Rational& r) { return -floor_to_int(-r); }

std::string to_string(const Rational& r) {
  const cpp_int den = boost::multiprecision::denominator(r);
  std::string s = boost::multiprecision::numerator(r).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

BoundReport bound_report(int k, std::int64_t n, std::int64_t m) {
  BoundReport r;
  r.n = n;
  r.m = m;
  r.k = k;
  const MkBound mk = mk_upper_bound(k, n);
  r.mk_upper = mk.value;
  r.mk_exact = mk.exact;
  r.modd_upper = modd_upper(k, n);
  r.ocr_linear_lower = ocr_linear_lower(n, m);
  for (LemmaVariant v : {LemmaVariant::OcrStar, LemmaVariant::OcrPt, LemmaVariant::CrClassic,
                         LemmaVariant::CrAckerman}) {
    r.lemma.push_back({v, crossing_lemma_lower(n, m, v)});
  }
  return r;
}

BoundReport audit_drawing(const Drawing& d, int k) {
  const auto n = static_cast<std::int64_t>(d.graph().vertex_count());
  const auto m = static_cast<std::int64_t>(d.graph().edge_count());
  BoundReport r = bound_report(k, n, m);
  const CrossingStats st = crossing_stats(d);
  const bool simple = d.graph().is_simple();
  r.has_drawing = true;
  r.crossings = st.cr + st.self_crossings;
  r.odd_pairs = st.ocr;
  r.k_plane = check_planarity_class(d, k, PlanarityMode::Plane);
  r.k_odd_plane = check_planarity_class(d, k, PlanarityMode::OddPlane);
  r.star_admissible = st.star_admissible;

  auto add = [&](std::string name, bool applicable, bool passed, std::string detail) {
    if (applicable && !passed) r.alerts.push_back(name + ": " + detail);
    r.checks.push_back({std::move(name), applicable, !applicable || passed, std::move(detail)});
  };
  add("odd_pairs_linear", simple, r.odd_pairs >= r.ocr_linear_lower,
      std::to_string(r.odd_pairs) + " >= " + std::to_string(r.ocr_linear_lower));
  add("modd_upper", simple && r.k_odd_plane, m <= r.modd_upper,
      std::to_string(m) + " <= " + std::to_string(r.modd_upper));
  add("mk_upper", simple && r.k_plane && r.mk_exact, m <= r.mk_upper,
      std::to_string(m) + " <= " + std::to_string(r.mk_upper));
  for (const LemmaEntry& e : r.lemma) {
    if (e.variant == LemmaVariant::CrAckerman) continue;
    const std::int64_t have = e.variant == LemmaVariant::CrClassic ? r.crossings : r.odd_pairs;
    bool applicable = simple && e.value.has_value();
    if (e.variant == LemmaVariant::OcrStar) applicable = applicable && r.star_admissible;
    const Rational bound = e.value.value_or(Rational(0));
    add(std::string("lemma_") + to_string(e.variant), applicable, Rational(have) >= bound,
        std::to_string(have) + " >= " + to_string(bound));
  }
  return r;
}

SampleStats sampling_experiment(const Drawing& d, double p, std::int64_t trials, std::uint64_t seed,
                                int threads) {
  if (!(p > 0 && p <= 1)) throw Error(ErrorKind::InvalidProbability, "p must lie in (0, 1]");
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  struct Trial {
    std::int64_t n, m, x;
  };
  std::vector<Trial> out(static_cast<std::size_t>(trials));
  const auto vertices = d.graph().vertices();
  parallel_for(
      out.size(),
      [&](std::size_t t) {
        Rng rng(seed + t);
        std::set<VertexId> keep;
        for (VertexId v : vertices) {
          if (rng.unit() < p) keep.insert(v);
        }
        const Drawing sub = induced_subdrawing(d, keep);
        out[t] = {static_cast<std::int64_t>(sub.graph().vertex_count()),
                  static_cast<std::int64_t>(sub.graph().edge_count()),
                  static_cast<std::int64_t>(parity_sketch(sub).parity.odd_pairs())};
      },
      threads);

  SampleStats s;
  s.p = p;
  s.trials = trials;
  s.seed = seed;
  s.n = static_cast<std::int64_t>(d.graph().vertex_count());
  s.m = static_cast<std::int64_t>(d.graph().edge_count());
  s.odd_pairs = static_cast<std::int64_t>(parity_sketch(d).parity.odd_pairs());
  // Integer sums keep the moments independent of summation order.
  auto moments = [&](auto field, double& mean, double& se) {
    cpp_int sum = 0, sq = 0;
    for (const Trial& x : out) {
      const std::int64_t v = field(x);
      sum += v;
      sq += cpp_int(v) * v;
    }
    const double tn = static_cast<double>(trials);
    mean = sum.convert_to<double>() / tn;
    if (trials > 1) {
      const Rational var(cpp_int(sq * trials - sum * sum), cpp_int(trials) * (trials - 1));
      se = std::sqrt(var.convert_to<double>() / tn);
    }
  };
  moments([](const Trial& x) { return x.n; }, s.mean_n, s.se_n);
  moments([](const Trial& x) { return x.m; }, s.mean_m, s.se_m);
  moments([](const Trial& x) { return x.x; }, s.mean_x, s.se_x);
  s.expected_n = p * static_cast<double>(s.n);
  s.expected_m = p * p * static_cast<double>(s.m);
  s.expected_x = p * p * p * p * static_cast<double>(s.odd_pairs);
  for (const Trial& x : out) {
    if (x.x < ocr_linear_lower(x.n, x.m)) ++s.law_violations;
  }
  return s;
}

}  // namespace oddplanar
