#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddplanar/drawing.hpp"

namespace oddplanar {

using Rational = boost::multiprecision::cpp_rational;

/// Best known upper bound on the edge count of a k-plane drawing on n
/// vertices. `exact` marks the cases where the bound is attained for every n
/// in range (k = 0 with n >= 3, k = 1 with n >= 12).
struct MkBound {
  std::int64_t value = 0;
  bool exact = false;
};

/// n <= 2: n(n-1)/2. Otherwise 3n-6, 4n-8, 5n-10, floor(5.5n-11), 6n-12 for
/// k = 0..4, and for k >= 2 also capped by floor(3.81 sqrt(k) n), which is
/// the only bound for k >= 5.
MkBound mk_upper_bound(int k, std::int64_t n);
inline std::int64_t mk_upper(int k, std::int64_t n) { return mk_upper_bound(k, n).value; }

/// Upper bound on the edge count of a k-odd-plane drawing:
/// min(mk_upper(k, n) + k(n-1), floor(sqrt(32k) n)) for k >= 1, and
/// mk_upper(0, n) for k = 0.
std::int64_t modd_upper(int k, std::int64_t n);

/// max(0, m - 3n, 2m - 8n): odd pairs forced in every drawing.
std::int64_t ocr_linear_lower(std::int64_t n, std::int64_t m);

enum class LemmaVariant { OcrStar, OcrPt, CrClassic, CrAckerman };

const char* to_string(LemmaVariant v);

/// Reciprocal constant c in m^3 / (c n^2) and the edge threshold m >= t*n.
struct LemmaConstants {
  Rational reciprocal;
  Rational threshold;
};
LemmaConstants lemma_constants(LemmaVariant v);

/// Reference constant only: pair-crossing number under Rule +, m >= 6.75n.
inline Rational pcr_plus_reciprocal() { return Rational(171, 5); }

/// m^3 / (c n^2) when the variant's threshold holds, nullopt otherwise.
std::optional<Rational> crossing_lemma_lower(std::int64_t n, std::int64_t m, LemmaVariant v);

/// Smallest integer not below a nonnegative rational.
std::int64_t ceil_to_int(const Rational& r);
std::int64_t floor_to_int(const Rational& r);
std::string to_string(const Rational& r);

struct LemmaEntry {
  LemmaVariant variant;
  std::optional<Rational> value;
};

/// One verdict of an audit. A failed applicable check is an alert: it can
/// only mean a bug in the implementation.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct BoundReport {
  std::int64_t n = 0, m = 0;
  int k = 0;
  std::int64_t mk_upper = 0;
  bool mk_exact = false;
  std::int64_t modd_upper = 0;
  std::int64_t ocr_linear_lower = 0;
  std::vector<LemmaEntry> lemma;
  // Drawing facts; only filled by audit_drawing.
  bool has_drawing = false;
  std::int64_t crossings = 0;
  std::int64_t odd_pairs = 0;
  bool k_plane = false;
  bool k_odd_plane = false;
  bool star_admissible = false;
  std::vector<BoundCheck> checks;
  std::vector<std::string> alerts;

  bool ok() const { return alerts.empty(); }
};

/// Bound values for (k, n, m) with no drawing.
BoundReport bound_report(int k, std::int64_t n, std::int64_t m);

/// Audits a valid drawing: odd pairs against the linear lower bound and the
/// odd-crossing lemmas, the edge count against modd_upper when the drawing
/// is k-odd-plane and against an exact mk_upper when it is k-plane, and the
/// crossing count against the classical crossing lemma.
BoundReport audit_drawing(const Drawing& d, int k);

struct SampleStats {
  double p = 1;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t n = 0, m = 0, odd_pairs = 0;
  double mean_n = 0, se_n = 0;
  double mean_m = 0, se_m = 0;
  double mean_x = 0, se_x = 0;
  double expected_n = 0, expected_m = 0, expected_x = 0;
  /// Trials with x' < max(0, m' - 3n', 2m' - 8n').
  std::int64_t law_violations = 0;
};

/// Keeps each vertex independently with probability p in each trial. Trial t
/// draws from Rng(seed + t) and keeps a vertex when unit() < p, visiting
/// vertices in id order. Trials run on `threads` workers (0 for the default)
/// and the result does not depend on the worker count.
/// Throws Error(InvalidProbability) unless 0 < p <= 1, Error(InvalidArgument)
/// for trials < 1.
SampleStats sampling_experiment(const Drawing& d, double p, std::int64_t trials,
                                std::uint64_t seed, int threads = 0);

}  // namespace oddplanar
