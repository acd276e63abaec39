#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "oddplanar/bounds.hpp"
#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/surgery.hpp"

using namespace oddplanar;

namespace {

// Largest x with a * x^2 <= b, by stepping.
long long largest_square_below(long long a, long long b) {
  long long x = 0;
  while (a * (x + 1) * (x + 1) <= b) ++x;
  return x;
}

// floor(3.81 sqrt(k) n) and floor(sqrt(32 k) n), written out independently.
long long cap381(int k, long long n) { return largest_square_below(10000, 145161LL * k * n * n); }
long long cap32(int k, long long n) { return largest_square_below(1, 32LL * k * n * n); }

long long table_mk(int k, long long n) {
  if (n <= 2) return n * (n - 1) / 2;
  switch (k) {
    case 0: return 3 * n - 6;
    case 1: return 4 * n - 8;
    case 2: return 5 * n - 10;
    case 3: return static_cast<long long>(std::floor(5.5 * static_cast<double>(n) - 11));
    case 4: return 6 * n - 12;
    default: return cap381(k, n);
  }
}

long long table_modd(int k, long long n) {
  if (k == 0) return table_mk(0, n);
  if (n >= 3 && k == 1) return 5 * n - 9;
  if (n >= 3 && k == 2) return 7 * n - 12;
  return std::min(table_mk(k, n) + k * (n - 1), cap32(k, n));
}

}  // namespace

TEST_CASE("spelled-out values") {
  CHECK(mk_upper(0, 10) == 24);
  CHECK(mk_upper(1, 12) == 40);
  CHECK(mk_upper(2, 10) == 40);
  CHECK(mk_upper(3, 10) == 44);
  CHECK(mk_upper(3, 11) == 49);
  CHECK(mk_upper(1, 1) == 0);
  CHECK(mk_upper(5, 2) == 1);
  CHECK(modd_upper(1, 10) == 41);
  CHECK(modd_upper(2, 10) == 58);
  CHECK(modd_upper(100, 100) == 5656);
  CHECK(modd_upper(1, 5) == 16);
  CHECK(modd_upper(0, 6) == 12);
  CHECK(ocr_linear_lower(10, 30) == 0);
  CHECK(ocr_linear_lower(10, 35) == 5);
  CHECK(ocr_linear_lower(10, 55) == 30);
}

TEST_CASE("exactness flags") {
  CHECK(mk_upper_bound(0, 3).exact);
  CHECK_FALSE(mk_upper_bound(0, 2).exact);
  CHECK_FALSE(mk_upper_bound(1, 11).exact);
  CHECK(mk_upper_bound(1, 12).exact);
  for (int k = 2; k <= 8; ++k) CHECK_FALSE(mk_upper_bound(k, 40).exact);
}

TEST_CASE("bound table regression") {
  for (int k = 0; k <= 6; ++k) {
    for (long long n = 1; n <= 50; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(mk_upper(k, n) == table_mk(k, n));
      CHECK(modd_upper(k, n) == table_modd(k, n));
    }
  }
}

TEST_CASE("monotonicity and ordering") {
  for (int k = 0; k <= 12; ++k) {
    for (long long n = 1; n <= 80; ++n) {
      CHECK(mk_upper(k, n) <= mk_upper(k + 1, n));
      CHECK(mk_upper(k, n) <= mk_upper(k, n + 1));
      CHECK(modd_upper(k, n) <= modd_upper(k + 1, n));
      CHECK(modd_upper(k, n) <= modd_upper(k, n + 1));
      CHECK(modd_upper(k, n) >= mk_upper(k, n));
    }
  }
}

TEST_CASE("crossing lemma values") {
  CHECK(crossing_lemma_lower(10, 60, LemmaVariant::OcrStar) == Rational(40));
  CHECK(crossing_lemma_lower(10, 40, LemmaVariant::OcrPt) == Rational(10));
  CHECK_FALSE(crossing_lemma_lower(10, 50, LemmaVariant::OcrStar).has_value());
  CHECK_FALSE(crossing_lemma_lower(10, 44, LemmaVariant::CrClassic).has_value());
  CHECK(crossing_lemma_lower(10, 45, LemmaVariant::CrClassic) == Rational(91125 * 4, 243 * 100));
  CHECK_FALSE(crossing_lemma_lower(10, 69, LemmaVariant::CrAckerman).has_value());
  CHECK(crossing_lemma_lower(10, 70, LemmaVariant::CrAckerman) == Rational(343000, 2900));
  // At m = 6n the 1/54 bound meets 2m - 8n exactly.
  for (long long n = 1; n <= 30; ++n) {
    CHECK(crossing_lemma_lower(n, 6 * n, LemmaVariant::OcrStar) == Rational(ocr_linear_lower(n, 6 * n)));
  }
  CHECK(floor_to_int(Rational(7, 2)) == 3);
  CHECK(ceil_to_int(Rational(7, 2)) == 4);
  CHECK(floor_to_int(Rational(-7, 2)) == -4);
  CHECK(to_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("audits") {
  SUBCASE("planar triangle") {
    const auto r = audit_drawing(fixtures::triangle(), 0);
    CHECK(r.ok());
    CHECK(r.ocr_linear_lower == 0);
    for (const auto& e : r.lemma) CHECK_FALSE(e.value.has_value());
    for (const auto& c : r.checks) CHECK(c.passed);
  }
  SUBCASE("one-crossing K5") {
    const auto r = audit_drawing(fixtures::k5_one_crossing(), 1);
    CHECK(r.ok());
    CHECK(r.m == 10);
    CHECK(r.modd_upper == 16);
    CHECK(r.k_odd_plane);
    CHECK(r.k_plane);
    CHECK(r.odd_pairs == 1);
  }
  SUBCASE("union keeps k-planarity and adds edges") {
    const Drawing k5 = fixtures::k5_one_crossing();
    const Drawing u = disjoint_union(k5, k5);
    CHECK(check_planarity_class(u, 1, PlanarityMode::Plane));
    CHECK(u.graph().edge_count() == 20);
    CHECK(audit_drawing(u, 1).ok());
  }
}

TEST_CASE("sampling experiment") {
  const Drawing k5 = fixtures::k5_one_crossing();
  SUBCASE("p = 1 keeps everything") {
    const auto s = sampling_experiment(k5, 1.0, 50, 7);
    CHECK(s.mean_n == 5);
    CHECK(s.mean_m == 10);
    CHECK(s.mean_x == 1);
    CHECK(s.se_m == 0);
    CHECK(s.law_violations == 0);
  }
  SUBCASE("p = 0.5 on K5") {
    const auto s = sampling_experiment(k5, 0.5, 20000, 11);
    CHECK(s.expected_m == doctest::Approx(2.5));
    CHECK(std::abs(s.mean_m - 2.5) <= 3 * s.se_m);
    CHECK(std::abs(s.mean_n - 2.5) <= 3 * s.se_n);
    CHECK(s.law_violations == 0);
  }
  SUBCASE("worker count does not change the result") {
    const auto a = sampling_experiment(k5, 0.3, 500, 5, 1);
    const auto b = sampling_experiment(k5, 0.3, 500, 5, 4);
    CHECK(a.mean_m == b.mean_m);
    CHECK(a.se_x == b.se_x);
  }
  SUBCASE("bad probability") {
    CHECK_THROWS_AS(sampling_experiment(k5, 0.0, 10, 1), Error);
    CHECK_THROWS_AS(sampling_experiment(k5, 1.5, 10, 1), Error);
    try {
      sampling_experiment(k5, -1, 10, 1);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidProbability);
    }
  }
}
