#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oddplanar/contraction.hpp"
#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/lemma1.hpp"
#include "oddplanar/parity.hpp"
#include "oddplanar/pipeline.hpp"
#include "oddplanar/surgery.hpp"
#include "oddplanar/validate.hpp"

using namespace oddplanar;

namespace {

// Interleaving computed from positions only.
bool alternate(const std::vector<Ending>& rot, EdgeId e, EdgeId f) {
  std::vector<int> pe, pf;
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (rot[i].edge == e) pe.push_back(i);
    if (rot[i].edge == f) pf.push_back(i);
  }
  int inside = 0;
  for (int x : pf) inside += (x > pe[0] && x < pe[1]);
  return inside == 1;
}

bool same_cycle(std::vector<Ending> a, const std::vector<Ending>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a.empty();
}

OneVertexSketch sketch_of(std::vector<Ending> rot) { return OneVertexSketch::from_rotation(0, rot); }

}  // namespace

TEST_CASE("one-vertex loop redrawing, small cases") {
  SUBCASE("single loop") {
    const Drawing d = lemma1_redraw(sketch_of({{0, 0}, {0, 1}}));
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossing_node_count() == 0);
  }
  SUBCASE("nested pair") {
    const Drawing d = lemma1_redraw(sketch_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossing_node_count() == 0);
  }
  SUBCASE("interleaved pair") {
    const Drawing d = lemma1_redraw(sketch_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossing_node_count() == 1);
    CHECK(crossing_count(d, 0, 1) == 1);
  }
  SUBCASE("three pairwise interleaved loops") {
    const std::vector<Ending> rot{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
    const Drawing d = lemma1_redraw(sketch_of(rot));
    CHECK(validate_drawing(d).empty());
    CHECK(d.crossing_node_count() == 3);
    for (auto [e, f] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      CHECK(alternate(rot, e, f));
      CHECK(crossing_count(d, e, f) == 1);
    }
    CHECK(same_cycle(d.endings_at(0), rot));
  }
  SUBCASE("malformed sketch") {
    CHECK_THROWS_AS(lemma1_redraw(sketch_of({{0, 0}, {1, 0}, {0, 1}})), Error);
  }
}

TEST_CASE("remove_self_crossings") {
  const Drawing plain = fixtures::k5_one_crossing();
  CHECK(remove_self_crossings(plain) == plain);

  const Drawing eight = fixtures::figure_eight_loop();
  const Drawing smooth = remove_self_crossings(eight);
  CHECK(validate_drawing(smooth).empty());
  CHECK(smooth.crossing_node_count() == 0);
  CHECK(same_cycle(smooth.endings_at(0), eight.endings_at(0)));

  // A curl on an edge that already crosses another one.
  const Drawing curled = add_curl(plain, plain.path(3)[0]);
  REQUIRE(self_crossing_count(curled, 3) == 1);
  const Drawing back = remove_self_crossings(curled);
  CHECK(validate_drawing(back).empty());
  CHECK(self_crossing_count(back, 3) == 0);
  CHECK(crossing_count(back, 3, 5) == 1);
}

TEST_CASE("contraction rotation rule") {
  // u=0: (e, e1, e2), v=1: (e, f1).
  Multigraph g({0, 1, 2, 3, 4}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 3}, {3, 1, 4}});
  ParitySketch sk;
  sk.graph = g;
  sk.rotation = {{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {3, 0}}, {{1, 1}}, {{2, 1}}, {{3, 1}}};
  sk.parity = ParityMatrix(4);
  sk.check();
  const auto [merged, rec] = contract_even_edge(sk, 0, 0);
  CHECK(merged.rotation_at(0) == std::vector<Ending>{{1, 0}, {2, 0}, {3, 0}});
  CHECK(rec.u_block == std::vector<Ending>{{1, 0}, {2, 0}});
  CHECK(rec.v_block == std::vector<Ending>{{3, 0}});
  CHECK(split_sketch(merged, rec) == sk);

  // Pendant edge.
  const auto [m2, r2] = contract_even_edge(sk, 3, 1);
  CHECK(m2.rotation_at(1) == std::vector<Ending>{{0, 1}});

  sk.parity.set(0, 3, true);
  CHECK_THROWS_AS(contract_even_edge(sk, 0, 0), Error);
}

TEST_CASE("split_vertex reverses the record") {
  // Draw the merged vertex with three pendant edges, then split it.
  Multigraph g({0, 2, 3, 4}, {{1, 0, 2}, {2, 0, 3}, {3, 0, 4}});
  const Drawing w = drawing_from_polylines(g, {{0, {0, 0}}, {2, {0, 10}}, {3, {10, 0}}, {4, {0, -10}}});
  REQUIRE(w.endings_at(0) == std::vector<Ending>{{1, 0}, {2, 0}, {3, 0}});
  SplitRecord rec{0, 0, 1, {0, 0, 1}, {{1, 0}, {2, 0}}, {{3, 0}}};
  const Drawing d = split_vertex(w, rec);
  CHECK(validate_drawing(d).empty());
  CHECK(same_cycle(d.endings_at(0), {{0, 0}, {1, 0}, {2, 0}}));
  CHECK(same_cycle(d.endings_at(1), {{0, 1}, {3, 0}}));
  CHECK(d.crossing_node_count() == 0);

  SplitRecord bad{0, 0, 1, {0, 0, 1}, {{1, 0}, {3, 0}}, {{2, 0}}};
  CHECK_THROWS_AS(split_vertex(w, bad), Error);
}

TEST_CASE("max_even_forest") {
  const Drawing t = fixtures::triangle();
  CHECK(max_even_forest(t).size() == 2);

  const Drawing k5 = fixtures::k5_one_crossing();
  const auto f = max_even_forest(k5);
  CHECK(f.size() == 4);
  const auto sk = parity_sketch(k5);
  for (EdgeId a : f) {
    for (EdgeId b : f) CHECK_FALSE(sk.odd(a, b));
  }
}

TEST_CASE("two triangles joined by oddly crossing edges") {
  // Triangles 012 and 345 side by side; 2-3 and 1-4 cross each other and,
  // bent through the first triangle, also cross its edge 01 once each.
  Multigraph g({0, 1, 2, 3, 4, 5}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}, {3, 3, 4}, {4, 4, 5},
                                    {5, 3, 5}, {6, 2, 3}, {7, 1, 4}});
  const Drawing d = drawing_from_polylines(
      g, {{0, {0, 0}}, {1, {10, 0}}, {2, {5, 10}}, {3, {30, 0}}, {4, {40, 0}}, {5, {35, 10}}},
      {{6, {{4, -5}, {20, -6}}}, {7, {{6, 5}, {5, -3}, {22, -3}}}});
  REQUIRE(validate_drawing(d).empty());
  const auto f = max_even_forest(d);
  const auto sk = parity_sketch(d);
  std::set<EdgeId> fs(f.begin(), f.end());
  // Maximality: every edge outside F joining two F-components crosses F oddly.
  Multigraph forest_graph(
      {g.vertices().begin(), g.vertices().end()},
      [&] {
        std::vector<Edge> es;
        for (EdgeId e : f) es.push_back(g.edge(e));
        return es;
      }());
  const auto comps = forest_graph.components();
  CHECK(comps.size() == 2);
  auto comp_of = [&](VertexId v) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (std::find(comps[i].begin(), comps[i].end(), v) != comps[i].end()) return i;
    }
    return comps.size();
  };
  for (const Edge& e : g.edges()) {
    if (fs.count(e.id) || comp_of(e.u) == comp_of(e.v)) continue;
    bool odd = false;
    for (EdgeId x : f) odd = odd || sk.odd(e.id, x);
    CHECK(odd);
  }
}

TEST_CASE("k-plane pipeline on small inputs") {
  SUBCASE("planar embedding, k = 0") {
    const Drawing d = embed_planar(Multigraph::complete(4));
    const auto tr = theorem2_transform(d, 0);
    CHECK(tr.removed.empty());
    CHECK(validate_drawing(tr.result).empty());
    CHECK(tr.result.crossing_node_count() == 0);
    for (VertexId v : d.graph().vertices()) CHECK(same_cycle(tr.result.endings_at(v), d.endings_at(v)));
  }
  SUBCASE("one-crossing K5, k = 1") {
    const Drawing d = fixtures::k5_one_crossing();
    const auto tr = theorem2_transform(d, 1);
    CHECK(validate_drawing(tr.result).empty());
    CHECK(tr.removed.size() <= 4);
    CHECK(tr.result.graph().edge_count() >= 6);
    CHECK(check_planarity_class(tr.result, 1, PlanarityMode::Plane));
    const auto sk = parity_sketch(tr.reduced);
    for (const Edge& e : tr.result.graph().edges()) {
      for (const Edge& f : tr.result.graph().edges()) {
        if (e.id < f.id) CHECK(crossing_count(tr.result, e.id, f.id) == (sk.odd(e.id, f.id) ? 1 : 0));
      }
    }
  }
  SUBCASE("not k-odd-plane") {
    CHECK_THROWS_AS(theorem2_transform(fixtures::k5_one_crossing(), 0), Error);
  }
}

TEST_CASE("hanani_tutte_embed") {
  const Drawing base = embed_planar(Multigraph::complete(4));
  CHECK(hanani_tutte_embed(base).crossing_node_count() == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Drawing d = perturb_even(base, 4, seed).drawing;
    const Drawing out = hanani_tutte_embed(d);
    CHECK(validate_drawing(out).empty());
    CHECK(out.crossing_node_count() == 0);
    CHECK(out.graph() == d.graph());
  }
  try {
    hanani_tutte_embed(fixtures::k5_one_crossing());
    FAIL("expected OddPairPresent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddPairPresent);
  }
}
