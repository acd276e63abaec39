#include "doctest.h"
#include "fixtures.hpp"
#include "oddplanar/construct.hpp"
#include "oddplanar/crossing_stats.hpp"
#include "oddplanar/parity.hpp"
#include "oddplanar/validate.hpp"

using namespace oddplanar;

TEST_CASE("polyline degeneracies are rejected") {
  Multigraph g({0, 1, 2}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}});
  // Collinear vertices: edge 02 passes through vertex 1.
  CHECK_THROWS_AS(drawing_from_polylines(g, {{0, {0, 0}}, {1, {5, 0}}, {2, {10, 0}}}), Error);
  // Shared positions.
  CHECK_THROWS_AS(drawing_from_polylines(g, {{0, {0, 0}}, {1, {0, 0}}, {2, {3, 4}}}), Error);
  // Three concurrent chords.
  Multigraph h({0, 1, 2, 3, 4, 5}, {{0, 0, 3}, {1, 1, 4}, {2, 2, 5}});
  CHECK_THROWS_AS(
      drawing_from_polylines(
          h, {{0, {-2, 0}}, {1, {-1, 2}}, {2, {1, 2}}, {3, {2, 0}}, {4, {1, -2}}, {5, {-1, -2}}}),
      Error);
  try {
    drawing_from_polylines(g, {{0, {0, 0}}, {1, {5, 0}}, {2, {10, 0}}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateGeometry);
  }
}

TEST_CASE("convex K4 has one crossing") {
  const Drawing d = drawing_from_polylines(
      Multigraph::complete(4), {{0, {0, 0}}, {1, {4, 0}}, {2, {4, 4}}, {3, {0, 4}}});
  CHECK(validate_drawing(d).empty());
  CHECK(d.crossing_node_count() == 1);
  CHECK(crossing_count(d, 1, 4) == 1);  // 02 and 13
}

TEST_CASE("planar embedding") {
  for (int n = 1; n <= 4; ++n) {
    const auto d = try_embed_planar(Multigraph::complete(n));
    REQUIRE(d.has_value());
    CHECK(validate_drawing(*d).empty());
    CHECK(d->crossing_node_count() == 0);
  }
  CHECK_FALSE(try_embed_planar(Multigraph::complete(5)).has_value());
  CHECK_FALSE(try_embed_planar(Multigraph::complete_bipartite(3, 3)).has_value());
  CHECK_THROWS_AS(embed_planar(Multigraph::complete(5)), Error);
}

TEST_CASE("edge insertion along dual routes") {
  // K5 minus edge 34 is planar; the missing edge needs exactly one crossing.
  const Multigraph k5 = Multigraph::complete(5);
  std::vector<Edge> es(k5.edges().begin(), k5.edges().end() - 1);
  const Drawing base = embed_planar(Multigraph({0, 1, 2, 3, 4}, es));
  const auto route = find_route(base, 3, 4, [](EdgeId) { return true; });
  REQUIRE(route.has_value());
  CHECK(route->crossed.size() == 1);
  const Drawing d = insert_edge(base, {9, 3, 4}, *route);
  CHECK(validate_drawing(d).empty());
  CHECK(d.crossing_node_count() == 1);
  CHECK(crossing_stats(d).cr == 1);

  // Forbidding every crossing leaves no route.
  CHECK_FALSE(find_route(base, 3, 4, [](EdgeId) { return false; }).has_value());

  // Joining two components needs no crossing.
  Multigraph two({0, 1, 2, 3}, {{0, 0, 1}, {1, 2, 3}});
  const Drawing sep = embed_planar(two);
  const auto r2 = find_route(sep, 1, 2, [](EdgeId) { return false; });
  REQUIRE(r2.has_value());
  const Drawing joined = insert_edge(sep, {2, 1, 2}, *r2);
  CHECK(validate_drawing(joined).empty());
  CHECK(joined.map_components().size() == 1);
}

TEST_CASE("randomized routes stay valid") {
  const Multigraph k5 = Multigraph::complete(5);
  std::vector<Edge> es(k5.edges().begin(), k5.edges().end() - 1);
  const Drawing base = embed_planar(Multigraph({0, 1, 2, 3, 4}, es));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto route = find_route(base, 3, 4, [](EdgeId) { return true; }, seed);
    REQUIRE(route.has_value());
    const Drawing d = insert_edge(base, {9, 3, 4}, *route);
    CHECK(validate_drawing(d).empty());
  }
}

TEST_CASE("double crossing moves and their inverse") {
  const Drawing t = fixtures::triangle();
  const auto faces = t.faces();
  const DartId a = faces[0][0], b = faces[0][1];
  std::pair<NodeId, NodeId> made;
  const Drawing d = double_crossing(t, a, b, &made);
  REQUIRE(validate_drawing(d).empty());
  CHECK(d.crossing_node_count() == 2);
  CHECK(crossing_count(d, t.dart(a).edge, t.dart(b).edge) == 2);
  CHECK(parity_sketch(d).parity.is_zero());
  CHECK(d.is_crossing(made.first));
  CHECK(d.is_crossing(made.second));
  CHECK(undo_double_crossing(d, made.first, made.second) == t);
  CHECK_THROWS_AS(double_crossing(t, a, a), Error);
}

TEST_CASE("perturbed drawings replay and invert") {
  const Drawing base = embed_planar(Multigraph::complete(4));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = perturb_even(base, 3, seed);
    REQUIRE(validate_drawing(r.drawing).empty());
    CHECK(r.moves.size() == 3);
    CHECK(r.drawing.crossing_node_count() == 6);
    CHECK(parity_sketch(r.drawing).parity.is_zero());
    CHECK(replay_moves(base, r.moves) == r.drawing);
    CHECK(invert_moves(r.drawing, r.moves) == base);
    CHECK(perturb_even(base, 3, seed).drawing == r.drawing);
  }
}

TEST_CASE("curl adds one self-crossing") {
  const Drawing t = fixtures::triangle();
  const Drawing d = add_curl(t, t.paths()[0][0]);
  CHECK(validate_drawing(d).empty());
  CHECK(self_crossing_count(d, 0) == 1);
}
