#include "doctest.h"
#include "support.hpp"

using namespace mapcolor;
using testing::cyc;
using testing::N;

TEST_CASE("flipping an octahedron edge") {
  auto g = testing::bipyramid(4);
  auto e = g.find_dart(N(0), N(1))->edge();
  auto r = edge_flip(g, e);
  auto faces = testing::face_set(r.emb);
  CHECK(faces.count(cyc({0, 1, 4})) == 0);
  CHECK(faces.count(cyc({0, 2, 1})) == 0);
  CHECK(faces.count(cyc({0, 2, 4})) == 1);
  CHECK(faces.count(cyc({2, 1, 4})) == 1);
  CHECK(faces.size() == 8);
  CHECK_FALSE(r.emb.adjacent(N(0), N(1)));
  CHECK(r.emb.darts_between(N(2), N(4)).size() == 1);
  CHECK(r.flip.edge == e);
  auto added = std::minmax(r.flip.added.first, r.flip.added.second);
  CHECK(added == std::minmax(N(2), N(4)));
}

TEST_CASE("flip preconditions") {
  // K4 on the torus: the square and octagon are not triangles.
  auto g = testing::rows_to_graph({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  try {
    edge_flip(g, 0);
    FAIL("expected a flip precondition error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::flip_precondition);
  }
  CHECK_THROWS_AS(edge_flip(g, 99), Error);
}

TEST_CASE("cascade stops at once on a fresh diagonal") {
  auto g = testing::bipyramid(4);
  auto e = g.find_dart(N(1), N(2))->edge();
  auto r = cascade_flip(g, e);
  REQUIRE(r.flips.size() == 1);
  auto [x, y] = r.flips.back().added;
  CHECK(std::minmax(x, y) == std::minmax(N(0), N(5)));
}

TEST_CASE("chord splits a face") {
  auto g = testing::rows_to_graph({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  auto square = face_of(g, *g.find_dart(N(0), N(1)));
  REQUIRE(square.size() == 4);
  auto h = insert_chord(g, square, 0, 2, ChordPolicy::allow_duplicates);
  CHECK(h.edge_count() == 7);
  CHECK(trace_faces(h).size() == 3);
  CHECK(euler_genus(h).genus == 1);
  Dart fresh(static_cast<EdgeId>(h.edge_count() - 1), Side::forward);
  CHECK(h.tail(fresh) == square.vertices[0]);
  CHECK(h.head(fresh) == square.vertices[2]);
  CHECK_THROWS_AS(insert_chord(g, square, 0, 2), Error);
}

TEST_CASE("bridge merges two faces and raises the genus") {
  auto g = testing::bipyramid(4);
  auto f1 = face_of(g, *g.find_dart(N(0), N(1)));
  auto f2 = face_of(g, *g.find_dart(N(5), N(2)));
  std::size_t c1 = 0, c2 = 0;
  auto h = bridge(g, f1, c1, f2, c2);
  auto r = euler_genus(h);
  CHECK(r.genus == 1);
  CHECK(r.F == 7);
  CHECK(h.darts_between(f1.vertices[c1], f2.vertices[c2]).size() == 1);
  try {
    bridge(g, f1, 0, f1, 1);
    FAIL("expected same-face error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::same_face);
  }
}

TEST_CASE("contraction merges rotations") {
  auto g = testing::bipyramid(5);
  auto h = identify_and_contract(g, N(1), N(2), ParallelPolicy::keep);
  CHECK(h.vertex_count() == 6);
  CHECK_FALSE(h.contains(N(2)));
  CHECK(h.edge_count() == g.edge_count() - 1);
  CHECK(euler_genus(h).genus == 0);
  CHECK_THROWS_AS(identify_and_contract(g, N(1), N(2)), Error);
}

TEST_CASE("replace_rotation rejects non-permutations") {
  auto g = testing::bipyramid(4);
  auto rot = g.rotation(N(0));
  rot.pop_back();
  CHECK_THROWS_AS(replace_rotation(g, N(0), rot), Error);
}
