#include "doctest.h"
#include "support.hpp"

#include "mapcolor/pipelines.hpp"
#include "mapcolor/rotation_io.hpp"

using namespace mapcolor;
using testing::cyc;
using testing::N;
using testing::rows_to_graph;

TEST_CASE("K4 with ascending rotations traces a square and an octagon") {
  // Traced by hand with face_next(d) = next(reverse(d)).
  auto g = rows_to_graph({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  auto faces = testing::face_set(g);
  REQUIRE(faces.size() == 2);
  CHECK(faces.count(cyc({0, 1, 2, 3})) == 1);
  CHECK(faces.count(cyc({0, 2, 1, 3, 2, 0, 3, 1})) == 1);
  auto r = euler_genus(g);
  CHECK(r.V == 4);
  CHECK(r.E == 6);
  CHECK(r.F == 2);
  CHECK(r.genus == 1);
  CHECK_FALSE(r.triangular);
  CHECK(r.simple);
}

TEST_CASE("planar K4 and a transposition at one vertex") {
  auto g = rows_to_graph({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  auto r = euler_genus(g);
  CHECK(r.genus == 0);
  CHECK(r.triangular);

  auto order = std::vector<Dart>{*g.find_dart(N(0), N(2)), *g.find_dart(N(0), N(1)),
                                 *g.find_dart(N(0), N(3))};
  auto h = replace_rotation(g, N(0), order);
  std::vector<std::size_t> sizes;
  for (const auto& f : trace_faces(h)) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{3, 9});
  CHECK(euler_genus(h).genus == 1);
}

TEST_CASE("octahedron faces are the eight expected triangles") {
  auto g = testing::bipyramid(4);
  auto faces = testing::face_set(g);
  CHECK(faces.size() == 8);
  for (int i = 1; i <= 4; ++i) {
    int prev = i == 1 ? 4 : i - 1;
    int next = i == 4 ? 1 : i + 1;
    CHECK(faces.count(cyc({0, i, prev})) == 1);
    CHECK(faces.count(cyc({5, i, next})) == 1);
  }
  CHECK(euler_genus(g).genus == 0);
}

TEST_CASE("complete graph genus formula") {
  CHECK(complete_graph_genus(3) == 0);
  CHECK(complete_graph_genus(4) == 0);
  CHECK(complete_graph_genus(5) == 1);
  CHECK(complete_graph_genus(7) == 1);
  CHECK(complete_graph_genus(8) == 2);
  CHECK(complete_graph_genus(26) == 43);
  CHECK(complete_graph_genus(35) == 83);
  for (long long n = 3; n < 400; ++n) {
    long long p = (n - 3) * (n - 4);
    CHECK(complete_graph_genus(n) == (p + 11) / 12);
  }
}

TEST_CASE("K7 on the torus passes final verification, K8 does not") {
  auto g = testing::k7_torus();
  auto r = verify_final(g, 7);
  CHECK(r.genus == 1);
  CHECK(r.triangular);
  CHECK_THROWS_AS(verify_final(g, 8), Error);
}

TEST_CASE("dart bookkeeping") {
  auto g = testing::bipyramid(5);
  CHECK(g.dart_count() == 2 * g.edge_count());
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    Dart x = Dart::from_index(static_cast<int>(d));
    CHECK(x.reverse().reverse() == x);
    CHECK(g.head(x) == g.tail(x.reverse()));
    CHECK(g.prev(g.next(x)) == x);
    CHECK(g.tail(g.next(x)) == g.tail(x));
  }
  CHECK_NOTHROW(g.validate());
  CHECK(is_connected(g));
}

TEST_CASE("rotation text round trip") {
  auto g = testing::k7_torus();
  auto text = write_rotation_text(g);
  auto h = read_rotation_text(text);
  CHECK(h == g);
  CHECK(write_rotation_text(h) == text);
  CHECK(text.substr(0, 14) == "0. (1 3 2 6 4 ");
}

TEST_CASE("rotation text errors") {
  auto kind_of = [](std::string_view text) {
    try {
      read_rotation_text(text);
    } catch (const Error& e) {
      return std::optional<ErrorKind>(e.kind());
    }
    return std::optional<ErrorKind>();
  };
  CHECK(kind_of("0. (1 2\n") == ErrorKind::parse);
  CHECK(kind_of("0. 1 2)\n") == ErrorKind::parse);
  CHECK(kind_of("0. (1)\n1. (0)\n# comment\n") == std::nullopt);
  // 0 lists 1 but 1 does not list 0.
  CHECK(kind_of("0. (1)\n1. (2)\n2. (1)\n").has_value());
}

TEST_CASE("face list text") {
  auto g = rows_to_graph({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  auto text = write_face_list(trace_faces(g));
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("F: [") == 0);
}
