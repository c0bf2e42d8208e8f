#include "doctest.h"
#include "cg_support.hpp"
#include "support.hpp"

using namespace mapcolor;
using testing::incoming_currents;
using testing::incoming_sum;
using testing::vertex_named;

namespace {

// Vortex types from the definitions: degree, the subgroup the excess
// generates, and for degree 3 the residues of the incoming currents.
std::optional<VortexType> expected_type(const CurrentGraph& cg, VertexId v) {
  int m = cg.modulus;
  int ex = incoming_sum(cg, v);
  int index = std::gcd(ex, m);
  int deg = cg.graph.degree(v);
  if (deg == 1 && index == 1) return VortexType::V1;
  if (deg == 1 && index == 2) return VortexType::V2;
  if (deg == 3 && index == 3) {
    auto in = incoming_currents(cg, v);
    int j = in[0] % 3;
    if (j == 0) return std::nullopt;
    for (int c : in) {
      if (c % 3 != j) return std::nullopt;
    }
    return VortexType::V3;
  }
  return std::nullopt;
}

void check_family_member(const CurrentGraph& cg) {
  auto report = check_principles(cg);
  CHECK_MESSAGE(report.all_pass(), report.to_string());
  CHECK(report.index == 1);
  for (const auto& [v, vx] : cg.vortices) {
    CHECK(excess(cg, v).value() == incoming_sum(cg, v));
    auto want = expected_type(cg, v);
    REQUIRE(want.has_value());
    CHECK(*want == vx.declared);
    CHECK(classify_vortex(cg, v).kind == want);
  }
  for (VertexId v : cg.graph.vertices()) {
    if (cg.vortices.count(v) || cg.graph.degree(v) == 1) continue;
    CHECK(incoming_sum(cg, v) == 0);
  }
}

}  // namespace

TEST_CASE("the smallest Case 2 graph satisfies every principle") {
  auto cg = testing::case2_s1();
  CHECK(cg.modulus == 18);
  CHECK(cg.graph.edge_count() == 9);
  check_family_member(cg);
  CHECK(order_two_pendant(cg).has_value());
}

TEST_CASE("smallest Case 2 log covers every nonzero residue") {
  auto log = trace_log(testing::case2_s1());
  CHECK(log.numbers().size() == 17);
  auto numbers = log.numbers();
  std::sort(numbers.begin(), numbers.end());
  for (int k = 1; k < 18; ++k) CHECK(numbers[k - 1] == k);
}

TEST_CASE("Case 11 vortex excesses at s=2") {
  auto cg = build_case11(2);
  CHECK(cg.modulus == 30);
  // delta and eps
  CHECK(incoming_sum(cg, vertex_named(cg, "X")) == 1);
  CHECK(incoming_sum(cg, vertex_named(cg, "Y")) == 17);
}

TEST_CASE("Case 11 family members satisfy the principles") {
  for (long long s = 2; s <= 50; ++s) {
    CAPTURE(s);
    auto cg = build_case11(s);
    CHECK(cg.modulus == 12 * s + 6);
    check_family_member(cg);
    CHECK(order_two_pendant(cg).has_value());
  }
}

TEST_CASE("Case 2 family members satisfy the principles") {
  for (long long s = 1; s <= 50; ++s) {
    CAPTURE(s);
    auto cg = build_case2(s);
    CHECK(cg.modulus == 12 * s + 6);
    check_family_member(cg);
  }
}

TEST_CASE("Case 11 log has the required shape") {
  for (long long s = 2; s <= 25; ++s) {
    CAPTURE(s);
    auto cg = build_case11(s);
    int m = cg.modulus;
    int eps = testing::mod(6 * s + 5, m);
    CHECK(eps % 3 == 2);
    auto entries = trace_log(cg).entries;
    std::size_t len = entries.size();
    auto at = [&](std::size_t k) { return entries[k % len]; };
    std::optional<std::size_t> start;
    for (std::size_t k = 0; k < len; ++k) {
      if (at(k) == LogEntry(testing::mod(2 * eps, m)) && at(k + 1) == LogEntry(Letter::a) &&
          at(k + 2) == LogEntry(eps) && at(k + 3) == LogEntry(Letter::y) &&
          at(k + 4) == LogEntry(testing::mod(-eps, m)) && at(k + 5) == LogEntry(Letter::b)) {
        start = k;
      }
    }
    REQUIRE(start.has_value());
    std::optional<std::size_t> pos_c, pos_x;
    for (std::size_t k = 6; k < len; ++k) {
      if (at(*start + k) == LogEntry(Letter::c)) pos_c = k;
      if (at(*start + k) == LogEntry(Letter::x)) pos_x = k;
    }
    REQUIRE(pos_c.has_value());
    REQUIRE(pos_x.has_value());
    CHECK(*pos_c < *pos_x);

    // The V3 vortex is adjacent to y, and its third incoming current is gamma.
    VertexId cab = vertex_named(cg, "CAB");
    VertexId y = vertex_named(cg, "Y");
    CHECK(cg.graph.adjacent(cab, y));
    auto in = incoming_currents(cg, cab);
    int gamma = testing::mod(6 * s - 2, m);
    CHECK(std::count(in.begin(), in.end(), gamma) == 1);
    CHECK(gamma % 3 == 1);
  }
}

TEST_CASE("current graph text round trip") {
  for (auto cg : {testing::case2_s1(), build_case11(3), build_case2(4)}) {
    auto text = write_current_graph(cg);
    auto back = read_current_graph(text);
    CHECK(back.modulus == cg.modulus);
    CHECK(trace_log(back).to_string() == trace_log(cg).to_string());
    CHECK(write_current_graph(back) == text);
  }
}

TEST_CASE("current graph parse errors") {
  auto kind_of = [](std::string_view text) -> std::optional<ErrorKind> {
    try {
      read_current_graph(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of("") == ErrorKind::parse);
  CHECK(kind_of("group 4\np B (e1+)\ne1: p -> q current 1\n") == ErrorKind::parse);
  CHECK(kind_of("group four\n") == ErrorKind::parse);
  CHECK(kind_of("group 4\np B (e1+)\nq B (e1-)\ne1: p -> q current 1\n") == std::nullopt);
}

TEST_CASE("index is reported for more than one face") {
  // Two degree-1 endpoints on one edge: a single face, index 1. Adding a
  // second parallel edge with matching rotations gives two faces.
  auto cg = read_current_graph("group 6\np B (e1+ e2+)\nq B (e2- e1-)\ne1: p -> q current 1\ne2: p -> q current 2\n");
  auto report = check_principles(cg);
  CHECK(report.index == 2);
  CHECK_FALSE(report.all_pass());
  CHECK_THROWS_AS(trace_log(cg), Error);
}
