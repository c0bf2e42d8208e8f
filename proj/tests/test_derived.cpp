#include "doctest.h"
#include "cg_support.hpp"
#include "support.hpp"

#include "mapcolor/rotation_io.hpp"

using namespace mapcolor;

namespace {

std::set<VertexId> lettered(const EmbeddedGraph& g) {
  std::set<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (v.is_lettered()) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("derived rotation at 0 is the log") {
  auto cg = testing::case2_s1();
  auto d = derive(cg);
  std::vector<std::string> log, row;
  for (const auto& e : trace_log(cg).entries) {
    if (std::holds_alternative<int>(e)) log.push_back(std::to_string(std::get<int>(e)));
    else log.push_back(std::string(to_string(std::get<Letter>(e))));
  }
  for (VertexId w : d.emb.neighbors(testing::N(0))) {
    std::string name = w.to_string();
    row.push_back(name == "y0" ? "y" : name);
  }
  CHECK(testing::cyclic_equal(log, row));
}

TEST_CASE("numbered rotations are translates") {
  auto d = derive(build_case11(3));
  int m = d.modulus;
  auto numbers_of = [&](int i) {
    std::vector<int> out;
    for (VertexId w : d.emb.neighbors(testing::N(i))) {
      if (w.is_numbered()) out.push_back(testing::mod(w.residue() - i, m));
    }
    return out;
  };
  auto base = numbers_of(0);
  CHECK(base.size() == static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) CHECK(testing::cyclic_equal(numbers_of(i), base));
}

TEST_CASE("y0 and y1 split the residues by parity") {
  for (long long s : {1, 2, 5}) {
    auto d = derive(build_case2(s));
    auto y0 = *VertexId::parse("y0");
    auto y1 = *VertexId::parse("y1");
    for (VertexId w : d.emb.neighbors(y0)) CHECK(w.residue() % 2 == 0);
    for (VertexId w : d.emb.neighbors(y1)) CHECK(w.residue() % 2 == 1);
    CHECK(d.emb.degree(y0) == 6 * s + 3);
    CHECK(d.emb.degree(y1) == 6 * s + 3);
  }
}

TEST_CASE("derived embeddings are triangular and miss only lettered pairs") {
  for (int case_id : {2, 11}) {
    for (long long s : {2, 3, 4}) {
      CAPTURE(case_id);
      CAPTURE(s);
      auto d = derive(case_id == 11 ? build_case11(s) : build_case2(s));
      auto r = euler_genus(d.emb);
      CHECK(r.triangular);
      CHECK(r.simple);
      auto letters = lettered(d.emb);
      CHECK(letters.size() == (case_id == 11 ? 5u : 9u));
      std::vector<std::pair<VertexId, VertexId>> want;
      for (auto i = letters.begin(); i != letters.end(); ++i) {
        for (auto j = std::next(i); j != letters.end(); ++j) want.emplace_back(*i, *j);
      }
      if (case_id == 2) {
        // y0 sees the even residues, y1 the odd ones.
        for (int k = 0; k < d.modulus; ++k) {
          want.emplace_back(testing::N(k), *VertexId::parse(k % 2 ? "y0" : "y1"));
        }
      }
      std::sort(want.begin(), want.end());
      CHECK(missing_edge_inventory(d) == want);
    }
  }
}

TEST_CASE("Case 11 at s=2 misses ten edges") {
  auto d = derive(build_case11(2));
  CHECK(missing_edge_inventory(d).size() == 10);
  auto r = euler_genus(d.emb);
  CHECK(r.V == 35);
  CHECK(r.E == 35 * 34 / 2 - 10);
  CHECK(r.genus == 81);
}

TEST_CASE("lettered vertices remember their vortex") {
  auto cg = build_case11(3);
  auto d = derive(cg);
  for (const auto& [letter, vortex] : d.provenance) {
    CHECK(letter.is_lettered());
    CHECK(cg.vortices.count(vortex) == 1);
  }
  CHECK(d.provenance.size() == 5);
}
