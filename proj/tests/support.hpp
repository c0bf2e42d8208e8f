#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mapcolor/embedding.hpp"
#include "mapcolor/error.hpp"
#include "mapcolor/surgery.hpp"

namespace testing {

using mapcolor::EmbeddedGraph;
using mapcolor::VertexId;

inline VertexId N(int k) { return VertexId::numbered(k); }

inline EmbeddedGraph rows_to_graph(const std::vector<std::vector<int>>& rows) {
  EmbeddedGraph::RotationRows rr;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    std::vector<VertexId> nb;
    for (int w : rows[v]) nb.push_back(N(w));
    rr.emplace_back(N(static_cast<int>(v)), nb);
  }
  return EmbeddedGraph::from_rotations(rr);
}

// Smallest rotation of a cyclic sequence, for order-free comparisons.
template <class T>
std::vector<T> canonical_cycle(std::vector<T> seq) {
  if (seq.empty()) return seq;
  auto best = seq;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

template <class T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && canonical_cycle(a) == canonical_cycle(b);
}

inline std::multiset<std::vector<VertexId>> face_set(const EmbeddedGraph& g) {
  std::multiset<std::vector<VertexId>> out;
  for (const auto& f : mapcolor::trace_faces(g)) out.insert(canonical_cycle(f.vertices));
  return out;
}

inline std::vector<VertexId> cyc(std::initializer_list<int> vs) {
  std::vector<VertexId> out;
  for (int v : vs) out.push_back(N(v));
  return canonical_cycle(out);
}

// Bipyramid over a k-cycle: apex 0, equator 1..k, apex k+1. Planar and
// triangular under the library's face rule (checked by hand for k = 4).
inline EmbeddedGraph bipyramid(int k) {
  std::vector<std::vector<int>> rows(k + 2);
  for (int i = 1; i <= k; ++i) rows[0].push_back(i);
  for (int i = k; i >= 1; --i) rows[k + 1].push_back(i);
  for (int i = 1; i <= k; ++i) {
    int prev = i == 1 ? k : i - 1;
    int next = i == k ? 1 : i + 1;
    rows[i] = {0, prev, k + 1, next};
  }
  return rows_to_graph(rows);
}

// K7 on the torus: the rotation at i is (1 3 2 6 4 5) shifted by i.
inline EmbeddedGraph k7_torus() {
  const int log[] = {1, 3, 2, 6, 4, 5};
  std::vector<std::vector<int>> rows(7);
  for (int i = 0; i < 7; ++i) {
    for (int g : log) rows[i].push_back((g + i) % 7);
  }
  return rows_to_graph(rows);
}

// Triangles on both sides of e, with distinct, fresh apexes.
inline bool flippable(const EmbeddedGraph& g, mapcolor::EdgeId e) {
  mapcolor::Dart d(e, mapcolor::Side::forward);
  auto left = mapcolor::face_of(g, d);
  auto right = mapcolor::face_of(g, d.reverse());
  if (left.size() != 3 || right.size() != 3) return false;
  if (std::find(left.walk.begin(), left.walk.end(), d.reverse()) != left.walk.end()) return false;
  VertexId u = g.tail(d), v = g.head(d);
  VertexId x = left.vertices[2], y = right.vertices[2];
  return x != y && x != u && x != v && y != u && y != v && u != v;
}

class RandomMaps {
 public:
  explicit RandomMaps(unsigned long long seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Connected loopless multigraph on n vertices with shuffled rotations.
  EmbeddedGraph rotation_system(int max_vertices) {
    int n = uniform(2, max_vertices);
    std::vector<std::vector<int>> rows(n);
    auto link = [&](int a, int b) {
      rows[a].push_back(b);
      rows[b].push_back(a);
    };
    for (int v = 1; v < n; ++v) link(v, uniform(0, v - 1));
    int extra = uniform(0, 2 * n);
    for (int k = 0; k < extra; ++k) {
      int a = uniform(0, n - 1), b = uniform(0, n - 1);
      if (a != b) link(a, b);
    }
    for (auto& r : rows) std::shuffle(r.begin(), r.end(), rng_);
    return rows_to_graph(rows);
  }

  // Random simple triangulation: a bipyramid or the toroidal K7, scrambled
  // by flips that keep the graph simple.
  EmbeddedGraph triangulation(int max_vertices) {
    EmbeddedGraph g = uniform(0, 3) == 0 ? k7_torus() : bipyramid(uniform(3, max_vertices - 2));
    int flips = uniform(0, 30);
    for (int t = 0; t < flips; ++t) {
      auto e = static_cast<mapcolor::EdgeId>(uniform(0, static_cast<int>(g.edge_count()) - 1));
      if (!flippable(g, e)) continue;
      mapcolor::Dart d(e, mapcolor::Side::forward);
      VertexId x = mapcolor::face_of(g, d).vertices[2];
      VertexId y = mapcolor::face_of(g, d.reverse()).vertices[2];
      if (g.adjacent(x, y)) continue;
      g = mapcolor::edge_flip(std::move(g), e).emb;
    }
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline long long euler_char(const EmbeddedGraph& g) {
  return static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count()) +
         static_cast<long long>(mapcolor::trace_faces(g).size());
}

// The six properties of the randomized suite. Each returns a violation
// description or an empty string.
struct PropertyTally {
  long long instances = 0;
  std::map<std::string, long long> checked;
  std::vector<std::string> violations;
  void fail(const std::string& what) {
    if (violations.size() < 20) violations.push_back(what);
    else violations.back() = what;
  }
};

inline void dart_partition(const EmbeddedGraph& g, PropertyTally& t) {
  std::vector<int> seen(g.dart_count(), 0);
  for (const auto& f : mapcolor::trace_faces(g)) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      ++seen[f.walk[k].index()];
      if (g.tail(f.walk[k]) != f.vertices[k]) t.fail("corner vertex mismatch");
      if (g.face_next(f.walk[k]) != f.walk[(k + 1) % f.size()]) t.fail("walk breaks the face rule");
    }
  }
  for (int c : seen) {
    if (c != 1) {
      t.fail("dart covered " + std::to_string(c) + " times");
      break;
    }
  }
  ++t.checked["dart partition"];
}

inline void even_euler(const EmbeddedGraph& g, PropertyTally& t) {
  long long chi = euler_char(g);
  if (chi % 2 != 0 || chi > 2) t.fail("euler characteristic " + std::to_string(chi));
  auto report = mapcolor::euler_genus(g);
  if (2 - 2 * report.genus != chi) t.fail("genus report disagrees with V-E+F");
  ++t.checked["even euler characteristic"];
}

inline void chord_invariance(RandomMaps& r, const EmbeddedGraph& g, PropertyTally& t) {
  auto faces = mapcolor::trace_faces(g);
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (faces[k].size() >= 2) candidates.push_back(k);
  }
  for (int attempt = 0; attempt < 6 && !candidates.empty(); ++attempt) {
    const auto& f = faces[candidates[r.uniform(0, static_cast<int>(candidates.size()) - 1)]];
    std::size_t i = r.uniform(0, static_cast<int>(f.size()) - 1);
    std::size_t j = r.uniform(0, static_cast<int>(f.size()) - 1);
    if (i == j || f.vertices[i] == f.vertices[j]) continue;
    long long chi = euler_char(g);
    auto h = mapcolor::insert_chord(g, f, i, j, mapcolor::ChordPolicy::allow_duplicates);
    if (euler_char(h) != chi) t.fail("chord changed the euler characteristic");
    if (mapcolor::trace_faces(h).size() != faces.size() + 1) t.fail("chord did not add one face");
    ++t.checked["chord genus invariance"];
    return;
  }
}

inline void bridge_plus_one(RandomMaps& r, const EmbeddedGraph& g, PropertyTally& t) {
  auto faces = mapcolor::trace_faces(g);
  if (faces.size() < 2) return;
  for (int attempt = 0; attempt < 6; ++attempt) {
    int a = r.uniform(0, static_cast<int>(faces.size()) - 1);
    int b = r.uniform(0, static_cast<int>(faces.size()) - 1);
    if (a == b) continue;
    std::size_t c1 = r.uniform(0, static_cast<int>(faces[a].size()) - 1);
    std::size_t c2 = r.uniform(0, static_cast<int>(faces[b].size()) - 1);
    if (faces[a].vertices[c1] == faces[b].vertices[c2]) continue;
    long long before = mapcolor::euler_genus(g).genus;
    auto h = mapcolor::bridge(g, faces[a], c1, faces[b], c2);
    auto report = mapcolor::euler_genus(h);
    if (report.genus != before + 1) t.fail("bridge moved genus by " + std::to_string(report.genus - before));
    if (report.F != static_cast<long long>(faces.size()) - 1) t.fail("bridge did not merge two faces");
    ++t.checked["bridge genus +1"];
    return;
  }
}

inline void flip_involution(RandomMaps& r, const EmbeddedGraph& g, PropertyTally& t) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto e = static_cast<mapcolor::EdgeId>(r.uniform(0, static_cast<int>(g.edge_count()) - 1));
    if (!flippable(g, e)) continue;
    auto once = mapcolor::edge_flip(g, e);
    if (!flippable(once.emb, once.flip.edge)) {
      t.fail("new diagonal is not flippable");
      return;
    }
    auto twice = mapcolor::edge_flip(once.emb, once.flip.edge);
    if (face_set(twice.emb) != face_set(g)) t.fail("flip twice changed the face set");
    if (!(twice.emb == g)) t.fail("flip twice changed a rotation");
    if (euler_char(once.emb) != euler_char(g)) t.fail("flip changed the euler characteristic");
    ++t.checked["flip involution"];
    return;
  }
}

inline void cascade_terminates(RandomMaps& r, const EmbeddedGraph& g, PropertyTally& t) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto e = static_cast<mapcolor::EdgeId>(r.uniform(0, static_cast<int>(g.edge_count()) - 1));
    if (!flippable(g, e)) continue;
    try {
      auto res = mapcolor::cascade_flip(g, e);
      if (res.flips.empty() || res.flips.size() > g.edge_count()) {
        t.fail("cascade length " + std::to_string(res.flips.size()));
      }
      auto [x, y] = res.flips.back().added;
      if (res.emb.darts_between(x, y).size() != 1) t.fail("cascade ended on a duplicate edge");
      if (mapcolor::is_simple(g) && !mapcolor::is_simple(res.emb)) t.fail("cascade left a parallel edge");
    } catch (const mapcolor::Error& err) {
      // An explicit report is an allowed outcome; anything else is not.
      if (err.kind() != mapcolor::ErrorKind::nontermination &&
          err.kind() != mapcolor::ErrorKind::flip_precondition) {
        t.fail(std::string("cascade threw ") + err.what());
      }
    }
    ++t.checked["cascade termination"];
    return;
  }
}

// The full randomized suite used by the unit tests and by the acceptance run.
inline PropertyTally run_property_suite(unsigned long long seed, long long instances) {
  RandomMaps r(seed);
  PropertyTally t;
  for (long long k = 0; k < instances; ++k) {
    EmbeddedGraph any = r.rotation_system(12);
    dart_partition(any, t);
    even_euler(any, t);
    chord_invariance(r, any, t);
    bridge_plus_one(r, any, t);
    EmbeddedGraph tri = r.triangulation(12);
    dart_partition(tri, t);
    flip_involution(r, tri, t);
    cascade_terminates(r, tri, t);
    ++t.instances;
  }
  return t;
}

}  // namespace testing
