#include "mapcolor/surgery.hpp"

#include <algorithm>
#include <set>

#include "mapcolor/error.hpp"

namespace mapcolor {

namespace {

std::string pair_string(VertexId a, VertexId b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

void check_face_current(const EmbeddedGraph& emb, const Face& f) {
  if (f.walk.empty() || f.walk.size() != f.vertices.size()) {
    fail(ErrorKind::structural, "face record is malformed");
  }
  for (std::size_t k = 0; k < f.walk.size(); ++k) {
    Dart d = f.walk[k];
    if (d.index() < 0 || d.index() >= static_cast<int>(emb.dart_count()) ||
        emb.tail(d) != f.vertices[k] ||
        emb.face_next(d) != f.walk[(k + 1) % f.walk.size()]) {
      fail(ErrorKind::structural, "face " + f.to_string() + " is not a face of this embedding");
    }
  }
}

Dart corner_anchor(const Face& f, std::size_t k) {
  return f.walk[(k + f.walk.size() - 1) % f.walk.size()].reverse();
}

}  // namespace

FlipResult edge_flip(EmbeddedGraph emb, EdgeId e) {
  if (e < 0 || e >= static_cast<EdgeId>(emb.edge_count())) {
    fail(ErrorKind::flip_precondition, "edge " + std::to_string(e) + " does not exist");
  }
  Dart d(e, Side::forward);
  Face left = face_of(emb, d);
  Face right = face_of(emb, d.reverse());
  VertexId u = emb.tail(d);
  VertexId v = emb.head(d);
  if (left.size() != 3 || right.size() != 3) {
    fail(ErrorKind::flip_precondition, "edge " + pair_string(u, v) + " is not between two triangles: " +
                                           left.to_string() + " " + right.to_string());
  }
  if (std::find(left.walk.begin(), left.walk.end(), d.reverse()) != left.walk.end()) {
    fail(ErrorKind::flip_precondition, "edge " + pair_string(u, v) + " has the same face on both sides");
  }
  Dart d1 = left.walk[1];   // v -> x
  Dart d3 = right.walk[1];  // u -> y
  VertexId x = left.vertices[2];
  VertexId y = right.vertices[2];
  if (x == y || x == u || x == v || y == u || y == v) {
    fail(ErrorKind::flip_precondition,
         "flip of " + pair_string(u, v) + " has degenerate quadrangle " + left.to_string() + " " +
             right.to_string());
  }
  emb.detach_edge(e);
  emb.attach_edge(e, x, d1.reverse(), y, d3.reverse());
  return {std::move(emb), FlipRecord{e, {u, v}, {x, y}}};
}

CascadeResult cascade_flip(EmbeddedGraph emb, EdgeId start) {
  CascadeResult out;
  std::size_t limit = emb.edge_count();
  EdgeId current = start;
  while (true) {
    if (out.flips.size() >= limit) {
      fail(ErrorKind::nontermination,
           "cascade from edge " + std::to_string(start) + " exceeded " + std::to_string(limit) + " flips");
    }
    FlipResult r;
    try {
      r = edge_flip(std::move(emb), current);
    } catch (const Error& err) {
      fail(err.kind(), "cascade step " + std::to_string(out.flips.size()) + ": " + err.what());
    }
    emb = std::move(r.emb);
    out.flips.push_back(r.flip);
    auto [x, y] = r.flip.added;
    std::optional<EdgeId> older;
    for (Dart dd : emb.darts_between(x, y)) {
      if (dd.edge() != current) {
        older = dd.edge();
        break;
      }
    }
    if (!older) break;
    current = *older;
  }
  out.emb = std::move(emb);
  return out;
}

EmbeddedGraph replace_rotation(EmbeddedGraph emb, VertexId v, const std::vector<Dart>& order) {
  emb.set_rotation(v, order);
  return emb;
}

EmbeddedGraph insert_chord(EmbeddedGraph emb, const Face& f, std::size_t i, std::size_t j,
                           ChordPolicy policy) {
  check_face_current(emb, f);
  if (i >= f.size() || j >= f.size()) fail(ErrorKind::domain, "corner index outside face " + f.to_string());
  if (i == j) fail(ErrorKind::loop, "chord from a corner to itself");
  VertexId a = f.vertices[i];
  VertexId b = f.vertices[j];
  if (a == b) fail(ErrorKind::loop, "chord corners both at vertex " + a.to_string());
  if (policy == ChordPolicy::reject_duplicates && emb.adjacent(a, b)) {
    fail(ErrorKind::duplicate_edge, "vertices " + pair_string(a, b) + " are already adjacent");
  }
  emb.add_edge(a, corner_anchor(f, i), b, corner_anchor(f, j));
  return emb;
}

EmbeddedGraph bridge(EmbeddedGraph emb, const Face& f1, std::size_t c1, const Face& f2,
                     std::size_t c2) {
  check_face_current(emb, f1);
  check_face_current(emb, f2);
  if (c1 >= f1.size() || c2 >= f2.size()) fail(ErrorKind::domain, "corner index outside face");
  if (std::find(f1.walk.begin(), f1.walk.end(), f2.walk.front()) != f1.walk.end()) {
    fail(ErrorKind::same_face, "bridge endpoints lie on one face; use insert_chord");
  }
  VertexId a = f1.vertices[c1];
  VertexId b = f2.vertices[c2];
  if (a == b) fail(ErrorKind::loop, "bridge corners both at vertex " + a.to_string());
  emb.add_edge(a, corner_anchor(f1, c1), b, corner_anchor(f2, c2));
  return emb;
}

EmbeddedGraph identify_and_contract(EmbeddedGraph emb, VertexId u, VertexId v, ParallelPolicy policy) {
  if (u == v) fail(ErrorKind::loop, "cannot contract a vertex with itself");
  auto between = emb.darts_between(u, v);
  if (between.empty()) fail(ErrorKind::domain, "no edge " + pair_string(u, v) + " to contract");
  if (between.size() > 1 && policy == ParallelPolicy::reject) {
    fail(ErrorKind::simplicity, "contracting " + pair_string(u, v) + " would leave a loop");
  }
  Dart d = between.front();
  Dart rd = d.reverse();
  std::vector<Dart> moved;
  for (Dart x = emb.next(rd); x != rd; x = emb.next(x)) moved.push_back(x);
  Dart prev = d;
  for (Dart x : moved) {
    emb.move_dart(x, u, prev);
    prev = x;
  }
  emb.detach_edge(d.edge());
  emb.erase_detached_edge(d.edge());
  emb.erase_vertex(v);
  if (policy == ParallelPolicy::reject) {
    std::set<VertexId> seen;
    for (const VertexId& w : emb.neighbors(u)) {
      if (w == u || !seen.insert(w).second) {
        fail(ErrorKind::simplicity, "contracting " + pair_string(u, v) + " creates a parallel edge to " +
                                        w.to_string());
      }
    }
  }
  return emb;
}

}  // namespace mapcolor
