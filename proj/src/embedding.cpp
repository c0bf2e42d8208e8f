#include "mapcolor/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mapcolor/error.hpp"

namespace mapcolor {

bool Face::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::string Face::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += ' ';
    out += vertices[k].to_string();
  }
  return out + "]";
}

EmbeddedGraph EmbeddedGraph::from_rotations(const RotationRows& rows) {
  EmbeddedGraph g;
  for (const auto& [v, nbrs] : rows) {
    if (g.contains(v)) fail(ErrorKind::structural, "vertex " + v.to_string() + " listed twice");
    g.add_vertex(v);
  }
  // (u, w) -> darts u->w created so far, waiting for partners from w's row.
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> pending;
  std::map<std::pair<VertexId, VertexId>, std::size_t> used;
  std::vector<std::vector<int>> order(rows.size());

  auto new_dart_pair = [&g](int tail, int head) {
    int d = static_cast<int>(g.tail_.size());
    g.tail_.push_back(tail);
    g.tail_.push_back(head);
    g.next_.resize(g.tail_.size(), -1);
    g.prev_.resize(g.tail_.size(), -1);
    return d;
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [u, nbrs] = rows[r];
    int ui = g.vertex_index(u);
    bool loop_open = false;
    int loop_dart = -1;
    for (const auto& w : nbrs) {
      if (!g.contains(w)) {
        fail(ErrorKind::structural,
             "vertex " + u.to_string() + " lists unknown neighbor " + w.to_string());
      }
      if (w == u) {
        if (!loop_open) {
          loop_dart = new_dart_pair(ui, ui);
          order[r].push_back(loop_dart);
        } else {
          order[r].push_back(loop_dart ^ 1);
        }
        loop_open = !loop_open;
        continue;
      }
      auto& waiting = pending[{w, u}];
      auto& k = used[{w, u}];
      if (k < waiting.size()) {
        order[r].push_back(waiting[k] ^ 1);
        ++k;
      } else {
        int d = new_dart_pair(ui, g.vertex_index(w));
        pending[{u, w}].push_back(d);
        order[r].push_back(d);
      }
    }
    if (loop_open) fail(ErrorKind::structural, "odd number of loop occurrences at " + u.to_string());
  }
  for (const auto& [key, darts] : pending) {
    if (used[key] != darts.size()) {
      fail(ErrorKind::structural, "dart " + key.first.to_string() + "->" +
                                      key.second.to_string() + " has no partner in the rotation of " +
                                      key.second.to_string());
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int ui = g.vertex_index(rows[r].first);
    const auto& ds = order[r];
    for (std::size_t k = 0; k < ds.size(); ++k) {
      g.next_[ds[k]] = ds[(k + 1) % ds.size()];
      g.prev_[ds[(k + 1) % ds.size()]] = ds[k];
    }
    g.anchor_[ui] = ds.empty() ? -1 : ds.front();
    g.degree_[ui] = static_cast<int>(ds.size());
  }
  return g;
}

std::vector<VertexId> EmbeddedGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(index_.size());
  for (const auto& [v, i] : index_) out.push_back(v);
  return out;
}

int EmbeddedGraph::check(Dart d) const {
  if (d.index() < 0 || d.index() >= static_cast<int>(tail_.size())) {
    fail(ErrorKind::structural, "dart " + std::to_string(d.index()) + " does not exist");
  }
  return d.index();
}

int EmbeddedGraph::vertex_index(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(ErrorKind::domain, "vertex " + v.to_string() + " not in embedding");
  return it->second;
}

std::vector<Dart> EmbeddedGraph::rotation(VertexId v) const {
  int vi = vertex_index(v);
  std::vector<Dart> out;
  out.reserve(degree_[vi]);
  int start = anchor_[vi];
  if (start < 0) return out;
  int d = start;
  do {
    out.push_back(Dart::from_index(d));
    d = next_[d];
  } while (d != start && out.size() <= tail_.size());
  return out;
}

std::vector<VertexId> EmbeddedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (Dart d : rotation(v)) out.push_back(head(d));
  return out;
}

std::vector<Dart> EmbeddedGraph::darts_between(VertexId u, VertexId v) const {
  std::vector<Dart> out;
  int vi = vertex_index(v);
  for (Dart d : rotation(u)) {
    if (tail_[d.index() ^ 1] == vi) out.push_back(d);
  }
  return out;
}

std::optional<Dart> EmbeddedGraph::find_dart(VertexId u, VertexId v) const {
  int ui = vertex_index(u);
  int vi = vertex_index(v);
  int start = anchor_[ui];
  if (start < 0) return std::nullopt;
  int d = start;
  do {
    if (tail_[d ^ 1] == vi) return Dart::from_index(d);
    d = next_[d];
  } while (d != start);
  return std::nullopt;
}

void EmbeddedGraph::validate() const {
  std::vector<int> seen(tail_.size(), 0);
  for (const auto& [v, vi] : index_) {
    int start = anchor_[vi];
    int count = 0;
    if (start >= 0) {
      int d = start;
      do {
        if (d < 0 || d >= static_cast<int>(tail_.size())) {
          fail(ErrorKind::structural, "rotation at " + v.to_string() + " references a missing dart");
        }
        if (tail_[d] != vi) {
          fail(ErrorKind::structural, "dart " + std::to_string(d) + " in rotation at " +
                                          v.to_string() + " has another tail");
        }
        if (seen[d]++) {
          fail(ErrorKind::structural, "dart " + std::to_string(d) + " duplicated in rotation at " +
                                          v.to_string());
        }
        if (prev_[next_[d]] != d) {
          fail(ErrorKind::structural, "rotation links broken at dart " + std::to_string(d));
        }
        ++count;
        d = next_[d];
      } while (d != start);
    }
    if (count != degree_[vi]) {
      fail(ErrorKind::structural, "degree bookkeeping broken at " + v.to_string());
    }
  }
  for (std::size_t d = 0; d < seen.size(); ++d) {
    if (!seen[d]) fail(ErrorKind::structural, "dart " + std::to_string(d) + " missing from rotations");
  }
}

bool EmbeddedGraph::operator==(const EmbeddedGraph& other) const {
  if (index_.size() != other.index_.size() || tail_.size() != other.tail_.size()) return false;
  for (const auto& [v, vi] : index_) {
    if (!other.contains(v)) return false;
    auto a = neighbors(v);
    auto b = other.neighbors(v);
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    // Cyclic comparison of neighbor sequences, so edge renumbering is ignored.
    bool found = false;
    for (std::size_t shift = 0; shift < b.size() && !found; ++shift) {
      bool same = true;
      for (std::size_t k = 0; k < a.size() && same; ++k) same = a[k] == b[(k + shift) % b.size()];
      found = same;
    }
    if (!found) return false;
  }
  return true;
}

VertexId EmbeddedGraph::add_vertex(VertexId v) {
  if (contains(v)) fail(ErrorKind::structural, "vertex " + v.to_string() + " already present");
  int vi = static_cast<int>(ids_.size());
  index_.emplace(v, vi);
  ids_.push_back(v);
  anchor_.push_back(-1);
  degree_.push_back(0);
  return v;
}

void EmbeddedGraph::unlink(int d) {
  int vi = tail_[d];
  if (degree_[vi] == 1) {
    anchor_[vi] = -1;
  } else {
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (anchor_[vi] == d) anchor_[vi] = next_[d];
  }
  --degree_[vi];
  next_[d] = prev_[d] = d;
}

void EmbeddedGraph::link_after(int d, int vi, std::optional<Dart> after) {
  tail_[d] = vi;
  if (degree_[vi] == 0) {
    next_[d] = prev_[d] = d;
    anchor_[vi] = d;
  } else {
    if (!after) fail(ErrorKind::structural, "insertion at " + ids_[vi].to_string() + " needs an anchor dart");
    int a = check(*after);
    if (tail_[a] != vi) {
      fail(ErrorKind::structural, "anchor dart " + std::to_string(a) + " is not at " + ids_[vi].to_string());
    }
    next_[d] = next_[a];
    prev_[d] = a;
    prev_[next_[a]] = d;
    next_[a] = d;
  }
  ++degree_[vi];
}

EdgeId EmbeddedGraph::add_edge(VertexId u, std::optional<Dart> after_u, VertexId v,
                               std::optional<Dart> after_v) {
  EdgeId e = static_cast<EdgeId>(edge_count());
  tail_.resize(tail_.size() + 2, -1);
  next_.resize(tail_.size(), -1);
  prev_.resize(tail_.size(), -1);
  next_[2 * e] = prev_[2 * e] = 2 * e;
  next_[2 * e + 1] = prev_[2 * e + 1] = 2 * e + 1;
  attach_edge(e, u, after_u, v, after_v);
  return e;
}

void EmbeddedGraph::detach_edge(EdgeId e) {
  for (int d : {2 * e, 2 * e + 1}) {
    check(Dart::from_index(d));
    if (tail_[d] < 0) fail(ErrorKind::structural, "edge " + std::to_string(e) + " already detached");
    unlink(d);
    tail_[d] = -1;
  }
}

void EmbeddedGraph::attach_edge(EdgeId e, VertexId u, std::optional<Dart> after_u, VertexId v,
                                std::optional<Dart> after_v) {
  int ui = vertex_index(u);
  int vi = vertex_index(v);
  if (after_u && after_v && *after_u == *after_v) {
    fail(ErrorKind::structural, "both ends of a new edge anchored at one dart");
  }
  link_after(2 * e, ui, after_u);
  link_after(2 * e + 1, vi, after_v);
}

void EmbeddedGraph::erase_detached_edge(EdgeId e) {
  if (tail_[2 * e] >= 0 || tail_[2 * e + 1] >= 0) {
    fail(ErrorKind::structural, "edge " + std::to_string(e) + " is still attached");
  }
  EdgeId last = static_cast<EdgeId>(edge_count()) - 1;
  if (e != last) {
    for (int side = 0; side < 2; ++side) {
      int from = 2 * last + side;
      int to = 2 * e + side;
      tail_[to] = tail_[from];
      if (tail_[from] >= 0) {
        int n = next_[from];
        int p = prev_[from];
        if (n == from) {
          next_[to] = prev_[to] = to;
        } else {
          // The partner dart of the same edge may itself be n or p.
          next_[to] = n;
          prev_[to] = p;
          next_[p] = to;
          prev_[n] = to;
        }
        if (anchor_[tail_[from]] == from) anchor_[tail_[from]] = to;
      }
    }
  }
  tail_.resize(2 * last);
  next_.resize(2 * last);
  prev_.resize(2 * last);
}

void EmbeddedGraph::erase_vertex(VertexId v) {
  int vi = vertex_index(v);
  if (degree_[vi] != 0) fail(ErrorKind::structural, "vertex " + v.to_string() + " is not isolated");
  int last = static_cast<int>(ids_.size()) - 1;
  if (vi != last) {
    VertexId moved = ids_[last];
    ids_[vi] = moved;
    anchor_[vi] = anchor_[last];
    degree_[vi] = degree_[last];
    index_[moved] = vi;
    for (int& t : tail_) {
      if (t == last) t = vi;
    }
  }
  index_.erase(v);
  ids_.pop_back();
  anchor_.pop_back();
  degree_.pop_back();
}

void EmbeddedGraph::move_dart(Dart d, VertexId v, std::optional<Dart> after) {
  int di = check(d);
  int vi = vertex_index(v);
  if (after && *after == d) fail(ErrorKind::structural, "dart anchored at itself");
  unlink(di);
  link_after(di, vi, after);
}

void EmbeddedGraph::set_rotation(VertexId v, const std::vector<Dart>& order) {
  int vi = vertex_index(v);
  if (static_cast<int>(order.size()) != degree_[vi]) {
    fail(ErrorKind::structural, "new rotation at " + v.to_string() + " has " +
                                    std::to_string(order.size()) + " darts, expected " +
                                    std::to_string(degree_[vi]));
  }
  std::vector<int> sorted;
  for (Dart d : order) {
    int di = check(d);
    if (tail_[di] != vi) {
      fail(ErrorKind::structural, "dart " + std::to_string(di) + " does not leave " + v.to_string());
    }
    sorted.push_back(di);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::structural, "new rotation at " + v.to_string() + " repeats a dart");
  }
  if (order.empty()) return;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int a = order[k].index();
    int b = order[(k + 1) % order.size()].index();
    next_[a] = b;
    prev_[b] = a;
  }
  anchor_[vi] = order.front().index();
}

Face face_of(const EmbeddedGraph& emb, Dart d) {
  Face f;
  Dart cur = d;
  do {
    f.walk.push_back(cur);
    f.vertices.push_back(emb.tail(cur));
    cur = emb.face_next(cur);
    if (f.walk.size() > emb.dart_count()) {
      fail(ErrorKind::structural, "face walk from dart " + std::to_string(d.index()) + " does not close");
    }
  } while (cur != d);
  return f;
}

std::vector<Face> trace_faces(const EmbeddedGraph& emb) {
  std::vector<char> used(emb.dart_count(), 0);
  std::vector<Face> faces;
  for (const VertexId& v : emb.vertices()) {
    for (Dart d : emb.rotation(v)) {
      if (used[d.index()]) continue;
      Face f = face_of(emb, d);
      for (Dart w : f.walk) {
        if (used[w.index()]++) {
          fail(ErrorKind::structural, "dart " + std::to_string(w.index()) + " lies on two faces");
        }
      }
      faces.push_back(std::move(f));
    }
  }
  for (std::size_t d = 0; d < used.size(); ++d) {
    if (!used[d]) fail(ErrorKind::structural, "dart " + std::to_string(d) + " lies on no face");
  }
  return faces;
}

bool is_connected(const EmbeddedGraph& emb) {
  auto vs = emb.vertices();
  if (vs.empty()) return true;
  std::map<VertexId, bool> seen;
  std::vector<VertexId> stack{vs.front()};
  seen[vs.front()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const VertexId& w : emb.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen.size() == vs.size();
}

bool is_simple(const EmbeddedGraph& emb) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(emb.edge_count());
  for (std::size_t e = 0; e < emb.edge_count(); ++e) {
    Dart d(static_cast<EdgeId>(e), Side::forward);
    VertexId a = emb.tail(d);
    VertexId b = emb.head(d);
    if (a == b) return false;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

GenusReport euler_genus(const EmbeddedGraph& emb) {
  if (!is_connected(emb)) fail(ErrorKind::disconnected, "embedding is not connected");
  auto faces = trace_faces(emb);
  GenusReport r;
  r.V = static_cast<long long>(emb.vertex_count());
  r.E = static_cast<long long>(emb.edge_count());
  r.F = static_cast<long long>(faces.size());
  long long chi = r.V - r.E + r.F;
  if (chi % 2 != 0 || chi > 2) {
    fail(ErrorKind::inconsistency, "Euler characteristic " + std::to_string(chi) +
                                       " is not that of an orientable closed surface");
  }
  r.genus = (2 - chi) / 2;
  r.triangular = std::all_of(faces.begin(), faces.end(), [](const Face& f) { return f.size() == 3; });
  r.simple = is_simple(emb);
  return r;
}

long long complete_graph_genus(long long n) {
  if (n < 3) fail(ErrorKind::domain, "complete_graph_genus needs n >= 3, got " + std::to_string(n));
  long long p = (n - 3) * (n - 4);
  return (p + 11) / 12;
}

std::string GenusReport::to_string() const {
  std::ostringstream out;
  out << "V=" << V << " E=" << E << " F=" << F << " genus=" << genus
      << " triangular=" << (triangular ? "yes" : "no") << " simple=" << (simple ? "yes" : "no");
  if (target_genus) out << " target=" << *target_genus;
  return out.str();
}

}  // namespace mapcolor
