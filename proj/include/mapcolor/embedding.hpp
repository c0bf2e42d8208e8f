#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapcolor/vertex.hpp"

namespace mapcolor {

using EdgeId = int;

enum class Side : std::uint8_t { forward, reverse };

/// One directed side of an edge. Edge e owns darts 2e (forward) and 2e+1.
class Dart {
 public:
  constexpr Dart() = default;
  constexpr Dart(EdgeId edge, Side side) : index_(2 * edge + (side == Side::reverse ? 1 : 0)) {}

  static constexpr Dart from_index(int index) {
    Dart d;
    d.index_ = index;
    return d;
  }

  constexpr int index() const { return index_; }
  constexpr EdgeId edge() const { return index_ >> 1; }
  constexpr Side side() const { return (index_ & 1) ? Side::reverse : Side::forward; }
  constexpr Dart reverse() const { return from_index(index_ ^ 1); }

  constexpr auto operator<=>(const Dart&) const = default;

 private:
  int index_ = -1;
};

class EmbeddedGraph;

/// A face boundary: `walk[k+1]` is the face successor of `walk[k]`, and
/// `vertices[k]` is the tail of `walk[k]`, i.e. the corner at position k.
struct Face {
  std::vector<Dart> walk;
  std::vector<VertexId> vertices;

  std::size_t size() const { return walk.size(); }
  bool contains(VertexId v) const;
  std::string to_string() const;
};

/// Rotation system of a (multi)graph. Each vertex carries a cyclic order of
/// its outgoing darts. Faces are traced with the rule
///   face_next(d) = rotation successor of reverse(d) at head(d).
///
/// Values are never shared mutable state: surgery functions take a graph by
/// value and return the modified copy.
class EmbeddedGraph {
 public:
  using RotationRows = std::vector<std::pair<VertexId, std::vector<VertexId>>>;

  EmbeddedGraph() = default;

  /// Builds from neighbor lists, one row per vertex. The k-th occurrence of w
  /// around u is paired with the k-th occurrence of u around w; a loop pairs
  /// consecutive occurrences. Edge ids follow first appearance.
  static EmbeddedGraph from_rotations(const RotationRows& rows);

  std::size_t vertex_count() const { return index_.size(); }
  std::size_t edge_count() const { return tail_.size() / 2; }
  std::size_t dart_count() const { return tail_.size(); }

  /// Vertex ids in ascending order.
  std::vector<VertexId> vertices() const;
  bool contains(VertexId v) const { return index_.count(v) != 0; }

  VertexId tail(Dart d) const { return ids_[tail_[check(d)]]; }
  VertexId head(Dart d) const { return tail(d.reverse()); }
  Dart next(Dart d) const { return Dart::from_index(next_[check(d)]); }
  Dart prev(Dart d) const { return Dart::from_index(prev_[check(d)]); }
  Dart face_next(Dart d) const { return next(d.reverse()); }

  int degree(VertexId v) const { return degree_[vertex_index(v)]; }
  /// Darts leaving v in rotation order, starting from v's anchor dart.
  std::vector<Dart> rotation(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  std::vector<Dart> darts_between(VertexId u, VertexId v) const;
  std::optional<Dart> find_dart(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return find_dart(u, v).has_value(); }

  /// Throws a structural error naming the first broken dart.
  void validate() const;

  bool operator==(const EmbeddedGraph& other) const;

  // Low-level editing used by the surgery operations. Each keeps the dart
  // bookkeeping consistent but not necessarily the caller's invariants.
  VertexId add_vertex(VertexId v);
  /// Adds an edge u->v whose forward dart goes after `after_u` at u and whose
  /// reverse goes after `after_v` at v. A missing anchor means the endpoint
  /// was isolated.
  EdgeId add_edge(VertexId u, std::optional<Dart> after_u, VertexId v,
                  std::optional<Dart> after_v);
  /// Detaches both darts of e from their rotations without freeing the id.
  void detach_edge(EdgeId e);
  /// Reattaches a detached edge with new endpoints.
  void attach_edge(EdgeId e, VertexId u, std::optional<Dart> after_u, VertexId v,
                   std::optional<Dart> after_v);
  /// Removes a detached edge, renumbering the last edge into its slot.
  void erase_detached_edge(EdgeId e);
  /// Removes an isolated vertex.
  void erase_vertex(VertexId v);
  /// Unlinks d from its rotation and links it at v after `after`.
  void move_dart(Dart d, VertexId v, std::optional<Dart> after);
  /// Replaces the rotation at v; `order` must be a permutation of v's darts.
  void set_rotation(VertexId v, const std::vector<Dart>& order);

 private:
  int check(Dart d) const;
  int vertex_index(VertexId v) const;
  void unlink(int d);
  void link_after(int d, int vertex, std::optional<Dart> after);

  std::map<VertexId, int> index_;
  std::vector<VertexId> ids_;
  std::vector<int> tail_;    // per dart, -1 while detached
  std::vector<int> next_;
  std::vector<int> prev_;
  std::vector<int> anchor_;  // per vertex, -1 when isolated
  std::vector<int> degree_;
};

/// All faces, each starting at the lowest unused dart when vertices are
/// visited in ascending order and each rotation from its anchor.
std::vector<Face> trace_faces(const EmbeddedGraph& emb);
/// The face containing dart d, starting at d.
Face face_of(const EmbeddedGraph& emb, Dart d);

struct GenusReport {
  long long V = 0;
  long long E = 0;
  long long F = 0;
  long long genus = 0;
  bool triangular = false;
  bool simple = false;
  std::optional<long long> target_genus;

  std::string to_string() const;
};

bool is_connected(const EmbeddedGraph& emb);
bool is_simple(const EmbeddedGraph& emb);
GenusReport euler_genus(const EmbeddedGraph& emb);
/// ceil((n-3)(n-4)/12).
long long complete_graph_genus(long long n);

}  // namespace mapcolor
