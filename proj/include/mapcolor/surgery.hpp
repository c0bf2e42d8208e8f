#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mapcolor/embedding.hpp"

namespace mapcolor {

struct FlipRecord {
  EdgeId edge = -1;
  std::pair<VertexId, VertexId> removed;
  std::pair<VertexId, VertexId> added;
};

struct FlipResult {
  EmbeddedGraph emb;
  FlipRecord flip;
};

/// Replaces e, shared by triangles [u,v,x] and [v,u,y], with the diagonal
/// (x,y). The new edge keeps id e with its forward dart leaving x.
FlipResult edge_flip(EmbeddedGraph emb, EdgeId e);

struct CascadeResult {
  EmbeddedGraph emb;
  std::vector<FlipRecord> flips;
};

/// Flips `start`; while the new diagonal duplicates an older edge, flips that
/// older edge next. Stops once a diagonal joins a nonadjacent pair.
CascadeResult cascade_flip(EmbeddedGraph emb, EdgeId start);

EmbeddedGraph replace_rotation(EmbeddedGraph emb, VertexId v, const std::vector<Dart>& order);

enum class ChordPolicy { reject_duplicates, allow_duplicates };

/// Splits face f by an edge from corner i to corner j. The new edge is the
/// highest edge id, forward dart leaving corner i.
EmbeddedGraph insert_chord(EmbeddedGraph emb, const Face& f, std::size_t i, std::size_t j,
                           ChordPolicy policy = ChordPolicy::reject_duplicates);

/// Joins corner c1 of f1 to corner c2 of a different face f2, merging them.
EmbeddedGraph bridge(EmbeddedGraph emb, const Face& f1, std::size_t c1, const Face& f2,
                     std::size_t c2);

enum class ParallelPolicy { reject, keep };

/// Contracts the edge (u,v) into u, splicing v's rotation into u's at the
/// position of the contracted dart.
EmbeddedGraph identify_and_contract(EmbeddedGraph emb, VertexId u, VertexId v,
                                    ParallelPolicy policy = ParallelPolicy::reject);

}  // namespace mapcolor
