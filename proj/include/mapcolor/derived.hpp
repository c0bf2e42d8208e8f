#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mapcolor/current_graph.hpp"
#include "mapcolor/embedding.hpp"

namespace mapcolor {

struct DerivedEmbedding {
  EmbeddedGraph emb;
  int modulus = 0;
  Log log;
  /// Lettered vertex -> the current-graph vortex it came from.
  std::map<VertexId, VertexId> provenance;
};

/// Rotation at i is the log's numbers shifted by i; each long face is then
/// subdivided by the letter found at its corner at vertex 0 (or 1).
DerivedEmbedding derive(const CurrentGraph& cg);

/// Nonadjacent vertex pairs, each ordered (smaller, larger), ascending.
std::vector<std::pair<VertexId, VertexId>> missing_edge_inventory(const DerivedEmbedding& d);

}  // namespace mapcolor
