#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapcolor/affine.hpp"
#include "mapcolor/current_graph.hpp"

namespace mapcolor {

// Current-graph text format:
//
//   group 18                      # or an affine modulus such as 12s+6
//   case 2
//   p1 B (e1+ e2- e3+)            # vertex, colour, darts in drawn order
//   e1: p1 -> p2 current 9        # current of the forward dart
//   vortex p4 label a b c type V3
//
// W vertices are drawn counterclockwise and are reversed when loaded. For a
// V3 vortex, label k names the corner between listed darts k-1 and k.
//
// Fragment files may also use affine currents and one `ladder` line; edges
// then attach to the ladder ends `ladder:top0`, `ladder:bottom0` (first rung
// side) and `ladder:top1`, `ladder:bottom1` (last rung side).

struct SourceDart {
  std::string edge;
  bool forward = true;
};

struct SourceVertex {
  std::string name;
  bool white = false;
  std::vector<SourceDart> darts;
  std::size_t line = 0;
};

struct SourceEdge {
  std::string name;
  std::string tail;
  std::string head;
  Affine current;
  std::size_t line = 0;
};

struct SourceVortex {
  std::string vertex;
  std::vector<Letter> letters;
  VortexType type = VortexType::V1;
  std::size_t line = 0;
};

struct SourceLadder {
  Affine low;
  Affine high;
  bool ascending = true;
  int first_direction = 1;
  int pattern = 0;
  std::size_t line = 0;
};

struct CurrentGraphSource {
  Affine group;
  std::optional<int> case_id;
  std::vector<SourceVertex> vertices;
  std::vector<SourceEdge> edges;
  std::vector<SourceVortex> vortices;
  std::optional<SourceLadder> ladder;
};

CurrentGraphSource parse_current_graph_source(std::string_view text);

/// Evaluates affine currents at s and builds the graph. The source must not
/// contain a ladder.
CurrentGraph assemble_current_graph(const CurrentGraphSource& source, long long s = 0);

CurrentGraph read_current_graph(std::string_view text, std::optional<long long> s = std::nullopt);

/// Writes every vertex as B with its rotation in the global convention.
std::string write_current_graph(const CurrentGraph& cg);

}  // namespace mapcolor
