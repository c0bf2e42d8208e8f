#pragma once

#include <string>
#include <vector>

#include "mapcolor/current_graph.hpp"
#include "mapcolor/current_graph_io.hpp"

namespace mapcolor {

struct FamilyParameters {
  int case_id = 0;
  long long s = 0;
  int modulus = 0;
  GroupElement gamma;
  GroupElement delta;
  GroupElement epsilon;

  /// Case 11: gamma = 6s-2, delta = 1, eps = 6s+5.
  /// Case 2:  gamma = 3s+5, delta = 2, eps = 1.
  static FamilyParameters of(int case_id, long long s);
};

/// Rungs are consecutive multiples of 3 with alternating directions; every
/// ladder vertex satisfies Kirchhoff's law over the integers.
struct LadderFragment {
  long long s = 0;
  std::vector<long long> rungs;         // signed current on the rung, top -> bottom
  std::vector<long long> top_rails;     // h_0 .. h_k, integers
  std::vector<long long> bottom_rails;  // g_0 .. g_k
  int pattern = 0;                      // reversed rotations: bit (i%2) top, 2+(i%2) bottom

  std::size_t length() const { return rungs.size(); }
  /// Outgoing currents (previous rail, next rail, rung) of top vertex i.
  std::vector<long long> top_vertex(std::size_t i) const;
  std::vector<long long> bottom_vertex(std::size_t i) const;
};

/// Ladder of the family fixture for the case at s.
LadderFragment generate_ladder(int case_id, long long s);

/// Replaces the ladder line of a fragment and the edges attached to its ends
/// by explicit ladder vertices and edges for the given s.
CurrentGraphSource expand_ladder(const CurrentGraphSource& fragment, long long s, LadderFragment* ladder = nullptr);

/// Builds a current graph from a fragment file text (with or without ladder).
CurrentGraph build_from_fragment(std::string_view text, long long s);

CurrentGraph build_case11(long long s);
CurrentGraph build_case2(long long s);

/// Smallest s each builder accepts.
long long family_minimum(int case_id);

}  // namespace mapcolor
