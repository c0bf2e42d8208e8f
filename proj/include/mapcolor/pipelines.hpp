#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapcolor/current_graph.hpp"
#include "mapcolor/embedding.hpp"
#include "mapcolor/surgery.hpp"

namespace mapcolor {

// A surgery script is plain text, one step per line:
//
//   let gamma = 6s-2                  named values, affine in s
//   [s=2] ... / [s>=3] ...            optional guard on any line
//   flip U V [expect X Y]
//   cascade U V [expect X Y]          X Y is the last diagonal added
//   reorder V after N1 N2 .. order 0 2 1
//   chord X Y at I J                  face through dart X->Y, corners I and J
//   chords X Y at I-J I-J ..          several chords of one face, corners
//                                     numbered before any is added
//   seed X Y at I J                   like chord, but the endpoints are
//                                     already adjacent; then cascades from
//                                     the older edge
//   edge P Q after A B                new dart at P after P->A, at Q after
//                                     Q->B; runs as a chord or a bridge
//   bridge X Y at I Z W at J
//   handle V triangle T1 T2 join J1 J2 J3 J4
//   contract U V
//   check face X Y is [v1 v2 ...]     cyclic match of the face walk
//   check triangle A B C              a face [A B C] in this orientation
//   check missing N                   number of nonadjacent vertex pairs
//
// Vertices are letters or expressions such as `-gamma`, `2eps`, `9s+10`,
// reduced mod m.

struct ScriptLine {
  std::size_t line = 0;
  std::optional<std::pair<std::string, long long>> guard;  // op, value
  std::vector<std::string> words;
};

struct Script {
  std::string name;
  std::vector<ScriptLine> lines;
};

Script parse_script(std::string_view text, std::string name = "script");

enum class StepKind { flip, cascade, replace_rotation, chord, bridge, identify_contract, check };
std::string to_string(StepKind kind);

struct SurgeryStep {
  StepKind kind = StepKind::check;
  std::size_t line = 0;
  std::string arguments;
  std::string outcome;
};

struct PipelineResult {
  EmbeddedGraph final;
  std::vector<SurgeryStep> steps;
  GenusReport report;
  long long n = 0;
  int case_id = 0;
  long long s = 0;
  GenusReport derived;
  std::vector<std::vector<FlipRecord>> cascades;
  long long bridges = 0;
  long long rotation_face_deficit = 0;

  std::string verdict() const;
  std::string trace() const;
};

struct PipelineOptions {
  /// Called after every step with the step index and the embedding.
  std::function<void(std::size_t, const SurgeryStep&, const EmbeddedGraph&)> snapshot;
};

/// Derives the embedding of cg and runs the script on it, checking the
/// surface invariants after every step and verifying the result is the
/// complete graph on n vertices at its minimum genus.
PipelineResult run_script(const Script& script, const CurrentGraph& cg, long long s, long long n,
                          const PipelineOptions& options = {});

PipelineResult run_case11(long long s, const PipelineOptions& options = {});
PipelineResult run_case2(long long s, const PipelineOptions& options = {});

/// Asserts simplicity, completeness on n vertices, and minimum genus.
GenusReport verify_final(const EmbeddedGraph& emb, long long n);

}  // namespace mapcolor
