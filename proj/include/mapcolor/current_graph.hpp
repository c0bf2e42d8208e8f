#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mapcolor/embedding.hpp"

namespace mapcolor {

/// Residue modulo m, kept in [0, m).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(long long value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }
  GroupElement operator-() const { return {-static_cast<long long>(value_), modulus_}; }
  GroupElement operator+(GroupElement other) const;
  bool is_order_two() const { return modulus_ % 2 == 0 && value_ == modulus_ / 2; }
  /// Index of the subgroup this element generates: gcd(value, m).
  int subgroup_index() const;

  bool operator==(const GroupElement&) const = default;

 private:
  int value_ = 0;
  int modulus_ = 1;
};

enum class VortexType { V1, V2, V3 };
std::string to_string(VortexType type);

struct Vortex {
  VortexType declared = VortexType::V1;
  /// Letter of the corner just before each outgoing dart in the rotation.
  std::map<Dart, Letter> corner_letter;
};

/// An embedded graph with a current on every dart and labeled vortices.
struct CurrentGraph {
  int modulus = 0;
  std::optional<int> case_id;
  EmbeddedGraph graph;
  std::vector<int> current;  // indexed by dart
  std::map<VertexId, Vortex> vortices;
  std::map<VertexId, std::string> names;  // display names from the source file

  GroupElement current_of(Dart d) const { return {current.at(d.index()), modulus}; }
  std::string name(VertexId v) const;
  /// Throws a structural error on antisymmetry or bookkeeping violations.
  void validate_structure() const;
};

using LogEntry = std::variant<int, Letter>;

struct Log {
  std::vector<LogEntry> entries;

  std::vector<int> numbers() const;
  std::string to_string() const;
};

GroupElement excess(const CurrentGraph& cg, VertexId v);

struct VortexClassification {
  VertexId vertex;
  std::optional<VortexType> kind;  // empty when no type matches
  GroupElement excess;
  std::optional<int> residue_class;  // V3 only
  std::vector<std::string> failures;
};

VortexClassification classify_vortex(const CurrentGraph& cg, VertexId v);

struct PrincipleResult {
  std::string name;  // "C1" .. "C5"
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct PrincipleReport {
  std::vector<PrincipleResult> results;
  int index = 0;  // face count of the current graph

  bool all_pass() const;
  std::string to_string() const;
};

PrincipleReport check_principles(const CurrentGraph& cg);

/// The single face walk with the order-2 pair collapsed and letters placed at
/// their corners. Throws an index error when there is more than one face.
Log trace_log(const CurrentGraph& cg);

/// The degree-1 vertex carrying the order-2 element, if any.
std::optional<VertexId> order_two_pendant(const CurrentGraph& cg);

}  // namespace mapcolor
