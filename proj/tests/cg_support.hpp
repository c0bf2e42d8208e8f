#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "mapcolor/current_graph.hpp"
#include "mapcolor/current_graph_io.hpp"
#include "mapcolor/derived.hpp"
#include "mapcolor/error.hpp"
#include "mapcolor/families.hpp"
#include "mapcolor/fixtures.hpp"

namespace testing {

inline mapcolor::VertexId vertex_named(const mapcolor::CurrentGraph& cg, const std::string& name) {
  for (const auto& [v, n] : cg.names) {
    if (n == name) return v;
  }
  throw std::runtime_error("no vertex named " + name);
}

inline int mod(long long x, long long m) { return static_cast<int>(((x % m) + m) % m); }

// Sum of currents on darts entering v, computed from the raw current table.
inline int incoming_sum(const mapcolor::CurrentGraph& cg, mapcolor::VertexId v) {
  long long sum = 0;
  for (std::size_t d = 0; d < cg.graph.dart_count(); ++d) {
    auto dart = mapcolor::Dart::from_index(static_cast<int>(d));
    if (cg.graph.head(dart) == v) sum += cg.current[d];
  }
  return mod(sum, cg.modulus);
}

inline std::vector<int> incoming_currents(const mapcolor::CurrentGraph& cg, mapcolor::VertexId v) {
  std::vector<int> out;
  for (std::size_t d = 0; d < cg.graph.dart_count(); ++d) {
    auto dart = mapcolor::Dart::from_index(static_cast<int>(d));
    if (cg.graph.head(dart) == v) out.push_back(mod(cg.current[d], cg.modulus));
  }
  return out;
}

inline mapcolor::CurrentGraph case2_s1() {
  return mapcolor::read_current_graph(*mapcolor::fixture("case2_s1.cg"));
}

}  // namespace testing
