#include "mapcolor/current_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mapcolor/error.hpp"

namespace mapcolor {

GroupElement::GroupElement(long long value, int modulus) : modulus_(modulus) {
  if (modulus <= 0) fail(ErrorKind::domain, "group modulus must be positive");
  value_ = static_cast<int>(((value % modulus) + modulus) % modulus);
}

GroupElement GroupElement::operator+(GroupElement other) const {
  if (other.modulus_ != modulus_) fail(ErrorKind::domain, "adding elements of different groups");
  return {static_cast<long long>(value_) + other.value_, modulus_};
}

int GroupElement::subgroup_index() const { return std::gcd(value_, modulus_); }

std::string to_string(VortexType type) {
  switch (type) {
    case VortexType::V1: return "V1";
    case VortexType::V2: return "V2";
    case VortexType::V3: return "V3";
  }
  return "?";
}

std::string CurrentGraph::name(VertexId v) const {
  auto it = names.find(v);
  if (it != names.end()) return it->second;
  return v.kind() == VertexId::Kind::anonymous ? "n" + std::to_string(v.ordinal()) : v.to_string();
}

void CurrentGraph::validate_structure() const {
  if (modulus < 2) fail(ErrorKind::structural, "group modulus must be at least 2");
  graph.validate();
  if (current.size() != graph.dart_count()) {
    fail(ErrorKind::structural, "current table does not cover every dart");
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    int a = current[2 * e];
    int b = current[2 * e + 1];
    if (a < 0 || a >= modulus || b < 0 || b >= modulus || (a + b) % modulus != 0) {
      fail(ErrorKind::structural, "edge " + std::to_string(e) + " currents " + std::to_string(a) +
                                      " and " + std::to_string(b) + " are not negatives mod " +
                                      std::to_string(modulus));
    }
  }
  for (const auto& [v, vortex] : vortices) {
    if (!graph.contains(v)) fail(ErrorKind::structural, "vortex " + v.to_string() + " is not a vertex");
    for (const auto& [d, letter] : vortex.corner_letter) {
      if (graph.tail(d) != v) {
        fail(ErrorKind::structural, "letter " + std::string(mapcolor::to_string(letter)) +
                                        " is attached to a dart not at " + name(v));
      }
    }
  }
}

std::vector<int> Log::numbers() const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (const int* g = std::get_if<int>(&e)) out.push_back(*g);
  }
  return out;
}

std::string Log::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ' ';
    if (const int* g = std::get_if<int>(&entries[k])) {
      out += std::to_string(*g);
    } else {
      out += mapcolor::to_string(std::get<Letter>(entries[k]));
    }
  }
  return out + ")";
}

GroupElement excess(const CurrentGraph& cg, VertexId v) {
  GroupElement sum(0, cg.modulus);
  for (Dart d : cg.graph.rotation(v)) sum = sum + cg.current_of(d.reverse());
  return sum;
}

std::optional<VertexId> order_two_pendant(const CurrentGraph& cg) {
  if (cg.modulus % 2 != 0) return std::nullopt;
  for (const VertexId& v : cg.graph.vertices()) {
    if (cg.graph.degree(v) != 1 || cg.vortices.count(v)) continue;
    if (cg.current_of(cg.graph.rotation(v).front()).is_order_two()) return v;
  }
  return std::nullopt;
}

VortexClassification classify_vortex(const CurrentGraph& cg, VertexId v) {
  VortexClassification out;
  out.vertex = v;
  out.excess = excess(cg, v);
  int m = cg.modulus;
  int deg = cg.graph.degree(v);
  int index = out.excess.subgroup_index();
  std::string who = cg.name(v);
  if (deg == 1) {
    if (index == 1) {
      out.kind = VortexType::V1;
    } else if (index == 2) {
      out.kind = VortexType::V2;
    } else {
      out.failures.push_back(who + ": excess " + std::to_string(out.excess.value()) +
                             " generates a subgroup of index " + std::to_string(index) +
                             ", not 1 or 2");
    }
    return out;
  }
  if (deg != 3) {
    out.failures.push_back(who + ": degree " + std::to_string(deg) + " fits no vortex type");
    return out;
  }
  if (m % 3 != 0) {
    out.failures.push_back(who + ": modulus " + std::to_string(m) + " has no index-3 subgroup");
    return out;
  }
  if (index != 3) {
    out.failures.push_back(who + ": excess " + std::to_string(out.excess.value()) +
                           " generates a subgroup of index " + std::to_string(index) + ", not 3");
  }
  std::optional<int> j;
  bool congruent = true;
  for (Dart d : cg.graph.rotation(v)) {
    int r = cg.current_of(d.reverse()).value() % 3;
    if (j && *j != r) congruent = false;
    j = r;
  }
  if (!congruent) {
    out.failures.push_back(who + ": incoming currents are not congruent mod 3");
  } else if (*j == 0) {
    out.failures.push_back(who + ": incoming currents are divisible by 3");
  }
  if (out.failures.empty()) {
    out.kind = VortexType::V3;
    out.residue_class = *j;
  }
  return out;
}

namespace {

// Face walk of an index-1 current graph, rotated so it never starts on the
// dart leaving the order-2 pendant.
std::vector<Dart> single_walk(const CurrentGraph& cg, const std::vector<Face>& faces,
                              const std::optional<VertexId>& pendant) {
  std::vector<Dart> walk = faces.front().walk;
  if (pendant && !walk.empty() && cg.graph.tail(walk.front()) == *pendant) {
    std::rotate(walk.begin(), walk.begin() + 1, walk.end());
  }
  return walk;
}

}  // namespace

Log trace_log(const CurrentGraph& cg) {
  auto faces = trace_faces(cg.graph);
  if (faces.size() != 1) {
    fail(ErrorKind::index, "current graph has " + std::to_string(faces.size()) + " faces, index 1 needs 1");
  }
  auto pendant = order_two_pendant(cg);
  auto walk = single_walk(cg, faces, pendant);
  Log log;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    Dart d = walk[k];
    log.entries.emplace_back(cg.current_of(d).value());
    VertexId h = cg.graph.head(d);
    if (pendant && h == *pendant) {
      ++k;  // the doubled order-2 element is recorded once
      continue;
    }
    auto vt = cg.vortices.find(h);
    if (vt == cg.vortices.end()) continue;
    Dart out = walk[(k + 1) % walk.size()];
    auto letter = vt->second.corner_letter.find(out);
    if (letter != vt->second.corner_letter.end()) log.entries.emplace_back(letter->second);
  }
  return log;
}

bool PrincipleReport::all_pass() const {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

std::string PrincipleReport::to_string() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << "(" << r.name << ") " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& w : r.witnesses) out << "  " << w << "\n";
  }
  return out.str();
}

PrincipleReport check_principles(const CurrentGraph& cg) {
  cg.validate_structure();
  PrincipleReport report;
  const int m = cg.modulus;
  const auto& g = cg.graph;

  PrincipleResult c1{"C1", true, {}};
  for (const VertexId& v : g.vertices()) {
    int deg = g.degree(v);
    if (deg != 1 && deg != 3) {
      c1.pass = false;
      c1.witnesses.push_back(cg.name(v) + " has degree " + std::to_string(deg));
    }
  }

  auto faces = trace_faces(g);
  report.index = static_cast<int>(faces.size());
  auto pendant = order_two_pendant(cg);

  PrincipleResult c2{"C2", true, {}};
  if (faces.size() != 1) {
    c2.pass = false;
    c2.witnesses.push_back("index " + std::to_string(faces.size()) + ", expected 1");
  } else {
    std::vector<int> count(m, 0);
    for (int x : trace_log(cg).numbers()) ++count[x];
    if (count[0]) {
      c2.pass = false;
      c2.witnesses.push_back("element 0 appears " + std::to_string(count[0]) + " times");
    }
    for (int x = 1; x < m; ++x) {
      if (count[x] > 1) {
        c2.pass = false;
        c2.witnesses.push_back("duplicate element " + std::to_string(x) + " appears " +
                               std::to_string(count[x]) + " times");
      }
    }
    for (int x = 1; x < m; ++x) {
      if (count[x] == 0) {
        c2.pass = false;
        c2.witnesses.push_back("missing element " + std::to_string(x));
      }
    }
  }

  PrincipleResult c3{"C3", true, {}};
  if (m % 2 == 0) {
    int half = m / 2;
    int carriers = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      Dart d(static_cast<EdgeId>(e), Side::forward);
      if (cg.current[d.index()] != half) continue;
      ++carriers;
      bool pendant_end = (pendant && (g.tail(d) == *pendant || g.head(d) == *pendant));
      if (!pendant_end) {
        c3.pass = false;
        c3.witnesses.push_back("order-2 element " + std::to_string(half) + " on edge " + cg.name(g.tail(d)) +
                               " -> " + cg.name(g.head(d)) + " with no unlabeled degree-1 end");
      }
    }
    if (carriers == 0) {
      c3.pass = false;
      c3.witnesses.push_back("order-2 element " + std::to_string(half) + " carried by no edge");
    }
  }

  PrincipleResult c4{"C4", true, {}};
  PrincipleResult c5{"C5", true, {}};
  for (const VertexId& v : g.vertices()) {
    bool labeled = cg.vortices.count(v) != 0;
    if (labeled || (pendant && v == *pendant)) continue;
    auto ex = excess(cg, v);
    if (ex.value() == 0) continue;
    if (g.degree(v) == 3) {
      c4.pass = false;
      c4.witnesses.push_back(cg.name(v) + " has excess " + std::to_string(ex.value()));
    } else {
      c5.pass = false;
      c5.witnesses.push_back(cg.name(v) + " is an unlabeled vortex with excess " +
                             std::to_string(ex.value()));
    }
  }
  for (const auto& [v, vortex] : cg.vortices) {
    auto cls = classify_vortex(cg, v);
    if (!cls.kind) {
      c5.pass = false;
      for (auto& f : cls.failures) c5.witnesses.push_back(f);
    } else if (*cls.kind != vortex.declared) {
      c5.pass = false;
      c5.witnesses.push_back(cg.name(v) + " is declared " + to_string(vortex.declared) +
                             " but classifies as " + to_string(*cls.kind));
    }
    std::size_t want = vortex.declared == VortexType::V3 ? 3 : 1;
    if (vortex.corner_letter.size() != want) {
      c5.pass = false;
      c5.witnesses.push_back(cg.name(v) + " carries " + std::to_string(vortex.corner_letter.size()) +
                             " letters, expected " + std::to_string(want));
    }
  }

  report.results = {c1, c2, c3, c4, c5};
  return report;
}

}  // namespace mapcolor
