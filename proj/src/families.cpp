#include "mapcolor/families.hpp"

#include <algorithm>
#include <map>

#include "mapcolor/error.hpp"
#include "mapcolor/fixtures.hpp"

namespace mapcolor {

namespace {

constexpr std::string_view kCase11Small = "case11_s2.cg";
constexpr std::string_view kCase11Family = "case11_family.cg";
constexpr std::string_view kCase2Small = "case2_s1.cg";
constexpr std::string_view kCase2Family = "case2_family.cg";

std::string_view fixture_text(std::string_view name) {
  auto text = fixture(name);
  if (!text) fail(ErrorKind::fixture, "fixture " + std::string(name) + " is not available");
  return *text;
}

void check_range(int case_id, long long s) {
  long long lo = family_minimum(case_id);
  if (s < lo) {
    fail(ErrorKind::range, "case " + std::to_string(case_id) + " family starts at s=" + std::to_string(lo) +
                               ", got s=" + std::to_string(s));
  }
}

long long group_order(long long s) { return 12 * s + 6; }

bool congruent(long long a, long long b, long long m) { return ((a - b) % m + m) % m == 0; }

std::string_view family_fixture(int case_id) {
  if (case_id == 11) return kCase11Family;
  if (case_id == 2) return kCase2Family;
  fail(ErrorKind::domain, "no family for case " + std::to_string(case_id));
}

long long ladder_minimum(int case_id) { return case_id == 11 ? 3 : 1; }

}  // namespace

FamilyParameters FamilyParameters::of(int case_id, long long s) {
  FamilyParameters p;
  p.case_id = case_id;
  p.s = s;
  p.modulus = static_cast<int>(group_order(s));
  if (case_id == 11) {
    p.gamma = GroupElement(6 * s - 2, p.modulus);
    p.delta = GroupElement(1, p.modulus);
    p.epsilon = GroupElement(6 * s + 5, p.modulus);
  } else if (case_id == 2) {
    p.gamma = GroupElement(3 * s + 5, p.modulus);
    p.delta = GroupElement(2, p.modulus);
    p.epsilon = GroupElement(1, p.modulus);
  } else {
    fail(ErrorKind::domain, "no parameters for case " + std::to_string(case_id));
  }
  return p;
}

long long family_minimum(int case_id) {
  if (case_id == 11) return 2;
  if (case_id == 2) return 1;
  fail(ErrorKind::domain, "no family for case " + std::to_string(case_id));
}

std::vector<long long> LadderFragment::top_vertex(std::size_t i) const {
  return {-top_rails.at(i), top_rails.at(i + 1), rungs.at(i)};
}

std::vector<long long> LadderFragment::bottom_vertex(std::size_t i) const {
  return {-bottom_rails.at(i), bottom_rails.at(i + 1), -rungs.at(i)};
}

CurrentGraphSource expand_ladder(const CurrentGraphSource& fragment, long long s, LadderFragment* out) {
  if (!fragment.ladder) return fragment;
  const SourceLadder& shape = *fragment.ladder;
  CurrentGraphSource src = fragment;
  src.ladder.reset();
  long long m = src.group.at(s);

  // Locate the four end stubs.
  std::map<std::string, std::size_t> stub;
  std::vector<SourceEdge> edges;
  for (const auto& e : fragment.edges) {
    if (e.tail.rfind("ladder:", 0) == 0) {
      fail(ErrorKind::fixture, "line " + std::to_string(e.line) + ": ladder ends must be edge heads");
    }
    if (e.head.rfind("ladder:", 0) == 0) {
      std::string end = e.head.substr(7);
      if (end != "top0" && end != "top1" && end != "bottom0" && end != "bottom1") {
        fail(ErrorKind::fixture, "line " + std::to_string(e.line) + ": unknown ladder end " + e.head);
      }
      if (stub.count(end)) fail(ErrorKind::fixture, "ladder end " + end + " attached twice");
      stub[end] = edges.size();
    }
    edges.push_back(e);
  }
  for (const char* end : {"top0", "top1", "bottom0", "bottom1"}) {
    if (!stub.count(end)) fail(ErrorKind::fixture, std::string("ladder end ") + end + " is not attached");
  }

  LadderFragment ld;
  ld.s = s;
  ld.pattern = shape.pattern;
  long long lo = shape.low.at(s);
  long long hi = shape.high.at(s);
  std::vector<long long> magnitudes;
  for (long long r = lo; r <= hi; r += 3) magnitudes.push_back(r);
  if (!shape.ascending) std::reverse(magnitudes.begin(), magnitudes.end());
  long long h = edges[stub["top0"]].current.at(s);
  long long g = edges[stub["bottom0"]].current.at(s);
  ld.top_rails.push_back(h);
  ld.bottom_rails.push_back(g);
  int d = shape.first_direction;
  for (long long r : magnitudes) {
    if (r % 3 != 0 || r <= 0) fail(ErrorKind::fixture, "rung " + std::to_string(r) + " is not a positive multiple of 3");
    ld.rungs.push_back(d * r);
    h -= d * r;
    g += d * r;
    ld.top_rails.push_back(h);
    ld.bottom_rails.push_back(g);
    d = -d;
  }
  if (!congruent(edges[stub["top1"]].current.at(s), -h, m) ||
      !congruent(edges[stub["bottom1"]].current.at(s), -g, m)) {
    fail(ErrorKind::fixture, "ladder far-end currents do not match the fragment at s=" + std::to_string(s));
  }

  std::size_t k = ld.length();
  auto top = [](std::size_t i) { return "ladder.T" + std::to_string(i + 1); };
  auto bot = [](std::size_t i) { return "ladder.B" + std::to_string(i + 1); };
  auto top_rail = [](std::size_t i) { return "ladder.t" + std::to_string(i); };
  auto bot_rail = [](std::size_t i) { return "ladder.b" + std::to_string(i); };
  auto rung = [](std::size_t i) { return "ladder.r" + std::to_string(i + 1); };

  // Dart renames for the far-end stubs when the ladder is empty.
  std::map<std::string, SourceDart> alias;
  if (k == 0) {
    for (auto [first, last] : {std::pair{"top0", "top1"}, std::pair{"bottom0", "bottom1"}}) {
      SourceEdge& a = edges[stub[first]];
      const SourceEdge& b = edges[stub[last]];
      a.head = b.tail;
      alias[b.name + "+"] = {a.name, false};
      alias[b.name + "-"] = {a.name, true};
    }
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const SourceEdge& e) {
                                 return e.name == fragment.edges[stub["top1"]].name ||
                                        e.name == fragment.edges[stub["bottom1"]].name;
                               }),
                edges.end());
  } else {
    edges[stub["top0"]].head = top(0);
    edges[stub["bottom0"]].head = bot(0);
    edges[stub["top1"]].head = top(k - 1);
    edges[stub["bottom1"]].head = bot(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      edges.push_back({top_rail(i + 1), top(i), top(i + 1), Affine{0, ld.top_rails[i + 1]}, shape.line});
      edges.push_back({bot_rail(i + 1), bot(i), bot(i + 1), Affine{0, ld.bottom_rails[i + 1]}, shape.line});
    }
    for (std::size_t i = 0; i < k; ++i) {
      edges.push_back({rung(i), top(i), bot(i), Affine{0, ld.rungs[i]}, shape.line});
    }
    auto prev_dart = [&](bool is_top, std::size_t i) -> SourceDart {
      if (i == 0) return {fragment.edges[stub[is_top ? "top0" : "bottom0"]].name, false};
      return {is_top ? top_rail(i) : bot_rail(i), false};
    };
    auto next_dart = [&](bool is_top, std::size_t i) -> SourceDart {
      if (i + 1 == k) return {fragment.edges[stub[is_top ? "top1" : "bottom1"]].name, false};
      return {is_top ? top_rail(i + 1) : bot_rail(i + 1), true};
    };
    for (std::size_t i = 0; i < k; ++i) {
      for (bool is_top : {true, false}) {
        SourceVertex v;
        v.name = is_top ? top(i) : bot(i);
        v.line = shape.line;
        v.darts = {prev_dart(is_top, i), next_dart(is_top, i), {rung(i), is_top}};
        v.white = (ld.pattern >> ((is_top ? 0 : 2) + i % 2)) & 1;
        src.vertices.push_back(std::move(v));
      }
    }
  }
  for (auto& v : src.vertices) {
    for (auto& dd : v.darts) {
      auto it = alias.find(dd.edge + (dd.forward ? "+" : "-"));
      if (it != alias.end()) dd = it->second;
    }
  }
  src.edges = std::move(edges);

  // Integer Kirchhoff law at every ladder vertex.
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& t : {ld.top_vertex(i), ld.bottom_vertex(i)}) {
      if (t[0] + t[1] + t[2] != 0) fail(ErrorKind::fixture, "ladder vertex breaks Kirchhoff's law over Z");
    }
  }
  if (out) *out = ld;
  return src;
}

LadderFragment generate_ladder(int case_id, long long s) {
  long long lo = ladder_minimum(case_id);
  if (s < lo) {
    fail(ErrorKind::range, "case " + std::to_string(case_id) + " ladder starts at s=" + std::to_string(lo) +
                               ", got s=" + std::to_string(s));
  }
  LadderFragment ld;
  if (case_id == 2 && s == 1) {
    // The smallest Case 2 graph has no ladder at all.
    ld.s = s;
    return ld;
  }
  auto src = parse_current_graph_source(fixture_text(family_fixture(case_id)));
  expand_ladder(src, s, &ld);
  return ld;
}

CurrentGraph build_from_fragment(std::string_view text, long long s) {
  auto src = parse_current_graph_source(text);
  return assemble_current_graph(expand_ladder(src, s), s);
}

CurrentGraph build_case11(long long s) {
  check_range(11, s);
  return build_from_fragment(fixture_text(s == 2 ? kCase11Small : kCase11Family), s);
}

CurrentGraph build_case2(long long s) {
  check_range(2, s);
  return build_from_fragment(fixture_text(s == 1 ? kCase2Small : kCase2Family), s);
}

}  // namespace mapcolor
