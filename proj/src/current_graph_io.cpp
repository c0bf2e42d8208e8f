#include "mapcolor/current_graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mapcolor/error.hpp"

namespace mapcolor {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    char c = line[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '(' || c == ')') {
      out.push_back({line.substr(pos, 1), pos + 1});
      ++pos;
    } else {
      std::size_t begin = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '(' &&
             line[pos] != ')') {
        ++pos;
      }
      out.push_back({line.substr(begin, pos - begin), begin + 1});
    }
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

Affine parse_affine(const Token& t, std::size_t line) {
  auto a = Affine::parse(t.text);
  if (!a) parse_fail(line, t.column, "bad number '" + std::string(t.text) + "'");
  return *a;
}

void expect(const std::vector<Token>& toks, std::size_t k, std::string_view word, std::size_t line) {
  if (k >= toks.size()) parse_fail(line, 0, "expected '" + std::string(word) + "' before end of line");
  if (toks[k].text != word) {
    parse_fail(line, toks[k].column, "expected '" + std::string(word) + "', found '" + std::string(toks[k].text) + "'");
  }
}

}  // namespace

CurrentGraphSource parse_current_graph_source(std::string_view text) {
  CurrentGraphSource src;
  bool have_group = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    auto head = toks[0].text;

    if (head == "group") {
      if (toks.size() != 2) parse_fail(line_no, toks[0].column, "usage: group <modulus>");
      src.group = parse_affine(toks[1], line_no);
      have_group = true;
    } else if (head == "case") {
      if (toks.size() != 2 || (toks[1].text != "2" && toks[1].text != "11")) {
        parse_fail(line_no, toks[0].column, "usage: case {2|11}");
      }
      src.case_id = toks[1].text == "2" ? 2 : 11;
    } else if (head == "vortex") {
      // vortex <vertex> label <letters...> type <V1|V2|V3>
      if (toks.size() < 6) parse_fail(line_no, toks[0].column, "usage: vortex <vertex> label <letters> type <V1|V2|V3>");
      SourceVortex vx;
      vx.vertex = std::string(toks[1].text);
      vx.line = line_no;
      expect(toks, 2, "label", line_no);
      std::size_t k = 3;
      for (; k < toks.size() && toks[k].text != "type"; ++k) {
        auto letter = parse_letter(toks[k].text);
        if (!letter) parse_fail(line_no, toks[k].column, "unknown letter '" + std::string(toks[k].text) + "'");
        vx.letters.push_back(*letter);
      }
      expect(toks, k, "type", line_no);
      if (k + 2 != toks.size()) parse_fail(line_no, toks[k].column, "expected one vortex type");
      auto t = toks[k + 1].text;
      if (t == "V1") {
        vx.type = VortexType::V1;
      } else if (t == "V2") {
        vx.type = VortexType::V2;
      } else if (t == "V3") {
        vx.type = VortexType::V3;
      } else {
        parse_fail(line_no, toks[k + 1].column, "unknown vortex type '" + std::string(t) + "'");
      }
      src.vortices.push_back(std::move(vx));
    } else if (head == "ladder") {
      // ladder rungs <lo> .. <hi> order <asc|desc> first <+1|-1> pattern <0..15>
      if (src.ladder) parse_fail(line_no, toks[0].column, "only one ladder per file");
      if (toks.size() != 11) {
        parse_fail(line_no, toks[0].column,
                   "usage: ladder rungs <lo> .. <hi> order <asc|desc> first <+1|-1> pattern <bits>");
      }
      SourceLadder ld;
      ld.line = line_no;
      expect(toks, 1, "rungs", line_no);
      ld.low = parse_affine(toks[2], line_no);
      expect(toks, 3, "..", line_no);
      ld.high = parse_affine(toks[4], line_no);
      expect(toks, 5, "order", line_no);
      if (toks[6].text != "asc" && toks[6].text != "desc") parse_fail(line_no, toks[6].column, "order is asc or desc");
      ld.ascending = toks[6].text == "asc";
      expect(toks, 7, "first", line_no);
      if (toks[8].text != "+1" && toks[8].text != "-1") parse_fail(line_no, toks[8].column, "first is +1 or -1");
      ld.first_direction = toks[8].text == "+1" ? 1 : -1;
      expect(toks, 9, "pattern", line_no);
      auto p = Affine::parse(toks[10].text);
      if (!p || !p->constant() || p->b < 0 || p->b > 15) parse_fail(line_no, toks[10].column, "pattern is 0..15");
      ld.pattern = static_cast<int>(p->b);
      src.ladder = ld;
    } else if (head.size() > 1 && head.back() == ':') {
      // <edge>: <tail> -> <head> current <k>
      if (toks.size() != 6) parse_fail(line_no, toks[0].column, "usage: <edge>: <tail> -> <head> current <k>");
      SourceEdge e;
      e.name = std::string(head.substr(0, head.size() - 1));
      e.tail = std::string(toks[1].text);
      expect(toks, 2, "->", line_no);
      e.head = std::string(toks[3].text);
      expect(toks, 4, "current", line_no);
      e.current = parse_affine(toks[5], line_no);
      e.line = line_no;
      src.edges.push_back(std::move(e));
    } else {
      // <vertex> <B|W> ( <dart> ... )
      if (toks.size() < 4) parse_fail(line_no, toks[0].column, "unrecognized line");
      SourceVertex v;
      v.name = std::string(head);
      v.line = line_no;
      if (toks[1].text != "B" && toks[1].text != "W") parse_fail(line_no, toks[1].column, "expected B or W");
      v.white = toks[1].text == "W";
      expect(toks, 2, "(", line_no);
      std::size_t k = 3;
      for (; k < toks.size() && toks[k].text != ")"; ++k) {
        auto t = toks[k].text;
        if (t.size() < 2 || (t.back() != '+' && t.back() != '-')) {
          parse_fail(line_no, toks[k].column, "dart must be <edge>+ or <edge>-");
        }
        v.darts.push_back({std::string(t.substr(0, t.size() - 1)), t.back() == '+'});
      }
      expect(toks, k, ")", line_no);
      if (k + 1 != toks.size()) parse_fail(line_no, toks[k + 1].column, "trailing text");
      src.vertices.push_back(std::move(v));
    }
  }
  if (!have_group) fail(ErrorKind::parse, "missing 'group' line");
  return src;
}

CurrentGraph assemble_current_graph(const CurrentGraphSource& src, long long s) {
  if (src.ladder) fail(ErrorKind::fixture, "ladder must be expanded before assembly");
  CurrentGraph cg;
  long long m = src.group.at(s);
  if (m < 2 || m > 1'000'000) fail(ErrorKind::parse, "group modulus " + std::to_string(m) + " out of range");
  cg.modulus = static_cast<int>(m);
  cg.case_id = src.case_id;

  std::map<std::string, VertexId> vid;
  for (std::size_t k = 0; k < src.vertices.size(); ++k) {
    const auto& v = src.vertices[k];
    if (vid.count(v.name)) parse_fail(v.line, 1, "vertex '" + v.name + "' defined twice");
    VertexId id = VertexId::anonymous(static_cast<int>(k));
    vid.emplace(v.name, id);
    cg.names[id] = v.name;
    cg.graph.add_vertex(id);
  }
  std::map<std::string, EdgeId> eid;
  for (std::size_t k = 0; k < src.edges.size(); ++k) {
    const auto& e = src.edges[k];
    if (eid.count(e.name)) parse_fail(e.line, 1, "edge '" + e.name + "' defined twice");
    for (const auto* end : {&e.tail, &e.head}) {
      if (!vid.count(*end)) parse_fail(e.line, 1, "edge '" + e.name + "' names unknown vertex '" + *end + "'");
    }
    eid.emplace(e.name, static_cast<EdgeId>(k));
  }

  // Rotations in the global convention, checked against edge endpoints.
  std::vector<std::vector<Dart>> rotations(src.vertices.size());
  std::vector<int> seen(2 * src.edges.size(), 0);
  for (std::size_t k = 0; k < src.vertices.size(); ++k) {
    const auto& v = src.vertices[k];
    for (const auto& sd : v.darts) {
      auto it = eid.find(sd.edge);
      if (it == eid.end()) parse_fail(v.line, 1, "vertex '" + v.name + "' uses unknown edge '" + sd.edge + "'");
      const auto& e = src.edges[it->second];
      const std::string& tail = sd.forward ? e.tail : e.head;
      if (tail != v.name) {
        parse_fail(v.line, 1, "dart " + sd.edge + (sd.forward ? "+" : "-") + " does not leave '" + v.name + "'");
      }
      Dart d(it->second, sd.forward ? Side::forward : Side::reverse);
      if (seen[d.index()]++) parse_fail(v.line, 1, "dart " + sd.edge + (sd.forward ? "+" : "-") + " listed twice");
      rotations[k].push_back(d);
    }
    if (v.white) std::reverse(rotations[k].begin(), rotations[k].end());
  }
  for (std::size_t d = 0; d < seen.size(); ++d) {
    if (!seen[d]) {
      const auto& e = src.edges[d / 2];
      fail(ErrorKind::structural, "dart " + e.name + (d % 2 ? "-" : "+") + " appears in no vertex rotation");
    }
  }

  // Build the graph dart by dart so edge ids follow the file.
  std::vector<std::optional<Dart>> last(src.vertices.size());
  std::vector<std::size_t> placed(2 * src.edges.size(), 0);
  cg.current.assign(2 * src.edges.size(), 0);
  for (std::size_t k = 0; k < src.edges.size(); ++k) {
    const auto& e = src.edges[k];
    int t = vid.at(e.tail).ordinal();
    int h = vid.at(e.head).ordinal();
    EdgeId id = cg.graph.add_edge(VertexId::anonymous(t), last[t], VertexId::anonymous(h),
                                  t == h ? std::optional<Dart>(Dart(static_cast<EdgeId>(k), Side::forward)) : last[h]);
    last[t] = Dart(id, Side::forward);
    last[h] = Dart(id, Side::reverse);
    GroupElement c(e.current.at(s), cg.modulus);
    cg.current[2 * k] = c.value();
    cg.current[2 * k + 1] = (-c).value();
  }
  for (std::size_t k = 0; k < src.vertices.size(); ++k) {
    cg.graph.set_rotation(VertexId::anonymous(static_cast<int>(k)), rotations[k]);
  }

  for (const auto& vx : src.vortices) {
    auto it = vid.find(vx.vertex);
    if (it == vid.end()) parse_fail(vx.line, 1, "vortex names unknown vertex '" + vx.vertex + "'");
    if (cg.vortices.count(it->second)) parse_fail(vx.line, 1, "vertex '" + vx.vertex + "' labeled twice");
    const auto& sv = src.vertices[it->second.ordinal()];
    Vortex vortex;
    vortex.declared = vx.type;
    if (vx.letters.size() != sv.darts.size()) {
      parse_fail(vx.line, 1, "vortex '" + vx.vertex + "' needs one letter per dart");
    }
    // Label k sits between listed darts k-1 and k; in the stored rotation
    // that corner precedes listed dart k (B) or listed dart k-1 (W).
    std::size_t n = sv.darts.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& sd = sv.white ? sv.darts[(k + n - 1) % n] : sv.darts[k];
      Dart d(eid.at(sd.edge), sd.forward ? Side::forward : Side::reverse);
      vortex.corner_letter[d] = vx.letters[k];
    }
    cg.vortices.emplace(it->second, std::move(vortex));
  }
  cg.validate_structure();
  return cg;
}

CurrentGraph read_current_graph(std::string_view text, std::optional<long long> s) {
  auto src = parse_current_graph_source(text);
  if (src.ladder) fail(ErrorKind::parse, "ladder lines are only allowed in family fragments");
  bool affine = !src.group.constant();
  for (const auto& e : src.edges) affine = affine || !e.current.constant();
  if (affine && !s) fail(ErrorKind::parse, "file uses the parameter s but no value was given");
  return assemble_current_graph(src, s.value_or(0));
}

std::string write_current_graph(const CurrentGraph& cg) {
  std::string out = "group " + std::to_string(cg.modulus) + "\n";
  if (cg.case_id) out += "case " + std::to_string(*cg.case_id) + "\n";
  const auto& g = cg.graph;
  auto vname = [&](VertexId v) { return cg.name(v); };
  for (const VertexId& v : g.vertices()) {
    out += vname(v) + " B (";
    bool first = true;
    for (Dart d : g.rotation(v)) {
      if (!first) out += ' ';
      first = false;
      out += "e" + std::to_string(d.edge()) + (d.side() == Side::forward ? "+" : "-");
    }
    out += ")\n";
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Dart d(static_cast<EdgeId>(e), Side::forward);
    out += "e" + std::to_string(e) + ": " + vname(g.tail(d)) + " -> " + vname(g.head(d)) + " current " +
           std::to_string(cg.current[d.index()]) + "\n";
  }
  for (const auto& [v, vortex] : cg.vortices) {
    out += "vortex " + vname(v) + " label";
    for (Dart d : g.rotation(v)) {
      auto it = vortex.corner_letter.find(d);
      if (it != vortex.corner_letter.end()) out += " " + std::string(to_string(it->second));
    }
    out += " type " + to_string(vortex.declared) + "\n";
  }
  return out;
}

}  // namespace mapcolor
