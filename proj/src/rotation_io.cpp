#include "mapcolor/rotation_io.hpp"

#include <cctype>

#include "mapcolor/error.hpp"

namespace mapcolor {

std::string write_rotation_text(const EmbeddedGraph& emb) {
  std::string out;
  for (const VertexId& v : emb.vertices()) {
    out += v.to_string();
    out += ". (";
    bool first = true;
    for (const VertexId& w : emb.neighbors(v)) {
      if (!first) out += ' ';
      first = false;
      out += w.to_string();
    }
    out += ")\n";
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

}  // namespace

EmbeddedGraph read_rotation_text(std::string_view text) {
  EmbeddedGraph::RotationRows rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    auto read_token = [&] {
      std::size_t begin = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) &&
             line[pos] != '.' && line[pos] != '(' && line[pos] != ')') {
        ++pos;
      }
      return line.substr(begin, pos - begin);
    };
    skip_space();
    if (pos == line.size()) continue;

    std::size_t col = pos + 1;
    auto head = read_token();
    auto v = VertexId::parse(head);
    if (!v) parse_fail(line_no, col, "bad vertex '" + std::string(head) + "'");
    if (pos >= line.size() || line[pos] != '.') parse_fail(line_no, pos + 1, "expected '.'");
    ++pos;
    skip_space();
    if (pos >= line.size() || line[pos] != '(') parse_fail(line_no, pos + 1, "expected '('");
    ++pos;
    std::vector<VertexId> nbrs;
    while (true) {
      skip_space();
      if (pos >= line.size()) parse_fail(line_no, pos + 1, "missing ')'");
      if (line[pos] == ')') {
        ++pos;
        break;
      }
      col = pos + 1;
      auto tok = read_token();
      auto w = VertexId::parse(tok);
      if (!w) parse_fail(line_no, col, "bad vertex '" + std::string(tok) + "'");
      nbrs.push_back(*w);
    }
    skip_space();
    if (pos != line.size()) parse_fail(line_no, pos + 1, "trailing text");
    rows.emplace_back(*v, std::move(nbrs));
  }
  if (rows.empty()) fail(ErrorKind::parse, "no rotation lines");
  return EmbeddedGraph::from_rotations(rows);
}

std::string write_face_list(const std::vector<Face>& faces) {
  std::string out;
  for (const Face& f : faces) out += "F: " + f.to_string() + "\n";
  return out;
}

}  // namespace mapcolor
