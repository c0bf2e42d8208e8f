#include "mapcolor/derived.hpp"

#include <algorithm>

#include "mapcolor/error.hpp"

namespace mapcolor {

namespace {

VertexId num(int residue) { return VertexId::numbered(residue); }

}  // namespace

DerivedEmbedding derive(const CurrentGraph& cg) {
  auto report = check_principles(cg);
  if (!report.all_pass()) fail(ErrorKind::derivation, "current graph fails its principles:\n" + report.to_string());

  DerivedEmbedding out;
  const int m = cg.modulus;
  out.modulus = m;
  out.log = trace_log(cg);
  auto numbers = out.log.numbers();

  EmbeddedGraph::RotationRows rows;
  rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<VertexId> r;
    r.reserve(numbers.size());
    for (int g : numbers) r.push_back(num((g + i) % m));
    rows.emplace_back(num(i), std::move(r));
  }
  EmbeddedGraph emb = EmbeddedGraph::from_rotations(rows);

  // Letter sitting between consecutive log numbers p and q.
  std::map<std::pair<int, int>, Letter> corner_letter;
  std::map<Letter, VertexId> letter_vortex;
  for (const auto& [v, vortex] : cg.vortices) {
    for (const auto& [d, letter] : vortex.corner_letter) letter_vortex[letter] = v;
  }
  const auto& entries = out.log.entries;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!std::holds_alternative<Letter>(entries[k])) continue;
    auto p = entries[(k + entries.size() - 1) % entries.size()];
    auto q = entries[(k + 1) % entries.size()];
    if (!std::holds_alternative<int>(p) || !std::holds_alternative<int>(q)) {
      fail(ErrorKind::derivation, "two letters are adjacent in the log");
    }
    corner_letter[{std::get<int>(p), std::get<int>(q)}] = std::get<Letter>(entries[k]);
  }

  std::size_t expect_long = 0;
  std::size_t expect_half = 0;
  for (const auto& [v, vortex] : cg.vortices) {
    if (vortex.declared == VortexType::V1) expect_long += 1;
    if (vortex.declared == VortexType::V3) expect_long += 3;
    if (vortex.declared == VortexType::V2) expect_half += 2;
  }

  auto faces = trace_faces(emb);
  std::size_t found_long = 0;
  std::size_t found_half = 0;
  for (const Face& f : faces) {
    if (f.size() == 3) continue;
    if (f.size() == static_cast<std::size_t>(m)) {
      ++found_long;
    } else if (m % 2 == 0 && f.size() == static_cast<std::size_t>(m / 2)) {
      ++found_half;
    } else if (f.size() != 2) {
      fail(ErrorKind::derivation, "derived face of unexpected length " + std::to_string(f.size()) + ": " + f.to_string());
    }
  }
  if (found_long != expect_long || found_half != expect_half) {
    fail(ErrorKind::vortex_accounting,
         "derived embedding has " + std::to_string(found_long) + " Hamiltonian and " + std::to_string(found_half) +
             " half-length faces; the vortices call for " + std::to_string(expect_long) + " and " +
             std::to_string(expect_half));
  }

  for (const Face& f : faces) {
    if (f.size() <= 3) continue;
    int base = f.contains(num(0)) ? 0 : (f.contains(num(1)) ? 1 : -1);
    if (base < 0) fail(ErrorKind::derivation, "long face misses vertices 0 and 1: " + f.to_string());
    std::size_t n = f.size();
    std::size_t j = std::find(f.vertices.begin(), f.vertices.end(), num(base)) - f.vertices.begin();
    int p = (f.vertices[(j + n - 1) % n].residue() - base + m) % m;
    int q = (f.vertices[(j + 1) % n].residue() - base + m) % m;
    auto it = corner_letter.find({p, q});
    if (it == corner_letter.end()) {
      fail(ErrorKind::derivation, "no letter at the corner (" + std::to_string(p) + ", " + std::to_string(q) +
                                      ") of face " + f.to_string());
    }
    Letter letter = it->second;
    if (f.size() * 2 == static_cast<std::size_t>(m)) {
      letter = base == 0 ? Letter::y0 : Letter::y1;
    }
    VertexId lv = VertexId::lettered(letter);
    if (emb.contains(lv)) fail(ErrorKind::derivation, "letter " + lv.to_string() + " subdivides two faces");
    emb.add_vertex(lv);
    out.provenance[lv] = letter_vortex.at(it->second);

    std::vector<Dart> letter_darts;
    for (std::size_t k = 0; k < n; ++k) {
      Dart anchor = f.walk[(k + n - 1) % n].reverse();
      std::optional<Dart> at_letter;
      if (!letter_darts.empty()) at_letter = letter_darts.back();
      EdgeId e = emb.add_edge(f.vertices[k], anchor, lv, at_letter);
      letter_darts.push_back(Dart(e, Side::reverse));
    }
    std::reverse(letter_darts.begin(), letter_darts.end());
    emb.set_rotation(lv, letter_darts);
  }

  for (const Face& f : trace_faces(emb)) {
    if (f.size() != 3) fail(ErrorKind::derivation, "face " + f.to_string() + " is not a triangle after subdivision");
  }
  out.emb = std::move(emb);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> missing_edge_inventory(const DerivedEmbedding& d) {
  auto vs = d.emb.vertices();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t k = 0; k < vs.size(); ++k) pos[vs[k]] = k;
  std::vector<std::vector<char>> adj(vs.size(), std::vector<char>(vs.size(), 0));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (const VertexId& w : d.emb.neighbors(vs[k])) adj[k][pos.at(w)] = 1;
  }
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (adj[a][b]) continue;
      if (vs[a].is_numbered() && vs[b].is_numbered()) {
        fail(ErrorKind::derivation, "numbered vertices " + vs[a].to_string() + " and " + vs[b].to_string() +
                                        " are not adjacent; the log does not cover the group");
      }
      out.emplace_back(vs[a], vs[b]);
    }
  }
  return out;
}

}  // namespace mapcolor
