#include "mapcolor/pipelines.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "mapcolor/derived.hpp"
#include "mapcolor/error.hpp"
#include "mapcolor/families.hpp"
#include "mapcolor/fixtures.hpp"

namespace mapcolor {

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::flip: return "flip";
    case StepKind::cascade: return "cascade";
    case StepKind::replace_rotation: return "replace_rotation";
    case StepKind::chord: return "chord";
    case StepKind::bridge: return "bridge";
    case StepKind::identify_contract: return "identify_contract";
    case StepKind::check: return "check";
  }
  return "?";
}

Script parse_script(std::string_view text, std::string name) {
  Script script;
  script.name = std::move(name);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    // Brackets are separate words.
    std::string spaced;
    for (char c : line) {
      if (c == '[' || c == ']') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream in(spaced);
    ScriptLine sl;
    sl.line = line_no;
    std::string w;
    while (in >> w) sl.words.push_back(w);
    if (sl.words.empty()) continue;
    if (sl.words[0] == "[") {
      // [s=2] or [s>=3] or [s<=5]
      if (sl.words.size() < 4 || sl.words[2] != "]") {
        fail(ErrorKind::parse, script.name + " line " + std::to_string(line_no) + ": malformed guard");
      }
      const std::string& g = sl.words[1];
      std::string op;
      for (const char* candidate : {">=", "<=", "="}) {
        if (g.rfind(std::string("s") + candidate, 0) == 0) {
          op = candidate;
          break;
        }
      }
      if (op.empty()) fail(ErrorKind::parse, script.name + " line " + std::to_string(line_no) + ": bad guard " + g);
      auto value = Affine::parse(g.substr(1 + op.size()));
      if (!value || !value->constant()) {
        fail(ErrorKind::parse, script.name + " line " + std::to_string(line_no) + ": bad guard " + g);
      }
      sl.guard = std::make_pair(op, value->b);
      sl.words.erase(sl.words.begin(), sl.words.begin() + 3);
    }
    script.lines.push_back(std::move(sl));
  }
  return script;
}

std::string PipelineResult::verdict() const {
  bool pass = report.simple && report.target_genus && report.genus == *report.target_genus &&
              report.V == n && report.E == n * (n - 1) / 2;
  std::ostringstream out;
  out << "CASE " << case_id << " s=" << s << " n=" << n << " genus=" << report.genus
      << " target=" << complete_graph_genus(n) << (pass ? " PASS" : " FAIL");
  return out.str();
}

std::string PipelineResult::trace() const {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& st = steps[k];
    out += std::to_string(k) + " " + to_string(st.kind) + " " + st.arguments;
    if (!st.outcome.empty()) out += " => " + st.outcome;
    out += "\n";
  }
  return out;
}

GenusReport verify_final(const EmbeddedGraph& emb, long long n) {
  GenusReport r = euler_genus(emb);
  r.target_genus = complete_graph_genus(n);
  if (!r.simple) {
    for (const VertexId& v : emb.vertices()) {
      std::set<VertexId> seen;
      for (const VertexId& w : emb.neighbors(v)) {
        if (w == v) fail(ErrorKind::pipeline, "loop at " + v.to_string());
        if (!seen.insert(w).second) {
          fail(ErrorKind::pipeline, "parallel edges between " + v.to_string() + " and " + w.to_string());
        }
      }
    }
  }
  if (r.V != n) {
    fail(ErrorKind::pipeline, "embedding has " + std::to_string(r.V) + " vertices, expected " + std::to_string(n));
  }
  if (r.E != n * (n - 1) / 2) {
    for (const VertexId& v : emb.vertices()) {
      if (emb.degree(v) == n - 1) continue;
      std::set<VertexId> nb;
      for (const VertexId& w : emb.neighbors(v)) nb.insert(w);
      for (const VertexId& w : emb.vertices()) {
        if (w != v && !nb.count(w)) {
          fail(ErrorKind::pipeline, "missing edge (" + v.to_string() + ", " + w.to_string() + ")");
        }
      }
    }
  }
  if (r.genus != *r.target_genus) {
    fail(ErrorKind::pipeline, "genus " + std::to_string(r.genus) + " differs from the minimum " +
                                  std::to_string(*r.target_genus) + " by " +
                                  std::to_string(r.genus - *r.target_genus));
  }
  return r;
}

namespace {

class Interpreter {
 public:
  Interpreter(const Script& script, long long s, int m, const PipelineOptions& options, PipelineResult& result)
      : script_(script), s_(s), m_(m), options_(options), result_(result) {}

  void run(EmbeddedGraph emb) {
    emb_ = std::move(emb);
    chi_ = step_invariants();
    for (const auto& line : script_.lines) {
      if (!guard_holds(line)) continue;
      line_ = line.line;
      try {
        execute(line.words);
      } catch (const Error& err) {
        fail(err.kind() == ErrorKind::parse ? ErrorKind::parse : ErrorKind::pipeline,
             script_.name + " line " + std::to_string(line_) + " (step " + std::to_string(result_.steps.size()) +
                 "): " + err.what());
      }
    }
    result_.final = std::move(emb_);
  }

 private:
  bool guard_holds(const ScriptLine& line) const {
    if (!line.guard) return true;
    auto [op, v] = *line.guard;
    if (op == "=") return s_ == v;
    if (op == ">=") return s_ >= v;
    return s_ <= v;
  }

  [[noreturn]] void bad(const std::string& what) const { fail(ErrorKind::parse, what); }

  long long eval(const std::string& text) const {
    long long total = 0;
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (any) {
        bad("bad expression '" + text + "'");
      }
      long long coef = 1;
      bool digits = false;
      long long num = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num = num * 10 + (text[pos] - '0');
        digits = true;
        ++pos;
      }
      if (digits) coef = num;
      if (pos < text.size() && text[pos] == '*') ++pos;
      std::string name;
      while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        name += text[pos++];
      }
      long long value = 1;
      if (name.empty()) {
        if (!digits) bad("bad expression '" + text + "'");
      } else if (name == "s") {
        value = s_;
      } else if (name == "m") {
        value = m_;
      } else {
        auto it = lets_.find(name);
        if (it == lets_.end()) bad("unknown name '" + name + "' in '" + text + "'");
        value = it->second;
      }
      total += sign * coef * value;
      any = true;
    }
    if (!any) bad("empty expression");
    return total;
  }

  VertexId vertex(const std::string& word) const {
    if (auto letter = parse_letter(word)) return VertexId::lettered(*letter);
    long long v = eval(word);
    return VertexId::numbered(static_cast<int>(((v % m_) + m_) % m_));
  }

  std::size_t index(const std::string& word) const {
    long long v = eval(word);
    if (v < 0) bad("negative index '" + word + "'");
    return static_cast<std::size_t>(v);
  }

  static std::string pair_text(VertexId a, VertexId b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

  Dart dart(VertexId a, VertexId b) const {
    auto d = emb_.find_dart(a, b);
    if (!d) fail(ErrorKind::pipeline, "no edge " + pair_text(a, b));
    return *d;
  }

  Face face_through(VertexId a, VertexId b) const { return face_of(emb_, dart(a, b)); }

  static bool same_pair(std::pair<VertexId, VertexId> p, VertexId a, VertexId b) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  }

  void record(StepKind kind, std::string args, std::string outcome = {}) {
    long long chi_before = chi_;
    chi_ = step_invariants();
    if (kind == StepKind::bridge && chi_ != chi_before - 2) {
      fail(ErrorKind::pipeline, "bridge did not add exactly one handle");
    }
    if ((kind == StepKind::flip || kind == StepKind::cascade || kind == StepKind::chord) && chi_ != chi_before) {
      fail(ErrorKind::pipeline, to_string(kind) + " changed the genus");
    }
    if (kind == StepKind::replace_rotation) result_.rotation_face_deficit += chi_before - chi_;
    if (kind == StepKind::bridge) ++result_.bridges;
    result_.steps.push_back({kind, line_, std::move(args), std::move(outcome)});
    if (options_.snapshot) options_.snapshot(result_.steps.size() - 1, result_.steps.back(), emb_);
  }

  // Dart partition and Euler parity; returns V - E + F.
  long long step_invariants() const {
    auto faces = trace_faces(emb_);
    long long chi = static_cast<long long>(emb_.vertex_count()) - static_cast<long long>(emb_.edge_count()) +
                    static_cast<long long>(faces.size());
    if (chi % 2 != 0) fail(ErrorKind::inconsistency, "odd Euler characteristic " + std::to_string(chi));
    return chi;
  }

  void execute(const std::vector<std::string>& w) {
    const std::string& op = w[0];
    if (op == "let") {
      if (w.size() != 4 || w[2] != "=") bad("usage: let <name> = <expr>");
      lets_[w[1]] = eval(w[3]);
    } else if (op == "flip") {
      if (w.size() != 3 && w.size() != 6) bad("usage: flip U V [expect X Y]");
      VertexId a = vertex(w[1]), b = vertex(w[2]);
      auto r = edge_flip(std::move(emb_), dart(a, b).edge());
      emb_ = std::move(r.emb);
      if (w.size() == 6 && !same_pair(r.flip.added, vertex(w[4]), vertex(w[5]))) {
        fail(ErrorKind::pipeline, "flip of " + pair_text(a, b) + " added " +
                                      pair_text(r.flip.added.first, r.flip.added.second) + ", expected " +
                                      pair_text(vertex(w[4]), vertex(w[5])));
      }
      record(StepKind::flip, pair_text(a, b), "added " + pair_text(r.flip.added.first, r.flip.added.second));
    } else if (op == "cascade") {
      if (w.size() != 3 && w.size() != 6) bad("usage: cascade U V [expect X Y]");
      VertexId a = vertex(w[1]), b = vertex(w[2]);
      run_cascade(dart(a, b).edge(), pair_text(a, b), w.size() == 6 ? std::optional(std::pair(vertex(w[4]), vertex(w[5]))) : std::nullopt);
    } else if (op == "seed") {
      // seed X Y at I J [expect P Q]
      if ((w.size() != 6 && w.size() != 9) || w[3] != "at") bad("usage: seed X Y at I J [expect P Q]");
      Face f = face_through(vertex(w[1]), vertex(w[2]));
      std::size_t i = index(w[4]), j = index(w[5]);
      if (i >= f.size() || j >= f.size()) bad("corner outside face " + f.to_string());
      VertexId p = f.vertices[i], q = f.vertices[j];
      auto older = emb_.find_dart(p, q);
      if (!older) fail(ErrorKind::pipeline, "seed diagonal " + pair_text(p, q) + " is not a duplicate");
      EdgeId old_edge = older->edge();
      emb_ = insert_chord(std::move(emb_), f, i, j, ChordPolicy::allow_duplicates);
      record(StepKind::chord, "in " + f.to_string() + " at " + std::to_string(i) + " " + std::to_string(j),
             "seeded " + pair_text(p, q));
      run_cascade(old_edge, pair_text(p, q) + " (older copy)",
                  w.size() == 9 ? std::optional(std::pair(vertex(w[7]), vertex(w[8]))) : std::nullopt);
    } else if (op == "reorder") {
      // reorder V after N1 .. Nk order p0 .. p(k-1)
      auto at = std::find(w.begin(), w.end(), "order");
      if (w.size() < 5 || w[2] != "after" || at == w.end()) bad("usage: reorder V after N.. order P..");
      VertexId v = vertex(w[1]);
      std::vector<VertexId> cuts;
      for (auto it = w.begin() + 3; it != at; ++it) cuts.push_back(vertex(*it));
      std::vector<std::size_t> perm;
      for (auto it = at + 1; it != w.end(); ++it) perm.push_back(index(*it));
      do_reorder(v, cuts, perm);
    } else if (op == "handle") {
      // handle V triangle T1 T2 join J...
      if (w.size() < 7 || w[2] != "triangle" || w[5] != "join") bad("usage: handle V triangle T1 T2 join J..");
      std::vector<VertexId> join;
      for (std::size_t k = 6; k < w.size(); ++k) join.push_back(vertex(w[k]));
      do_handle(vertex(w[1]), vertex(w[3]), vertex(w[4]), join);
    } else if (op == "fan") {
      // fan J0 to J1 .. : chords from a J0 corner of the face holding all of them
      if (w.size() < 4 || w[2] != "to") bad("usage: fan V to T..");
      std::vector<VertexId> targets;
      for (std::size_t k = 3; k < w.size(); ++k) targets.push_back(vertex(w[k]));
      do_fan(vertex(w[1]), targets);
    } else if (op == "chord") {
      if (w.size() != 6 || w[3] != "at") bad("usage: chord X Y at I J");
      Face f = face_through(vertex(w[1]), vertex(w[2]));
      std::size_t i = index(w[4]), j = index(w[5]);
      if (i >= f.size() || j >= f.size()) bad("corner outside face " + f.to_string());
      emb_ = insert_chord(std::move(emb_), f, i, j);
      record(StepKind::chord, "in " + f.to_string() + " at " + std::to_string(i) + " " + std::to_string(j),
             "added " + pair_text(f.vertices[i], f.vertices[j]));
    } else if (op == "chords") {
      // chords X Y at I-J I-J ..: corners numbered in the original face
      if (w.size() < 5 || w[3] != "at") bad("usage: chords X Y at I-J ..");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t k = 4; k < w.size(); ++k) {
        auto dash = w[k].find('-');
        if (dash == std::string::npos) bad("chord '" + w[k] + "' is not I-J");
        pairs.emplace_back(index(w[k].substr(0, dash)), index(w[k].substr(dash + 1)));
      }
      do_chords(face_through(vertex(w[1]), vertex(w[2])), pairs);
    } else if (op == "edge") {
      if (w.size() != 6 || w[3] != "after") bad("usage: edge P Q after A B");
      add_anchored_edge(vertex(w[1]), vertex(w[2]), vertex(w[4]), vertex(w[5]));
    } else if (op == "bridge") {
      if (w.size() != 9 || w[3] != "at" || w[7] != "at") bad("usage: bridge X Y at I Z W at J");
      Face f1 = face_through(vertex(w[1]), vertex(w[2]));
      Face f2 = face_through(vertex(w[5]), vertex(w[6]));
      std::size_t c1 = index(w[4]), c2 = index(w[8]);
      if (c1 >= f1.size() || c2 >= f2.size()) bad("corner outside face");
      emb_ = bridge(std::move(emb_), f1, c1, f2, c2);
      record(StepKind::bridge, f1.to_string() + " at " + std::to_string(c1) + " to " + f2.to_string() + " at " +
                                   std::to_string(c2),
             "added " + pair_text(f1.vertices[c1], f2.vertices[c2]));
    } else if (op == "contract") {
      if (w.size() != 3) bad("usage: contract U V");
      VertexId a = vertex(w[1]), b = vertex(w[2]);
      emb_ = identify_and_contract(std::move(emb_), a, b);
      record(StepKind::identify_contract, pair_text(a, b), std::to_string(emb_.vertex_count()) + " vertices");
    } else if (op == "check") {
      execute_check(w);
    } else {
      bad("unknown step '" + op + "'");
    }
  }

  void run_cascade(EdgeId start, const std::string& label, std::optional<std::pair<VertexId, VertexId>> expect) {
    auto r = cascade_flip(std::move(emb_), start);
    emb_ = std::move(r.emb);
    std::string outcome;
    for (const auto& f : r.flips) {
      if (!outcome.empty()) outcome += ", ";
      outcome += pair_text(f.removed.first, f.removed.second) + "->" + pair_text(f.added.first, f.added.second);
    }
    auto last = r.flips.back().added;
    if (expect && !same_pair(last, expect->first, expect->second)) {
      fail(ErrorKind::pipeline, "cascade from " + label + " ended with " + pair_text(last.first, last.second) +
                                    ", expected " + pair_text(expect->first, expect->second) + " [" + outcome + "]");
    }
    result_.cascades.push_back(r.flips);
    record(StepKind::cascade, label, outcome);
  }

  void do_reorder(VertexId v, const std::vector<VertexId>& cuts, const std::vector<std::size_t>& perm) {
    auto rot = emb_.rotation(v);
    std::vector<std::size_t> cut_pos;
    for (const VertexId& c : cuts) {
      Dart d = dart(v, c);
      cut_pos.push_back(std::find(rot.begin(), rot.end(), d) - rot.begin());
    }
    std::vector<std::size_t> sorted = cut_pos;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != cut_pos) {
      // Accept any cyclic rotation of increasing positions.
      auto it = std::min_element(cut_pos.begin(), cut_pos.end());
      std::vector<std::size_t> rotated(it, cut_pos.end());
      rotated.insert(rotated.end(), cut_pos.begin(), it);
      if (!std::is_sorted(rotated.begin(), rotated.end())) {
        fail(ErrorKind::pipeline, "cut points at " + v.to_string() + " are not in rotation order");
      }
    }
    std::size_t k = cut_pos.size();
    if (perm.size() != k) bad("reorder needs one index per segment");
    std::vector<std::vector<Dart>> segs(k);
    std::size_t n = rot.size();
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t a = (cut_pos[t] + 1) % n;
      std::size_t b = (cut_pos[(t + 1) % k] + 1) % n;
      std::size_t p = a;
      do {
        segs[t].push_back(rot[p]);
        p = (p + 1) % n;
      } while (p != b);
    }
    std::vector<Dart> order;
    for (std::size_t t : perm) {
      if (t >= k) bad("segment index out of range");
      order.insert(order.end(), segs[t].begin(), segs[t].end());
    }
    emb_ = replace_rotation(std::move(emb_), v, order);
    std::string args = v.to_string() + " after";
    for (const auto& c : cuts) args += " " + c.to_string();
    args += " order";
    for (auto t : perm) args += " " + std::to_string(t);
    record(StepKind::replace_rotation, args);
  }

  // Corner t at v lies between rotation entries t and t+1; its face runs
  // through the dart v -> rot[t+1].
  void do_handle(VertexId v, VertexId t1a, VertexId t1b, const std::vector<VertexId>& join) {
    auto rot = emb_.rotation(v);
    std::size_t n = rot.size();
    auto face_at = [&](std::size_t t) { return face_of(emb_, rot[(t + 1) % n]); };
    std::optional<std::size_t> t1;
    for (std::size_t t = 0; t < n && !t1; ++t) {
      Face f = face_at(t);
      if (f.size() == 3 && f.contains(t1a) && f.contains(t1b)) t1 = t;
    }
    if (!t1) fail(ErrorKind::pipeline, "no triangle [" + v.to_string() + " " + t1a.to_string() + " " + t1b.to_string() + "]");
    for (std::size_t t2 = 0; t2 < n; ++t2) {
      if (t2 == *t1 || !face_at(t2).contains(join[0])) continue;
      for (std::size_t t3 = 0; t3 < n; ++t3) {
        if (t3 == *t1 || t3 == t2) continue;
        std::vector<std::size_t> ts{*t1, t2, t3};
        std::sort(ts.begin(), ts.end());
        bool holds = false;
        for (std::size_t k = 1; k < join.size(); ++k) holds = holds || face_at(t3).contains(join[k]);
        if (!holds) continue;
        std::vector<VertexId> cuts{emb_.head(rot[ts[0]]), emb_.head(rot[ts[1]]), emb_.head(rot[ts[2]])};
        EmbeddedGraph saved = emb_;
        do_reorder_silent(v, cuts);
        if (merged_face(join)) {
          std::string args = v.to_string() + " after";
          for (const auto& c : cuts) args += " " + c.to_string();
          record(StepKind::replace_rotation, args + " order 0 2 1");
          return;
        }
        emb_ = std::move(saved);
      }
    }
    fail(ErrorKind::pipeline, "no handle at " + v.to_string() + " puts all join vertices on one face");
  }

  void do_reorder_silent(VertexId v, const std::vector<VertexId>& cuts) {
    auto rot = emb_.rotation(v);
    std::size_t n = rot.size();
    std::vector<std::size_t> pos;
    for (const auto& c : cuts) pos.push_back(std::find(rot.begin(), rot.end(), dart(v, c)) - rot.begin());
    std::size_t i = pos[0], j = pos[1], k = pos[2];
    std::vector<Dart> s1, s2, s3;
    for (std::size_t p = (k + 1) % n;; p = (p + 1) % n) {
      s1.push_back(rot[p]);
      if (p == i) break;
    }
    for (std::size_t p = i + 1; p <= j; ++p) s2.push_back(rot[p]);
    for (std::size_t p = j + 1; p <= k; ++p) s3.push_back(rot[p]);
    std::vector<Dart> order = s1;
    order.insert(order.end(), s3.begin(), s3.end());
    order.insert(order.end(), s2.begin(), s2.end());
    emb_ = replace_rotation(std::move(emb_), v, order);
  }

  std::optional<Face> merged_face(const std::vector<VertexId>& join) const {
    for (Dart d : emb_.rotation(join[0])) {
      Face f = face_of(emb_, d);
      bool all = std::all_of(join.begin(), join.end(), [&](const VertexId& x) { return f.contains(x); });
      if (all) return f;
    }
    return std::nullopt;
  }

  void do_fan(VertexId hub, const std::vector<VertexId>& targets) {
    std::vector<VertexId> join{hub};
    join.insert(join.end(), targets.begin(), targets.end());
    auto f = merged_face(join);
    if (!f) fail(ErrorKind::pipeline, "no face holds " + hub.to_string() + " and all fan targets");
    for (const auto& t : targets) {
      if (emb_.adjacent(hub, t)) fail(ErrorKind::pipeline, "fan target " + t.to_string() + " already adjacent");
    }
    for (const VertexId& t : targets) {
      // Re-find the face: each chord splits it, the targets stay together
      // with the hub corner used first.
      auto g = merged_face({hub, t});
      Face face = *g;
      std::size_t i = std::find(face.vertices.begin(), face.vertices.end(), hub) - face.vertices.begin();
      std::size_t j = std::find(face.vertices.begin(), face.vertices.end(), t) - face.vertices.begin();
      emb_ = insert_chord(std::move(emb_), face, i, j);
      record(StepKind::chord, "in " + face.to_string() + " at " + std::to_string(i) + " " + std::to_string(j),
             "added " + pair_text(hub, t));
    }
  }

  struct Corner {
    std::size_t index;
    VertexId vertex;
    Dart anchor;
  };

  // Non-crossing chords of one face, tracked through the splits.
  void do_chords(const Face& face, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::vector<Corner>> polys(1);
    std::size_t n = face.size();
    for (std::size_t k = 0; k < n; ++k) polys[0].push_back({k, face.vertices[k], face.walk[(k + n - 1) % n].reverse()});
    for (auto [i, j] : pairs) {
      std::size_t which = polys.size();
      std::size_t a = 0, b = 0;
      for (std::size_t p = 0; p < polys.size() && which == polys.size(); ++p) {
        auto find = [&](std::size_t idx) {
          for (std::size_t k = 0; k < polys[p].size(); ++k) {
            if (polys[p][k].index == idx) return k;
          }
          return polys[p].size();
        };
        a = find(i);
        b = find(j);
        if (a < polys[p].size() && b < polys[p].size()) which = p;
      }
      if (which == polys.size()) bad("corners " + std::to_string(i) + " and " + std::to_string(j) + " share no face");
      auto poly = polys[which];
      if (a > b) std::swap(a, b);
      Face f = face_of(emb_, emb_.next(poly[a].anchor));
      std::size_t jb = std::find(f.walk.begin(), f.walk.end(), emb_.next(poly[b].anchor)) - f.walk.begin();
      emb_ = insert_chord(std::move(emb_), f, 0, jb);
      EdgeId e = static_cast<EdgeId>(emb_.edge_count()) - 1;
      Dart d1(e, Side::forward);
      record(StepKind::chord, "in " + f.to_string() + " at 0 " + std::to_string(jb),
             "added " + pair_text(poly[a].vertex, poly[b].vertex));
      std::vector<Corner> A(poly.begin(), poly.begin() + a + 1);
      A.push_back({poly[b].index, poly[b].vertex, d1.reverse()});
      A.insert(A.end(), poly.begin() + b + 1, poly.end());
      std::vector<Corner> B{{poly[a].index, poly[a].vertex, d1}};
      B.insert(B.end(), poly.begin() + a + 1, poly.begin() + b + 1);
      polys[which] = std::move(A);
      polys.push_back(std::move(B));
    }
  }

  void add_anchored_edge(VertexId p, VertexId q, VertexId a, VertexId b) {
    Dart da = dart(p, a);
    Dart db = dart(q, b);
    // Corner after da at p belongs to the face entered by reverse(next(da))...
    // i.e. the face through dart next(da) whose previous dart is reverse(da).
    Face fp = face_of(emb_, emb_.next(da));
    Face fq = face_of(emb_, emb_.next(db));
    bool same = std::find(fp.walk.begin(), fp.walk.end(), fq.walk.front()) != fp.walk.end();
    std::string args = pair_text(p, q) + " after " + a.to_string() + " " + b.to_string();
    if (same) {
      std::size_t i = 0;
      std::size_t j = std::find(fp.walk.begin(), fp.walk.end(), emb_.next(db)) - fp.walk.begin();
      emb_ = insert_chord(std::move(emb_), fp, i, j);
      record(StepKind::chord, args);
    } else {
      emb_ = bridge(std::move(emb_), fp, 0, fq, 0);
      record(StepKind::bridge, args);
    }
  }

  void execute_check(const std::vector<std::string>& w) {
    if (w.size() >= 3 && w[1] == "missing") {
      std::size_t want = index(w[2]);
      auto vs = emb_.vertices();
      std::size_t edges = 0;
      std::set<std::pair<VertexId, VertexId>> pairs;
      for (std::size_t e = 0; e < emb_.edge_count(); ++e) {
        Dart d(static_cast<EdgeId>(e), Side::forward);
        VertexId a = emb_.tail(d), b = emb_.head(d);
        pairs.insert({std::min(a, b), std::max(a, b)});
        ++edges;
      }
      std::size_t missing = vs.size() * (vs.size() - 1) / 2 - pairs.size();
      if (missing != want) {
        fail(ErrorKind::pipeline, std::to_string(missing) + " vertex pairs are nonadjacent, expected " + std::to_string(want));
      }
      record(StepKind::check, "missing " + std::to_string(want));
    } else if (w.size() == 5 && w[1] == "triangle") {
      VertexId a = vertex(w[2]), b = vertex(w[3]), c = vertex(w[4]);
      bool found = false;
      for (Dart x : emb_.darts_between(a, b)) {
        Face f = face_of(emb_, x);
        if (f.size() == 3 && f.vertices[2] == c) found = true;
      }
      if (!found) {
        fail(ErrorKind::pipeline, "no triangle [" + a.to_string() + " " + b.to_string() + " " + c.to_string() + "]");
      }
      record(StepKind::check, "triangle [" + a.to_string() + " " + b.to_string() + " " + c.to_string() + "]");
    } else if (w.size() >= 7 && w[1] == "face" && w[4] == "is" && w[5] == "[" && w.back() == "]") {
      Face f = face_through(vertex(w[2]), vertex(w[3]));
      std::vector<VertexId> want;
      for (std::size_t k = 6; k + 1 < w.size(); ++k) want.push_back(vertex(w[k]));
      bool match = false;
      if (want.size() == f.size()) {
        for (std::size_t shift = 0; shift < f.size() && !match; ++shift) {
          bool ok = true;
          for (std::size_t k = 0; k < f.size() && ok; ++k) ok = f.vertices[(k + shift) % f.size()] == want[k];
          match = ok;
        }
      }
      if (!match) fail(ErrorKind::pipeline, "face " + f.to_string() + " does not match the expected boundary");
      record(StepKind::check, "face " + f.to_string());
    } else {
      bad("usage: check missing N | check triangle A B C | check face X Y is [..]");
    }
  }

  const Script& script_;
  long long s_;
  int m_;
  const PipelineOptions& options_;
  PipelineResult& result_;
  EmbeddedGraph emb_;
  std::map<std::string, long long> lets_;
  std::size_t line_ = 0;
  long long chi_ = 0;
};

}  // namespace

PipelineResult run_script(const Script& script, const CurrentGraph& cg, long long s, long long n,
                          const PipelineOptions& options) {
  PipelineResult result;
  result.s = s;
  result.n = n;
  result.case_id = cg.case_id.value_or(0);
  DerivedEmbedding d = derive(cg);
  result.derived = euler_genus(d.emb);
  Interpreter interp(script, s, cg.modulus, options, result);
  interp.run(std::move(d.emb));
  result.report = verify_final(result.final, n);
  return result;
}

namespace {

Script load_script(std::string_view name) {
  auto text = fixture(name);
  if (!text) fail(ErrorKind::fixture, "surgery script " + std::string(name) + " is not available");
  return parse_script(*text, std::string(name));
}

}  // namespace

PipelineResult run_case11(long long s, const PipelineOptions& options) {
  CurrentGraph cg = build_case11(s);
  return run_script(load_script("case11.script"), cg, s, 12 * s + 11, options);
}

PipelineResult run_case2(long long s, const PipelineOptions& options) {
  CurrentGraph cg = build_case2(s);
  return run_script(load_script("case2.script"), cg, s, 12 * s + 14, options);
}

}  // namespace mapcolor
