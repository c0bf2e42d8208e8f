// mapcolor: check, derive and construct the Case 2 / Case 11 embeddings.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mapcolor/current_graph_io.hpp"
#include "mapcolor/derived.hpp"
#include "mapcolor/error.hpp"
#include "mapcolor/families.hpp"
#include "mapcolor/pipelines.hpp"
#include "mapcolor/rotation_io.hpp"

namespace fs = std::filesystem;
using namespace mapcolor;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

bool is_input_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::fixture:
    case ErrorKind::range:
    case ErrorKind::domain:
      return true;
    default:
      return false;
  }
}

CurrentGraph load_cg(const std::string& path, std::optional<long long> s) {
  std::string text = slurp(path);
  auto src = parse_current_graph_source(text);
  if (src.ladder && !s) throw InputError(path + " has a ladder; pass --s");
  return build_from_fragment(text, s.value_or(0));
}

int cmd_check(const std::string& path, std::optional<long long> s) {
  auto cg = load_cg(path, s);
  auto report = check_principles(cg);
  std::cout << report.to_string();
  return report.all_pass() ? kOk : kFail;
}

int cmd_log(const std::string& path, std::optional<long long> s) {
  auto cg = load_cg(path, s);
  std::cout << trace_log(cg).to_string() << "\n";
  return kOk;
}

int cmd_derive(const std::string& path, std::optional<long long> s, const std::string& out,
               bool faces) {
  auto cg = load_cg(path, s);
  auto d = derive(cg);
  emit(faces ? write_face_list(trace_faces(d.emb)) : write_rotation_text(d.emb), out);
  if (!out.empty()) std::cout << euler_genus(d.emb).to_string() << "\n";
  return kOk;
}

int cmd_construct(int case_id, long long s, const std::string& out) {
  auto cg = case_id == 11 ? build_case11(s) : build_case2(s);
  emit(write_current_graph(cg), out);
  return kOk;
}

int cmd_genus(const std::string& path, std::optional<long long> n) {
  auto emb = read_rotation_text(slurp(path));
  auto report = euler_genus(emb);
  if (n) {
    report = verify_final(emb, *n);
  }
  std::cout << report.to_string() << "\n";
  return kOk;
}

int cmd_faces(const std::string& path) {
  auto emb = read_rotation_text(slurp(path));
  std::cout << write_face_list(trace_faces(emb));
  return kOk;
}

struct SweepOptions {
  int case_id = 11;
  long long from = 0;
  long long to = 0;
  unsigned jobs = 0;
  std::string out_dir;
  bool snapshots = false;
};

int cmd_sweep(const SweepOptions& opt) {
  if (opt.from > opt.to) throw InputError("empty range");
  long long lo = family_minimum(opt.case_id);
  if (opt.from < lo) {
    throw Error(ErrorKind::range, "case " + std::to_string(opt.case_id) + " family starts at s=" +
                                      std::to_string(lo));
  }
  if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);

  std::size_t count = static_cast<std::size_t>(opt.to - opt.from + 1);
  std::vector<std::string> lines(count);
  std::vector<bool> pass(count, false);
  std::atomic<std::size_t> next{0};

  auto stem = [&](long long s) {
    return (fs::path(opt.out_dir) / ("case" + std::to_string(opt.case_id) + "_s" + std::to_string(s))).string();
  };

  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      long long s = opt.from + static_cast<long long>(i);
      PipelineOptions po;
      if (opt.snapshots && !opt.out_dir.empty()) {
        po.snapshot = [&, s](std::size_t k, const SurgeryStep&, const EmbeddedGraph& emb) {
          std::ostringstream name;
          name << stem(s) << "_step" << std::setw(3) << std::setfill('0') << k << ".rot";
          std::ofstream(name.str()) << write_rotation_text(emb);
        };
      }
      try {
        auto r = opt.case_id == 11 ? run_case11(s, po) : run_case2(s, po);
        lines[i] = r.verdict();
        pass[i] = lines[i].ends_with("PASS");
        if (!opt.out_dir.empty()) {
          std::ofstream(stem(s) + ".rot") << write_rotation_text(r.final);
          std::ofstream(stem(s) + ".trace") << r.trace();
        }
      } catch (const Error& e) {
        long long n = 12 * s + (opt.case_id == 11 ? 11 : 14);
        lines[i] = "CASE " + std::to_string(opt.case_id) + " s=" + std::to_string(s) + " n=" +
                   std::to_string(n) + " FAIL " + e.what();
      }
    }
  };

  unsigned jobs = opt.jobs ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  for (const auto& l : lines) std::cout << l << "\n";
  return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; }) ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-genus embeddings of K_{12s+11} and K_{12s+14} from index-1 current graphs"};
  app.require_subcommand(1);

  std::string path, out;
  std::optional<long long> s_opt, n_opt;
  bool faces = false;

  auto* check = app.add_subcommand("check", "Check construction principles C1-C5");
  check->add_option("cg", path, "current-graph file")->required();
  check->add_option("--s", s_opt, "family parameter for ladder fragments");

  auto* log = app.add_subcommand("log", "Print the log of an index-1 current graph");
  log->add_option("cg", path, "current-graph file")->required();
  log->add_option("--s", s_opt, "family parameter for ladder fragments");

  auto* der = app.add_subcommand("derive", "Write the derived embedding as rotations");
  der->add_option("cg", path, "current-graph file")->required();
  der->add_option("--s", s_opt, "family parameter for ladder fragments");
  der->add_option("-o,--output", out, "output file");
  der->add_flag("--faces", faces, "write the face list instead");

  int case_id = 11;
  long long s = 0;
  auto* con = app.add_subcommand("construct", "Write the family current graph");
  con->add_option("--case", case_id, "2 or 11")->required()->check(CLI::IsMember({2, 11}));
  con->add_option("--s", s, "family parameter")->required();
  con->add_option("-o,--output", out, "output file");

  auto* gen = app.add_subcommand("genus", "Genus report of a rotation system");
  gen->add_option("rot", path, "rotation file")->required();
  gen->add_option("--complete", n_opt, "also verify a simple K_n at minimum genus");

  auto* fac = app.add_subcommand("faces", "Face list of a rotation system");
  fac->add_option("rot", path, "rotation file")->required();

  SweepOptions sw;
  auto* swp = app.add_subcommand("sweep", "Run the surgery pipeline over a range of s");
  swp->add_option("--case", sw.case_id, "2 or 11")->required()->check(CLI::IsMember({2, 11}));
  swp->add_option("--from", sw.from, "first s")->required();
  swp->add_option("--to", sw.to, "last s")->required();
  swp->add_option("-j,--jobs", sw.jobs, "worker threads (default: all cores)");
  swp->add_option("--out", sw.out_dir, "write final rotations and step traces here");
  swp->add_flag("--emit-snapshots", sw.snapshots, "dump the embedding after every step (needs --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(path, s_opt);
    if (*log) return cmd_log(path, s_opt);
    if (*der) return cmd_derive(path, s_opt, out, faces);
    if (*con) return cmd_construct(case_id, s, out);
    if (*gen) return cmd_genus(path, n_opt);
    if (*fac) return cmd_faces(path);
    if (*swp) return cmd_sweep(sw);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << " error: " << e.what() << "\n";
    return is_input_kind(e.kind()) ? kInput : kFail;
  }
  return kInput;
}
