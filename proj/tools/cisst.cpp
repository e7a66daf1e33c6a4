// Copyright 2026 The cisst Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cisst: construct, verify, bound and count completely independent S-Steiner
// trees.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or constructor error,
// 3 input parse error, 4 internal inconsistency.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cisst/bipartite.hpp"
#include "cisst/complete.hpp"
#include "cisst/exact.hpp"
#include "cisst/io.hpp"
#include "cisst/verify.hpp"

namespace {

using cisst::BipartiteLabeling;
using cisst::Errc;
using cisst::Error;
using json = nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kParse = 3, kInternal = 4 };

// Raised for malformed files so they map to exit 3 regardless of the
// library error code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Manifest {
  std::string command;
  json parameters = json::object();
  json result = json::object();
  std::string digest_input;

  std::string render(double wall_ms) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(cisst::fnv1a(digest_input)));
    json out;
    out["command"] = command;
    out["input_digest"] = hex;
    out["parameters"] = parameters;
    out["result"] = result;
    out["wall_ms"] = wall_ms;
    return out.dump();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

cisst::GraphDocument load_graph(const std::string& path, Manifest& m) {
  const std::string text = slurp(path);
  m.digest_input += text;
  try {
    return cisst::read_graph_json(text);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string target;
  int n = 0;
  int m1 = 0;
  int m2 = 0;
  std::string terminals;
  std::string out_dir = "cisst_out";
  std::string prefix = "family";
};

int run_construct(const ConstructArgs& a, Manifest& m) {
  std::optional<BipartiteLabeling> labeling;
  cisst::TreeFamily f = [&] {
    if (a.target == "complete") {
      m.parameters = {{"target", "complete"}, {"n", a.n}, {"terminals", a.terminals}};
      if (a.terminals.empty()) return cisst::build_cists_complete(a.n);
      return cisst::build_cissts_complete(
          a.n, cisst::TerminalSet(cisst::parse_vertex_list(a.terminals, nullptr)));
    }
    m.parameters = {{"target", "bipartite"}, {"m1", a.m1}, {"m2", a.m2}, {"terminals", a.terminals}};
    labeling.emplace(a.m1, a.m2);
    if (a.terminals.empty()) return cisst::build_cists_bipartite(a.m1, a.m2);
    return cisst::assemble_max_family(
        *labeling, cisst::TerminalSet(cisst::parse_vertex_list(a.terminals, &*labeling)));
  }();
  m.digest_input += m.parameters.dump();

  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  spit(dir / (a.prefix + ".graph.json"),
       cisst::write_graph_json({f.host, labeling, f.terminals}));
  spit(dir / (a.prefix + ".family.json"), cisst::write_family_json(f));
  const BipartiteLabeling* lp = labeling ? &*labeling : nullptr;
  for (std::size_t k = 0; k < f.size(); ++k)
    spit(dir / (a.prefix + ".tree" + std::to_string(k + 1) + ".dot"), cisst::tree_dot(f, k, lp));
  spit(dir / (a.prefix + ".dot"), cisst::family_dot(f, lp));

  std::cout << f.size() << " trees\n";
  m.result = {{"trees", f.size()}, {"out_dir", a.out_dir}};
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string family;
  std::string mode = "both";
};

int run_verify(const VerifyArgs& a, Manifest& m) {
  m.parameters = {{"graph", a.graph}, {"family", a.family}, {"mode", a.mode}};
  cisst::GraphDocument g = load_graph(a.graph, m);
  const std::string text = slurp(a.family);
  m.digest_input += text;
  cisst::FamilyDocument fd = [&] {
    try {
      return cisst::read_family_json(text);
    } catch (const Error& e) {
      throw InputError(a.family + ": " + e.what());
    }
  }();
  if (!fd.terminals.fits(g.graph)) throw InputError(a.family + ": terminals: outside the host");
  cisst::TreeFamily f{g.graph, fd.terminals, std::move(fd.trees)};

  cisst::VerifyResult def, chr;
  try {
    if (a.mode != "characterization") def = cisst::verify_definitional(f);
    if (a.mode != "definitional") chr = cisst::verify_characterization(f);
  } catch (const Error& e) {
    std::cout << "FAIL MALFORMED_TREE " << e.what() << "\n";
    m.result = {{"status", "malformed"}, {"detail", e.what()}};
    return kVerifyFailed;
  }

  if (a.mode == "both" && def.has_value() != chr.has_value()) {
    std::cout << "INCONSISTENT definitional="
              << (def ? def->describe() : std::string("ok"))
              << " characterization=" << (chr ? chr->describe() : std::string("ok")) << "\n";
    m.result = {{"status", "inconsistent"}};
    return kInternal;
  }
  const cisst::VerifyResult& v = a.mode == "characterization" ? chr : def;
  if (v) {
    std::cout << "FAIL " << v->describe() << "\n";
    if (a.mode == "both" && chr && !(*chr == *def))
      std::cout << "     characterization: " << chr->describe() << "\n";
    m.result = {{"status", "fail"}, {"violation", v->describe()}};
    return kVerifyFailed;
  }
  std::cout << "OK " << f.size() << " trees are completely independent\n";
  m.result = {{"status", "ok"}, {"trees", f.size()}};
  return kOk;
}

// --- bound ------------------------------------------------------------------

struct BoundArgs {
  int m1 = 0;
  int m2 = 0;
  int s = 0;
};

int run_bound(const BoundArgs& a, Manifest& m) {
  m.parameters = {{"m1", a.m1}, {"m2", a.m2}, {"s", a.s}};
  m.digest_input += m.parameters.dump();
  if (a.m1 < 2 || a.m1 > a.m2 || a.s < 2 || a.s > a.m1 + a.m2)
    throw Error(Errc::out_of_range, "need 2 <= m1 <= m2 and 2 <= s <= m1 + m2");
  const cisst::BoundReport r = cisst::bound_report(a.m1, a.m2, a.s);
  std::printf("K_{%d,%d}, s = %d\n", a.m1, a.m2, a.s);
  std::printf("%4s  %-14s %5s\n", "i", "case", "f(i)");
  json rows = json::array();
  for (const auto& e : r.per_i) {
    std::printf("%4d  %-14s %5d\n", e.i, cisst::to_string(e.label).c_str(), e.value);
    rows.push_back({{"i", e.i}, {"case", cisst::to_string(e.label)}, {"f", e.value}});
  }
  std::printf("min = %d (at i = %d)\n", r.minimum, r.argmin_i);
  if (r.floor_bound_applies)
    std::printf("floor bound m1 - floor((m1+s-m2+2)/3) = %d\n", r.closed_form_floor);
  m.result = {{"per_i", rows}, {"min", r.minimum}, {"argmin_i", r.argmin_i}};
  if (r.floor_bound_applies) m.result["floor_bound"] = r.closed_form_floor;
  return kOk;
}

// --- exact ------------------------------------------------------------------

struct ExactArgs {
  std::string graph;
  int complete = 0;
  std::vector<int> bipartite;
  std::string terminals;
  int all_subsets = 0;
  int max_trees = 0;
  std::uint64_t node_budget = cisst::SearchConfig{}.node_budget;
  long long time_budget_ms = 0;
  int jobs = 1;
  std::string engine = "blocks";
  bool no_symmetry = false;
  std::string witness;
};

void print_result(const cisst::SearchResult& r) {
  if (r.is_exact())
    std::cout << r.value() << "\n";
  else
    std::cout << "INDETERMINATE lower=" << r.lower << " upper=" << r.upper << " (" << r.note
              << ")\n";
}

json result_json(const cisst::SearchResult& r) {
  json out = {{"status", r.is_exact() ? "exact" : "indeterminate"},
              {"lower", r.lower},
              {"upper", r.upper},
              {"nodes", r.nodes}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

int run_exact(const ExactArgs& a, Manifest& m) {
  const int sources = !a.graph.empty() + (a.complete > 0) + !a.bipartite.empty();
  if (sources != 1) throw Error(Errc::out_of_range, "give exactly one of --graph, --complete, --bipartite");

  cisst::GraphDocument doc;
  if (!a.graph.empty()) {
    doc = load_graph(a.graph, m);
  } else if (a.complete > 0) {
    doc.graph = cisst::make_complete(a.complete);
  } else {
    if (a.bipartite.size() != 2) throw Error(Errc::out_of_range, "--bipartite takes M1,M2");
    auto b = cisst::make_complete_bipartite(a.bipartite[0], a.bipartite[1]);
    doc.graph = b.graph;
    doc.labeling = b.labeling;
  }

  cisst::SearchConfig cfg;
  if (a.max_trees > 0) cfg.max_trees = a.max_trees;
  cfg.node_budget = a.node_budget;
  if (a.time_budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(a.time_budget_ms);
  cfg.jobs = a.jobs;
  cfg.use_symmetry = !a.no_symmetry;
  cfg.engine = a.engine == "tree-packing" ? cisst::SearchEngine::tree_packing
                                          : cisst::SearchEngine::blocks;
  cfg.validate();

  m.parameters = {{"graph", a.graph},          {"complete", a.complete},
                  {"bipartite", a.bipartite},  {"terminals", a.terminals},
                  {"all_subsets", a.all_subsets}, {"max_trees", a.max_trees},
                  {"node_budget", a.node_budget}, {"time_budget_ms", a.time_budget_ms},
                  {"engine", a.engine},        {"symmetry", !a.no_symmetry}};
  m.digest_input += m.parameters.dump();

  if (a.all_subsets > 0) {
    if (!a.terminals.empty()) throw Error(Errc::out_of_range, "--all-subsets excludes --terminals");
    const cisst::GeneralizedResult g = cisst::exact_generalized_kappa_star(doc.graph, a.all_subsets, cfg);
    print_result(g.result);
    m.result = result_json(g.result);
    m.result["minimizer"] = g.minimizer;
    m.result["subsets_searched"] = g.subsets_searched;
    return kOk;
  }

  const BipartiteLabeling* lp = doc.labeling ? &*doc.labeling : nullptr;
  std::optional<cisst::TerminalSet> s = doc.terminals;
  if (!a.terminals.empty()) s.emplace(cisst::parse_vertex_list(a.terminals, lp));
  if (!s) throw Error(Errc::out_of_range, "no terminals given");
  if (!s->fits(doc.graph)) throw Error(Errc::out_of_range, "terminal outside the host");

  const cisst::SearchResult r = cisst::exact_kappa_star(doc.graph, *s, cfg);
  print_result(r);
  m.result = result_json(r);
  if (!a.witness.empty())
    spit(a.witness, cisst::write_family_json({doc.graph, *s, r.witness}));
  return kOk;
}

int default_jobs() {
  if (const char* env = std::getenv("CISST_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    std::cerr << "cisst: ignoring malformed CISST_JOBS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely independent S-Steiner trees: construct, verify, bound, count"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a family and write JSON and DOT files");
  construct->add_option("target", ca.target, "complete | bipartite")
      ->required()
      ->check(CLI::IsMember({"complete", "bipartite"}));
  construct->add_option("--n", ca.n, "Order of K_n");
  construct->add_option("--m1", ca.m1, "Smaller side of K_{m1,m2}");
  construct->add_option("--m2", ca.m2, "Larger side of K_{m1,m2}");
  construct->add_option("--s,--terminals", ca.terminals, "Terminal ids or labels, e.g. 0,1,2 or x1,y2");
  construct->add_option("--out", ca.out_dir, "Output directory")->capture_default_str();
  construct->add_option("--prefix", ca.prefix, "Output file prefix")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a family for complete independence");
  verify->add_option("--graph", va.graph, "Host graph JSON")->required();
  verify->add_option("--family", va.family, "Family JSON")->required();
  verify->add_option("--mode", va.mode, "definitional | characterization | both")
      ->check(CLI::IsMember({"definitional", "characterization", "both"}))
      ->capture_default_str();

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Tabulate the lower bound f(i) for K_{m1,m2}");
  bound->add_option("--m1", ba.m1)->required();
  bound->add_option("--m2", ba.m2)->required();
  bound->add_option("--s", ba.s, "Number of terminals")->required();

  ExactArgs ea;
  ea.jobs = default_jobs();
  auto* exact = app.add_subcommand("exact", "Exhaustive search for the packing number");
  exact->add_option("--graph", ea.graph, "Host graph JSON");
  exact->add_option("--complete", ea.complete, "Use K_n");
  exact->add_option("--bipartite", ea.bipartite, "Use K_{m1,m2}, given as M1,M2")->delimiter(',');
  exact->add_option("--s,--terminals", ea.terminals, "Terminal ids or labels");
  exact->add_option("--all-subsets", ea.all_subsets, "Minimize over all k-subsets");
  exact->add_option("--max-trees", ea.max_trees, "Stop once this many trees are found");
  exact->add_option("--node-budget", ea.node_budget)->capture_default_str();
  exact->add_option("--time-budget-ms", ea.time_budget_ms, "Wall-clock cap (not reproducible)");
  exact->add_option("--jobs", ea.jobs, "Worker threads (default from CISST_JOBS)")
      ->capture_default_str();
  exact->add_option("--engine", ea.engine, "blocks | tree-packing")
      ->check(CLI::IsMember({"blocks", "tree-packing"}))
      ->capture_default_str();
  exact->add_flag("--no-symmetry", ea.no_symmetry, "Search every k-subset");
  exact->add_option("--witness", ea.witness, "Write the witness family JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Manifest m;
  const auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*construct) {
      m.command = "construct";
      code = run_construct(ca, m);
    } else if (*verify) {
      m.command = "verify";
      code = run_verify(va, m);
    } else if (*bound) {
      m.command = "bound";
      code = run_bound(ba, m);
    } else {
      m.command = "exact";
      code = run_exact(ea, m);
    }
  } catch (const InputError& e) {
    std::cerr << "cisst: " << e.what() << "\n";
    code = kParse;
  } catch (const Error& e) {
    std::cerr << "cisst: " << e.what() << "\n";
    code = kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "cisst: internal error: " << e.what() << "\n";
    code = kInternal;
  } catch (const std::exception& e) {
    std::cerr << "cisst: " << e.what() << "\n";
    code = kUsage;
  }
  if (code != kOk && m.result.empty()) m.result = {{"exit", code}};

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const std::string rendered = m.render(wall_ms);
  if (manifest_path.empty()) {
    std::cerr << "manifest: " << rendered << "\n";
  } else {
    try {
      spit(manifest_path, rendered + "\n");
    } catch (const std::exception& e) {
      std::cerr << "cisst: " << e.what() << "\n";
    }
  }
  return code;
}
