// pdmatch: solve, verify, classify, generate and benchmark PD-matching instances.
//
// Exit codes: 0 ok, 1 malformed input, 2 class mismatch, 3 budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdmatch/bench.hpp"
#include "pdmatch/classify.hpp"
#include "pdmatch/dispatch.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/generators.hpp"
#include "pdmatch/serialize.hpp"

namespace {

using namespace pdmatch;
using nlohmann::json;

enum Exit { kOk = 0, kMalformed = 1, kClassMismatch = 2, kBudget = 3 };

struct Globals {
  std::string input, output, algorithm = "auto", machine_order, tiebreak = "low", format = "json";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
};

struct GenerateArgs {
  std::string family, values, triples, tuples, name, meta;
  std::size_t n = 0, m = 0, t = 1, k = 1, count = 1, param = 0;
  Tolerance max_tol = 4, bound = 0, k1 = 1, k2 = 3;
  double zero_prob = 0.0;
  bool complete = false;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw ParseError("no input file given (use --input)");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& s, char sep = ',') {
  std::vector<T> out;
  for (const std::string& part : split(s, sep)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size() || (std::is_unsigned_v<T> && v < 0)) throw std::invalid_argument(part);
      out.push_back(static_cast<T>(v));
    } catch (const std::logic_error&) {
      throw ParseError("not an integer list entry: '" + part + "'");
    }
  }
  return out;
}

TieBreak parse_tiebreak(const std::string& s) {
  if (s == "low" || s == "lowest-index-first") return TieBreak::LowestIndexFirst;
  if (s == "high" || s == "highest-index-first") return TieBreak::HighestIndexFirst;
  throw ParseError("unknown tiebreak '" + s + "' (expected low or high)");
}

SolveOptions solve_options(const Globals& g) {
  SolveOptions o;
  o.budget = g.budget;
  o.greedy.machine_order = parse_list<std::size_t>(g.machine_order);
  o.greedy.job_tiebreak = parse_tiebreak(g.tiebreak);
  o.global.job_tiebreak = o.greedy.job_tiebreak;
  o.global.machine_tiebreak = o.greedy.job_tiebreak;
  return o;
}

std::string row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t c = 0; c < cells.size(); ++c) out += (c ? "," : "") + cells[c];
  return out + "\n";
}

int cmd_solve(const Globals& g) {
  const Instance inst = parse_instance(read_file(g.input));
  const SolveReport report = solve_with(inst, g.algorithm, solve_options(g));
  const std::string matching = serialize(report.matching);
  std::string summary;
  if (g.format == "csv") {
    summary = row({"algorithm", "size", "optimal", "elapsed_us"}) +
              row({report.algorithm, std::to_string(report.matching.size()), report.optimal ? "true" : "false",
                   std::to_string(report.elapsed.count())});
  } else {
    summary = json{{"algorithm", report.algorithm},
                   {"size", report.matching.size()},
                   {"optimal", report.optimal},
                   {"elapsed_us", report.elapsed.count()}}
                  .dump() +
              "\n";
  }
  if (g.output.empty() || g.output == "-") {
    std::cout << matching;
    std::cerr << summary;
  } else {
    write_output(g.output, matching);
    std::cout << summary;
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& matching_path) {
  const Instance inst = parse_instance(read_file(g.input));
  const Matching matching = parse_matching(read_file(matching_path));
  const ValidityReport report = verify(inst, matching);
  json out = to_json(report);
  if (report.valid) {
    out["maximal"] = is_maximal(inst, matching);
    out["strongly_maximal"] = is_strongly_maximal(inst, matching);
  }
  if (g.format == "csv") {
    write_output(g.output, row({"valid", "violations", "maximal", "strongly_maximal"}) +
                               row({report.valid ? "true" : "false", std::to_string(report.violations.size()),
                                    report.valid ? (out["maximal"].get<bool>() ? "true" : "false") : "",
                                    report.valid ? (out["strongly_maximal"].get<bool>() ? "true" : "false") : ""}));
  } else {
    write_output(g.output, out.dump(2) + "\n");
  }
  return report.valid ? kOk : kMalformed;
}

int cmd_classify(const Globals& g) {
  const Instance inst = parse_instance(read_file(g.input));
  const ClassReport report = classify(inst);
  if (g.format == "csv") {
    write_output(g.output, row({"n", "m", "class"}) +
                               row({std::to_string(inst.jobs()), std::to_string(inst.machines()), class_label(report)}));
  } else {
    write_output(g.output, to_json(report).dump(2) + "\n");
  }
  return kOk;
}

// Groups are separated by ';' or '/'.
std::vector<std::string> split_groups(std::string text) {
  std::replace(text.begin(), text.end(), '/', ';');
  return split(text, ';');
}

TripleSystem parse_triples(const std::string& text, std::size_t k) {
  TripleSystem ts{k, {}};
  for (const std::string& part : split_groups(text)) {
    const auto v = parse_list<std::size_t>(part);
    if (v.size() != 3) throw ParseError("triple '" + part + "' does not have three entries");
    ts.triples.push_back({v[0], v[1], v[2]});
  }
  return ts;
}

TupleSystem parse_tuples(const std::string& text, std::size_t d, std::size_t k) {
  TupleSystem ts{d, k, {}};
  for (const std::string& part : split_groups(text)) ts.tuples.push_back(parse_list<std::size_t>(part));
  return ts;
}

json triples_json(const std::vector<std::array<std::size_t, 3>>& triples) {
  json out = json::array();
  for (const auto& tr : triples) out.push_back({tr[0], tr[1], tr[2]});
  return out;
}

int cmd_generate(const Globals& g, const GenerateArgs& a) {
  const std::string& f = a.family;
  const auto values = parse_list<Tolerance>(a.values);
  Instance inst;
  if (f == "random") {
    inst = gen_random(a.n, a.m, a.max_tol, a.zero_prob, g.seed);
  } else if (f == "mono") {
    inst = values.empty() ? gen_monotonous(a.n, a.m, a.max_tol, g.seed)
                          : gen_mono_tolerance_set(a.n, a.m, values, g.seed);
  } else if (f == "udep") {
    inst = gen_udep(a.n, a.m, a.max_tol, a.complete, g.seed);
  } else if (f == "udep-mono") {
    inst = gen_udep_mono(a.n, a.m, a.max_tol, g.seed);
  } else if (f == "vdep") {
    inst = gen_vdep(a.n, a.m, a.max_tol, a.zero_prob, g.seed);
  } else if (f == "tolset") {
    inst = gen_tolerance_set(a.n, a.m, values, g.seed);
  } else if (f == "types") {
    inst = gen_types(a.n, a.m, a.t, a.max_tol, g.seed);
  } else if (f == "3partition") {
    inst = gen_3partition(values, a.bound, a.k);
  } else if (f == "3dm") {
    const TripleSystem ts = a.triples.empty() ? gen_triple_system(a.k, a.t, g.seed) : parse_triples(a.triples, a.k);
    Reduction3dm r = gen_3dm(ts);
    if (!a.meta.empty()) {
      json roles = json::array();
      for (const JobRole& role : r.roles) {
        const char* kind = role.kind == JobRole::Kind::YElement   ? "y"
                           : role.kind == JobRole::Kind::ZElement ? "z"
                                                                  : "dummy";
        roles.push_back({{"kind", kind}, {"element", role.element}});
      }
      write_output(a.meta, json{{"k", ts.k}, {"roles", roles}, {"machine_triples", triples_json(r.machine_triples)}}
                               .dump(2) +
                               "\n");
    }
    inst = std::move(r.instance);
  } else if (f == "ddm") {
    const auto d = static_cast<std::size_t>(a.k2);
    const TupleSystem ts = a.tuples.empty() ? gen_tuple_system(d, a.k, a.t, g.seed) : parse_tuples(a.tuples, d, a.k);
    inst = gen_ddm(ts, a.k1, a.k2);
  } else if (f == "fixture") {
    inst = fixture(a.name, a.param);
  } else {
    throw ParseError("unknown family '" + f + "'");
  }
  write_output(g.output, serialize(inst));
  return kOk;
}

int cmd_bench(const Globals& g, const GenerateArgs& a, const std::string& algorithms) {
  BenchSpec spec;
  if (!g.input.empty()) {
    json j;
    try {
      j = json::parse(read_file(g.input));
    } catch (const json::parse_error& ex) {
      throw ParseError(std::string("bench spec: ") + ex.what());
    }
    spec = parse_bench_spec(j);
  } else if (!a.family.empty()) {
    CorpusEntry e;
    e.family = a.family;
    e.count = a.count;
    e.seed = g.seed;
    e.n = a.n;
    e.m = a.m;
    e.t = a.t;
    e.k = a.k;
    e.max_tol = a.max_tol;
    e.zero_prob = a.zero_prob;
    e.complete = a.complete;
    e.values = parse_list<Tolerance>(a.values);
    e.bound = a.bound;
    e.k1 = a.k1;
    e.k2 = a.k2;
    e.name = a.name;
    if (a.family == "fixture") e.params = {a.param};
    spec.corpus.push_back(std::move(e));
  }
  if (!algorithms.empty()) {
    spec.algorithms = split(algorithms, ',');
  } else if (spec.algorithms.empty()) {
    spec.algorithms = {g.algorithm};
  }
  for (const std::string& algo : spec.algorithms) {
    const auto& names = algorithm_names();
    if (std::find(names.begin(), names.end(), algo) == names.end()) throw ParseError("unknown algorithm '" + algo + "'");
  }
  if (g.budget) spec.oracle_budget = *g.budget;
  spec.options = solve_options(g);
  spec.options.budget.reset();

  const auto records = run_bench(spec);
  const std::string report = g.format == "csv" ? bench_csv(records) : bench_json(records).dump(2) + "\n";
  std::ostream& summary_out = (g.output.empty() || g.output == "-") ? std::cerr : std::cout;
  write_output(g.output, report);
  for (const AlgorithmSummary& s : summarize(records)) {
    summary_out << s.algorithm << ": runs=" << s.runs << " failures=" << s.failures << " compared=" << s.compared
                << " min_ratio=" << s.min_ratio << " mean_ratio=" << s.mean_ratio << "\n";
  }
  const bool all_failed = !records.empty() && std::all_of(records.begin(), records.end(),
                                                          [](const BenchRecord& r) { return !r.error.empty(); });
  return all_failed ? kMalformed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum PD-matching solver"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "Instance file (bench: corpus spec JSON)");
  app.add_option("--output", g.output, "Output file (default stdout)");
  app.add_option("--algorithm", g.algorithm, "Algorithm name, or auto")
      ->check(CLI::IsMember(algorithm_names()));
  app.add_option("--seed", g.seed, "Generator seed");
  app.add_option("--budget", g.budget, "Enumeration budget");
  app.add_option("--machine-order", g.machine_order, "Greedy machine order, e.g. 1,0");
  app.add_option("--tiebreak", g.tiebreak, "Tie-break among equal tolerances: low or high");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto* solve = app.add_subcommand("solve", "Solve an instance and write the matching");
  std::string matching_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a matching against an instance");
  verify_cmd->add_option("--matching", matching_path, "Matching file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Report instance classes");

  GenerateArgs gen;
  std::string algorithms;
  auto add_family_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", gen.n, "Jobs");
    cmd->add_option("--m", gen.m, "Machines");
    cmd->add_option("--max-tol", gen.max_tol, "Largest tolerance");
    cmd->add_option("--zero-prob", gen.zero_prob, "Probability of a forbidden entry");
    cmd->add_option("--values", gen.values, "Comma-separated values (tolerance set or 3-partition multiset)");
    cmd->add_option("--B", gen.bound, "3-partition target sum");
    cmd->add_option("--k", gen.k, "3-partition k, or per-axis size for 3dm/ddm");
    cmd->add_option("--t", gen.t, "Type count, or number of triples/tuples");
    cmd->add_option("--k1", gen.k1, "ddm low tolerance");
    cmd->add_option("--k2", gen.k2, "ddm high tolerance (and tuple arity)");
    cmd->add_option("--name", gen.name, "Fixture name: IR, TIGHT, MONOBAD, 3PART-EXAMPLE");
    cmd->add_option("--param", gen.param, "Fixture parameter");
    cmd->add_flag("--complete", gen.complete, "udep: every job allowed on every machine");
  };
  auto* generate = app.add_subcommand("generate", "Emit a generated instance");
  generate->add_option("--family", gen.family, "random|mono|udep|udep-mono|vdep|tolset|types|3partition|3dm|ddm|fixture")
      ->required();
  generate->add_option("--triples", gen.triples, "3dm triples, e.g. 0,0,0;1,1,1 or 0,0,0/1,1,1");
  generate->add_option("--tuples", gen.tuples, "ddm tuples, e.g. 0,0,0;1,1,1 or 0,0,0/1,1,1");
  generate->add_option("--meta", gen.meta, "3dm: write job roles and machine triples here");
  add_family_options(generate);

  auto* bench = app.add_subcommand("bench", "Run algorithms over a generated corpus");
  bench->add_option("--family", gen.family, "Single-family corpus instead of --input spec");
  bench->add_option("--count", gen.count, "Instances in the single-family corpus");
  bench->add_option("--algorithms", algorithms, "Comma-separated algorithm names");
  add_family_options(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*solve) return cmd_solve(g);
    if (*verify_cmd) return cmd_verify(g, matching_path);
    if (*classify_cmd) return cmd_classify(g);
    if (*generate) return cmd_generate(g, gen);
    if (*bench) return cmd_bench(g, gen, algorithms);
  } catch (const ClassMismatch& e) {
    std::cerr << "class mismatch: " << e.what() << "\n";
    return kClassMismatch;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
