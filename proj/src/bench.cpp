#include "pdmatch/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "pdmatch/classify.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/generators.hpp"
#include "pdmatch/oracle.hpp"
#include "pdmatch/serialize.hpp"

namespace pdmatch {

namespace {

using nlohmann::json;

const std::set<std::string> kFamilies{"random", "mono",    "udep",    "udep-mono",  "vdep", "tolset", "mono-tolset",
                                      "types",  "fixture", "3partition", "3dm",     "ddm"};

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

CorpusEntry parse_entry(const json& j) {
  static const std::set<std::string> known{"family", "count", "seed",   "n", "m",  "t",  "k",    "max_tol", "zero_prob",
                                           "complete", "values", "B", "k1", "k2", "name", "params"};
  if (!j.is_object()) throw ParseError("corpus entry must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ParseError("unknown corpus field '" + key + "'");
  }
  CorpusEntry e;
  read(j, "family", e.family);
  if (!kFamilies.count(e.family)) throw ParseError("unknown generator family '" + e.family + "'");
  read(j, "count", e.count);
  read(j, "seed", e.seed);
  read(j, "n", e.n);
  read(j, "m", e.m);
  read(j, "t", e.t);
  read(j, "k", e.k);
  read(j, "max_tol", e.max_tol);
  read(j, "zero_prob", e.zero_prob);
  read(j, "complete", e.complete);
  read(j, "values", e.values);
  read(j, "B", e.bound);
  read(j, "k1", e.k1);
  read(j, "k2", e.k2);
  read(j, "name", e.name);
  read(j, "params", e.params);
  return e;
}

Instance generate(const CorpusEntry& e, std::uint64_t seed) {
  const std::string& f = e.family;
  if (f == "random") return gen_random(e.n, e.m, e.max_tol, e.zero_prob, seed);
  if (f == "mono") return gen_monotonous(e.n, e.m, e.max_tol, seed);
  if (f == "udep") return gen_udep(e.n, e.m, e.max_tol, e.complete, seed);
  if (f == "udep-mono") return gen_udep_mono(e.n, e.m, e.max_tol, seed);
  if (f == "vdep") return gen_vdep(e.n, e.m, e.max_tol, e.zero_prob, seed);
  if (f == "tolset") return gen_tolerance_set(e.n, e.m, e.values, seed);
  if (f == "mono-tolset") return gen_mono_tolerance_set(e.n, e.m, e.values, seed);
  if (f == "types") return gen_types(e.n, e.m, e.t, e.max_tol, seed);
  if (f == "3partition") return gen_3partition(e.values, e.bound, e.k);
  if (f == "3dm") return gen_3dm(gen_triple_system(e.k, e.t, seed)).instance;
  if (f == "ddm") {
    return gen_ddm(gen_tuple_system(static_cast<std::size_t>(e.k2), e.k, e.t, seed), e.k1, e.k2);
  }
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

std::optional<std::size_t> oracle_size(const Instance& inst, std::uint64_t budget) {
  try {
    return oracle_enumerate_assignments(inst, budget).size();
  } catch (const BudgetExceeded&) {
  }
  try {
    return oracle_threshold_vectors(inst, std::max<std::uint64_t>(1, budget / 1000)).size();
  } catch (const BudgetExceeded&) {
  }
  return std::nullopt;
}

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

}  // namespace

BenchSpec parse_bench_spec(const json& j) {
  if (!j.is_object()) throw ParseError("bench spec must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "corpus" && key != "algorithms" && key != "oracle_budget") {
      throw ParseError("unknown bench spec field '" + key + "'");
    }
  }
  BenchSpec spec;
  try {
    if (j.contains("corpus")) {
      for (const auto& e : j.at("corpus")) spec.corpus.push_back(parse_entry(e));
    }
    read(j, "algorithms", spec.algorithms);
    read(j, "oracle_budget", spec.oracle_budget);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bench spec: ") + ex.what());
  }
  return spec;
}

std::vector<NamedInstance> build_corpus(const std::vector<CorpusEntry>& corpus) {
  std::vector<NamedInstance> out;
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const CorpusEntry& e = corpus[idx];
    const std::string prefix = e.family + "-" + std::to_string(idx) + "-";
    if (e.family == "fixture") {
      for (std::size_t p : e.params) out.push_back({prefix + e.name + std::to_string(p), fixture(e.name, p)});
      if (e.params.empty()) out.push_back({prefix + e.name, fixture(e.name)});
      continue;
    }
    for (std::size_t c = 0; c < e.count; ++c) {
      out.push_back({prefix + std::to_string(c), generate(e, e.seed + c)});
    }
  }
  return out;
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  std::vector<BenchRecord> records;
  for (const NamedInstance& item : build_corpus(spec.corpus)) {
    const Instance& inst = item.instance;
    const std::string label = class_label(classify(inst));
    const auto opt = oracle_size(inst, spec.oracle_budget);
    for (const std::string& algo : spec.algorithms) {
      BenchRecord rec;
      rec.instance_id = item.id;
      rec.n = inst.jobs();
      rec.m = inst.machines();
      rec.class_label = label;
      rec.algorithm = algo;
      rec.opt_size = opt;
      try {
        const SolveReport report = solve_with(inst, algo, spec.options);
        rec.size = report.matching.size();
        rec.elapsed_us = report.elapsed.count();
        if (!verify(inst, report.matching).valid) rec.error = "solver returned an invalid matching";
        if (opt) rec.ratio = *opt == 0 ? 1.0 : static_cast<double>(*rec.size) / static_cast<double>(*opt);
      } catch (const std::exception& ex) {
        rec.error = ex.what();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance_id,n,m,class,algorithm,size,opt_size,ratio,elapsed_us\n";
  for (const BenchRecord& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.class_label << ',' << r.algorithm << ',';
    if (r.size) out << *r.size;
    out << ',';
    if (r.opt_size) out << *r.opt_size;
    out << ',';
    if (r.ratio) out << format_ratio(*r.ratio);
    out << ',' << r.elapsed_us << '\n';
  }
  return out.str();
}

json bench_json(const std::vector<BenchRecord>& records) {
  json out = json::array();
  for (const BenchRecord& r : records) {
    json j{{"instance_id", r.instance_id}, {"n", r.n},          {"m", r.m},
           {"class", r.class_label},      {"algorithm", r.algorithm}, {"elapsed_us", r.elapsed_us}};
    j["size"] = r.size ? json(*r.size) : json(nullptr);
    j["opt_size"] = r.opt_size ? json(*r.opt_size) : json(nullptr);
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    if (!r.error.empty()) j["error"] = r.error;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<AlgorithmSummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<AlgorithmSummary> out;
  std::vector<double> sums;
  for (const BenchRecord& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& s) { return s.algorithm == r.algorithm; });
    if (it == out.end()) {
      out.push_back({r.algorithm});
      sums.push_back(0.0);
      it = out.end() - 1;
    }
    const std::size_t idx = static_cast<std::size_t>(it - out.begin());
    ++it->runs;
    if (!r.error.empty()) {
      ++it->failures;
      continue;
    }
    if (!r.ratio) continue;
    it->min_ratio = it->compared == 0 ? *r.ratio : std::min(it->min_ratio, *r.ratio);
    ++it->compared;
    sums[idx] += *r.ratio;
  }
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (out[idx].compared > 0) out[idx].mean_ratio = sums[idx] / static_cast<double>(out[idx].compared);
  }
  return out;
}

}  // namespace pdmatch
