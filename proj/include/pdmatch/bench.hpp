#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdmatch/dispatch.hpp"
#include "pdmatch/instance.hpp"

namespace pdmatch {

/// One generator family in a bench corpus. Recognised families and their
/// fields:
///   random      n m max_tol zero_prob
///   mono        n m max_tol
///   udep        n m max_tol (complete=true for udep-complete instances)
///   udep-mono   n m max_tol
///   vdep        n m max_tol zero_prob
///   tolset      n m values          (entries drawn from values)
///   mono-tolset n m values
///   types       n m t max_tol
///   fixture     name params         (one instance per param)
///   3partition  values B k
///   3dm         k t                 (random triple systems)
///   ddm         k t k1 k2           (random tuple systems, d = k2)
/// Instance c of an entry uses seed + c.
struct CorpusEntry {
  std::string family;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0, t = 1, k = 1;
  Tolerance max_tol = 1;
  double zero_prob = 0.0;
  bool complete = false;
  std::vector<Tolerance> values;
  Tolerance bound = 0, k1 = 1, k2 = 3;
  std::string name;
  std::vector<std::size_t> params;
};

struct BenchSpec {
  std::vector<CorpusEntry> corpus;
  std::vector<std::string> algorithms;
  std::uint64_t oracle_budget = 100'000'000;
  SolveOptions options;
};

struct BenchRecord {
  std::string instance_id;
  std::size_t n = 0, m = 0;
  std::string class_label;
  std::string algorithm;
  std::optional<std::size_t> size;
  std::optional<std::size_t> opt_size;
  std::optional<double> ratio;
  std::int64_t elapsed_us = 0;
  std::string error;
};

struct NamedInstance {
  std::string id;
  Instance instance;
};

/// Reads a corpus spec: {"corpus": [{"family": ..., ...}], "algorithms": [...],
/// "oracle_budget": N}. Throws ParseError on unknown fields or families.
BenchSpec parse_bench_spec(const nlohmann::json& j);

/// Expands the corpus in entry order. Throws std::invalid_argument for bad
/// generator parameters.
std::vector<NamedInstance> build_corpus(const std::vector<CorpusEntry>& corpus);

/// Runs every algorithm on every instance, plus the oracle where its budget
/// allows. Records are ordered by instance, then algorithm. Per-instance
/// failures are recorded in BenchRecord::error.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

/// Header instance_id,n,m,class,algorithm,size,opt_size,ratio,elapsed_us.
std::string bench_csv(const std::vector<BenchRecord>& records);
nlohmann::json bench_json(const std::vector<BenchRecord>& records);

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t runs = 0, failures = 0, compared = 0;
  double min_ratio = 1.0, mean_ratio = 1.0;
};

/// Per algorithm in first-appearance order; ratios over records with an oracle value.
std::vector<AlgorithmSummary> summarize(const std::vector<BenchRecord>& records);

}  // namespace pdmatch
