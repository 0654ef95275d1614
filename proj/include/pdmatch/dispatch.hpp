#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdmatch/greedy.hpp"
#include "pdmatch/instance.hpp"

namespace pdmatch {

struct SolveReport {
  Matching matching;
  std::string algorithm;
  bool optimal = false;
  std::chrono::microseconds elapsed{0};
};

struct SolveOptions {
  /// Enumeration budget for const-m, t-types, mono-3tol and oracle; each
  /// algorithm's own default when unset.
  std::optional<std::uint64_t> budget;
  GreedyConfig greedy;
  GlobalGreedyConfig global;
};

/// greedy, greedy-global, vdep, udep-complete, udep-mono, mono-greedy,
/// const-m, uniform, zero-k, one-two, mono-3tol, t-types, two-types,
/// oracle, auto.
const std::vector<std::string>& algorithm_names();

/// False for the heuristics (greedy, greedy-global, mono-greedy).
bool is_exact_algorithm(const std::string& name);

/// Runs the named algorithm. Unknown names throw std::invalid_argument;
/// ClassMismatch and BudgetExceeded propagate. "auto" runs dispatch.
SolveReport solve_with(const Instance& inst, const std::string& algorithm, const SolveOptions& options = {});

/// Tries the exact solvers whose class contains the instance, cheapest
/// first, and falls back to greedy. Never throws for a valid instance.
SolveReport dispatch(const Instance& inst, const SolveOptions& options = {});

}  // namespace pdmatch
