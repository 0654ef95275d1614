#include "pdmatch/dispatch.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pdmatch/classify.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"
#include "pdmatch/oracle.hpp"

namespace pdmatch {

namespace {

using Clock = std::chrono::steady_clock;

// const-m runs ahead of the class-specific solvers when it is this cheap.
constexpr std::uint64_t kCheapThresholdVectors = 10'000;
constexpr std::uint64_t kDispatchBudget = 10'000'000;

std::uint64_t per_step(std::uint64_t budget, const Instance& inst) {
  const std::uint64_t cells = std::max<std::uint64_t>(1, inst.jobs() * inst.machines());
  return std::max<std::uint64_t>(1, budget / cells);
}

Matching run(const Instance& inst, const std::string& name, const SolveOptions& o) {
  if (name == "greedy") return greedy_strongly_maximal(inst, o.greedy);
  if (name == "greedy-global") return greedy_global(inst, o.global);
  if (name == "vdep") return solve_vdep(inst);
  if (name == "udep-complete") return solve_udep_complete(inst);
  if (name == "udep-mono") return solve_udep_mono(inst);
  if (name == "mono-greedy") return solve_mono_general_greedy(inst);
  if (name == "const-m") return o.budget ? solve_const_m(inst, *o.budget) : solve_const_m(inst);
  if (name == "uniform") return solve_uniform_tolerance(inst);
  if (name == "zero-k") return solve_zero_k(inst);
  if (name == "one-two") return solve_one_two(inst);
  if (name == "mono-3tol") return solve_mono_three_tol(inst, o.budget.value_or(kUnlimited));
  if (name == "t-types") return solve_t_types(inst, 3, o.budget.value_or(kUnlimited));
  if (name == "two-types") return solve_two_types(inst);
  if (name == "oracle") {
    return o.budget ? oracle_enumerate_assignments(inst, *o.budget) : oracle_enumerate_assignments(inst);
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{
      "greedy", "greedy-global", "vdep",      "udep-complete", "udep-mono", "mono-greedy", "const-m", "uniform",
      "zero-k", "one-two",       "mono-3tol", "t-types",       "two-types", "oracle",      "auto"};
  return names;
}

bool is_exact_algorithm(const std::string& name) {
  return name != "greedy" && name != "greedy-global" && name != "mono-greedy";
}

SolveReport solve_with(const Instance& inst, const std::string& algorithm, const SolveOptions& options) {
  if (algorithm == "auto") return dispatch(inst, options);
  const auto start = Clock::now();
  Matching m = run(inst, algorithm, options);
  return {std::move(m), algorithm, is_exact_algorithm(algorithm),
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)};
}

SolveReport dispatch(const Instance& inst, const SolveOptions& options) {
  const auto start = Clock::now();
  const std::uint64_t budget = options.budget.value_or(kDispatchBudget);
  const ClassReport r = classify(inst);
  const auto& T = r.tolerance_set;
  const bool one_two = !T.empty() && std::all_of(T.begin(), T.end(), [](Tolerance v) { return v == 1 || v == 2; });
  const bool zero_k = T.size() <= 1 || (T.size() == 2 && T.front() == 0);
  const std::uint64_t vectors = threshold_vector_count(inst);

  struct Route {
    const char* name;
    bool applies;
    std::function<Matching()> solve;
  };
  const Route routes[] = {
      {"uniform", r.uniform(), [&] { return solve_uniform_tolerance(inst); }},
      {"zero-k", zero_k, [&] { return solve_zero_k(inst); }},
      {"one-two", one_two, [&] { return solve_one_two(inst); }},
      {"vdep", r.is_vdep, [&] { return solve_vdep(inst); }},
      {"const-m", vectors <= std::min(kCheapThresholdVectors, budget), [&] { return solve_const_m(inst, budget); }},
      {"udep-complete", r.udep_complete, [&] { return solve_udep_complete(inst); }},
      {"udep-mono", r.is_udep && r.monotonizable.has_value(), [&] { return solve_udep_mono(inst); }},
      {"t-types", r.type_count <= 3, [&] { return solve_t_types(inst, 3, per_step(budget, inst)); }},
      {"mono-3tol", r.monotonizable.has_value() && T.size() <= 3,
       [&] { return solve_mono_three_tol(inst, per_step(budget, inst)); }},
      {"const-m", vectors <= per_step(budget, inst), [&] { return solve_const_m(inst, budget); }},
      {"oracle", true, [&] { return oracle_enumerate_assignments(inst, budget); }},
  };
  for (const Route& route : routes) {
    if (!route.applies) continue;
    try {
      Matching m = route.solve();
      return {std::move(m), route.name, true,
              std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)};
    } catch (const BudgetExceeded&) {
    } catch (const ClassMismatch&) {
    }
  }
  Matching m = greedy_strongly_maximal(inst, options.greedy);
  return {std::move(m), "greedy", false,
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start)};
}

}  // namespace pdmatch
