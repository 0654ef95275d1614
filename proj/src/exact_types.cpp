#include <algorithm>
#include <deque>

#include "pdmatch/classify.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"

namespace pdmatch {

Matching normalize_shared_machines(const Instance& inst, const Matching& matching) {
  if (!verify(inst, matching).valid) {
    throw InvalidMatching("normalize_shared_machines: matching is not a valid PD-matching");
  }
  const auto types = job_types(inst);
  const std::size_t t = types.size(), m = inst.machines();
  std::vector<std::size_t> type_of(inst.jobs());
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t j : types[k].members) type_of[j] = k;
  }
  auto machine_of = matching.assignment(inst.jobs());

  auto count = [&](std::size_t type, std::size_t machine) {
    std::size_t c = 0;
    for (std::size_t j : types[type].members) c += machine_of[j] == machine;
    return c;
  };
  // Moves `amount` jobs of `type` from machine `from` to machine `to`,
  // lowest job indices first.
  auto move = [&](std::size_t type, std::size_t from, std::size_t to, std::size_t amount) {
    for (std::size_t j : types[type].members) {
      if (amount == 0) break;
      if (machine_of[j] == from) {
        machine_of[j] = to;
        --amount;
      }
    }
  };

  // Each swap removes at least one (type, machine) incidence and creates
  // none, so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < t && !changed; ++a) {
      for (std::size_t b = a + 1; b < t && !changed; ++b) {
        std::vector<std::size_t> shared;
        for (std::size_t i = 0; i < m && shared.size() < 2; ++i) {
          if (count(a, i) > 0 && count(b, i) > 0) shared.push_back(i);
        }
        if (shared.size() < 2) continue;
        const std::size_t i1 = shared[0], i2 = shared[1];
        // The smallest of the four counts: that group leaves its machine and
        // trades places with as many jobs of the other type from the other machine.
        struct Group {
          std::size_t type, other_type, machine, other_machine, size;
        };
        const Group groups[] = {{a, b, i1, i2, count(a, i1)}, {a, b, i2, i1, count(a, i2)},
                                {b, a, i1, i2, count(b, i1)}, {b, a, i2, i1, count(b, i2)}};
        const Group& g = *std::min_element(std::begin(groups), std::end(groups),
                                           [](const Group& x, const Group& y) { return x.size < y.size; });
        move(g.type, g.machine, g.other_machine, g.size);
        move(g.other_type, g.other_machine, g.machine, g.size);
        changed = true;
      }
    }
  }
  return from_assignment(machine_of);
}

namespace {

// Mixed-radix index over remaining-count vectors w with 0 <= w_l <= q_l.
class CountSpace {
 public:
  explicit CountSpace(std::vector<std::size_t> limits) : limits_(std::move(limits)), stride_(limits_.size()) {
    std::size_t s = 1;
    for (std::size_t l = 0; l < limits_.size(); ++l) {
      stride_[l] = s;
      s *= limits_[l] + 1;
    }
    size_ = s;
  }
  std::size_t size() const { return size_; }
  std::size_t index(const std::vector<std::size_t>& w) const {
    std::size_t idx = 0;
    for (std::size_t l = 0; l < w.size(); ++l) idx += w[l] * stride_[l];
    return idx;
  }
  std::size_t component(std::size_t idx, std::size_t l) const { return idx / stride_[l] % (limits_[l] + 1); }
  std::size_t stride(std::size_t l) const { return stride_[l]; }

 private:
  std::vector<std::size_t> limits_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

class TypeSearch {
 public:
  TypeSearch(const Instance& inst, std::vector<TypeProfile> types, std::uint64_t budget)
      : inst_(inst), types_(std::move(types)), t_(types_.size()), m_(inst.machines()),
        max_modular_(t_ * (t_ - 1)), budget_(budget), space_(supply()) {}

  Matching solve() {
    std::vector<std::size_t> remaining = supply();
    std::vector<std::size_t> table(space_.size(), 0);
    std::vector<std::vector<std::size_t>> modular(m_);
    dfs(0, remaining, table, 0, modular);
    return build();
  }

 private:
  std::vector<std::size_t> supply() const {
    std::vector<std::size_t> q;
    for (const auto& ty : types_) q.push_back(ty.count());
    return q;
  }

  std::size_t tau(std::size_t type, std::size_t machine) const {
    return static_cast<std::size_t>(types_[type].tau[machine]);
  }

  // K[i; w] from K[i-1; w]: machine i takes min(w_l, tau_l(i)) jobs of one type l.
  void extend(std::vector<std::size_t>& table, std::size_t machine,
              std::vector<std::uint8_t>* choice) const {
    std::vector<std::size_t> prev = table;
    if (choice) choice->assign(space_.size(), 0);
    for (std::size_t idx = 0; idx < space_.size(); ++idx) {
      for (std::size_t l = 0; l < t_; ++l) {
        const std::size_t take = std::min(space_.component(idx, l), tau(l, machine));
        if (take == 0) continue;
        const std::size_t cand = prev[idx - take * space_.stride(l)] + take;
        if (cand > table[idx]) {
          table[idx] = cand;
          if (choice) (*choice)[idx] = static_cast<std::uint8_t>(l + 1);
        }
      }
    }
  }

  // Mixed assignments for a modular machine: at least two types, total
  // within every used type's tolerance and within the remaining supply.
  void for_each_mix(std::size_t machine, const std::vector<std::size_t>& remaining,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) const {
    std::vector<std::size_t> c(t_, 0);
    std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t l, std::size_t total, std::size_t cap, std::size_t used) {
          if (l == t_) {
            if (used >= 2 && total <= cap) fn(c);
            return;
          }
          rec(l + 1, total, cap, used);
          const std::size_t new_cap = std::min(cap, tau(l, machine));
          for (std::size_t x = 1; x <= remaining[l] && total + x <= new_cap; ++x) {
            c[l] = x;
            rec(l + 1, total + x, new_cap, used + 1);
          }
          c[l] = 0;
        };
    rec(0, 0, inst_.jobs(), 0);
  }

  void dfs(std::size_t machine, std::vector<std::size_t>& remaining, const std::vector<std::size_t>& table,
           std::size_t modular_total, std::vector<std::vector<std::size_t>>& modular) {
    if (best_value_ == inst_.jobs() && have_best_) return;
    std::size_t left = 0;
    for (std::size_t r : remaining) left += r;
    if (have_best_ && modular_total + left <= best_value_) return;

    if (machine == m_) {
      if (++guesses_ > budget_) {
        throw BudgetExceeded("t-types: guess count exceeds budget " + std::to_string(budget_));
      }
      const std::size_t value = modular_total + table[space_.index(remaining)];
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_modular_ = modular;
        best_remaining_ = remaining;
      }
      return;
    }

    std::vector<std::size_t> next = table;
    extend(next, machine, nullptr);
    dfs(machine + 1, remaining, next, modular_total, modular);

    if (modular_count_ < max_modular_) {
      for_each_mix(machine, remaining, [&](const std::vector<std::size_t>& c) {
        std::size_t total = 0;
        for (std::size_t l = 0; l < t_; ++l) {
          remaining[l] -= c[l];
          total += c[l];
        }
        modular[machine] = c;
        ++modular_count_;
        dfs(machine + 1, remaining, table, modular_total + total, modular);
        --modular_count_;
        modular[machine].clear();
        for (std::size_t l = 0; l < t_; ++l) remaining[l] += c[l];
      });
    }
  }

  Matching build() const {
    std::vector<std::deque<std::size_t>> pool(t_);
    for (std::size_t l = 0; l < t_; ++l) pool[l].assign(types_[l].members.begin(), types_[l].members.end());
    std::vector<Edge> edges;
    auto take = [&](std::size_t type, std::size_t machine, std::size_t amount) {
      for (std::size_t x = 0; x < amount; ++x) {
        edges.push_back({pool[type].front(), machine});
        pool[type].pop_front();
      }
    };

    std::vector<std::size_t> single;
    for (std::size_t i = 0; i < m_; ++i) {
      if (best_modular_.empty() || best_modular_[i].empty()) {
        single.push_back(i);
      } else {
        for (std::size_t l = 0; l < t_; ++l) take(l, i, best_modular_[i][l]);
      }
    }

    std::vector<std::size_t> table(space_.size(), 0);
    std::vector<std::vector<std::uint8_t>> choices(single.size());
    for (std::size_t s = 0; s < single.size(); ++s) extend(table, single[s], &choices[s]);

    // Walk back through the table; choices[s][w] records the type machine
    // single[s] took when its value at w improved on K[s-1; w].
    std::vector<std::size_t> w = best_remaining_;
    for (std::size_t s = single.size(); s-- > 0;) {
      const std::size_t idx = space_.index(w);
      const std::uint8_t c = choices[s][idx];
      if (c == 0) continue;
      const std::size_t l = c - 1u;
      const std::size_t amount = std::min(w[l], tau(l, single[s]));
      take(l, single[s], amount);
      w[l] -= amount;
    }
    return Matching(std::move(edges));
  }

  const Instance& inst_;
  std::vector<TypeProfile> types_;
  std::size_t t_, m_, max_modular_;
  std::uint64_t budget_;
  CountSpace space_;

  std::uint64_t guesses_ = 0;
  std::size_t modular_count_ = 0;
  bool have_best_ = false;
  std::size_t best_value_ = 0;
  std::vector<std::vector<std::size_t>> best_modular_;
  std::vector<std::size_t> best_remaining_;
};

}  // namespace

Matching solve_t_types(const Instance& inst, std::size_t max_t, std::uint64_t budget) {
  auto types = job_types(inst);
  if (types.size() > max_t) {
    throw BudgetExceeded("t-types: instance has " + std::to_string(types.size()) +
                         " job types, limit is " + std::to_string(max_t));
  }
  if (inst.empty()) return {};
  return TypeSearch(inst, std::move(types), budget).solve();
}

Matching solve_two_types(const Instance& inst) {
  if (job_types(inst).size() > 2) throw ClassMismatch("two-types", "more than two job types");
  return solve_t_types(inst, 2);
}

}  // namespace pdmatch
