#include "pdmatch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>

#include "pdmatch/errors.hpp"

namespace pdmatch {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

class AssignmentSearch {
 public:
  explicit AssignmentSearch(const Instance& inst)
      : inst_(inst), n_(inst.jobs()), m_(inst.machines()), order_(n_), degree_(m_, 0),
        min_tol_(m_, std::numeric_limits<Tolerance>::max()), current_(n_), best_(n_),
        suffix_max_((n_ + 1) * m_, 0) {
    std::iota(order_.begin(), order_.end(), 0);
    auto row_max = [&](std::size_t j) {
      auto r = inst.row(j);
      return r.empty() ? Tolerance{0} : *std::max_element(r.begin(), r.end());
    };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return row_max(a) > row_max(b); });
    for (std::size_t p = n_; p-- > 0;) {
      for (std::size_t i = 0; i < m_; ++i) {
        suffix_max_[p * m_ + i] = std::max(suffix_max_[(p + 1) * m_ + i], inst(order_[p], i));
      }
    }
  }

  Matching run() {
    search(0, 0);
    return from_assignment(best_);
  }

 private:
  // Jobs that could still be added on top of the current partial assignment.
  std::size_t headroom(std::size_t pos) const {
    std::size_t room = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Tolerance limit = degree_[i] > 0 ? std::min(min_tol_[i], suffix_max_[pos * m_ + i])
                                             : suffix_max_[pos * m_ + i];
      if (limit > static_cast<Tolerance>(degree_[i])) room += static_cast<std::size_t>(limit) - degree_[i];
      if (room >= n_) break;
    }
    return std::min(room, n_ - pos);
  }

  void search(std::size_t pos, std::size_t matched) {
    if (matched > best_size_) {
      best_size_ = matched;
      best_ = current_;
    }
    if (pos == n_ || best_size_ == n_) return;
    if (matched + headroom(pos) <= best_size_) return;

    const std::size_t j = order_[pos];
    for (std::size_t i = 0; i < m_; ++i) {
      const Tolerance b = inst_(j, i);
      const auto grown = static_cast<Tolerance>(degree_[i] + 1);
      if (b == 0 || grown > b || grown > min_tol_[i]) continue;
      const Tolerance saved = min_tol_[i];
      ++degree_[i];
      min_tol_[i] = std::min(saved, b);
      current_[j] = i;
      search(pos + 1, matched + 1);
      current_[j].reset();
      min_tol_[i] = saved;
      --degree_[i];
      if (best_size_ == n_) return;
    }
    search(pos + 1, matched);
  }

  const Instance& inst_;
  std::size_t n_, m_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> degree_;
  std::vector<Tolerance> min_tol_;
  std::vector<std::optional<std::size_t>> current_, best_;
  std::size_t best_size_ = 0;
  std::vector<Tolerance> suffix_max_;  // [pos][machine]: max tolerance among order_[pos..]
};

// Kuhn's augmenting paths with each machine split into unit slots.
class SlotMatcher {
 public:
  SlotMatcher(const Instance& inst, const std::vector<Tolerance>& thresholds)
      : n_(inst.jobs()), adj_(inst.jobs()) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      const Tolerance t = thresholds[i];
      if (t <= 0) continue;
      const std::size_t slots = static_cast<std::size_t>(std::min<Tolerance>(t, static_cast<Tolerance>(n_)));
      std::vector<std::size_t> ids;
      for (std::size_t s = 0; s < slots; ++s) {
        ids.push_back(slot_machine_.size());
        slot_machine_.push_back(i);
      }
      for (std::size_t j = 0; j < n_; ++j) {
        if (inst(j, i) >= t) adj_[j].insert(adj_[j].end(), ids.begin(), ids.end());
      }
    }
    slot_owner_.assign(slot_machine_.size(), kFree);
  }

  std::vector<std::optional<std::size_t>> run() {
    for (std::size_t j = 0; j < n_; ++j) {
      visited_.assign(slot_machine_.size(), false);
      augment(j);
    }
    std::vector<std::optional<std::size_t>> out(n_);
    for (std::size_t s = 0; s < slot_owner_.size(); ++s) {
      if (slot_owner_[s] != kFree) out[slot_owner_[s]] = slot_machine_[s];
    }
    return out;
  }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  bool augment(std::size_t j) {
    for (std::size_t s : adj_[j]) {
      if (visited_[s]) continue;
      visited_[s] = true;
      if (slot_owner_[s] == kFree || augment(slot_owner_[s])) {
        slot_owner_[s] = j;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> slot_machine_, slot_owner_;
  std::vector<bool> visited_;
};

}  // namespace

Matching oracle_enumerate_assignments(const Instance& inst, std::uint64_t budget) {
  if (saturating_pow(inst.machines() + 1, inst.jobs()) > budget) {
    throw BudgetExceeded("oracle: (m+1)^n exceeds budget " + std::to_string(budget));
  }
  return AssignmentSearch(inst).run();
}

Matching oracle_threshold_vectors(const Instance& inst, std::uint64_t budget) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  std::vector<std::vector<Tolerance>> candidates(m);
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::set<Tolerance> values{0};
    for (std::size_t j = 0; j < n; ++j) values.insert(inst(j, i));
    candidates[i].assign(values.begin(), values.end());
    if (product > budget / candidates[i].size() + 1) product = budget + 1;
    else product *= candidates[i].size();
  }
  if (product > budget) {
    throw BudgetExceeded("oracle-thresholds: candidate count exceeds budget " + std::to_string(budget));
  }

  std::vector<std::optional<std::size_t>> best(n);
  std::size_t best_size = 0;
  std::vector<std::size_t> digit(m, 0);
  std::vector<Tolerance> t(m, 0);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) t[i] = candidates[i][digit[i]];
    auto got = SlotMatcher(inst, t).run();
    const auto size = static_cast<std::size_t>(std::count_if(got.begin(), got.end(), [](auto& x) { return x.has_value(); }));
    if (size > best_size) {
      best_size = size;
      best = std::move(got);
      if (best_size == n) break;
    }
    std::size_t i = 0;
    while (i < m && ++digit[i] == candidates[i].size()) digit[i++] = 0;
    if (i == m) break;
  }
  return from_assignment(best);
}

}  // namespace pdmatch
