#include "pdmatch/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "pdmatch/errors.hpp"

namespace pdmatch {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_tol(Tolerance max_tol) { require(max_tol >= 1, "max_tol must be at least 1"); }

void require_prob(double p) { require(p >= 0.0 && p <= 1.0, "zero_prob must lie in [0, 1]"); }

Tolerance uniform(std::mt19937_64& rng, Tolerance lo, Tolerance hi) {
  return std::uniform_int_distribution<Tolerance>(lo, hi)(rng);
}

// Monotone matrix of levels in [0, top].
std::vector<Tolerance> monotone_levels(std::size_t n, std::size_t m, Tolerance top, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tolerance> raw(n * m, 0);
  Tolerance peak = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const Tolerance up = j > 0 ? raw[(j - 1) * m + i] : 0;
      const Tolerance left = i > 0 ? raw[j * m + i - 1] : 0;
      raw[j * m + i] = std::max(up, left) + uniform(rng, 0, 2);
      peak = std::max(peak, raw[j * m + i]);
    }
  }
  if (peak == 0 || top == 0) {
    std::fill(raw.begin(), raw.end(), 0);
    return raw;
  }
  // A random ceiling keeps small matrices from always reaching `top`.
  const Tolerance ceiling = uniform(rng, std::max<Tolerance>(1, top / 2), top);
  for (Tolerance& v : raw) v = v * ceiling / peak;
  return raw;
}

}  // namespace

Instance gen_random(std::size_t n, std::size_t m, Tolerance max_tol, double zero_prob, std::uint64_t seed) {
  require_tol(max_tol);
  require_prob(zero_prob);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<Tolerance> b(n * m);
  for (Tolerance& v : b) v = zero(rng) ? 0 : uniform(rng, 1, max_tol);
  return Instance(n, m, std::move(b));
}

Instance gen_monotonous(std::size_t n, std::size_t m, Tolerance max_tol, std::uint64_t seed) {
  require_tol(max_tol);
  return Instance(n, m, monotone_levels(n, m, max_tol, seed));
}

Instance gen_tolerance_set(std::size_t n, std::size_t m, std::span<const Tolerance> values, std::uint64_t seed) {
  require(!values.empty(), "tolerance set must not be empty");
  for (Tolerance v : values) require(v >= 0, "tolerances must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<Tolerance> b(n * m);
  for (Tolerance& v : b) v = values[pick(rng)];
  return Instance(n, m, std::move(b));
}

Instance gen_mono_tolerance_set(std::size_t n, std::size_t m, std::span<const Tolerance> values,
                                std::uint64_t seed) {
  require(!values.empty(), "tolerance set must not be empty");
  for (Tolerance v : values) require(v >= 0, "tolerances must be nonnegative");
  std::vector<Tolerance> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto levels = monotone_levels(n, m, static_cast<Tolerance>(sorted.size() - 1), seed);
  for (Tolerance& v : levels) v = sorted[static_cast<std::size_t>(v)];
  return Instance(n, m, std::move(levels));
}

Instance gen_udep(std::size_t n, std::size_t m, Tolerance max_tol, bool complete, std::uint64_t seed) {
  require_tol(max_tol);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution allowed(0.6);
  std::vector<Tolerance> b(n * m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Tolerance bj = uniform(rng, 1, max_tol);
    for (std::size_t i = 0; i < m; ++i) {
      if (complete || allowed(rng)) b[j * m + i] = bj;
    }
  }
  return Instance(n, m, std::move(b));
}

Instance gen_udep_mono(std::size_t n, std::size_t m, Tolerance max_tol, std::uint64_t seed) {
  require_tol(max_tol);
  std::mt19937_64 rng(seed);
  std::vector<Tolerance> tol(n);
  std::vector<std::size_t> first(n);
  for (std::size_t j = 0; j < n; ++j) {
    tol[j] = uniform(rng, 1, max_tol);
    first[j] = std::uniform_int_distribution<std::size_t>(0, m)(rng);
  }
  std::sort(tol.begin(), tol.end());
  std::sort(first.begin(), first.end(), std::greater<>());
  std::vector<Tolerance> b(n * m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = first[j]; i < m; ++i) b[j * m + i] = tol[j];
  }
  return Instance(n, m, std::move(b));
}

Instance gen_vdep(std::size_t n, std::size_t m, Tolerance max_tol, double zero_prob, std::uint64_t seed) {
  require_tol(max_tol);
  require_prob(zero_prob);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<Tolerance> cap(m);
  for (Tolerance& c : cap) c = uniform(rng, 1, max_tol);
  std::vector<Tolerance> b(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) b[j * m + i] = zero(rng) ? 0 : cap[i];
  }
  return Instance(n, m, std::move(b));
}

Instance gen_types(std::size_t n, std::size_t m, std::size_t t, Tolerance max_tol, std::uint64_t seed) {
  require_tol(max_tol);
  require(t >= 1, "type count must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Tolerance>> rows(t, std::vector<Tolerance>(m));
  for (auto& row : rows) {
    for (Tolerance& v : row) v = uniform(rng, 0, max_tol);
  }
  std::uniform_int_distribution<std::size_t> pick(0, t - 1);
  std::vector<Tolerance> b;
  b.reserve(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& row = rows[pick(rng)];
    b.insert(b.end(), row.begin(), row.end());
  }
  return Instance(n, m, std::move(b));
}

Instance gen_3partition(std::span<const Tolerance> values, Tolerance bound, std::size_t k) {
  if (values.size() != 3 * k) {
    throw std::invalid_argument("3-partition: expected " + std::to_string(3 * k) + " values, got " +
                                std::to_string(values.size()));
  }
  const Tolerance sum = std::accumulate(values.begin(), values.end(), Tolerance{0});
  if (sum != static_cast<Tolerance>(k) * bound) {
    throw std::invalid_argument("3-partition: values sum to " + std::to_string(sum) + ", expected k*B = " +
                                std::to_string(static_cast<Tolerance>(k) * bound));
  }
  for (std::size_t p = 0; p < values.size(); ++p) {
    const Tolerance x = values[p];
    if (!(4 * x > bound && 2 * x < bound)) {
      throw std::invalid_argument("3-partition: value " + std::to_string(x) + " at position " + std::to_string(p) +
                                  " is not strictly between B/4 and B/2");
    }
  }
  const std::size_t m = values.size();
  std::vector<Tolerance> b;
  b.reserve(k * (k + 1) / 2 * static_cast<std::size_t>(bound) * m);
  for (std::size_t type = 1; type <= k; ++type) {
    for (Tolerance c = 0; c < static_cast<Tolerance>(type) * bound; ++c) {
      for (Tolerance x : values) b.push_back(static_cast<Tolerance>(type) * x);
    }
  }
  const std::size_t n = k * (k + 1) / 2 * static_cast<std::size_t>(bound);
  return Instance(m == 0 ? 0 : n, m, std::move(b));
}

void validate(const TripleSystem& ts) {
  std::vector<std::array<std::size_t, 3>> seen(ts.k, {0, 0, 0});
  for (const auto& tr : ts.triples) {
    for (std::size_t axis = 0; axis < 3; ++axis) {
      if (tr[axis] >= ts.k) throw std::invalid_argument("triple system: index out of range");
      if (++seen[tr[axis]][axis] > 3) throw std::invalid_argument("triple system: element occurs more than 3 times");
    }
  }
}

TripleSystem gen_triple_system(std::size_t k, std::size_t count, std::uint64_t seed) {
  TripleSystem ts{k, {}};
  if (k == 0) return ts;
  std::mt19937_64 rng(seed);
  std::vector<std::array<std::size_t, 3>> all;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) all.push_back({x, y, z});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  // First triple of each x up front, so every x is covered when count >= k.
  std::vector<bool> seen(k, false);
  std::vector<std::array<std::size_t, 3>> front, back;
  for (const auto& tr : all) {
    (seen[tr[0]] ? back : front).push_back(tr);
    seen[tr[0]] = true;
  }
  front.insert(front.end(), back.begin(), back.end());
  all = std::move(front);
  std::vector<std::array<std::size_t, 3>> used(k, {0, 0, 0});
  for (const auto& tr : all) {
    if (ts.triples.size() == count) break;
    if (used[tr[0]][0] < 3 && used[tr[1]][1] < 3 && used[tr[2]][2] < 3) {
      for (std::size_t a = 0; a < 3; ++a) ++used[tr[a]][a];
      ts.triples.push_back(tr);
    }
  }
  return ts;
}

Reduction3dm gen_3dm(const TripleSystem& ts) {
  validate(ts);
  const std::size_t k = ts.k, m = ts.triples.size();
  Reduction3dm out{Instance(), {}, ts.triples};
  std::vector<Tolerance> b;
  auto add_job = [&](JobRole role, auto&& entry) {
    for (std::size_t i = 0; i < m; ++i) b.push_back(entry(ts.triples[i]));
    out.roles.push_back(role);
  };
  for (std::size_t y = 0; y < k; ++y) {
    add_job({JobRole::Kind::YElement, y}, [&](const auto& tr) { return tr[1] == y ? Tolerance{2} : Tolerance{0}; });
  }
  for (std::size_t z = 0; z < k; ++z) {
    add_job({JobRole::Kind::ZElement, z}, [&](const auto& tr) { return tr[2] == z ? Tolerance{2} : Tolerance{0}; });
  }
  for (std::size_t x = 0; x < k; ++x) {
    const auto occurrences = static_cast<std::size_t>(
        std::count_if(ts.triples.begin(), ts.triples.end(), [&](const auto& tr) { return tr[0] == x; }));
    if (occurrences == 0) throw std::invalid_argument("3dm: element x" + std::to_string(x) + " occurs in no triple");
    for (std::size_t d = 1; d < occurrences; ++d) {
      add_job({JobRole::Kind::Dummy, x}, [&](const auto& tr) { return tr[0] == x ? Tolerance{1} : Tolerance{0}; });
    }
  }
  out.instance = Instance(out.roles.size(), m, std::move(b));
  return out;
}

std::vector<std::array<std::size_t, 3>> extract_3dm_solution(const Reduction3dm& reduction,
                                                            const Matching& matching) {
  if (!verify(reduction.instance, matching).valid) {
    throw InvalidMatching("extract_3dm_solution: matching is not a valid PD-matching");
  }
  const auto degree = matching.degrees(reduction.instance.machines());
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] == 2) out.push_back(reduction.machine_triples[i]);
  }
  return out;
}

void validate(const TupleSystem& ts) {
  std::set<std::vector<std::size_t>> distinct;
  std::vector<std::vector<std::size_t>> seen(ts.d, std::vector<std::size_t>(ts.k, 0));
  for (const auto& tu : ts.tuples) {
    if (tu.size() != ts.d) throw std::invalid_argument("tuple system: tuple arity differs from d");
    for (std::size_t axis = 0; axis < ts.d; ++axis) {
      if (tu[axis] >= ts.k) throw std::invalid_argument("tuple system: index out of range");
      if (++seen[axis][tu[axis]] > ts.d) {
        throw std::invalid_argument("tuple system: element occurs more than d times");
      }
    }
    if (!distinct.insert(tu).second) throw std::invalid_argument("tuple system: duplicate tuple");
  }
}

TupleSystem gen_tuple_system(std::size_t d, std::size_t k, std::size_t count, std::uint64_t seed) {
  TupleSystem ts{d, k, {}};
  if (k == 0 || d == 0) return ts;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::set<std::vector<std::size_t>> distinct;
  std::vector<std::vector<std::size_t>> used(d, std::vector<std::size_t>(k, 0));
  // Rejection sampling with a bounded number of attempts.
  for (std::size_t attempt = 0; attempt < 64 * (count + 1) && ts.tuples.size() < count; ++attempt) {
    std::vector<std::size_t> tu(d);
    bool fits = true;
    for (std::size_t a = 0; a < d; ++a) {
      tu[a] = pick(rng);
      fits = fits && used[a][tu[a]] < d;
    }
    if (!fits || distinct.count(tu)) continue;
    for (std::size_t a = 0; a < d; ++a) ++used[a][tu[a]];
    distinct.insert(tu);
    ts.tuples.push_back(std::move(tu));
  }
  return ts;
}

Instance gen_ddm(const TupleSystem& ts, Tolerance k1, Tolerance k2) {
  validate(ts);
  require(k1 >= 1, "ddm: k1 must be at least 1");
  require(k2 > std::max<Tolerance>(2, k1), "ddm: k2 must exceed max(2, k1)");
  require(static_cast<Tolerance>(ts.d) == k2, "ddm: tuple arity d must equal k2");
  const std::size_t t = ts.tuples.size();
  require(t >= ts.k, "ddm: need at least k tuples");
  std::vector<Tolerance> b;
  std::size_t n = 0;
  for (std::size_t axis = 0; axis < ts.d; ++axis) {
    for (std::size_t e = 0; e < ts.k; ++e, ++n) {
      for (const auto& tu : ts.tuples) b.push_back(tu[axis] == e ? k2 : k1);
    }
  }
  const std::size_t dummies = static_cast<std::size_t>(k1) * (t - ts.k);
  for (std::size_t x = 0; x < dummies; ++x, ++n) b.insert(b.end(), t, k1);
  return Instance(n, t, std::move(b));
}

Instance fixture_ir(std::size_t r) {
  std::vector<Tolerance> b{1};
  b.insert(b.end(), r, static_cast<Tolerance>(r));
  return Instance(r + 1, 1, std::move(b));
}

Instance fixture_tight(std::size_t k) {
  const auto kt = static_cast<Tolerance>(k);
  std::vector<Tolerance> b;
  for (std::size_t j = 0; j < k; ++j) b.insert(b.end(), {0, kt});
  for (std::size_t j = 0; j < k; ++j) b.insert(b.end(), {kt, kt});
  return Instance(2 * k, 2, std::move(b));
}

Instance fixture_monobad(std::size_t k) {
  const std::size_t m = k + 1;
  std::vector<Tolerance> b(2 * k * m, 1);
  for (std::size_t j = k; j < 2 * k; ++j) b[j * m + m - 1] = static_cast<Tolerance>(k);
  return Instance(2 * k, m, std::move(b));
}

Instance fixture_3part_example() {
  const Tolerance a[] = {26, 30, 31, 33, 36, 44};
  return gen_3partition(a, 100, 2);
}

Instance fixture(const std::string& name, std::size_t param) {
  if (name == "IR") return fixture_ir(param);
  if (name == "TIGHT") return fixture_tight(param);
  if (name == "MONOBAD") return fixture_monobad(param);
  if (name == "3PART-EXAMPLE") return fixture_3part_example();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace pdmatch
