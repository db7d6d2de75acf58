#include "betan/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "betan/error.hpp"

namespace betan {

FunctionalGraph::FunctionalGraph(std::vector<std::uint32_t> map)
    : map_(std::move(map)) {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] >= map_.size())
      throw Error(ErrorKind::OutOfRange,
                  "f(" + std::to_string(i) + ") = " + std::to_string(map_[i]) +
                      " is outside [0, " + std::to_string(map_.size()) + ")");
    if (map_[i] == i)
      throw Error(ErrorKind::FixedPointPresent,
                  "f(" + std::to_string(i) + ") = " + std::to_string(i));
  }
}

Coloring Coloring::from(std::vector<std::uint8_t> colors, unsigned num_colors) {
  if (num_colors == 0 || num_colors > 255)
    throw Error(ErrorKind::InvalidArgument, "number of colors must be in [1, 255]");
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] < 1 || colors[i] > num_colors)
      throw Error(ErrorKind::InvalidArgument,
                  "color " + std::to_string(colors[i]) + " at cell " +
                      std::to_string(i) + " is outside [1, " +
                      std::to_string(num_colors) + "]");
  return Coloring{num_colors, std::move(colors)};
}

LinearEquation::LinearEquation(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2)
    throw Error(ErrorKind::InvalidArgument,
                "an equation needs at least two coefficients");
  for (auto c : coeffs_)
    if (c == 0)
      throw Error(ErrorKind::InvalidArgument, "coefficients must be nonzero");
}

std::string LinearEquation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const auto magnitude = c < 0 ? -c : c;
    if (magnitude != 1) s += std::to_string(magnitude);
    s += "x" + std::to_string(i + 1);
  }
  return s + " = 0";
}

Coloring three_color(const FunctionalGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++indegree[g(i)];

  // Reverse adjacency in CSR form.
  std::vector<std::uint32_t> start(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++start[g(i) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> preimages(n);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < n; ++i)
      preimages[fill[g(i)]++] = static_cast<std::uint32_t>(i);
  }

  std::vector<bool> removed(n, false), queued(n, false);
  std::vector<std::uint32_t> pending;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] <= 1) {
      queued[i] = true;
      pending.push_back(static_cast<std::uint32_t>(i));
    }
  std::vector<std::uint32_t> order;
  order.reserve(n);
  while (!pending.empty()) {
    const std::uint32_t v = pending.back();
    pending.pop_back();
    removed[v] = true;
    order.push_back(v);
    const std::uint32_t t = g(v);
    if (!removed[t] && --indegree[t] <= 1 && !queued[t]) {
      queued[t] = true;
      pending.push_back(t);
    }
  }
  if (order.size() != n)
    throw std::logic_error("peeling stalled; pigeonhole bound violated");

  std::vector<std::uint8_t> colors(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::uint32_t v = *it;
    bool used[4] = {false, false, false, false};
    used[colors[g(v)]] = true;
    for (std::uint32_t k = start[v]; k < start[v + 1]; ++k)
      used[colors[preimages[k]]] = true;
    std::uint8_t c = 1;
    while (used[c]) ++c;
    colors[v] = c;
  }
  return Coloring{3, std::move(colors)};
}

bool verify_coloring(const FunctionalGraph& g, const Coloring& chi) {
  if (g.size() != chi.size())
    throw Error(ErrorKind::SizeMismatch,
                "graph has " + std::to_string(g.size()) +
                    " vertices, coloring has " + std::to_string(chi.size()) +
                    " cells");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (chi.colors[i] == chi.colors[g(i)]) return false;
  return true;
}

bool rado_single_pr(const LinearEquation& eq) {
  const auto& c = eq.coefficients();
  if (c.size() > kMaxRadoCoefficients)
    throw Error(ErrorKind::TooManyCoefficients,
                std::to_string(c.size()) + " coefficients exceed the limit " +
                    std::to_string(kMaxRadoCoefficients));
  // Walk all nonempty subsets in Gray-code order, one flip per step.
  const std::uint64_t limit = std::uint64_t{1} << c.size();
  std::uint64_t mask = 0;
  std::int64_t sum = 0;
  for (std::uint64_t i = 1; i < limit; ++i) {
    const int bit = std::countr_zero(i);
    mask ^= std::uint64_t{1} << bit;
    sum += (mask >> bit & 1) ? c[bit] : -c[bit];
    if (sum == 0) return true;
  }
  return false;
}

namespace {

struct SolverState {
  std::span<const std::int64_t> coeffs;
  std::span<const Nat> candidates;
  std::vector<bool> present;  // indexed by value
  std::vector<std::int64_t> suffix_lo, suffix_hi;
  std::vector<Nat> values;
};

bool solve_from(SolverState& s, std::size_t i, std::int64_t partial) {
  const std::size_t k = s.coeffs.size();
  if (partial + s.suffix_lo[i] > 0 || partial + s.suffix_hi[i] < 0)
    return false;
  if (i + 1 == k) {
    const std::int64_t c = s.coeffs[i];
    if (partial % c != 0) return false;
    const std::int64_t x = -partial / c;
    if (x < 1 || static_cast<std::size_t>(x) >= s.present.size() ||
        !s.present[static_cast<std::size_t>(x)])
      return false;
    s.values[i] = static_cast<Nat>(x);
    return true;
  }
  for (Nat x : s.candidates) {
    s.values[i] = x;
    if (solve_from(s, i + 1, partial + s.coeffs[i] * static_cast<std::int64_t>(x)))
      return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Nat>> solve_within(const LinearEquation& eq,
                                             std::span<const Nat> candidates) {
  if (candidates.empty()) return std::nullopt;
  const auto& c = eq.coefficients();
  const std::size_t k = c.size();
  SolverState s{c, candidates, {}, {}, {}, std::vector<Nat>(k)};
  const auto lo = static_cast<std::int64_t>(candidates.front());
  const auto hi = static_cast<std::int64_t>(candidates.back());
  s.present.assign(static_cast<std::size_t>(hi) + 1, false);
  for (Nat x : candidates) s.present[x] = true;
  s.suffix_lo.assign(k + 1, 0);
  s.suffix_hi.assign(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    const std::int64_t a = c[i] * lo, b = c[i] * hi;
    s.suffix_lo[i] = s.suffix_lo[i + 1] + std::min(a, b);
    s.suffix_hi[i] = s.suffix_hi[i + 1] + std::max(a, b);
  }
  if (solve_from(s, 0, 0)) return s.values;
  return std::nullopt;
}

std::optional<MonoSolution> find_mono_solution(const LinearEquation& eq,
                                               const Coloring& chi) {
  for (unsigned color = 1; color <= chi.num_colors; ++color) {
    std::vector<Nat> members;
    for (Nat n = 1; n <= chi.size(); ++n)
      if (chi.of(n) == color) members.push_back(n);
    if (auto values = solve_within(eq, members))
      return MonoSolution{std::move(*values), color};
  }
  return std::nullopt;
}

std::optional<Coloring> find_avoiding_coloring(const LinearEquation& eq,
                                               std::size_t n, unsigned r,
                                               std::size_t budget) {
  if (r == 0 || r > 255)
    throw Error(ErrorKind::InvalidArgument, "number of colors must be in [1, 255]");
  if (n == 0) return Coloring{r, {}};

  std::vector<std::vector<Nat>> classes(r + 1);
  std::vector<std::uint8_t> colors(n, 0);
  std::size_t visited = 0;

  // Colors integers 1..n in order. A partial coloring with a monochromatic
  // solution is abandoned; solutions not using the newest integer were
  // already ruled out one level up.
  auto extend = [&](auto& self, Nat next, unsigned used) -> bool {
    if (next > n) return true;
    const unsigned top = std::min(r, used + 1);
    for (unsigned c = 1; c <= top; ++c) {
      if (++visited > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "visited more than " + std::to_string(budget) +
                        " partial colorings");
      classes[c].push_back(next);
      colors[next - 1] = static_cast<std::uint8_t>(c);
      if (!solve_within(eq, classes[c]) &&
          self(self, next + 1, std::max(used, c)))
        return true;
      classes[c].pop_back();
    }
    return false;
  };
  if (extend(extend, 1, 0)) return Coloring{r, std::move(colors)};
  return std::nullopt;
}

bool exhaustive_pr_check(const LinearEquation& eq, std::size_t n, unsigned r,
                         std::size_t budget) {
  return !find_avoiding_coloring(eq, n, r, budget).has_value();
}

std::vector<Nat> fs(std::span<const Nat> x) {
  if (x.size() > kMaxFsInput)
    throw Error(ErrorKind::TooLarge,
                std::to_string(x.size()) + " elements exceed the FS limit " +
                    std::to_string(kMaxFsInput));
  std::vector<Nat> sums;
  for (Nat v : x) {
    std::vector<Nat> next = sums;
    next.push_back(v);
    for (Nat s : sums) next.push_back(s + v);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return sums;
}

std::optional<FsWitness> find_fs_set(const Coloring& chi, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  if (k > kMaxFsWitnessSize)
    throw Error(ErrorKind::TooLarge,
                "k = " + std::to_string(k) + " exceeds the desk-scale limit " +
                    std::to_string(kMaxFsWitnessSize));
  const Nat n = chi.size();
  std::vector<Nat> chosen;
  std::vector<Nat> sums;
  std::vector<bool> is_sum(n + 1, false);

  auto extend = [&](auto& self, unsigned color) -> bool {
    if (chosen.size() == k) return true;
    for (Nat y = chosen.back() + 1; y <= n; ++y) {
      if (chi.of(y) != color || is_sum[y]) continue;
      std::vector<Nat> added{y};
      bool ok = true;
      for (Nat s : sums) {
        const Nat t = s + y;
        if (t > n || is_sum[t] || chi.of(t) != color) {
          ok = false;
          break;
        }
        added.push_back(t);
      }
      if (!ok) continue;
      chosen.push_back(y);
      for (Nat t : added) is_sum[t] = true;
      const std::size_t before = sums.size();
      sums.insert(sums.end(), added.begin(), added.end());
      if (self(self, color)) return true;
      sums.resize(before);
      for (Nat t : added) is_sum[t] = false;
      chosen.pop_back();
    }
    return false;
  };

  for (Nat x = 1; x <= n; ++x) {
    const unsigned color = chi.of(x);
    chosen = {x};
    sums = {x};
    is_sum[x] = true;
    if (extend(extend, color)) return FsWitness{chosen, color};
    is_sum[x] = false;
  }
  return std::nullopt;
}

namespace {

unsigned atom_of(std::span<const SemilinearSet> sets, Nat v) {
  unsigned atom = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].contains(v)) atom |= 1u << i;
  return atom;
}

}  // namespace

bool in_gamma(std::span<const SemilinearSet> sets, Nat a, Nat b) {
  if (b <= a || a == 0) return false;
  const unsigned atom = atom_of(sets, a);
  return atom_of(sets, b) == atom && atom_of(sets, b - a) == atom;
}

std::pair<Nat, Nat> gamma_fip_witness(std::span<const SemilinearSet> sets,
                                      Nat n) {
  if (sets.size() > 3)
    throw Error(ErrorKind::TooLarge,
                std::to_string(sets.size()) + " sets exceed the limit of 3");
  std::vector<unsigned> atom(n + 1, 0);
  for (Nat v = 1; v <= n; ++v) atom[v] = atom_of(sets, v);
  for (Nat b = 2; b <= n; ++b)
    for (Nat a = 1; a < b; ++a)
      if (atom[a] == atom[b] && atom[b - a] == atom[b]) return {a, b};
  throw Error(ErrorKind::NotFound,
              "no pair in [1, " + std::to_string(n) +
                  "] has a, b, b - a in one atom; enlarge the window");
}

TriadicSplit triadic_split(const BigNat& n) {
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "3-adic valuation of 0 is undefined");
  TriadicSplit split{0, n};
  while (split.unit % 3 == 0) {
    split.unit /= 3;
    ++split.valuation;
  }
  return split;
}

ObstructionReport star_obstruction_check(const BigNat& a, const BigNat& b) {
  if (a == 0 || b <= a)
    throw Error(ErrorKind::PreconditionViolated, "need 1 <= a < b");
  const TriadicSplit sa = triadic_split(a);
  const TriadicSplit sb = triadic_split(b);
  if (sa.valuation >= sb.valuation)
    throw Error(ErrorKind::PreconditionViolated,
                "need v3(a) < v3(b), got " + std::to_string(sa.valuation) +
                    " and " + std::to_string(sb.valuation));
  ObstructionReport r;
  r.a = a;
  r.b = b;
  r.difference = b - a;
  const TriadicSplit sd = triadic_split(r.difference);
  r.valuation_a = sa.valuation;
  r.valuation_b = sb.valuation;
  r.valuation_difference = sd.valuation;
  r.unit_a_mod3 = static_cast<unsigned>(sa.unit % 3);
  r.unit_difference_mod3 = static_cast<unsigned>(sd.unit % 3);
  r.valuation_preserved = sd.valuation == sa.valuation;
  r.unit_negated = (r.unit_a_mod3 + r.unit_difference_mod3) % 3 == 0;
  const std::string j = std::to_string(r.unit_a_mod3);
  if (r.valuation_preserved && r.unit_negated) {
    r.conclusion = "v3(b-a) = v3(a) and unit(b-a) = -unit(a) (mod 3): a has "
                   "unit class " + j + ", b-a has the other one";
  } else {
    r.conclusion = "congruence failed for j = " + j;
  }
  return r;
}

}  // namespace betan
