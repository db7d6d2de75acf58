#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "betan/profinite.hpp"
#include "betan/semilinear.hpp"

namespace betan::testing {

using Rng = std::mt19937_64;

inline Nat uniform(Rng& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

/// An eventually periodic set kept as raw, non-normalized fields. Membership
/// is read straight off the fields, independently of the library.
struct RawSet {
  Nat threshold = 0;
  Nat period = 1;
  std::vector<bool> tail;   // indexed by residue mod period
  std::vector<bool> below;  // indexed by n < threshold

  bool contains(Nat n) const {
    return n < threshold ? bool(below[n]) : bool(tail[n % period]);
  }

  std::size_t tail_count() const {
    return static_cast<std::size_t>(std::count(tail.begin(), tail.end(), true));
  }

  SemilinearSet build() const {
    std::vector<Nat> pattern, exceptional;
    for (Nat r = 0; r < period; ++r)
      if (tail[r]) pattern.push_back(r);
    for (Nat n = 0; n < threshold; ++n)
      if (below[n]) exceptional.push_back(n);
    return SemilinearSet::normalize(threshold, period, pattern, exceptional);
  }
};

inline RawSet random_raw(Rng& rng, Nat max_period = 36, Nat max_threshold = 12) {
  RawSet s;
  s.period = uniform(rng, 1, max_period);
  s.threshold = uniform(rng, 0, max_threshold);
  const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  s.tail.resize(s.period);
  for (Nat r = 0; r < s.period; ++r) s.tail[r] = coin(rng, density);
  s.below.resize(s.threshold);
  for (Nat n = 0; n < s.threshold; ++n) s.below[n] = coin(rng, density);
  return s;
}

/// Random raw set whose period divides `modulus`.
inline RawSet random_raw_dividing(Rng& rng, Nat modulus, Nat max_threshold = 12) {
  std::vector<Nat> divisors;
  for (Nat d = 1; d <= modulus; ++d)
    if (modulus % d == 0) divisors.push_back(d);
  RawSet s = random_raw(rng, 1, max_threshold);
  s.period = divisors[uniform(rng, 0, divisors.size() - 1)];
  s.tail.assign(s.period, false);
  for (Nat r = 0; r < s.period; ++r) s.tail[r] = coin(rng);
  return s;
}

inline SemilinearSet random_set(Rng& rng, Nat max_period = 36,
                                Nat max_threshold = 12) {
  return random_raw(rng, max_period, max_threshold).build();
}

/// Depths with many divisors, so random sets often have compatible periods.
inline Nat random_depth(Rng& rng) {
  static const Nat depths[] = {1, 2, 3, 4, 6, 8, 12, 18, 24, 30, 36};
  return depths[uniform(rng, 0, std::size(depths) - 1)];
}

inline ProfinitePoint random_point(Rng& rng, Nat modulus) {
  return ProfinitePoint(modulus, uniform(rng, 0, modulus - 1));
}

/// True when `a` and `pred` agree on [0, limit).
inline bool agrees(const SemilinearSet& a, const std::function<bool(Nat)>& pred,
                   Nat limit) {
  for (Nat n = 0; n < limit; ++n)
    if (a.contains(n) != pred(n)) return false;
  return true;
}

/// Span large enough for two sets built from raw fields to be compared by
/// membership: past both thresholds by two common periods.
inline Nat horizon(Nat threshold, Nat period) {
  return threshold + 2 * period + 2;
}

/// min over 1 <= n <= limit of |A cap [1, n]| / n, as (count, n).
inline std::pair<Nat, Nat> prefix_infimum(const std::function<bool(Nat)>& in,
                                          Nat limit) {
  Nat best_count = 1, best_n = 1, count = 0;
  bool first = true;
  for (Nat n = 1; n <= limit; ++n) {
    if (in(n)) ++count;
    if (first || count * best_n < best_count * n) {
      best_count = count;
      best_n = n;
      first = false;
    }
  }
  return {best_count, best_n};
}

/// Subset sums by direct enumeration of all nonempty subsets.
inline std::vector<Nat> subset_sums(const std::vector<Nat>& x) {
  std::vector<Nat> sums;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    Nat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask >> i & 1) s += x[i];
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

}  // namespace betan::testing
