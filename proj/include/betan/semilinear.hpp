#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace betan {

using Nat = std::uint64_t;
using Rational = boost::rational<std::int64_t>;

/// Representation limits; operations exceeding them throw `Error(TooLarge)`.
inline constexpr Nat kMaxPeriod = Nat{1} << 22;
inline constexpr Nat kMaxThreshold = Nat{1} << 22;

/// "3/4", "0", "1".
std::string to_string(const Rational& q);

/// n -> scale * n + offset, with scale >= 1 so the map is injective on N.
struct AffineMap {
  Nat scale = 1;
  Nat offset = 0;

  AffineMap() = default;
  AffineMap(Nat scale, Nat offset);

  static AffineMap identity() { return {}; }
  Nat operator()(Nat n) const;
  bool operator==(const AffineMap&) const = default;
};

/// Eventually periodic subset of N = {0, 1, 2, ...}.
///
/// For n >= threshold, n is a member iff (n mod period) is in the pattern;
/// for n < threshold, n is a member iff it is listed in the exceptional part.
/// Every value is kept in canonical form (minimal period, then minimal
/// threshold), so two sets are equal iff their fields are equal.
class SemilinearSet {
 public:
  /// The empty set.
  SemilinearSet();

  /// Normalizes raw fields. Throws `Error(InvalidArgument)` on period 0, a
  /// residue >= period, or an exceptional element >= threshold. Input
  /// vectors need not be sorted; duplicates are ignored.
  static SemilinearSet normalize(Nat threshold, Nat period,
                                 std::vector<Nat> pattern,
                                 std::vector<Nat> exceptional);

  static SemilinearSet empty() { return {}; }
  static SemilinearSet naturals();
  /// {n : n = residue mod modulus}.
  static SemilinearSet residue_class(Nat residue, Nat modulus);
  /// [lo, hi).
  static SemilinearSet interval(Nat lo, Nat hi);
  static SemilinearSet finite(std::vector<Nat> elements);

  Nat threshold() const { return threshold_; }
  Nat period() const { return period_; }
  /// Sorted residues in [0, period).
  const std::vector<Nat>& pattern() const { return pattern_; }
  /// Sorted members below the threshold.
  const std::vector<Nat>& exceptional() const { return exceptional_; }

  bool contains(Nat n) const;
  /// Membership of the periodic regime only: (n mod period) in pattern.
  bool tail_contains(Nat n) const;

  bool is_empty() const { return pattern_.empty() && exceptional_.empty(); }
  bool is_finite() const { return pattern_.empty(); }

  bool operator==(const SemilinearSet&) const = default;

 private:
  SemilinearSet(Nat threshold, Nat period, std::vector<Nat> pattern,
                std::vector<Nat> exceptional);

  Nat threshold_ = 0;
  Nat period_ = 1;
  std::vector<Nat> pattern_;
  std::vector<Nat> exceptional_;
};

bool member(const SemilinearSet& a, Nat n);

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet complement(const SemilinearSet& a);
SemilinearSet difference(const SemilinearSet& a, const SemilinearSet& b);

/// A - n = {m : m + n in A}.
SemilinearSet shift_left(const SemilinearSet& a, Nat n);
/// A + n = {a + n : a in A}.
SemilinearSet shift_right(const SemilinearSet& a, Nat n);

/// {n : f(n) in A}.
SemilinearSet preimage_affine(const SemilinearSet& a, const AffineMap& f);

/// The purely periodic set {n : (n + r) mod p in pattern(A)}, p = period(A).
SemilinearSet rotated_tail(const SemilinearSet& a, Nat r);

/// Schnirelmann density inf_{n>=1} |A cap [1,n]| / n, exact.
Rational schnirelmann(const SemilinearSet& a);
/// Asymptotic density |pattern| / period; the limit always exists here.
Rational asymptotic(const SemilinearSet& a);
/// Banach density; equals the asymptotic density on eventually periodic sets.
Rational banach(const SemilinearSet& a);

struct Densities {
  Rational schnirelmann;
  Rational lower;
  Rational upper;
  Rational asymptotic;
  Rational banach;
};
Densities densities(const SemilinearSet& a);

/// Smallest r in [0, period) such that rotated_tail(A, r) has Schnirelmann
/// density equal to banach(A). Found by the cycle lemma: r minimizes the
/// prefix sums of (period * [k in pattern] - |pattern|). Throws
/// `Error(NoRotation)` when the pattern is empty.
Nat best_rotation(const SemilinearSet& a);

/// Canonical text form, parseable by the set-expression grammar.
std::string to_string(const SemilinearSet& a);

Nat lcm_checked(Nat a, Nat b);

}  // namespace betan
