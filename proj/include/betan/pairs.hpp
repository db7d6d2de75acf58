#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "betan/profinite.hpp"
#include "betan/semilinear.hpp"

namespace betan {

/// Subset of N x N built from four primitive families with union,
/// intersection and complement. Immutable; copies share structure.
class PairSet {
 public:
  struct Rect;
  struct SumBand;
  struct DiffBand;
  struct UpperTriangle;
  struct Union;
  struct Intersection;
  struct Complement;

  using Node = std::variant<Rect, SumBand, DiffBand, UpperTriangle, Union,
                            Intersection, Complement>;

  static PairSet rect(SemilinearSet a, SemilinearSet b);
  static PairSet sum_band(SemilinearSet a);
  static PairSet diff_band(SemilinearSet a);
  static PairSet upper_triangle();

  const Node& node() const;

  /// Concrete membership of (n, m).
  bool contains(Nat n, Nat m) const;

 private:
  explicit PairSet(Node node);
  std::shared_ptr<const Node> node_;

  friend PairSet operator|(const PairSet&, const PairSet&);
  friend PairSet operator&(const PairSet&, const PairSet&);
  friend PairSet operator!(const PairSet&);
};

/// A x B.
struct PairSet::Rect {
  SemilinearSet first;
  SemilinearSet second;
};
/// {(n, m) : n + m in A}.
struct PairSet::SumBand {
  SemilinearSet set;
};
/// {(n, m) : m >= n and m - n in A}.
struct PairSet::DiffBand {
  SemilinearSet set;
};
/// {(n, m) : n < m}.
struct PairSet::UpperTriangle {};
struct PairSet::Union {
  PairSet left;
  PairSet right;
};
struct PairSet::Intersection {
  PairSet left;
  PairSet right;
};
struct PairSet::Complement {
  PairSet inner;
};

inline const PairSet::Node& PairSet::node() const { return *node_; }

PairSet operator|(const PairSet& a, const PairSet& b);
PairSet operator&(const PairSet& a, const PairSet& b);
PairSet operator!(const PairSet& a);

/// Text form using the pair grammar (`rect(E1, E2)`, `sumband(E)`,
/// `diffband(E)`, `delta+`, `| & !`).
std::string to_string(const PairSet& x);

/// Vertical fiber X_n = {m : (n, m) in X}.
SemilinearSet fiber(const PairSet& x, Nat n);

/// What residues cannot see about beta - alpha: its sign and whether it is
/// finite.
struct PairDiff {
  enum class Kind { InfinitePositive, InfiniteNegative, Zero, FiniteOffset };
  Kind kind = Kind::InfinitePositive;
  std::int64_t offset = 0;  // meaningful for FiniteOffset only

  static PairDiff infinite_positive() { return {Kind::InfinitePositive, 0}; }
  static PairDiff infinite_negative() { return {Kind::InfiniteNegative, 0}; }
  static PairDiff zero() { return {Kind::Zero, 0}; }
  static PairDiff finite(std::int64_t k) { return {Kind::FiniteOffset, k}; }

  bool operator==(const PairDiff&) const = default;
};

std::string to_string(const PairDiff& d);

/// Ordered pair (alpha, beta) of infinite points at equal depth, with
/// declared metadata on beta - alpha checked against the residues.
class PairPoint {
 public:
  /// Throws DepthMismatch on unequal depths and InconsistentDiff when the
  /// residues contradict `diff`.
  PairPoint(ProfinitePoint alpha, ProfinitePoint beta, PairDiff diff);

  const ProfinitePoint& alpha() const { return alpha_; }
  const ProfinitePoint& beta() const { return beta_; }
  const PairDiff& diff() const { return diff_; }

  bool operator==(const PairPoint&) const = default;

 private:
  ProfinitePoint alpha_;
  ProfinitePoint beta_;
  PairDiff diff_;
};

/// X in U_(alpha, beta).
bool pair_member(const PairSet& x, const PairPoint& p);

/// {n : X_n in U_d}, built leafwise. Valid because the trace of U_d is prime,
/// so the Boolean structure of X passes through unchanged.
SemilinearSet fiber_membership_set(const PairSet& x, const ProfinitePoint& d);

/// X in U_g (x) U_d, i.e. {n : X_n in U_d} in U_g.
bool tensor_member(const PairSet& x, const ProfinitePoint& g,
                   const ProfinitePoint& d);

/// The pair point whose generated ultrafilter is U_g (x) U_d here.
PairPoint canonical_tensor_point(const ProfinitePoint& g,
                                 const ProfinitePoint& d);

/// {n : (n, n) in X}.
SemilinearSet diagonal_section(const PairSet& x);
/// X in the diagonal ultrafilter of U_g.
bool diagonal_member(const PairSet& x, const ProfinitePoint& g);

/// (f, g)(P): residues pushed through the maps, difference metadata carried
/// along for increasing affine maps.
PairPoint image_pair(const AffineMap& f, const AffineMap& g,
                     const PairPoint& p);

}  // namespace betan
