#pragma once

#include <cstdint>
#include <string>

#include "betan/semilinear.hpp"

namespace betan {

/// Surrogate for an infinite hypernatural: a residue system of depth M.
///
/// The point stands for some infinite alpha with alpha = residue (mod d) for
/// every divisor d of the modulus. Nothing is known modulo numbers that do
/// not divide the modulus, and operations needing that information throw
/// `Error(InsufficientDepth)` instead of guessing.
class ProfinitePoint {
 public:
  /// Throws `Error(InvalidArgument)` unless modulus >= 1 and residue < modulus.
  ProfinitePoint(Nat modulus, Nat residue);

  Nat modulus() const { return modulus_; }
  Nat residue() const { return residue_; }

  bool operator==(const ProfinitePoint&) const = default;

 private:
  Nat modulus_;
  Nat residue_;
};

/// "M:r".
std::string to_string(const ProfinitePoint& p);

/// Forget information: residue becomes r mod d. Throws NotADivisor unless d | M.
ProfinitePoint reduce(const ProfinitePoint& g, Nat d);
/// Refine to depth `modulus` with residue `residue`. Throws NotADivisor unless
/// M | modulus, IncompatibleLift unless residue = r (mod M).
ProfinitePoint lift(const ProfinitePoint& g, Nat modulus, Nat residue);

ProfinitePoint add(const ProfinitePoint& g, const ProfinitePoint& d);
/// d - g.
ProfinitePoint sub(const ProfinitePoint& d, const ProfinitePoint& g);
/// g + k for a finite k (negative k allowed: g is infinite).
ProfinitePoint add_integer(const ProfinitePoint& g, std::int64_t k);

/// A in U_g. Exceptional elements are irrelevant because g is infinite.
bool member_set(const SemilinearSet& a, const ProfinitePoint& g);

/// A_g = (*A - g) cap N, computed from residues: n in A_g iff (r + n) mod p
/// is in pattern(A).
SemilinearSet hyper_shift(const SemilinearSet& a, const ProfinitePoint& g);

/// A - U_g = {n : A - n in U_g}, evaluated one n at a time over a period.
SemilinearSet ultrafilter_shift(const SemilinearSet& a,
                                const ProfinitePoint& g);

/// A in U_g (+) U_d, decided as member_set(hyper_shift(A, d), g).
bool pseudo_sum_member(const SemilinearSet& a, const ProfinitePoint& g,
                       const ProfinitePoint& d);

/// A in U_g * U_d, i.e. {n : A + n in U_d} in U_g.
bool star_member(const SemilinearSet& a, const ProfinitePoint& g,
                 const ProfinitePoint& d);

/// U_g (+) U_g = U_g at this depth, i.e. residue 0.
bool is_idempotent(const ProfinitePoint& g);

/// A in f(U_g), i.e. f^{-1}(A) in U_g.
bool image_member(const SemilinearSet& a, const AffineMap& f,
                  const ProfinitePoint& g);

/// f(g) as a point of the same depth.
ProfinitePoint apply(const AffineMap& f, const ProfinitePoint& g);

}  // namespace betan
