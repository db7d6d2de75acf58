#include "betan/profinite.hpp"

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "betan/error.hpp"

namespace betan {

namespace {

using Wide = boost::multiprecision::uint128_t;

void require_depth(const SemilinearSet& a, const ProfinitePoint& g) {
  if (g.modulus() % a.period() != 0)
    throw Error(ErrorKind::InsufficientDepth,
                "period " + std::to_string(a.period()) +
                    " does not divide the depth of point " + to_string(g));
}

void require_same_depth(const ProfinitePoint& g, const ProfinitePoint& d) {
  if (g.modulus() != d.modulus())
    throw Error(ErrorKind::DepthMismatch,
                "points " + to_string(g) + " and " + to_string(d) +
                    " have different depths; align them with reduce");
}

}  // namespace

ProfinitePoint::ProfinitePoint(Nat modulus, Nat residue)
    : modulus_(modulus), residue_(residue) {
  if (modulus == 0)
    throw Error(ErrorKind::InvalidArgument, "point depth must be >= 1");
  if (residue >= modulus)
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(residue) +
                    " is not below the depth " + std::to_string(modulus));
}

std::string to_string(const ProfinitePoint& p) {
  return std::to_string(p.modulus()) + ":" + std::to_string(p.residue());
}

ProfinitePoint reduce(const ProfinitePoint& g, Nat d) {
  if (d == 0 || g.modulus() % d != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(d) +
                                            " does not divide the depth " +
                                            std::to_string(g.modulus()));
  return {d, g.residue() % d};
}

ProfinitePoint lift(const ProfinitePoint& g, Nat modulus, Nat residue) {
  if (modulus == 0 || modulus % g.modulus() != 0)
    throw Error(ErrorKind::NotADivisor,
                "depth " + std::to_string(g.modulus()) + " does not divide " +
                    std::to_string(modulus));
  if (residue >= modulus)
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(residue) +
                    " is not below the depth " + std::to_string(modulus));
  if (residue % g.modulus() != g.residue())
    throw Error(ErrorKind::IncompatibleLift,
                std::to_string(residue) + " mod " +
                    std::to_string(g.modulus()) + " is not " +
                    std::to_string(g.residue()));
  return {modulus, residue};
}

ProfinitePoint add(const ProfinitePoint& g, const ProfinitePoint& d) {
  require_same_depth(g, d);
  const Nat m = g.modulus();
  return {m, static_cast<Nat>((Wide{g.residue()} + d.residue()) % m)};
}

ProfinitePoint sub(const ProfinitePoint& d, const ProfinitePoint& g) {
  require_same_depth(g, d);
  const Nat m = g.modulus();
  return {m, static_cast<Nat>((Wide{d.residue()} + m - g.residue()) % m)};
}

ProfinitePoint add_integer(const ProfinitePoint& g, std::int64_t k) {
  const Nat m = g.modulus();
  const Nat magnitude =
      k < 0 ? static_cast<Nat>(-(k + 1)) + 1 : static_cast<Nat>(k);
  const Nat step = magnitude % m;
  const Nat r = k < 0 ? (g.residue() + m - step) % m
                      : static_cast<Nat>((Wide{g.residue()} + step) % m);
  return {m, r};
}

bool member_set(const SemilinearSet& a, const ProfinitePoint& g) {
  require_depth(a, g);
  return a.tail_contains(g.residue());
}

SemilinearSet hyper_shift(const SemilinearSet& a, const ProfinitePoint& g) {
  require_depth(a, g);
  return rotated_tail(a, g.residue() % a.period());
}

SemilinearSet ultrafilter_shift(const SemilinearSet& a,
                                const ProfinitePoint& g) {
  require_depth(a, g);
  // A - n and A - (n + p) share their periodic regime, so one period of n
  // determines the whole set.
  std::vector<Nat> pattern;
  for (Nat n = 0; n < a.period(); ++n)
    if (member_set(shift_left(a, n), g)) pattern.push_back(n);
  return SemilinearSet::normalize(0, a.period(), std::move(pattern), {});
}

bool pseudo_sum_member(const SemilinearSet& a, const ProfinitePoint& g,
                       const ProfinitePoint& d) {
  require_same_depth(g, d);
  return member_set(hyper_shift(a, d), g);
}

bool star_member(const SemilinearSet& a, const ProfinitePoint& g,
                 const ProfinitePoint& d) {
  require_same_depth(g, d);
  require_depth(a, d);
  // {n : A + n in U_d} has period p: (A + n) and (A + n + p) agree at
  // infinity.
  std::vector<Nat> pattern;
  for (Nat n = 0; n < a.period(); ++n)
    if (member_set(shift_right(a, n), d)) pattern.push_back(n);
  const auto lifted =
      SemilinearSet::normalize(0, a.period(), std::move(pattern), {});
  return member_set(lifted, g);
}

bool is_idempotent(const ProfinitePoint& g) {
  return (Wide{g.residue()} * 2) % g.modulus() == g.residue();
}

bool image_member(const SemilinearSet& a, const AffineMap& f,
                  const ProfinitePoint& g) {
  return member_set(preimage_affine(a, f), g);
}

ProfinitePoint apply(const AffineMap& f, const ProfinitePoint& g) {
  const Nat m = g.modulus();
  const Wide v = (Wide{f.scale % m} * g.residue() + f.offset % m) % m;
  return {m, static_cast<Nat>(v)};
}

}  // namespace betan
