#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betan/error.hpp"
#include "betan/pairs.hpp"
#include "support.hpp"

using namespace betan;
using namespace betan::testing;

namespace {

SemilinearSet rc(Nat r, Nat m) { return SemilinearSet::residue_class(r, m); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

/// Random pair set over sets whose periods divide m.
PairSet random_pair_set(Rng& rng, Nat m, int depth = 2) {
  if (depth == 0 || coin(rng, 0.4)) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        return PairSet::rect(random_raw_dividing(rng, m).build(),
                             random_raw_dividing(rng, m).build());
      case 1:
        return PairSet::sum_band(random_raw_dividing(rng, m).build());
      case 2:
        return PairSet::diff_band(random_raw_dividing(rng, m).build());
      default:
        return PairSet::upper_triangle();
    }
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return random_pair_set(rng, m, depth - 1) | random_pair_set(rng, m, depth - 1);
    case 1:
      return random_pair_set(rng, m, depth - 1) & random_pair_set(rng, m, depth - 1);
    default:
      return !random_pair_set(rng, m, depth - 1);
  }
}

}  // namespace

TEST_CASE("concrete membership and fibers") {
  const auto x = PairSet::rect(rc(0, 2), rc(0, 3)) | PairSet::upper_triangle();
  CHECK(x.contains(2, 3));
  CHECK(x.contains(4, 0));
  CHECK_FALSE(x.contains(3, 1));
  CHECK(fiber(PairSet::diff_band(rc(0, 3)), 2) ==
        shift_right(rc(0, 3), 2));
  CHECK(fiber(PairSet::upper_triangle(), 4) == difference(SemilinearSet::naturals(),
                                                          SemilinearSet::interval(0, 5)));
}

TEST_CASE("fibers agree with concrete membership") {
  Rng rng(301);
  for (int trial = 0; trial < 100; ++trial) {
    const Nat m = random_depth(rng);
    const PairSet x = random_pair_set(rng, m);
    for (Nat n = 0; n < 12; ++n) {
      const auto f = fiber(x, n);
      CHECK(agrees(f, [&](Nat k) { return x.contains(n, k); }, 60));
    }
  }
}

TEST_CASE("pair points validate their metadata") {
  const ProfinitePoint a(6, 1), b(6, 4);
  CHECK_NOTHROW(PairPoint(a, b, PairDiff::infinite_positive()));
  CHECK_NOTHROW(PairPoint(a, b, PairDiff::finite(3)));
  CHECK(kind_of([&] { PairPoint(a, b, PairDiff::finite(2)); }) ==
        ErrorKind::InconsistentDiff);
  CHECK(kind_of([&] { PairPoint(a, b, PairDiff::zero()); }) ==
        ErrorKind::InconsistentDiff);
  CHECK(kind_of([&] { PairPoint(a, ProfinitePoint(3, 1), PairDiff::zero()); }) ==
        ErrorKind::DepthMismatch);
  CHECK(to_string(PairDiff::finite(3)) == "+3");
  CHECK(to_string(PairDiff::infinite_negative()) == "-inf");
}

TEST_CASE("pair membership") {
  const ProfinitePoint g(6, 0), d(6, 3);
  const PairPoint above(g, d, PairDiff::infinite_positive());
  CHECK(pair_member(PairSet::upper_triangle(), above));
  CHECK_FALSE(pair_member(PairSet::upper_triangle(), PairPoint(g, g, PairDiff::zero())));
  CHECK_FALSE(pair_member(PairSet::upper_triangle(),
                          PairPoint(d, g, PairDiff::infinite_negative())));
  CHECK(pair_member(PairSet::rect(rc(0, 2), rc(0, 3)), above));
}

TEST_CASE("fiber membership sets") {
  CHECK(fiber_membership_set(PairSet::sum_band(rc(0, 3)), ProfinitePoint(3, 1)) ==
        rc(2, 3));
  CHECK(fiber_membership_set(PairSet::upper_triangle(), ProfinitePoint(5, 2)) ==
        SemilinearSet::naturals());
  CHECK(fiber_membership_set(PairSet::rect(rc(0, 2), rc(1, 3)), ProfinitePoint(3, 0))
            .is_empty());
}

TEST_CASE("tensor membership") {
  const ProfinitePoint one(3, 1);
  CHECK(tensor_member(PairSet::upper_triangle(), one, ProfinitePoint(3, 2)));
  CHECK(tensor_member(PairSet::sum_band(rc(2, 3)), one, one));
  CHECK(pseudo_sum_member(rc(2, 3), one, one));
}

TEST_CASE("tensor identities") {
  Rng rng(302);
  for (int trial = 0; trial < 300; ++trial) {
    const Nat m = random_depth(rng);
    const auto a = random_raw_dividing(rng, m).build();
    const auto b = random_raw_dividing(rng, m).build();
    const ProfinitePoint g = random_point(rng, m), d = random_point(rng, m);
    CHECK(tensor_member(PairSet::rect(a, b), g, d) ==
          (member_set(a, g) && member_set(b, d)));
    CHECK(tensor_member(PairSet::sum_band(a), g, d) == pseudo_sum_member(a, g, d));
    CHECK(tensor_member(PairSet::diff_band(a), g, d) == star_member(a, g, d));
    CHECK(tensor_member(PairSet::upper_triangle(), g, d));
  }
}

TEST_CASE("canonical tensor points") {
  const ProfinitePoint one(3, 1);
  const PairPoint p = canonical_tensor_point(one, one);
  CHECK(p == PairPoint(one, one, PairDiff::infinite_positive()));
  CHECK(pair_member(PairSet::upper_triangle(), p));
  CHECK(pair_member(PairSet::diff_band(rc(0, 3)), p));

  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const Nat m = random_depth(rng);
    const PairSet x = random_pair_set(rng, m, 3);
    const ProfinitePoint g = random_point(rng, m), d = random_point(rng, m);
    CHECK(pair_member(x, canonical_tensor_point(g, d)) == tensor_member(x, g, d));
  }
}

TEST_CASE("diagonal sections") {
  CHECK(diagonal_section(PairSet::rect(rc(0, 2), rc(0, 3))) == rc(0, 6));
  CHECK(diagonal_section(PairSet::upper_triangle()).is_empty());
  CHECK_FALSE(diagonal_member(PairSet::upper_triangle(), ProfinitePoint(4, 1)));
  CHECK(diagonal_member(PairSet::diff_band(SemilinearSet::finite({0})),
                        ProfinitePoint(4, 1)));
  CHECK(diagonal_section(PairSet::sum_band(rc(0, 4))) == rc(0, 2));
}

TEST_CASE("images of pair points") {
  const PairPoint p(ProfinitePoint(6, 1), ProfinitePoint(6, 2),
                    PairDiff::infinite_positive());
  CHECK(image_pair(AffineMap::identity(), AffineMap::identity(), p) == p);
  const PairPoint q = image_pair(AffineMap{2, 0}, AffineMap{3, 1}, p);
  CHECK(q == PairPoint(ProfinitePoint(6, 2), ProfinitePoint(6, 1),
                       PairDiff::infinite_positive()));
  CHECK(pair_member(PairSet::rect(rc(0, 2), rc(1, 3)), q));

  const PairPoint near(ProfinitePoint(6, 1), ProfinitePoint(6, 3), PairDiff::finite(2));
  const PairPoint moved = image_pair(AffineMap{2, 1}, AffineMap{2, 1}, near);
  CHECK(moved.diff() == PairDiff::finite(4));
  CHECK(image_pair(AffineMap{1, 0}, AffineMap{2, 0}, near).diff() ==
        PairDiff::infinite_positive());
}

TEST_CASE("images preserve the canonical tensor property") {
  Rng rng(304);
  for (int trial = 0; trial < 200; ++trial) {
    const Nat m = random_depth(rng);
    const PairSet x = random_pair_set(rng, m);
    const ProfinitePoint g = random_point(rng, m), d = random_point(rng, m);
    const AffineMap f{uniform(rng, 1, 4), uniform(rng, 0, 9)};
    const AffineMap h{uniform(rng, 1, 4), uniform(rng, 0, 9)};
    const PairPoint image = image_pair(f, h, canonical_tensor_point(g, d));
    CHECK(pair_member(x, image) ==
          tensor_member(x, image.alpha(), image.beta()));
  }
}
