#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betan/error.hpp"
#include "betan/semilinear.hpp"
#include "support.hpp"

using namespace betan;
using namespace betan::testing;

namespace {

SemilinearSet evens() { return SemilinearSet::residue_class(0, 2); }
SemilinearSet odds() { return SemilinearSet::residue_class(1, 2); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("normalize collapses rotation-invariant patterns") {
  const auto a = SemilinearSet::normalize(0, 4, {0, 2}, {});
  CHECK(a.threshold() == 0);
  CHECK(a.period() == 2);
  CHECK(a.pattern() == std::vector<Nat>{0});
  CHECK(a == evens());
}

TEST_CASE("normalize absorbs exceptional elements agreeing with the tail") {
  const auto a = SemilinearSet::normalize(2, 2, {0}, {0});
  CHECK(a == SemilinearSet::normalize(0, 2, {0}, {}));
  for (Nat n = 0; n <= 50; ++n) CHECK(a.contains(n) == (n % 2 == 0));
}

TEST_CASE("normalize lowers the threshold past agreeing prefixes") {
  // {0,1,2} cup {5,6,...}: 3 and 4 are holes, so the threshold stays at 5.
  const auto a = SemilinearSet::normalize(10, 1, {0}, {0, 1, 2, 5, 6, 7, 8, 9});
  CHECK(a.threshold() == 5);
  CHECK(a.exceptional() == std::vector<Nat>{0, 1, 2});
}

TEST_CASE("empty pattern with period 1 is the empty set") {
  const auto a = SemilinearSet::normalize(0, 1, {}, {});
  CHECK(a == SemilinearSet::empty());
  CHECK(a.is_empty());
  CHECK(a.is_finite());
}

TEST_CASE("normalize rejects malformed fields") {
  CHECK(kind_of([] { SemilinearSet::normalize(0, 0, {}, {}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SemilinearSet::normalize(0, 3, {3}, {}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SemilinearSet::normalize(2, 3, {0}, {2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SemilinearSet::residue_class(0, kMaxPeriod + 1); }) ==
        ErrorKind::TooLarge);
}

TEST_CASE("membership") {
  CHECK(member(evens(), 4));
  const auto a = SemilinearSet::normalize(6, 3, {0}, {0, 3, 5});
  CHECK(member(a, 5));
  CHECK_FALSE(member(a, 4));
  CHECK_FALSE(member(SemilinearSet::empty(), 0));
}

TEST_CASE("boolean operations") {
  CHECK(complement(evens()) == odds());
  CHECK(shift_left(SemilinearSet::residue_class(0, 3), 1) ==
        SemilinearSet::residue_class(2, 3));
  const auto six = intersect(evens(), SemilinearSet::residue_class(0, 3));
  CHECK(six == SemilinearSet::residue_class(0, 6));
  for (Nat n = 0; n <= 60; ++n) CHECK(six.contains(n) == (n % 6 == 0));
  CHECK(set_union(evens(), odds()) == SemilinearSet::naturals());
  CHECK(difference(SemilinearSet::naturals(), evens()) == odds());
}

TEST_CASE("boolean operations agree with raw membership") {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const RawSet ra = random_raw(rng);
    const RawSet rb = random_raw(rng);
    const auto a = ra.build(), b = rb.build();
    const Nat limit = horizon(std::max(ra.threshold, rb.threshold),
                              ra.period * rb.period);
    CHECK(agrees(a, [&](Nat n) { return ra.contains(n); }, limit));
    CHECK(agrees(set_union(a, b),
                 [&](Nat n) { return ra.contains(n) || rb.contains(n); }, limit));
    CHECK(agrees(intersect(a, b),
                 [&](Nat n) { return ra.contains(n) && rb.contains(n); }, limit));
    CHECK(agrees(complement(a), [&](Nat n) { return !ra.contains(n); }, limit));
    const Nat k = uniform(rng, 0, 40);
    CHECK(agrees(shift_left(a, k), [&](Nat n) { return ra.contains(n + k); },
                 limit));
    CHECK(agrees(shift_right(a, k),
                 [&](Nat n) { return n >= k && ra.contains(n - k); }, limit + k));
  }
}

TEST_CASE("boolean algebra laws hold on canonical values") {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_set(rng, 36, 50);
    const auto b = random_set(rng, 36, 50);
    const auto c = random_set(rng, 36, 50);
    CHECK(complement(set_union(a, b)) ==
          intersect(complement(a), complement(b)));
    CHECK(complement(intersect(a, b)) ==
          set_union(complement(a), complement(b)));
    CHECK(intersect(a, set_union(b, c)) ==
          set_union(intersect(a, b), intersect(a, c)));
    CHECK(set_union(a, intersect(b, c)) ==
          intersect(set_union(a, b), set_union(a, c)));
    CHECK(complement(complement(a)) == a);
  }
}

TEST_CASE("shift round trips") {
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_set(rng);
    const Nat n = uniform(rng, 0, 50);
    CHECK(shift_left(shift_right(a, n), n) == a);
    CHECK(shift_right(shift_left(a, n), n) ==
          difference(a, SemilinearSet::interval(0, n)));
  }
}

TEST_CASE("preimage under affine maps") {
  const auto m3 = SemilinearSet::residue_class(0, 3);
  CHECK(preimage_affine(m3, AffineMap{3, 0}) == SemilinearSet::naturals());
  CHECK(preimage_affine(m3, AffineMap{3, 1}) == SemilinearSet::empty());
  const auto p = preimage_affine(SemilinearSet::residue_class(1, 4), AffineMap{2, 1});
  CHECK(p == evens());
  for (Nat n = 0; n <= 40; ++n) CHECK(p.contains(n) == (n % 2 == 0));
  CHECK(kind_of([] { AffineMap{0, 1}; }) == ErrorKind::InvalidArgument);

  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const RawSet ra = random_raw(rng);
    const AffineMap f{uniform(rng, 1, 6), uniform(rng, 0, 20)};
    CHECK(agrees(preimage_affine(ra.build(), f),
                 [&](Nat n) { return ra.contains(f(n)); },
                 horizon(ra.threshold, ra.period) + 10));
  }
}

TEST_CASE("schnirelmann density") {
  CHECK(schnirelmann(odds()) == Rational(1, 2));
  CHECK(schnirelmann(evens()) == Rational(0));
  CHECK(schnirelmann(SemilinearSet::naturals()) == Rational(1));
  CHECK(schnirelmann(SemilinearSet::empty()) == Rational(0));
  const auto [count, n] = prefix_infimum([](Nat k) { return k % 2 == 1; }, 10000);
  CHECK(Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n)) ==
        Rational(1, 2));
}

TEST_CASE("schnirelmann agrees with the prefix oracle") {
  Rng rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    const RawSet ra = random_raw(rng);
    const auto a = ra.build();
    const Nat limit = 10 * (ra.threshold + ra.period);
    const auto [count, n] = prefix_infimum([&](Nat k) { return ra.contains(k); }, limit);
    Rational expected(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
    // Past the threshold the prefix ratios move monotonically toward w/p.
    expected = std::min(expected, Rational(static_cast<std::int64_t>(ra.tail_count()),
                                           static_cast<std::int64_t>(ra.period)));
    CHECK(schnirelmann(a) == expected);
  }
}

TEST_CASE("asymptotic and banach densities") {
  CHECK(asymptotic(evens()) == Rational(1, 2));
  CHECK(banach(evens()) == Rational(1, 2));
  const auto two_thirds = set_union(SemilinearSet::residue_class(0, 3),
                                    SemilinearSet::residue_class(1, 3));
  CHECK(asymptotic(two_thirds) == Rational(2, 3));
  CHECK(banach(two_thirds) == Rational(2, 3));
  CHECK(banach(SemilinearSet::empty()) == Rational(0));

  // Sliding windows of length <= 1000 over the evens.
  std::size_t best = 0;
  for (Nat start = 0; start < 10; ++start) {
    std::size_t c = 0;
    for (Nat n = start; n < start + 1000; ++n) c += n % 2 == 0;
    best = std::max(best, c);
  }
  CHECK(best == 500);
}

TEST_CASE("density chain") {
  const Densities d = densities(evens());
  CHECK(d.schnirelmann < d.asymptotic);
  Rng rng(106);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_set(rng);
    const Densities e = densities(a);
    CHECK(e.schnirelmann <= e.lower);
    CHECK(e.lower == e.upper);
    CHECK(e.upper <= e.banach);
  }
}

TEST_CASE("best rotation") {
  CHECK(best_rotation(evens()) == 1);
  CHECK(schnirelmann(rotated_tail(evens(), 1)) == Rational(1, 2));

  const auto a = SemilinearSet::normalize(0, 3, {0, 1}, {});
  const Nat r = best_rotation(a);
  const auto rotated = rotated_tail(a, r);
  CHECK(rotated.contains(1));
  CHECK(rotated.contains(2));
  CHECK(schnirelmann(rotated) == Rational(2, 3));

  CHECK(best_rotation(SemilinearSet::naturals()) == 0);
  CHECK(kind_of([] { best_rotation(SemilinearSet::finite({1, 2})); }) ==
        ErrorKind::NoRotation);
}

TEST_CASE("best rotation reaches the banach density") {
  Rng rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    RawSet ra = random_raw(rng);
    if (ra.tail_count() == 0) ra.tail[0] = true;
    const auto a = ra.build();
    const Nat r = best_rotation(a);
    const auto [count, n] = prefix_infimum(
        [&](Nat k) { return bool(ra.tail[(k + r) % ra.period]); }, 4 * ra.period);
    const Rational w(static_cast<std::int64_t>(ra.tail_count()),
                     static_cast<std::int64_t>(ra.period));
    CHECK(std::min(Rational(static_cast<std::int64_t>(count),
                            static_cast<std::int64_t>(n)),
                   w) == w);
    CHECK(schnirelmann(rotated_tail(a, r)) == banach(a));
  }
}

TEST_CASE("canonical text") {
  CHECK(to_string(SemilinearSet::empty()) == "0");
  CHECK(to_string(SemilinearSet::naturals()) == "N");
  CHECK(to_string(evens()) == "0%2");
  CHECK(to_string(SemilinearSet::finite({1, 3})) == "{1,3}");
  CHECK(to_string(SemilinearSet::interval(2, 9)) == "[2,9)");
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(3)) == "3");
}
