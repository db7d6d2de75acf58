#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "betan/error.hpp"
#include "betan/ramsey.hpp"
#include "support.hpp"

using namespace betan;
using namespace betan::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

Coloring coloring(const std::string& digits) {
  std::vector<std::uint8_t> colors;
  unsigned top = 1;
  for (char c : digits) {
    colors.push_back(static_cast<std::uint8_t>(c - '0'));
    top = std::max(top, static_cast<unsigned>(c - '0'));
  }
  return Coloring::from(colors, top);
}

/// Monochromatic solution of sum c_i x_i = 0 in [1, N], by brute force over
/// all tuples (arity at most 3 here).
bool has_mono_solution(const std::vector<std::int64_t>& c, const Coloring& chi) {
  const std::int64_t n = static_cast<std::int64_t>(chi.size());
  REQUIRE(c.size() == 3);
  for (std::int64_t x = 1; x <= n; ++x)
    for (std::int64_t y = 1; y <= n; ++y)
      for (std::int64_t z = 1; z <= n; ++z)
        if (c[0] * x + c[1] * y + c[2] * z == 0 &&
            chi.of(static_cast<Nat>(x)) == chi.of(static_cast<Nat>(y)) &&
            chi.of(static_cast<Nat>(y)) == chi.of(static_cast<Nat>(z)))
          return true;
  return false;
}

FunctionalGraph random_graph(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    f[i] = static_cast<std::uint32_t>(j);
  }
  return FunctionalGraph(std::move(f));
}

}  // namespace

TEST_CASE("functional graphs") {
  CHECK(kind_of([] { FunctionalGraph({1, 1}); }) == ErrorKind::FixedPointPresent);
  CHECK(kind_of([] { FunctionalGraph({2, 0}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("three-coloring small graphs") {
  const FunctionalGraph two({1, 0});
  const Coloring c2 = three_color(two);
  CHECK(verify_coloring(two, c2));
  CHECK(c2.colors[0] != c2.colors[1]);

  const FunctionalGraph tri({1, 2, 0});
  CHECK(verify_coloring(tri, three_color(tri)));
  // No 2-coloring of an odd cycle.
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::uint8_t> colors;
    for (int i = 0; i < 3; ++i) colors.push_back(static_cast<std::uint8_t>(1 + (mask >> i & 1)));
    CHECK_FALSE(verify_coloring(tri, Coloring::from(colors, 2)));
  }

  CHECK(verify_coloring(two, coloring("12")));
  CHECK_FALSE(verify_coloring(two, coloring("11")));
  CHECK(verify_coloring(tri, coloring("123")));
  CHECK(kind_of([&] { verify_coloring(tri, coloring("12")); }) ==
        ErrorKind::SizeMismatch);
}

TEST_CASE("three-coloring random graphs") {
  Rng rng(501);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, uniform(rng, 2, 300));
    const Coloring chi = three_color(g);
    CHECK(verify_coloring(g, chi));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(chi.colors[i] != chi.colors[g(i)]);
  }
  const auto big = random_graph(rng, 100'000);
  const auto start = std::chrono::steady_clock::now();
  const Coloring chi = three_color(big);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(verify_coloring(big, chi));
  MESSAGE("three_color on 1e5 vertices: " << seconds << " s");
}

TEST_CASE("rado criterion") {
  CHECK(rado_single_pr(LinearEquation({1, -1, -1})));
  CHECK_FALSE(rado_single_pr(LinearEquation({1, 1, -3})));
  CHECK(rado_single_pr(LinearEquation({2, -2})));
  CHECK(LinearEquation({1, 1, -3}).to_string() == "x1 + x2 - 3x3 = 0");
  CHECK(kind_of([] { LinearEquation({1}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { LinearEquation({1, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { rado_single_pr(LinearEquation(std::vector<std::int64_t>(26, 1))); }) ==
        ErrorKind::TooManyCoefficients);
}

TEST_CASE("rado criterion matches subset-sum enumeration") {
  Rng rng(502);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> c;
    const std::size_t k = uniform(rng, 2, 8);
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t v = static_cast<std::int64_t>(uniform(rng, 1, 9));
      c.push_back(coin(rng) ? v : -v);
    }
    bool zero = false;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s += c[i];
      zero = zero || s == 0;
    }
    CHECK(rado_single_pr(LinearEquation(c)) == zero);
  }
}

TEST_CASE("monochromatic solutions") {
  const LinearEquation diff({1, -1, -1});
  const auto s = find_mono_solution(diff, coloring("111"));
  REQUIRE(s.has_value());
  CHECK(s->values[0] - s->values[1] - s->values[2] == 0);
  CHECK(s->color == 1);

  const LinearEquation schur({1, 1, -1});
  CHECK_FALSE(find_mono_solution(schur, coloring("1221")).has_value());
  CHECK_FALSE(find_mono_solution(schur, coloring("")).has_value());
}

TEST_CASE("schur certificates") {
  const LinearEquation schur({1, 1, -1});
  CHECK(exhaustive_pr_check(schur, 5, 2));
  CHECK_FALSE(exhaustive_pr_check(schur, 4, 2));
  const auto avoid = find_avoiding_coloring(schur, 4, 2);
  REQUIRE(avoid.has_value());
  CHECK_FALSE(has_mono_solution({1, 1, -1}, *avoid));

  // Every one of the 32 colorings of [1, 5] has a triple.
  for (int mask = 0; mask < 32; ++mask) {
    std::string digits;
    for (int i = 0; i < 5; ++i) digits += (mask >> i & 1) ? '2' : '1';
    CHECK(has_mono_solution({1, 1, -1}, coloring(digits)));
  }

  CHECK(exhaustive_pr_check(LinearEquation({1, 1, -2}), 1, 1));
  CHECK_FALSE(exhaustive_pr_check(schur, 1, 1));
}

TEST_CASE("avoiding colorings for a non-regular equation") {
  const LinearEquation eq({1, 1, -3});
  const Coloring two = coloring("12112212");
  CHECK_FALSE(find_mono_solution(eq, two).has_value());
  CHECK_FALSE(has_mono_solution({1, 1, -3}, two));
  // Two colors stop working at [1, 9]; [1, 20] needs a third.
  CHECK_FALSE(find_avoiding_coloring(eq, 9, 2).has_value());
  const Coloring three = coloring("12112213313112212212");
  CHECK_FALSE(find_mono_solution(eq, three).has_value());
  CHECK_FALSE(has_mono_solution({1, 1, -3}, three));
  const auto found = find_avoiding_coloring(eq, 20, 3);
  REQUIRE(found.has_value());
  CHECK_FALSE(has_mono_solution({1, 1, -3}, *found));
}

TEST_CASE("search budget") {
  CHECK(kind_of([] { find_avoiding_coloring(LinearEquation({1, 1, -1}), 14, 3, 100); }) ==
        ErrorKind::BudgetExceeded);
}

TEST_CASE("finite sums") {
  const std::vector<Nat> x{1, 2, 4};
  CHECK(fs(x) == std::vector<Nat>{1, 2, 3, 4, 5, 6, 7});
  const std::vector<Nat> one{9};
  CHECK(fs(one) == std::vector<Nat>{9});
  const std::vector<Nat> two{2, 3};
  CHECK(fs(two) == std::vector<Nat>{2, 3, 5});

  Rng rng(503);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Nat> v;
    const std::size_t k = uniform(rng, 1, 10);
    for (std::size_t i = 0; i < k; ++i) v.push_back(uniform(rng, 1, 200));
    CHECK(fs(v) == subset_sums(v));
  }
  CHECK(kind_of([] { fs(std::vector<Nat>(21, 1)); }) == ErrorKind::TooLarge);
}

TEST_CASE("finite-sum witnesses") {
  const auto all_one = find_fs_set(coloring("1111111"), 3);
  REQUIRE(all_one.has_value());
  CHECK(all_one->elements == std::vector<Nat>{1, 2, 4});
  CHECK(fs(all_one->elements).size() == 7);

  std::string parity;
  for (int n = 1; n <= 50; ++n) parity += n % 2 == 0 ? '1' : '2';
  const auto even = find_fs_set(coloring(parity), 3);
  REQUIRE(even.has_value());
  CHECK(even->elements == std::vector<Nat>{2, 4, 8});

  const auto single = find_fs_set(coloring("2121"), 1);
  REQUIRE(single.has_value());
  CHECK(single->elements.size() == 1);

  Rng rng(504);
  for (int trial = 0; trial < 50; ++trial) {
    std::string digits;
    for (int n = 0; n < 60; ++n) digits += coin(rng) ? '1' : '2';
    const Coloring chi = coloring(digits);
    const auto w = find_fs_set(chi, 3);
    if (!w) continue;
    const auto sums = fs(w->elements);
    CHECK(sums.size() == 7);
    for (Nat s : sums) CHECK(chi.of(s) == w->color);
  }
}

TEST_CASE("gamma witnesses") {
  const std::vector<SemilinearSet> evens{
      intersect(SemilinearSet::residue_class(0, 2), SemilinearSet::interval(1, 101))};
  CHECK(gamma_fip_witness(evens, 100) == std::pair<Nat, Nat>{2, 4});
  const std::vector<SemilinearSet> all{SemilinearSet::interval(1, 101)};
  CHECK(gamma_fip_witness(all, 100) == std::pair<Nat, Nat>{1, 2});

  Rng rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<SemilinearSet> sets;
    for (int s = 0; s < 2; ++s) {
      std::vector<Nat> members;
      for (Nat n = 1; n <= 100; ++n)
        if (coin(rng)) members.push_back(n);
      sets.push_back(SemilinearSet::finite(members));
    }
    const auto [a, b] = gamma_fip_witness(sets, 100);
    CHECK(a < b);
    CHECK(b <= 100);
    CHECK(in_gamma(sets, a, b));
    for (const auto& s : sets) {
      CHECK(s.contains(a) == s.contains(b));
      CHECK(s.contains(a) == s.contains(b - a));
    }
  }
  const std::vector<SemilinearSet> four(4, SemilinearSet::naturals());
  CHECK(kind_of([&] { gamma_fip_witness(four, 100); }) == ErrorKind::TooLarge);
}

TEST_CASE("triadic splits") {
  CHECK(triadic_split(6).valuation == 1);
  CHECK(triadic_split(6).unit == 2);
  CHECK(triadic_split(1).valuation == 0);
  CHECK(triadic_split(1).unit == 1);
  CHECK(triadic_split(27).valuation == 3);
  CHECK(triadic_split(27).unit == 1);
  CHECK(kind_of([] { triadic_split(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the 3-adic obstruction") {
  const auto r = star_obstruction_check(3, 9);
  CHECK(r.difference == 6);
  CHECK(r.valuation_difference == 1);
  CHECK(r.unit_a_mod3 == 1);
  CHECK(r.unit_difference_mod3 == 2);
  CHECK(r.valuation_preserved);
  CHECK(r.unit_negated);

  const auto s = star_obstruction_check(6, 27);
  CHECK(s.difference == 21);
  CHECK(s.valuation_difference == 1);
  CHECK(s.unit_difference_mod3 == 1);
  CHECK(s.unit_a_mod3 == 2);

  CHECK(kind_of([] { star_obstruction_check(3, 6); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { star_obstruction_check(9, 3); }) == ErrorKind::PreconditionViolated);
}
