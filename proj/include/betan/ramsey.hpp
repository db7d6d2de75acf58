#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betan/bignat.hpp"
#include "betan/semilinear.hpp"

namespace betan {

/// A map f : [0, N) -> [0, N) without fixed points.
class FunctionalGraph {
 public:
  /// Throws OutOfRange for an image >= N and FixedPointPresent for f(i) = i.
  explicit FunctionalGraph(std::vector<std::uint32_t> map);

  std::size_t size() const { return map_.size(); }
  std::uint32_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::uint32_t>& map() const { return map_; }

 private:
  std::vector<std::uint32_t> map_;
};

/// Colors in [1, num_colors], one per cell. Cell i colors vertex i of a
/// functional graph, or the integer i + 1 when the coloring is read as a
/// partition of [1, N].
struct Coloring {
  unsigned num_colors = 1;
  std::vector<std::uint8_t> colors;

  std::size_t size() const { return colors.size(); }
  /// Color of the integer n in [1, N].
  unsigned of(Nat n) const { return colors[n - 1]; }

  /// Throws InvalidArgument on a color outside [1, num_colors].
  static Coloring from(std::vector<std::uint8_t> colors, unsigned num_colors);
};

/// c_1 X_1 + ... + c_k X_k = 0 with k >= 2 and every c_i != 0.
class LinearEquation {
 public:
  explicit LinearEquation(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::size_t arity() const { return coeffs_.size(); }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// chi(i) != chi(f(i)) for all i, using colors {1, 2, 3}. Vertices are
/// peeled off while their remaining in-degree is at most one (such a vertex
/// always exists by pigeonhole), then colored in reverse peeling order; each
/// vertex then has at most two already-colored neighbours. Linear time.
Coloring three_color(const FunctionalGraph& g);

/// Throws SizeMismatch when the sizes differ.
bool verify_coloring(const FunctionalGraph& g, const Coloring& chi);

inline constexpr std::size_t kMaxRadoCoefficients = 25;

/// True iff some nonempty subset of the coefficients sums to zero (the
/// single-equation partition-regularity criterion). Throws
/// TooManyCoefficients above kMaxRadoCoefficients.
bool rado_single_pr(const LinearEquation& eq);

struct MonoSolution {
  std::vector<Nat> values;
  unsigned color;
};

/// A monochromatic solution in [1, N], searching colors in increasing order
/// and tuples lexicographically; the first one found is returned.
std::optional<MonoSolution> find_mono_solution(const LinearEquation& eq,
                                               const Coloring& chi);

/// Returns a solution whose values all lie in `candidates` (sorted,
/// positive), or nullopt.
std::optional<std::vector<Nat>> solve_within(const LinearEquation& eq,
                                             std::span<const Nat> candidates);

inline constexpr std::size_t kDefaultSearchBudget = 20'000'000;

/// An r-coloring of [1, N] with no monochromatic solution, or nullopt if
/// every coloring has one. Colors are introduced in order of first use, so
/// the integer 1 always gets color 1. Throws BudgetExceeded when more than
/// `budget` partial colorings are visited.
std::optional<Coloring> find_avoiding_coloring(
    const LinearEquation& eq, std::size_t n, unsigned r,
    std::size_t budget = kDefaultSearchBudget);

/// True iff every r-coloring of [1, N] admits a monochromatic solution.
bool exhaustive_pr_check(const LinearEquation& eq, std::size_t n, unsigned r,
                         std::size_t budget = kDefaultSearchBudget);

inline constexpr std::size_t kMaxFsInput = 20;

/// FS(X): sums of nonempty subsets of X, sorted. Throws TooLarge when
/// |X| > kMaxFsInput.
std::vector<Nat> fs(std::span<const Nat> x);

struct FsWitness {
  std::vector<Nat> elements;
  unsigned color;
};

inline constexpr std::size_t kMaxFsWitnessSize = 6;

/// X with |X| = k whose 2^k - 1 subset sums are pairwise distinct, lie in
/// [1, N] and share one color. Depth-first, smallest candidate first.
/// nullopt means the window was exhausted, not that no such X exists in N.
std::optional<FsWitness> find_fs_set(const Coloring& chi, std::size_t k);

/// Smallest (a, b), ordered by b then a, with 1 <= a < b <= N such that
/// a, b and b - a lie in the same atom of the Boolean algebra generated by
/// the sets (restricted to [1, N]). Throws TooLarge for more than three
/// sets and NotFound when the window has no witness.
std::pair<Nat, Nat> gamma_fip_witness(std::span<const SemilinearSet> sets,
                                      Nat n);

/// True iff a, b, b - a are in the same atom.
bool in_gamma(std::span<const SemilinearSet> sets, Nat a, Nat b);

struct TriadicSplit {
  std::uint64_t valuation;
  BigNat unit;
};

/// n = 3^valuation * unit with 3 not dividing unit. Throws InvalidArgument
/// for n = 0.
TriadicSplit triadic_split(const BigNat& n);

struct ObstructionReport {
  BigNat a;
  BigNat b;
  BigNat difference;
  std::uint64_t valuation_a;
  std::uint64_t valuation_b;
  std::uint64_t valuation_difference;
  unsigned unit_a_mod3;
  unsigned unit_difference_mod3;
  bool valuation_preserved;  // v3(b - a) == v3(a)
  bool unit_negated;         // unit(b - a) = -unit(a) (mod 3)
  std::string conclusion;
};

/// Checks the 3-adic congruences behind the absence of star-idempotents.
/// Throws PreconditionViolated unless 1 <= a < b and v3(a) < v3(b).
ObstructionReport star_obstruction_check(const BigNat& a, const BigNat& b);

}  // namespace betan
