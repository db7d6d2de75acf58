#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "betan/bignat.hpp"
#include "betan/semilinear.hpp"

namespace betan {

/// A total membership predicate on arbitrary-precision naturals, drawn from
/// a fixed catalog and closed under Boolean operations and shifts.
class PredicateSet {
 public:
  struct Semilinear;
  /// Union of [n^2, (n+1)^2) over even n.
  struct SquaresBlocks {};
  /// n >= 1 whose 3-free part is = residue (mod 3); residue in {1, 2}.
  struct TriadicUnit {
    unsigned residue;
  };
  /// n >= 1 divisible by 3^exponent.
  struct TriadicValuationAtLeast {
    unsigned exponent;
  };
  struct Not;
  struct And;
  struct Or;
  struct ShiftLeft;
  struct ShiftRight;

  using Node = std::variant<Semilinear, SquaresBlocks, TriadicUnit,
                            TriadicValuationAtLeast, Not, And, Or, ShiftLeft,
                            ShiftRight>;

  PredicateSet(SemilinearSet set);  // NOLINT: implicit by intent
  static PredicateSet squares_blocks();
  /// Throws InvalidArgument unless residue is 1 or 2.
  static PredicateSet triadic_unit(unsigned residue);
  static PredicateSet triadic_valuation_at_least(unsigned exponent);

  bool contains(const BigNat& n) const;
  const Node& node() const;

  /// The semilinear set when the predicate is one, otherwise nullopt.
  std::optional<SemilinearSet> as_semilinear() const;

 private:
  explicit PredicateSet(Node node);
  std::shared_ptr<const Node> node_;

  friend PredicateSet operator!(const PredicateSet&);
  friend PredicateSet operator&(const PredicateSet&, const PredicateSet&);
  friend PredicateSet operator|(const PredicateSet&, const PredicateSet&);
  friend PredicateSet shift_left(const PredicateSet&, Nat);
  friend PredicateSet shift_right(const PredicateSet&, Nat);
};

struct PredicateSet::Semilinear {
  SemilinearSet set;
};
struct PredicateSet::Not {
  PredicateSet inner;
};
struct PredicateSet::And {
  PredicateSet left;
  PredicateSet right;
};
struct PredicateSet::Or {
  PredicateSet left;
  PredicateSet right;
};
struct PredicateSet::ShiftLeft {
  PredicateSet inner;
  Nat amount;
};
struct PredicateSet::ShiftRight {
  PredicateSet inner;
  Nat amount;
};

inline const PredicateSet::Node& PredicateSet::node() const { return *node_; }

PredicateSet operator!(const PredicateSet& a);
PredicateSet operator&(const PredicateSet& a, const PredicateSet& b);
PredicateSet operator|(const PredicateSet& a, const PredicateSet& b);
/// {m : m + k in P}.
PredicateSet shift_left(const PredicateSet& a, Nat k);
/// {m : m >= k and m - k in P}.
PredicateSet shift_right(const PredicateSet& a, Nat k);

/// A cap [origin, origin + length), one flag per position.
struct WindowSet {
  BigNat origin;
  std::vector<bool> bits;

  std::size_t length() const { return bits.size(); }
  std::size_t count() const;
  bool all_true() const;
  bool all_false() const;
  /// "1010..."
  std::string bit_string() const;
};

/// Throws InvalidArgument when length is 0.
WindowSet window_of(const PredicateSet& p, const BigNat& origin,
                    std::size_t length);

/// {n < length : g + n in P} as a window at origin 0; a finite stand-in for
/// the hyper-shift P_g.
WindowSet finite_hyper_shift(const PredicateSet& p, const BigNat& g,
                             std::size_t length);

/// Maximum number of members among n consecutive positions of W, over n.
/// Throws OutOfRange unless 1 <= n <= length.
Rational window_banach(const WindowSet& w, std::size_t n);

/// a_n = max count over all length-n sub-windows, for n = 1..length
/// (index 0 holds a_0 = 0).
std::vector<std::size_t> max_window_counts(const WindowSet& w);

/// Offset g within W such that for every 1 <= i <= nu the positions
/// g, ..., g + i - 1 hold at least i (a - nu / N) members, where N is the
/// window length and a = count / N. Found by repeatedly skipping the
/// shortest failing prefix. Requires a > nu / N (PreconditionViolated).
std::size_t good_start(const WindowSet& w, std::size_t nu);

/// True when every 1 <= i <= nu satisfies the prefix bound of good_start.
bool is_good_start(const WindowSet& w, std::size_t nu, std::size_t start);

/// Smallest x in [x_lo, x_hi] with x + (A cap I) = B cap (x + I), where
/// I = [i_lo, i_hi] (inclusive bounds).
std::optional<Nat> exact_embed_window(const PredicateSet& a,
                                      const PredicateSet& b, Nat i_lo,
                                      Nat i_hi, Nat x_lo, Nat x_hi);

struct EmbedWitness {
  enum class Kind { FiniteShift, Rotation };
  Kind kind;
  /// The shift g with A = B - g, or the residue r with A = hyper_shift of B
  /// at a point of residue r.
  Nat value;
};

/// Decides whether A is a hyper-shift of B (equivalently A <=_e B). The
/// identity shift is tried first, then the rotations of B's periodic
/// pattern, then finite shifts up to threshold(B) + lcm(periods) + 1.
std::optional<EmbedWitness> exact_embed_decide(const SemilinearSet& a,
                                               const SemilinearSet& b);

struct NoncommReport {
  BigNat nu;
  BigNat low;   // nu^2
  BigNat high;  // (nu + 1)^2
  WindowSet at_low;
  WindowSet at_high;
};

/// Finite hyper-shifts of the squares-blocks set at nu^2 and (nu + 1)^2.
/// Throws PreconditionViolated for odd nu.
NoncommReport noncomm_demo(const BigNat& nu, std::size_t length);

}  // namespace betan
