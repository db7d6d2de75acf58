#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betan/pairs.hpp"
#include "betan/profinite.hpp"
#include "betan/semilinear.hpp"
#include "betan/windows.hpp"

namespace betan {

/// Syntax tree of a set expression.
///
///   atom  := {n,...} | r%m | [a,b) | N | 0 | squaresblocks
///          | triadic-unit(j) | triadic-val-ge(k) | ( expr )
///   unary := !unary | atom
///   shift := unary (<< k | >> k)*        A << k is A - k, A >> k is A + k
///   and   := shift (& shift)*
///   expr  := and (| and)*
class SetExpr {
 public:
  struct Finite {
    std::vector<Nat> elements;  // as written
  };
  struct Residue {
    Nat residue;
    Nat modulus;
  };
  struct Interval {
    Nat lo;
    Nat hi;
  };
  struct Naturals {};
  struct Empty {};
  struct SquaresBlocks {};
  struct TriadicUnit {
    unsigned residue;
  };
  struct TriadicValuationAtLeast {
    unsigned exponent;
  };
  struct Not;
  struct And;
  struct Or;
  struct ShiftLeft;
  struct ShiftRight;

  using Node =
      std::variant<Finite, Residue, Interval, Naturals, Empty, SquaresBlocks,
                   TriadicUnit, TriadicValuationAtLeast, Not, And, Or,
                   ShiftLeft, ShiftRight>;

  explicit SetExpr(Node node);

  const Node& node() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct SetExpr::Not {
  SetExpr inner;
};
struct SetExpr::And {
  SetExpr left;
  SetExpr right;
};
struct SetExpr::Or {
  SetExpr left;
  SetExpr right;
};
struct SetExpr::ShiftLeft {
  SetExpr inner;
  Nat amount;
};
struct SetExpr::ShiftRight {
  SetExpr inner;
  Nat amount;
};

inline const SetExpr::Node& SetExpr::node() const { return *node_; }

/// Structural equality.
bool operator==(const SetExpr& a, const SetExpr& b);

/// Throws SyntaxError with the offending byte offset.
SetExpr parse_expr(std::string_view text);

/// Minimal-parenthesis text; parse_expr(print(e)) == e.
std::string print(const SetExpr& e);

/// Throws Error(InvalidArgument) if the expression uses a predicate that is
/// not eventually periodic.
SemilinearSet evaluate_set(const SetExpr& e);
PredicateSet evaluate_predicate(const SetExpr& e);

SemilinearSet parse_set(std::string_view text);
PredicateSet parse_predicate(std::string_view text);

/// Pair grammar over set expressions:
///   patom := rect(E, E) | sumband(E) | diffband(E) | delta+ | ( pexpr )
///   pexpr := punary (& punary)* joined by |, with ! as prefix
PairSet parse_pair_set(std::string_view text);

/// "point M:r" or "M:r".
ProfinitePoint parse_point(std::string_view text);

}  // namespace betan
