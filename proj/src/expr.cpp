#include "betan/expr.hpp"

#include <cctype>
#include <limits>

#include "betan/error.hpp"

namespace betan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse_all() {
    SetExpr e = parse_or();
    expect_end();
    return e;
  }

  PairSet parse_pair_all() {
    PairSet x = pair_or();
    expect_end();
    return x;
  }

 private:
  // Set grammar.

  SetExpr parse_or() {
    SetExpr left = parse_and();
    while (accept('|')) left = SetExpr(SetExpr::Or{left, parse_and()});
    return left;
  }

  SetExpr parse_and() {
    SetExpr left = parse_shift();
    while (accept('&')) left = SetExpr(SetExpr::And{left, parse_shift()});
    return left;
  }

  SetExpr parse_shift() {
    SetExpr inner = parse_unary();
    for (;;) {
      if (accept("<<")) {
        inner = SetExpr(SetExpr::ShiftLeft{inner, number()});
      } else if (accept(">>")) {
        inner = SetExpr(SetExpr::ShiftRight{inner, number()});
      } else {
        return inner;
      }
    }
  }

  SetExpr parse_unary() {
    if (accept('!')) return SetExpr(SetExpr::Not{parse_unary()});
    return parse_atom();
  }

  SetExpr parse_atom() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('(')) {
      SetExpr e = parse_or();
      expect(')');
      return e;
    }
    if (accept('{')) {
      std::vector<Nat> elements;
      if (!accept('}')) {
        do {
          elements.push_back(number());
          if (elements.back() > kMaxThreshold)
            fail(at, "element exceeds the limit " + std::to_string(kMaxThreshold));
        } while (accept(','));
        expect('}');
      }
      return SetExpr(SetExpr::Finite{std::move(elements)});
    }
    if (accept('[')) {
      const Nat lo = number();
      expect(',');
      const Nat hi = number();
      expect(')');
      if (hi < lo) fail(at, "interval end is below its start");
      if (hi > kMaxThreshold)
        fail(at, "interval end exceeds the limit " + std::to_string(kMaxThreshold));
      return SetExpr(SetExpr::Interval{lo, hi});
    }
    if (peek_digit()) {
      const Nat value = number();
      if (accept('%')) {
        const std::size_t mod_at = position();
        const Nat modulus = number();
        if (modulus == 0) fail(mod_at, "modulus must be >= 1");
        if (modulus > kMaxPeriod)
          fail(mod_at, "modulus exceeds the limit " + std::to_string(kMaxPeriod));
        if (value >= modulus)
          fail(at, "residue " + std::to_string(value) +
                       " is not below the modulus " + std::to_string(modulus));
        return SetExpr(SetExpr::Residue{value, modulus});
      }
      if (value != 0)
        fail(at, "a bare number is not a set; write {" +
                     std::to_string(value) + "} or " + std::to_string(value) +
                     "%m");
      return SetExpr(SetExpr::Empty{});
    }
    const std::string name = identifier();
    if (name == "N") return SetExpr(SetExpr::Naturals{});
    if (name == "squaresblocks") return SetExpr(SetExpr::SquaresBlocks{});
    if (name == "triadic-unit") {
      expect('(');
      const std::size_t arg_at = position();
      const Nat j = number();
      expect(')');
      if (j != 1 && j != 2) fail(arg_at, "triadic-unit takes 1 or 2");
      return SetExpr(SetExpr::TriadicUnit{static_cast<unsigned>(j)});
    }
    if (name == "triadic-val-ge") {
      expect('(');
      const std::size_t arg_at = position();
      const Nat k = number();
      expect(')');
      if (k > 4096) fail(arg_at, "exponent too large");
      return SetExpr(SetExpr::TriadicValuationAtLeast{static_cast<unsigned>(k)});
    }
    if (name.empty()) fail(at, "expected a set expression");
    fail(at, "unknown set name '" + name + "'");
  }

  // Pair grammar.

  PairSet pair_or() {
    PairSet left = pair_and();
    while (accept('|')) left = left | pair_and();
    return left;
  }

  PairSet pair_and() {
    PairSet left = pair_unary();
    while (accept('&')) left = left & pair_unary();
    return left;
  }

  PairSet pair_unary() {
    if (accept('!')) return !pair_unary();
    return pair_atom();
  }

  PairSet pair_atom() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('(')) {
      PairSet x = pair_or();
      expect(')');
      return x;
    }
    const std::string name = identifier();
    if (name == "rect") {
      expect('(');
      SemilinearSet first = semilinear_argument();
      expect(',');
      SemilinearSet second = semilinear_argument();
      expect(')');
      return PairSet::rect(std::move(first), std::move(second));
    }
    if (name == "sumband" || name == "diffband") {
      expect('(');
      SemilinearSet set = semilinear_argument();
      expect(')');
      return name == "sumband" ? PairSet::sum_band(std::move(set))
                               : PairSet::diff_band(std::move(set));
    }
    if (name == "delta" && accept_raw('+')) return PairSet::upper_triangle();
    if (name.empty()) fail(at, "expected a pair-set expression");
    fail(at, "unknown pair-set name '" + name + "'");
  }

  SemilinearSet semilinear_argument() {
    const std::size_t at = position();
    const SetExpr e = parse_or();
    try {
      return evaluate_set(e);
    } catch (const Error& err) {
      fail(at, err.what());
    }
  }

  // Lexing.

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  bool accept(char c) {
    skip_space();
    return accept_raw(c);
  }

  bool accept_raw(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Nat number() {
    skip_space();
    const std::size_t start = pos_;
    Nat value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Nat digit = static_cast<Nat>(text_[pos_] - '0');
      if (value > (std::numeric_limits<Nat>::max() - digit) / 10)
        fail(start, "number out of range");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail(start, "expected a number");
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '-' || text_[pos_] == '_'))
        ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(std::size_t at, const std::string& what) {
    throw SyntaxError(at, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum Prec { kOr = 0, kAnd = 1, kShift = 2, kUnary = 3, kAtom = 4 };

std::string print_at(const SetExpr& e, int context);

std::string wrap(const std::string& s, int own, int context) {
  return own < context ? "(" + s + ")" : s;
}

std::string print_at(const SetExpr& e, int context) {
  return std::visit(
      Overloaded{
          [](const SetExpr::Finite& f) {
            std::string s = "{";
            for (std::size_t i = 0; i < f.elements.size(); ++i) {
              if (i) s += ",";
              s += std::to_string(f.elements[i]);
            }
            return s + "}";
          },
          [](const SetExpr::Residue& r) {
            return std::to_string(r.residue) + "%" + std::to_string(r.modulus);
          },
          [](const SetExpr::Interval& i) {
            return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) +
                   ")";
          },
          [](const SetExpr::Naturals&) { return std::string("N"); },
          [](const SetExpr::Empty&) { return std::string("0"); },
          [](const SetExpr::SquaresBlocks&) {
            return std::string("squaresblocks");
          },
          [](const SetExpr::TriadicUnit& t) {
            return "triadic-unit(" + std::to_string(t.residue) + ")";
          },
          [](const SetExpr::TriadicValuationAtLeast& t) {
            return "triadic-val-ge(" + std::to_string(t.exponent) + ")";
          },
          [&](const SetExpr::Not& n) {
            return wrap("!" + print_at(n.inner, kUnary), kUnary, context);
          },
          [&](const SetExpr::And& a) {
            return wrap(print_at(a.left, kAnd) + " & " +
                            print_at(a.right, kShift),
                        kAnd, context);
          },
          [&](const SetExpr::Or& o) {
            return wrap(print_at(o.left, kOr) + " | " + print_at(o.right, kAnd),
                        kOr, context);
          },
          [&](const SetExpr::ShiftLeft& s) {
            return wrap(print_at(s.inner, kShift) + " << " +
                            std::to_string(s.amount),
                        kShift, context);
          },
          [&](const SetExpr::ShiftRight& s) {
            return wrap(print_at(s.inner, kShift) + " >> " +
                            std::to_string(s.amount),
                        kShift, context);
          },
      },
      e.node());
}

[[noreturn]] void not_periodic(const char* name) {
  throw Error(ErrorKind::InvalidArgument,
              std::string(name) +
                  " is not eventually periodic; this command needs a "
                  "semilinear set");
}

}  // namespace

SetExpr::SetExpr(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      Overloaded{
          [&](const SetExpr::Finite& x) {
            return x.elements == std::get<SetExpr::Finite>(b.node()).elements;
          },
          [&](const SetExpr::Residue& x) {
            const auto& y = std::get<SetExpr::Residue>(b.node());
            return x.residue == y.residue && x.modulus == y.modulus;
          },
          [&](const SetExpr::Interval& x) {
            const auto& y = std::get<SetExpr::Interval>(b.node());
            return x.lo == y.lo && x.hi == y.hi;
          },
          [](const SetExpr::Naturals&) { return true; },
          [](const SetExpr::Empty&) { return true; },
          [](const SetExpr::SquaresBlocks&) { return true; },
          [&](const SetExpr::TriadicUnit& x) {
            return x.residue == std::get<SetExpr::TriadicUnit>(b.node()).residue;
          },
          [&](const SetExpr::TriadicValuationAtLeast& x) {
            return x.exponent ==
                   std::get<SetExpr::TriadicValuationAtLeast>(b.node()).exponent;
          },
          [&](const SetExpr::Not& x) {
            return x.inner == std::get<SetExpr::Not>(b.node()).inner;
          },
          [&](const SetExpr::And& x) {
            const auto& y = std::get<SetExpr::And>(b.node());
            return x.left == y.left && x.right == y.right;
          },
          [&](const SetExpr::Or& x) {
            const auto& y = std::get<SetExpr::Or>(b.node());
            return x.left == y.left && x.right == y.right;
          },
          [&](const SetExpr::ShiftLeft& x) {
            const auto& y = std::get<SetExpr::ShiftLeft>(b.node());
            return x.amount == y.amount && x.inner == y.inner;
          },
          [&](const SetExpr::ShiftRight& x) {
            const auto& y = std::get<SetExpr::ShiftRight>(b.node());
            return x.amount == y.amount && x.inner == y.inner;
          },
      },
      a.node());
}

SetExpr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const SetExpr& e) { return print_at(e, kOr); }

SemilinearSet evaluate_set(const SetExpr& e) {
  return std::visit(
      Overloaded{
          [](const SetExpr::Finite& f) {
            return SemilinearSet::finite(f.elements);
          },
          [](const SetExpr::Residue& r) {
            return SemilinearSet::residue_class(r.residue, r.modulus);
          },
          [](const SetExpr::Interval& i) {
            return SemilinearSet::interval(i.lo, i.hi);
          },
          [](const SetExpr::Naturals&) { return SemilinearSet::naturals(); },
          [](const SetExpr::Empty&) { return SemilinearSet::empty(); },
          [](const SetExpr::SquaresBlocks&) -> SemilinearSet {
            not_periodic("squaresblocks");
          },
          [](const SetExpr::TriadicUnit&) -> SemilinearSet {
            not_periodic("triadic-unit");
          },
          [](const SetExpr::TriadicValuationAtLeast& t) {
            // v3(n) >= k for n >= 1 is the residue class 0 mod 3^k minus {0}.
            Nat modulus = 1;
            for (unsigned i = 0; i < t.exponent; ++i) {
              if (modulus > kMaxPeriod / 3) not_periodic("triadic-val-ge");
              modulus *= 3;
            }
            return difference(SemilinearSet::residue_class(0, modulus),
                              SemilinearSet::finite({0}));
          },
          [](const SetExpr::Not& n) { return complement(evaluate_set(n.inner)); },
          [](const SetExpr::And& a) {
            return intersect(evaluate_set(a.left), evaluate_set(a.right));
          },
          [](const SetExpr::Or& o) {
            return set_union(evaluate_set(o.left), evaluate_set(o.right));
          },
          [](const SetExpr::ShiftLeft& s) {
            return shift_left(evaluate_set(s.inner), s.amount);
          },
          [](const SetExpr::ShiftRight& s) {
            return shift_right(evaluate_set(s.inner), s.amount);
          },
      },
      e.node());
}

PredicateSet evaluate_predicate(const SetExpr& e) {
  return std::visit(
      Overloaded{
          [](const SetExpr::SquaresBlocks&) {
            return PredicateSet::squares_blocks();
          },
          [](const SetExpr::TriadicUnit& t) {
            return PredicateSet::triadic_unit(t.residue);
          },
          [](const SetExpr::TriadicValuationAtLeast& t) {
            return PredicateSet::triadic_valuation_at_least(t.exponent);
          },
          [](const SetExpr::Not& n) { return !evaluate_predicate(n.inner); },
          [](const SetExpr::And& a) {
            return evaluate_predicate(a.left) & evaluate_predicate(a.right);
          },
          [](const SetExpr::Or& o) {
            return evaluate_predicate(o.left) | evaluate_predicate(o.right);
          },
          [](const SetExpr::ShiftLeft& s) {
            return shift_left(evaluate_predicate(s.inner), s.amount);
          },
          [](const SetExpr::ShiftRight& s) {
            return shift_right(evaluate_predicate(s.inner), s.amount);
          },
          [&](const auto&) { return PredicateSet(evaluate_set(e)); },
      },
      e.node());
}

SemilinearSet parse_set(std::string_view text) {
  return evaluate_set(parse_expr(text));
}

PredicateSet parse_predicate(std::string_view text) {
  return evaluate_predicate(parse_expr(text));
}

PairSet parse_pair_set(std::string_view text) {
  return Parser(text).parse_pair_all();
}

ProfinitePoint parse_point(std::string_view text) {
  std::string_view rest = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  rest = trim(rest);
  if (rest.substr(0, 5) == "point") rest = trim(rest.substr(5));
  const auto offset = static_cast<std::size_t>(rest.data() - text.data());
  const std::size_t colon = rest.find(':');
  if (colon == std::string_view::npos)
    throw SyntaxError(offset, "expected 'point M:r'");
  auto digits = [&](std::string_view s, std::size_t at) {
    s = trim(s);
    if (s.empty() || s.size() > 19 ||
        s.find_first_not_of("0123456789") != std::string_view::npos)
      throw SyntaxError(at, "expected a number in 'point M:r'");
    return static_cast<Nat>(std::stoull(std::string(s)));
  };
  const Nat modulus = digits(rest.substr(0, colon), offset);
  const Nat residue = digits(rest.substr(colon + 1), offset + colon + 1);
  if (modulus == 0) throw SyntaxError(offset, "point depth must be >= 1");
  if (residue >= modulus)
    throw SyntaxError(offset + colon + 1,
                      "residue " + std::to_string(residue) +
                          " is not below the depth " + std::to_string(modulus));
  return ProfinitePoint(modulus, residue);
}

}  // namespace betan
