#include "betan/pairs.hpp"

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "betan/error.hpp"

namespace betan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// {n : A + n in U_d}; n ranges over one period because A + n and A + n + p
/// coincide at infinity.
SemilinearSet reversed_hyper_shift(const SemilinearSet& a,
                                   const ProfinitePoint& d) {
  if (d.modulus() % a.period() != 0)
    throw Error(ErrorKind::InsufficientDepth,
                "period " + std::to_string(a.period()) +
                    " does not divide the depth of point " + to_string(d));
  const Nat p = a.period();
  const Nat r = d.residue() % p;
  std::vector<Nat> pattern;
  for (Nat n = 0; n < p; ++n)
    if (a.tail_contains((r + p - n) % p)) pattern.push_back(n);
  return SemilinearSet::normalize(0, p, std::move(pattern), {});
}

enum class Prec { Or = 0, And = 1, Unary = 2 };

std::string print(const PairSet& x, Prec context) {
  auto wrap = [context](std::string s, Prec own) {
    return own < context ? "(" + s + ")" : s;
  };
  return std::visit(
      Overloaded{
          [](const PairSet::Rect& r) {
            return "rect(" + to_string(r.first) + ", " + to_string(r.second) +
                   ")";
          },
          [](const PairSet::SumBand& s) {
            return "sumband(" + to_string(s.set) + ")";
          },
          [](const PairSet::DiffBand& d) {
            return "diffband(" + to_string(d.set) + ")";
          },
          [](const PairSet::UpperTriangle&) { return std::string("delta+"); },
          [&](const PairSet::Union& u) {
            return wrap(print(u.left, Prec::Or) + " | " +
                            print(u.right, Prec::And),
                        Prec::Or);
          },
          [&](const PairSet::Intersection& i) {
            return wrap(print(i.left, Prec::And) + " & " +
                            print(i.right, Prec::Unary),
                        Prec::And);
          },
          [&](const PairSet::Complement& c) {
            return "!" + print(c.inner, Prec::Unary);
          },
      },
      x.node());
}

}  // namespace

PairSet::PairSet(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

PairSet PairSet::rect(SemilinearSet a, SemilinearSet b) {
  return PairSet(Rect{std::move(a), std::move(b)});
}
PairSet PairSet::sum_band(SemilinearSet a) {
  return PairSet(SumBand{std::move(a)});
}
PairSet PairSet::diff_band(SemilinearSet a) {
  return PairSet(DiffBand{std::move(a)});
}
PairSet PairSet::upper_triangle() { return PairSet(UpperTriangle{}); }

PairSet operator|(const PairSet& a, const PairSet& b) {
  return PairSet(PairSet::Union{a, b});
}
PairSet operator&(const PairSet& a, const PairSet& b) {
  return PairSet(PairSet::Intersection{a, b});
}
PairSet operator!(const PairSet& a) { return PairSet(PairSet::Complement{a}); }

bool PairSet::contains(Nat n, Nat m) const {
  return std::visit(
      Overloaded{
          [&](const Rect& r) {
            return r.first.contains(n) && r.second.contains(m);
          },
          [&](const SumBand& s) { return s.set.contains(n + m); },
          [&](const DiffBand& d) { return m >= n && d.set.contains(m - n); },
          [&](const UpperTriangle&) { return n < m; },
          [&](const Union& u) {
            return u.left.contains(n, m) || u.right.contains(n, m);
          },
          [&](const Intersection& i) {
            return i.left.contains(n, m) && i.right.contains(n, m);
          },
          [&](const Complement& c) { return !c.inner.contains(n, m); },
      },
      node());
}

std::string to_string(const PairSet& x) { return print(x, Prec::Or); }

SemilinearSet fiber(const PairSet& x, Nat n) {
  return std::visit(
      Overloaded{
          [&](const PairSet::Rect& r) {
            return r.first.contains(n) ? r.second : SemilinearSet::empty();
          },
          [&](const PairSet::SumBand& s) { return shift_left(s.set, n); },
          [&](const PairSet::DiffBand& d) { return shift_right(d.set, n); },
          [&](const PairSet::UpperTriangle&) {
            return complement(SemilinearSet::interval(0, n + 1));
          },
          [&](const PairSet::Union& u) {
            return set_union(fiber(u.left, n), fiber(u.right, n));
          },
          [&](const PairSet::Intersection& i) {
            return intersect(fiber(i.left, n), fiber(i.right, n));
          },
          [&](const PairSet::Complement& c) {
            return complement(fiber(c.inner, n));
          },
      },
      x.node());
}

std::string to_string(const PairDiff& d) {
  switch (d.kind) {
    case PairDiff::Kind::InfinitePositive: return "+inf";
    case PairDiff::Kind::InfiniteNegative: return "-inf";
    case PairDiff::Kind::Zero: return "0";
    case PairDiff::Kind::FiniteOffset:
      return (d.offset >= 0 ? "+" : "") + std::to_string(d.offset);
  }
  return "?";
}

PairPoint::PairPoint(ProfinitePoint alpha, ProfinitePoint beta, PairDiff diff)
    : alpha_(alpha), beta_(beta), diff_(diff) {
  if (alpha.modulus() != beta.modulus())
    throw Error(ErrorKind::DepthMismatch,
                "pair components " + to_string(alpha) + " and " +
                    to_string(beta) + " have different depths");
  switch (diff.kind) {
    case PairDiff::Kind::Zero:
      if (alpha != beta)
        throw Error(ErrorKind::InconsistentDiff,
                    "diff 0 requires equal components, got " +
                        to_string(alpha) + " and " + to_string(beta));
      break;
    case PairDiff::Kind::FiniteOffset:
      if (add_integer(alpha, diff.offset) != beta)
        throw Error(ErrorKind::InconsistentDiff,
                    to_string(alpha) + " shifted by " +
                        std::to_string(diff.offset) + " is not " +
                        to_string(beta));
      break;
    case PairDiff::Kind::InfinitePositive:
    case PairDiff::Kind::InfiniteNegative:
      break;
  }
}

bool pair_member(const PairSet& x, const PairPoint& p) {
  using Kind = PairDiff::Kind;
  const PairDiff& diff = p.diff();
  return std::visit(
      Overloaded{
          [&](const PairSet::Rect& r) {
            return member_set(r.first, p.alpha()) &&
                   member_set(r.second, p.beta());
          },
          [&](const PairSet::SumBand& s) {
            return member_set(s.set, add(p.alpha(), p.beta()));
          },
          [&](const PairSet::DiffBand& d) {
            switch (diff.kind) {
              case Kind::Zero: return d.set.contains(0);
              case Kind::FiniteOffset:
                return diff.offset >= 0 &&
                       d.set.contains(static_cast<Nat>(diff.offset));
              case Kind::InfinitePositive:
                return member_set(d.set, sub(p.beta(), p.alpha()));
              case Kind::InfiniteNegative: return false;
            }
            return false;
          },
          [&](const PairSet::UpperTriangle&) {
            return diff.kind == Kind::InfinitePositive ||
                   (diff.kind == Kind::FiniteOffset && diff.offset > 0);
          },
          [&](const PairSet::Union& u) {
            return pair_member(u.left, p) || pair_member(u.right, p);
          },
          [&](const PairSet::Intersection& i) {
            return pair_member(i.left, p) && pair_member(i.right, p);
          },
          [&](const PairSet::Complement& c) {
            return !pair_member(c.inner, p);
          },
      },
      x.node());
}

SemilinearSet fiber_membership_set(const PairSet& x, const ProfinitePoint& d) {
  return std::visit(
      Overloaded{
          [&](const PairSet::Rect& r) {
            return member_set(r.second, d) ? r.first : SemilinearSet::empty();
          },
          [&](const PairSet::SumBand& s) { return hyper_shift(s.set, d); },
          [&](const PairSet::DiffBand& b) {
            return reversed_hyper_shift(b.set, d);
          },
          // Each fiber {m : m > n} is cofinite, hence in every U_d.
          [&](const PairSet::UpperTriangle&) {
            return SemilinearSet::naturals();
          },
          [&](const PairSet::Union& u) {
            return set_union(fiber_membership_set(u.left, d),
                             fiber_membership_set(u.right, d));
          },
          [&](const PairSet::Intersection& i) {
            return intersect(fiber_membership_set(i.left, d),
                             fiber_membership_set(i.right, d));
          },
          [&](const PairSet::Complement& c) {
            return complement(fiber_membership_set(c.inner, d));
          },
      },
      x.node());
}

bool tensor_member(const PairSet& x, const ProfinitePoint& g,
                   const ProfinitePoint& d) {
  if (g.modulus() != d.modulus())
    throw Error(ErrorKind::DepthMismatch,
                "points " + to_string(g) + " and " + to_string(d) +
                    " have different depths; align them with reduce");
  return member_set(fiber_membership_set(x, d), g);
}

PairPoint canonical_tensor_point(const ProfinitePoint& g,
                                 const ProfinitePoint& d) {
  return PairPoint(g, d, PairDiff::infinite_positive());
}

SemilinearSet diagonal_section(const PairSet& x) {
  return std::visit(
      Overloaded{
          [](const PairSet::Rect& r) { return intersect(r.first, r.second); },
          [](const PairSet::SumBand& s) {
            return preimage_affine(s.set, AffineMap(2, 0));
          },
          [](const PairSet::DiffBand& d) {
            return d.set.contains(0) ? SemilinearSet::naturals()
                                     : SemilinearSet::empty();
          },
          [](const PairSet::UpperTriangle&) { return SemilinearSet::empty(); },
          [](const PairSet::Union& u) {
            return set_union(diagonal_section(u.left),
                             diagonal_section(u.right));
          },
          [](const PairSet::Intersection& i) {
            return intersect(diagonal_section(i.left),
                             diagonal_section(i.right));
          },
          [](const PairSet::Complement& c) {
            return complement(diagonal_section(c.inner));
          },
      },
      x.node());
}

bool diagonal_member(const PairSet& x, const ProfinitePoint& g) {
  return member_set(diagonal_section(x), g);
}

PairPoint image_pair(const AffineMap& f, const AffineMap& g,
                     const PairPoint& p) {
  using Kind = PairDiff::Kind;
  const ProfinitePoint alpha = apply(f, p.alpha());
  const ProfinitePoint beta = apply(g, p.beta());
  PairDiff diff = p.diff();
  if (diff.kind == Kind::Zero || diff.kind == Kind::FiniteOffset) {
    // g(alpha + k) - f(alpha) = (c - a) alpha + c k + d - b with alpha infinite.
    if (g.scale > f.scale) {
      diff = PairDiff::infinite_positive();
    } else if (g.scale < f.scale) {
      diff = PairDiff::infinite_negative();
    } else {
      using Wide = boost::multiprecision::int128_t;
      const Wide k = diff.kind == Kind::Zero ? 0 : diff.offset;
      const Wide offset = Wide(g.scale) * k + Wide(g.offset) - Wide(f.offset);
      if (offset > INT64_MAX || offset < INT64_MIN)
        throw Error(ErrorKind::TooLarge, "finite offset of the image overflows");
      diff = offset == 0 ? PairDiff::zero()
                         : PairDiff::finite(static_cast<std::int64_t>(offset));
    }
  }
  return PairPoint(alpha, beta, diff);
}

}  // namespace betan
