#include "betan/windows.hpp"

#include <algorithm>

#include "betan/error.hpp"
#include "betan/profinite.hpp"
#include "betan/ramsey.hpp"

namespace betan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool semilinear_contains(const SemilinearSet& a, const BigNat& n) {
  if (n < a.threshold()) return a.contains(static_cast<Nat>(n));
  const BigNat residue = n % a.period();
  return a.tail_contains(static_cast<Nat>(residue));
}

}  // namespace

BigNat parse_bignat(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::InvalidArgument,
                "expected a natural number, got '" + std::string(text) + "'");
  return BigNat(std::string(text));
}

PredicateSet::PredicateSet(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

PredicateSet::PredicateSet(SemilinearSet set)
    : PredicateSet(Node(Semilinear{std::move(set)})) {}

PredicateSet PredicateSet::squares_blocks() {
  return PredicateSet(Node(SquaresBlocks{}));
}

PredicateSet PredicateSet::triadic_unit(unsigned residue) {
  if (residue != 1 && residue != 2)
    throw Error(ErrorKind::InvalidArgument,
                "triadic-unit takes residue 1 or 2, got " +
                    std::to_string(residue));
  return PredicateSet(Node(TriadicUnit{residue}));
}

PredicateSet PredicateSet::triadic_valuation_at_least(unsigned exponent) {
  return PredicateSet(Node(TriadicValuationAtLeast{exponent}));
}

PredicateSet operator!(const PredicateSet& a) {
  return PredicateSet(PredicateSet::Node(PredicateSet::Not{a}));
}
PredicateSet operator&(const PredicateSet& a, const PredicateSet& b) {
  return PredicateSet(PredicateSet::Node(PredicateSet::And{a, b}));
}
PredicateSet operator|(const PredicateSet& a, const PredicateSet& b) {
  return PredicateSet(PredicateSet::Node(PredicateSet::Or{a, b}));
}
PredicateSet shift_left(const PredicateSet& a, Nat k) {
  return PredicateSet(PredicateSet::Node(PredicateSet::ShiftLeft{a, k}));
}
PredicateSet shift_right(const PredicateSet& a, Nat k) {
  return PredicateSet(PredicateSet::Node(PredicateSet::ShiftRight{a, k}));
}

bool PredicateSet::contains(const BigNat& n) const {
  return std::visit(
      Overloaded{
          [&](const Semilinear& s) { return semilinear_contains(s.set, n); },
          [&](const SquaresBlocks&) {
            const BigNat root = boost::multiprecision::sqrt(n);
            return (root & 1) == 0;
          },
          [&](const TriadicUnit& t) {
            if (n == 0) return false;
            return triadic_split(n).unit % 3 == t.residue;
          },
          [&](const TriadicValuationAtLeast& t) {
            if (n == 0) return false;
            return triadic_split(n).valuation >= t.exponent;
          },
          [&](const Not& x) { return !x.inner.contains(n); },
          [&](const And& x) {
            return x.left.contains(n) && x.right.contains(n);
          },
          [&](const Or& x) { return x.left.contains(n) || x.right.contains(n); },
          [&](const ShiftLeft& x) { return x.inner.contains(n + x.amount); },
          [&](const ShiftRight& x) {
            return n >= x.amount && x.inner.contains(n - x.amount);
          },
      },
      node());
}

std::optional<SemilinearSet> PredicateSet::as_semilinear() const {
  using Result = std::optional<SemilinearSet>;
  return std::visit(
      Overloaded{
          [](const Semilinear& s) -> Result { return s.set; },
          [](const SquaresBlocks&) -> Result { return std::nullopt; },
          [](const TriadicUnit&) -> Result { return std::nullopt; },
          [](const TriadicValuationAtLeast&) -> Result { return std::nullopt; },
          [](const Not& x) -> Result {
            auto inner = x.inner.as_semilinear();
            if (!inner) return std::nullopt;
            return complement(*inner);
          },
          [](const And& x) -> Result {
            auto l = x.left.as_semilinear();
            auto r = x.right.as_semilinear();
            if (!l || !r) return std::nullopt;
            return intersect(*l, *r);
          },
          [](const Or& x) -> Result {
            auto l = x.left.as_semilinear();
            auto r = x.right.as_semilinear();
            if (!l || !r) return std::nullopt;
            return set_union(*l, *r);
          },
          [](const ShiftLeft& x) -> Result {
            auto inner = x.inner.as_semilinear();
            if (!inner) return std::nullopt;
            return betan::shift_left(*inner, x.amount);
          },
          [](const ShiftRight& x) -> Result {
            auto inner = x.inner.as_semilinear();
            if (!inner) return std::nullopt;
            return betan::shift_right(*inner, x.amount);
          },
      },
      node());
}

std::size_t WindowSet::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

bool WindowSet::all_true() const {
  return std::all_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

bool WindowSet::all_false() const {
  return std::none_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

std::string WindowSet::bit_string() const {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

WindowSet window_of(const PredicateSet& p, const BigNat& origin,
                    std::size_t length) {
  if (length == 0)
    throw Error(ErrorKind::InvalidArgument, "window length must be >= 1");
  WindowSet w{origin, std::vector<bool>(length)};
  BigNat n = origin;
  for (std::size_t i = 0; i < length; ++i, ++n) w.bits[i] = p.contains(n);
  return w;
}

WindowSet finite_hyper_shift(const PredicateSet& p, const BigNat& g,
                             std::size_t length) {
  WindowSet w = window_of(p, g, length);
  w.origin = 0;
  return w;
}

std::vector<std::size_t> max_window_counts(const WindowSet& w) {
  const std::size_t len = w.length();
  std::vector<std::size_t> prefix(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i)
    prefix[i + 1] = prefix[i] + (w.bits[i] ? 1 : 0);
  std::vector<std::size_t> best(len + 1, 0);
  for (std::size_t n = 1; n <= len; ++n)
    for (std::size_t k = 0; k + n <= len; ++k)
      best[n] = std::max(best[n], prefix[k + n] - prefix[k]);
  return best;
}

Rational window_banach(const WindowSet& w, std::size_t n) {
  if (n == 0 || n > w.length())
    throw Error(ErrorKind::OutOfRange,
                "sub-window length " + std::to_string(n) +
                    " is outside [1, " + std::to_string(w.length()) + "]");
  std::size_t current = 0;
  for (std::size_t i = 0; i < n; ++i) current += w.bits[i] ? 1 : 0;
  std::size_t best = current;
  for (std::size_t k = n; k < w.length(); ++k) {
    current += (w.bits[k] ? 1 : 0);
    current -= (w.bits[k - n] ? 1 : 0);
    best = std::max(best, current);
  }
  return Rational(static_cast<std::int64_t>(best),
                  static_cast<std::int64_t>(n));
}

namespace {

/// Smallest failing prefix length at `start`, or 0 if none fails. The bound
/// count / i >= (C - nu) / N is checked as count * N >= i * (C - nu).
std::size_t first_failing_prefix(const WindowSet& w, std::size_t nu,
                                 std::size_t start) {
  const auto total = static_cast<std::int64_t>(w.count());
  const auto len = static_cast<std::int64_t>(w.length());
  const std::int64_t slack = total - static_cast<std::int64_t>(nu);
  std::int64_t count = 0;
  for (std::size_t i = 1; i <= nu; ++i) {
    if (w.bits[start + i - 1]) ++count;
    if (count * len < static_cast<std::int64_t>(i) * slack) return i;
  }
  return 0;
}

}  // namespace

bool is_good_start(const WindowSet& w, std::size_t nu, std::size_t start) {
  if (start + nu > w.length()) return false;
  return first_failing_prefix(w, nu, start) == 0;
}

std::size_t good_start(const WindowSet& w, std::size_t nu) {
  if (nu == 0)
    throw Error(ErrorKind::InvalidArgument, "nu must be >= 1");
  if (w.count() <= nu)
    throw Error(ErrorKind::PreconditionViolated,
                "window density " + std::to_string(w.count()) + "/" +
                    std::to_string(w.length()) + " does not exceed nu/N = " +
                    std::to_string(nu) + "/" + std::to_string(w.length()));
  // The counting argument guarantees success at some start < N - nu.
  std::size_t start = 0;
  while (start + nu < w.length()) {
    const std::size_t fail = first_failing_prefix(w, nu, start);
    if (fail == 0) return start;
    start += fail;
  }
  throw Error(ErrorKind::NotFound,
              "no good start found; the counting argument was violated");
}

std::optional<Nat> exact_embed_window(const PredicateSet& a,
                                      const PredicateSet& b, Nat i_lo,
                                      Nat i_hi, Nat x_lo, Nat x_hi) {
  for (Nat x = x_lo; x <= x_hi; ++x) {
    bool match = true;
    for (Nat i = i_lo; i <= i_hi && match; ++i)
      match = a.contains(i) == b.contains(BigNat(x) + i);
    if (match) return x;
    if (x == x_hi) break;
  }
  return std::nullopt;
}

std::optional<EmbedWitness> exact_embed_decide(const SemilinearSet& a,
                                               const SemilinearSet& b) {
  using Kind = EmbedWitness::Kind;
  if (a == b) return EmbedWitness{Kind::FiniteShift, 0};
  for (Nat r = 0; r < b.period(); ++r)
    if (rotated_tail(b, r) == a) return EmbedWitness{Kind::Rotation, r};
  // B - g for g past the threshold is a rotation, and the shifts repeat with
  // period p_B, so this bound covers every finite shift.
  const Nat bound = b.threshold() + lcm_checked(a.period(), b.period()) + 1;
  for (Nat g = 1; g <= bound; ++g)
    if (shift_left(b, g) == a) return EmbedWitness{Kind::FiniteShift, g};
  return std::nullopt;
}

NoncommReport noncomm_demo(const BigNat& nu, std::size_t length) {
  if ((nu & 1) != 0)
    throw Error(ErrorKind::PreconditionViolated,
                "nu must be even: the squares-blocks set covers [nu^2, "
                "(nu+1)^2) exactly when nu is even");
  const PredicateSet blocks = PredicateSet::squares_blocks();
  NoncommReport report;
  report.nu = nu;
  report.low = nu * nu;
  report.high = (nu + 1) * (nu + 1);
  report.at_low = finite_hyper_shift(blocks, report.low, length);
  report.at_high = finite_hyper_shift(blocks, report.high, length);
  return report;
}

}  // namespace betan
