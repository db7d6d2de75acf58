#include "betan/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "betan/error.hpp"

namespace betan {

namespace {

using Wide = boost::multiprecision::uint128_t;

void sort_unique(std::vector<Nat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_threshold(Nat n) {
  if (n > kMaxThreshold)
    throw Error(ErrorKind::TooLarge,
                "threshold " + std::to_string(n) + " exceeds the limit " +
                    std::to_string(kMaxThreshold));
}

/// Combines two sets pointwise with `op` on a common period and threshold.
template <typename Op>
SemilinearSet combine(const SemilinearSet& a, const SemilinearSet& b, Op op) {
  const Nat period = lcm_checked(a.period(), b.period());
  const Nat threshold = std::max(a.threshold(), b.threshold());
  std::vector<Nat> pattern;
  for (Nat i = 0; i < period; ++i)
    if (op(a.tail_contains(i), b.tail_contains(i))) pattern.push_back(i);
  std::vector<Nat> exceptional;
  for (Nat n = 0; n < threshold; ++n)
    if (op(a.contains(n), b.contains(n))) exceptional.push_back(n);
  return SemilinearSet::normalize(threshold, period, std::move(pattern),
                                  std::move(exceptional));
}

/// `{a,b,c}` for isolated members and `[lo,hi)` for runs of three or more.
std::vector<std::string> finite_items(const std::vector<Nat>& sorted) {
  std::vector<Nat> singles;
  std::vector<std::string> runs;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[j - 1] + 1) ++j;
    if (j - i >= 3) {
      runs.push_back("[" + std::to_string(sorted[i]) + "," +
                     std::to_string(sorted[j - 1] + 1) + ")");
    } else {
      for (std::size_t k = i; k < j; ++k) singles.push_back(sorted[k]);
    }
    i = j;
  }
  std::vector<std::string> items;
  if (!singles.empty()) {
    std::string s = "{";
    for (std::size_t k = 0; k < singles.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(singles[k]);
    }
    items.push_back(s + "}");
  }
  items.insert(items.end(), runs.begin(), runs.end());
  return items;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Nat lcm_checked(Nat a, Nat b) {
  const Wide l = Wide{a} / std::gcd(a, b) * b;
  if (l > kMaxPeriod)
    throw Error(ErrorKind::TooLarge,
                "period lcm(" + std::to_string(a) + "," + std::to_string(b) +
                    ") exceeds the limit " + std::to_string(kMaxPeriod));
  return static_cast<Nat>(l);
}

AffineMap::AffineMap(Nat scale, Nat offset) : scale(scale), offset(offset) {
  if (scale == 0)
    throw Error(ErrorKind::InvalidArgument, "affine map needs scale >= 1");
}

Nat AffineMap::operator()(Nat n) const {
  const Wide v = Wide{scale} * n + offset;
  if (v >> 64) throw Error(ErrorKind::TooLarge, "affine image overflows");
  return static_cast<Nat>(v);
}

SemilinearSet::SemilinearSet() = default;

SemilinearSet::SemilinearSet(Nat threshold, Nat period,
                             std::vector<Nat> pattern,
                             std::vector<Nat> exceptional)
    : threshold_(threshold),
      period_(period),
      pattern_(std::move(pattern)),
      exceptional_(std::move(exceptional)) {}

SemilinearSet SemilinearSet::normalize(Nat threshold, Nat period,
                                       std::vector<Nat> pattern,
                                       std::vector<Nat> exceptional) {
  if (period == 0)
    throw Error(ErrorKind::InvalidArgument, "period must be >= 1");
  if (period > kMaxPeriod)
    throw Error(ErrorKind::TooLarge, "period " + std::to_string(period) +
                                         " exceeds the limit " +
                                         std::to_string(kMaxPeriod));
  check_threshold(threshold);
  sort_unique(pattern);
  sort_unique(exceptional);
  if (!pattern.empty() && pattern.back() >= period)
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(pattern.back()) +
                    " is not below the period " + std::to_string(period));
  if (!exceptional.empty() && exceptional.back() >= threshold)
    throw Error(ErrorKind::InvalidArgument,
                "exceptional element " + std::to_string(exceptional.back()) +
                    " is not below the threshold " +
                    std::to_string(threshold));

  std::vector<bool> tail(period, false);
  for (Nat r : pattern) tail[r] = true;

  // Minimal period: the smallest divisor d with tail invariant under +d.
  Nat minimal = period;
  for (Nat d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool invariant = true;
    for (Nat i = d; i < period && invariant; ++i)
      invariant = tail[i] == tail[i - d];
    if (invariant) {
      minimal = d;
      break;
    }
  }
  if (minimal != period) {
    tail.resize(minimal);
    pattern.clear();
    for (Nat i = 0; i < minimal; ++i)
      if (tail[i]) pattern.push_back(i);
  }

  // Minimal threshold: drop trailing positions that already agree with the
  // periodic regime.
  std::vector<bool> below(threshold, false);
  for (Nat e : exceptional) below[e] = true;
  while (threshold > 0 && below[threshold - 1] == tail[(threshold - 1) % minimal])
    --threshold;
  while (!exceptional.empty() && exceptional.back() >= threshold)
    exceptional.pop_back();

  return SemilinearSet(threshold, minimal, std::move(pattern),
                       std::move(exceptional));
}

SemilinearSet SemilinearSet::naturals() { return normalize(0, 1, {0}, {}); }

SemilinearSet SemilinearSet::residue_class(Nat residue, Nat modulus) {
  if (modulus == 0)
    throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (residue >= modulus)
    throw Error(ErrorKind::InvalidArgument,
                "residue " + std::to_string(residue) +
                    " is not below the modulus " + std::to_string(modulus));
  return normalize(0, modulus, {residue}, {});
}

SemilinearSet SemilinearSet::interval(Nat lo, Nat hi) {
  if (hi <= lo) return empty();
  check_threshold(hi);
  std::vector<Nat> elements(hi - lo);
  std::iota(elements.begin(), elements.end(), lo);
  return normalize(hi, 1, {}, std::move(elements));
}

SemilinearSet SemilinearSet::finite(std::vector<Nat> elements) {
  if (elements.empty()) return empty();
  const Nat top = *std::max_element(elements.begin(), elements.end());
  check_threshold(top);
  return normalize(top + 1, 1, {}, std::move(elements));
}

bool SemilinearSet::tail_contains(Nat n) const {
  return std::binary_search(pattern_.begin(), pattern_.end(), n % period_);
}

bool SemilinearSet::contains(Nat n) const {
  if (n < threshold_)
    return std::binary_search(exceptional_.begin(), exceptional_.end(), n);
  return tail_contains(n);
}

bool member(const SemilinearSet& a, Nat n) { return a.contains(n); }

SemilinearSet set_union(const SemilinearSet& a, const SemilinearSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

SemilinearSet difference(const SemilinearSet& a, const SemilinearSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

SemilinearSet complement(const SemilinearSet& a) {
  std::vector<Nat> pattern;
  for (Nat i = 0; i < a.period(); ++i)
    if (!a.tail_contains(i)) pattern.push_back(i);
  std::vector<Nat> exceptional;
  for (Nat n = 0; n < a.threshold(); ++n)
    if (!a.contains(n)) exceptional.push_back(n);
  return SemilinearSet::normalize(a.threshold(), a.period(),
                                  std::move(pattern), std::move(exceptional));
}

SemilinearSet shift_left(const SemilinearSet& a, Nat n) {
  const Nat p = a.period();
  const Nat threshold = a.threshold() > n ? a.threshold() - n : 0;
  std::vector<Nat> pattern;
  for (Nat r : a.pattern()) pattern.push_back((r + p - n % p) % p);
  std::vector<Nat> exceptional;
  for (Nat e : a.exceptional())
    if (e >= n) exceptional.push_back(e - n);
  return SemilinearSet::normalize(threshold, p, std::move(pattern),
                                  std::move(exceptional));
}

SemilinearSet shift_right(const SemilinearSet& a, Nat n) {
  if (n > kMaxThreshold || a.threshold() + n > kMaxThreshold)
    throw Error(ErrorKind::TooLarge, "rightward shift by " +
                                         std::to_string(n) +
                                         " exceeds the threshold limit");
  const Nat p = a.period();
  std::vector<Nat> pattern;
  for (Nat r : a.pattern()) pattern.push_back((r + n) % p);
  std::vector<Nat> exceptional;
  for (Nat e : a.exceptional()) exceptional.push_back(e + n);
  return SemilinearSet::normalize(a.threshold() + n, p, std::move(pattern),
                                  std::move(exceptional));
}

SemilinearSet preimage_affine(const SemilinearSet& a, const AffineMap& f) {
  const Nat p = a.period();
  // f(n) >= threshold(A) from n = ceil((N - b) / a) onwards.
  const Nat threshold =
      a.threshold() > f.offset
          ? (a.threshold() - f.offset + f.scale - 1) / f.scale
          : 0;
  std::vector<Nat> pattern;
  for (Nat i = 0; i < p; ++i) {
    const Nat image = static_cast<Nat>((Wide{f.scale % p} * i + f.offset) % p);
    if (a.tail_contains(image)) pattern.push_back(i);
  }
  std::vector<Nat> exceptional;
  for (Nat n = 0; n < threshold; ++n)
    if (a.contains(f(n))) exceptional.push_back(n);
  return SemilinearSet::normalize(threshold, p, std::move(pattern),
                                  std::move(exceptional));
}

SemilinearSet rotated_tail(const SemilinearSet& a, Nat r) {
  const Nat p = a.period();
  std::vector<Nat> pattern;
  for (Nat x : a.pattern()) pattern.push_back((x + p - r % p) % p);
  return SemilinearSet::normalize(0, p, std::move(pattern), {});
}

Rational asymptotic(const SemilinearSet& a) {
  return Rational(static_cast<std::int64_t>(a.pattern().size()),
                  static_cast<std::int64_t>(a.period()));
}

Rational banach(const SemilinearSet& a) { return asymptotic(a); }

Rational schnirelmann(const SemilinearSet& a) {
  // For n >= max(N, 1) the ratios along n, n + p, n + 2p, ... move
  // monotonically towards w/p, so one period past the threshold suffices.
  const Nat start = std::max<Nat>(a.threshold(), 1);
  Rational best = asymptotic(a);
  std::int64_t count = 0;
  for (Nat n = 1; n < start + a.period(); ++n) {
    if (a.contains(n)) ++count;
    const Rational ratio(count, static_cast<std::int64_t>(n));
    if (ratio < best) best = ratio;
  }
  return best;
}

Densities densities(const SemilinearSet& a) {
  const Rational d = asymptotic(a);
  return {schnirelmann(a), d, d, d, banach(a)};
}

Nat best_rotation(const SemilinearSet& a) {
  if (a.pattern().empty())
    throw Error(ErrorKind::NoRotation, "set has an empty periodic pattern");
  const auto p = static_cast<std::int64_t>(a.period());
  const auto w = static_cast<std::int64_t>(a.pattern().size());
  // prefix(m) = sum_{k=1..m} (p [k mod p in pattern] - w); rotation r works
  // iff prefix(r) is minimal.
  std::int64_t prefix = 0;
  std::int64_t lowest = 0;
  Nat best = 0;
  for (std::int64_t m = 1; m < p; ++m) {
    prefix += (a.tail_contains(static_cast<Nat>(m)) ? p : 0) - w;
    if (prefix < lowest) {
      lowest = prefix;
      best = static_cast<Nat>(m);
    }
  }
  if (schnirelmann(rotated_tail(a, best)) != asymptotic(a))
    throw std::logic_error("cycle-lemma rotation failed its postcondition");
  return best;
}

std::string to_string(const SemilinearSet& a) {
  if (a.is_empty()) return "0";
  std::vector<std::string> parts;
  if (!a.pattern().empty()) {
    std::vector<std::string> classes;
    if (a.period() == 1) {
      classes.push_back("N");
    } else {
      for (Nat r : a.pattern())
        classes.push_back(std::to_string(r) + "%" + std::to_string(a.period()));
    }
    std::vector<Nat> missing;
    for (Nat n = 0; n < a.threshold(); ++n)
      if (a.tail_contains(n) && !a.contains(n)) missing.push_back(n);
    if (missing.empty()) {
      parts.insert(parts.end(), classes.begin(), classes.end());
    } else {
      std::string tail = join(classes, " | ");
      if (classes.size() > 1) tail = "(" + tail + ")";
      const auto holes = finite_items(missing);
      std::string removed = join(holes, " | ");
      if (holes.size() > 1) removed = "(" + removed + ")";
      parts.push_back(tail + " & !" + removed);
    }
  }
  std::vector<Nat> extra;
  for (Nat e : a.exceptional())
    if (!a.tail_contains(e)) extra.push_back(e);
  const auto items = finite_items(extra);
  parts.insert(parts.end(), items.begin(), items.end());
  return join(parts, " | ");
}

}  // namespace betan
