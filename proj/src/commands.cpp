#include "betan/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "betan/error.hpp"
#include "betan/expr.hpp"
#include "betan/pairs.hpp"
#include "betan/profinite.hpp"
#include "betan/ramsey.hpp"
#include "betan/semilinear.hpp"
#include "betan/windows.hpp"

namespace betan::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  json machine;
  std::string human;
};

constexpr const char* kGrammarFooter =
    "Set expressions: {1,5} finite, 2%3 residue class, [a,b) interval, N all "
    "naturals, 0 empty, !A complement, A & B, A | B.\n"
    "Shifts: A << k is the LEFTWARD shift A - k = {m : m + k in A}; "
    "A >> k is the rightward shift A + k = {a + k : a in A}.\n"
    "Points: 'point M:r' is an infinite hypernatural with remainder r modulo "
    "every divisor of M.";

class Lines {
 public:
  Lines& add(const std::string& key, const std::string& value) {
    os_ << std::left << std::setw(26) << key << value << '\n';
    return *this;
  }
  Lines& text(const std::string& line) {
    os_ << line << '\n';
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line.erase(line.find_last_not_of(" \t\r") + 1);
    lines.push_back(line.substr(first));
  }
  return lines;
}

/// Accepts "point M:r", "point" "M:r", or bare "M:r".
std::vector<ProfinitePoint> collect_points(const std::vector<std::string>& tokens,
                                           std::size_t expected) {
  std::vector<std::string> texts;
  for (const auto& t : tokens) {
    if (t == "point") continue;
    texts.push_back(t);
  }
  if (texts.size() != expected)
    throw UsageError("expected " + std::to_string(expected) +
                     " point(s) of the form 'point M:r'");
  std::vector<ProfinitePoint> points;
  for (const auto& t : texts) points.push_back(parse_point(t));
  return points;
}

std::vector<std::int64_t> parse_integer_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(' '));
    token.erase(token.find_last_not_of(' ') + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size())
      throw UsageError("expected comma-separated integers, got '" + text + "'");
    values.push_back(v);
  }
  return values;
}

std::vector<Nat> parse_naturals(const std::string& line) {
  std::vector<Nat> values;
  std::string token;
  std::istringstream in(line);
  while (in >> token) {
    std::istringstream parts(token);
    for (std::string piece; std::getline(parts, piece, ',');) {
      if (piece.empty()) continue;
      if (piece.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected natural numbers, got '" + piece + "'");
      values.push_back(std::stoull(piece));
    }
  }
  return values;
}

json nat_array(const std::vector<Nat>& v) {
  json a = json::array();
  for (Nat x : v) a.push_back(x);
  return a;
}

std::string join_nats(const std::vector<Nat>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Commands.

Report cmd_density(const std::string& text) {
  const SemilinearSet a = parse_set(text);
  const Densities d = densities(a);
  json rotation = nullptr;
  if (!a.pattern().empty()) rotation = best_rotation(a);
  Report r;
  r.machine = {{"set", to_string(a)},
               {"schnirelmann", to_string(d.schnirelmann)},
               {"lower", to_string(d.lower)},
               {"upper", to_string(d.upper)},
               {"asymptotic", to_string(d.asymptotic)},
               {"banach", to_string(d.banach)},
               {"best_rotation", rotation}};
  Lines out;
  out.add("set", to_string(a))
      .add("schnirelmann", to_string(d.schnirelmann))
      .add("asymptotic", to_string(d.asymptotic) + " (lower " +
                             to_string(d.lower) + ", upper " +
                             to_string(d.upper) + ")")
      .add("banach", to_string(d.banach));
  if (!rotation.is_null()) {
    const Nat rot = rotation.get<Nat>();
    out.add("best rotation", std::to_string(rot) + " (hyper-shift " +
                                 to_string(rotated_tail(a, rot)) +
                                 " has schnirelmann density " +
                                 to_string(d.banach) + ")");
  }
  r.human = out.str();
  return r;
}

Report cmd_shift(const std::string& text, const std::vector<std::string>& rest) {
  const SemilinearSet a = parse_set(text);
  const ProfinitePoint g = collect_points(rest, 1)[0];
  const SemilinearSet hyper = hyper_shift(a, g);
  const SemilinearSet ultra = ultrafilter_shift(a, g);
  Report r;
  r.machine = {{"set", to_string(a)},
               {"point", to_string(g)},
               {"member", member_set(a, g)},
               {"hyper_shift", to_string(hyper)},
               {"ultrafilter_shift", to_string(ultra)},
               {"agree", hyper == ultra}};
  r.human = Lines()
                .add("set", to_string(a))
                .add("point", "point " + to_string(g))
                .add("A in U_g", yes_no(member_set(a, g)))
                .add("hyper-shift A_g", to_string(hyper))
                .add("A - U_g", to_string(ultra))
                .add("A_g = A - U_g", yes_no(hyper == ultra))
                .str();
  return r;
}

Report cmd_embed(const std::string& ta, const std::string& tb) {
  const SemilinearSet a = parse_set(ta);
  const SemilinearSet b = parse_set(tb);
  const auto witness = exact_embed_decide(a, b);
  json w = nullptr;
  std::string described = "none";
  if (witness) {
    const bool rotation = witness->kind == EmbedWitness::Kind::Rotation;
    w = {{"kind", rotation ? "rotation" : "finite_shift"},
         {"value", witness->value}};
    described = rotation ? "A = B_g for an infinite point with residue " +
                               std::to_string(witness->value)
                         : "A = B - " + std::to_string(witness->value);
  }
  Report r;
  r.machine = {{"a", to_string(a)},
               {"b", to_string(b)},
               {"embedded", witness.has_value()},
               {"witness", w},
               {"banach_a", to_string(banach(a))},
               {"banach_b", to_string(banach(b))}};
  r.human = Lines()
                .add("A", to_string(a))
                .add("B", to_string(b))
                .add("A exactly embedded in B", yes_no(witness.has_value()))
                .add("witness", described)
                .add("BD(A), BD(B)", to_string(banach(a)) + ", " +
                                         to_string(banach(b)))
                .str();
  return r;
}

Report cmd_psum(const std::string& text, const std::vector<std::string>& rest) {
  const SemilinearSet a = parse_set(text);
  const auto points = collect_points(rest, 2);
  const ProfinitePoint& g = points[0];
  const ProfinitePoint& d = points[1];
  const bool member = pseudo_sum_member(a, g, d);
  const ProfinitePoint sum = add(g, d);
  const bool via_sum = member_set(a, sum);
  const SemilinearSet shifted = hyper_shift(a, d);
  Report r;
  r.machine = {{"set", to_string(a)},
               {"alpha", to_string(g)},
               {"beta", to_string(d)},
               {"member", member},
               {"hyper_shift_beta", to_string(shifted)},
               {"sum_point", to_string(sum)},
               {"via_sum_point", via_sum}};
  r.human = Lines()
                .add("set", to_string(a))
                .add("A_beta", to_string(shifted))
                .add("A in U_a (+) U_b", yes_no(member))
                .add("A in U_(a+b)", yes_no(via_sum) + " (point " +
                                          to_string(sum) + ")")
                .str();
  return r;
}

Report cmd_star(const std::string& text, const std::vector<std::string>& rest) {
  const SemilinearSet a = parse_set(text);
  const auto points = collect_points(rest, 2);
  const ProfinitePoint& g = points[0];
  const ProfinitePoint& d = points[1];
  const bool member = star_member(a, g, d);
  const ProfinitePoint diff = sub(d, g);
  const bool via_diff = member_set(a, diff);
  Report r;
  r.machine = {{"set", to_string(a)},
               {"alpha", to_string(g)},
               {"beta", to_string(d)},
               {"member", member},
               {"difference_point", to_string(diff)},
               {"via_difference_point", via_diff}};
  r.human = Lines()
                .add("set", to_string(a))
                .add("A in U_a * U_b", yes_no(member))
                .add("A in U_(b-a)", yes_no(via_diff) + " (point " +
                                          to_string(diff) + ")")
                .str();
  return r;
}

Report cmd_idem(const std::vector<std::string>& rest) {
  const ProfinitePoint g = collect_points(rest, 1)[0];
  const bool idem = is_idempotent(g);
  Report r;
  r.machine = {{"point", to_string(g)}, {"idempotent", idem}};
  r.human = "idempotent at depth " + std::to_string(g.modulus()) + ": " +
            yes_no(idem) + "\n";
  return r;
}

Report cmd_tensor(const std::string& text, const std::vector<std::string>& rest) {
  const PairSet x = parse_pair_set(text);
  const auto points = collect_points(rest, 2);
  const ProfinitePoint& g = points[0];
  const ProfinitePoint& d = points[1];
  const bool member = tensor_member(x, g, d);
  const SemilinearSet fibers = fiber_membership_set(x, d);
  const bool canonical = pair_member(x, canonical_tensor_point(g, d));
  const bool diagonal = diagonal_member(x, g);
  Report r;
  r.machine = {{"pair_set", to_string(x)},
               {"alpha", to_string(g)},
               {"beta", to_string(d)},
               {"member", member},
               {"fiber_membership_set", to_string(fibers)},
               {"canonical_pair_member", canonical},
               {"diagonal_member", diagonal}};
  r.human = Lines()
                .add("pair set", to_string(x))
                .add("{n : X_n in U_b}", to_string(fibers))
                .add("X in U_a (x) U_b", yes_no(member))
                .add("X in U_(a,b) tensor", yes_no(canonical))
                .add("X in diagonal of U_a", yes_no(diagonal))
                .str();
  return r;
}

Report cmd_color3(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<std::uint32_t> map(lines.size());
  std::vector<bool> seen(lines.size(), false);
  for (const auto& line : lines) {
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw UsageError("expected 'i -> f(i)', got '" + line + "'");
    const auto lhs = parse_naturals(line.substr(0, arrow));
    const auto rhs = parse_naturals(line.substr(arrow + 2));
    if (lhs.size() != 1 || rhs.size() != 1)
      throw UsageError("expected 'i -> f(i)', got '" + line + "'");
    if (lhs[0] >= lines.size() || seen[lhs[0]])
      throw UsageError("vertex " + std::to_string(lhs[0]) +
                       " is out of range or defined twice");
    if (rhs[0] >= lines.size())
      throw Error(ErrorKind::OutOfRange,
                  "image " + std::to_string(rhs[0]) + " is not a vertex");
    seen[lhs[0]] = true;
    map[lhs[0]] = static_cast<std::uint32_t>(rhs[0]);
  }
  const FunctionalGraph graph(std::move(map));
  const Coloring chi = three_color(graph);
  const bool ok = verify_coloring(graph, chi);
  json colors = json::array();
  std::string row;
  for (auto c : chi.colors) {
    colors.push_back(static_cast<unsigned>(c));
    row += static_cast<char>('0' + c);
  }
  Report r;
  r.machine = {{"size", graph.size()}, {"colors", colors}, {"valid", ok}};
  r.human = Lines()
                .add("vertices", std::to_string(graph.size()))
                .add("coloring", row)
                .add("chi(i) != chi(f(i))", yes_no(ok))
                .str();
  return r;
}

Report cmd_rado(const std::string& text) {
  const LinearEquation eq(parse_integer_list(text));
  const bool pr = rado_single_pr(eq);
  json coeffs = json::array();
  for (auto c : eq.coefficients()) coeffs.push_back(c);
  Report r;
  r.machine = {{"equation", eq.to_string()},
               {"coefficients", coeffs},
               {"partition_regular", pr}};
  r.human = Lines()
                .add("equation", eq.to_string())
                .add("partition regular", yes_no(pr) +
                                              (pr ? " (some coefficients sum to 0)"
                                                  : " (no coefficient subset sums to 0)"))
                .str();
  return r;
}

Report cmd_schur(std::size_t n, unsigned colors) {
  const LinearEquation schur({1, 1, -1});
  const auto avoiding = find_avoiding_coloring(schur, n, colors);
  json avoid = nullptr;
  std::string row = "none";
  if (avoiding) {
    avoid = json::array();
    row.clear();
    for (auto c : avoiding->colors) {
      avoid.push_back(static_cast<unsigned>(c));
      row += std::to_string(c) + " ";
    }
    if (!row.empty()) row.pop_back();
  }
  Report r;
  r.machine = {{"n", n},
               {"colors", colors},
               {"every_coloring_has_triple", !avoiding.has_value()},
               {"avoiding_coloring", avoid}};
  r.human = Lines()
                .add("equation", schur.to_string())
                .add("window", "[1, " + std::to_string(n) + "], " +
                                   std::to_string(colors) + " colors")
                .add("always monochromatic", yes_no(!avoiding.has_value()))
                .add("avoiding coloring", row)
                .str();
  return r;
}

Coloring read_coloring(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) return Coloring{1, {}};
  std::vector<std::uint8_t> colors;
  for (const auto& line : lines)
    for (Nat c : parse_naturals(line)) {
      if (c < 1 || c > 255) throw UsageError("colors must lie in [1, 255]");
      colors.push_back(static_cast<std::uint8_t>(c));
    }
  const unsigned top =
      colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
  return Coloring::from(std::move(colors), top);
}

Report cmd_hindman(const std::string& path, std::size_t k) {
  const Coloring chi = read_coloring(path);
  const auto witness = find_fs_set(chi, k);
  Report r;
  r.machine = {{"k", k}, {"window", chi.size()}, {"found", witness.has_value()}};
  r.machine["elements"] = witness ? nat_array(witness->elements) : json(nullptr);
  r.machine["color"] = witness ? json(witness->color) : json(nullptr);
  r.machine["sums"] = witness ? nat_array(fs(witness->elements)) : json(nullptr);
  Lines out;
  out.add("window", "[1, " + std::to_string(chi.size()) + "]");
  if (witness) {
    out.add("X", "{" + join_nats(witness->elements) + "}")
        .add("color", std::to_string(witness->color))
        .add("FS(X)", "{" + join_nats(fs(witness->elements)) + "}");
  } else {
    out.add("X", "none within the window");
  }
  r.human = out.str();
  return r;
}

Report cmd_banach_start(const std::string& path, std::size_t nu) {
  const auto lines = read_lines(path);
  WindowSet w;
  for (const auto& line : lines)
    for (char c : line) {
      if (c == '0' || c == '1') {
        w.bits.push_back(c == '1');
      } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
        throw UsageError(std::string("window files hold 0/1 flags, got '") + c +
                         "'");
      }
    }
  if (w.bits.empty()) throw UsageError("window file is empty");
  const std::size_t start = good_start(w, nu);
  json prefixes = json::array();
  std::vector<std::string> shown;
  std::size_t count = 0;
  for (std::size_t i = 1; i <= nu; ++i) {
    if (w.bits[start + i - 1]) ++count;
    const std::string q = to_string(Rational(static_cast<std::int64_t>(count),
                                             static_cast<std::int64_t>(i)));
    prefixes.push_back(q);
    shown.push_back(q);
  }
  const Rational bound(static_cast<std::int64_t>(w.count()) -
                           static_cast<std::int64_t>(nu),
                       static_cast<std::int64_t>(w.length()));
  Report r;
  r.machine = {{"length", w.length()}, {"count", w.count()},
               {"nu", nu},             {"start", start},
               {"bound", to_string(bound)}, {"prefix_densities", prefixes}};
  std::string joined;
  for (std::size_t i = 0; i < shown.size(); ++i)
    joined += (i ? ", " : "") + shown[i];
  r.human = Lines()
                .add("window", std::to_string(w.count()) + " of " +
                                   std::to_string(w.length()) + " positions")
                .add("bound a - nu/N", to_string(bound))
                .add("good start", std::to_string(start))
                .add("prefix densities", joined)
                .str();
  return r;
}

Report cmd_demo_noncomm(const std::string& nu_text, std::size_t length) {
  const BigNat nu = parse_bignat(nu_text);
  const NoncommReport rep = noncomm_demo(nu, length);
  Report r;
  r.machine = {{"nu", to_string(rep.nu)},
               {"length", length},
               {"low", to_string(rep.low)},
               {"high", to_string(rep.high)},
               {"window_low", rep.at_low.bit_string()},
               {"window_high", rep.at_high.bit_string()},
               {"low_all_true", rep.at_low.all_true()},
               {"high_all_false", rep.at_high.all_false()}};
  r.human =
      Lines()
          .text("A = union of [n^2, (n+1)^2) over even n")
          .add("shift at " + to_string(rep.low), rep.at_low.bit_string() +
                                                      (rep.at_low.all_true()
                                                           ? "  (all members)"
                                                           : ""))
          .add("shift at " + to_string(rep.high),
               rep.at_high.bit_string() +
                   (rep.at_high.all_false() ? "  (no members)" : ""))
          .text("A_g = N near g = nu^2 while A_b = empty near b = (nu+1)^2, so "
                "A lies in U_b (+) U_g but not in U_g (+) U_b")
          .str();
  return r;
}

Report cmd_gamma_fip(const std::string& path, Nat n) {
  const auto lines = read_lines(path);
  std::vector<SemilinearSet> sets;
  for (const auto& line : lines) sets.push_back(parse_set(line));
  const auto [a, b] = gamma_fip_witness(sets, n);
  json texts = json::array();
  for (const auto& s : sets) texts.push_back(to_string(s));
  Report r;
  r.machine = {{"n", n}, {"sets", texts}, {"a", a}, {"b", b}, {"difference", b - a}};
  r.human = Lines()
                .add("sets", std::to_string(sets.size()) + " over [1, " +
                                 std::to_string(n) + "]")
                .add("witness (a, b)", "(" + std::to_string(a) + ", " +
                                           std::to_string(b) + ")")
                .add("a, b, b - a", std::to_string(a) + ", " +
                                        std::to_string(b) + ", " +
                                        std::to_string(b - a) +
                                        " share one atom")
                .str();
  return r;
}

Report cmd_obstruction(const std::string& ta, const std::string& tb) {
  const ObstructionReport o =
      star_obstruction_check(parse_bignat(ta), parse_bignat(tb));
  const bool holds = o.valuation_preserved && o.unit_negated;
  Report r;
  r.machine = {{"a", to_string(o.a)},
               {"b", to_string(o.b)},
               {"difference", to_string(o.difference)},
               {"valuation_a", o.valuation_a},
               {"valuation_b", o.valuation_b},
               {"valuation_difference", o.valuation_difference},
               {"unit_a_mod3", o.unit_a_mod3},
               {"unit_difference_mod3", o.unit_difference_mod3},
               {"holds", holds},
               {"conclusion", o.conclusion}};
  r.human = Lines()
                .add("b - a", to_string(o.difference))
                .add("v3(a), v3(b), v3(b-a)",
                     std::to_string(o.valuation_a) + ", " +
                         std::to_string(o.valuation_b) + ", " +
                         std::to_string(o.valuation_difference))
                .add("unit(a), unit(b-a) mod 3",
                     std::to_string(o.unit_a_mod3) + ", " +
                         std::to_string(o.unit_difference_mod3))
                .text(o.conclusion)
                .str();
  return r;
}

enum class Kind { Str, Int, Bool, Arr, IntOrNull, ArrOrNull, ObjOrNull };

const std::map<std::string, std::vector<std::pair<std::string, Kind>>>&
schemas() {
  static const std::map<std::string, std::vector<std::pair<std::string, Kind>>>
      table = {
          {"density",
           {{"set", Kind::Str}, {"schnirelmann", Kind::Str},
            {"lower", Kind::Str}, {"upper", Kind::Str},
            {"asymptotic", Kind::Str}, {"banach", Kind::Str},
            {"best_rotation", Kind::IntOrNull}}},
          {"shift",
           {{"set", Kind::Str}, {"point", Kind::Str}, {"member", Kind::Bool},
            {"hyper_shift", Kind::Str}, {"ultrafilter_shift", Kind::Str},
            {"agree", Kind::Bool}}},
          {"embed",
           {{"a", Kind::Str}, {"b", Kind::Str}, {"embedded", Kind::Bool},
            {"witness", Kind::ObjOrNull}, {"banach_a", Kind::Str},
            {"banach_b", Kind::Str}}},
          {"psum",
           {{"set", Kind::Str}, {"alpha", Kind::Str}, {"beta", Kind::Str},
            {"member", Kind::Bool}, {"hyper_shift_beta", Kind::Str},
            {"sum_point", Kind::Str}, {"via_sum_point", Kind::Bool}}},
          {"star",
           {{"set", Kind::Str}, {"alpha", Kind::Str}, {"beta", Kind::Str},
            {"member", Kind::Bool}, {"difference_point", Kind::Str},
            {"via_difference_point", Kind::Bool}}},
          {"idem", {{"point", Kind::Str}, {"idempotent", Kind::Bool}}},
          {"tensor",
           {{"pair_set", Kind::Str}, {"alpha", Kind::Str}, {"beta", Kind::Str},
            {"member", Kind::Bool}, {"fiber_membership_set", Kind::Str},
            {"canonical_pair_member", Kind::Bool},
            {"diagonal_member", Kind::Bool}}},
          {"color3",
           {{"size", Kind::Int}, {"colors", Kind::Arr}, {"valid", Kind::Bool}}},
          {"rado",
           {{"equation", Kind::Str}, {"coefficients", Kind::Arr},
            {"partition_regular", Kind::Bool}}},
          {"schur",
           {{"n", Kind::Int}, {"colors", Kind::Int},
            {"every_coloring_has_triple", Kind::Bool},
            {"avoiding_coloring", Kind::ArrOrNull}}},
          {"hindman",
           {{"k", Kind::Int}, {"window", Kind::Int}, {"found", Kind::Bool},
            {"elements", Kind::ArrOrNull}, {"color", Kind::IntOrNull},
            {"sums", Kind::ArrOrNull}}},
          {"banach-start",
           {{"length", Kind::Int}, {"count", Kind::Int}, {"nu", Kind::Int},
            {"start", Kind::Int}, {"bound", Kind::Str},
            {"prefix_densities", Kind::Arr}}},
          {"demo-noncomm",
           {{"nu", Kind::Str}, {"length", Kind::Int}, {"low", Kind::Str},
            {"high", Kind::Str}, {"window_low", Kind::Str},
            {"window_high", Kind::Str}, {"low_all_true", Kind::Bool},
            {"high_all_false", Kind::Bool}}},
          {"gamma-fip",
           {{"n", Kind::Int}, {"sets", Kind::Arr}, {"a", Kind::Int},
            {"b", Kind::Int}, {"difference", Kind::Int}}},
          {"obstruction",
           {{"a", Kind::Str}, {"b", Kind::Str}, {"difference", Kind::Str},
            {"valuation_a", Kind::Int}, {"valuation_b", Kind::Int},
            {"valuation_difference", Kind::Int}, {"unit_a_mod3", Kind::Int},
            {"unit_difference_mod3", Kind::Int}, {"holds", Kind::Bool},
            {"conclusion", Kind::Str}}},
      };
  return table;
}

bool matches(const json& v, Kind kind) {
  switch (kind) {
    case Kind::Str: return v.is_string();
    case Kind::Int: return v.is_number_integer();
    case Kind::Bool: return v.is_boolean();
    case Kind::Arr: return v.is_array();
    case Kind::IntOrNull: return v.is_null() || v.is_number_integer();
    case Kind::ArrOrNull: return v.is_null() || v.is_array();
    case Kind::ObjOrNull: return v.is_null() || v.is_object();
  }
  return false;
}

}  // namespace

bool validate_machine_block(const std::string& command, const json& block) {
  const auto it = schemas().find(command);
  if (it == schemas().end() || !block.is_object()) return false;
  if (block.value("command", "") != command) return false;
  for (const auto& [key, kind] : it->second)
    if (!block.contains(key) || !matches(block.at(key), kind)) return false;
  return true;
}

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : schemas()) names.push_back(name);
  return names;
}

Output run(const std::vector<std::string>& args) {
  Output result;
  CLI::App app{"Ultrafilter calculus on eventually periodic sets, with finite "
               "Ramsey-theory searches.",
               "betan"};
  app.footer(kGrammarFooter);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  std::string expr, expr2, file, text;
  std::vector<std::string> rest;
  std::size_t count = 0, colors = 0;
  Nat window = 100;

  auto* density = app.add_subcommand(
      "density", "Schnirelmann, asymptotic and Banach densities of E, and a "
                 "hyper-shift whose Schnirelmann density equals BD(E)");
  density->add_option("E", expr, "Set expression")->required();

  auto* shift = app.add_subcommand(
      "shift", "Hyper-shift E_g and ultrafilter-shift E - U_g (they agree: "
               "A_g = A - U_g)");
  shift->add_option("E", expr, "Set expression")->required();
  shift->add_option("point", rest, "point M:r")->required();

  auto* embed = app.add_subcommand(
      "embed", "Decide whether E1 is exactly embedded in E2, i.e. E1 = (E2)_g "
               "for some g");
  embed->add_option("E1", expr, "Set expression")->required();
  embed->add_option("E2", expr2, "Set expression")->required();

  auto* psum = app.add_subcommand(
      "psum", "Decide E in U_a (+) U_b via: A in U_a (+) U_b iff A_b in U_a");
  psum->add_option("E", expr, "Set expression")->required();
  psum->add_option("points", rest, "point M:r point M:r")->required();

  auto* star = app.add_subcommand(
      "star", "Decide E in U_a * U_b = {n : A + n in U_b} in U_a (image of the "
              "tensor product under D(n,m) = m - n)");
  star->add_option("E", expr, "Set expression")->required();
  star->add_option("points", rest, "point M:r point M:r")->required();

  auto* idem = app.add_subcommand(
      "idem", "Is U_g idempotent at this depth (U (+) U = U)?");
  idem->add_option("point", rest, "point M:r")->required();

  auto* tensor = app.add_subcommand(
      "tensor", "Decide X in U_a (x) U_b = {X : {n : X_n in U_b} in U_a} for a "
                "pair-set expression X");
  tensor->add_option("X", expr, "Pair-set expression")->required();
  tensor->add_option("points", rest, "point M:r point M:r")->required();

  auto* color3 = app.add_subcommand(
      "color3", "3-color a fixed-point-free map so that chi(i) != chi(f(i))");
  color3->add_option("FILE", file, "Lines 'i -> f(i)'")->required();

  auto* rado = app.add_subcommand(
      "rado", "Partition regularity of c1 x1 + ... + ck xk = 0: some nonempty "
              "sum of coefficients is 0");
  rado->add_option("COEFFS", text, "Comma-separated coefficients")->required();

  auto* schur = app.add_subcommand(
      "schur", "Does every r-coloring of [1,N] contain x + y = z in one color?");
  schur->add_option("N", count, "Window size")->required();
  schur->add_option("r", colors, "Number of colors")->required();

  auto* hindman = app.add_subcommand(
      "hindman", "Find X, |X| = k, with every finite sum of distinct elements "
                 "in one color");
  hindman->add_option("FILE", file, "One line of colors for 1..N")->required();
  hindman->add_option("k", count, "Size of X")->required();

  auto* banach_start = app.add_subcommand(
      "banach-start", "Find g with prefix densities >= a - nu/N for every "
                      "prefix length 1 <= i <= nu");
  banach_start->add_option("FILE", file, "A line of 0/1 flags")->required();
  banach_start->add_option("nu", count, "Prefix bound")->required();

  auto* demo = app.add_subcommand(
      "demo-noncomm", "Noncommutativity of (+) with the set union of "
                      "[n^2,(n+1)^2) over even n");
  demo->add_option("nu", text, "Even natural number")->required();
  demo->add_option("L", count, "Window length")->required();

  auto* gamma = app.add_subcommand(
      "gamma-fip", "Find (a, b) with a, b, b - a in one atom of the algebra "
                   "generated by the sets in FILE (X - Y = Z is partition "
                   "regular)");
  gamma->add_option("FILE", file, "One set expression per line")->required();
  gamma->add_option("--n", window, "Window [1, n]")->capture_default_str();

  auto* obstruction = app.add_subcommand(
      "obstruction", "Check v3(b-a) = v3(a) and unit(b-a) = -unit(a) (mod 3) "
                     "when v3(a) < v3(b)");
  obstruction->add_option("a", expr, "Natural number")->required();
  obstruction->add_option("b", expr2, "Natural number")->required();

  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  std::string name;
  try {
    Report report;
    if (*density) {
      name = "density";
      report = cmd_density(expr);
    } else if (*shift) {
      name = "shift";
      report = cmd_shift(expr, rest);
    } else if (*embed) {
      name = "embed";
      report = cmd_embed(expr, expr2);
    } else if (*psum) {
      name = "psum";
      report = cmd_psum(expr, rest);
    } else if (*star) {
      name = "star";
      report = cmd_star(expr, rest);
    } else if (*idem) {
      name = "idem";
      report = cmd_idem(rest);
    } else if (*tensor) {
      name = "tensor";
      report = cmd_tensor(expr, rest);
    } else if (*color3) {
      name = "color3";
      report = cmd_color3(file);
    } else if (*rado) {
      name = "rado";
      report = cmd_rado(text);
    } else if (*schur) {
      name = "schur";
      if (colors == 0 || colors > 255) throw UsageError("r must be in [1, 255]");
      report = cmd_schur(count, static_cast<unsigned>(colors));
    } else if (*hindman) {
      name = "hindman";
      report = cmd_hindman(file, count);
    } else if (*banach_start) {
      name = "banach-start";
      report = cmd_banach_start(file, count);
    } else if (*demo) {
      name = "demo-noncomm";
      report = cmd_demo_noncomm(text, count);
    } else if (*gamma) {
      name = "gamma-fip";
      report = cmd_gamma_fip(file, window);
    } else if (*obstruction) {
      name = "obstruction";
      report = cmd_obstruction(expr, expr2);
    }
    report.machine["command"] = name;
    if (format == "json") {
      result.out = report.machine.dump(2) + "\n";
    } else {
      result.out = report.human;
    }
  } catch (const SyntaxError& e) {
    result.exit_code = kExitUsage;
    result.err = "error: " + std::string(e.what()) + "\n";
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.err = "error: " + std::string(e.what()) + "\n";
  } catch (const Error& e) {
    result.exit_code = kExitDomain;
    result.err = "error: " + name + ": " + std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitDomain;
    result.err = "error: " + name + ": " + std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace betan::cli
