#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betan/commands.hpp"
#include "betan/error.hpp"
#include "betan/expr.hpp"
#include "betan/pairs.hpp"
#include "betan/profinite.hpp"
#include "betan/ramsey.hpp"
#include "betan/semilinear.hpp"
#include "betan/windows.hpp"

namespace py = pybind11;
using namespace betan;

namespace {

py::object fraction(const Rational& q) {
  const py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.numerator(), q.denominator());
}

py::int_ pyint(const BigNat& n) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(n.str().c_str(), nullptr, 10)));
}

BigNat bignat(const py::int_& n) {
  return parse_bignat(std::string(py::str(n)));
}

}  // namespace

PYBIND11_MODULE(_betan, m) {
  m.doc() = "Ultrafilter calculus on eventually periodic sets";

  const auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "ParseError", error.ptr());

  py::class_<SemilinearSet>(m, "Set")
      .def(py::init([](const std::string& text) { return parse_set(text); }),
           py::arg("expr"))
      .def_static("normalize", &SemilinearSet::normalize, py::arg("threshold"),
                  py::arg("period"), py::arg("pattern"), py::arg("exceptional"))
      .def_property_readonly("threshold", &SemilinearSet::threshold)
      .def_property_readonly("period", &SemilinearSet::period)
      .def_property_readonly("pattern", &SemilinearSet::pattern)
      .def_property_readonly("exceptional", &SemilinearSet::exceptional)
      .def("__contains__", &SemilinearSet::contains)
      .def("is_empty", &SemilinearSet::is_empty)
      .def("is_finite", &SemilinearSet::is_finite)
      .def(py::self == py::self)
      .def("__or__", &set_union)
      .def("__and__", &intersect)
      .def("__invert__", &complement)
      .def("__sub__", &difference)
      .def("__lshift__", [](const SemilinearSet& a, Nat k) { return shift_left(a, k); })
      .def("__rshift__", [](const SemilinearSet& a, Nat k) { return shift_right(a, k); })
      .def("__str__", [](const SemilinearSet& a) { return to_string(a); })
      .def("__repr__",
           [](const SemilinearSet& a) { return "Set('" + to_string(a) + "')"; });

  m.def("schnirelmann", [](const SemilinearSet& a) { return fraction(schnirelmann(a)); });
  m.def("asymptotic", [](const SemilinearSet& a) { return fraction(asymptotic(a)); });
  m.def("banach", [](const SemilinearSet& a) { return fraction(banach(a)); });
  m.def("best_rotation", &best_rotation);
  m.def("rotated_tail", &rotated_tail);
  m.def("preimage_affine", [](const SemilinearSet& a, Nat scale, Nat offset) {
    return preimage_affine(a, AffineMap{scale, offset});
  });

  py::class_<ProfinitePoint>(m, "Point")
      .def(py::init<Nat, Nat>(), py::arg("modulus"), py::arg("residue"))
      .def(py::init([](const std::string& text) { return parse_point(text); }))
      .def_property_readonly("modulus", &ProfinitePoint::modulus)
      .def_property_readonly("residue", &ProfinitePoint::residue)
      .def(py::self == py::self)
      .def("__add__", &add)
      .def("__sub__", [](const ProfinitePoint& d, const ProfinitePoint& g) { return sub(d, g); })
      .def("__str__", [](const ProfinitePoint& p) { return to_string(p); })
      .def("__repr__",
           [](const ProfinitePoint& p) { return "Point('" + to_string(p) + "')"; });

  m.def("reduce", &reduce);
  m.def("lift", &lift);
  m.def("member", &member_set, py::arg("a"), py::arg("point"));
  m.def("hyper_shift", &hyper_shift);
  m.def("ultrafilter_shift", &ultrafilter_shift);
  m.def("pseudo_sum_member", &pseudo_sum_member);
  m.def("star_member", &star_member);
  m.def("is_idempotent", &is_idempotent);

  py::class_<PairSet>(m, "PairSet")
      .def(py::init([](const std::string& text) { return parse_pair_set(text); }))
      .def("__contains__",
           [](const PairSet& x, std::pair<Nat, Nat> p) { return x.contains(p.first, p.second); })
      .def("__or__", [](const PairSet& a, const PairSet& b) { return a | b; })
      .def("__and__", [](const PairSet& a, const PairSet& b) { return a & b; })
      .def("__invert__", [](const PairSet& a) { return !a; })
      .def("__str__", [](const PairSet& x) { return to_string(x); });

  m.def("tensor_member", &tensor_member);
  m.def("fiber_membership_set", &fiber_membership_set);
  m.def("diagonal_section", &diagonal_section);

  m.def("finite_hyper_shift",
        [](const std::string& expr, const py::int_& g, std::size_t length) {
          return finite_hyper_shift(parse_predicate(expr), bignat(g), length).bits;
        });
  m.def("good_start", [](const std::vector<bool>& bits, std::size_t nu) {
    return good_start(WindowSet{0, bits}, nu);
  });
  m.def("exact_embed", [](const SemilinearSet& a, const SemilinearSet& b) -> py::object {
    const auto w = exact_embed_decide(a, b);
    if (!w) return py::none();
    return py::make_tuple(
        w->kind == EmbedWitness::Kind::Rotation ? "rotation" : "finite_shift", w->value);
  });
  m.def("noncomm_demo", [](const py::int_& nu, std::size_t length) {
    const NoncommReport r = noncomm_demo(bignat(nu), length);
    return py::make_tuple(r.at_low.bits, r.at_high.bits);
  });

  m.def("three_color", [](std::vector<std::uint32_t> f) {
    return three_color(FunctionalGraph(std::move(f))).colors;
  });
  m.def("rado_single_pr",
        [](std::vector<std::int64_t> c) { return rado_single_pr(LinearEquation(std::move(c))); });
  m.def(
      "find_avoiding_coloring",
      [](std::vector<std::int64_t> c, std::size_t n, unsigned r)
          -> std::optional<std::vector<std::uint8_t>> {
        const auto chi = find_avoiding_coloring(LinearEquation(std::move(c)), n, r);
        if (!chi) return std::nullopt;
        return chi->colors;
      },
      py::arg("coefficients"), py::arg("n"), py::arg("colors"));
  m.def("exhaustive_pr_check", [](std::vector<std::int64_t> c, std::size_t n, unsigned r) {
    return exhaustive_pr_check(LinearEquation(std::move(c)), n, r);
  });
  m.def("fs", [](const std::vector<Nat>& x) { return fs(x); });
  m.def("find_fs_set",
        [](std::vector<std::uint8_t> colors, std::size_t k) -> std::optional<std::vector<Nat>> {
          unsigned top = 1;
          for (auto c : colors) top = std::max<unsigned>(top, c);
          const auto w = find_fs_set(Coloring::from(std::move(colors), top), k);
          if (!w) return std::nullopt;
          return w->elements;
        });
  m.def("gamma_fip_witness", [](const std::vector<SemilinearSet>& sets, Nat n) {
    return gamma_fip_witness(sets, n);
  });
  m.def("triadic_split", [](const py::int_& n) {
    const TriadicSplit s = triadic_split(bignat(n));
    return py::make_tuple(s.valuation, pyint(s.unit));
  });

  m.def("run", [](const std::vector<std::string>& args) {
    const cli::Output out = cli::run(args);
    return py::make_tuple(out.exit_code, out.out, out.err);
  });
}
