#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <boost/rational.hpp>

#include "sqfsum/constant.hpp"
#include "sqfsum/counting.hpp"
#include "sqfsum/localdensity.hpp"
#include "sqfsum/squareful.hpp"

namespace py = pybind11;
using namespace sqf;

namespace {

py::object to_fraction(const Rat& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.numerator(), r.denominator());
}

ConicShape make_shape(std::array<u64, 3> y) { return ConicShape(y); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Squareful-number triples, conic local densities, constant series";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  // squareful numbers
  m.def("is_squareful", &is_squareful, py::arg("n"));
  m.def(
      "decompose",
      [](u64 k) -> py::object {
        auto rep = decompose(k);
        if (!rep) return py::none();
        return py::make_tuple(rep->x, rep->y);
      },
      py::arg("k"), "the unique (x, y) with k = x^2 y^3, y squarefree, or None");
  m.def("enumerate_squareful", &enumerate_squareful, py::arg("bound"));
  m.def(
      "count_squareful",
      [](u64 B) {
        auto c = count_squareful(B);
        return py::make_tuple(c.count, c.asymptotic);
      },
      py::arg("bound"), "(exact count, c2 * sqrt(B))");
  m.def("powerful_density_constant", &powerful_density_constant);

  // triple counting
  m.def("count_triples", py::overload_cast<u64, int>(&count_triples),
        py::arg("bound"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "count_ternary_points",
      [](std::array<i64, 3> c, int d, std::array<u64, 3> Z, u64 budget) {
        return count_ternary_points(c, d, Z, budget);
      },
      py::arg("c"), py::arg("d"), py::arg("Z"),
      py::arg("budget") = kDefaultEnumBudget);

  // local densities
  m.def("sigma2", [](std::array<u64, 3> y) { return sigma2(make_shape(y)); },
        py::arg("y"));
  m.def(
      "odd_bad_density",
      [](u64 p, std::array<u64, 3> y) {
        return to_fraction(odd_bad_density(p, make_shape(y)));
      },
      py::arg("p"), py::arg("y"));
  m.def(
      "brute_density",
      [](u64 p, int r, std::array<u64, 3> y) {
        return to_fraction(brute_density(p, r, make_shape(y)));
      },
      py::arg("p"), py::arg("r"), py::arg("y"));
  m.def(
      "good_density",
      [](u64 p, std::array<u64, 3> y) {
        return to_fraction(good_density(p, make_shape(y)));
      },
      py::arg("p"), py::arg("y"));
  m.def(
      "count_conic_points_mod_p",
      [](u64 p, std::array<u64, 3> y) {
        return count_conic_points_mod_p(p, make_shape(y));
      },
      py::arg("p"), py::arg("y"));
  m.def("infinite_density",
        [](std::array<u64, 3> y) { return infinite_density(make_shape(y)); },
        py::arg("y"));
  m.def(
      "local_density",
      [](std::array<u64, 3> y, std::optional<u64> place) -> py::object {
        LocalDensityValue v = local_density(make_shape(y), place);
        if (v.exact) return to_fraction(*v.exact);
        return py::float_(v.value);
      },
      py::arg("y"), py::arg("place") = py::none(),
      "density at a finite place (exact Fraction) or at infinity (float)");
  m.def("tamagawa",
        [](std::array<u64, 3> y) { return tamagawa(make_shape(y)); },
        py::arg("y"));
  m.def(
      "component_tamagawa",
      [](std::array<u64, 3> y, u32 cutoff) {
        return component_tamagawa(make_shape(y), cutoff);
      },
      py::arg("y"), py::arg("prime_cutoff") = 1'000'000u);
  m.def("peyre_constant",
        [](std::array<u64, 3> y) { return peyre_constant(make_shape(y)); },
        py::arg("y"));
  m.def(
      "conic_count",
      [](std::array<u64, 3> y, u64 H, bool include_zero, u64 budget) {
        ConicCountOptions opt;
        opt.include_zero_coords = include_zero;
        opt.budget = budget;
        return conic_count(make_shape(y), H, opt);
      },
      py::arg("y"), py::arg("height"), py::arg("include_zero_coords") = false,
      py::arg("budget") = 1'000'000'000ULL,
      py::call_guard<py::gil_scoped_release>());

  // constant series
  py::class_<ConstantEstimate>(m, "ConstantEstimate")
      .def_readonly("cutoff", &ConstantEstimate::cutoff)
      .def_readonly("partial", &ConstantEstimate::partial)
      .def_readonly("tail_bound", &ConstantEstimate::tail_bound)
      .def_property_readonly("bracket_lo", &ConstantEstimate::bracket_lo)
      .def_property_readonly("bracket_hi", &ConstantEstimate::bracket_hi)
      .def("contains", &ConstantEstimate::contains, py::arg("c"))
      .def("__repr__", [](const ConstantEstimate& e) {
        return "ConstantEstimate(cutoff=" + std::to_string(e.cutoff) +
               ", partial=" + std::to_string(e.partial) +
               ", tail_bound=" + std::to_string(e.tail_bound) + ")";
      });

  m.def("delta_minus1", [](u64 d) { return delta_minus1(factor_trial(d)); },
        py::arg("d"));
  m.def("delta_0", [](u64 d) { return delta_0(factor_trial(d)); }, py::arg("d"));
  m.def("delta_2", [](u64 d) { return delta_2(factor_trial(d)); }, py::arg("d"));
  m.def("constant_partial", &constant_partial, py::arg("cutoff"),
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("constant_via_y", &constant_via_y, py::arg("cutoff"),
        py::call_guard<py::gil_scoped_release>());
  m.def("tail_bound", &tail_bound, py::arg("cutoff"));

  // arithmetic helpers
  m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
  m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"));
  m.def("mobius", [](u64 n) { return mobius(factor_trial(n)); }, py::arg("n"));
  m.def("gamma_factor",
        [](u64 n) { return to_fraction(gamma_factor(factor_trial(n))); },
        py::arg("n"));
  m.def("star_symbol",
        [](i64 a, u64 b) { return star_symbol(a, factor_trial(b)); },
        py::arg("a"), py::arg("b"));

  m.attr("REFERENCE_CONSTANT") = kReferenceConstant;
}
