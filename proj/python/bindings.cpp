#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "slcomb/comb_forge.hpp"
#include "slcomb/errors.hpp"
#include "slcomb/expectation.hpp"
#include "slcomb/invariant_engine.hpp"
#include "slcomb/oracle.hpp"
#include "slcomb/tensor_algebra.hpp"

namespace py = pybind11;
using namespace slcomb;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ShapeMismatch("expected a square matrix");
  return ComplexMatrix::from_row_major(std::span<const Complex>(a.data(), static_cast<std::size_t>(a.size())));
}

PureState make_state(const CArray& amps, int d, std::size_t parties) {
  return PureState(d, parties, std::vector<Complex>(amps.data(), amps.data() + amps.size()));
}

py::dict report_dict(const VerificationReport& r) {
  py::dict out;
  out["name"] = r.name;
  out["trials"] = r.trials;
  out["tolerance"] = r.tolerance;
  out["max_deviation"] = r.max_deviation;
  out["worst_trial"] = r.worst_trial;
  out["passed"] = r.passed;
  out["notes"] = r.notes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SL-invariant combs and polynomial entanglement invariants for d = 2, 3, 4";

  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", PyExc_ValueError);
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
  py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", PyExc_MemoryError);
  py::register_exception<DegeneratePivot>(m, "DegeneratePivot", PyExc_ArithmeticError);
  py::register_exception<SamplerExhausted>(m, "SamplerExhausted", PyExc_RuntimeError);

  m.def("generator_basis", [](int d) {
    std::vector<CArray> out;
    for (const auto& g : generator_basis(d)) out.push_back(to_numpy(g));
    return out;
  }, py::arg("d"));
  m.def("swap_operator", [](std::size_t d) { return to_numpy(swap_operator(d)); }, py::arg("d"));
  m.def("permutation_from_generators", [](int d) { return to_numpy(permutation_from_generators(d)); }, py::arg("d"));
  m.def("operator_schmidt_decompose", [](const CArray& a, std::size_t d, double tol) {
    std::vector<py::tuple> out;
    for (const auto& p : operator_schmidt_decompose(from_numpy(a), d, tol))
      out.push_back(py::make_tuple(to_numpy(p.first), to_numpy(p.second), p.singular_value));
    return out;
  }, py::arg("m"), py::arg("d"), py::arg("tol") = 1e-12);

  py::class_<Comb>(m, "Comb")
      .def_readonly("local_dim", &Comb::local_dim)
      .def_readonly("order", &Comb::order)
      .def_readonly("label", &Comb::label)
      .def_property_readonly("term_count", [](const Comb& c) { return c.expression.term_count(); })
      .def("dense", [](const Comb& c) { return to_numpy(c.expression.materialize()); })
      .def("expectation", [](const Comb& c, const CArray& psi) {
        return antilinear_expectation(c.expression, make_state(psi, c.local_dim, 1));
      }, py::arg("psi"))
      .def("verify", [](const Comb& c, std::size_t trials, double tol, std::uint64_t seed) {
        const auto v = verify_comb(c, trials, tol, seed);
        py::dict out;
        out["trials"] = v.trials;
        out["max_abs_value"] = v.max_abs_value;
        out["worst_trial"] = v.worst_trial;
        out["passed"] = v.passed;
        return out;
      }, py::arg("trials") = 500, py::arg("tol") = 1e-10, py::arg("seed") = 0)
      .def("__repr__", [](const Comb& c) {
        return "<Comb " + c.label + " d=" + std::to_string(c.local_dim) + " order=" + std::to_string(c.order) + ">";
      });

  m.def("comb_qubit", &comb_qubit, py::arg("order"));
  m.def("comb_spin1_order3", &comb_spin1_order3);
  m.def("comb_spin1_order6", &comb_spin1_order6);
  m.def("comb_spin32_order2", &comb_spin32_order2);
  m.def("comb_spin32_order4", &comb_spin32_order4);
  m.def("circ_product", &circ_product, py::arg("a"), py::arg("b"));
  m.def("comb_trace_pairing", &comb_trace_pairing, py::arg("a"), py::arg("b"));
  m.def("orthogonalization_coefficient", &orthogonalization_coefficient, py::arg("a"), py::arg("b"),
        py::arg("pivot_tol") = 1e-14);
  m.def("orthogonalize", &orthogonalize, py::arg("a"), py::arg("b"), py::arg("pivot_tol") = 1e-14);
  m.def("sn_twist", [](const Comb& c, std::vector<std::size_t> left, std::vector<std::size_t> right) {
    return sn_twist(c, left, right);
  }, py::arg("comb"), py::arg("left"), py::arg("right"));
  m.def("o_operator", [](int d, std::size_t i, std::size_t j) { return to_numpy(o_family(d).at(i, j)); },
        py::arg("d"), py::arg("i"), py::arg("j"), "Zero-based (i, j).");
  m.def("tabulation_deviations", [](int d) {
    std::vector<py::tuple> out;
    for (const auto& e : compare_with_tabulation(d)) out.push_back(py::make_tuple(e.i, e.j, e.max_abs_diff));
    return out;
  }, py::arg("d"));

  m.def("invariant_names", &invariant_names);
  m.def("invariant", [](const std::string& name, const CArray& psi, int d, std::size_t parties) {
    const InvariantSpec spec = invariant_spec(name, name == "det" ? d : 0);
    const InvariantReport r = evaluate_invariant(spec, make_state(psi, d, parties));
    py::dict out;
    out["name"] = r.spec_name;
    out["value"] = r.value;
    out["abs"] = r.abs_value;
    out["degree"] = r.degree;
    out["terms"] = r.terms;
    out["cache_hit_rate"] = r.cache_hit_rate;
    out["notes"] = r.notes;
    return out;
  }, py::arg("name"), py::arg("psi"), py::arg("d"), py::arg("parties"));
  m.def("sl_invariance_check", [](const std::string& name, const CArray& psi, int d, std::size_t parties,
                                  std::size_t trials, double tol, std::uint64_t seed) {
    const InvariantSpec spec = invariant_spec(name, name == "det" ? d : 0);
    return report_dict(sl_invariance_check(spec, make_state(psi, d, parties), trials, tol, seed));
  }, py::arg("name"), py::arg("psi"), py::arg("d"), py::arg("parties"), py::arg("trials") = 100,
        py::arg("tol") = 1e-8, py::arg("seed") = 0);

  m.def("random_pure_state", [](int d, std::size_t parties, std::uint64_t seed) {
    RngStream rng(seed);
    const PureState psi = random_pure_state(d, parties, rng);
    const std::vector<py::ssize_t> shape{static_cast<py::ssize_t>(psi.size())};
    const std::vector<py::ssize_t> strides{static_cast<py::ssize_t>(sizeof(Complex))};
    return CArray(shape, strides, psi.amplitudes().data());
  }, py::arg("d"), py::arg("parties"), py::arg("seed") = 0);
  m.def("random_sl", [](std::size_t d, std::uint64_t seed, double cond_cap) {
    RngStream rng(seed);
    return to_numpy(random_sl(d, rng, cond_cap));
  }, py::arg("d"), py::arg("seed") = 0, py::arg("cond_cap") = 50.0);
}
