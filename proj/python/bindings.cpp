#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "doublejc/dissipation.hpp"
#include "doublejc/entanglement.hpp"
#include "doublejc/invariants.hpp"
#include "doublejc/propagator.hpp"
#include "doublejc/sampling.hpp"

namespace py = pybind11;
using namespace doublejc;

namespace {

GenericCoefficients coefficients_from(const std::vector<cplx>& amps) {
  if (amps.size() != 9) throw py::value_error("expected 9 amplitudes ordered c1..c5, d1..d4");
  GenericCoefficients::Storage s{};
  std::copy(amps.begin(), amps.end(), s.begin());
  return GenericCoefficients::from_amplitudes(s);
}

std::vector<cplx> to_list(const GenericCoefficients& c) { return {c.amplitudes().begin(), c.amplitudes().end()}; }

py::dict concurrence_dict(const ConcurrenceSet& cs) {
  py::dict d;
  d["AB"] = cs.c_AB;
  d["Aa"] = cs.c_Aa;
  d["Bb"] = cs.c_Bb;
  d["ab"] = cs.c_ab;
  d["Ab"] = cs.c_Ab;
  d["Ba"] = cs.c_Ba;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Double Jaynes-Cummings model: closed-form evolution and entanglement measures";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<SubsystemParams>(m, "SubsystemParams")
      .def(py::init<double, double, double>(), py::arg("nu"), py::arg("omega"), py::arg("g"))
      .def_static("resonant", &SubsystemParams::resonant, py::arg("g"), py::arg("nu") = 1.0)
      .def_static("detuned", &SubsystemParams::detuned, py::arg("g"), py::arg("delta"), py::arg("nu") = 1.0)
      .def_property_readonly("nu", &SubsystemParams::nu)
      .def_property_readonly("omega", &SubsystemParams::omega)
      .def_property_readonly("g", &SubsystemParams::g)
      .def_property_readonly("delta", &SubsystemParams::delta)
      .def_property_readonly("rabi", &SubsystemParams::rabi)
      .def("__repr__", [](const SubsystemParams& p) {
        return "SubsystemParams(nu=" + std::to_string(p.nu()) + ", omega=" + std::to_string(p.omega()) +
               ", g=" + std::to_string(p.g()) + ")";
      });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<SubsystemParams, SubsystemParams>(), py::arg("sub_a"), py::arg("sub_b"))
      .def_static("resonant", &ModelParams::resonant, py::arg("g_a"), py::arg("g_b"), py::arg("nu") = 1.0)
      .def_readonly("sub_a", &ModelParams::sub_a)
      .def_readonly("sub_b", &ModelParams::sub_b);

  m.def("bell_phi", [](double alpha, double beta) { return to_list(make_bell_phi(alpha, beta)); }, py::arg("alpha"),
        py::arg("beta") = 0.0, "cos(alpha)|uu00> + e^{i beta} sin(alpha)|dd00> as 9 amplitudes");
  m.def("bell_psi", [](double alpha, double beta) { return to_list(make_bell_psi(alpha, beta)); }, py::arg("alpha"),
        py::arg("beta") = 0.0, "cos(alpha)|ud00> + e^{i beta} sin(alpha)|du00> as 9 amplitudes");
  m.def("random_state", [](std::uint64_t seed) {
    Rng rng(seed);
    return to_list(random_generic_state(rng));
  }, py::arg("seed"));

  m.def("evolve", [](const std::vector<cplx>& amps, const ModelParams& p, double t) {
    return to_list(evolve_closed_form(coefficients_from(amps), p, t));
  }, py::arg("amplitudes"), py::arg("params"), py::arg("t"));
  m.def("oracle_evolve", [](const std::vector<cplx>& amps, const ModelParams& p, double t) {
    return to_list(oracle_evolve(coefficients_from(amps), p, t));
  }, py::arg("amplitudes"), py::arg("params"), py::arg("t"));
  m.def("embed", [](const std::vector<cplx>& amps) {
    const auto s = embed(coefficients_from(amps));
    return std::vector<cplx>(s.amplitudes().begin(), s.amplitudes().end());
  }, py::arg("amplitudes"), "16 four-qubit amplitudes, index 8A + 4B + 2a + b");

  m.def("wedge_entanglement", [](const std::vector<cplx>& amps, const std::string& part) {
    return wedge_entanglement(embed(coefficients_from(amps)), Bipartition::parse(part));
  }, py::arg("amplitudes"), py::arg("partition"));
  m.def("invariant_E", [](const std::vector<cplx>& amps) { return invariant_E(embed(coefficients_from(amps))); },
        py::arg("amplitudes"));
  m.def("geninv", [](const std::vector<cplx>& amps) { return geninv_closed_form(coefficients_from(amps)); },
        py::arg("amplitudes"));
  m.def("concurrences", [](const std::vector<cplx>& amps) {
    return concurrence_dict(pairwise_concurrences(embed(coefficients_from(amps))));
  }, py::arg("amplitudes"));

  m.def("drift", [](const std::vector<cplx>& amps, const ModelParams& p, const std::vector<double>& times,
                    const std::string& quantity) {
    const auto r = drift_check(coefficients_from(amps), p, times, parse_quantity(quantity));
    return py::make_tuple(r.initial_value, r.max_abs_drift, r.per_time_values);
  }, py::arg("amplitudes"), py::arg("params"), py::arg("times"), py::arg("quantity") = "invariant_E",
     "(initial_value, max_abs_drift, values) of invariant_E, geninv, eberly_psi or eberly_phi");

  m.def("sudden_death_onset", &sudden_death_onset, py::arg("alpha"), py::arg("rabi"));
  m.def("jc_to_dissipative_time", &jc_to_dissipative_time, py::arg("t"), py::arg("rabi"), py::arg("gamma") = 1.0);
  m.def("death_revival_scan", [](const std::vector<cplx>& amps, const ModelParams& p, double t_max, int n_samples,
                                 double gamma) {
    const auto r = death_revival_scan(coefficients_from(amps), p, t_max, n_samples, gamma);
    py::dict d;
    d["death_times"] = r.death_times;
    d["revival_times"] = r.revival_times;
    d["death_times_dissipative"] = r.death_times_dissipative;
    return d;
  }, py::arg("amplitudes"), py::arg("params"), py::arg("t_max"), py::arg("n_samples") = 2001,
     py::arg("gamma") = 1.0);
}
