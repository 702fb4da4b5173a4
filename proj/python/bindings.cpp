// Python bindings: the main operations with plain-number signatures. The
// CODATA 2018 constants are baked in as the default; the constants record is
// still exposed for callers that want the raw values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "qentropy/channels.hpp"
#include "qentropy/constants.hpp"
#include "qentropy/entropy.hpp"
#include "qentropy/heatfield.hpp"
#include "qentropy/transfer.hpp"

namespace py = pybind11;

namespace {

const qentropy::PhysicalConstants& codata() {
    static const auto c = qentropy::PhysicalConstants::codata2018();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantized entropy toolkit: conductance quanta, ballistic channels, "
              "variational heat fields, packet transfer and spin relaxation";
    m.attr("__version__") = "0.1.0";

    py::class_<qentropy::PhysicalConstants>(m, "PhysicalConstants")
        .def_static("codata2018", &qentropy::PhysicalConstants::codata2018)
        .def_readonly("h", &qentropy::PhysicalConstants::h)
        .def_readonly("hbar", &qentropy::PhysicalConstants::hbar)
        .def_readonly("e", &qentropy::PhysicalConstants::e)
        .def_readonly("k_B", &qentropy::PhysicalConstants::k_B);

    py::class_<qentropy::TransferLedger>(m, "TransferLedger")
        .def_readonly("emitter_rate", &qentropy::TransferLedger::emitter_rate)
        .def_readonly("absorber_rate", &qentropy::TransferLedger::absorber_rate)
        .def_readonly("emitter_current", &qentropy::TransferLedger::emitter_current)
        .def_readonly("absorber_current", &qentropy::TransferLedger::absorber_current)
        .def_readonly("emitter_production", &qentropy::TransferLedger::emitter_production)
        .def_readonly("absorber_production", &qentropy::TransferLedger::absorber_production)
        .def_readonly("net_rate", &qentropy::TransferLedger::net_rate);

    py::class_<qentropy::SpinRelaxationReport>(m, "SpinRelaxationReport")
        .def_readonly("nu", &qentropy::SpinRelaxationReport::nu)
        .def_readonly("I_S", &qentropy::SpinRelaxationReport::I_S)
        .def_readonly("Sigma", &qentropy::SpinRelaxationReport::Sigma)
        .def_readonly("I_S_spin_form", &qentropy::SpinRelaxationReport::I_S_spin_form)
        .def_readonly("Sigma_spin_form", &qentropy::SpinRelaxationReport::Sigma_spin_form);

    // Conductance quanta and wires.
    m.def("electric_conductance_quantum",
          [] { return qentropy::electric_conductance_quantum(codata()); },
          "G0 = 2 e^2 / h (S)");
    m.def("single_spin_conductance_quantum",
          [] { return qentropy::single_spin_conductance_quantum(codata()); },
          "e^2 / h (S)");
    m.def("entropy_conductance_quantum",
          [] { return qentropy::entropy_conductance_quantum(codata()); },
          "Lambda_s = pi^2 k_B^2 / (3 h) (J/(K^2 s))");
    m.def("thermal_conductance_quantum",
          [](double T) { return qentropy::thermal_conductance_quantum(codata(), T); },
          "Lambda = pi^2 k_B^2 T / (3 h) (W/K)", py::arg("T"));
    m.def("critical_temperature",
          [](double v, double w) { return qentropy::critical_temperature(codata(), v, w); },
          "T_c = pi hbar v / (k_B w) (K)", py::arg("v"), py::arg("w"));
    m.def("lorenz_number", [] { return qentropy::lorenz_number(codata()); },
          "L0 = (pi^2/3)(k_B/e)^2 (W Ohm/K^2)");
    m.def("wiedemann_franz_lambda",
          [](double sigma_el, double T) {
              return qentropy::wiedemann_franz_lambda(codata(), sigma_el, T);
          },
          "lambda = L0 T sigma (W/(m K))", py::arg("sigma_el"), py::arg("T"));
    m.def("subband_energy",
          [](double k, int j, double w, double mass) {
              return qentropy::subband_energy(codata(), k, j, {w, w}, mass);
          },
          "eps(k, j) in a wire of width w (J)", py::arg("k"), py::arg("j"), py::arg("w"),
          py::arg("mass"));
    m.def("channel_count", &qentropy::channel_count, "N = floor(2 w / lambda_F)",
          py::arg("w"), py::arg("lambda_F"));
    m.def("total_current",
          [](int N, double V) { return qentropy::total_current(codata(), N, V); },
          "I = (2 e^2 / h) N V (A)", py::arg("N"), py::arg("V"));
    m.def("conductance_staircase",
          [](double w_min, double w_max, int steps, double lambda_F, bool spin_degenerate) {
              std::vector<std::pair<double, double>> out;
              for (const auto& pt : qentropy::conductance_staircase(
                       codata(), w_min, w_max, steps, lambda_F, spin_degenerate)) {
                  out.emplace_back(pt.w, pt.G);
              }
              return out;
          },
          "list of (width_m, conductance_S) pairs", py::arg("w_min"), py::arg("w_max"),
          py::arg("steps"), py::arg("lambda_F"), py::arg("spin_degenerate") = true);

    // Pendry bounds and packet entropy.
    m.def("pendry_max_heat_rate",
          [](double T) { return qentropy::pendry_max_heat_rate(codata(), T); },
          "pi k_B^2 T^2 / (3 hbar) (W)", py::arg("T"));
    m.def("pendry_max_entropy_rate",
          [](double T) { return qentropy::pendry_max_entropy_rate(codata(), T); },
          "pi k_B^2 T / (3 hbar) (W/K)", py::arg("T"));
    m.def("packet_energy",
          [](double nu) { return qentropy::packet_energy(codata(), {nu}); },
          "h nu (J)", py::arg("nu"));
    m.def("entropy_current_from_packet",
          [](double nu) { return qentropy::entropy_current_from_packet(codata(), {nu}); },
          "I_S = pi^2 k_B nu / 3 (W/K)", py::arg("nu"));
    m.def("entropy_current_from_energy",
          [](double epsilon) {
              return qentropy::entropy_current_from_energy(codata(), epsilon);
          },
          "I_S = (Lambda_s / k_B) epsilon (W/K)", py::arg("epsilon"));
    m.def("packet_entropy_production",
          [](double nu, double T) {
              return qentropy::packet_entropy_production(codata(), {nu}, T);
          },
          "Sigma = (1/T)(pi^2/3) h nu^2 (W/K)", py::arg("nu"), py::arg("T"));

    // Transfer ledger and spins.
    m.def("single_packet_transfer",
          [](double T1, double T2, double nu) {
              return qentropy::single_packet_transfer(codata(), {"emitter", T1},
                                                      {"absorber", T2}, {nu});
          },
          "ledger for one packet h nu going from T1 to T2", py::arg("T1"), py::arg("T2"),
          py::arg("nu"));
    m.def("second_law_check", &qentropy::second_law_check, "net_rate >= 0",
          py::arg("ledger"));
    m.def("reciprocal_exchange",
          [](double T_hot, double T_cold, double nu_hot_to_cold, double nu_cold_to_hot) {
              return qentropy::reciprocal_exchange(codata(), {"hot", T_hot},
                                                   {"cold", T_cold}, nu_hot_to_cold,
                                                   nu_cold_to_hot);
          },
          "net rate of a reciprocal packet exchange (W/K)", py::arg("T_hot"),
          py::arg("T_cold"), py::arg("nu_hot_to_cold"), py::arg("nu_cold_to_hot"));
    m.def("larmor_frequency",
          [](double gamma, double B0) {
              return qentropy::larmor_frequency({gamma, B0, 1.0});
          },
          "nu = |gamma| B0 / (2 pi) (Hz)", py::arg("gamma"), py::arg("B0"));
    m.def("angular_larmor_frequency",
          [](double gamma, double B0) {
              return qentropy::angular_larmor_frequency({gamma, B0, 1.0});
          },
          "omega = |gamma| B0 (rad/s)", py::arg("gamma"), py::arg("B0"));
    m.def("zeeman_splitting",
          [](double gamma, double B0) {
              return qentropy::zeeman_splitting(codata(), {gamma, B0, 1.0});
          },
          "|gamma| hbar B0 (J)", py::arg("gamma"), py::arg("B0"));
    m.def("spin_relaxation_report",
          [](double gamma, double B0, double T) {
              return qentropy::spin_relaxation_report(codata(), {gamma, B0, T});
          },
          "both analytic routes to I_S and Sigma", py::arg("gamma"), py::arg("B0"),
          py::arg("T"));

    // Heat field utilities.
    m.def("diffusivity",
          [](double lambda_th, double rho, double c_v) {
              return qentropy::diffusivity({lambda_th, rho, c_v});
          },
          "D = lambda / (rho c_v) (m^2/s)", py::arg("lambda_th"), py::arg("rho"),
          py::arg("c_v"));
    m.def("mode_wavenumber", &qentropy::mode_wavenumber, "k = 2 pi n / L (1/m)",
          py::arg("domain_length"), py::arg("n"));
    m.def("equalization_action",
          [](double T0, const std::vector<double>& times, const std::vector<double>& values,
             double t) {
              return qentropy::equalization_action({T0, times, values}, t);
          },
          "integral of (T - T0)^2 / 2 up to t (K^2 s)", py::arg("T0"), py::arg("times"),
          py::arg("values"), py::arg("t"));
    m.def("transferred_energy",
          [](double action_value) {
              return qentropy::transferred_energy(codata(), action_value);
          },
          "Lambda_s times the equalization action (J)",
          py::arg("equalization_action_value"));
    m.def("transferred_entropy",
          [](double phi, double phi0) {
              return qentropy::transferred_entropy(codata(), phi, phi0);
          },
          "Lambda_s (phi - phi0)", py::arg("phi"), py::arg("phi0"));
}
