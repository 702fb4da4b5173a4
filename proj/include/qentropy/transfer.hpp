#pragma once

// Two-subdomain single-quantum transfer bookkeeping and the spin-lattice
// relaxation application.
//
// One quantum h*nu leaving subdomain 1 (at T1) for subdomain 2 (at T2):
//   dS1/dt = -pi^2 k_B nu / 3 - (1/T1)(pi^2/3) h nu^2   (emitter)
//   dS2/dt = +pi^2 k_B nu / 3 + (1/T2)(pi^2/3) h nu^2   (absorber)
//   dS/dt  = (1/T2 - 1/T1)(pi^2/3) h nu^2               (net, >= 0 iff T1 >= T2)
// The emitter's production term carries a negative sign (the formation of the
// quantum); the current terms cancel in the net rate.
//
// Spin-lattice relaxation exchanges quanta at the Larmor frequency
// nu = gamma B0 / (2 pi), with Zeeman splitting gamma hbar B0 = h nu, giving
//   I_S = pi^2 k_B nu / 3 = pi k_B gamma B0 / 6
//   Sigma = (1/T)(pi^2/3) h nu^2 = (1/T)(1/12) h gamma^2 B0^2

#include <string>

#include "qentropy/constants.hpp"
#include "qentropy/entropy.hpp"

namespace qentropy {

struct Subdomain {
    std::string label;
    double T;  // temperature (K), > 0
};

struct TransferLedger {
    double emitter_rate;        // dS1/dt (W/K)
    double absorber_rate;       // dS2/dt (W/K)
    double emitter_current;     // -pi^2 k_B nu / 3 (W/K)
    double absorber_current;    // +pi^2 k_B nu / 3 (W/K)
    double emitter_production;  // -(1/T1)(pi^2/3) h nu^2 (W/K)
    double absorber_production; // +(1/T2)(pi^2/3) h nu^2 (W/K)
    double net_rate;            // (1/T2 - 1/T1)(pi^2/3) h nu^2 (W/K)
};

struct SpinSystem {
    double gamma;  // gyromagnetic ratio (rad/(s T)), != 0; magnitude is used
    double B0;     // magnetic flux density (T), >= 0
    double T;      // temperature (K), > 0
};

// The report carries both analytic routes to each rate so their agreement is
// checkable: I_S and Sigma come from the Larmor-frequency (packet) forms, the
// *_spin_form fields from the gamma*B0 forms.
struct SpinRelaxationReport {
    double nu;                // Larmor frequency (Hz)
    double I_S;               // pi^2 k_B nu / 3 (W/K)
    double Sigma;             // (1/T)(pi^2/3) h nu^2 (W/K)
    double I_S_spin_form;     // pi k_B gamma B0 / 6 (W/K)
    double Sigma_spin_form;   // (1/T)(1/12) h gamma^2 B0^2 (W/K)
};

// Ledger for one packet leaving `emitter` for `absorber`. No temperature
// ordering is required: the op reports, second_law_check judges.
TransferLedger single_packet_transfer(const PhysicalConstants& c, const Subdomain& emitter,
                                      const Subdomain& absorber, const QuantumPacket& packet);

// True iff net_rate >= 0 (equality allowed: equal temperatures).
bool second_law_check(const TransferLedger& ledger);

// Net rate of a reciprocal hot->cold / cold->hot packet exchange, in the
// factored form (pi^2/3) h (1/T_c - 1/T_h)(nu_h^2 - nu_c^2). With T_h > T_c
// it is non-negative iff nu_h >= nu_c. Equal temperatures are rejected.
double reciprocal_exchange(const PhysicalConstants& c, const Subdomain& hot,
                           const Subdomain& cold, double nu_hot_to_cold,
                           double nu_cold_to_hot);

// nu = |gamma| B0 / (2 pi) and the angular version omega = |gamma| B0.
double larmor_frequency(const SpinSystem& spin);
double angular_larmor_frequency(const SpinSystem& spin);

// Zeeman level splitting |gamma| hbar B0 = h nu.
double zeeman_splitting(const PhysicalConstants& c, const SpinSystem& spin);

// Entropy current and production of the relaxation quanta, each computed by
// both analytic routes. I_S is bit-identical with
// entropy_current_from_packet(larmor_frequency(spin)).
SpinRelaxationReport spin_relaxation_report(const PhysicalConstants& c,
                                            const SpinSystem& spin);

}  // namespace qentropy
