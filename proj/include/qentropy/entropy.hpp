#pragma once

// Entropy calculus of single energy quanta and continuum heat transfer.
//
//   Pendry bounds        dQ/dt <= pi k_B^2 T^2 / (3 hbar),  I_S <= pi k_B^2 T / (3 hbar)
//   Wiedemann-Franz      lambda = (pi^2/3)(k_B/e)^2 T sigma
//   entropy current      I_S = pi^2 k_B nu / 3 = (Lambda_s / k_B) * h nu
//   entropy production   Sigma = (1/T)(pi^2/3) h nu^2
//   balance              dS/dt = -I_S + Sigma
//
// The Pendry entropy bound is exactly twice the thermal conductance quantum:
// pi k_B^2 T / (3 hbar) = 2 pi^2 k_B^2 T / (3 h) since h = 2 pi hbar.

#include "qentropy/constants.hpp"

namespace qentropy {

// A single energy quantum of frequency nu; its energy is h*nu.
struct QuantumPacket {
    double nu;  // frequency (Hz), > 0
};

// dS/dt = -I_S + Sigma, stored so the identity holds exactly as written.
struct EntropyBalance {
    double dS_dt;  // entropy rate (W/K)
    double I_S;    // entropy current (W/K)
    double Sigma;  // entropy production (W/K)
};

double packet_energy(const PhysicalConstants& c, const QuantumPacket& packet);

// Fourier's law: J_q = -lambda * grad_T. lambda_th > 0.
double heat_flux(double lambda_th, double grad_T);

// J_s = J_q / T. T > 0.
double entropy_current_density(double J_q, double T);

// Maximal single-channel cooling rate, pi k_B^2 T^2 / (3 hbar). T >= 0.
double pendry_max_heat_rate(const PhysicalConstants& c, double T);

// Maximal single-channel entropy current, pi k_B^2 T / (3 hbar). T >= 0.
double pendry_max_entropy_rate(const PhysicalConstants& c, double T);

// Lorenz number (pi^2/3)(k_B/e)^2 and the Wiedemann-Franz conductivity
// lambda = L0 * T * sigma_el. sigma_el >= 0, T >= 0.
double lorenz_number(const PhysicalConstants& c);
double wiedemann_franz_lambda(const PhysicalConstants& c, double sigma_el, double T);

// I_S for a quantum of energy epsilon: (Lambda_s / k_B) * epsilon. epsilon > 0.
double entropy_current_from_energy(const PhysicalConstants& c, double epsilon);

// I_S = pi^2 k_B nu / 3 for a packet; temperature independent.
double entropy_current_from_packet(const PhysicalConstants& c, const QuantumPacket& packet);

// sigma_s = lambda (grad_T / T)^2 >= 0. T > 0, lambda_th > 0.
double entropy_production_density(double grad_T, double T, double lambda_th);

// Sigma = (1/T)(pi^2/3) h nu^2 for absorbing/forming one packet at T. T > 0.
double packet_entropy_production(const PhysicalConstants& c, const QuantumPacket& packet,
                                 double T);

// S_tr = Lambda_s (phi - phi0); antisymmetric in its arguments.
double transferred_entropy(const PhysicalConstants& c, double phi, double phi0);

// Assemble the balance triple; dS_dt is derived from the two inputs.
EntropyBalance entropy_balance(double I_S, double Sigma);

}  // namespace qentropy
