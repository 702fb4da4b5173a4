#include "qentropy/entropy.hpp"

#include <stdexcept>

namespace qentropy {

double packet_energy(const PhysicalConstants& c, const QuantumPacket& packet) {
    if (!(packet.nu > 0.0)) {
        throw std::invalid_argument("packet_energy: packet frequency must be > 0");
    }
    return c.h * packet.nu;
}

double heat_flux(double lambda_th, double grad_T) {
    if (!(lambda_th > 0.0)) {
        throw std::invalid_argument("heat_flux: lambda_th must be > 0");
    }
    return -lambda_th * grad_T;
}

double entropy_current_density(double J_q, double T) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("entropy_current_density: T must be > 0");
    }
    return J_q / T;
}

double pendry_max_heat_rate(const PhysicalConstants& c, double T) {
    if (T < 0.0) {
        throw std::invalid_argument("pendry_max_heat_rate: T must be >= 0");
    }
    return ((pi * (c.k_B * c.k_B)) / (3.0 * c.hbar)) * (T * T);
}

double pendry_max_entropy_rate(const PhysicalConstants& c, double T) {
    if (T < 0.0) {
        throw std::invalid_argument("pendry_max_entropy_rate: T must be >= 0");
    }
    return ((pi * (c.k_B * c.k_B)) / (3.0 * c.hbar)) * T;
}

double lorenz_number(const PhysicalConstants& c) {
    const double kbe = c.k_B / c.e;
    return (pi_sq / 3.0) * (kbe * kbe);
}

double wiedemann_franz_lambda(const PhysicalConstants& c, double sigma_el, double T) {
    if (sigma_el < 0.0 || T < 0.0) {
        throw std::invalid_argument("wiedemann_franz_lambda: sigma_el and T must be >= 0");
    }
    return lorenz_number(c) * T * sigma_el;
}

double entropy_current_from_energy(const PhysicalConstants& c, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("entropy_current_from_energy: epsilon must be > 0");
    }
    return (entropy_conductance_quantum(c) / c.k_B) * epsilon;
}

double entropy_current_from_packet(const PhysicalConstants& c, const QuantumPacket& packet) {
    if (!(packet.nu > 0.0)) {
        throw std::invalid_argument("entropy_current_from_packet: packet frequency must be > 0");
    }
    return ((pi_sq / 3.0) * c.k_B) * packet.nu;
}

double entropy_production_density(double grad_T, double T, double lambda_th) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("entropy_production_density: T must be > 0");
    }
    if (!(lambda_th > 0.0)) {
        throw std::invalid_argument("entropy_production_density: lambda_th must be > 0");
    }
    const double g = grad_T / T;
    return lambda_th * (g * g);
}

double packet_entropy_production(const PhysicalConstants& c, const QuantumPacket& packet,
                                 double T) {
    if (!(packet.nu > 0.0)) {
        throw std::invalid_argument("packet_entropy_production: packet frequency must be > 0");
    }
    if (!(T > 0.0)) {
        throw std::invalid_argument("packet_entropy_production: T must be > 0");
    }
    return (((pi_sq / 3.0) * c.h) * (packet.nu * packet.nu)) / T;
}

double transferred_entropy(const PhysicalConstants& c, double phi, double phi0) {
    // phi0 - phi is the exact negation of phi - phi0, so swapping the
    // arguments flips the sign bit-exactly.
    return entropy_conductance_quantum(c) * (phi - phi0);
}

EntropyBalance entropy_balance(double I_S, double Sigma) {
    EntropyBalance b;
    b.I_S = I_S;
    b.Sigma = Sigma;
    b.dS_dt = -I_S + Sigma;
    return b;
}

}  // namespace qentropy
