#include "qentropy/constants.hpp"

#include <stdexcept>

namespace qentropy {

PhysicalConstants PhysicalConstants::codata2018() {
    PhysicalConstants c;
    c.k_B = 1.380649e-23;
    c.h = 6.62607015e-34;
    c.hbar = c.h / two_pi;  // fl(2 pi) = 2 * fl(pi) exactly, so hbar * 2pi == h
    c.e = 1.602176634e-19;
    return c;
}

double electric_conductance_quantum(const PhysicalConstants& c) {
    // Grouped as 2 * (e*e) so the ratio to the single-spin quantum is exactly
    // 2: doubling commutes with rounding.
    return (2.0 * (c.e * c.e)) / c.h;
}

double single_spin_conductance_quantum(const PhysicalConstants& c) {
    return (c.e * c.e) / c.h;
}

double entropy_conductance_quantum(const PhysicalConstants& c) {
    return (pi_sq * (c.k_B * c.k_B)) / (3.0 * c.h);
}

double thermal_conductance_quantum(const PhysicalConstants& c, double T) {
    if (T < 0.0) {
        throw std::invalid_argument("thermal_conductance_quantum: T must be >= 0");
    }
    // Lambda(T) = Lambda_s * T keeps the defining ratio Lambda(T)/T free of
    // any re-derivation drift.
    return entropy_conductance_quantum(c) * T;
}

double critical_temperature(const PhysicalConstants& c, double v, double w) {
    if (!(v > 0.0) || !(w > 0.0)) {
        throw std::invalid_argument("critical_temperature: v and w must be > 0");
    }
    return (pi * c.hbar * v) / (c.k_B * w);
}

}  // namespace qentropy
