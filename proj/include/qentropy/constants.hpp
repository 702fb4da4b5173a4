#pragma once

// Fundamental constants and the three conductance quanta built from them.
//
// Values are the CODATA 2018 exact defined constants (SI redefinition):
//   h   = 6.62607015e-34  J s      (exact)
//   e   = 1.602176634e-19 C       (exact)
//   k_B = 1.380649e-23    J/K     (exact)
// so every derived quantum below is reproducible bit-for-bit.
//
// Derived quanta:
//   electric conductance quantum   G0       = 2 e^2 / h           (Landauer)
//   thermal conductance quantum    Lambda   = pi^2 k_B^2 T / (3h) (Rego-Kirczenow)
//   quantized entropy conductance  Lambda_s = pi^2 k_B^2 / (3h)   = Lambda / T

namespace qentropy {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double pi_sq = pi * pi;

// Immutable record of the fundamental constants. Kept as a value type rather
// than globals so tests can inject perturbed constants for sensitivity checks.
struct PhysicalConstants {
    double k_B;   // Boltzmann constant (J/K)
    double h;     // Planck constant (J s)
    double hbar;  // reduced Planck constant h / (2 pi) (J s)
    double e;     // elementary charge (C)

    static PhysicalConstants codata2018();
};

// G0 = 2 e^2 / h. The factor 2 is the spin degeneracy of one ballistic
// channel; the single-spin quantum e^2/h is exposed separately because the
// phonon analogy drops the degeneracy.
double electric_conductance_quantum(const PhysicalConstants& c);
double single_spin_conductance_quantum(const PhysicalConstants& c);

// Lambda(T) = pi^2 k_B^2 T / (3h) = Lambda_s * T. Linear in T; T >= 0.
double thermal_conductance_quantum(const PhysicalConstants& c, double T);

// Lambda_s = pi^2 k_B^2 / (3h), temperature independent.
double entropy_conductance_quantum(const PhysicalConstants& c);

// T_c = pi hbar v / (k_B w): temperature below which a wire of width w with
// sound speed v carries only the four populated acoustic modes. v, w > 0.
double critical_temperature(const PhysicalConstants& c, double v, double w);

}  // namespace qentropy
