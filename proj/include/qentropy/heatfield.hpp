#pragma once

// Fourier heat conduction and its variational potential formulation on a 1D
// periodic domain, solved per spectral mode.
//
//   Fourier equation    dT/dt = D lap(T),          D = lambda / (rho c_v)
//   potential ansatz    T - T0 = -d(phi)/dt - D lap(phi)
//   field equation      0 = -d2(phi)/dt2 + D^2 lap(lap(phi))
//   Lagrangian density  L = 1/2 (d phi/dt)^2 + 1/2 D^2 (lap phi)^2
//   equalization action S~ = integral of 1/2 (T - T0)^2 dt
//
// In the periodic basis k = 2 pi n / L (n >= 1; the k = 0 mean is carried by
// the reference temperature) the field equation decouples per mode into
// phi_k'' = (D k^2)^2 phi_k with solutions a e^{-D k^2 t} + b e^{+D k^2 t}.
// The decaying branch reproduces the Fourier solution; the growing branch is
// the gauge/null content that maps to zero temperature.
//
// Spatial integrals of squared real mode sums use the (L/2) sum_k rule; each
// mode is a cosine when a field is evaluated at a point.

#include <utility>
#include <vector>

#include "qentropy/constants.hpp"

namespace qentropy {

struct MaterialParams {
    double lambda_th;  // thermal conductivity (W/(m K)), > 0
    double rho;        // density (kg/m^3), > 0
    double c_v;        // specific heat (J/(kg K)), > 0
};

struct PotentialMode {
    double k;  // wavenumber 2 pi n / L (1/m), n >= 1
    double a;  // decaying branch amplitude
    double b;  // growing branch amplitude (gauge content)
};

struct SpectralPotentialField {
    double domain_length;  // L (m), > 0
    double reference_T0;   // K
    std::vector<PotentialMode> modes;  // distinct wavenumbers
};

struct TemperatureMode {
    double k;          // wavenumber (1/m)
    double amplitude;  // K
};

struct TemperatureField {
    double domain_length;
    double reference_T0;
    std::vector<TemperatureMode> modes;
};

// One exactly-solved trajectory: uniform time samples of per-mode values and
// their analytic time derivatives. Storing analytic rates (instead of finite
// differences) keeps the discrete action exactly quadratic under linear
// combination.
struct PotentialTrajectory {
    double domain_length;
    double reference_T0;
    std::vector<double> wavenumbers;
    std::vector<double> times;                // uniform grid
    std::vector<std::vector<double>> values;  // [time][mode]
    std::vector<std::vector<double>> rates;   // [time][mode]
};

// Scalar temperature time series (one spatial point or the spatial mean).
struct TemperatureHistory {
    double reference_T0;
    std::vector<double> times;
    std::vector<double> values;  // T(t) (K)
};

// Growing-branch guard: D k^2 t beyond this throws std::range_error.
inline constexpr double exponent_cap = 700.0;

// D = lambda / (rho c_v); all parameters must be positive.
double diffusivity(const MaterialParams& mat);

// k = 2 pi n / L for integer n >= 1.
double mode_wavenumber(double domain_length, int n);

// Point evaluation T0 + sum_k amp_k cos(k x).
double temperature_at(const TemperatureField& field, double x);

// Exact spectral solution of the Fourier equation: each amplitude decays by
// exp(-D k^2 t). t >= 0.
TemperatureField evolve_fourier(const TemperatureField& field, double D, double t);

// Exact mode solution of the potential field equation:
// (a, b) -> (a e^{-D k^2 t}, b e^{+D k^2 t}). t >= 0; growth is guarded by
// the exponent cap.
SpectralPotentialField evolve_potential(const SpectralPotentialField& phi, double D, double t);

// The model rates d(phi_k)/dt = D k^2 (b - a) of a branch-resolved field.
std::vector<double> potential_rates(const SpectralPotentialField& phi, double D);

// Literal reconstruction -phi_rate + D k^2 phi per mode, for caller-supplied
// rates; phi_rate must align with phi.modes.
TemperatureField temperature_from_potential(const SpectralPotentialField& phi,
                                            const std::vector<double>& phi_rate, double D);

// Branch-resolved reconstruction. Substituting the model rates makes the
// growing branch cancel algebraically, leaving 2 D k^2 a; evaluating the
// reduced form keeps that cancellation exact in floating point, so gauge
// content never perturbs the temperature.
TemperatureField temperature_from_potential(const SpectralPotentialField& phi, double D);

// Exact trajectory of phi from state phi0 at time t1 to t2, sampled on a
// uniform grid of `samples` points, with analytic rates.
PotentialTrajectory solve_potential_trajectory(const SpectralPotentialField& phi0, double D,
                                               double t1, double t2, int samples);

// Smooth admissible perturbation: per-mode amplitude times the C-infinity
// bump exp(4 - 1/(s(1-s))), s = (t - t1)/(t2 - t1); vanishes with all
// derivatives at both endpoints.
PotentialTrajectory bump_perturbation(double domain_length,
                                      const std::vector<double>& wavenumbers,
                                      const std::vector<double>& amplitudes,
                                      double t1, double t2, int samples);

// base + eps * direction on matching grids and mode sets.
PotentialTrajectory trajectory_linear_combination(const PotentialTrajectory& base, double eps,
                                                  const PotentialTrajectory& direction);

// Discrete L2 norm of phi'' - (D k^2)^2 phi over interior times (central
// differences); decreases as O(dt^2) on exact trajectories.
double euler_lagrange_residual(const PotentialTrajectory& traj, double D);

// Trapezoid integral over [t1, t2] of (L/2) sum_k [ 1/2 rate^2
// + 1/2 (D k^2)^2 value^2 ]; the sampled window must cover [t1, t2].
double action(const PotentialTrajectory& traj, double D, double t1, double t2);

// action(optimal + eps * eta) for each eps. eta must vanish at both endpoints;
// on a solution trajectory the result is a parabola with minimum at eps = 0.
std::vector<std::pair<double, double>> perturbation_action_scan(
    const PotentialTrajectory& optimal, const PotentialTrajectory& eta,
    const std::vector<double>& epsilons, double D);

// S~(t) = integral_0^t 1/2 (T - T0)^2 dt', trapezoid rule; samples must
// cover [0, t].
double equalization_action(const TemperatureHistory& history, double t);

// Lambda_s times the equalization action: the energy reading of the minimal
// equalization process. value >= 0.
double transferred_energy(const PhysicalConstants& c, double equalization_action_value);

}  // namespace qentropy
