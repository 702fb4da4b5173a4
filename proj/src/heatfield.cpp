#include "qentropy/heatfield.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qentropy {

namespace {

void validate_wavenumbers(double domain_length, const std::vector<double>& ks,
                          const char* who) {
    if (!(domain_length > 0.0)) {
        throw std::invalid_argument(std::string(who) + ": domain_length must be > 0");
    }
    std::vector<long long> seen;
    for (double k : ks) {
        if (!(k > 0.0)) {
            throw std::invalid_argument(std::string(who) + ": wavenumbers must be > 0");
        }
        const double n = k * domain_length / two_pi;
        const double rounded = std::nearbyint(n);
        if (rounded < 1.0 || std::fabs(n - rounded) > 1e-6 * rounded) {
            throw std::invalid_argument(std::string(who) +
                                        ": wavenumber is not 2 pi n / L with integer n >= 1");
        }
        const long long idx = static_cast<long long>(rounded);
        for (long long s : seen) {
            if (s == idx) {
                throw std::invalid_argument(std::string(who) + ": duplicate wavenumber");
            }
        }
        seen.push_back(idx);
    }
}

std::vector<double> field_wavenumbers(const SpectralPotentialField& phi) {
    std::vector<double> ks;
    ks.reserve(phi.modes.size());
    for (const auto& m : phi.modes) ks.push_back(m.k);
    return ks;
}

std::vector<double> field_wavenumbers(const TemperatureField& field) {
    std::vector<double> ks;
    ks.reserve(field.modes.size());
    for (const auto& m : field.modes) ks.push_back(m.k);
    return ks;
}

void check_grid_compatible(const PotentialTrajectory& lhs, const PotentialTrajectory& rhs,
                           const char* who) {
    if (lhs.wavenumbers.size() != rhs.wavenumbers.size() ||
        lhs.times.size() != rhs.times.size()) {
        throw std::invalid_argument(std::string(who) + ": trajectory shapes differ");
    }
    for (std::size_t m = 0; m < lhs.wavenumbers.size(); ++m) {
        if (lhs.wavenumbers[m] != rhs.wavenumbers[m]) {
            throw std::invalid_argument(std::string(who) + ": mode sets differ");
        }
    }
    const double span = lhs.times.empty() ? 0.0 : lhs.times.back() - lhs.times.front();
    for (std::size_t i = 0; i < lhs.times.size(); ++i) {
        if (std::fabs(lhs.times[i] - rhs.times[i]) > 1e-9 * (std::fabs(span) + 1.0)) {
            throw std::invalid_argument(std::string(who) + ": time grids differ");
        }
    }
}

double uniform_step(const std::vector<double>& times, const char* who) {
    const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (std::fabs(times[i + 1] - times[i] - dt) > 1e-9 * std::fabs(dt)) {
            throw std::invalid_argument(std::string(who) + ": time grid is not uniform");
        }
    }
    return dt;
}

// Lagrangian density integrated over space at one sample:
// (L/2) sum_k [ 1/2 rate^2 + 1/2 (D k^2)^2 value^2 ].
double lagrangian_at(const PotentialTrajectory& traj, const std::vector<double>& qsq,
                     std::size_t i) {
    double sum = 0.0;
    for (std::size_t m = 0; m < traj.wavenumbers.size(); ++m) {
        const double v = traj.values[i][m];
        const double r = traj.rates[i][m];
        sum += 0.5 * r * r + 0.5 * qsq[m] * v * v;
    }
    return 0.5 * traj.domain_length * sum;
}

}  // namespace

double diffusivity(const MaterialParams& mat) {
    if (!(mat.lambda_th > 0.0) || !(mat.rho > 0.0) || !(mat.c_v > 0.0)) {
        throw std::invalid_argument("diffusivity: material parameters must be > 0");
    }
    return mat.lambda_th / (mat.rho * mat.c_v);
}

double mode_wavenumber(double domain_length, int n) {
    if (!(domain_length > 0.0)) {
        throw std::invalid_argument("mode_wavenumber: domain_length must be > 0");
    }
    if (n < 1) {
        throw std::invalid_argument("mode_wavenumber: n must be >= 1");
    }
    return two_pi * static_cast<double>(n) / domain_length;
}

double temperature_at(const TemperatureField& field, double x) {
    double dev = 0.0;
    for (const auto& m : field.modes) {
        dev += m.amplitude * std::cos(m.k * x);
    }
    return field.reference_T0 + dev;
}

TemperatureField evolve_fourier(const TemperatureField& field, double D, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("evolve_fourier: t must be >= 0");
    }
    validate_wavenumbers(field.domain_length, field_wavenumbers(field), "evolve_fourier");
    TemperatureField out = field;
    for (auto& m : out.modes) {
        m.amplitude *= std::exp(-D * (m.k * m.k) * t);
    }
    return out;
}

SpectralPotentialField evolve_potential(const SpectralPotentialField& phi, double D, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("evolve_potential: t must be >= 0");
    }
    validate_wavenumbers(phi.domain_length, field_wavenumbers(phi), "evolve_potential");
    SpectralPotentialField out = phi;
    for (auto& m : out.modes) {
        const double x = D * (m.k * m.k) * t;
        if (m.b != 0.0 && x > exponent_cap) {
            throw std::range_error("evolve_potential: growing branch exceeds the exponent cap");
        }
        m.a *= std::exp(-x);
        // Guard the exact zero: 0 * exp(x) would be NaN once exp overflows.
        if (m.b != 0.0) m.b *= std::exp(x);
    }
    return out;
}

std::vector<double> potential_rates(const SpectralPotentialField& phi, double D) {
    std::vector<double> rates;
    rates.reserve(phi.modes.size());
    for (const auto& m : phi.modes) {
        rates.push_back(D * (m.k * m.k) * (m.b - m.a));
    }
    return rates;
}

TemperatureField temperature_from_potential(const SpectralPotentialField& phi,
                                            const std::vector<double>& phi_rate, double D) {
    if (phi_rate.size() != phi.modes.size()) {
        throw std::invalid_argument("temperature_from_potential: rate/mode set mismatch");
    }
    TemperatureField out;
    out.domain_length = phi.domain_length;
    out.reference_T0 = phi.reference_T0;
    out.modes.reserve(phi.modes.size());
    for (std::size_t i = 0; i < phi.modes.size(); ++i) {
        const auto& m = phi.modes[i];
        const double amp = -phi_rate[i] + D * (m.k * m.k) * (m.a + m.b);
        out.modes.push_back({m.k, amp});
    }
    return out;
}

TemperatureField temperature_from_potential(const SpectralPotentialField& phi, double D) {
    TemperatureField out;
    out.domain_length = phi.domain_length;
    out.reference_T0 = phi.reference_T0;
    out.modes.reserve(phi.modes.size());
    for (const auto& m : phi.modes) {
        // -phi_dot + D k^2 phi with phi_dot = D k^2 (b - a): the b terms
        // cancel identically, so only 2 D k^2 a survives.
        out.modes.push_back({m.k, 2.0 * (D * (m.k * m.k) * m.a)});
    }
    return out;
}

PotentialTrajectory solve_potential_trajectory(const SpectralPotentialField& phi0, double D,
                                               double t1, double t2, int samples) {
    if (!(t2 > t1)) {
        throw std::invalid_argument("solve_potential_trajectory: need t2 > t1");
    }
    if (samples < 2) {
        throw std::invalid_argument("solve_potential_trajectory: samples must be >= 2");
    }
    validate_wavenumbers(phi0.domain_length, field_wavenumbers(phi0),
                         "solve_potential_trajectory");
    PotentialTrajectory traj;
    traj.domain_length = phi0.domain_length;
    traj.reference_T0 = phi0.reference_T0;
    traj.wavenumbers = field_wavenumbers(phi0);
    const double dt = (t2 - t1) / static_cast<double>(samples - 1);
    traj.times.resize(static_cast<std::size_t>(samples));
    traj.values.assign(static_cast<std::size_t>(samples),
                       std::vector<double>(phi0.modes.size(), 0.0));
    traj.rates = traj.values;
    for (int i = 0; i < samples; ++i) {
        const double t = (i == samples - 1) ? t2 : t1 + dt * static_cast<double>(i);
        traj.times[static_cast<std::size_t>(i)] = t;
        for (std::size_t m = 0; m < phi0.modes.size(); ++m) {
            const auto& mode = phi0.modes[m];
            const double q = D * (mode.k * mode.k);
            const double x = q * (t - t1);
            if (mode.b != 0.0 && x > exponent_cap) {
                throw std::range_error(
                    "solve_potential_trajectory: growing branch exceeds the exponent cap");
            }
            const double down = mode.a * std::exp(-x);
            const double up = (mode.b == 0.0) ? 0.0 : mode.b * std::exp(x);
            traj.values[static_cast<std::size_t>(i)][m] = down + up;
            traj.rates[static_cast<std::size_t>(i)][m] = q * (up - down);
        }
    }
    return traj;
}

PotentialTrajectory bump_perturbation(double domain_length,
                                      const std::vector<double>& wavenumbers,
                                      const std::vector<double>& amplitudes,
                                      double t1, double t2, int samples) {
    if (!(t2 > t1)) {
        throw std::invalid_argument("bump_perturbation: need t2 > t1");
    }
    if (samples < 2) {
        throw std::invalid_argument("bump_perturbation: samples must be >= 2");
    }
    if (wavenumbers.size() != amplitudes.size()) {
        throw std::invalid_argument("bump_perturbation: amplitude/mode set mismatch");
    }
    validate_wavenumbers(domain_length, wavenumbers, "bump_perturbation");
    PotentialTrajectory traj;
    traj.domain_length = domain_length;
    traj.reference_T0 = 0.0;
    traj.wavenumbers = wavenumbers;
    const double span = t2 - t1;
    const double dt = span / static_cast<double>(samples - 1);
    traj.times.resize(static_cast<std::size_t>(samples));
    traj.values.assign(static_cast<std::size_t>(samples),
                       std::vector<double>(wavenumbers.size(), 0.0));
    traj.rates = traj.values;
    for (int i = 0; i < samples; ++i) {
        const double t = (i == samples - 1) ? t2 : t1 + dt * static_cast<double>(i);
        traj.times[static_cast<std::size_t>(i)] = t;
        const double s = (t - t1) / span;
        double bump = 0.0;
        double bump_rate = 0.0;
        if (s > 0.0 && s < 1.0) {
            const double g = s * (1.0 - s);
            bump = std::exp(4.0 - 1.0 / g);
            bump_rate = bump * (1.0 - 2.0 * s) / (g * g) / span;
        }
        for (std::size_t m = 0; m < wavenumbers.size(); ++m) {
            traj.values[static_cast<std::size_t>(i)][m] = amplitudes[m] * bump;
            traj.rates[static_cast<std::size_t>(i)][m] = amplitudes[m] * bump_rate;
        }
    }
    return traj;
}

PotentialTrajectory trajectory_linear_combination(const PotentialTrajectory& base, double eps,
                                                  const PotentialTrajectory& direction) {
    check_grid_compatible(base, direction, "trajectory_linear_combination");
    PotentialTrajectory out = base;
    for (std::size_t i = 0; i < out.times.size(); ++i) {
        for (std::size_t m = 0; m < out.wavenumbers.size(); ++m) {
            out.values[i][m] += eps * direction.values[i][m];
            out.rates[i][m] += eps * direction.rates[i][m];
        }
    }
    return out;
}

double euler_lagrange_residual(const PotentialTrajectory& traj, double D) {
    if (traj.times.size() < 3) {
        throw std::invalid_argument("euler_lagrange_residual: need at least 3 samples");
    }
    const double dt = uniform_step(traj.times, "euler_lagrange_residual");
    double sum = 0.0;
    for (std::size_t m = 0; m < traj.wavenumbers.size(); ++m) {
        const double k = traj.wavenumbers[m];
        const double q = D * (k * k);
        const double qsq = q * q;
        for (std::size_t i = 1; i + 1 < traj.times.size(); ++i) {
            const double second =
                (traj.values[i + 1][m] - 2.0 * traj.values[i][m] + traj.values[i - 1][m]) /
                (dt * dt);
            const double r = second - qsq * traj.values[i][m];
            sum += r * r;
        }
    }
    return std::sqrt(0.5 * traj.domain_length * dt * sum);
}

double action(const PotentialTrajectory& traj, double D, double t1, double t2) {
    if (!(t2 > t1)) {
        throw std::invalid_argument("action: need t2 > t1");
    }
    if (traj.times.size() < 2) {
        throw std::invalid_argument("action: need at least 2 samples");
    }
    const double dt = uniform_step(traj.times, "action");
    const double tol = 1e-9 * std::fabs(dt);
    std::size_t i1 = traj.times.size();
    std::size_t i2 = traj.times.size();
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (std::fabs(traj.times[i] - t1) <= tol) i1 = i;
        if (std::fabs(traj.times[i] - t2) <= tol) i2 = i;
    }
    if (i1 >= traj.times.size() || i2 >= traj.times.size() || i2 <= i1) {
        throw std::invalid_argument("action: sampled window does not cover [t1, t2]");
    }
    std::vector<double> qsq;
    qsq.reserve(traj.wavenumbers.size());
    for (double k : traj.wavenumbers) {
        const double q = D * (k * k);
        qsq.push_back(q * q);
    }
    double acc = 0.0;
    double prev = lagrangian_at(traj, qsq, i1);
    for (std::size_t i = i1 + 1; i <= i2; ++i) {
        const double cur = lagrangian_at(traj, qsq, i);
        acc += 0.5 * (prev + cur) * dt;
        prev = cur;
    }
    return acc;
}

std::vector<std::pair<double, double>> perturbation_action_scan(
    const PotentialTrajectory& optimal, const PotentialTrajectory& eta,
    const std::vector<double>& epsilons, double D) {
    check_grid_compatible(optimal, eta, "perturbation_action_scan");
    for (std::size_t m = 0; m < eta.wavenumbers.size(); ++m) {
        if (eta.values.front()[m] != 0.0 || eta.values.back()[m] != 0.0) {
            throw std::invalid_argument(
                "perturbation_action_scan: eta must vanish at both endpoints");
        }
    }
    std::vector<std::pair<double, double>> scan;
    scan.reserve(epsilons.size());
    for (double eps : epsilons) {
        const PotentialTrajectory combo = trajectory_linear_combination(optimal, eps, eta);
        scan.emplace_back(eps, action(combo, D, combo.times.front(), combo.times.back()));
    }
    return scan;
}

double equalization_action(const TemperatureHistory& history, double t) {
    if (history.times.empty() || history.times.size() != history.values.size()) {
        throw std::invalid_argument("equalization_action: empty or malformed trajectory");
    }
    if (t < 0.0) {
        throw std::invalid_argument("equalization_action: t must be >= 0");
    }
    if (t == 0.0) return 0.0;
    const double tol = 1e-12 * (std::fabs(t) + 1.0);
    if (history.times.front() > tol || history.times.back() < t - tol) {
        throw std::invalid_argument("equalization_action: samples do not cover [0, t]");
    }
    auto integrand = [&](std::size_t i) {
        const double d = history.values[i] - history.reference_T0;
        return 0.5 * d * d;
    };
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < history.times.size(); ++i) {
        const double ta = history.times[i];
        const double tb = history.times[i + 1];
        if (ta >= t) break;
        if (tb <= t) {
            acc += 0.5 * (integrand(i) + integrand(i + 1)) * (tb - ta);
        } else {
            // Clip the final interval at t with a linearly interpolated sample.
            const double w = (t - ta) / (tb - ta);
            const double vt = history.values[i] + w * (history.values[i + 1] - history.values[i]);
            const double dt_clip = t - ta;
            const double d = vt - history.reference_T0;
            acc += 0.5 * (integrand(i) + 0.5 * d * d) * dt_clip;
            break;
        }
    }
    return acc;
}

double transferred_energy(const PhysicalConstants& c, double equalization_action_value) {
    if (equalization_action_value < 0.0) {
        throw std::invalid_argument("transferred_energy: value must be >= 0");
    }
    return entropy_conductance_quantum(c) * equalization_action_value;
}

}  // namespace qentropy
