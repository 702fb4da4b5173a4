#include "qentropy/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qentropy {

double subband_energy(const PhysicalConstants& c, double k, int j,
                      const WireGeometry& geom, double mass) {
    if (j < 1) {
        throw std::invalid_argument("subband_energy: j must be >= 1");
    }
    if (!(mass > 0.0)) {
        throw std::invalid_argument("subband_energy: mass must be > 0");
    }
    if (!(geom.w > 0.0)) {
        throw std::invalid_argument("subband_energy: wire width must be > 0");
    }
    const double hk = c.hbar * k;
    const double longitudinal = (hk * hk) / (2.0 * mass);
    const double hpj = c.hbar * pi * static_cast<double>(j);
    const double transverse = (hpj * hpj) / (2.0 * mass * (geom.w * geom.w));
    return longitudinal + transverse;
}

SubbandSpectrum make_subband_spectrum(const PhysicalConstants& c, double mass,
                                      double w, int j_max) {
    if (j_max < 1) {
        throw std::invalid_argument("make_subband_spectrum: j_max must be >= 1");
    }
    SubbandSpectrum s;
    s.mass = mass;
    s.w = w;
    s.levels.reserve(static_cast<std::size_t>(j_max));
    const WireGeometry geom{w, w};  // length does not enter the transverse energy
    for (int j = 1; j <= j_max; ++j) {
        s.levels.push_back({j, subband_energy(c, 0.0, j, geom, mass)});
    }
    return s;
}

int channel_count(double w, double lambda_F) {
    if (!(w > 0.0) || !(lambda_F > 0.0)) {
        throw std::invalid_argument("channel_count: w and lambda_F must be > 0");
    }
    const double n = std::floor((2.0 * w) / lambda_F);
    if (n <= 0.0) return 0;
    return static_cast<int>(n);
}

double density_of_states_per_channel(const PhysicalConstants& c, double v_j) {
    if (!(v_j > 0.0)) {
        throw std::invalid_argument("density_of_states_per_channel: v_j must be > 0");
    }
    return 2.0 / (c.h * v_j);
}

double total_current(const PhysicalConstants& c, int N, double V) {
    if (N < 0) {
        throw std::invalid_argument("total_current: N must be >= 0");
    }
    return electric_conductance_quantum(c) * static_cast<double>(N) * V;
}

std::vector<StaircasePoint> conductance_staircase(const PhysicalConstants& c,
                                                  double w_min, double w_max,
                                                  int steps, double lambda_F,
                                                  bool spin_degenerate) {
    if (!(w_min > 0.0) || !(w_max > w_min)) {
        throw std::invalid_argument("conductance_staircase: need 0 < w_min < w_max");
    }
    if (steps < 2) {
        throw std::invalid_argument("conductance_staircase: steps must be >= 2");
    }
    if (!(lambda_F > 0.0)) {
        throw std::invalid_argument("conductance_staircase: lambda_F must be > 0");
    }
    const double quantum = spin_degenerate ? electric_conductance_quantum(c)
                                           : single_spin_conductance_quantum(c);
    std::vector<StaircasePoint> out;
    out.reserve(static_cast<std::size_t>(steps));
    const double dw = (w_max - w_min) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double w = (i == steps - 1) ? w_max : w_min + dw * static_cast<double>(i);
        const int N = channel_count(w, lambda_F);
        out.push_back({w, static_cast<double>(N) * quantum});
    }
    return out;
}

}  // namespace qentropy
