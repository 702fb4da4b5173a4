#pragma once

// Ballistic electron transport in a quantum wire: subband spectrum, channel
// counting and the conductance staircase.
//
//   subband spectrum   eps(k, j) = hbar^2 k^2 / (2m) + hbar^2 pi^2 j^2 / (2 m w^2)
//   channel count      N = floor(2 w / lambda_F)
//   density of states  g_j = 2 / (h v_j)  per channel (2 = spin degeneracy)
//   total current      I = (2 e^2 / h) N V   (Landauer)
//
// The staircase G(w) = N(w) * G0 takes only integer multiples of the
// conductance quantum and is monotone non-decreasing in the width.

#include <utility>
#include <vector>

#include "qentropy/constants.hpp"

namespace qentropy {

struct WireGeometry {
    double w;  // width (m), > 0
    double L;  // length (m), > 0
};

struct SubbandLevel {
    int j;                    // transverse quantum number, >= 1
    double transverse_energy; // hbar^2 pi^2 j^2 / (2 m w^2) (J)
};

struct SubbandSpectrum {
    double mass;  // particle mass (kg)
    double w;     // wire width (m)
    std::vector<SubbandLevel> levels;  // strictly increasing in j
};

struct StaircasePoint {
    double w;  // width (m)
    double G;  // conductance (S), an integer multiple of the quantum
};

// eps(k, j) for a particle of the given mass in a wire of width geom.w.
// j >= 1 and mass > 0 are enforced.
double subband_energy(const PhysicalConstants& c, double k, int j,
                      const WireGeometry& geom, double mass);

// The first j_max transverse levels; invariantly increasing in j.
SubbandSpectrum make_subband_spectrum(const PhysicalConstants& c, double mass,
                                      double w, int j_max);

// floor(2 w / lambda_F), clamped at zero. Both arguments must be > 0.
int channel_count(double w, double lambda_F);

// 2 / (h v_j); v_j > 0.
double density_of_states_per_channel(const PhysicalConstants& c, double v_j);

// I = (2 e^2 / h) N V; N >= 0.
double total_current(const PhysicalConstants& c, int N, double V);

// Sweep of `steps` widths across [w_min, w_max] (inclusive, uniform).
// With spin_degenerate the plateaus sit at N * 2e^2/h, otherwise at N * e^2/h.
std::vector<StaircasePoint> conductance_staircase(const PhysicalConstants& c,
                                                  double w_min, double w_max,
                                                  int steps, double lambda_F,
                                                  bool spin_degenerate = true);

}  // namespace qentropy
