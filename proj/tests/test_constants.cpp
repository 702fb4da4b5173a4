// Fundamental constants and the conductance quanta derived from them.
//
// Oracle values were computed independently at 30-digit precision and rounded
// to the nearest double:
//   G0 = 2 e^2 / h            = 7.7480917298636506e-5 S
//   Lambda_s = pi^2 k_B^2/(3h) = 9.4643115163866399e-13 J/(K^2 s)
//   T_c(6000 m/s, 200 nm)     = 0.71988646100493319 K
// h, e and k_B are the exact SI defining values, so the derived quanta are
// reproducible bit for bit and the tolerances below are pure roundoff slack.

#include <initializer_list>
#include <stdexcept>

#include "doctest.h"
#include "qentropy/constants.hpp"

using namespace qentropy;

TEST_CASE("codata2018 carries the exact SI defining constants") {
    const auto c = PhysicalConstants::codata2018();
    CHECK(c.k_B == 1.380649e-23);
    CHECK(c.h == 6.62607015e-34);
    CHECK(c.e == 1.602176634e-19);
    // fl(2 pi) = 2 fl(pi), so dividing h by two_pi round-trips exactly.
    CHECK(c.hbar * two_pi == c.h);
}

TEST_CASE("electric conductance quantum is the Landauer value") {
    const auto c = PhysicalConstants::codata2018();
    const double g0 = electric_conductance_quantum(c);
    CHECK(g0 == doctest::Approx(7.7480917298636506e-5).epsilon(1e-13));
    CHECK(g0 == doctest::Approx(7.75e-5).epsilon(1e-3));
    // Doubling commutes with rounding: the spin factor is exactly 2.
    CHECK(g0 == 2.0 * single_spin_conductance_quantum(c));
}

TEST_CASE("entropy conductance quantum and its thermal counterpart") {
    const auto c = PhysicalConstants::codata2018();
    const double lams = entropy_conductance_quantum(c);
    CHECK(lams == doctest::Approx(9.4643115163866399e-13).epsilon(1e-13));
    CHECK(thermal_conductance_quantum(c, 1.0) == doctest::Approx(9.46e-13).epsilon(1e-3));
    // Lambda(T) is evaluated as Lambda_s * T, so the defining ratio
    // round-trips exactly at these probed temperatures.
    for (double T : {0.01, 0.1, 1.0, 100.0, 300.0}) {
        CHECK(thermal_conductance_quantum(c, T) / T == lams);
    }
    CHECK(thermal_conductance_quantum(c, 0.0) == 0.0);
    // 16 populated modes reproduce the measured plateau scale; the factor 16
    // is an exact binary scaling.
    CHECK(16.0 * lams == doctest::Approx(1.5142898426218624e-11).epsilon(1e-13));
    CHECK_THROWS_AS(thermal_conductance_quantum(c, -1.0), std::invalid_argument);
}

TEST_CASE("critical temperature of the four-mode regime") {
    const auto c = PhysicalConstants::codata2018();
    const double tc = critical_temperature(c, 6000.0, 200e-9);
    CHECK(tc == doctest::Approx(0.71988646100493319).epsilon(1e-13));
    // Scaling: linear in v, inverse in w.
    CHECK(critical_temperature(c, 12000.0, 200e-9) == doctest::Approx(2.0 * tc).epsilon(1e-15));
    CHECK(critical_temperature(c, 6000.0, 100e-9) == doctest::Approx(2.0 * tc).epsilon(1e-15));
    CHECK_THROWS_AS(critical_temperature(c, 0.0, 200e-9), std::invalid_argument);
    CHECK_THROWS_AS(critical_temperature(c, 6000.0, -1.0), std::invalid_argument);
}
