"""Smoke tests of the qentropy Python extension."""

import math

import pytest

import qentropy


def test_version():
    assert qentropy.__version__ == "0.1.0"


def test_constants_record():
    c = qentropy.PhysicalConstants.codata2018()
    assert c.k_B == 1.380649e-23
    assert c.h == 6.62607015e-34
    assert c.e == 1.602176634e-19
    assert math.isclose(c.hbar * 2.0 * math.pi, c.h, rel_tol=1e-15)


def test_conductance_quanta():
    g0 = qentropy.electric_conductance_quantum()
    assert math.isclose(g0, 7.7480917298636506e-05, rel_tol=1e-12)
    assert g0 == 2.0 * qentropy.single_spin_conductance_quantum()
    lam_s = qentropy.entropy_conductance_quantum()
    assert math.isclose(lam_s, 9.4643115163866399e-13, rel_tol=1e-12)
    assert qentropy.thermal_conductance_quantum(1.0) == lam_s
    assert math.isclose(qentropy.lorenz_number(), 2.4430045090736661e-08,
                        rel_tol=1e-12)


def test_critical_temperature():
    t_c = qentropy.critical_temperature(6000.0, 200e-9)
    assert math.isclose(t_c, 0.71988646100493319, rel_tol=1e-12)


def test_staircase_integers_and_monotone():
    pts = qentropy.conductance_staircase(10e-9, 401e-9, 100, 40e-9)
    assert len(pts) == 100
    g0 = qentropy.electric_conductance_quantum()
    levels = [g / g0 for _, g in pts]
    assert all(abs(s - round(s)) < 1e-9 for s in levels)
    assert all(b >= a for a, b in zip(levels, levels[1:]))
    assert qentropy.channel_count(101e-9, 40e-9) == 5


def test_packet_and_pendry():
    assert math.isclose(qentropy.packet_energy(1e9), 6.62607015e-25, rel_tol=1e-14)
    assert qentropy.pendry_max_entropy_rate(1.0) == \
        2.0 * qentropy.thermal_conductance_quantum(1.0)
    sigma = qentropy.packet_entropy_production(1e9, 1.0)
    assert math.isclose(sigma, 2.1798897038122276e-15, rel_tol=1e-12)


def test_transfer_ledger_second_law():
    downhill = qentropy.single_packet_transfer(2.0, 1.0, 1e9)
    assert downhill.net_rate > 0.0
    assert qentropy.second_law_check(downhill)
    assert math.isclose(downhill.net_rate, 1.0899448519061138e-15, rel_tol=1e-12)

    uphill = qentropy.single_packet_transfer(1.0, 2.0, 1e9)
    assert uphill.net_rate < 0.0
    assert not qentropy.second_law_check(uphill)

    level = qentropy.single_packet_transfer(1.0, 1.0, 1e9)
    assert level.net_rate == 0.0
    assert qentropy.second_law_check(level)

    assert downhill.emitter_current == -downhill.absorber_current


def test_spin_relaxation_report():
    r = qentropy.spin_relaxation_report(2.675e8, 1.0, 300.0)
    assert math.isclose(r.nu, 42573947.277082002, rel_tol=1e-12)
    assert r.nu == qentropy.larmor_frequency(2.675e8, 1.0)
    assert r.I_S == qentropy.entropy_current_from_packet(r.nu)
    assert r.Sigma == r.Sigma_spin_form
    assert math.isclose(r.I_S, r.I_S_spin_form, rel_tol=1e-14)
    assert math.isclose(r.Sigma, 1.3170464782526042e-20, rel_tol=1e-12)


def test_equalization_action():
    # T - T0 = 1 - t on [0, 1]: S~(1) = integral (1-t)^2/2 = 1/6.
    n = 2001
    times = [i / (n - 1) for i in range(n)]
    values = [300.0 + (1.0 - t) for t in times]
    action = qentropy.equalization_action(300.0, times, values, 1.0)
    assert math.isclose(action, 1.0 / 6.0, rel_tol=1e-6)
    energy = qentropy.transferred_energy(action)
    assert math.isclose(energy, qentropy.entropy_conductance_quantum() * action,
                        rel_tol=1e-15)


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        qentropy.single_packet_transfer(-1.0, 1.0, 1e9)
    with pytest.raises(ValueError):
        qentropy.larmor_frequency(0.0, 1.0)
    with pytest.raises(ValueError):
        qentropy.conductance_staircase(2e-7, 1e-7, 10, 40e-9)
