"""Anisotropic chain on four sites, isotropic point, dimer-covering states."""

import numpy as np
import pytest

from hdet4 import InvalidCoupling, invariants_of
from hdet4.models import (
    heisenberg_energy,
    rvb_state,
    rvb_superposition,
    xxz_eigensystem_analytic,
    xxz_hamiltonian,
)
from hdet4.spectra import eig_hermitian

DELTAS = (-1.5, -0.8, 0.0, 0.3, 1.0, 2.0)


def ground_row(delta):
    return min(xxz_eigensystem_analytic(delta), key=lambda r: r[0])


@pytest.mark.parametrize("delta", DELTAS)
def test_rows_are_eigenpairs(delta):
    h = xxz_hamiltonian(delta)
    rows = xxz_eigensystem_analytic(delta)
    assert len(rows) == 16
    for energy, state, _ in rows:
        assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(h @ state - energy * state) < 5e-15


@pytest.mark.parametrize("delta", DELTAS)
def test_rows_cover_full_spectrum(delta):
    # rows come in a fixed branch order, not sorted by energy
    energies = sorted(r[0] for r in xxz_eigensystem_analytic(delta))
    assert energies == pytest.approx(
        np.linalg.eigvalsh(xxz_hamiltonian(delta)), abs=1e-12
    )


def test_closed_form_invariants_match_pipeline():
    worst = 0.0
    for delta in np.linspace(-2, 2, 50):
        for energy, state, tr in xxz_eigensystem_analytic(delta):
            pr = invariants_of(state)
            worst = max(
                worst,
                abs(pr.s - tr.s),
                abs(pr.t - tr.t),
                abs(pr.hdet - tr.hdet),
            )
    assert worst < 1e-12


def test_ground_s_vanishes_at_isotropic_point():
    _, _, tr = ground_row(1.0)
    assert tr.s == 0
    assert tr.t == 0


def test_ground_t_changes_sign_across_isotropic_point():
    assert ground_row(0.5)[2].t > 0
    assert ground_row(1.5)[2].t < 0


def test_ground_s_jumps_at_ferromagnetic_transition():
    below = ground_row(-1.001)[2].s
    above = ground_row(-0.999)[2].s
    assert abs(below) == 0
    assert abs(above) > 5e-4


def test_ground_hdet_stays_negligible():
    for delta in np.linspace(-0.9, 2.0, 12):
        _, _, tr = ground_row(delta)
        assert abs(tr.hdet) < 1e-24


def test_isotropic_level_structure():
    dec = eig_hermitian(xxz_hamiltonian(1.0))
    got = [(round(lv.energy, 9), lv.multiplicity) for lv in dec.levels]
    assert got == [(-8.0, 1), (-4.0, 3), (0.0, 7), (4.0, 5)]


def test_heisenberg_energy_from_quantum_numbers():
    assert heisenberg_energy(1, 1, 0) == -8.0
    assert heisenberg_energy(0, 0, 0) == 0.0
    assert heisenberg_energy(1, 1, 2) == 4.0
    assert heisenberg_energy(1, 1, 1) == -4.0
    assert heisenberg_energy(1, 0, 1) == 0.0
    assert heisenberg_energy(0, 1, 1) == 0.0


def test_heisenberg_energy_rejects_bad_total_spin():
    with pytest.raises(InvalidCoupling):
        heisenberg_energy(1, 1, 3)
    with pytest.raises(InvalidCoupling):
        heisenberg_energy(0, 1, 0)


def test_heisenberg_energies_reproduce_spectrum():
    # multiplicities: 2*s_total + 1 magnetic states for each coupling channel
    counted = {}
    for s13 in (0, 1):
        for s24 in (0, 1):
            for s in range(abs(s13 - s24), s13 + s24 + 1):
                e = heisenberg_energy(s13, s24, s)
                counted[e] = counted.get(e, 0) + 2 * s + 1
    dec = eig_hermitian(xxz_hamiltonian(1.0))
    assert counted == {round(lv.energy, 9): lv.multiplicity for lv in dec.levels}


def test_rvb_states_and_superpositions_have_zero_invariants():
    rng = np.random.default_rng(21)
    for which in (1, 2):
        v = rvb_state(which)
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
        tr = invariants_of(v)
        assert abs(tr.s) < 1e-15 and abs(tr.t) < 1e-15
    for _ in range(40):
        theta, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
        tr = invariants_of(rvb_superposition(theta, phi))
        assert abs(tr.s) < 1e-15
        assert abs(tr.t) < 1e-15


def test_rvb_index_is_validated():
    with pytest.raises(ValueError):
        rvb_state(0)
