"""Transverse-field chain on four sites: closed forms vs numerics."""

import numpy as np
import pytest

from hdet4 import OutOfOrderingRange, SingularAtZeroField, invariants_of
from hdet4.models import (
    ising_branch_state,
    ising_eigenstate_analytic,
    ising_energies_analytic,
    ising_hamiltonian,
    ising_invariants_analytic,
)
from hdet4.spectra import ground_state

LAM_GRID = np.linspace(0.05, 1.1, 9)


def test_hamiltonian_is_hermitian_and_real():
    h = ising_hamiltonian(0.7)
    assert h.shape == (16, 16)
    assert np.allclose(h, h.T.conj())
    assert np.max(np.abs(h.imag)) == 0.0


@pytest.mark.parametrize("lam", LAM_GRID)
def test_all_sixteen_branches_are_eigenpairs(lam):
    h = ising_hamiltonian(lam)
    energies = ising_energies_analytic(lam)
    assert energies.shape == (16,)
    for level in range(16):
        v = ising_eigenstate_analytic(level, lam)
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(h @ v - energies[level] * v) < 3e-14


@pytest.mark.parametrize("lam", LAM_GRID)
def test_energies_match_numeric_spectrum(lam):
    h = ising_hamiltonian(lam)
    assert np.sort(ising_energies_analytic(lam)) == pytest.approx(
        np.linalg.eigvalsh(h), abs=1e-12
    )


def test_ground_branch_is_the_minimum():
    for lam in LAM_GRID:
        energies = ising_energies_analytic(lam)
        assert energies[0] == pytest.approx(np.min(energies), abs=1e-12)
        e_num, _, _ = ground_state(ising_hamiltonian(lam))
        assert energies[0] == pytest.approx(e_num, abs=1e-8)


def test_closed_form_invariants_match_pipeline():
    lams = np.linspace(0.05, 2 / np.sqrt(3) - 0.01, 20)
    worst = 0.0
    for lam in lams:
        for level in (0, 1, 2, 7, 15):
            tr = invariants_of(ising_eigenstate_analytic(level, lam))
            cf = ising_invariants_analytic(level, lam)
            worst = max(
                worst,
                abs(tr.s - cf.s),
                abs(tr.t - cf.t),
                abs(tr.hdet - cf.hdet),
            )
    assert worst < 1e-8


def test_branch_state_agrees_inside_ordering_window():
    for lam in (0.2, 0.6, 1.0):
        for level in (0, 3, 8, 15):
            a = ising_eigenstate_analytic(level, lam)
            b = ising_branch_state(level, lam)
            assert abs(np.vdot(a, b)) == pytest.approx(1.0, abs=1e-12)


def test_branch_state_continues_to_zero_field():
    # the raw closed form has a 1/lam prefactor; the branch version limits
    v = ising_branch_state(0, 0.0)
    assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
    h = ising_hamiltonian(0.0)
    e = float(np.real(np.vdot(v, h @ v)))
    assert np.linalg.norm(h @ v - e * v) < 1e-10
    # and varies continuously out of it
    w = ising_branch_state(0, 1e-8)
    assert abs(np.vdot(v, w)) == pytest.approx(1.0, abs=1e-6)


def test_branch_state_valid_beyond_ordering_window():
    lam = 1.5
    h = ising_hamiltonian(lam)
    v = ising_branch_state(0, lam)
    e = float(np.real(np.vdot(v, h @ v)))
    assert np.linalg.norm(h @ v - e * v) < 1e-10


def test_zero_field_closed_form_is_singular():
    with pytest.raises(SingularAtZeroField):
        ising_eigenstate_analytic(0, 0.0)


def test_ordering_window_is_enforced():
    with pytest.raises(OutOfOrderingRange):
        ising_eigenstate_analytic(0, 1.5)
    with pytest.raises(OutOfOrderingRange):
        ising_invariants_analytic(0, 2.0)
    # explicit opt-out keeps the formulas usable
    v = ising_eigenstate_analytic(0, 1.5, check_order=False)
    assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)


def test_ground_hdet_profile():
    # |hdet| on the ground branch rises to an interior peak; away from it
    # the true value sits below the double-precision noise floor, so only
    # the ordering is asserted here
    lams = [0.2, 0.84, 1.1]
    mags = [abs(invariants_of(ising_branch_state(0, lam)).hdet) for lam in lams]
    assert mags[1] > 2 * mags[0]
    assert mags[1] > 2 * mags[2]
    assert mags[1] > 5e-16
