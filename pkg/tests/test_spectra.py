"""Hermitian eigensolver: residuals, degeneracy grouping, error paths."""

import numpy as np
import pytest

from hdet4 import NotHermitian
from hdet4.spectra import eig_hermitian, ground_state


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def test_diagonal_matrix_levels():
    h = np.diag([2.0, -1.0, 2.0, 0.0])
    dec = eig_hermitian(h)
    assert [lv.energy for lv in dec.levels] == pytest.approx([-1.0, 0.0, 2.0], abs=1e-12)
    assert [lv.multiplicity for lv in dec.levels] == [1, 1, 2]


def test_matches_numpy_eigenvalues():
    rng = np.random.default_rng(12)
    for n in (2, 5, 16):
        h = random_hermitian(rng, n)
        dec = eig_hermitian(h)
        assert dec.energies == pytest.approx(np.linalg.eigvalsh(h), abs=1e-10)


def test_eigenvector_residuals():
    rng = np.random.default_rng(13)
    h = random_hermitian(rng, 16)
    dec = eig_hermitian(h)
    for lv in dec.levels:
        for vec in lv.basis:
            assert np.linalg.norm(h @ vec - lv.energy * vec) < 1e-10
            assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)


def test_states_are_orthonormal():
    rng = np.random.default_rng(14)
    h = random_hermitian(rng, 8)
    s = eig_hermitian(h).states()
    assert s.shape == (8, 8)
    assert np.allclose(s.conj() @ s.T, np.eye(8), atol=1e-10)


def test_degenerate_levels_are_grouped():
    rng = np.random.default_rng(15)
    q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
    h = q @ np.diag([0.0, 0.0, 0.0, 1.0, 2.0, 2.0]) @ q.conj().T
    dec = eig_hermitian(h)
    assert [lv.multiplicity for lv in dec.levels] == [3, 1, 2]
    # level bases stay orthonormal and span the right eigenspace
    b = dec.levels[0].basis
    assert np.allclose(b.conj() @ b.T, np.eye(3), atol=1e-10)
    assert np.linalg.norm(h @ b.T) < 1e-8


def test_degeneracy_tol_merges_levels():
    h = np.diag([0.0, 1e-12, 1.0])
    assert [lv.multiplicity for lv in eig_hermitian(h).levels] == [2, 1]
    wide = eig_hermitian(h, degeneracy_tol=10.0)
    assert [lv.multiplicity for lv in wide.levels] == [3]


def test_kramers_pairs_stay_degenerate():
    # H = A kron I + i B kron sigma_y with A symmetric, B antisymmetric is
    # quaternionic-real; every eigenvalue comes out doubly degenerate
    rng = np.random.default_rng(16)
    a = rng.normal(size=(4, 4))
    a = (a + a.T) / 2
    b = rng.normal(size=(4, 4))
    b = (b - b.T) / 2
    sy = np.array([[0.0, -1j], [1j, 0.0]])
    h = np.kron(a, np.eye(2)) + 1j * np.kron(b, sy)
    dec = eig_hermitian(h)
    assert all(lv.multiplicity % 2 == 0 for lv in dec.levels)
    assert sum(lv.multiplicity for lv in dec.levels) == 8


def test_ground_state_tuple():
    rng = np.random.default_rng(17)
    h = random_hermitian(rng, 10)
    energy, vec, mult = ground_state(h)
    assert energy == pytest.approx(np.linalg.eigvalsh(h)[0], abs=1e-10)
    assert mult == 1
    assert np.linalg.norm(h @ vec - energy * vec) < 1e-10


def test_not_square_rejected():
    with pytest.raises(NotHermitian, match="square"):
        eig_hermitian(np.zeros((2, 3)))


def test_not_hermitian_rejected():
    with pytest.raises(NotHermitian):
        eig_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))
