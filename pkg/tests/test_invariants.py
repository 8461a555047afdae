"""Invariant pipeline: S, T, hdet, tangle, local-unitary behavior."""

from fractions import Fraction

import numpy as np
import pytest

import hdet4
from hdet4 import (
    DegenerateJInvariant,
    NonUnitaryFactor,
    apply_local_unitary,
    concurrence,
    hdet2,
    hdet4_magnitude,
    invariants_of,
    j_invariant,
    lift_p4,
    named_state,
    normalize,
    random_su2,
    tangle_direct,
    tangle_via_lift,
    tensor_product,
)

EPS = np.finfo(float).eps


def random_state(rng, n=16):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


# --- exact rational checks ---------------------------------------------------


def test_unnormalized_ghz_is_exact_in_fractions():
    amps = [Fraction(0)] * 16
    amps[0] = Fraction(1)
    amps[15] = Fraction(1)
    tr = invariants_of(amps)
    assert tr.s == Fraction(1, 12)
    assert tr.t == Fraction(-1, 216)
    assert tr.hdet == 0


def test_integer_superposition_is_exact():
    # 2|0000> + 3|1111>: S = (2*3)^4/12, T = -(2*3)^6/216, hdet = 0
    amps = [Fraction(0)] * 16
    amps[0] = Fraction(2)
    amps[15] = Fraction(3)
    tr = invariants_of(amps)
    assert tr.s == Fraction(1296, 12)
    assert tr.t == Fraction(-46656, 216)
    assert tr.hdet == 0


def test_lift_p4_of_ghz():
    q = lift_p4(named_state("GHZ"))
    # pencil of GHZ: Q1 = a*b*x, so P4 = (a*b*x)^2 with a = b = 1/sqrt(2)
    assert q.b2 == pytest.approx(1.0 / 24.0, abs=1e-15)
    assert q.b0 == q.b4 == 0
    assert q.b1 == q.b3 == 0


# --- golden states -----------------------------------------------------------

GOLDEN = {
    "GHZ": (1 / 192, -1 / 13824, 0.0),
    "W": (0.0, 0.0, 0.0),
    "C1": (1 / 192, -1 / 13824, 0.0),
    "C2": (1 / 192, -1 / 13824, 0.0),
    "C3": (1 / 192, -1 / 13824, 0.0),
    "HD": (0.0, -1 / 11664, -1 / (2 ** 8 * 3 ** 9)),
    "L": (0.0, -1 / 11664, -1 / (2 ** 8 * 3 ** 9)),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_state_invariants(name):
    s, t, hd = GOLDEN[name]
    tr = invariants_of(named_state(name))
    assert tr.s == pytest.approx(s, abs=1e-12)
    assert tr.t == pytest.approx(t, abs=1e-12)
    assert tr.hdet == pytest.approx(hd, abs=1e-12)


def test_yc_state_magnitudes():
    tr = invariants_of(named_state("YC"))
    assert tr.s == pytest.approx(1 / 192, abs=1e-12)
    assert abs(tr.t) == pytest.approx(1 / 13824, abs=1e-12)
    assert abs(tr.hdet) <= 1e-12


def test_single_excitation_sector_vanishes():
    # any state supported on |0000> and the four one-excitation kets
    rng = np.random.default_rng(2)
    for _ in range(20):
        amps = np.zeros(16, complex)
        for idx in (0, 1, 2, 4, 8):
            amps[idx] = rng.normal() + 1j * rng.normal()
        tr = invariants_of(normalize(amps))
        assert abs(tr.s) < 1e-15
        assert abs(tr.t) < 1e-15


# --- structural properties ---------------------------------------------------


def test_local_unitary_invariance():
    rng = np.random.default_rng(31)
    for _ in range(50):
        v = random_state(rng)
        tr = invariants_of(v)
        w = apply_local_unitary(v, [random_su2(rng) for _ in range(4)])
        tw = invariants_of(w)
        assert tw.s == pytest.approx(tr.s, abs=1e-12)
        assert tw.t == pytest.approx(tr.t, abs=1e-12)


def test_magnitudes_invariant_under_u2_factors():
    # a global phase on any factor flips nothing in |S|, |T|, |hdet|
    rng = np.random.default_rng(32)
    v = random_state(rng)
    tr = invariants_of(v)
    phase = np.exp(0.7j)
    factors = [phase * random_su2(rng)] + [random_su2(rng) for _ in range(3)]
    tw = invariants_of(apply_local_unitary(v, factors))
    assert abs(tw.s) == pytest.approx(abs(tr.s), abs=1e-12)
    assert abs(tw.t) == pytest.approx(abs(tr.t), abs=1e-12)
    assert abs(tw.hdet) == pytest.approx(abs(tr.hdet), abs=1e-14)


def test_apply_local_unitary_rejects_nonunitary():
    v = named_state("GHZ")
    bad = np.array([[1.0, 0.0], [0.0, 2.0]], complex)
    with pytest.raises(NonUnitaryFactor):
        apply_local_unitary(v, [bad, np.eye(2), np.eye(2), np.eye(2)])


def test_homogeneity_degrees():
    rng = np.random.default_rng(33)
    v = random_state(rng)
    tr = invariants_of(v)
    c = 0.83 - 0.41j
    tc = invariants_of(c * v)
    assert tc.s == pytest.approx(c ** 8 * tr.s, rel=1e-12)
    assert tc.t == pytest.approx(c ** 12 * tr.t, rel=1e-12)
    assert tc.hdet == pytest.approx(c ** 24 * tr.hdet, rel=1e-11)


def test_product_states_vanish():
    rng = np.random.default_rng(34)
    for _ in range(60):
        parts = [normalize(rng.normal(size=2) + 1j * rng.normal(size=2)) for _ in range(4)]
        v = tensor_product(*parts)
        tr = invariants_of(v)
        assert abs(tr.s) < 1e-14
        assert abs(tr.t) < 1e-14
    # 2x2 bipartitions vanish as well
    for _ in range(30):
        a = normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
        b = normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
        v = np.kron(a, b)
        tr = invariants_of(v)
        assert abs(tr.s) < 1e-13
        assert abs(tr.t) < 1e-13


def test_qubit_permutation_invariance():
    rng = np.random.default_rng(35)
    v = random_state(rng)
    tr = invariants_of(v)
    t4 = v.reshape(2, 2, 2, 2)
    for perm in ((1, 0, 2, 3), (0, 2, 1, 3), (3, 2, 1, 0), (1, 2, 3, 0)):
        tw = invariants_of(np.transpose(t4, perm).reshape(16))
        assert tw.s == pytest.approx(tr.s, rel=1e-12)
        assert tw.t == pytest.approx(tr.t, rel=1e-12)


def test_batch_evaluation_matches_loop():
    rng = np.random.default_rng(36)
    batch = np.array([random_state(rng) for _ in range(7)])
    tr = invariants_of(batch)
    for k in range(7):
        single = invariants_of(batch[k])
        assert tr.s[k] == pytest.approx(single.s, rel=1e-14)
        assert tr.hdet[k] == pytest.approx(single.hdet, rel=1e-14)


# --- two- and three-qubit reductions ----------------------------------------


def test_hdet2_and_concurrence_of_bell_state():
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert hdet2(bell) == pytest.approx(0.5, abs=1e-12)
    assert concurrence(bell) == pytest.approx(1.0, abs=1e-12)


def test_concurrence_of_product_state():
    v = np.kron([1, 0], [0.6, 0.8])
    assert concurrence(v) == pytest.approx(0.0, abs=1e-14)


def test_tangle_of_ghz3_and_w3():
    ghz3 = np.zeros(8)
    ghz3[0] = ghz3[7] = 1 / np.sqrt(2)
    assert tangle_direct(ghz3) == pytest.approx(1.0, abs=1e-12)
    assert abs(tangle_via_lift(ghz3)) == pytest.approx(1.0, abs=1e-12)
    w3 = np.zeros(8)
    w3[1] = w3[2] = w3[4] = 1 / np.sqrt(3)
    assert tangle_direct(w3) == pytest.approx(0.0, abs=1e-12)


def test_tangle_lift_vs_direct():
    rng = np.random.default_rng(37)
    for _ in range(100):
        v = random_state(rng, n=8)
        assert abs(tangle_via_lift(v)) == pytest.approx(tangle_direct(v), abs=1e-10)


def cayley_hdet3(t):
    # explicit 2x2x2 hyperdeterminant polynomial
    d = t[0, 0, 0] ** 2 * t[1, 1, 1] ** 2 + t[0, 0, 1] ** 2 * t[1, 1, 0] ** 2
    d += t[0, 1, 0] ** 2 * t[1, 0, 1] ** 2 + t[0, 1, 1] ** 2 * t[1, 0, 0] ** 2
    pairs = [
        (t[0, 0, 0] * t[1, 1, 1], t[0, 0, 1] * t[1, 1, 0]),
        (t[0, 0, 0] * t[1, 1, 1], t[0, 1, 0] * t[1, 0, 1]),
        (t[0, 0, 0] * t[1, 1, 1], t[0, 1, 1] * t[1, 0, 0]),
        (t[0, 0, 1] * t[1, 1, 0], t[0, 1, 0] * t[1, 0, 1]),
        (t[0, 0, 1] * t[1, 1, 0], t[0, 1, 1] * t[1, 0, 0]),
        (t[0, 1, 0] * t[1, 0, 1], t[0, 1, 1] * t[1, 0, 0]),
    ]
    d -= 2 * sum(a * b for a, b in pairs)
    d += 4 * (t[0, 0, 0] * t[0, 1, 1] * t[1, 0, 1] * t[1, 1, 0]
              + t[0, 0, 1] * t[0, 1, 0] * t[1, 0, 0] * t[1, 1, 1])
    return d


def test_tangle_matches_cayley_polynomial():
    rng = np.random.default_rng(38)
    for _ in range(20):
        t = rng.normal(size=(2, 2, 2)) + 1j * rng.normal(size=(2, 2, 2))
        expect = 4 * abs(cayley_hdet3(t))
        assert tangle_direct(t.reshape(8)) == pytest.approx(expect, rel=1e-10)


# --- magnitude snapping and the j invariant ----------------------------------


def test_hdet4_magnitude_snaps_structural_zeros():
    assert hdet4_magnitude(named_state("GHZ")) == 0.0
    assert hdet4_magnitude(named_state("W")) == 0.0
    assert hdet4_magnitude(named_state("HD")) == pytest.approx(1 / (2 ** 8 * 3 ** 9), rel=1e-12)


def test_hdet4_magnitude_extended_certifies_tiny_values():
    # the Ising ground state at lambda = 1 has a genuine hdet around 1e-16,
    # below the double-precision noise floor; the extended path keeps it
    v = hdet4.ising_branch_state(0, 1.0)
    assert hdet4_magnitude(v) == 0.0
    ext = hdet4_magnitude(v, extended=True)
    assert 1e-17 < ext < 1e-15


def test_j_invariant_finite_for_certified_nonzero():
    v = hdet4.ising_branch_state(0, 1.0)
    j = j_invariant(v)
    assert np.isfinite(j.real) and np.isfinite(j.imag)
    assert j.real == pytest.approx(30237.13376, rel=1e-5)


def test_j_invariant_rejects_structural_zero():
    with pytest.raises(DegenerateJInvariant):
        j_invariant(named_state("GHZ"))


def test_normalize_rescales_to_unit_norm():
    v = np.arange(1.0, 17.0)
    assert np.linalg.norm(normalize(v)) == pytest.approx(1.0, abs=1e-14)
