"""Named states and the nine-family normal-form constructors."""

import numpy as np
import pytest

from hdet4 import (
    FAMILIES,
    NAMED_STATES,
    ZERO_FAMILIES,
    ArityMismatch,
    UnknownState,
    family_arity,
    invariants_of,
    named_state,
    verstraete_invariants_closed_form,
    verstraete_state,
)

ARITIES = {
    "Gabcd": 4,
    "Labc2": 3,
    "La2b2": 2,
    "La2_03p1": 1,
    "Lab3": 2,
    "La4": 1,
    "L05p3": 0,
    "L07p1": 0,
    "L03p1_03p1": 0,
}


def draw_params(rng, k):
    return tuple(rng.normal() + 1j * rng.normal() for _ in range(k))


def test_family_roster_and_arities():
    assert tuple(FAMILIES) == tuple(ARITIES)
    for fam, k in ARITIES.items():
        assert family_arity(fam) == k
    assert set(ZERO_FAMILIES) <= set(FAMILIES)
    assert set(ZERO_FAMILIES) == {"Lab3", "La4", "L05p3", "L07p1", "L03p1_03p1"}


def test_named_states_are_unit_vectors():
    assert NAMED_STATES == ("GHZ", "W", "C1", "C2", "C3", "YC", "HD", "L")
    for name in NAMED_STATES:
        v = named_state(name)
        assert v.shape == (16,)
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)


def test_family_states_are_unit_vectors():
    rng = np.random.default_rng(7)
    for fam in FAMILIES:
        v = verstraete_state(fam, draw_params(rng, family_arity(fam)))
        assert v.shape == (16,)
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("fam", sorted(set(FAMILIES) - set(ZERO_FAMILIES)))
def test_closed_form_matches_pipeline(fam):
    rng = np.random.default_rng(40 + FAMILIES.index(fam))
    k = family_arity(fam)
    for _ in range(100):
        params = draw_params(rng, k)
        v = verstraete_state(fam, params)
        tr = invariants_of(v)
        cf = verstraete_invariants_closed_form(fam, params)
        for got, want in ((tr.s, cf.s), (tr.t, cf.t), (tr.hdet, cf.hdet)):
            err = abs(got - want)
            assert err <= 1e-9 * max(abs(want), 1.0) or err <= 1e-12


@pytest.mark.parametrize("fam", sorted(ZERO_FAMILIES))
def test_zero_families_vanish(fam):
    rng = np.random.default_rng(11)
    k = family_arity(fam)
    for _ in range(25):
        tr = invariants_of(verstraete_state(fam, draw_params(rng, k)))
        assert abs(tr.s) <= 1e-12
        assert abs(tr.t) <= 1e-12
        assert abs(tr.hdet) <= 1e-12
        cf = verstraete_invariants_closed_form(fam, draw_params(rng, k))
        assert cf.s == cf.t == cf.hdet == 0


def test_real_parameters_accepted():
    v = verstraete_state("Gabcd", (0.5, 0.25, 0.125, 1.0))
    tr = invariants_of(v)
    assert abs(tr.s.imag) < 1e-14
    assert abs(tr.t.imag) < 1e-14


def test_unknown_state_lists_choices():
    with pytest.raises(UnknownState, match="GHZ"):
        named_state("nosuch")


def test_unknown_family_raises():
    with pytest.raises(UnknownState, match="Gabcd"):
        verstraete_state("Xy", (1.0,))


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        verstraete_state("Gabcd", (1.0,))
    with pytest.raises(ArityMismatch):
        verstraete_state("La4", (1.0, 2.0))
    with pytest.raises(ArityMismatch):
        verstraete_invariants_closed_form("Labc2", ())
