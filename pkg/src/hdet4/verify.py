"""Built-in verification suites, runnable via the command line.

Each suite returns a list of (check-name, passed, detail) triples; the
runner prints one line per check and reports overall success.  The suites
are quick spot checks, not the full test suite.
"""

import math

import numpy as np

from . import models, states
from .invariants import (
    apply_local_unitary,
    invariants_of,
    normalize,
    random_su2,
    tangle_direct,
    tangle_via_lift,
    tensor_product,
)
from .poly import QuarticBinomial, poly_mul, quartic_hdet, quartic_st
from .spectra import eig_hermitian
from .thermal import minimize_over_subspace, thermal_invariant

__all__ = ["SUITES", "run_suites"]


def _check(name, ok, detail=""):
    return (name, bool(ok), detail)


def _suite_golden_states():
    out = []
    s0 = 1.0 / 192.0
    t0 = 1.0 / 13824.0
    for name in ("ghz", "c1", "c2", "c3"):
        tr = invariants_of(states.named_state(name))
        ok = (
            abs(tr.s - s0) < 1e-12
            and abs(tr.t + t0) < 1e-12
            and abs(tr.hdet) < 1e-12
        )
        out.append(_check(f"{name}: S=1/192, T=-1/13824, hdet=0", ok, f"S={tr.s}"))
    tr = invariants_of(states.named_state("yc"))
    ok = abs(tr.s - s0) < 1e-12 and abs(abs(tr.t) - t0) < 1e-12 and abs(tr.hdet) < 1e-12
    out.append(
        _check(
            "yc: S=1/192, |T|=1/13824, hdet=0",
            ok,
            f"T={complex(tr.t):.6e} (magnitude checked)",
        )
    )
    tr = invariants_of(states.named_state("w"))
    out.append(
        _check(
            "w: S=T=hdet=0",
            abs(tr.s) < 1e-12 and abs(tr.t) < 1e-12 and abs(tr.hdet) < 1e-12,
        )
    )
    hd_h = 1.0 / (2.0 ** 8 * 3.0 ** 9)
    for name in ("hd", "l"):
        tr = invariants_of(states.named_state(name))
        ok = (
            abs(tr.s) < 1e-12
            and abs(tr.t + 1.0 / 11664.0) < 1e-12
            and abs(abs(tr.hdet) - hd_h) < 1e-15
        )
        out.append(_check(f"{name}: S=0, T=-1/11664, |hdet|=1/(2^8 3^9)", ok))
    return out


def _suite_lu_invariance():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        psi = normalize(rng.normal(size=16) + 1j * rng.normal(size=16))
        us = [random_su2(rng) for _ in range(4)]
        a = invariants_of(psi)
        b = invariants_of(apply_local_unitary(psi, us))
        worst = max(worst, abs(a.s - b.s), abs(a.t - b.t))
    return [_check("S, T invariant under 200 random SU(2)^4", worst < 1e-10, f"max dev {worst:.2e}")]


def _suite_product_vanishing():
    rng = np.random.default_rng(11)
    worst = 0.0
    n = 600
    for i in range(n):
        kind = i % 3
        if kind == 0:  # one qubit split off
            q = normalize(rng.normal(size=2) + 1j * rng.normal(size=2))
            rest = normalize(rng.normal(size=8) + 1j * rng.normal(size=8))
            psi = np.kron(q, rest) if i % 2 else np.kron(rest, q)
        elif kind == 1:  # two-qubit times two-qubit
            a = normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
            b = normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
            psi = np.kron(a, b)
        else:  # fully product
            qs = [
                normalize(rng.normal(size=2) + 1j * rng.normal(size=2))
                for _ in range(4)
            ]
            psi = tensor_product(*qs)
        tr = invariants_of(psi)
        worst = max(worst, abs(tr.s), abs(tr.t), abs(tr.hdet))
    return [
        _check(
            f"S, T, hdet vanish on {n} product states", worst < 1e-12, f"max {worst:.2e}"
        )
    ]


def _suite_tangle():
    rng = np.random.default_rng(13)
    worst = 0.0
    for _ in range(500):
        psi = normalize(rng.normal(size=8) + 1j * rng.normal(size=8))
        worst = max(worst, abs(abs(tangle_via_lift(psi)) - tangle_direct(psi)))
    return [
        _check(
            "three-qubit tangle: lift vs direct on 500 states",
            worst < 1e-10,
            f"max dev {worst:.2e}",
        )
    ]


def _suite_homogeneity():
    rng = np.random.default_rng(17)
    t = rng.normal(size=16) + 1j * rng.normal(size=16)
    a = invariants_of(t)
    b = invariants_of(2.0 * t)
    ok = (
        abs(b.s - 2.0 ** 8 * a.s) < 1e-9 * abs(a.s) * 2 ** 8
        and abs(b.t - 2.0 ** 12 * a.t) < 1e-9 * abs(a.t) * 2 ** 12
        and abs(b.hdet - 2.0 ** 24 * a.hdet) < 1e-9 * abs(a.hdet) * 2 ** 24
    )
    return [_check("S, T, hdet homogeneous of degree 8, 12, 24", ok)]


def _suite_repeated_root():
    rng = np.random.default_rng(19)
    worst_ratio = 0.0
    eps = np.finfo(float).eps
    for _ in range(100):
        # quartic with an exact double root: (x - r)^2 (x - p)(x - q) with
        # dyadic-rational roots, so the expanded coefficients are exact and
        # the double root survives the representation
        r, p, q = (
            complex(a, b) / 8.0
            for a, b in rng.integers(-16, 17, size=(3, 2))
        )
        c = poly_mul(
            poly_mul([-r, 1.0], [-r, 1.0]), poly_mul([-p, 1.0], [-q, 1.0])
        )
        # scale by 6 so the binomial-form divisions by 4 and 6 stay exact
        quart = QuarticBinomial.from_poly([6.0 * ci for ci in c])
        s, _ = quartic_st(quart)
        h = quartic_hdet(quart)
        bound = 1e3 * eps * abs(s) ** 3
        if bound == 0.0:
            worst_ratio = max(worst_ratio, 0.0 if abs(h) == 0.0 else np.inf)
        else:
            worst_ratio = max(worst_ratio, abs(h) / bound)
    return [
        _check(
            "discriminant-type combination vanishes on double-root quartics",
            worst_ratio < 1.0,
            f"worst |hdet|/bound = {worst_ratio:.2e}",
        )
    ]


def _suite_xxz_cancellation():
    worst = 0.0
    for delta in np.linspace(-2.0, 2.0, 50):
        for energy, vec, _ in models.xxz_eigensystem_analytic(delta):
            tr = invariants_of(vec)
            worst = max(worst, abs(tr.hdet))
    return [
        _check(
            "hyperdeterminant vanishes on all XXZ eigenstates (50 deltas)",
            worst < 1e-12,
            f"max {worst:.2e}",
        )
    ]


def _suite_ising_spectrum():
    worst = 0.0
    for lam in (0.3, 0.7, 1.0, 1.1):
        numeric = eig_hermitian(models.ising_hamiltonian(lam)).energies
        analytic = np.sort(models.ising_energies_analytic(lam))
        worst = max(worst, float(np.max(np.abs(numeric - analytic))))
    return [
        _check(
            "Ising spectrum matches closed forms at four fields",
            worst < 1e-9,
            f"max dev {worst:.2e}",
        )
    ]


def _suite_hs_anchors():
    checks = []
    for alpha, delta, label in (
        (1e-6, -1.0, "alpha->0 vs delta=-1"),
        (0.25, 0.0, "alpha=1/4 vs delta=0"),
        (0.5, 1.0, "alpha=1/2 vs delta=1"),
    ):
        s_hs = models.hs_invariants_closed_form(alpha).s
        rows = models.xxz_eigensystem_analytic(delta)
        s_xxz = rows[0][2].s
        checks.append(
            _check(
                f"ground-state S: {label}",
                abs(s_hs - s_xxz) < 1e-6,
                f"{s_hs:.9e} vs {s_xxz:.9e}",
            )
        )
    return checks


def _suite_thermal_basic():
    h = models.xxz_hamiltonian(0.5)
    ws = thermal_invariant(h, 1.0, mode="weighted-sum", which="S")
    dm = thermal_invariant(h, 1.0, mode="degenerate-min", which="S")
    out = [_check("degenerate-min <= weighted-sum at (delta=0.5, beta=1)", dm <= ws + 1e-12, f"{dm:.3e} vs {ws:.3e}")]
    dec = eig_hermitian(h)
    avg = sum(
        lv.multiplicity * minimize_over_subspace(lv.basis, which="S").value
        for lv in dec.levels
    ) / 16.0
    b0 = thermal_invariant(h, 0.0, mode="degenerate-min", which="S")
    out.append(
        _check(
            "beta=0 equals the plain per-level average",
            abs(b0 - avg) < 1e-9,
            f"{b0:.6e} vs {avg:.6e}",
        )
    )
    return out


def _suite_ensembles_quick():
    from .ensembles import ensemble_hdet_stats

    flat = ensemble_hdet_stats("flat", 200, seed=3)
    haar = ensemble_hdet_stats("haar", 200, seed=3)
    return [
        _check(
            "flat-ensemble mean above haar-ensemble mean (200 draws)",
            flat.mean > haar.mean,
            f"{flat.mean:.2e} vs {haar.mean:.2e}",
        )
    ]


SUITES = {
    "golden-states": _suite_golden_states,
    "lu-invariance": _suite_lu_invariance,
    "product-vanishing": _suite_product_vanishing,
    "tangle-oracles": _suite_tangle,
    "homogeneity": _suite_homogeneity,
    "repeated-root": _suite_repeated_root,
    "xxz-cancellation": _suite_xxz_cancellation,
    "ising-spectrum": _suite_ising_spectrum,
    "hs-anchors": _suite_hs_anchors,
    "thermal-basic": _suite_thermal_basic,
    "ensembles-quick": _suite_ensembles_quick,
}


def run_suites(only=None, writer=print) -> bool:
    """Run the named suites (all by default); returns True if all passed."""
    names = list(SUITES) if not only else list(only)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    all_ok = True
    for name in names:
        for check_name, ok, detail in SUITES[name]():
            status = "ok" if ok else "FAIL"
            line = f"[{status:4s}] {name}: {check_name}"
            if detail:
                line += f"  ({detail})"
            writer(line)
            all_ok = all_ok and ok
    return all_ok
