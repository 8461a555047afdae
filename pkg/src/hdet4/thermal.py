"""Thermal-ensemble invariants and minimization over degenerate levels.

A thermal average of |S|, |T| or |hyperdeterminant| needs a rule for
degenerate levels, where the invariants are gauge-dependent.  Three modes
are provided:

* "weighted-sum": average over the solver's eigenbasis as returned
  (gauge-dependent inside degenerate levels, cheap);
* "degenerate-min": replace each level's value by its minimum over the
  level, which is gauge-independent;
* "pure-min": minimize over the full Boltzmann-weighted superposition,
  i.e. over pure states whose per-level weights follow the thermal
  distribution.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .errors import NonOrthonormalBasis
from .invariants import invariants_of, normalize
from .spectra import eig_hermitian

__all__ = [
    "SubspaceMinResult",
    "minimize_over_subspace",
    "thermal_invariant",
    "clear_minimization_cache",
]

_PICKERS = {
    "s": lambda tr: tr.s,
    "t": lambda tr: tr.t,
    "hdet": lambda tr: tr.hdet,
    "hdet4": lambda tr: tr.hdet,
}


def _picker(which: str):
    try:
        return _PICKERS[which.lower()]
    except KeyError:
        raise ValueError(f"which must be one of S, T, hdet; got {which!r}") from None


def _angles_to_unit(x: np.ndarray, m: int) -> np.ndarray:
    """Hyperspherical angles + phases -> unit complex vector, first entry real."""
    theta = x[: m - 1]
    phi = x[m - 1 :]
    mag = np.ones(m)
    for i in range(m - 1):
        mag[i] *= math.cos(theta[i])
        mag[i + 1 :] *= math.sin(theta[i])
    out = mag.astype(complex)
    out[1:] *= np.exp(1j * phi)
    return out


def _basis_start(j: int, m: int) -> np.ndarray:
    """Angle vector reproducing the j-th basis vector."""
    x = np.zeros(2 * (m - 1))
    x[:j] = math.pi / 2.0
    return x


@dataclass
class SubspaceMinResult:
    """Outcome of minimizing an invariant magnitude over a subspace."""

    value: float
    coefficients: np.ndarray
    converged: bool
    restarts_used: int


def minimize_over_subspace(
    basis,
    which: str = "hdet",
    seed: int = 0,
    n_starts: int = 8,
    fatol: float = 1e-12,
    maxfev: int = 2000,
) -> SubspaceMinResult:
    """Minimize |invariant| over unit vectors in the span of `basis`.

    `basis` is an (m, dim) array with orthonormal rows.  The search runs
    Nelder-Mead from each basis vector plus n_starts seeded random points,
    parameterizing the coefficient vector by 2(m-1) real angles.
    """
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim != 2:
        raise NonOrthonormalBasis("basis must be a 2-D array of row vectors")
    m = basis.shape[0]
    gram = basis @ basis.conj().T
    if np.max(np.abs(gram - np.eye(m))) > 1e-10:
        raise NonOrthonormalBasis("basis rows are not orthonormal within 1e-10")
    pick = _picker(which)

    if m == 1:
        value = abs(pick(invariants_of(basis[0])))
        return SubspaceMinResult(value, np.array([1.0 + 0.0j]), True, 0)

    def objective(x):
        a = _angles_to_unit(x, m)
        return abs(pick(invariants_of(a @ basis)))

    rng = np.random.default_rng(seed)
    starts = [_basis_start(j, m) for j in range(m)]
    for _ in range(n_starts):
        x = np.empty(2 * (m - 1))
        x[: m - 1] = rng.uniform(0.0, math.pi / 2.0, m - 1)
        x[m - 1 :] = rng.uniform(0.0, 2.0 * math.pi, m - 1)
        starts.append(x)

    best_val = math.inf
    best_x = starts[0]
    converged = False
    for x0 in starts:
        res = optimize.minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"fatol": fatol, "xatol": 1e-10, "maxfev": maxfev},
        )
        if res.fun < best_val:
            best_val = float(res.fun)
            best_x = res.x
            converged = bool(res.success)
    return SubspaceMinResult(
        value=best_val,
        coefficients=_angles_to_unit(best_x, m),
        converged=converged,
        restarts_used=len(starts),
    )


# minimization results keyed by (matrix bytes, level index, which); the
# per-level minima do not depend on beta, so sweeps over temperature reuse them
_MIN_CACHE = {}


def clear_minimization_cache():
    _MIN_CACHE.clear()


def _level_minimum(h_key, idx, level, which, seed) -> float:
    key = (h_key, idx, which)
    if key not in _MIN_CACHE:
        if level.multiplicity == 1:
            val = abs(_picker(which)(invariants_of(level.basis[0])))
        else:
            val = minimize_over_subspace(level.basis, which=which, seed=seed).value
        _MIN_CACHE[key] = val
    return _MIN_CACHE[key]


def _pure_min(levels, weights, which, seed) -> float:
    """Minimize |invariant| over Boltzmann-weighted pure superpositions.

    The state is sum_l w_l (a_l . basis_l) with each a_l a unit vector in
    its level, normalized at the end; the a_l are parameterized by
    unconstrained real/imaginary parts and renormalized per level.
    """
    pick = _picker(which)
    # levels whose Boltzmann weight is below 1e-16 of the largest cannot
    # shift the normalized superposition at any digit we report
    w_max = max(weights)
    active = [
        (lv, w) for lv, w in zip(levels, weights) if w > 1e-16 * w_max
    ]
    sizes = [lv.multiplicity for lv, _ in active]
    total = sum(sizes)

    def build_state(x):
        z = x[:total] + 1j * x[total:]
        psi = np.zeros(active[0][0].basis.shape[1], dtype=complex)
        pos = 0
        for (lv, w), sz in zip(active, sizes):
            c = z[pos : pos + sz]
            pos += sz
            nrm = np.linalg.norm(c)
            if nrm < 1e-12:
                c = np.zeros(sz, dtype=complex)
                c[0] = 1.0
                nrm = 1.0
            psi = psi + w * ((c / nrm) @ lv.basis)
        return normalize(psi)

    def residuals(x):
        val = complex(pick(invariants_of(build_state(x))))
        return [val.real, val.imag]

    rng = np.random.default_rng(seed)
    x0_ground = np.zeros(2 * total)
    pos = 0
    for sz in sizes:
        x0_ground[pos] = 1.0
        pos += sz
    starts = [x0_ground] + [rng.normal(size=2 * total) for _ in range(4)]

    def run(x0):
        res = optimize.least_squares(
            residuals, x0, method="trf", xtol=1e-10, ftol=1e-10, gtol=1e-10,
            max_nfev=800,
        )
        return abs(complex(res.fun[0], res.fun[1]))

    best = math.inf
    for x0 in starts:
        best = min(best, run(x0))
        if best < 1e-13:
            break
    # a small-but-not-tiny best suggests a shallow local minimum sitting on
    # top of a true zero; spend extra starts only on those points
    extra = 0
    while 1e-10 < best < 1e-5 and extra < 8:
        best = min(best, run(rng.normal(size=2 * total)))
        extra += 1
    return best


def thermal_invariant(
    h,
    beta: float,
    mode: str = "degenerate-min",
    which: str = "S",
    degeneracy_tol=None,
    seed: int = 0,
) -> float:
    """Thermal average (or thermal minimum) of an invariant magnitude.

    Boltzmann weights use the shifted energies E - E0, so large beta is
    safe from underflow of the partition function.
    """
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    dec = eig_hermitian(np.asarray(h, dtype=complex), degeneracy_tol=degeneracy_tol)
    levels = dec.levels
    e0 = levels[0].energy
    weights = [math.exp(-beta * (lv.energy - e0)) for lv in levels]
    z = sum(lv.multiplicity * w for lv, w in zip(levels, weights))
    pick = _picker(which)

    if mode == "weighted-sum":
        acc = 0.0
        for lv, w in zip(levels, weights):
            if w == 0.0:
                continue
            for v in lv.basis:
                acc += w * abs(pick(invariants_of(v)))
        return acc / z

    if mode == "degenerate-min":
        h_key = np.asarray(h, dtype=complex).tobytes()
        acc = 0.0
        running_scale = 0.0
        for idx, (lv, w) in enumerate(zip(levels, weights)):
            # a level whose maximal possible contribution is negligible
            # relative to what is already accumulated can be skipped
            bound = lv.multiplicity * w * 4.0
            if running_scale > 0.0 and bound < 1e-15 * running_scale:
                continue
            val = _level_minimum(h_key, idx, lv, which, seed)
            acc += lv.multiplicity * w * val
            running_scale = max(running_scale, acc)
        return acc / z

    if mode == "pure-min":
        return _pure_min(levels, weights, which, seed)

    raise ValueError(
        f"mode must be weighted-sum, degenerate-min or pure-min; got {mode!r}"
    )
