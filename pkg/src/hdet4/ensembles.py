"""Random four-qubit states and random-matrix ground states.

Each sample uses its own counter-based generator keyed by (seed, index),
so results are reproducible bit-for-bit and independent of evaluation
order or chunking.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .invariants import invariants_of, normalize
from .spectra import eig_hermitian
from .thermal import minimize_over_subspace

__all__ = [
    "STATE_KINDS",
    "MATRIX_KINDS",
    "sample_state",
    "sample_matrix",
    "ensemble_hdet_stats",
    "HDetStats",
]

STATE_KINDS = ("flat", "haar")
MATRIX_KINDS = ("goe", "gue", "gse")

# quaternion units embedded as 2x2 complex blocks
_Q_BLOCKS = (
    np.eye(2),
    np.array([[1j, 0.0], [0.0, -1j]]),
    np.array([[0.0, 1.0], [-1.0, 0.0]]),
    np.array([[0.0, 1j], [1j, 0.0]]),
)


def _rng_for(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.Philox(key=np.array([seed, index], dtype=np.uint64))
    )


def sample_state(kind: str, rng: np.random.Generator) -> np.ndarray:
    """One random normalized 16-amplitude state.

    "flat": real and imaginary parts drawn uniformly on [-1, 1];
    "haar": standard complex Gaussian amplitudes, giving the unitarily
    invariant distribution on the sphere.
    """
    if kind == "flat":
        u = rng.uniform(-1.0, 1.0, size=(16, 2))
    elif kind == "haar":
        u = rng.normal(size=(16, 2))
    else:
        raise ValueError(f"unknown state ensemble {kind!r}")
    return normalize(u[:, 0] + 1j * u[:, 1])


def sample_matrix(kind: str, rng: np.random.Generator) -> np.ndarray:
    """One 16x16 random Hermitian matrix from the named Gaussian ensemble.

    goe: (A + A^T)/2 with A real standard normal;
    gue: (A + A^dagger)/2 with A complex standard normal;
    gse: an 8x8 quaternion-Hermitian matrix embedded as 16x16 complex,
    whose spectrum is doubly degenerate (Kramers pairs).
    """
    if kind == "goe":
        a = rng.normal(size=(16, 16))
        return ((a + a.T) / 2.0).astype(complex)
    if kind == "gue":
        a = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
        return (a + a.conj().T) / 2.0
    if kind == "gse":
        a = rng.normal(size=(4, 8, 8))
        q = [
            (a[0] + a[0].T) / 2.0,
            (a[1] - a[1].T) / 2.0,
            (a[2] - a[2].T) / 2.0,
            (a[3] - a[3].T) / 2.0,
        ]
        m = np.zeros((16, 16), dtype=complex)
        for comp, block in zip(q, _Q_BLOCKS):
            m += np.kron(comp, block)
        return m
    raise ValueError(f"unknown matrix ensemble {kind!r}")


@dataclass
class HDetStats:
    """Summary of |hyperdeterminant| over an ensemble."""

    kind: str
    n: int
    seed: int
    samples: np.ndarray
    ground_multiplicities: Optional[np.ndarray] = None
    minimized: bool = False
    bin_edges: np.ndarray = field(
        default_factory=lambda: 10.0 ** np.linspace(-30.0, 0.0, 61)
    )

    @property
    def mean(self) -> float:
        return float(np.mean(self.samples))

    def frac_gt(self, threshold: float = 1e-8) -> float:
        return float(np.count_nonzero(self.samples > threshold)) / len(self.samples)

    def histogram(self):
        """(edges, counts) on logarithmic bins; out-of-range values are
        clamped into the end bins."""
        clipped = np.clip(self.samples, self.bin_edges[0], self.bin_edges[-1])
        counts, _ = np.histogram(clipped, bins=self.bin_edges)
        return self.bin_edges, counts

    @property
    def modal_ground_multiplicity(self) -> Optional[int]:
        if self.ground_multiplicities is None:
            return None
        return int(np.bincount(self.ground_multiplicities).argmax())

    def to_summary_dict(self, threshold: float = 1e-8) -> dict:
        out = {
            "kind": self.kind,
            "n": self.n,
            "seed": self.seed,
            "mean": self.mean,
            f"frac_gt_{threshold:g}": self.frac_gt(threshold),
        }
        if self.ground_multiplicities is not None:
            out["modal_ground_multiplicity"] = self.modal_ground_multiplicity
            out["minimized_over_ground_level"] = self.minimized
        return out


def _ground_hdet(h: np.ndarray, minimize: bool, seed: int, index: int):
    level = eig_hermitian(h).levels[0]
    if level.multiplicity > 1 and minimize:
        res = minimize_over_subspace(level.basis, which="hdet", seed=seed + index)
        return res.value, level.multiplicity
    return abs(invariants_of(level.basis[0]).hdet), level.multiplicity


def ensemble_hdet_stats(
    kind: str,
    n: int,
    seed: int = 0,
    minimize: bool = False,
    progress=None,
) -> HDetStats:
    """|hyperdeterminant| statistics over n draws from an ensemble.

    For state ensembles the value is computed directly on each draw; for
    matrix ensembles it is computed on the ground state returned by the
    solver.  With minimize=True a degenerate ground level is resolved by
    minimizing over the level instead of taking the solver's
    representative (the Kramers doublet of "gse" then yields values at
    the numerical floor, so the default reports the representative).
    """
    if kind not in STATE_KINDS + MATRIX_KINDS:
        raise ValueError(f"unknown ensemble {kind!r}")
    if n < 1:
        raise ValueError("n must be positive")
    vals = np.empty(n)
    mults = np.empty(n, dtype=int) if kind in MATRIX_KINDS else None
    for i in range(n):
        rng = _rng_for(seed, i)
        if kind in STATE_KINDS:
            vals[i] = abs(invariants_of(sample_state(kind, rng)).hdet)
        else:
            vals[i], mults[i] = _ground_hdet(
                sample_matrix(kind, rng), minimize, seed, i
            )
        if progress is not None and (i + 1) % 1000 == 0:
            progress(i + 1, n)
    return HDetStats(
        kind=kind,
        n=n,
        seed=seed,
        samples=vals,
        ground_multiplicities=mults,
        minimized=minimize,
    )
