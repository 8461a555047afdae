"""Polynomial entanglement invariants for 2-, 3- and 4-qubit pure states.

The central construction is an iterated lift: the determinant of a 2x2
amplitude matrix, lifted once (last index -> pencil variable) to a quadratic
whose discriminant gives the 3-qubit tangle, lifted again to a quartic P4(x)
whose classical invariants S (degree 8 in amplitudes) and T (degree 12)
combine into the degree-24 hyperdeterminant

    hdet = S**3 - 27*T**2.

Amplitude vectors are indexed row-major, qubit 1 leftmost:
``amps[8*i + 4*j + 2*k + l]`` is the coefficient of ``|i j k l>``.  All
pipeline functions accept any array-like of shape (..., 16) (or (..., 8),
(..., 4) for the smaller systems); leading axes are treated as a batch, and
exact scalar types (Fraction, mpmath) are supported through object arrays.
No function here normalizes its input: invariants are homogeneous (degrees
8, 12, 24), so callers working with unnormalized amplitudes divide by the
matching power of the norm.
"""

import math
from typing import NamedTuple

import mpmath
import numpy as np

from .errors import DegenerateJInvariant, NonUnitaryFactor
from .poly import QuarticBinomial, poly_add, poly_mul, quadratic_discriminant, quartic_st

__all__ = [
    "InvariantTriple",
    "normalize",
    "hdet2",
    "concurrence",
    "tangle_via_lift",
    "tangle_direct",
    "lift_p4",
    "invariants_of",
    "hdet4_magnitude",
    "j_invariant",
    "apply_local_unitary",
    "random_su2",
    "tensor_product",
]

_EPS = float(np.finfo(np.float64).eps)

# Terms of the 3-qubit hyperdeterminant as (coefficient, flat indices).
_HDET3_TERMS = [
    (1, (0, 0, 7, 7)),
    (1, (1, 1, 6, 6)),
    (1, (2, 2, 5, 5)),
    (1, (4, 4, 3, 3)),
    (-2, (0, 7, 3, 4)),
    (-2, (0, 7, 5, 2)),
    (-2, (0, 7, 6, 1)),
    (-2, (3, 4, 5, 2)),
    (-2, (3, 4, 6, 1)),
    (-2, (5, 2, 6, 1)),
    (4, (0, 6, 5, 3)),
    (4, (7, 1, 2, 4)),
]


class InvariantTriple(NamedTuple):
    """S, T and hdet = S**3 - 27*T**2 of one state (or a batch)."""

    s: complex
    t: complex
    hdet: complex

    @property
    def abs_s(self):
        return abs(self.s)

    @property
    def abs_t(self):
        return abs(self.t)

    @property
    def abs_hdet(self):
        return abs(self.hdet)


def normalize(amps):
    """Return amps scaled to unit norm."""
    a = np.asarray(amps, dtype=complex)
    n = np.linalg.norm(a, axis=-1, keepdims=True)
    return a / n


def hdet2(amps):
    """Determinant c00*c11 - c01*c10 of a 2-qubit amplitude vector."""
    c = np.asarray(amps)
    return c[..., 0] * c[..., 3] - c[..., 1] * c[..., 2]


def concurrence(amps):
    """Two-qubit concurrence 2*|hdet2|."""
    return 2 * abs(hdet2(amps))


def _lift3_quadratic(amps):
    """Quadratic P3(x): substitute c_ij -> b_ij0 + b_ij1*x into hdet2."""
    b = np.asarray(amps)
    pencil = lambda n: [b[..., 2 * n], b[..., 2 * n + 1]]  # noqa: E731
    c00, c01, c10, c11 = pencil(0), pencil(1), pencil(2), pencil(3)
    return poly_add(poly_mul(c00, c11), [-x for x in poly_mul(c01, c10)])


def tangle_via_lift(amps):
    """Three-tangle via the lift: 4 * discriminant of P3(x).

    Returned as a complex scalar whose magnitude is the tangle of the
    normalized state; the phase carries the sign information of the
    underlying discriminant.
    """
    return 4 * quadratic_discriminant(_lift3_quadratic(amps))


def tangle_direct(amps):
    """Three-tangle from the closed 12-term hyperdeterminant expression.

    Equivalent to the epsilon-tensor contraction; returns the non-negative
    tangle 4*|HDet3|.
    """
    b = np.asarray(amps)
    acc = 0
    for coeff, (i1, i2, i3, i4) in _HDET3_TERMS:
        acc = acc + coeff * b[..., i1] * b[..., i2] * b[..., i3] * b[..., i4]
    return 4 * abs(acc)


def lift_p4(amps) -> QuarticBinomial:
    """Lift a 4-qubit amplitude vector to its quartic P4(x).

    Substitutes t_ijk0 + t_ijk1*x for b_ijk in the raw-discriminant tangle
    expression: with the 2x2x2 pencil B(x), the determinant pencil in an
    auxiliary variable y is Q0(x) + Q1(x)*y + Q2(x)*y**2 and

        P4(x) = Q1**2 - 4*Q0*Q2.

    Returns the binomial-convention coefficients.  Works on batches
    (amps of shape (..., 16)) and on exact scalar types.
    """
    t = np.asarray(amps)
    pencil = lambda n: [t[..., 2 * n], t[..., 2 * n + 1]]  # noqa: E731
    # flat index of |ijk?> block: 8i + 4j + 2k
    b000, b001 = pencil(0), pencil(1)
    b010, b011 = pencil(2), pencil(3)
    b100, b101 = pencil(4), pencil(5)
    b110, b111 = pencil(6), pencil(7)

    neg = lambda p: [-x for x in p]  # noqa: E731
    q0 = poly_add(poly_mul(b000, b110), neg(poly_mul(b010, b100)))
    q2 = poly_add(poly_mul(b001, b111), neg(poly_mul(b011, b101)))
    q1 = poly_add(
        poly_add(poly_mul(b000, b111), poly_mul(b001, b110)),
        neg(poly_add(poly_mul(b010, b101), poly_mul(b011, b100))),
    )
    p4 = poly_add(poly_mul(q1, q1), [-4 * x for x in poly_mul(q0, q2)])
    return QuarticBinomial.from_poly(p4)


def invariants_of(amps, extended: bool = False) -> InvariantTriple:
    """S, T and hdet of a 4-qubit amplitude vector (or batch).

    With ``extended=True`` the whole pipeline is evaluated in 50-digit
    arithmetic (useful to certify whether a tiny hdet is an exact
    cancellation or a genuine small value); the returned entries are then
    mpmath numbers.
    """
    if extended:
        return _invariants_extended(amps)
    s, t = quartic_st(lift_p4(amps))
    return InvariantTriple(s, t, s ** 3 - 27 * t ** 2)


def _invariants_extended(amps, dps: int = 50) -> InvariantTriple:
    flat = np.asarray(amps, dtype=complex).reshape(-1)
    if flat.shape != (16,):
        raise ValueError("extended evaluation takes a single 16-amplitude state")
    with mpmath.workdps(dps):
        t = np.array([mpmath.mpc(z.real, z.imag) for z in flat], dtype=object)
        s, tt = quartic_st(lift_p4(t))
        return InvariantTriple(s, tt, s ** 3 - 27 * tt ** 2)


def _structurally_zero(abs_hdet: float, abs_s: float, eps: float = _EPS) -> bool:
    """Noise classification: true when |hdet| is below the cancellation floor."""
    return abs_hdet < max(1e-12, 1e6 * eps * abs_s ** 3)


def _certify_nonzero(amps, dps: int = 50):
    """Extended-precision recheck of a candidate structural zero.

    Returns the recomputed hdet (mpmath complex) when the value is genuinely
    nonzero at 50 digits, or None when it is an exact cancellation.
    """
    with mpmath.workdps(dps):
        tr = _invariants_extended(amps, dps=dps)
        eps = mpmath.mpf(10) ** (1 - dps)
        scale = max(1.0, float(abs(tr.s)) ** 3)
        if abs(tr.hdet) < 1e6 * eps * scale:
            return None
        return tr


def hdet4_magnitude(amps, extended: bool = False) -> float:
    """|hdet| with structural zeros snapped to exactly 0.0.

    In the default double-precision path, any value below the cancellation
    floor is reported as 0.  With ``extended=True`` such candidates are
    re-evaluated at 50 digits first, so genuine values around 1e-16 survive
    while exact cancellations still return 0.
    """
    tr = invariants_of(amps)
    if not _structurally_zero(abs(tr.hdet), abs(tr.s)):
        return abs(tr.hdet)
    if not extended:
        return 0.0
    certified = _certify_nonzero(amps)
    if certified is None:
        return 0.0
    return float(abs(certified.hdet))


def j_invariant(amps) -> complex:
    """J = S**3 / hdet.

    Raises DegenerateJInvariant when hdet is structurally zero (certified by
    the extended-precision path, so states whose hdet is tiny but genuine --
    e.g. 1e-16 -- still get a finite J).
    """
    tr = invariants_of(amps)
    if not _structurally_zero(abs(tr.hdet), abs(tr.s)):
        return tr.s ** 3 / tr.hdet
    certified = _certify_nonzero(amps)
    if certified is None:
        raise DegenerateJInvariant("hdet is structurally zero")
    return complex(certified.s ** 3 / certified.hdet)


def apply_local_unitary(amps, factors):
    """Apply U1 (x) U2 (x) U3 (x) U4 to a 4-qubit state.

    ``factors`` is a sequence of four 2x2 matrices; each must be unitary
    within 1e-12 or NonUnitaryFactor is raised.
    """
    us = [np.asarray(u, dtype=complex) for u in factors]
    if len(us) != 4:
        raise NonUnitaryFactor("expected exactly four single-qubit factors")
    eye = np.eye(2)
    for n, u in enumerate(us):
        if u.shape != (2, 2) or np.max(np.abs(u.conj().T @ u - eye)) > 1e-12:
            raise NonUnitaryFactor(f"factor {n} is not unitary within 1e-12")
    t = np.asarray(amps, dtype=complex).reshape(2, 2, 2, 2)
    out = np.einsum("ai,bj,ck,dl,ijkl->abcd", *us, t)
    return out.reshape(16)


def random_su2(rng) -> np.ndarray:
    """Haar-random SU(2) matrix from a normalized Gaussian quaternion."""
    v = rng.normal(size=4)
    a, b, c, d = v / np.linalg.norm(v)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def tensor_product(*states) -> np.ndarray:
    """Kronecker product of amplitude vectors (left factor = leftmost qubits)."""
    out = np.asarray(states[0], dtype=complex)
    for s in states[1:]:
        out = np.kron(out, np.asarray(s, dtype=complex))
    return out
