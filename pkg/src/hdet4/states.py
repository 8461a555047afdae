"""Named 4-qubit states and the nine SLOCC family constructors.

Basis labels map to flat indices as ``|ijkl> -> 8*i + 4*j + 2*k + l``.
Family parameters may be complex; the closed-form invariants are polynomial
identities, so they hold for complex parameters as well.
"""

import cmath
import math

import numpy as np

from .errors import ArityMismatch, UnknownState
from .invariants import InvariantTriple

__all__ = [
    "named_state",
    "NAMED_STATES",
    "FAMILIES",
    "family_arity",
    "verstraete_state",
    "verstraete_invariants_closed_form",
]


def _idx(label: str) -> int:
    return int(label, 2)


def _from_amplitudes(pairs) -> np.ndarray:
    amps = np.zeros(16, dtype=complex)
    for label, value in pairs:
        amps[_idx(label)] += value
    return amps


def _unit(amps: np.ndarray) -> np.ndarray:
    return amps / np.linalg.norm(amps)


# ---------- named states ----------

_W3 = cmath.exp(2j * math.pi / 3)

_NAMED_BUILDERS = {
    "GHZ": lambda: _from_amplitudes([("0000", 1), ("1111", 1)]),
    "W": lambda: _from_amplitudes(
        [("0001", 1), ("0010", 1), ("0100", 1), ("1000", 1)]
    ),
    "C1": lambda: _from_amplitudes(
        [("0000", 1), ("0011", 1), ("1100", 1), ("1111", -1)]
    ),
    "C2": lambda: _from_amplitudes(
        [("0000", 1), ("0110", 1), ("1001", 1), ("1111", -1)]
    ),
    "C3": lambda: _from_amplitudes(
        [("0000", 1), ("0101", 1), ("1010", 1), ("1111", -1)]
    ),
    "YC": lambda: _from_amplitudes(
        [
            ("0000", 1),
            ("0011", -1),
            ("0101", -1),
            ("0110", 1),
            ("1001", 1),
            ("1010", 1),
            ("1100", 1),
            ("1111", 1),
        ]
    ),
    "HD": lambda: _from_amplitudes(
        [
            ("1000", 1),
            ("0100", 1),
            ("0010", 1),
            ("0001", 1),
            ("1111", math.sqrt(2)),
        ]
    ),
    "L": lambda: _from_amplitudes(
        [
            ("0000", 1 + _W3),
            ("1111", 1 + _W3),
            ("0011", 1 - _W3),
            ("1100", 1 - _W3),
            ("0101", _W3 ** 2),
            ("0110", _W3 ** 2),
            ("1001", _W3 ** 2),
            ("1010", _W3 ** 2),
        ]
    ),
}

NAMED_STATES = tuple(_NAMED_BUILDERS)


def named_state(name: str) -> np.ndarray:
    """Return the normalized amplitude vector of a named state.

    Known names: GHZ, W, C1, C2, C3, YC, HD, L (case-insensitive).
    """
    key = name.upper()
    if key not in _NAMED_BUILDERS:
        raise UnknownState(f"unknown state {name!r}; known: {', '.join(NAMED_STATES)}")
    return _unit(_NAMED_BUILDERS[key]())


# ---------- SLOCC families ----------

def _amps_gabcd(a, b, c, d):
    return _from_amplitudes(
        [
            ("0000", (a + d) / 2),
            ("1111", (a + d) / 2),
            ("0011", (a - d) / 2),
            ("1100", (a - d) / 2),
            ("0101", (b + c) / 2),
            ("1010", (b + c) / 2),
            ("0110", (b - c) / 2),
            ("1001", (b - c) / 2),
        ]
    )


def _closed_gabcd(a, b, c, d):
    s = (
        (b * b - c * c) ** 2 * (a * a - d * d) ** 2
        + (a * a - b * b) * (b * b - c * c) * (a * a - d * d) * (c * c - d * d)
        + (a * a - b * b) ** 2 * (c * c - d * d) ** 2
    ) / 12
    k = (a * c + b * d) ** 2 + (a * b + c * d) ** 2 - 2 * (b * c + a * d) ** 2
    t = (
        k
        * (k * k - 9 * (b - c) ** 2 * (b + c) ** 2 * (a - d) ** 2 * (a + d) ** 2)
        / 1728
    )
    h = (
        (a * a - b * b) ** 2
        * (a * a - c * c) ** 2
        * (b * b - c * c) ** 2
        * (a * a - d * d) ** 2
        * (b * b - d * d) ** 2
        * (c * c - d * d) ** 2
        / 256
    )
    return s, t, h


def _amps_labc2(a, b, c):
    return _from_amplitudes(
        [
            ("0000", (a + b) / 2),
            ("1111", (a + b) / 2),
            ("0011", (a - b) / 2),
            ("1100", (a - b) / 2),
            ("0101", c),
            ("1010", c),
            ("0110", 1),
        ]
    )


def _closed_labc2(a, b, c):
    s = (a * a - c * c) ** 2 * (c * c - b * b) ** 2 / 12
    t = (a * a - c * c) ** 3 * (c * c - b * b) ** 3 / 216
    return s, t, s ** 3 - 27 * t ** 2


def _amps_la2b2(a, b):
    return _from_amplitudes(
        [
            ("0000", a),
            ("1111", a),
            ("0101", b),
            ("1010", b),
            ("0110", 1),
            ("0011", 1),
        ]
    )


def _closed_la2b2(a, b):
    # P4(x) for this state is ((a^2-b^2) x)^2, hence these powers
    s = (a * a - b * b) ** 4 / 12
    t = -((a * a - b * b) ** 6) / 216
    return s, t, s ** 3 - 27 * t ** 2


def _amps_la2_03p1(a):
    return _from_amplitudes(
        [("0000", a), ("1111", a), ("0011", 1), ("0101", 1), ("0110", 1)]
    )


def _closed_la2_03p1(a):
    s = a ** 8 / 12
    t = -(a ** 12) / 216
    return s, t, s ** 3 - 27 * t ** 2


def _amps_lab3(a, b):
    r = 1j / math.sqrt(2)
    return _from_amplitudes(
        [
            ("0000", a),
            ("1111", a),
            ("0101", (a + b) / 2),
            ("1010", (a + b) / 2),
            ("0110", (a - b) / 2),
            ("1001", (a - b) / 2),
            ("0001", r),
            ("0010", r),
            ("0111", r),
            ("1011", r),
        ]
    )


def _amps_la4(a):
    return _from_amplitudes(
        [
            ("0000", a),
            ("0101", a),
            ("1010", a),
            ("1111", a),
            ("0001", 1j),
            ("0110", 1),
            ("1011", -1j),
        ]
    )


def _amps_l05p3():
    return _from_amplitudes([("0000", 1), ("0101", 1), ("1000", 1), ("1110", 1)])


def _amps_l07p1():
    return _from_amplitudes([("0000", 1), ("1011", 1), ("1101", 1), ("1110", 1)])


def _amps_l03p1_03p1():
    return _from_amplitudes([("0000", 1), ("0111", 1)])


def _closed_zero(*_params):
    return 0j, 0j, 0j


# family -> (arity, amplitude builder, closed-form (S, T, hdet) of the raw amplitudes)
_FAMILY_TABLE = {
    "Gabcd": (4, _amps_gabcd, _closed_gabcd),
    "Labc2": (3, _amps_labc2, _closed_labc2),
    "La2b2": (2, _amps_la2b2, _closed_la2b2),
    "La2_03p1": (1, _amps_la2_03p1, _closed_la2_03p1),
    "Lab3": (2, _amps_lab3, _closed_zero),
    "La4": (1, _amps_la4, _closed_zero),
    "L05p3": (0, _amps_l05p3, _closed_zero),
    "L07p1": (0, _amps_l07p1, _closed_zero),
    "L03p1_03p1": (0, _amps_l03p1_03p1, _closed_zero),
}

FAMILIES = tuple(_FAMILY_TABLE)

# families whose S, T and hdet vanish identically
ZERO_FAMILIES = ("Lab3", "La4", "L05p3", "L07p1", "L03p1_03p1")

_CANONICAL = {name.lower(): name for name in _FAMILY_TABLE}


def _resolve_family(family: str):
    key = family.lower()
    if key not in _CANONICAL:
        raise UnknownState(
            f"unknown family {family!r}; known: {', '.join(FAMILIES)}"
        )
    return _FAMILY_TABLE[_CANONICAL[key]]


def family_arity(family: str) -> int:
    """Number of complex parameters the family takes."""
    return _resolve_family(family)[0]


def _check_arity(family, arity, params):
    if len(params) != arity:
        raise ArityMismatch(
            f"family {family} takes {arity} parameter(s), got {len(params)}"
        )


def verstraete_state(family: str, params=()) -> np.ndarray:
    """Normalized representative of one of the nine SLOCC families."""
    arity, build, _ = _resolve_family(family)
    _check_arity(family, arity, params)
    return _unit(build(*params))


def verstraete_invariants_closed_form(family: str, params=()) -> InvariantTriple:
    """Closed-form (S, T, hdet) of the normalized family representative.

    The published closed forms are stated for the raw (unnormalized) family
    amplitudes; S, T and hdet are homogeneous of degrees 8, 12 and 24, so the
    values here are divided by the matching powers of the squared norm.
    """
    arity, build, closed = _resolve_family(family)
    _check_arity(family, arity, params)
    s_raw, t_raw, h_raw = closed(*params)
    n2 = float(np.sum(np.abs(build(*params)) ** 2))
    return InvariantTriple(s_raw / n2 ** 4, t_raw / n2 ** 6, h_raw / n2 ** 12)
