"""Four-site spin-chain models: Hamiltonians, exact spectra, and invariants.

Covers the periodic transverse-field Ising chain, the XXZ/Heisenberg chain,
and the Haldane-Shastry ground-state family (uniform and dimerized), all on
four sites.  Exact eigenvectors and closed-form invariant values are
provided alongside the Hamiltonian builders so numeric results can be
checked against analytic ones.
"""

import math

import numpy as np

from .errors import InvalidCoupling, OutOfOrderingRange, SingularAtZeroField
from .invariants import InvariantTriple, invariants_of, normalize

__all__ = [
    "ising_hamiltonian",
    "ising_energies_analytic",
    "ising_eigenstate_analytic",
    "ising_branch_state",
    "ising_invariants_analytic",
    "ISING_ORDER_LAMBDA_MAX",
    "xxz_hamiltonian",
    "xxz_eigensystem_analytic",
    "heisenberg_energy",
    "rvb_state",
    "rvb_superposition",
    "hs_state",
    "hs_invariants_closed_form",
    "hs_dimerized_state",
    "hs_dimerized_invariants_closed_form",
]

_ID = np.eye(2)
_SX = np.array([[0.0, 1.0], [1.0, 0.0]])
_SY = np.array([[0.0, -1.0j], [0.0 + 1.0j, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])


def _site_op(op, site):
    mats = [_ID] * 4
    mats[site] = op
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def _bond_sum(op):
    """Sum of op_i op_{i+1} over the four periodic bonds."""
    total = np.zeros((16, 16), dtype=complex)
    for i in range(4):
        total += _site_op(op, i) @ _site_op(op, (i + 1) % 4)
    return total


def _ket(label: str, amp=1.0) -> np.ndarray:
    v = np.zeros(16, dtype=complex)
    v[int(label, 2)] = amp
    return v


def _combo(*pairs) -> np.ndarray:
    v = np.zeros(16, dtype=complex)
    for label, amp in pairs:
        v[int(label, 2)] += amp
    return v


# ---------------------------------------------------------------------------
# transverse-field Ising chain
# ---------------------------------------------------------------------------

# above this field the analytic level ordering used here starts to cross
ISING_ORDER_LAMBDA_MAX = 2.0 / math.sqrt(3.0)


def ising_hamiltonian(lam: float) -> np.ndarray:
    """H = -sum_i sx_i sx_{i+1} - lam * sum_i sz_i on four periodic sites."""
    h = -_bond_sum(_SX)
    for i in range(4):
        h -= lam * _site_op(_SZ, i)
    return h


def _ising_roots(lam: float):
    """(lam', lam'', sqrt(lam''), u_plus, u_minus) with a cancellation-free u_minus."""
    lp = 1.0 + lam * lam
    lpp = 1.0 + lam ** 4
    sq = math.sqrt(lpp)
    up = math.sqrt(lp + sq)
    # lp - sq == 2 lam^2 / (lp + sq), exact and stable for small lam
    um = lam * math.sqrt(2.0 / (lp + sq))
    return lp, lpp, sq, up, um


def ising_energies_analytic(lam: float) -> np.ndarray:
    """The sixteen closed-form energies, in the fixed branch order.

    The order coincides with ascending energy for 0 < lam < 2/sqrt(3); past
    that field the -2*lam pair crosses the sqrt branch above it.
    """
    lp, _, _, up, um = _ising_roots(lam)
    s2 = math.sqrt(2.0)
    rp = math.sqrt(lp)
    e = [
        -2.0 * s2 * up,
        -2.0 * (rp + 1.0),
        -2.0 * s2 * um,
        -2.0 * lam,
        -2.0 * lam,
        -2.0 * (rp - 1.0),
        0.0,
        0.0,
        0.0,
        0.0,
        2.0 * (rp - 1.0),
        2.0 * lam,
        2.0 * lam,
        2.0 * s2 * um,
        2.0 * (rp + 1.0),
        2.0 * s2 * up,
    ]
    return np.array(e)


_ISING_EVEN_LEVELS = (0, 2, 13, 15)


def _ising_abg(level: int, lam: float):
    """Amplitudes (alpha, beta, gamma) of the even-sector eigenvectors.

    The vector is alpha|0000> + beta(|0011>+|0110>+|1001>+|1100>)
    + gamma(|0101>+|1010>) + |1111>, unnormalized.
    """
    lp, _, sq, up, um = _ising_roots(lam)
    s2 = math.sqrt(2.0)
    if level in (0, 15):
        sgn = 1.0 if level == 0 else -1.0
        u = up
        alpha = (
            2.0 * lam ** 3
            + sgn * s2 * lam * lam * u
            - sgn * s2 * u * (1.0 - sq)
            - lam * (1.0 - 2.0 * sq)
        ) / lam
        beta = lam + sgn * u / s2
        gamma = 1.0 + sgn * s2 * lam / u
    else:  # level in (2, 13)
        sgn = 1.0 if level == 2 else -1.0
        u = um
        alpha = (
            2.0 * lam ** 3
            + sgn * s2 * lam * lam * u
            - sgn * s2 * u * (1.0 + sq)
            - lam * (1.0 + 2.0 * sq)
        ) / lam
        beta = lam + sgn * u / s2
        # s2 * lam / um == sqrt(lp + sq), which stays finite as lam -> 0
        gamma = 1.0 + sgn * math.sqrt(lp + sq)
    return alpha, beta, gamma


def _ising_abg_limit0(level: int):
    """lam -> 0 limits of the even-sector amplitudes (branch continuation)."""
    s2 = math.sqrt(2.0)
    return {
        0: (1.0, 1.0, 1.0),
        15: (1.0, -1.0, 1.0),
        2: (-3.0 - 2.0 * s2, 0.0, 1.0 + s2),
        13: (2.0 * s2 - 3.0, 0.0, 1.0 - s2),
    }[level]


def _ising_even_vector(alpha, beta, gamma) -> np.ndarray:
    return _combo(
        ("0000", alpha),
        ("0011", beta),
        ("0110", beta),
        ("1001", beta),
        ("1100", beta),
        ("0101", gamma),
        ("1010", gamma),
        ("1111", 1.0),
    )


def _ising_raw_state(level: int, lam: float) -> np.ndarray:
    """Unnormalized eigenvector of branch `level` for lam > 0."""
    lp = 1.0 + lam * lam
    rp = math.sqrt(lp)
    if level in _ISING_EVEN_LEVELS:
        return _ising_even_vector(*_ising_abg(level, lam))
    if level in (1, 10):
        c = lam + rp if level == 1 else lam - rp
        return _combo(
            ("0001", c),
            ("0010", c),
            ("0100", c),
            ("1000", c),
            ("0111", 1.0),
            ("1011", 1.0),
            ("1101", 1.0),
            ("1110", 1.0),
        )
    if level in (5, 14):
        c = lam + rp if level == 5 else lam - rp
        return _combo(
            ("0001", -c),
            ("0010", c),
            ("0100", -c),
            ("1000", c),
            ("0111", -1.0),
            ("1011", 1.0),
            ("1101", -1.0),
            ("1110", 1.0),
        )
    fixed = {
        3: (("0010", -1.0), ("1000", 1.0)),
        4: (("0001", -1.0), ("0100", 1.0)),
        6: (("0011", -1.0), ("1100", 1.0)),
        7: (("0011", -1.0), ("0110", 1.0)),
        8: (("0011", -1.0), ("1001", 1.0)),
        9: (("0101", -1.0), ("1010", 1.0)),
        11: (("1011", -1.0), ("1110", 1.0)),
        12: (("0111", -1.0), ("1101", 1.0)),
    }
    return _combo(*fixed[level])


def _check_ising_level(level):
    if not isinstance(level, (int, np.integer)) or not 0 <= level <= 15:
        raise ValueError(f"level must be an integer in 0..15, got {level!r}")


def ising_eigenstate_analytic(level: int, lam: float, check_order: bool = True) -> np.ndarray:
    """Normalized closed-form eigenvector of the Ising chain.

    `level` indexes the fixed analytic branch order, which equals the
    ascending-energy order only for 0 < lam < 2/sqrt(3); outside that
    window OutOfOrderingRange is raised unless check_order=False (the
    vectors themselves remain valid eigenvectors for any lam > 0).  The
    four even-sector branches 0, 2, 13, 15 have a 1/lam prefactor, so
    lam = 0 raises SingularAtZeroField for them.
    """
    _check_ising_level(level)
    if lam == 0.0 and level in _ISING_EVEN_LEVELS:
        raise SingularAtZeroField(
            f"branch {level} has a 1/lam prefactor; use the numeric solver at lam=0"
        )
    if check_order and not 0.0 < lam < ISING_ORDER_LAMBDA_MAX:
        raise OutOfOrderingRange(
            f"analytic branch order holds only for 0 < lam < 2/sqrt(3), got {lam}"
        )
    return normalize(_ising_raw_state(level, lam))


def ising_branch_state(level: int, lam: float) -> np.ndarray:
    """Branch-continued eigenvector for any lam >= 0 (normalized).

    Identical to ising_eigenstate_analytic without the ordering window;
    at lam = 0 the even-sector branches are replaced by their analytic
    limits, which keeps parameter sweeps continuous through the
    doubly-degenerate zero-field ground level.
    """
    _check_ising_level(level)
    if lam == 0.0 and level in _ISING_EVEN_LEVELS:
        return normalize(_ising_even_vector(*_ising_abg_limit0(level)))
    return ising_eigenstate_analytic(level, lam, check_order=False)


def _ising_even_invariants(alpha, beta, gamma) -> InvariantTriple:
    """Closed-form invariants of the even-sector vector (normalized)."""
    a, b, g2 = alpha, beta, gamma * gamma
    big_gamma = (
        a * a * (a - 4.0 * b * b) ** 2
        - 4.0 * a * (a * a - 2.0 * a * b * b - 56.0 * b ** 4) * g2
        + 2.0 * (3.0 * a * a + 4.0 * a * b * b + 8.0 * b ** 4) * g2 * g2
        - 4.0 * (a + 2.0 * b * b) * g2 ** 3
        + g2 ** 4
    )
    nq = (1.0 + a * a + 4.0 * b * b + 2.0 * g2) ** 2
    s = big_gamma / (12.0 * nq * nq)
    t = (
        (4.0 * b * b * (a + g2) - (a - g2) ** 2)
        * (big_gamma - 768.0 * a * b ** 4 * g2)
        / (216.0 * nq ** 3)
    )
    return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)


def ising_invariants_analytic(level: int, lam: float, check_order: bool = True) -> InvariantTriple:
    """Closed-form (S, T, hyperdeterminant) for each Ising eigenstate."""
    _check_ising_level(level)
    if check_order and not 0.0 < lam < ISING_ORDER_LAMBDA_MAX:
        raise OutOfOrderingRange(
            f"analytic branch order holds only for 0 < lam < 2/sqrt(3), got {lam}"
        )
    if level in (3, 4, 7, 8, 11, 12):
        return InvariantTriple(0.0, 0.0, 0.0)
    if level in (1, 5, 10, 14):
        lp = 1.0 + lam * lam
        s = 1.0 / (192.0 * lp * lp)
        t = -1.0 / (13824.0 * lp ** 3)
        return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)
    if level in (6, 9):
        s = 1.0 / 192.0
        t = -1.0 / 13824.0
        return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)
    if lam == 0.0:
        alpha, beta, gamma = _ising_abg_limit0(level)
    else:
        alpha, beta, gamma = _ising_abg(level, lam)
    return _ising_even_invariants(alpha, beta, gamma)


# ---------------------------------------------------------------------------
# XXZ / Heisenberg chain
# ---------------------------------------------------------------------------


def xxz_hamiltonian(delta: float) -> np.ndarray:
    """H = sum_i (sx sx + sy sy + delta * sz sz) on four periodic sites."""
    return _bond_sum(_SX) + _bond_sum(_SY).real + delta * _bond_sum(_SZ)


def _xxz_w_state(w: float) -> np.ndarray:
    return _combo(
        ("0011", 1.0),
        ("0110", 1.0),
        ("1100", 1.0),
        ("1001", 1.0),
        ("0101", w),
        ("1010", w),
    )


def _xxz_branch_invariants(delta: float, sign: float) -> InvariantTriple:
    """Invariants of the singlet branch with energy -2(delta + sign*r).

    Written exactly as the closed forms are usually quoted; both collapse
    to (4 - delta*(delta + sign*r))^2 / (768 r^4) and its T analogue.
    """
    r = math.sqrt(8.0 + delta * delta)
    a = delta + sign * r  # appears in the numerator
    b = delta - sign * r  # appears through the norm in the denominator
    fac = 4.0 - delta * b
    den = 8.0 + delta * a
    s = a ** 4 * fac * fac / (768.0 * den ** 4)
    t = a ** 6 * fac ** 3 / (110592.0 * den ** 6)
    return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)


_ZERO_TRIPLE = InvariantTriple(0.0, 0.0, 0.0)
_SINGLE_192 = None  # filled lazily below


def _triple_192() -> InvariantTriple:
    s = 1.0 / 192.0
    t = -1.0 / 13824.0
    return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)


def xxz_eigensystem_analytic(delta: float):
    """All sixteen closed-form (energy, state, invariants) rows.

    The row order is fixed (branch-stable across delta), not sorted by
    energy: rows 0 and 15 are the two singlet-sector branches
    -2(delta ± r) with r = sqrt(8 + delta^2); the energies of the other
    fourteen rows are delta-independent up to the factors shown.
    """
    r = math.sqrt(8.0 + delta * delta)
    i2 = 1.0 / math.sqrt(2.0)
    rows = []
    # branch with energy -2(delta + r): ground state for delta > -1
    rows.append(
        (
            -2.0 * (delta + r),
            normalize(_xxz_w_state(-(delta + r) / 2.0)),
            _xxz_branch_invariants(delta, -1.0),
        )
    )
    rows.append(
        (
            -4.0,
            _combo(("0111", 0.5), ("1011", -0.5), ("1101", 0.5), ("1110", -0.5)),
            _ZERO_TRIPLE,
        )
    )
    rows.append(
        (
            -4.0,
            _combo(("0001", 0.5), ("0010", -0.5), ("0100", 0.5), ("1000", -0.5)),
            _ZERO_TRIPLE,
        )
    )
    rows.append(
        (-4.0 * delta, _combo(("0101", i2), ("1010", -i2)), _triple_192())
    )
    for a, b in (
        ("0111", "1101"),
        ("1011", "1110"),
        ("1001", "1100"),
        ("0001", "0100"),
        ("0110", "1100"),
        ("0010", "1000"),
    ):
        rows.append((0.0, _combo((a, i2), (b, -i2)), _ZERO_TRIPLE))
    rows.append((0.0, _combo(("0011", i2), ("1100", -i2)), _triple_192()))
    rows.append((4.0 * delta, _ket("0000"), _ZERO_TRIPLE))
    rows.append((4.0 * delta, _ket("1111"), _ZERO_TRIPLE))
    rows.append(
        (
            4.0,
            _combo(("0111", 0.5), ("1011", 0.5), ("1101", 0.5), ("1110", 0.5)),
            _ZERO_TRIPLE,
        )
    )
    rows.append(
        (
            4.0,
            _combo(("0001", 0.5), ("0010", 0.5), ("0100", 0.5), ("1000", 0.5)),
            _ZERO_TRIPLE,
        )
    )
    # branch with energy -2(delta - r): highest singlet
    rows.append(
        (
            -2.0 * (delta - r),
            normalize(_xxz_w_state(-(delta - r) / 2.0)),
            _xxz_branch_invariants(delta, 1.0),
        )
    )
    return rows


def heisenberg_energy(s13, s24, s_total) -> float:
    """Energy of the isotropic chain from the total-spin quantum numbers.

    The four-site Heisenberg chain decomposes via the spins s13 and s24 of
    the two diagonals (each 0 or 1) coupled to total spin s_total; the
    energy is 2[s(s+1) - s13(s13+1) - s24(s24+1)].
    """
    for name, val in (("s13", s13), ("s24", s24)):
        if val not in (0, 1):
            raise InvalidCoupling(f"{name} must be 0 or 1, got {val!r}")
    if s_total not in range(abs(s13 - s24), s13 + s24 + 1):
        raise InvalidCoupling(
            f"s_total={s_total!r} not in |s13-s24|..s13+s24 for s13={s13}, s24={s24}"
        )
    return 2.0 * (
        s_total * (s_total + 1) - s13 * (s13 + 1) - s24 * (s24 + 1)
    )


# ---------------------------------------------------------------------------
# resonating-valence-bond and Haldane-Shastry states
# ---------------------------------------------------------------------------


def rvb_state(which: int) -> np.ndarray:
    """The two dimer-covering states of the four-site ring (normalized).

    which=1: nearest-neighbour coverings combined symmetrically,
    which=2: the crossed covering.
    """
    if which == 1:
        return normalize(
            _combo(
                ("0011", 1.0),
                ("0110", 1.0),
                ("1100", 1.0),
                ("1001", 1.0),
                ("0101", -2.0),
                ("1010", -2.0),
            )
        )
    if which == 2:
        return _combo(("0011", 0.5), ("0110", -0.5), ("1001", -0.5), ("1100", 0.5))
    raise ValueError(f"which must be 1 or 2, got {which!r}")


def rvb_superposition(theta: float, phi: float) -> np.ndarray:
    """cos(theta)|rvb1> + e^{i phi} sin(theta)|rvb2>; S = T = 0 throughout."""
    return math.cos(theta) * rvb_state(1) + np.exp(1j * phi) * math.sin(
        theta
    ) * rvb_state(2)


def _check_hs_alpha(alpha: float):
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2], got {alpha}")


def hs_state(alpha: float) -> np.ndarray:
    """Inverse-square-exchange ground state on four sites (normalized).

    Amplitude 4^{-alpha} on the four nearest-neighbour singlet
    configurations and -1 on the two antipodal ones.  alpha = 1/4 matches
    the XX chain ground state, alpha = 1/2 the isotropic Heisenberg one.
    """
    _check_hs_alpha(alpha)
    a = 4.0 ** (-alpha)
    return normalize(
        _combo(
            ("0011", a),
            ("0110", a),
            ("1001", a),
            ("1100", a),
            ("0101", -1.0),
            ("1010", -1.0),
        )
    )


def hs_invariants_closed_form(alpha: float) -> InvariantTriple:
    """Closed-form invariants of hs_state; S^3 = 27 T^2 identically."""
    _check_hs_alpha(alpha)
    p = 16.0 ** alpha
    s = 4.0 ** (4.0 * alpha - 3.0) * (p - 4.0) ** 2 / (3.0 * (2.0 + p) ** 4)
    t = 8.0 ** (4.0 * alpha - 3.0) * (p - 4.0) ** 3 / (-27.0 * (2.0 + p) ** 6)
    return InvariantTriple(s, t, s ** 3 - 27.0 * t * t)


def _hs_dimer_amplitudes(alpha: float, delta: float):
    """Stable amplitudes (a1, a2, a3) of the dimerized state.

    a1 = -4^{-alpha} |cos + sin|^{4 alpha} on |0011>+|1100>,
    a2 = 1 on |0101>+|1010>,
    a3 = -4^{-alpha} |cos - sin|^{4 alpha} on |0110>+|1001>,
    with cos = cos(pi delta / 2), sin = sin(pi delta / 2).  This form stays
    finite for every delta and reduces to the uniform state at delta = 0.
    """
    c = math.cos(math.pi * delta / 2.0)
    s = math.sin(math.pi * delta / 2.0)
    scale = 4.0 ** (-alpha)
    a1 = -scale * abs(c + s) ** (4.0 * alpha)
    a3 = -scale * abs(c - s) ** (4.0 * alpha)
    return a1, 1.0, a3


def hs_dimerized_state(alpha: float, delta: float) -> np.ndarray:
    """Dimerized inverse-square-exchange state (normalized).

    delta is the dimerization; delta = 0 recovers hs_state(alpha) up to a
    global sign, delta = ±1/2 gives a pure dimer pattern, and the family
    is periodic in delta with period 1 up to relabeling.
    """
    _check_hs_alpha(alpha)
    a1, a2, a3 = _hs_dimer_amplitudes(alpha, delta)
    return normalize(
        _combo(
            ("0011", a1),
            ("1100", a1),
            ("0101", a2),
            ("1010", a2),
            ("0110", a3),
            ("1001", a3),
        )
    )


def hs_dimerized_invariants_closed_form(alpha: float, delta: float) -> InvariantTriple:
    """Closed-form invariants of the dimerized state; the
    hyperdeterminant vanishes identically on this family."""
    _check_hs_alpha(alpha)
    a1, a2, a3 = _hs_dimer_amplitudes(alpha, delta)
    e = (
        a1 ** 4
        + (a2 * a2 - a3 * a3) ** 2
        - 2.0 * a1 * a1 * (a2 * a2 + a3 * a3)
    )
    n2 = a1 * a1 + a2 * a2 + a3 * a3
    s = e * e / (192.0 * n2 ** 4)
    t = -(e ** 3) / (13824.0 * n2 ** 6)
    return InvariantTriple(s, t, 0.0)
