"""Dense univariate polynomial arithmetic and quartic invariants.

Polynomials are plain sequences of coefficients, index k = coefficient of
x**k.  The leading coefficient may be zero (degrees are formal).  All
operations are scalar-type agnostic: coefficients may be Python complex,
`fractions.Fraction`, `mpmath` numbers, or numpy arrays of any of these
(arrays make every operation an elementwise batch operation), so the same
code path serves fast float evaluation, exact rational verification, and
extended-precision evaluation.

The quartic invariants S and T follow the binomial-coefficient convention

    P4(x) = b0*x**4 + 4*b1*x**3 + 6*b2*x**2 + 4*b3*x + b4

under which S and T are degree-2 and degree-3 forms in the ``b`` and the
combination S**3 - 27*T**2 is 1/256 times the root-product discriminant
``b0**6 * prod_{i<j} (r_i - r_j)**2``.
"""

from typing import NamedTuple, Sequence

__all__ = [
    "poly_add",
    "poly_mul",
    "quadratic_discriminant",
    "QuarticBinomial",
    "quartic_st",
    "quartic_hdet",
]


def poly_add(a: Sequence, b: Sequence) -> list:
    """Coefficient-wise sum; result length is max(len(a), len(b))."""
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else 0
        y = b[k] if k < len(b) else 0
        out.append(x + y)
    return out


def poly_mul(a: Sequence, b: Sequence) -> list:
    """Coefficient convolution; formal degrees add."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def quadratic_discriminant(p: Sequence):
    """Discriminant q1**2 - 4*q0*q2 of q0 + q1*x + q2*x**2.

    Missing coefficients are treated as zero, so constant and linear
    polynomials are accepted.
    """
    q0 = p[0] if len(p) > 0 else 0
    q1 = p[1] if len(p) > 1 else 0
    q2 = p[2] if len(p) > 2 else 0
    return q1 * q1 - 4 * q0 * q2


class QuarticBinomial(NamedTuple):
    """Quartic in binomial convention: b0*x^4 + 4*b1*x^3 + 6*b2*x^2 + 4*b3*x + b4."""

    b0: complex
    b1: complex
    b2: complex
    b3: complex
    b4: complex

    @classmethod
    def from_poly(cls, coeffs: Sequence) -> "QuarticBinomial":
        """Convert raw ascending coefficients (formal degree <= 4).

        The x^3, x^2, x^1 coefficients are divided by 4, 6, 4.  With
        Fraction coefficients the division is exact.
        """
        c = list(coeffs) + [0] * (5 - len(coeffs))
        if len(c) > 5:
            raise ValueError("formal degree exceeds 4")
        return cls(c[4], c[3] / 4, c[2] / 6, c[1] / 4, c[0])


def quartic_st(q: QuarticBinomial):
    """Degree-2 and degree-3 invariants (S, T) of a binomial-form quartic."""
    b0, b1, b2, b3, b4 = q
    s = 3 * b2 * b2 - 4 * b1 * b3 + b0 * b4
    t = -b2 ** 3 + 2 * b1 * b2 * b3 - b0 * b3 * b3 - b1 * b1 * b4 + b0 * b2 * b4
    return s, t


# --- compensated (double-double) evaluation ---------------------------------
#
# S**3 - 27*T**2 cancels exactly on repeated-root quartics, so evaluating it
# in plain doubles leaves an absolute residue of order eps * (term scale),
# which can dwarf eps * |S|**3 when S is small.  For float coefficients the
# combination is therefore evaluated in double-double arithmetic (Dekker /
# Knuth error-free transforms), pushing the residue down to the eps**2 scale.

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    t = s - a
    return s, (a - (s - t)) + (b - t)


def _quick_sum(a, b):
    # requires |a| >= |b| or a == 0
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(x, y):
    s, e = _two_sum(x[0], y[0])
    return _quick_sum(s, e + x[1] + y[1])


def _dd_mul(x, y):
    p, e = _two_prod(x[0], y[0])
    return _quick_sum(p, e + x[0] * y[1] + x[1] * y[0])


def _dd_scale(x, k):
    # k a small exact integer
    p, e = _two_prod(x[0], k)
    return _quick_sum(p, e + x[1] * k)


def _zd_from(z):
    z = complex(z)
    return (z.real, 0.0), (z.imag, 0.0)


def _zd_add(x, y):
    return _dd_add(x[0], y[0]), _dd_add(x[1], y[1])


def _zd_mul(x, y):
    re = _dd_add(_dd_mul(x[0], y[0]), _dd_scale(_dd_mul(x[1], y[1]), -1))
    im = _dd_add(_dd_mul(x[0], y[1]), _dd_mul(x[1], y[0]))
    return re, im


def _zd_scale(x, k):
    return _dd_scale(x[0], k), _dd_scale(x[1], k)


def _quartic_hdet_dd(q):
    b = [_zd_from(v) for v in q]
    s = _zd_add(
        _zd_add(_zd_scale(_zd_mul(b[2], b[2]), 3), _zd_scale(_zd_mul(b[1], b[3]), -4)),
        _zd_mul(b[0], b[4]),
    )
    b2sq = _zd_mul(b[2], b[2])
    t = _zd_add(
        _zd_add(
            _zd_add(_zd_scale(_zd_mul(b2sq, b[2]), -1), _zd_scale(_zd_mul(_zd_mul(b[1], b[2]), b[3]), 2)),
            _zd_add(_zd_scale(_zd_mul(b[0], _zd_mul(b[3], b[3])), -1), _zd_scale(_zd_mul(_zd_mul(b[1], b[1]), b[4]), -1)),
        ),
        _zd_mul(_zd_mul(b[0], b[2]), b[4]),
    )
    h = _zd_add(
        _zd_mul(_zd_mul(s, s), s),
        _zd_scale(_zd_mul(t, t), -27),
    )
    return complex(h[0][0] + h[0][1], h[1][0] + h[1][1])


def quartic_hdet(q: QuarticBinomial):
    """S**3 - 27*T**2; vanishes exactly when the quartic has a repeated root.

    Float (real or complex) coefficients take a compensated path that keeps
    the cancellation residue near the eps**2 scale; exact and extended
    coefficient types evaluate generically.
    """
    if all(isinstance(v, (int, float, complex)) for v in q):
        return _quartic_hdet_dd(q)
    s, t = quartic_st(q)
    return s ** 3 - 27 * t ** 2
