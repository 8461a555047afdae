"""Command-line interface: state reports, model sweeps, ensemble statistics,
thermal sweeps, and the built-in verification battery.

All numeric CSV output uses scientific notation with 15 significant digits,
'.' as the decimal separator, and LF line endings.  Exit codes: 0 success,
1 verification failure, 2 usage or argument error.
"""

import argparse
import json
import sys

import numpy as np

from . import models, states
from .errors import BadRange, HDet4Error
from .invariants import hdet4_magnitude, invariants_of, j_invariant
from .errors import DegenerateJInvariant
from .ensembles import (
    MATRIX_KINDS,
    STATE_KINDS,
    ensemble_hdet_stats,
)
from .spectra import eig_hermitian
from .thermal import thermal_invariant
from .verify import SUITES, run_suites

_FMT = "%.15e"


def _f(x) -> str:
    return _FMT % float(x)


def _complex_fields(z) -> str:
    z = complex(z)
    return f"{_f(z.real)},{_f(z.imag)}"


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise BadRange(f"cannot parse {text!r} as a (complex) number") from None


# ---------------------------------------------------------------------------
# state
# ---------------------------------------------------------------------------


def _resolve_state(name, params):
    if name.lower() in {f.lower() for f in states.FAMILIES}:
        return states.verstraete_state(name, [_parse_complex(p) for p in params])
    if params:
        raise BadRange(f"named state {name!r} takes no parameters")
    return states.named_state(name)


def cmd_state(args) -> int:
    psi = _resolve_state(args.name, args.params)
    tr = invariants_of(psi)
    mag = hdet4_magnitude(psi, extended=True)
    try:
        j = j_invariant(psi)
    except DegenerateJInvariant:
        j = None
    if args.json:
        payload = {
            "name": args.name,
            "params": [str(p) for p in args.params],
            "amplitudes": [[z.real, z.imag] for z in psi],
            "S": [tr.s.real, tr.s.imag],
            "T": [tr.t.real, tr.t.imag],
            "hdet": [tr.hdet.real, tr.hdet.imag],
            "abs_hdet": mag,
            "j_invariant": None if j is None else [j.real, j.imag],
        }
        print(json.dumps(payload))
        return 0
    print(f"state: {args.name}" + (f" {' '.join(args.params)}" if args.params else ""))
    print("amplitudes (|b1 b2 b3 b4> : value):")
    for i, z in enumerate(psi):
        if abs(z) > 1e-14:
            print(f"  |{i:04b}> : {z.real:+.12f}{z.imag:+.12f}j")
    print(f"S      = {complex(tr.s):.15e}")
    print(f"T      = {complex(tr.t):.15e}")
    print(f"HDet4  = {complex(tr.hdet):.15e}")
    print(f"|HDet4| = {_f(mag)}")
    if j is None:
        print("J      = undefined (hyperdeterminant is structurally zero)")
    else:
        print(f"J      = {j:.15e}")
    return 0


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------


def _grid(start, stop, steps):
    if steps < 1:
        raise BadRange(f"steps must be >= 1, got {steps}")
    if start > stop:
        raise BadRange(f"start {start} > stop {stop}")
    return np.linspace(start, stop, steps)


def _parse_levels(text: str, n_levels: int):
    if text == "all":
        return list(range(n_levels))
    if text == "ground":
        return [0]
    try:
        idx = int(text)
    except ValueError:
        raise BadRange(f"level must be an index, 'ground' or 'all'; got {text!r}") from None
    if not 0 <= idx < n_levels:
        raise BadRange(f"level index {idx} out of range 0..{n_levels - 1}")
    return [idx]


def _sweep_rows_ising(lam, levels, track):
    if track == "index":
        dec = eig_hermitian(models.ising_hamiltonian(lam))
        flat = [
            (lv.energy, v) for lv in dec.levels for v in lv.basis
        ]
        return [(k, flat[k][0], flat[k][1]) for k in levels]
    energies = models.ising_energies_analytic(lam)
    return [(k, energies[k], models.ising_branch_state(k, lam)) for k in levels]


def _sweep_rows_xxz(delta, levels, track):
    rows = models.xxz_eigensystem_analytic(delta)
    if track == "index":
        order = np.argsort([r[0] for r in rows], kind="stable")
        rows = [rows[i] for i in order]
    return [(k, rows[k][0], rows[k][1]) for k in levels]


def cmd_sweep(args) -> int:
    grid = _grid(args.start, args.stop, args.steps)
    if args.model == "hs-dimer" and args.alpha is None:
        raise BadRange("model hs-dimer requires --alpha")

    out_rows = []
    for x in grid:
        if args.model == "ising":
            triplets = _sweep_rows_ising(x, _parse_levels(args.level, 16), args.track)
        elif args.model == "xxz":
            triplets = _sweep_rows_xxz(x, _parse_levels(args.level, 16), args.track)
        elif args.model == "hs":
            triplets = [(0, float("nan"), models.hs_state(x))]
        else:  # hs-dimer
            triplets = [(0, float("nan"), models.hs_dimerized_state(args.alpha, x))]
        for level, energy, vec in triplets:
            tr = invariants_of(vec)
            out_rows.append(
                {
                    "param": float(x),
                    "level": level,
                    "energy": float(energy),
                    "S": complex(tr.s),
                    "T": complex(tr.t),
                    "hdet": complex(tr.hdet),
                    "abs_hdet": abs(complex(tr.hdet)),
                }
            )

    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        **{k: r[k] for k in ("param", "level", "energy", "abs_hdet")},
                        "S": [r["S"].real, r["S"].imag],
                        "T": [r["T"].real, r["T"].imag],
                        "hdet": [r["hdet"].real, r["hdet"].imag],
                    }
                    for r in out_rows
                ]
            )
        )
        return 0
    print("param,level,energy,S_re,S_im,T_re,T_im,hdet_re,hdet_im,abs_hdet")
    for r in out_rows:
        print(
            ",".join(
                [
                    _f(r["param"]),
                    str(r["level"]),
                    _f(r["energy"]),
                    _complex_fields(r["S"]),
                    _complex_fields(r["T"]),
                    _complex_fields(r["hdet"]),
                    _f(r["abs_hdet"]),
                ]
            )
        )
    return 0


# ---------------------------------------------------------------------------
# random
# ---------------------------------------------------------------------------


def cmd_random(args) -> int:
    if args.samples < 1:
        raise BadRange("sample count must be >= 1")
    stats = ensemble_hdet_stats(
        args.kind, args.samples, seed=args.seed, minimize=args.minimize
    )
    print(json.dumps(stats.to_summary_dict(args.threshold)))
    if args.hist:
        edges, counts = stats.histogram()
        with open(args.hist, "w", newline="\n") as fh:
            fh.write("bin_lo,bin_hi,count\n")
            for lo, hi, c in zip(edges[:-1], edges[1:], counts):
                fh.write(f"{_f(lo)},{_f(hi)},{int(c)}\n")
    return 0


# ---------------------------------------------------------------------------
# thermal
# ---------------------------------------------------------------------------


def cmd_thermal(args) -> int:
    grid = _grid(args.start, args.stop, args.steps)
    if not args.beta:
        raise BadRange("at least one --beta is required")
    build = {
        "xxz": models.xxz_hamiltonian,
        "ising": models.ising_hamiltonian,
    }[args.model]
    print("param,beta,S,T,hdet")
    for x in grid:
        h = build(x)
        for beta in args.beta:
            vals = [
                thermal_invariant(
                    h, beta, mode=args.mode, which=which, seed=args.seed
                )
                for which in ("S", "T", "hdet")
            ]
            print(
                ",".join([_f(x), _f(beta)] + [_f(v) for v in vals])
            )
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    ok = run_suites(only=args.only or None)
    print("verify: PASS" if ok else "verify: FAIL")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hdet4",
        description="Polynomial entanglement invariants of four-qubit states",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("state", help="invariants of a named state or family member")
    sp.add_argument("name", help="state name (GHZ, W, ...) or family (Gabcd, ...)")
    sp.add_argument("params", nargs="*", help="family parameters (complex literals)")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sp.set_defaults(func=cmd_state)

    sp = sub.add_parser("sweep", help="invariants along a model parameter grid")
    sp.add_argument("model", choices=["ising", "xxz", "hs", "hs-dimer"])
    sp.add_argument("--start", type=float, required=True)
    sp.add_argument("--stop", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument(
        "--level",
        default="ground",
        help="level index, 'ground' or 'all' (default: ground)",
    )
    sp.add_argument(
        "--track",
        choices=["branch", "index"],
        default="branch",
        help="follow analytic branches (continuity) or ascending level index",
    )
    sp.add_argument(
        "--alpha", type=float, default=None, help="exponent for model hs-dimer"
    )
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("random", help="|hdet| statistics over a random ensemble")
    sp.add_argument("kind", choices=list(STATE_KINDS + MATRIX_KINDS))
    sp.add_argument("-n", "--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--threshold", type=float, default=1e-8)
    sp.add_argument(
        "--minimize",
        action="store_true",
        help="resolve degenerate ground levels by minimizing |hdet| over the level",
    )
    sp.add_argument("--hist", default=None, help="write histogram CSV to this path")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("thermal", help="thermal invariants along a parameter grid")
    sp.add_argument("model", choices=["xxz", "ising"])
    sp.add_argument("--start", type=float, required=True)
    sp.add_argument("--stop", type=float, required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument(
        "--beta", type=float, action="append", required=True, help="repeatable"
    )
    sp.add_argument(
        "--mode",
        choices=["weighted-sum", "degenerate-min", "pure-min"],
        default="degenerate-min",
    )
    sp.add_argument("--seed", type=int, default=0, help="minimizer multistart seed")
    sp.set_defaults(func=cmd_thermal)

    sp = sub.add_parser("verify", help="run the built-in verification suites")
    sp.add_argument(
        "--only",
        action="append",
        choices=list(SUITES),
        help="run only the named suite (repeatable)",
    )
    sp.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HDet4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
