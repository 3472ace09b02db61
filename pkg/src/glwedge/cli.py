"""Command-line front end: ``glwedge {act,verify,schur,series}``.

Exit codes: 0 success, 1 an identity failed, 2 usage error (bad arguments or
a window too small for the requested coefficient).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .arith import LaurentPoly, VarId, WindowError, zs
from .bosonic import BrElement, bf_iso, bf_iso_inv, h, schur_det
from .exterior import ExtElement
from .partitions import as_partition
from .schubert import KINDS, SchubertOp, apply
from .symfun import VarSet, schur
from .verify import BY_NAME, SweepConfig, report_json, report_text, run_sweep
from .vertex import ActionQuery, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _partition(text: Optional[str], flag: str):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return as_partition(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _nonneg(value: Optional[int], flag: str, default: Optional[int] = None) -> int:
    if value is None:
        if default is None:
            raise UsageError(f"{flag} is required")
        return default
    if value < 0:
        raise UsageError(f"{flag} must be non-negative")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# --- act ---------------------------------------------------------------------

def cmd_act(args) -> int:
    k = _nonneg(args.k, "--k")
    r = _nonneg(args.r, "--r")
    lam = _partition(args.lam, "--lambda")
    mu = _partition(args.mu, "--mu")
    nu = _partition(args.nu, "--nu")
    try:
        q = ActionQuery.make(k, r, lam, mu, nu, args.trunc)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        res = evaluate(q)
    except WindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output == "json":
        print(_dump(res.to_json()))
    else:
        print(f"k={k} r={r} lambda={lam} mu={mu} nu={nu} D={q.trunc}")
        print(f"direct:         {res.direct}")
        print(f"first version:  {res.first_version}")
        print(f"second version: {res.second_version}")
        print(f"equal: {'true' if res.equal else 'false'}")
    return EXIT_OK if res.equal else EXIT_FAIL


# --- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    d = SweepConfig()
    cfg = SweepConfig(
        k_max=_nonneg(args.k, "--k", d.k_max),
        r_max=_nonneg(args.r, "--r", d.r_max),
        max_weight=_nonneg(args.max_weight, "--max-weight", d.max_weight),
        trunc=_nonneg(args.trunc, "--trunc", d.trunc),
    )
    names = [n.strip() for n in args.identities.split(",") if n.strip()] if args.identities else None
    for n in names or ():
        if n not in BY_NAME:
            raise UsageError(f"unknown identity {n!r}; known: {', '.join(BY_NAME)}")
    if args.inject_failure and args.inject_failure not in BY_NAME:
        raise UsageError(f"unknown identity {args.inject_failure!r}")
    report = run_sweep(cfg, names, workers=max(1, args.workers), inject=args.inject_failure)
    print(report_json(report) if args.output == "json" else report_text(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


# --- schur -----------------------------------------------------------------------

def cmd_schur(args) -> int:
    lam = _partition(args.lam, "--lambda")
    if args.r is None and args.k is None:
        raise UsageError("schur needs --r (Schur determinant in B_r) and/or --k (Schur polynomial)")
    out = {"lambda": lam.to_json()}
    lines = []
    if args.r is not None:
        r = _nonneg(args.r, "--r")
        if lam.length > r:
            raise UsageError(f"lambda={lam} has more than r={r} parts")
        x = schur_det(lam, r)
        out["r"] = r
        out["schur_determinant"] = x.to_json()
        lines.append(str(x))
    if args.k is not None:
        k = _nonneg(args.k, "--k")
        if lam.length > k:
            raise UsageError(f"lambda={lam} has more than k={k} parts")
        s = schur(lam, VarSet("z", k))
        out["k"] = k
        out["schur_polynomial"] = s.to_json()
        lines.append(str(s))
    print(_dump(out) if args.output == "json" else "\n".join(lines))
    return EXIT_OK


# --- series ------------------------------------------------------------------------

def _render_var(v: VarId, single: bool) -> str:
    return v.family if single else str(v)


def _render_coeff(p: LaurentPoly, single: bool) -> str:
    text = str(p)
    return text.replace("z1", "z") if single else text


def _h_substitution(op: str, j: int, zvars: tuple) -> list:
    """``[(i, coeff)]`` with ``op(z) h_j = sum coeff * h_i`` for the two lowering operators."""
    from .bosonic import _complete_inverse, _elementary_inverse

    terms = []
    if op == "sigma_minus":
        for i in range(0, j + 1):
            terms.append((j - i, _complete_inverse(zvars, i)))
    else:
        for i in range(0, len(zvars) + 1):
            if j - i >= 0:
                terms.append((j - i, _elementary_inverse(zvars, i).scale((-1) ** i)))
    return [(i, c) for i, c in terms if c]


def _render_h_terms(terms: list, single: bool) -> str:
    parts = []
    for i, c in terms:
        name = f"h{i}" if i else ""
        mono = list(c.items())
        if len(mono) == 1:
            exps, a = mono[0]
            sign = "-" if a < 0 else "+"
            a = abs(a)
            monos = "*".join(
                (_render_var(v, single) if e == 1 else f"{_render_var(v, single)}^{e}") for v, e in sorted(exps.items())
            )
            factors = [f for f in (str(a) if a != 1 else "", name, monos) if f]
            body = "*".join(factors) if factors else "1"
        else:
            sign = "+"
            factors = [f for f in (name, f"({_render_coeff(c, single)})") if f]
            body = "*".join(factors)
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def cmd_series(args) -> int:
    if args.op not in KINDS:
        raise UsageError(f"--op must be one of {', '.join(KINDS)}")
    j = _nonneg(args.j, "--j")
    k = max(1, args.k if args.k is not None else 1)
    zvars = zs(k)
    single = k == 1
    trunc = _nonneg(args.trunc, "--trunc", 6)
    o = SchubertOp(args.op, zvars, trunc if args.op == "sigma_plus" else None)
    out = {"op": args.op, "target": args.target, "j": j, "k": k}
    if args.target == "b":
        image = apply(o, ExtElement.basis((j,)))
        out["image"] = image.to_json()
        text = " + ".join(f"({_render_coeff(c, single)})*b{m[0]}" for m, c in image) or "0"
    else:
        r = _nonneg(args.r, "--r")
        if r < 1:
            raise UsageError("--r must be at least 1 for target h")
        image = bf_iso_inv(apply(o, bf_iso(h(r, j))), r) if j >= 0 else BrElement(r, 0)
        out["r"] = r
        out["image_e"] = image.to_json()
        if args.op in ("sigma_minus", "sigma_minus_bar"):
            text = _render_h_terms(_h_substitution(args.op, j, zvars), single)
            out["image_h"] = text
        else:
            text = _render_coeff(image.poly, single)
    print(_dump(out) if args.output == "json" else text)
    return EXIT_OK


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glwedge", description="gl(wedge^k V) acting on B_r: computations and checks")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--k", type=int)
        sp.add_argument("--r", type=int)
        sp.add_argument("--lambda", dest="lam")
        sp.add_argument("--mu")
        sp.add_argument("--nu")
        sp.add_argument("--trunc", type=int)
        sp.add_argument("--max-weight", dest="max_weight", type=int)
        sp.add_argument("--output", choices=("text", "json"), default="text")

    act = sub.add_parser("act", help="E^k_{mu,nu} Delta_lam(H_r) by the oracle and both closed forms")
    common(act)
    act.set_defaults(func=cmd_act)

    ver = sub.add_parser("verify", help="run the identity sweep")
    common(ver)
    ver.add_argument("--identities", help="comma-separated identity names (default: all)")
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--inject-failure", dest="inject_failure", help=argparse.SUPPRESS)
    ver.set_defaults(func=cmd_verify)

    sch = sub.add_parser("schur", help="Schur determinant Delta_lam(H_r) and/or s_lam(z_1..z_k)")
    common(sch)
    sch.set_defaults(func=cmd_schur)

    ser = sub.add_parser("series", help="image of h_j or b_j under a Schubert derivation")
    common(ser)
    ser.add_argument("--op", required=True)
    ser.add_argument("--target", choices=("h", "b"), default="h")
    ser.add_argument("--j", type=int)
    ser.set_defaults(func=cmd_series)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
