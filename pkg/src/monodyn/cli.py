"""Command line interface.

Subcommands: orbit, preper, height, bounds, equid, scan, factor.  The
semigroup comes from a JSON config file ({"generators": [{"a": "2", "d": 2},
...]}); words are written as comma-separated 1-based generator indices.

Exit codes: 0 ok, 2 invalid config, 3 cap exceeded (partial output written
where possible), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .bounds import LinFormInstance, discrepancy_exact, linform_bound, verify_linform
from .errors import (DegreeCapExceeded, EnumerationCap, FactorBudgetExceeded,
                     InvalidConfig, MonodynError, TreeSizeCap)
from .heights import (SequenceSpec, canonical_height_closed,
                      canonical_height_iterative, equilibrium_radius,
                      jensen_check)
from .orbits import is_preperiodic, orbit_tree
from .places import INF, Place
from .polynomials import UniPoly
from .polyfactor import factor_poly
from .preper import enumerate_preperiodic, minimal_polynomial
from .radical import RadicalPoint
from .scan import ScanConfig, report_to_csv, run_scan
from .semigroup import Semigroup, format_word, parse_word


def _load_semigroup(path: str | None) -> Semigroup:
    if path is None:
        raise InvalidConfig("--config is required for this subcommand")
    with open(path) as fh:
        return Semigroup.from_json(json.load(fh))


def _emit(payload: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_orbit(args) -> int:
    G = _load_semigroup(args.config)
    x = RadicalPoint.from_rational(Fraction(args.point))
    nodes = orbit_tree(G, x, args.depth)
    rows = [{"word": format_word(n.word), **n.point.to_json(),
             "repeats_prefix": n.repeats_prefix} for n in nodes]
    status = is_preperiodic(G, x, max(1, args.depth))
    doc = {"schema": "monodyn/1", "orbit": rows,
           "preperiodic": {"tag": status.tag,
                           "witness": format_word(status.witness_word)
                           if status.witness_word else None,
                           "prefix": status.witness_prefix,
                           "certificate": status.certificate}}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_preper(args) -> int:
    G = _load_semigroup(args.config)
    lines = []
    for ep in enumerate_preperiodic(G, args.depth):
        row = ep.point.to_json()
        row["witness"] = [format_word(ep.word), ep.prefix]
        try:
            poly = minimal_polynomial(ep.point, degree_cap=args.degree_cap)
            row["minpoly"] = poly.to_strings()
            row["degree"] = poly.degree
        except DegreeCapExceeded:
            row["minpoly"] = None
            from .galois import class_of_point
            row["degree"] = class_of_point(ep.point).degree
        lines.append(json.dumps(row))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_height(args) -> int:
    G = _load_semigroup(args.config)
    beta = Fraction(args.beta)
    g1 = parse_word(args.g1) if args.g1 else ()
    g2 = parse_word(args.g2) if args.g2 else (0,)
    seq = SequenceSpec(g1, g2)
    est = canonical_height_iterative(G, seq, beta, tol=args.tol)
    closed = canonical_height_closed(G, g1, g2, beta)
    radius = equilibrium_radius(G, g1, g2)
    doc = {"schema": "monodyn/1", "beta": str(beta),
           "iterative": {"value": est.value, "error_bound": est.error_bound,
                         "steps": est.steps},
           "closed": closed, "equilibrium_radius": radius.radius}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


_ALPHA_POOL = [Fraction(x) for x in
               ("2", "3", "5", "1/2", "3/2", "-2", "5/3", "-7/4", "9/10", "6")]


def _cmd_bounds(args) -> int:
    rng = random.Random(args.seed)
    places = [INF, Place(2), Place(3), Place(5)]
    lines = ["id,v,log_lambda,bound,margin"]
    bad = 0
    made = 0
    while made < args.samples:
        n = rng.randint(1, 3)
        alphas = tuple(rng.choice(_ALPHA_POOL) for _ in range(n))
        bs = tuple(rng.randint(-50, 50) for _ in range(n))
        if all(b == 0 for b in bs):
            continue
        inst = LinFormInstance(alphas, bs, rng.choice(places))
        lam = inst.lam()
        if lam == 0:
            continue
        made += 1
        from .bounds import _log_abs_at
        ll = _log_abs_at(lam, inst.v)
        b = linform_bound(inst)
        if not verify_linform(inst):
            bad += 1
        vname = "inf" if inst.v.is_archimedean else str(inst.v.p)
        lines.append(f"{made},{vname},{ll:.6e},{b:.6e},{ll - b:.6e}")
    _emit("\n".join(lines) + "\n", args.out)
    if bad:
        print(f"FATAL: {bad} bound violations", file=sys.stderr)
        return 4
    return 0


def _cmd_equid(args) -> int:
    G = _load_semigroup(args.config)
    rows = []
    seen = set()
    from .galois import class_of_point
    for ep in enumerate_preperiodic(G, args.depth):
        cls = class_of_point(ep.point)
        key = cls.representative.key()
        if key in seen:
            continue
        seen.add(key)
        rows.append({"point": cls.representative.to_json(),
                     "degree": cls.degree,
                     "discrepancy": float(discrepancy_exact(cls.angles)),
                     "progressions": cls.progressions()})
    lhs, rhs, diff = jensen_check(1.0, Fraction(args.beta), args.nodes)
    doc = {"schema": "monodyn/1", "classes": rows,
           "jensen": {"radius": 1.0, "beta": str(args.beta),
                      "nodes": args.nodes, "lhs": lhs, "rhs": rhs,
                      "diff": diff}}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_scan(args) -> int:
    G = _load_semigroup(args.config)
    S = [INF] + [Place(int(p)) for p in args.S.split(",") if p.strip()]
    cfg = ScanConfig(G, S, Fraction(args.beta), args.depth, tol=args.tol,
                     node_cap=args.node_cap, degree_cap=args.degree_cap)
    report = run_scan(cfg)
    if args.format == "csv":
        _emit(report_to_csv(report), args.out)
    else:
        _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 3 if report.truncated else 0


def _cmd_factor(args) -> int:
    f = UniPoly.from_strings(args.coeffs.split(","))
    factors = factor_poly(f, degree_cap=args.degree_cap, seed=args.seed)
    doc = {"schema": "monodyn/1",
           "input": f.to_strings(),
           "factors": [{"coeffs": g.to_strings(), "multiplicity": m}
                       for g, m in factors]}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _add_globals(ap, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    ap.add_argument("--config", default=d(None), help="semigroup JSON config path")
    ap.add_argument("--depth", type=int, default=d(4))
    ap.add_argument("--out", default=d(None), help="output path (default stdout)")
    ap.add_argument("--format", choices=["json", "csv"], default=d("json"))
    ap.add_argument("--seed", type=int, default=d(0))
    ap.add_argument("--tol", type=float, default=d(1e-9))
    ap.add_argument("--degree-cap", dest="degree_cap", type=int, default=d(512))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monodyn",
                                 description="exact monomial-semigroup dynamics")
    _add_globals(ap, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = ap.add_subparsers(dest="command", required=True,
                            parser_class=lambda **kw: argparse.ArgumentParser(
                                parents=[common], **kw))

    p = sub.add_parser("orbit", help="orbit tree and preperiodicity status")
    p.add_argument("--point", required=True, help="rational point, e.g. 1/2")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("preper", help="enumerate preperiodic points")
    p.set_defaults(func=_cmd_preper)

    p = sub.add_parser("height", help="canonical heights for a sequence")
    p.add_argument("--beta", required=True)
    p.add_argument("--g1", default="", help="preperiod word, 1-based indices")
    p.add_argument("--g2", default="1", help="period word, 1-based indices")
    p.set_defaults(func=_cmd_height)

    p = sub.add_parser("bounds", help="linear-forms verification harness")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("equid", help="discrepancy of conjugate angles")
    p.add_argument("--beta", default="2")
    p.add_argument("--nodes", type=int, default=1 << 12)
    p.set_defaults(func=_cmd_equid)

    p = sub.add_parser("scan", help="S-integral finiteness scan")
    p.add_argument("--beta", required=True)
    p.add_argument("-S", default="2,3,5",
                   help="finite primes of S (the archimedean place is implied)")
    p.add_argument("--node-cap", dest="node_cap", type=int, default=10 ** 7)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("factor", help="factor a polynomial over Q")
    p.add_argument("coeffs", help="coefficients low-to-high, e.g. 27,0,0,0,0,0,1")
    p.set_defaults(func=_cmd_factor)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidConfig as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    except (TreeSizeCap, EnumerationCap, DegreeCapExceeded,
            FactorBudgetExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (MonodynError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
