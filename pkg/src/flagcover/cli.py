"""Command line front end.

Exit codes: 0 success, 1 a user-supplied generating set fails verification,
2 invalid parameters, 3 random generation exhausted its retries, 4 an internal
consistency check failed (a bug), 5 instance too large for the oracle.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .certify import build_lattice_path, cost_report
from .cover3 import classify, is_equality_candidate
from .errors import CertificateError, InstanceTooLarge, InternalInconsistency
from .flags import (
    FlagTuple,
    direct_sum,
    dim_grid,
    random_tuple,
    standard_flag,
    transverse_tuple,
)
from .gensets import verify_generating_set
from .multiflag import mu_formula, synth_m
from .oracle import mu_exact
from .prism import build_G
from .svg import prism_svg

EXIT_USAGE, EXIT_RETRIES, EXIT_BUG, EXIT_TOO_LARGE = 2, 3, 4, 5


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        jsonio.save(out, text)
    else:
        sys.stdout.write(text)


def _read_flags(path: str) -> FlagTuple:
    try:
        return jsonio.flags_from_json(jsonio.load(path))
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read flags from {path}: {exc}") from exc


def cmd_gen(args) -> int:
    field = jsonio.parse_field_option(args.field)
    if args.kind == "directsum":
        if len(args.inputs) != 2:
            raise UsageError("directsum takes exactly two flag files")
        t1, t2 = (_read_flags(p) for p in args.inputs)
        if t1.m != t2.m or t1.field != t2.field:
            raise UsageError("directsum inputs need the same m and field")
        t = direct_sum(t1, t2)
    else:
        if args.d is None or args.d < 1:
            raise UsageError("--d must be a positive integer")
        if args.m < 1:
            raise UsageError("--m must be a positive integer")
        if args.kind == "standard":
            t = FlagTuple(tuple(standard_flag(args.d, field) for _ in range(args.m)))
        else:
            if args.seed is None:
                raise UsageError("--seed is required for randomized generation")
            try:
                if args.kind == "random":
                    t = random_tuple(args.m, args.d, field, args.seed, args.coeff_bound)
                else:
                    t, attempts = transverse_tuple(args.m, args.d, field, args.seed, args.coeff_bound)
                    print(f"attempts={attempts}", file=sys.stderr)
            except RuntimeError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_RETRIES
    _emit(jsonio.dumps(jsonio.flags_to_json(t)), args.out)
    return 0


def cmd_synth(args) -> int:
    t = _read_flags(args.input)
    gs = synth_m(t, debug=args.debug_asserts)
    bound = mu_formula(t.m, t.d).value
    report = verify_generating_set(t, gs)
    text = jsonio.dumps(jsonio.genset_to_json(gs, t.field))
    summary = f"m={t.m} d={t.d} size={len(gs)} bound={bound}"
    if args.out:
        jsonio.save(args.out, text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    if not report.ok or len(gs) > bound:
        print(f"error: {report.summary()}", file=sys.stderr)
        return EXIT_BUG
    return 0


def analysis(t: FlagTuple) -> tuple[dict, object]:
    g = build_G(t)
    cls = classify(g, t)
    path = build_lattice_path(cls, t.d)
    cert = cost_report(path, dim_grid(t), cls, strict=False)
    eq, diag = is_equality_candidate(g, t)
    a, b, c = cls.sizes()
    data = {
        "d": t.d,
        "sigma": {
            "UV": g.sigma_uv.as_list(),
            "VW": g.sigma_vw.as_list(),
            "WU": g.sigma_wu.as_list(),
        },
        "cycles": [{"length": len(cy), "vertices": [str(r) for r in cy.vertices]} for cy in g.cycles],
        "classification": {
            "A": [{"kind": u.kind, "lengths": [len(cy) for cy in u.cycles]} for u in cls.A],
            "B": [len(cy) for cy in cls.B],
            "C": [[str(r) for r in cy.vertices] for cy in cls.C],
            "sizes": {"A": a, "B": b, "C": c},
        },
        "equality_candidate": {"value": eq, "diagnostics": diag},
        "certificate": cert.to_json(),
    }
    return data, cert


def cmd_analyze(args) -> int:
    t = _read_flags(args.input)
    if t.m != 3:
        raise UsageError("analyze needs exactly three flags")
    data, cert = analysis(t)
    _emit(jsonio.dumps(data), args.out)
    if args.svg:
        jsonio.save(args.svg, prism_svg(t))
    print(cert.inequality_line(), file=sys.stderr if not args.out else sys.stdout)
    return 0 if cert.passed else EXIT_BUG


def cmd_oracle(args) -> int:
    t = _read_flags(args.input)
    try:
        res = mu_exact(t, exhaustive=t.field.is_finite)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    print(f"mu={res.mu}")
    if args.out:
        jsonio.save(args.out, jsonio.genset_to_json(res.cover, t.field))
    return 0


def cmd_mu(args) -> int:
    if args.m is None or args.d is None or args.m < 1 or args.d < 1:
        raise UsageError("--m and --d must be positive integers")
    print(mu_formula(args.m, args.d).value)
    return 0


def cmd_verify(args) -> int:
    t = _read_flags(args.input)
    try:
        gs = jsonio.genset_from_json(jsonio.load(args.genset), t.field)
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read generating set: {exc}") from exc
    report = verify_generating_set(t, gs)
    print(report.summary())
    for r in report.missing:
        print(f"missing {r}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational", help="rational | fp:<p>")
    common.add_argument("--d", type=int)
    common.add_argument("--m", type=int, default=3)
    common.add_argument("--seed", type=int)
    common.add_argument("--coeff-bound", type=int, default=10)
    common.add_argument("--out")
    common.add_argument("--svg")
    common.add_argument("--debug-asserts", action="store_true")

    p = argparse.ArgumentParser(prog="flagcover", description="Simultaneous generating sets for complete flags.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a flag file")
    gen.add_argument("kind", choices=["random", "transverse", "directsum", "standard"])
    gen.add_argument("inputs", nargs="*")
    gen.set_defaults(func=cmd_gen)

    for name, func, help_ in [
        ("synth", cmd_synth, "build a generating set of size at most mu(m, d)"),
        ("analyze", cmd_analyze, "prism graph, classification and cost certificate"),
        ("oracle", cmd_oracle, "exact mu by exhaustive cover search"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input")
        sp.set_defaults(func=func)

    mu = sub.add_parser("mu", parents=[common], help="closed-form mu(m, d)")
    mu.set_defaults(func=cmd_mu)

    ver = sub.add_parser("verify", parents=[common], help="check a generating set against a flag file")
    ver.add_argument("input")
    ver.add_argument("genset")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalInconsistency, CertificateError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
