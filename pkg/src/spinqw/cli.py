"""Command-line entry point: compute functions, run verification suites,
evaluate contour integrals.  All output is JSON (stdout or --out), with the
fully resolved configuration echoed into every result so runs are replayable;
identical (config, seed) pairs produce byte-identical output.

Exit codes: 0 pass / success, 1 computational failure or mismatch, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities
from .functions import F, F_star, FHL, FHL_star
from .integral import ContourError, build_contour, integral_F
from .multipoly import MultiPoly, as_poly
from .params import fixture_p0, load_params, view
from .partitions import parse_partition
from .report import VerificationReport
from .scalars import HorizonError, PoleError, fmt_rational, parse_rational
from .yang_baxter import INSTANCES, STANDARD_SEVEN, check_instance

USAGE_ERROR, FAILURE = 2, 1


def _load_base(path):
    return load_params(path) if path else fixture_p0()


def _emit(payload: dict, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _config(args, **extra) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k not in ("func",)}
    cfg.update(extra)
    return cfg


def cmd_compute(args) -> int:
    try:
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        base = _load_base(args.params)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    v = view(base)
    n = args.vars
    thick = args.kind in ("f", "f-star")
    fns = {"f": F, "f-star": F_star, "hl": FHL, "hl-star": FHL_star}
    fun = fns[args.kind]
    try:
        if args.values:
            values = tuple(parse_rational(t) for t in args.values.split(","))
            if len(values) != n:
                raise ValueError(f"expected {n} values, got {len(values)}")
            result = fun(lam, mu, values, v)
            payload = {"value": fmt_rational(result)}
        elif thick:
            kappas = tuple(MultiPoly.variable(n, i) for i in range(n))
            poly = as_poly(fun(lam, mu, kappas, v), n)
            payload = {"polynomial": poly.to_json()}
        else:
            raise ValueError(
                "the thin family is rational in its variables; pass --values"
            )
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (PoleError, HorizonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    payload["config"] = _config(args)
    _emit(payload, args.out)
    return 0


def cmd_verify(args) -> int:
    name = args.name
    try:
        base = _load_base(args.params)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    kwargs = {}
    if name.startswith("ybe:"):
        inst = name.split(":", 1)[1]
        if inst not in INSTANCES:
            print(f"error: unknown instance {inst!r}", file=sys.stderr)
            return USAGE_ERROR
        report = check_instance(
            inst, cap=args.cap, trials=args.trials, seed=args.seed,
            perturb=args.perturb,
        )
    elif name in identities.SUITES:
        fun = identities.SUITES[name]
        import inspect

        sig = inspect.signature(fun)
        if "base" in sig.parameters:
            kwargs["base"] = base
        if "seed" in sig.parameters:
            kwargs["seed"] = args.seed
        if "trials" in sig.parameters and args.trials is not None:
            kwargs["trials"] = args.trials
        if "perturb" in sig.parameters:
            kwargs["perturb"] = args.perturb
        if name == "dual-cauchy" and args.n:
            kwargs.update(n=args.n, m=args.m or args.n)
        if name == "cauchy-qJ" and args.n:
            kwargs.update(n=args.n)
        report = fun(**kwargs)
    else:
        print(f"error: unknown suite {name!r}", file=sys.stderr)
        return USAGE_ERROR
    payload = report.to_dict()
    payload["config"] = _config(args)
    _emit(payload, args.out)
    return 0 if report.passed else FAILURE


def cmd_integral(args) -> int:
    try:
        mu = parse_partition(args.mu)
        base = _load_base(args.params)
        kappas = tuple(parse_rational(t) for t in args.kappa.split(","))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    v = view(base)
    radius = None if args.radius == "auto" else float(args.radius)
    try:
        contour = build_contour(v, nodes=args.nodes)
        quad = integral_F(mu, kappas, v, nodes=args.nodes, radius=radius)
        exact = float(F(mu, (), kappas, v))
    except ContourError as exc:
        print(f"error: contour diagnostic: {exc}", file=sys.stderr)
        return FAILURE
    except (PoleError, HorizonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE
    diff = abs(quad - exact)
    payload = {
        "quadrature": {"re": quad.real, "im": quad.imag},
        "exact": exact,
        "difference": diff,
        "contour": {
            "radius": contour.radius if radius is None else radius,
            "inner_bound": contour.inner,
            "outer_bound": contour.outer,
            "nodes": args.nodes,
        },
        "config": _config(args),
    }
    _emit(payload, args.out)
    return 0


def cmd_list(args) -> int:
    payload = {
        "ybe_instances": {
            name: {
                "doc": inst.doc,
                "standard": name in STANDARD_SEVEN,
            }
            for name, inst in sorted(INSTANCES.items())
        },
        "verify_suites": sorted(identities.SUITES),
        "config": _config(args),
    }
    _emit(payload, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="spinqw",
        description="vertex-model symmetric functions and their exact checks",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one of the four families")
    p.add_argument("kind", choices=["f", "f-star", "hl", "hl-star"])
    p.add_argument("--lambda", dest="lam", default="", help="comma-separated")
    p.add_argument("--mu", default="", help="comma-separated")
    p.add_argument("--vars", type=int, default=1)
    p.add_argument("--values", default="", help="rational values p/q, comma-separated")
    p.add_argument("--params", default="", help="parameter JSON file (default: pinned fixture)")
    p.add_argument("--mode", choices=["exact"], default="exact")
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("name", help="suite name or ybe:<instance>")
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--params", default="")
    p.add_argument("--perturb", action="store_true",
                   help="negative control: break one side on purpose")
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integral", help="contour quadrature vs the exact value")
    p.add_argument("--mu", default="")
    p.add_argument("--kappa", default="1/4", help="rational values, comma-separated")
    p.add_argument("--params", default="")
    p.add_argument("--nodes", type=int, default=256)
    p.add_argument("--radius", default="auto")
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("list", help="enumerate instances and suites")
    p.add_argument("--out", default="")
    p.set_defaults(func=cmd_list)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
