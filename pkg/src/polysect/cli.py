"""Command-line front end.

Verbs::

    polysect eval            one section query, any evaluation method
    polysect sweep           value along a t-grid for one direction
    polysect extrema         structured critical points / global search
    polysect thresholds      classification-flip scan vs. analytic constants
    polysect verify          run a verification suite, emit a report
    polysect counterexample  reproduce a pinned counterexample

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bodies import (
    Body,
    Functional,
    Kind,
    SectionQuery,
    make_direction,
)
from .closed_form import (
    analytic_A_integral,
    analytic_P_integral,
    closed_A,
    closed_P,
    extremal_value,
    maximizer_direction,
)
from .errors import PolysectError
from .extrema import (
    sphere_maximize,
    structured_critical_points,
    threshold_scan,
)
from .oracle import perimeter_exact, section_volume_exact, section_volume_mc
from .report import (
    COUNTEREXAMPLE_IDS,
    SUITE_IDS,
    SuiteConfig,
    counterexample,
    emit,
    render_plot,
    run_suite,
)

_BODIES = {k.value: k for k in Kind}


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_body(args) -> Body:
    return Body(_BODIES[args.body], args.n)


def _parse_direction(body: Body, args):
    if args.a is None:
        which = getattr(args, "functional", "volume")
        if which == "both":
            which = "volume"
        return maximizer_direction(body, Functional(which))
    coords = np.array([float(v) for v in args.a.split(",")])
    return make_direction(body, coords)


def _functionals(args):
    if args.functional == "both":
        return [Functional.VOLUME, Functional.PERIMETER]
    return [Functional(args.functional)]


def _evaluate(q: SectionQuery, functional: Functional, args) -> float:
    if args.method == "closed":
        fn = closed_A if functional is Functional.VOLUME else closed_P
        return fn(q).value
    if args.method == "exact":
        fn = section_volume_exact if functional is Functional.VOLUME else perimeter_exact
        return fn(q)
    if args.method == "integral":
        fn = analytic_A_integral if functional is Functional.VOLUME else analytic_P_integral
        return fn(q).value
    if functional is not Functional.VOLUME:
        raise PolysectError("the mc method estimates volumes only")
    rng = np.random.default_rng(args.seed)
    est = section_volume_mc(q, samples=args.samples, rng=rng)
    return est.value


def _cmd_eval(args) -> int:
    body = _parse_body(args)
    a = _parse_direction(body, args)
    q = SectionQuery(body, a, args.t)
    for functional in _functionals(args):
        value = _evaluate(q, functional, args)
        print(f"{functional.value} = {_fmt(value)}")
    return 0


def _cmd_sweep(args) -> int:
    body = _parse_body(args)
    a = _parse_direction(body, args)
    lo = args.t_min if args.t_min is not None else 0.0
    hi = args.t_max if args.t_max is not None else body.vertex_depth()
    lines = ["t," + ",".join(f.value for f in _functionals(args))]
    for t in np.linspace(lo, hi, args.steps):
        q = SectionQuery(body, a, float(t))
        row = [_fmt(t)]
        for functional in _functionals(args):
            try:
                row.append(_fmt(_evaluate(q, functional, args)))
            except PolysectError:
                row.append("nan")
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_extrema(args) -> int:
    body = _parse_body(args)
    functional = Functional(args.functional)
    if args.restarts:
        rng = np.random.default_rng(args.seed)
        a, value = sphere_maximize(body, args.t, functional, restarts=args.restarts, rng=rng)
        print("maximizer =", ",".join(_fmt(v) for v in a.coords))
        print("value =", _fmt(value))
        print("closed_max =", _fmt(extremal_value(body, args.t, functional).value))
        return 0
    points = structured_critical_points(body, args.t, functional)
    print("a_canonical | classification | coefficient | residual")
    for cp in points:
        coef = "n/a" if cp.coefficient is None else _fmt(cp.coefficient)
        coords = ";".join(_fmt(v) for v in np.sort(np.abs(cp.coords))[::-1])
        print(f"{coords} | {cp.classification.value} | {coef} | {cp.residual:.3e}")
    return 0


def _cmd_thresholds(args) -> int:
    body = _parse_body(args)
    functional = Functional(args.functional)
    rep = threshold_scan(body, functional)
    print(
        f"{body.kind.value} n={body.n} {functional.value}: "
        f"analytic={_fmt(rep.analytic)} empirical={_fmt(rep.empirical)} gap={rep.gap:.3e}"
    )
    return 0 if rep.gap <= args.tol else 1


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        directions=args.samples,
        tol=args.tol,
        seed=args.seed,
    )
    rep = run_suite(args.suite, (args.n_min, args.n_max), cfg)
    if args.out:
        emit(rep, args.format, args.out)
    else:
        sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_csv())
    if args.plot:
        render_plot(rep, args.plot)
    s = rep.summary
    print(
        f"# {args.suite}: {s['passed']} passed, {s['failed']} failed, "
        f"max_violation={s['max_violation']:.3e}",
        file=sys.stderr,
    )
    return 0 if rep.all_passed else 1


def _cmd_counterexample(args) -> int:
    rep = counterexample(args.id)
    if args.out:
        emit(rep, args.format, args.out)
    else:
        sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_csv())
    return 0 if rep.all_passed else 1


def _add_common(p, body=True, t=True):
    if body:
        p.add_argument("--body", choices=sorted(_BODIES), required=True)
        p.add_argument("--n", type=int, required=True)
    if t:
        p.add_argument("--t", type=float, required=True)
    p.add_argument("--seed", type=int, default=42)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polysect",
        description="Hyperplane sections of the simplex, cross-polytope and cube.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate one section query")
    _add_common(p)
    p.add_argument("--a", help="comma-separated direction, auto-normalized")
    p.add_argument("--method", choices=["closed", "exact", "mc", "integral"], default="closed")
    p.add_argument("--functional", choices=["volume", "perimeter", "both"], default="volume")
    p.add_argument("--samples", type=int, default=10 ** 6)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("sweep", help="value along a t-grid for one direction")
    _add_common(p, t=False)
    p.add_argument("--a", help="comma-separated direction, auto-normalized")
    p.add_argument("--method", choices=["closed", "exact", "mc", "integral"], default="exact")
    p.add_argument("--functional", choices=["volume", "perimeter", "both"], default="both")
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--samples", type=int, default=10 ** 5)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("extrema", help="critical points, or global search with --restarts")
    _add_common(p)
    p.add_argument("--functional", choices=["volume", "perimeter"], default="volume")
    p.add_argument("--restarts", type=int, default=0)
    p.set_defaults(fn=_cmd_extrema)

    p = sub.add_parser("thresholds", help="empirical classification flip vs. analytic constant")
    _add_common(p, t=False)
    p.add_argument("--functional", choices=["volume", "perimeter"], default="volume")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(fn=_cmd_thresholds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=", ".join(SUITE_IDS))
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.add_argument("--plot", help="also render the sampled values to this figure file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("counterexample", help="reproduce a pinned counterexample")
    p.add_argument("--id", required=True, help=", ".join(COUNTEREXAMPLE_IDS))
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PolysectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
