"""Command-line front end.

Subcommands:

* ``eval``      — evaluate a single mean at a pair,
* ``verify``    — bulk inequality suites (thm1 | thm2 | priors | chain | all),
* ``constants`` — closed-form vs discovered sharp constants,
* ``series``    — exact series coefficients and tail bound,
* ``certify``   — critical-point ladder report for the sharp parameter.

Exit codes: 0 pass, 1 violated inequality / constant gap, 2 usage or domain
error.  Reports are deterministic given the same configuration and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import mpmath as mp

from . import auxiliary, oracle, series, sharp
from .errors import BracketError, DomainError, RangeError
from .means import MeanKind, PositivePair, blend_mean, mean_value

__all__ = ["RunConfig", "main"]

_SCHEMA = 1


@dataclass
class RunConfig:
    """Validated knobs shared by the sweep commands."""

    samples: int = 10**6
    seed: int = 0
    ratio_max: float = 1e8
    series_order: int = 40
    precision_digits: int = 100
    output_format: str = "plain"

    def validate(self) -> None:
        if self.samples < 1:
            raise DomainError(f"samples must be >= 1, got {self.samples}")
        if not 1 <= self.series_order <= series.N_MAX:
            raise RangeError(
                f"series order must lie in [1, {series.N_MAX}], got {self.series_order}"
            )
        if not self.ratio_max > 1.0:
            raise DomainError(f"ratio-max must exceed 1, got {self.ratio_max}")
        if self.precision_digits < 1:
            raise DomainError(f"precision must be >= 1, got {self.precision_digits}")
        if self.output_format not in ("json", "csv", "plain"):
            raise DomainError(f"unknown format {self.output_format!r}")


_EVAL_KINDS = {
    "seiffert": MeanKind.SEIFFERT,
    "arithmetic": MeanKind.ARITHMETIC,
    "geometric": MeanKind.GEOMETRIC,
    "root-square": MeanKind.ROOT_SQUARE,
    "contra-harmonic": MeanKind.CONTRA_HARMONIC,
    "centroidal": MeanKind.CENTROIDAL,
    "power": MeanKind.POWER,
    "blend": None,  # handled separately (takes --x)
}

_ORACLE_FNS = {
    "seiffert": oracle.seiffert,
    "arithmetic": oracle.arithmetic,
    "geometric": oracle.geometric,
    "root-square": oracle.root_square,
    "contra-harmonic": oracle.contra_harmonic,
    "centroidal": oracle.centroidal,
}


def _cmd_eval(args: argparse.Namespace) -> int:
    pair = PositivePair(args.a, args.b)
    if args.oracle:
        dps = args.precision
        if args.kind == "blend":
            if args.x is None:
                raise DomainError("blend requires --x in [1/2, 1]")
            val = oracle.blend(args.x, pair.a, pair.b, dps=dps)
        elif args.kind == "power":
            if args.p is None:
                raise DomainError("power requires --p")
            val = oracle.power(pair.a, pair.b, args.p, dps=dps)
        else:
            val = _ORACLE_FNS[args.kind](pair.a, pair.b, dps=dps)
        with mp.workdps(dps):
            print(mp.nstr(val, dps))
        return 0
    if args.kind == "blend":
        if args.x is None:
            raise DomainError("blend requires --x in [1/2, 1]")
        print(repr(blend_mean(args.x, pair)))
        return 0
    kind = _EVAL_KINDS[args.kind]
    print(repr(mean_value(kind, pair, args.p)))
    return 0


_SUITES = ("thm1", "thm2", "priors", "chain")


def _run_suite(name: str, cfg: RunConfig, alpha_shift: float, beta_shift: float):
    if name == "thm1":
        alpha = sharp.blend_alpha_closed() + alpha_shift
        return sharp.verify_blend_bounds(
            cfg.samples, seed=cfg.seed, ratio_max=cfg.ratio_max,
            alpha=alpha, beta=1.0 + beta_shift,
        )
    if name == "thm2":
        return sharp.verify_ratio_bounds(
            cfg.samples, seed=cfg.seed, ratio_max=cfg.ratio_max,
            alpha1=sharp.RATIO_LOWER + alpha_shift, beta1=sharp.RATIO_UPPER + beta_shift,
        )
    if name == "priors":
        return sharp.verify_prior_bounds(cfg.samples, seed=cfg.seed, ratio_max=cfg.ratio_max)
    return sharp.verify_ordering_chain(cfg.samples, seed=cfg.seed, ratio_max=min(cfg.ratio_max, 1e6))


def _csv_dump(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf,
        fieldnames=["name", "closed_form", "discovered", "gap", "witness_ratio", "slack"],
        lineterminator="\n",
    )
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    which = list(_SUITES) if args.which == "all" else [args.which]
    results = [_run_suite(name, cfg, args.alpha_shift, args.beta_shift) for name in which]
    results.sort(key=lambda r: r.suite)

    if cfg.output_format == "json":
        print(json.dumps(
            {"schema": _SCHEMA, "seed": cfg.seed, "samples": cfg.samples,
             "suites": [r.as_report() for r in results]},
            sort_keys=True,
        ))
    elif cfg.output_format == "csv":
        rows = [
            {
                "name": r.suite,
                "closed_form": "",
                "discovered": "",
                "gap": "",
                "witness_ratio": "" if r.witness is None else repr(r.witness["ratio"]),
                "slack": repr(min(r.min_slack_left, r.min_slack_right)),
            }
            for r in results
        ]
        print(_csv_dump(rows), end="")
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"suite {r.suite}: {status}  n={r.n_samples}  "
                f"min_slack_left={r.min_slack_left:.6e} (at a/b={r.arg_left:.10g})  "
                f"min_slack_right={r.min_slack_right:.6e} (at a/b={r.arg_right:.10g})"
            )
            if r.stats:
                print(f"  stats: {json.dumps(r.stats, sort_keys=True)}")
            if r.witness is not None:
                print(f"  witness: {json.dumps(r.witness, sort_keys=True)}")
    return 0 if all(r.passed for r in results) else 1


def _cmd_constants(args: argparse.Namespace) -> int:
    cfg = _config(args)
    reports = sharp.constants_report()
    if cfg.output_format == "json":
        for rep in reports:
            print(json.dumps({"schema": _SCHEMA, **rep.as_dict()}, sort_keys=True))
    elif cfg.output_format == "csv":
        rows = [
            {
                "name": rep.name,
                "closed_form": repr(rep.closed_form),
                "discovered": repr(rep.discovered),
                "gap": repr(rep.abs_gap),
                "witness_ratio": "" if rep.witness is None else repr(rep.witness.ratio),
                "slack": "" if rep.witness is None else repr(rep.witness.lhs - rep.witness.rhs),
            }
            for rep in reports
        ]
        print(_csv_dump(rows), end="")
    else:
        for rep in reports:
            print(
                f"{rep.name}: closed={rep.closed_form!r} discovered={rep.discovered!r} "
                f"gap={rep.abs_gap:.3e}"
            )
            if rep.witness is not None:
                print(
                    f"  sharpness witness: shift={rep.witness.shift:+.1e} "
                    f"a/b={rep.witness.ratio:.6g} lhs={rep.witness.lhs!r} rhs={rep.witness.rhs!r}"
                )
    return 0 if all(rep.abs_gap <= sharp.CONSTANT_GAP_LIMIT for rep in reports) else 1


def _cmd_series(args: argparse.Namespace) -> int:
    cfg = _config(args)
    order = cfg.series_order
    what = args.what
    if what == "bernoulli":
        terms = [{"n": n, "coefficient": str(series.bernoulli_even(n))} for n in range(1, order + 1)]
        head, tail_bound, radius = "B_{2n}", None, None
    else:
        display = {
            "cot": ("cot x = 1/x - sum c_n x^(2n-1);  signed c_n:", -1, series.cot_coefficient),
            "csc2": ("1/sin^2 x = 1/x^2 + sum c_n x^(2n-2);  signed c_n:", 1, series.csc2_coefficient),
            "ratio": ("R(theta) = 1 - sum c_n theta^(2n-2);  signed c_n:", -1, series.ratio_coefficient),
        }
        head, sign, coeff_fn = display[what]
        terms = [{"n": n, "coefficient": str(sign * coeff_fn(n))} for n in range(1, order + 1)]
        ts = series.truncated_series(what, order)
        tail_bound, radius = ts.tail_bound, ts.radius

    if cfg.output_format == "json":
        payload = {"schema": _SCHEMA, "series": what, "order": order, "terms": terms}
        if tail_bound is not None:
            payload["tail_bound"] = tail_bound
            payload["radius"] = radius
        print(json.dumps(payload, sort_keys=True))
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["n", "coefficient"], lineterminator="\n")
        writer.writeheader()
        for term in terms:
            writer.writerow(term)
        print(buf.getvalue(), end="")
    else:
        print(head)
        for term in terms:
            print(f"n={term['n']}: {term['coefficient']}")
        if tail_bound is not None:
            print(f"tail bound on (0, {radius!r}]: {tail_bound:.6e}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    import numpy as np

    family = auxiliary.BlendGapFamily(sharp.blend_alpha_closed())
    report = auxiliary.locate_critical_points(family)
    s = np.geomspace(1e-5, 1e8 - 1.0, 10**4)
    gap_vals = family.gap_values(1.0 + s)
    gap_negative = bool(np.all(gap_vals < 0.0))
    gap_at_big = float(family.gap(1e8))
    ok = (
        gap_negative
        and abs(gap_at_big) <= 1e-6
        and max(report.residuals) < 1e-10
        and 1.0 < report.t0 < report.t1 < report.t2 < report.t3
    )
    payload = {
        "schema": _SCHEMA,
        "parameter": family.p,
        "critical_points": report.as_dict(),
        "gap_negative_on_grid": gap_negative,
        "gap_at_1e8": gap_at_big,
        "limit_at_infinity": family.limit_at_infinity(),
        "pass": ok,
    }
    if cfg.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key in ("parameter", "gap_negative_on_grid", "gap_at_1e8", "limit_at_infinity", "pass"):
            print(f"{key}: {payload[key]!r}")
        print(f"critical_points: {json.dumps(report.as_dict(), sort_keys=True)}")
    return 0 if ok else 1


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        samples=getattr(args, "samples", 10**6),
        seed=getattr(args, "seed", 0),
        ratio_max=getattr(args, "ratio_max", 1e8),
        series_order=getattr(args, "order", 40),
        precision_digits=getattr(args, "precision", 100),
        output_format=getattr(args, "format", "plain"),
    )
    cfg.validate()
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seiffert-bounds",
        description="Evaluate bivariate means and verify the sharp Seiffert-mean bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one mean at a pair (a, b)")
    p_eval.add_argument("kind", choices=sorted(_EVAL_KINDS))
    p_eval.add_argument("a", type=float)
    p_eval.add_argument("b", type=float)
    p_eval.add_argument("--x", type=float, default=None, help="blend parameter in [1/2, 1]")
    p_eval.add_argument("--p", type=float, default=None, help="power-mean exponent")
    p_eval.add_argument("--oracle", action="store_true", help="print the mpmath reference value")
    p_eval.add_argument("--precision", type=int, default=100, help="oracle digits")
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run bulk inequality suites")
    p_verify.add_argument("which", choices=(*_SUITES, "all"))
    p_verify.add_argument("--samples", type=int, default=10**6)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--ratio-max", dest="ratio_max", type=float, default=1e8)
    p_verify.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_verify.add_argument(
        "--alpha-shift", dest="alpha_shift", type=float, default=0.0,
        help="sharpness probe: shift the lower constant (thm1: blend alpha, thm2: ratio alpha)",
    )
    p_verify.add_argument(
        "--beta-shift", dest="beta_shift", type=float, default=0.0,
        help="sharpness probe: shift the upper constant (thm1: blend beta, thm2: ratio beta)",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_const = sub.add_parser("constants", help="closed-form vs discovered sharp constants")
    p_const.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_const.add_argument("--precision", type=int, default=100)
    p_const.set_defaults(func=_cmd_constants)

    p_series = sub.add_parser("series", help="dump exact series coefficients")
    p_series.add_argument("what", choices=("bernoulli", "cot", "csc2", "ratio"))
    p_series.add_argument("--order", type=int, default=40)
    p_series.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p_series.set_defaults(func=_cmd_series)

    p_cert = sub.add_parser("certify", help="critical-point ladder report at the sharp parameter")
    p_cert.add_argument("--format", choices=("json", "plain"), default="plain")
    p_cert.set_defaults(func=_cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BracketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
