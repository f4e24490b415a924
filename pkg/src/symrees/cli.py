"""Command-line front end: ``symrees verify|lengths|symbolic|explore``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from . import __version__
from .checks import (
    SUITES,
    CheckResult,
    explore_curve,
    ideal_equal,
    length_formula,
    run_all,
    run_check,
    validate_curve,
)
from .curve import DEFAULT_GRID, Curve, CurveError, CurveParams
from .groebner import QQ, Field

VERIFY_CSV_HEADER = ["suite", "name", "q", "m", "n", "expected", "computed", "verdict"]
LENGTHS_CSV_HEADER = ["q", "m", "n", "length", "formula", "match"]
TIMING_FIELDS = ("ms", "total_ms")


class ConfigError(ValueError):
    pass


@dataclass
class Report:
    version: str
    config: dict
    checks: list[CheckResult]
    total_ms: float = 0.0
    data: Any = None

    @property
    def summary(self) -> dict:
        passed = sum(c.passed for c in self.checks)
        return {"pass": passed, "fail": len(self.checks) - passed}

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["fail"] == 0 else 1

    def to_json(self) -> dict:
        out = {
            "version": self.version,
            "config": self.config,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary,
            "total_ms": self.total_ms,
        }
        if self.data is not None:
            out["data"] = self.data
        return out

    @classmethod
    def from_json(cls, obj: dict) -> Report:
        checks = [CheckResult(**c) for c in obj["checks"]]
        return cls(obj["version"], obj["config"], checks, obj["total_ms"], obj.get("data"))


def strip_timing(obj):
    """Copy of a JSON report with every timing field zeroed."""
    if isinstance(obj, dict):
        return {k: (0 if k in TIMING_FIELDS else strip_timing(v)) for k, v in obj.items()}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


# configuration --------------------------------------------------------------


def parse_field(text: str) -> Field:
    if text in ("q", "Q", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            return Field(int(text[3:]))
        except ValueError as exc:
            raise ConfigError(f"bad prime field {text!r}: {exc}") from None
    raise ConfigError(f"unknown field {text!r}; use 'q' or 'fp:P'")


def parse_grid(args) -> list[CurveParams]:
    try:
        if args.grid == "default":
            return list(DEFAULT_GRID)
        if args.grid:
            pairs = [p.split(",") for p in args.grid.split(";") if p.strip()]
            return [CurveParams(int(q), int(m)) for q, m in pairs]
        return [CurveParams(args.q if args.q is not None else 1, args.m if args.m is not None else 1)]
    except CurveError as exc:
        raise ConfigError(f"invalid curve parameters: {exc}") from None
    except ValueError:
        raise ConfigError(f"cannot parse grid {args.grid!r}; use 'default' or 'q,m;q,m'") from None


def build_config(args) -> dict:
    nmax_default = 3 if args.command == "explore" else 10
    nmax = args.nmax if args.nmax is not None else nmax_default
    if nmax < 1:
        raise ConfigError(f"--nmax must be at least 1, got {nmax}")
    if args.nmax_gb < 1:
        raise ConfigError(f"--nmax-gb must be at least 1, got {args.nmax_gb}")
    fld = parse_field(args.field)
    config: dict = {"subcommand": args.command}
    if args.command == "explore":
        if not args.curve:
            raise ConfigError("explore needs --curve a,b,c")
        try:
            a, b, c = (int(v) for v in args.curve.split(","))
        except ValueError:
            raise ConfigError(f"cannot parse --curve {args.curve!r}") from None
        try:
            validate_curve(a, b, c)
        except CurveError as exc:
            raise ConfigError(str(exc)) from None
        config["curve"] = [a, b, c]
    else:
        config["grid"] = [[p.q, p.m] for p in parse_grid(args)]
    config.update({
        "nmax": nmax,
        "nmax_gb": args.nmax_gb,
        "field": fld.label,
        "heuristic": fld.p is not None,
    })
    return config


def _field(config) -> Field:
    return parse_field(config["field"])


# runners --------------------------------------------------------------------


def _verify_point(q, m, nmax, nmax_gb, p):
    return run_all(CurveParams(q, m), nmax, nmax_gb, Field(p))


def _ordered(results: list[CheckResult]) -> list[CheckResult]:
    return sorted(
        results,
        key=lambda c: (SUITES.index(c.suite), c.q or 0, c.m or 0, c.n or 0),
    )


def run_verify(config: dict, jobs: int = 1) -> Report:
    start = time.perf_counter()
    fld = _field(config)
    tasks = [(q, m, config["nmax"], config["nmax_gb"], fld.p) for q, m in config["grid"]]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_verify_point, *zip(*tasks)))
    else:
        chunks = [_verify_point(*t) for t in tasks]
    results = _ordered([c for chunk in chunks for c in chunk])
    return Report(__version__, config, results, round((time.perf_counter() - start) * 1000, 3))


def run_lengths(config: dict, jobs: int = 1) -> Report:
    start = time.perf_counter()
    results = []
    for q, m in config["grid"]:
        curve = Curve(CurveParams(q, m), _field(config), verify=False)
        for n in range(1, config["nmax"] + 1):
            results.append(run_check("lengths.staircase", curve.params, n, length_formula(q, n),
                                     lambda n=n: curve.I(n).length(), formula="(2q+1)*C(n+1,2)"))
    return Report(__version__, config, results, round((time.perf_counter() - start) * 1000, 3))


def run_symbolic(config: dict, jobs: int = 1) -> Report:
    start = time.perf_counter()
    results, data = [], []
    for q, m in config["grid"]:
        curve = Curve(CurveParams(q, m), _field(config))
        P = curve.params
        for n in range(1, config["nmax_gb"] + 1):
            sym = curve.symbolic_power(n)
            gens = sym.minimal_generators(P.weights)
            data.append({
                "q": q, "m": m, "n": n,
                "generators": [g.to_str(curve.order) for g in gens],
                "saturation_steps": curve.saturation_steps(n),
            })
            results.append(run_check("symbolic.equals_calI", P, n, True,
                                     lambda: ideal_equal(sym, curve.calI(n))))
            if n >= 2:
                results.append(run_check("symbolic.strict", P, n, True,
                                         lambda: curve.prime_power(n) != sym))
            if n == 2:
                results.append(run_check("symbolic.f2_symbolic_not_ordinary", P, n, True,
                                         lambda: curve.f2 in sym and curve.f2 not in curve.prime_power(2)))
    return Report(__version__, config, results, round((time.perf_counter() - start) * 1000, 3), data)


def run_explore(config: dict, jobs: int = 1) -> Report:
    start = time.perf_counter()
    checks, data = explore_curve(*config["curve"], nmax=config["nmax"], field=_field(config))
    return Report(__version__, config, checks, round((time.perf_counter() - start) * 1000, 3), data)


RUNNERS = {
    "verify": run_verify,
    "lengths": run_lengths,
    "symbolic": run_symbolic,
    "explore": run_explore,
}


# rendering ------------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_json(report: Report) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report.config["subcommand"] == "lengths":
        writer.writerow(LENGTHS_CSV_HEADER)
        for c in report.checks:
            writer.writerow([c.q, c.m, c.n, c.computed, c.expected, _cell(c.passed)])
    else:
        writer.writerow(VERIFY_CSV_HEADER)
        for c in report.checks:
            writer.writerow([c.suite, c.name, _cell(c.q), _cell(c.m), _cell(c.n),
                             _cell(c.expected), _cell(c.computed), c.verdict])
    return buf.getvalue()


def render_text(report: Report) -> str:
    cfg = report.config
    lines = [f"symrees {report.version} {cfg['subcommand']}  field={cfg['field']}"]
    if cfg.get("heuristic"):
        lines.append("WARNING: prime-field arithmetic is heuristic; characteristic p may differ from Q")
    for c in report.checks:
        where = " ".join(f"{k}={_cell(getattr(c, k))}" for k in ("q", "m", "n", "k") if getattr(c, k) is not None)
        lines.append(
            f"{c.verdict.upper():4} {c.name} {where} expected={_cell(c.expected)} computed={_cell(c.computed)}"
            + (f"  [{c.formula}]" if c.formula else "")
        )
    if cfg["subcommand"] == "symbolic" and report.data:
        for entry in report.data:
            lines.append(f"p^({entry['n']}) for q={entry['q']} m={entry['m']}:")
            lines.extend(f"  {g}" for g in entry["generators"])
    elif cfg["subcommand"] == "explore" and report.data:
        d = report.data
        lines.append(f"curve {tuple(d['curve'])}: prime = ({', '.join(d['prime'])})")
        lines.append(f"complete intersection: {_cell(d['complete_intersection'])}")
        for row in d["powers"]:
            lines.append(
                f"n={row['n']} symbolic_generators={row['symbolic_generators']} "
                f"power_generators={row['power_generators']} "
                f"equals_ordinary_power={_cell(row['equals_ordinary_power'])} length_x1={row['length_x1']}"
            )
        cert = d["certificate"]
        lines.append(f"certificate target={cert['target']} tested={cert['tested']} found={len(cert['found'])}")
        for hit in cert["found"]:
            lines.append(f"  u={hit['u']}  v={hit['v']}  length={hit['length']}")
    s = report.summary
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail  ({report.total_ms} ms)")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


# entry point ----------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symrees",
        description="Verify symbolic-power identities for monomial curves in arithmetic progression.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("verify", "run every identity check"),
        ("lengths", "tabulate staircase lengths of I_n"),
        ("symbolic", "print generators of the symbolic powers"),
        ("explore", "symbolic powers of an arbitrary monomial curve"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--q", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--grid", help="'default' or 'q,m;q,m;...'")
        p.add_argument("--nmax", type=int)
        p.add_argument("--nmax-gb", type=int, default=4, dest="nmax_gb")
        p.add_argument("--curve", help="a,b,c (explore only)")
        p.add_argument("--field", default="q", help="q or fp:P")
        p.add_argument("--format", choices=sorted(RENDERERS), default="text")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="worker processes across grid points")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
    except ConfigError as exc:
        print(f"symrees: error: {exc}", file=sys.stderr)
        return 2
    report = RUNNERS[args.command](config, jobs=max(1, args.jobs))
    text = RENDERERS[args.format](report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
