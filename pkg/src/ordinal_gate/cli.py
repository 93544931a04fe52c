"""``ordinal-gate`` command line: simulate, check, report, plot, ideal.

Exit codes: 0 ran and produced verdicts (failing axioms included),
1 internal error, 2 usage or input error, 3 DLO failure under ``--strict-dlo``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from . import axioms, ideal, plot, simulate, stats
from .simulate import DatasetError, SimulationConfig, ThemeSpec

SEED_ENV = "ORDINAL_GATE_SEED"

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_DLO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def load_config(path: str | None) -> SimulationConfig:
    """Built-in defaults, overridden by any keys present in a JSON config file."""
    cfg = SimulationConfig(seed=_default_seed())
    if path is None:
        return cfg
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON ({e})") from None
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    known = {"themes", "n", "seed", "lo", "hi", "decimals"}
    unknown = set(data) - known
    if unknown:
        raise UsageError(f"{path}: unknown key(s) {sorted(unknown)}")
    kw = {k: data[k] for k in known - {"themes"} if k in data}
    if "themes" in data:
        try:
            kw["themes"] = tuple(ThemeSpec(t["name"], float(t["mean"]), float(t["std"])) for t in data["themes"])
        except (KeyError, TypeError) as e:
            raise UsageError(f"{path}: each theme needs name, mean, std ({e})") from None
    try:
        return replace(cfg, **kw)
    except (ValueError, TypeError) as e:
        raise UsageError(f"{path}: {e}") from None


def _apply_overrides(cfg: SimulationConfig, args) -> SimulationConfig:
    kw = {}
    if getattr(args, "seed", None) is not None:
        kw["seed"] = args.seed
    if getattr(args, "n", None) is not None:
        kw["n"] = args.n
    try:
        return replace(cfg, **kw)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _read(path: str) -> list[simulate.SampleSet]:
    try:
        return simulate.read_dataset(path)
    except FileNotFoundError:
        raise UsageError(f"dataset not found: {path}") from None
    except DatasetError as e:
        raise UsageError(f"{path}: {e}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- subcommands -------------------------------------------------------------


def cmd_simulate(args) -> int:
    cfg = _apply_overrides(load_config(args.config), args)
    samples = simulate.run_simulation(cfg)
    if args.out:
        simulate.write_dataset(args.out, samples, cfg.decimals)
    if args.head is not None:
        print(simulate.format_head(samples, args.head, cfg.decimals))
    elif not args.out:
        sys.stdout.write(simulate.format_dataset(samples, cfg.decimals))
    return EXIT_OK


def cmd_check(args) -> int:
    samples = _read(args.dataset)
    matrix = axioms.check_all(samples)
    report = {"rows": matrix.to_json()}
    if args.out:
        Path(args.out).write_text(_dump(report), encoding="utf-8")
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        n = len(samples[0])
        print(f"Axiom Evaluation ({n} values x {len(samples)} columns):\n")
        print(matrix.render())
    if args.strict_dlo and not all(all(row) for row in matrix.passed()):
        return EXIT_DLO
    return EXIT_OK


def build_report(samples, cfg: SimulationConfig, weighting: str) -> dict:
    summaries = [stats.summarize(s) for s in samples]
    try:
        score, weights = stats.composite_score(summaries, cfg.themes, weighting)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return {
        "summary": [s.to_json() for s in summaries],
        "composite": {"weighting": weighting, "weights": weights.to_json(), "score": score},
    }


def cmd_report(args) -> int:
    samples = _read(args.dataset)
    cfg = load_config(args.config)
    report = build_report(samples, cfg, args.weighting)
    if args.out:
        Path(args.out).write_text(_dump(report), encoding="utf-8")
    sys.stdout.write(_dump(report))
    return EXIT_OK


def _plot_source(args) -> simulate.SampleSet:
    if args.source == "figure3":
        seed = args.seed if args.seed is not None else plot.FIGURE_SEED
        n = args.n if args.n is not None else plot.FIGURE_N
        if n < 1:
            raise UsageError(f"n must be >= 1, got {n}")
        return plot.figure_source(seed, n)
    if not args.source.startswith("theme:"):
        raise UsageError(f"--source must be 'figure3' or 'theme:<name>', got {args.source!r}")
    name = args.source[len("theme:") :]
    if args.dataset:
        samples = _read(args.dataset)
    else:
        samples = simulate.run_simulation(_apply_overrides(load_config(args.config), args))
    for s in samples:
        if s.theme == name:
            return s
    raise UsageError(f"no theme named {name!r}; available: {', '.join(s.theme for s in samples)}")


def cmd_plot(args) -> int:
    bundle = plot.build_bundle(_plot_source(args), args.bins)
    for p in plot.emit_plot(bundle, args.out):
        print(p)
    return EXIT_OK


def _verdict_row(verdicts) -> str:
    return "  ".join(f"{v.axiom.short}={v.passed}" for v in verdicts)


def cmd_ideal(args) -> int:
    if args.probes < 1:
        raise UsageError(f"--probes must be >= 1, got {args.probes}")
    seed = args.seed if args.seed is not None else _default_seed()
    if not 0 <= seed <= 0xFFFFFFFF:
        raise UsageError(f"seed must be a 32-bit unsigned integer, got {seed}")
    result = ideal.contrast(ideal.LIKERT_OPEN, args.probes, seed)
    chain = None
    if args.bisect:
        a, b, k = args.bisect
        try:
            chain = ideal.bisect_chain(Fraction(a), Fraction(b), int(k))
        except ValueError as e:
            raise UsageError(f"--bisect: {e}") from None
    if args.json:
        doc = {
            "interval": ["1", "5"],
            "probes": args.probes,
            "seed": seed,
            "ideal": [v.to_json() for v in result.ideal],
            "projected": [v.to_json() for v in result.projected],
        }
        if chain:
            doc["bisect"] = [{"lo": str(iv.lo), "hi": str(iv.hi), "width": str(iv.width)} for iv in chain]
        sys.stdout.write(_dump(doc))
        return EXIT_OK
    p0 = result.probes[0]
    up, down = ideal.above_witness(p0), ideal.below_witness(p0)
    print(f"open interval (1, 5) over the rationals, {args.probes} probes, seed {seed}")
    print(f"  probe            {p0}")
    print(f"  above_witness -> {up}")
    print(f"  below_witness -> {down}")
    print(f"  density_witness({p0}, {up}) -> {ideal.density_witness(p0, up)}")
    print(f"ideal rationals      {_verdict_row(result.ideal)}")
    print(f"4-decimal projection {_verdict_row(result.projected)}")
    for v in result.projected:
        if not v.passed:
            print(f"  {v.axiom.short} witness: {json.dumps(v.witness.to_json())}")
    if chain:
        print("bisection chain:")
        for i, iv in enumerate(chain):
            print(f"  {i}: ({iv.lo}, {iv.hi})  width {iv.width}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordinal-gate", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", help="generate the theme datasets as CSV")
    s.add_argument("--config", help="JSON config (themes, n, seed, lo, hi, decimals)")
    s.add_argument("--seed", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--out", help="write dataset CSV here (stdout if omitted and no --head)")
    s.add_argument("--head", type=int, help="print the first N rows as a table")
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("check", help="evaluate the six order axioms per column")
    c.add_argument("dataset")
    c.add_argument("--out", help="write the JSON report here")
    c.add_argument("--json", action="store_true", help="print JSON instead of the table")
    c.add_argument("--strict-dlo", action="store_true", help="exit 3 if any axiom fails")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("report", help="summaries and inverse-variance composite score")
    r.add_argument("dataset")
    r.add_argument("--config", help="JSON config supplying theme sigmas")
    r.add_argument("--weighting", choices=("spec", "sample"), default="spec")
    r.add_argument("--out", help="also write the JSON report here")
    r.set_defaults(func=cmd_report)

    g = sub.add_parser("plot", help="histogram, sine curve and tangents as SVG + CSV")
    g.add_argument("--out", default="figure4.svg")
    g.add_argument("--source", default="figure3", help="figure3 | theme:<name>")
    g.add_argument("--dataset", help="dataset CSV for theme sources (simulated if omitted)")
    g.add_argument("--config")
    g.add_argument("--seed", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--bins", type=int, default=50)
    g.set_defaults(func=cmd_plot)

    i = sub.add_parser("ideal", help="exact-rational order vs. its quantized projection")
    i.add_argument("--probes", type=int, default=1000)
    i.add_argument("--seed", type=int)
    i.add_argument("--bisect", nargs=3, metavar=("A", "B", "K"), help="show K bisection steps of (A, B)")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_ideal)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"ordinal-gate {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        where = f"{e.filename}: " if e.filename else ""
        print(f"ordinal-gate {args.command}: error: {where}{e.strerror or e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001
        print(f"ordinal-gate {args.command}: internal error: {e!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
