"""Command-line entry point: ``monobound <command> [options]``.

Exit status: 0 success, 1 verification failure, 2 usage or configuration
error, 3 unreadable or malformed state file.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass

from . import figures, measures, monogamy, qstate, verify
from .errors import ConfigError, InvalidInputError, StateFileError
from .figures import FIGURE_DEFAULTS, FigureConfig, format_float
from .ineq import BoundParams, alpha_min
from .measures import MeasureKind

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3
COMMANDS = ("figure1", "figure2", "figure3", "measure", "compare", "verify")


@dataclass
class RunConfig:
    command: str
    alpha_start: float | None = None
    alpha_end: float | None = None
    alpha_step: float | None = None
    m: float | None = None
    k: float | None = None
    seed: int = 0
    samples: int = 10_000
    input_path: str | None = None
    output_path: str | None = None
    measure: str = "concurrence"

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.alpha_step is not None and not self.alpha_step > 0:
            raise ConfigError("--alpha-step must be positive")
        if self.m is not None and not self.m >= 0:
            raise ConfigError("--m must be >= 0")
        if self.k is not None and not self.k > 0:
            raise ConfigError("--k must be positive")
        if self.samples < 1:
            raise ConfigError("--samples must be at least 1")
        if self.seed < 0:
            raise ConfigError("--seed must be a nonnegative integer")
        if self.command in ("measure", "compare") and not self.input_path:
            raise ConfigError(f"{self.command} needs --input")

    def figure_config(self) -> FigureConfig:
        d = FIGURE_DEFAULTS[self.command]
        return FigureConfig(
            alpha_start=d.alpha_start if self.alpha_start is None else self.alpha_start,
            alpha_end=d.alpha_end if self.alpha_end is None else self.alpha_end,
            alpha_step=d.alpha_step if self.alpha_step is None else self.alpha_step,
            m=d.m if self.m is None else self.m,
            k=d.k if self.k is None else self.k,
        )


def party_names(n_parties: int) -> list[str]:
    if n_parties <= 3:
        return ["A", "B", "C"][:n_parties]
    return ["A"] + [f"B{i}" for i in range(1, n_parties)]


def _fmt(v) -> str:
    return format_float(v) if isinstance(v, float) else str(v)


def _bound_params(cfg: RunConfig, kind: MeasureKind, alpha: float | None = None):
    m = 0.0 if cfg.m is None else cfg.m
    k = 1.0 if cfg.k is None else cfg.k
    if alpha is None:
        alpha = cfg.alpha_start if cfg.alpha_start is not None else alpha_min(m, kind.gamma)
    try:
        return BoundParams(alpha, kind.gamma, m, k)
    except InvalidInputError as exc:
        raise ConfigError(f"{kind.value}: {exc}") from exc


def measure_report(cfg: RunConfig, state: qstate.PureState) -> list[tuple[str, str]]:
    """Key/value rows: every measure, then every bound at the configured alpha."""
    names = party_names(state.n_parties)
    rest = "".join(names[1:])
    rows: list[tuple[str, str]] = []
    allm = measures.all_measures(state)
    for kind, (e_rest, pairs) in allm.items():
        rows.append((f"{kind.label}_A|{rest}", _fmt(e_rest)))
        for name, v in zip(names[1:], pairs):
            rows.append((f"{kind.label}_A{name}", _fmt(v)))
    for kind, (e_rest, pairs) in allm.items():
        p = _bound_params(cfg, kind)
        tag = f"{kind.label}[alpha={p.alpha!r};m={p.m!r};k={p.k!r}]"
        rows.append((f"{tag}.truth", _fmt(e_rest**p.alpha)))
        for name, v in monogamy.evaluate_bounds(pairs, p, bures=kind is MeasureKind.BURES).items():
            rows.append((f"{tag}.{name}", _fmt(v)))
    return rows


def compare_table(cfg: RunConfig, state: qstate.PureState) -> str:
    kind = MeasureKind(cfg.measure)
    e_rest, pairs = measures.all_measures(state)[kind]
    m = 0.0 if cfg.m is None else cfg.m
    start = alpha_min(m, kind.gamma) if cfg.alpha_start is None else cfg.alpha_start
    end = 2 * start + 6 if cfg.alpha_end is None else cfg.alpha_end
    step = 0.25 if cfg.alpha_step is None else cfg.alpha_step
    grid = FigureConfig(start, end, step).grid()
    names = list(monogamy.BOUND_NAMES)
    if kind is not MeasureKind.BURES:
        names.remove("bures_simple")
    lines = [",".join(["alpha", "truth", *names])]
    for a in grid:
        res = monogamy.evaluate_bounds(pairs, _bound_params(cfg, kind, float(a)),
                                       bures=kind is MeasureKind.BURES)
        # Skipped bounds leave an empty field.
        cells = [format_float(a), format_float(e_rest**a)]
        cells += [format_float(res[n]) if isinstance(res.get(n), float) else "" for n in names]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha-start", type=float)
    common.add_argument("--alpha-end", type=float)
    common.add_argument("--alpha-step", type=float)
    common.add_argument("--m", type=float)
    common.add_argument("--k", type=float)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=10_000)
    common.add_argument("--input", dest="input_path")
    common.add_argument("--output", dest="output_path")

    parser = argparse.ArgumentParser(prog="monobound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("figure1", "concurrence bounds Z1..Z6 for the first worked example (CSV)"),
        ("figure2", "CREN bounds W1..W6 for the second worked example (CSV)"),
        ("figure3", "Bures bounds T1..T4 for the third worked example (CSV)"),
        ("measure", "measures and applicable bounds for a state file (key,value CSV)"),
        ("compare", "all bounds against the true value over an alpha grid (CSV)"),
        ("verify", "run every randomized verification suite"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name == "compare":
            sp.add_argument("--measure", choices=[k.value for k in MeasureKind],
                            default="concurrence")
    return parser


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    cfg.validate()
    if cfg.command in figures.FIGURES:
        table = figures.FIGURES[cfg.command](cfg.figure_config())
        _emit(table.to_csv(), cfg.output_path)
        return EXIT_OK
    if cfg.command == "verify":
        results = verify.run_suites(seed=cfg.seed, samples=cfg.samples)
        _emit(verify.summary(results), cfg.output_path)
        return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    state = qstate.load_state(cfg.input_path)
    if cfg.command == "measure":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(measure_report(cfg, state))
        text = buf.getvalue()
    else:
        text = compare_table(cfg, state)
    _emit(text, cfg.output_path)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    try:
        return run(cfg)
    except StateFileError as exc:
        print(f"monobound: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, InvalidInputError) as exc:
        print(f"monobound: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
