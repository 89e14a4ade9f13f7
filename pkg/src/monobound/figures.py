"""Curve tables comparing the parameterized bounds against earlier ones.

Each ``figureN`` evaluates the worked three-qubit example on an alpha grid.
The first column comes from the theorem evaluators in :mod:`monobound.monogamy`;
the competitor columns are written out from their own closed forms so the
two routes can be cross-checked.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import measures, monogamy, qstate
from .errors import ConfigError
from .ineq import BoundParams, alpha_min
from .measures import MeasureKind

ORDER_SLACK = 1e-12


@dataclass(frozen=True)
class FigureConfig:
    alpha_start: float
    alpha_end: float
    alpha_step: float = 0.25
    m: float = 2.0
    k: float = 0.8

    def grid(self) -> np.ndarray:
        if not self.alpha_step > 0:
            raise ConfigError(f"alpha step must be positive, got {self.alpha_step!r}")
        if self.alpha_end < self.alpha_start:
            raise ConfigError("alpha range is empty")
        n = int(math.floor((self.alpha_end - self.alpha_start) / self.alpha_step + 1e-9))
        return self.alpha_start + self.alpha_step * np.arange(n + 1)


FIGURE_DEFAULTS = {
    "figure1": FigureConfig(6.0, 20.0),
    "figure2": FigureConfig(6.0, 20.0),
    "figure3": FigureConfig(3.0, 12.0),
}


@dataclass
class CurveTable:
    alphas: np.ndarray
    columns: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def names(self) -> list[str]:
        return list(self.columns)

    def row(self, i: int) -> dict[str, float]:
        return {"alpha": float(self.alphas[i])} | {
            k: float(v[i]) for k, v in self.columns.items()
        }

    def ordering_violations(self, slack: float = ORDER_SLACK) -> list[tuple[float, str, str]]:
        """(alpha, upper, lower) for every adjacent pair out of top-to-bottom order."""
        bad = []
        names = self.names
        for upper, lower in zip(names, names[1:]):
            diff = self.columns[upper] - self.columns[lower]
            for a, d in zip(self.alphas, diff):
                if d < -slack:
                    bad.append((float(a), upper, lower))
        return bad

    def to_csv(self) -> str:
        buf = io.StringIO(newline="")
        buf.write(",".join(["alpha", *self.names]) + "\n")
        for i in range(len(self.alphas)):
            vals = [self.alphas[i], *(self.columns[c][i] for c in self.names)]
            buf.write(",".join(format_float(v) for v in vals) + "\n")
        return buf.getvalue()


def format_float(v: float) -> str:
    """17 significant digits, always '.' as decimal separator."""
    return "%.17g" % float(v)


def _check_start(cfg: FigureConfig, gamma: float):
    lo = alpha_min(cfg.m, gamma)
    if cfg.alpha_start < lo - 1e-12:
        raise ConfigError(
            f"alpha_start={cfg.alpha_start!r} is below the admissible minimum {lo!r} "
            f"for m={cfg.m!r}, gamma={gamma!r}"
        )


def example_pairwise(kind: MeasureKind, params: qstate.AcinParams) -> tuple[float, float, float]:
    """(E_A|BC, E_AB, E_AC) computed from the state and its reduced density matrices."""
    s = qstate.acin_state(params)
    e_rest = measures.measure(kind, s, 0, "rest")
    e_ab, e_ac = measures.pairwise_measures(kind, s)
    return e_rest, e_ab, e_ac


def _case1_table(e_ab: float, e_ac: float, cfg: FigureConfig, prefix: str) -> CurveTable:
    gamma = 2.0
    _check_start(cfg, gamma)
    alphas = cfg.grid()
    k = cfg.k
    cols = {f"{prefix}{i}": np.empty(len(alphas)) for i in range(1, 7)}
    for j, a in enumerate(alphas):
        y = a / gamma
        ab, ac = e_ab**a, e_ac**a
        kcoef = ((1 + k) ** y - 1) / k**y
        cols[f"{prefix}1"][j] = monogamy.thm2_bound(e_ab, e_ac, BoundParams(a, gamma, cfg.m, k))
        cols[f"{prefix}2"][j] = ab + (kcoef + k**y - (e_ac / e_ab) ** a) * ac
        cols[f"{prefix}3"][j] = ab + kcoef * ac
        cols[f"{prefix}4"][j] = ab + (2**y - 1) * ac
        cols[f"{prefix}5"][j] = ab + y * ac
        cols[f"{prefix}6"][j] = ab + ac
    return CurveTable(alphas, cols)


def figure1(cfg: FigureConfig = FIGURE_DEFAULTS["figure1"]) -> CurveTable:
    """Concurrence bounds Z1..Z6 for the first worked example."""
    _, c_ab, c_ac = example_pairwise(MeasureKind.CONCURRENCE, qstate.EXAMPLE_I)
    return _case1_table(c_ab, c_ac, cfg, "Z")


def figure2(cfg: FigureConfig = FIGURE_DEFAULTS["figure2"]) -> CurveTable:
    """CREN bounds W1..W6 for the second worked example."""
    _, n_ab, n_ac = example_pairwise(MeasureKind.CREN, qstate.EXAMPLE_II)
    return _case1_table(n_ab, n_ac, cfg, "W")


def figure3(cfg: FigureConfig = FIGURE_DEFAULTS["figure3"]) -> CurveTable:
    """Bures bounds T1..T4 for the third worked example (k is not used)."""
    gamma = 1.0
    _check_start(cfg, gamma)
    _, b_ab, b_ac = example_pairwise(MeasureKind.BURES, qstate.EXAMPLE_III)
    e1, e2 = monogamy.descending((b_ab, b_ac))
    tau = e1 / e2
    alphas = cfg.grid()
    cols = {f"T{i}": np.empty(len(alphas)) for i in range(1, 5)}
    for j, a in enumerate(alphas):
        cols["T1"][j] = monogamy.thm6_bound([e1, e2], BoundParams(a, gamma, cfg.m))
        cols["T2"][j] = e1**a + (2**a - tau ** (-a)) * e2**a
        cols["T3"][j] = e1**a + (2**a - 1) * e2**a
        cols["T4"][j] = e1**a + e2**a
    return CurveTable(alphas, cols)


FIGURES = {"figure1": figure1, "figure2": figure2, "figure3": figure3}
