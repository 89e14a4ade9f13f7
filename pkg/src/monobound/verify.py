"""Randomized verification suites for every inequality the package implements.

Each suite draws its samples in a fixed number of chunks; chunk ``c`` is
seeded from ``seed + c`` (mixed with the suite name), so results do not
depend on how many worker threads run the chunks. Suites look kernels up
through their modules at call time, which lets tests inject faults.
"""
from __future__ import annotations

import math
import os
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import ineq, measures, monogamy, qstate
from .errors import InvalidInputError
from .measures import MeasureKind

REL_SLACK = 1e-9
ABS_FLOOR = 1e-12
ORDER_REL = 1e-12
N_CHUNKS = 8


@dataclass
class ChunkResult:
    samples: int = 0
    max_violation: float = 0.0
    failures: list[str] = field(default_factory=list)

    def record(self, violation: float, ok: bool, describe: Callable[[], str]):
        self.samples += 1
        if violation > self.max_violation:
            self.max_violation = violation
        if not ok and len(self.failures) < 5:
            self.failures.append(describe())


@dataclass
class SuiteResult:
    name: str
    samples: int
    max_violation: float
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name},{self.samples},{self.max_violation:.6e},{status}"


def _upper_check(lhs: float, rhs: float) -> tuple[float, bool]:
    """Relative excess of a claimed lower bound ``rhs`` over the truth ``lhs``."""
    excess = rhs - lhs
    tol = max(REL_SLACK * abs(lhs), ABS_FLOOR)
    return max(excess, 0.0) / max(abs(lhs), ABS_FLOOR), excess <= tol


def _order_check(values) -> tuple[float, bool]:
    worst, ok = 0.0, True
    for hi, lo in zip(values, values[1:]):
        scale = max(1.0, abs(hi), abs(lo))
        v = (lo - hi) / scale
        worst = max(worst, v)
        ok &= v <= ORDER_REL
    return worst, ok


def _sample_xm(rng) -> tuple[float, float]:
    m = rng.uniform(0.0, 6.0)
    x = rng.uniform(ineq.min_exponent(m), 12.0)
    return x, m


# -- scalar suites ------------------------------------------------------------


def suite_lemma21_case1(rng, n, out: ChunkResult):
    for _ in range(n):
        k = rng.uniform(1e-3, 1.0)
        t = rng.uniform(1e-6, 1.0) * k
        x, m = _sample_xm(rng)
        lhs = (1.0 + t) ** x
        v, ok = _upper_check(lhs, ineq.case1_rhs(t, k, x, m))
        out.record(v, ok, lambda: f"t={t!r} k={k!r} x={x!r} m={m!r}")


def suite_lemma21_case2(rng, n, out: ChunkResult):
    for _ in range(n):
        k = rng.uniform(1.0, 50.0)
        t = rng.uniform(k, 50.0)
        x, m = _sample_xm(rng)
        lhs = (1.0 + t) ** x
        v, ok = _upper_check(lhs, ineq.case2_rhs(t, k, x, m))
        out.record(v, ok, lambda: f"t={t!r} k={k!r} x={x!r} m={m!r}")


def suite_corollary22(rng, n, out: ChunkResult):
    for _ in range(n):
        x, m = _sample_xm(rng)
        t1 = rng.uniform(1e-6, 1.0)
        t2 = rng.uniform(1.0, 50.0)
        a, b = ineq.case1_rhs(t1, 1.0, x, m), ineq.corollary_case1_rhs(t1, x, m)
        c, d = ineq.case2_rhs(t2, 1.0, x, m), ineq.corollary_case2_rhs(t2, x, m)
        v = max(abs(a - b) / max(1.0, abs(b)), abs(c - d) / max(1.0, abs(d)))
        out.record(v, v <= ORDER_REL, lambda: f"t1={t1!r} t2={t2!r} x={x!r} m={m!r}")


def suite_h_monotone(rng, n, out: ChunkResult):
    for _ in range(n):
        x, m = _sample_xm(rng)
        y1 = rng.uniform(1.0, 10.0)
        y2 = y1 + rng.exponential(1.0)
        h1, h2 = ineq.h_func(x, y1, m), ineq.h_func(x, y2, m)
        v = max(h1 - h2, 0.0) / max(1.0, abs(h1))
        out.record(v, v <= ORDER_REL, lambda: f"x={x!r} m={m!r} y1={y1!r} y2={y2!r}")


def suite_case1_chain(rng, n, out: ChunkResult):
    for _ in range(n):
        k = rng.uniform(1e-3, 1.0)
        t = rng.uniform(1e-6, 1.0) * k
        x, m = _sample_xm(rng)
        v, ok = _order_check(list(ineq.case1_chain(t, k, x, m)))
        out.record(v, ok, lambda: f"t={t!r} k={k!r} x={x!r} m={m!r}")


def suite_case2_chain(rng, n, out: ChunkResult):
    for _ in range(n):
        k = rng.uniform(1.0, 50.0)
        t = rng.uniform(k, 50.0)
        x, m = _sample_xm(rng)
        v, ok = _order_check(list(ineq.case2_chain(t, k, x, m)))
        out.record(v, ok, lambda: f"t={t!r} k={k!r} x={x!r} m={m!r}")


def suite_lemma35(rng, n, out: ChunkResult):
    for _ in range(n):
        size = int(rng.integers(2, 7))
        p = sorted(rng.uniform(1e-3, 1.0, size).tolist(), reverse=True)
        x, m = _sample_xm(rng)
        lhs = math.fsum(p) ** x
        v, ok = _upper_check(lhs, monogamy.lemma5_rhs(p, x, m))
        out.record(v, ok, lambda: f"p={p!r} x={x!r} m={m!r}")


def suite_bures_monotone(rng, n, out: ChunkResult):
    # Deterministic 10^4-point grid, run once regardless of sample count.
    grid = np.linspace(0.0, 1.0, 10_001)
    vals = [measures.bures_from_concurrence(c) for c in grid]
    for i in range(1, len(vals)):
        v = max(vals[i - 1] - vals[i], 0.0)
        out.record(v, vals[i] > vals[i - 1], lambda: f"c={grid[i - 1]!r}..{grid[i]!r}")


# -- quantum suites -----------------------------------------------------------


def _monogamy_check(s: qstate.PureState, out: ChunkResult):
    allm = measures.all_measures(s)
    c_rest, c_pairs = allm[MeasureKind.CONCURRENCE]
    n_rest, n_pairs = allm[MeasureKind.CREN]
    for lhs, rhs in ((c_rest**2, sum(c * c for c in c_pairs)), (n_rest**2, sum(c * c for c in n_pairs))):
        excess = rhs - lhs
        out.record(max(excess, 0.0), excess <= REL_SLACK, lambda: qstate.state_to_json(s))


def suite_monogamy_3q(rng, n, out: ChunkResult):
    for _ in range(n):
        _monogamy_check(qstate.random_pure_state(3, rng), out)


def suite_monogamy_4q(rng, n, out: ChunkResult):
    for _ in range(n):
        _monogamy_check(qstate.random_pure_state(4, rng), out)


def alpha_grid(m: float, gamma: float, points: int = 9) -> np.ndarray:
    lo = ineq.alpha_min(m, gamma)
    return np.linspace(lo, 2 * lo + 6, points)


def tripartite_bounds(e_ab, e_ac, kind: MeasureKind, alpha, m, k) -> dict[str, float]:
    """Numeric bounds only; skipped ones are dropped."""
    try:
        p = ineq.BoundParams(alpha, kind.gamma, m, k)
    except InvalidInputError:
        return {}
    res = monogamy.evaluate_bounds([e_ab, e_ac], p, bures=kind is MeasureKind.BURES)
    return {name: v for name, v in res.items() if isinstance(v, float)}


def _soundness_state(s: qstate.PureState, rng, out: ChunkResult):
    _monogamy_check(s, out)
    for kind, (truth, (e_ab, e_ac)) in measures.all_measures(s).items():
        if min(e_ab, e_ac) < monogamy.DEGENERATE_TOL:
            continue
        g = kind.gamma
        e1, e2 = monogamy.descending((e_ab, e_ac))
        t = (e2 / e1) ** g
        m = float(rng.choice([0.0, 1.0, 2.0, 4.0]))
        for k in (min(max(t, 1e-12), 1.0), 0.5 * (1.0 + t)):
            for alpha in alpha_grid(m, g):
                lhs = truth**alpha
                for name, rhs in tripartite_bounds(e_ab, e_ac, kind, alpha, m, k).items():
                    v, ok = _upper_check(lhs, rhs)
                    out.record(
                        v, ok,
                        lambda: f"{kind.value} {name} alpha={alpha!r} m={m} k={k!r} "
                        f"state={qstate.state_to_json(s)}",
                    )


def suite_soundness_acin(rng, n, out: ChunkResult):
    for _ in range(n):
        _soundness_state(qstate.acin_state(qstate.AcinParams.random(rng)), rng, out)


def suite_soundness_haar(rng, n, out: ChunkResult):
    for _ in range(n):
        _soundness_state(qstate.random_pure_state(3, rng), rng, out)


def encoded_four_qubit(rng) -> tuple[qstate.PureState, qstate.PureState]:
    """A 4-qubit state whose 3-party tail is effectively a two-qubit state.

    A random 3-qubit state on (A, B1, X) has X embedded into (B2, B3) by a
    random isometry. Local isometries leave entanglement unchanged, so
    E(A|B2B3) equals the two-qubit measure of rho_AX. Returns (4-qubit
    state, 3-qubit seed state).
    """
    seed_state = qstate.random_pure_state(3, rng)
    z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    q, _ = np.linalg.qr(z)
    iso = q[:, :2]  # columns: images of |0>, |1>
    psi = seed_state.amplitudes.reshape(2, 2, 2)
    amps = np.einsum("abx,yx->aby", psi, iso).reshape(16)
    return qstate.PureState.from_unnormalized((2, 2, 2, 2), amps), seed_state


def nparty_inputs(kind: MeasureKind, rng):
    """(truth, pairwise[3], tails[2]) for an encoded 4-qubit state."""
    s, seed_state = encoded_four_qubit(rng)
    truth, pairwise = measures.all_measures(s)[kind]
    tail1 = measures.measure(kind, seed_state, 0, 2)
    return truth, pairwise, [tail1, pairwise[2]], s


def suite_soundness_nparty(rng, n, out: ChunkResult):
    """Regime-split and all-split N-partite bounds on encoded 4-qubit states."""
    for _ in range(n):
        for kind in (MeasureKind.CONCURRENCE, MeasureKind.CREN):
            truth, e, tails, s = nparty_inputs(kind, rng)
            if min(*e, *tails) < monogamy.DEGENERATE_TOL:
                continue
            g = kind.gamma
            m = float(rng.choice([0.0, 1.0, 2.0]))
            # Smallest k admitting each regime; skip when none exists in (0, 1].
            k3 = max((tails[0] / e[0]) ** g, (e[1] / tails[1]) ** g)
            k4 = max((tails[0] / e[0]) ** g, (tails[1] / e[1]) ** g)
            for alpha in alpha_grid(m, g, points=5):
                lhs = truth**alpha
                cands = []
                if k3 <= 1.0:
                    p = ineq.BoundParams(alpha, g, m, k3)
                    cands.append(("thm3", monogamy.thm3_bound(monogamy.PartitionedMeasures(e, tails, 1), p)))
                if k4 <= 1.0:
                    p = ineq.BoundParams(alpha, g, m, k4)
                    cands.append(("cor4", monogamy.cor4_bound(e, tails, p)))
                for name, rhs in cands:
                    v, ok = _upper_check(lhs, rhs)
                    out.record(v, ok, lambda: f"{kind.value} {name} alpha={alpha!r} state={qstate.state_to_json(s)}")


@dataclass(frozen=True)
class Suite:
    name: str
    fn: Callable
    per_samples: float  # sample count as a fraction of the configured total


SUITES = [
    Suite("lemma2.1(i)", suite_lemma21_case1, 1.0),
    Suite("lemma2.1(ii)", suite_lemma21_case2, 1.0),
    Suite("corollary2.2", suite_corollary22, 1.0),
    Suite("h_monotone", suite_h_monotone, 1.0),
    Suite("case1_chain", suite_case1_chain, 1.0),
    Suite("case2_chain", suite_case2_chain, 1.0),
    Suite("lemma3.5", suite_lemma35, 1.0),
    Suite("bures_monotone", suite_bures_monotone, 0.0),
    Suite("monogamy_3q", suite_monogamy_3q, 0.1),
    Suite("monogamy_4q", suite_monogamy_4q, 0.02),
    Suite("soundness_acin", suite_soundness_acin, 0.05),
    Suite("soundness_haar", suite_soundness_haar, 0.02),
    Suite("soundness_nparty", suite_soundness_nparty, 0.02),
]


def _chunk_counts(total: int) -> list[int]:
    base, rem = divmod(total, N_CHUNKS)
    return [base + (1 if c < rem else 0) for c in range(N_CHUNKS)]


def _run_chunk(suite: Suite, seed: int, chunk: int, count: int) -> ChunkResult:
    out = ChunkResult()
    if suite.per_samples == 0.0:
        if chunk == 0:
            suite.fn(None, 0, out)
        return out
    ss = np.random.SeedSequence([seed + chunk, zlib.crc32(suite.name.encode())])
    suite.fn(np.random.default_rng(ss), count, out)
    return out


def worker_count() -> int:
    env = os.environ.get("MONOGAMY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(N_CHUNKS, os.cpu_count() or 1)


def run_suites(seed: int = 0, samples: int = 10_000, threads: int | None = None,
               only: list[str] | None = None) -> list[SuiteResult]:
    suites = [s for s in SUITES if only is None or s.name in only]
    jobs = []
    for s in suites:
        total = max(1, round(samples * s.per_samples)) if s.per_samples else 0
        for c, n in enumerate(_chunk_counts(total)):
            jobs.append((s, c, n))
    threads = threads or worker_count()
    if threads == 1:
        chunks = [_run_chunk(s, seed, c, n) for s, c, n in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda j: _run_chunk(j[0], seed, j[1], j[2]), jobs))

    results = []
    for s in suites:
        mine = [ch for (suite, _, _), ch in zip(jobs, chunks) if suite is s]
        failures = [f for ch in mine for f in ch.failures][:5]
        results.append(SuiteResult(
            s.name,
            sum(ch.samples for ch in mine),
            max((ch.max_violation for ch in mine), default=0.0),
            failures,
        ))
    return results


def summary(results: list[SuiteResult]) -> str:
    lines = ["suite,samples,max_violation,status"]
    lines += [r.summary_line() for r in results]
    for r in results:
        for f in r.failures:
            lines.append(f"# {r.name} violation: {f}")
    return "\n".join(lines) + "\n"
