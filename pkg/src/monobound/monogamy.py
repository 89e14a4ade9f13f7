"""Lower bounds on E(A|B_1...B_{N-1})^alpha from pairwise measures.

Every evaluator takes measure values (not states), so the same code serves
true quantum states and synthetic regression vectors. Hypotheses are checked
on gamma-th powers with an equality tolerance of 1e-12; measures below 1e-12
are rejected as degenerate rather than extrapolated.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DegenerateInputError, InvalidInputError, PreconditionError
from .ineq import BoundParams, _check_xm

ORDER_TOL = 1e-12
DEGENERATE_TOL = 1e-12


def _positive(values: Sequence[float], what: str) -> list[float]:
    out = []
    for i, v in enumerate(values):
        v = float(v)
        if not math.isfinite(v) or v < 0:
            raise InvalidInputError(f"{what}[{i}] = {v!r} is not a nonnegative number")
        if v < DEGENERATE_TOL:
            raise DegenerateInputError(f"{what}[{i}] = {v!r} vanishes; ratios are 0/0", index=i)
        out.append(v)
    return out


def _check_descending(e: Sequence[float], gamma: float):
    for i in range(len(e) - 1):
        if e[i] ** gamma < e[i + 1] ** gamma - ORDER_TOL:
            raise PreconditionError(
                f"measures must be in descending order: E_{i + 1}^gamma = {e[i] ** gamma!r} "
                f"< E_{i + 2}^gamma = {e[i + 1] ** gamma!r}",
                index=i + 1,
            )


def _k_factor(p: BoundParams) -> float:
    """M = ((1+k)^x - 1)/k^x + k^x with x = alpha/gamma."""
    x = p.x
    return ((1.0 + p.k) ** x - 1.0) / p.k**x + p.k**x


def thm1_bound(e_ab: float, e_ac: float, p: BoundParams) -> float:
    """Tripartite bound for E_AB^gamma >= E_AC^gamma > 0 (k = 1 form; p.k is ignored)."""
    return thm2_bound(e_ab, e_ac, p.with_(k=1.0))


def thm2_bound(e_ab: float, e_ac: float, p: BoundParams) -> float:
    """Tripartite bound for k E_AB^gamma >= E_AC^gamma > 0, 0 < k <= 1."""
    e_ab, e_ac = _positive((e_ab, e_ac), "E")
    g, a, x, k = p.gamma, p.alpha, p.x, p.k
    if not 0 < k <= 1:
        raise PreconditionError(f"k must lie in (0, 1], got {k!r}")
    if k * e_ab**g < e_ac**g - ORDER_TOL:
        raise PreconditionError(
            f"needs k E_AB^gamma >= E_AC^gamma, got {k * e_ab**g!r} < {e_ac**g!r}", index=1
        )
    bracket = (
        _k_factor(p)
        - (e_ac / e_ab) ** a
        + p.m * x * (e_ab**g / e_ac**g - 1.0 / k)
    )
    return e_ab**a + bracket * e_ac**a


@dataclass(frozen=True)
class PartitionedMeasures:
    """Inputs of the N-partite bound.

    ``pairwise[i]`` is E_{AB_{i+1}} (i = 0..N-2); ``tails[i]`` is
    E_{A|B_{i+2}...B_{N-1}} (i = 0..N-3); ``n`` is the regime split.
    """

    pairwise: tuple[float, ...]
    tails: tuple[float, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "pairwise", tuple(float(v) for v in self.pairwise))
        object.__setattr__(self, "tails", tuple(float(v) for v in self.tails))
        n_parties = len(self.pairwise) + 1
        if n_parties < 3:
            raise InvalidInputError("need at least two pairwise measures")
        if len(self.tails) != n_parties - 2:
            raise InvalidInputError(
                f"{len(self.pairwise)} pairwise measures need {n_parties - 2} tails, "
                f"got {len(self.tails)}"
            )
        if not 1 <= self.n <= n_parties - 2:
            raise InvalidInputError(f"split n={self.n} outside 1..{n_parties - 2}")

    @property
    def n_parties(self) -> int:
        return len(self.pairwise) + 1


def _mt_factors(e, tails, p: BoundParams, upto: int) -> list[float]:
    """(M_i + T_i) for i = 1..upto, checking k E_i^gamma >= tail_i^gamma."""
    g, a, k = p.gamma, p.alpha, p.k
    big_m = _k_factor(p)
    out = []
    for i in range(upto):
        if k * e[i] ** g < tails[i] ** g - ORDER_TOL:
            raise PreconditionError(
                f"regime condition k E_AB{i + 1}^gamma >= E_tail{i + 1}^gamma fails "
                f"at index {i + 1}",
                index=i + 1,
            )
        m_i = big_m - (tails[i] / e[i]) ** a
        t_i = p.m * p.x * (e[i] ** g / tails[i] ** g - 1.0 / k)
        out.append(m_i + t_i)
    return out


def thm3_bound(pm: PartitionedMeasures, p: BoundParams) -> float:
    """N-partite bound with the regime split at ``pm.n``."""
    if not 0 < p.k <= 1:
        raise PreconditionError(f"k must lie in (0, 1], got {p.k!r}")
    e = _positive(pm.pairwise, "pairwise")
    tails = _positive(pm.tails, "tails")
    g, a, k = p.gamma, p.alpha, p.k
    n, last = pm.n, pm.n_parties - 1  # last = N - 1
    factors = _mt_factors(e, tails, p, n)

    total = e[0] ** a
    prod = 1.0
    for i in range(1, n):
        prod *= factors[i - 1]
        total += prod * e[i] ** a
    prod *= factors[n - 1]

    big_m = _k_factor(p)
    inner = e[last - 1] ** a
    for j in range(n + 1, last):  # j = n+1 .. N-2 (1-based)
        ej, tj = e[j - 1], tails[j - 1]
        if ej**g > k * tj**g + ORDER_TOL:
            raise PreconditionError(
                f"regime condition E_AB{j}^gamma <= k E_tail{j}^gamma fails at index {j}",
                index=j,
            )
        q_j = big_m - (ej / tj) ** a
        p_j = p.m * p.x * (tj**g / ej**g - 1.0 / k)
        inner += (q_j + p_j) * ej**a
    return total + prod * inner


def cor4_bound(pairwise: Sequence[float], tails: Sequence[float], p: BoundParams) -> float:
    """N-partite bound when every split satisfies k E_AB_i^gamma >= tail_i^gamma."""
    if not 0 < p.k <= 1:
        raise PreconditionError(f"k must lie in (0, 1], got {p.k!r}")
    e = _positive(pairwise, "pairwise")
    tails = _positive(tails, "tails")
    if len(tails) != len(e) - 1 or len(e) < 2:
        raise InvalidInputError(f"{len(e)} pairwise measures need {len(e) - 1} tails")
    factors = _mt_factors(e, tails, p, len(tails))
    total = e[0] ** p.alpha
    prod = 1.0
    for i, f in enumerate(factors):
        prod *= f
        total += prod * e[i + 1] ** p.alpha
    return total


def lemma5_rhs(pvals: Sequence[float], x: float, m: float) -> float:
    """Lower bound for (p_1 + ... + p_N)^x with p_1 >= ... >= p_N > 0."""
    _check_xm(x, m)
    p = _positive(pvals, "p")
    if not p:
        raise InvalidInputError("need at least one value")
    _check_descending(p, 1.0)
    total = p[0] ** x
    partial = p[0]
    for i in range(2, len(p) + 1):
        pi = p[i - 1]
        s = partial / pi
        coeff = i**x - (i - 1) ** x + (i - 1) ** (-x) - s ** (-x) + m * x * (s - (i - 1))
        total += coeff * pi**x
        partial += pi
    return total


def taus(e: Sequence[float], gamma: float) -> list[float]:
    """tau_i = (E_1^g + ... + E_{i-1}^g) / E_i^g for i = 2..len(e)."""
    powers = [v**gamma for v in e]
    return [math.fsum(powers[: i - 1]) / powers[i - 1] for i in range(2, len(e) + 1)]


class Cor7Chain(NamedTuple):
    full: float
    without_m: float
    without_tau: float
    flat: float
    plain: float


def cor7_chain(e: Sequence[float], p: BoundParams) -> Cor7Chain:
    """Descending-order bounds from tightest to loosest.

    ``full`` carries the m-term, ``without_m`` drops it, ``without_tau``
    also drops the (i-1)^-x - tau_i^-x correction, ``flat`` uses the
    constant coefficient 2^x - 1 and ``plain`` is the bare power sum.
    """
    e = _positive(e, "E")
    _check_descending(e, p.gamma)
    a, x = p.alpha, p.x
    head = e[0] ** a
    full = without_m = without_tau = flat = plain = head
    for i, tau in zip(range(2, len(e) + 1), taus(e, p.gamma)):
        ea = e[i - 1] ** a
        step = i**x - (i - 1) ** x
        corr = (i - 1) ** (-x) - tau ** (-x)
        without_tau += step * ea
        without_m += (step + corr) * ea
        full += (step + corr + p.m * x * (tau - (i - 1))) * ea
        flat += (2.0**x - 1.0) * ea
        plain += ea
    return Cor7Chain(full, without_m, without_tau, flat, plain)


def thm6_bound(e: Sequence[float], p: BoundParams) -> float:
    return cor7_chain(e, p).full


def bures_simple_bound(e: Sequence[float], alpha: float) -> float:
    """E_1^a + sum_i [i^a - (i-1)^a] E_i^a for descending E, alpha >= 1."""
    if not alpha >= 1:
        raise InvalidInputError(f"alpha must be >= 1, got {alpha!r}")
    e = _positive(e, "E")
    _check_descending(e, 1.0)
    return e[0] ** alpha + math.fsum(
        (i**alpha - (i - 1) ** alpha) * e[i - 1] ** alpha for i in range(2, len(e) + 1)
    )


def descending(values: Sequence[float]) -> list[float]:
    """Relabel the B parties so measures are in descending order."""
    return sorted((float(v) for v in values), reverse=True)



BOUND_NAMES = (
    "thm1", "thm2", "cor4", "thm3",
    "cor7_full", "cor7_without_m", "cor7_without_tau", "cor7_flat", "cor7_plain",
    "bures_simple",
)


def evaluate_bounds(pairwise: Sequence[float], p: BoundParams, *, bures: bool = False) -> dict:
    """Evaluate every bound that pairwise measures alone can feed.

    The B parties are relabeled into descending order first. Values are
    floats; a bound that cannot be evaluated maps to a short reason string.
    Bounds needing tail measures of mixed multi-qubit states (``thm3``, and
    ``cor4`` beyond three parties) are only evaluated for three parties,
    where the single tail is a pairwise measure.
    """
    e = descending(pairwise)
    out: dict[str, float | str] = {}

    def attempt(name, fn):
        try:
            out[name] = fn()
        except DegenerateInputError:
            out[name] = "skipped: degenerate (vanishing measure)"
        except PreconditionError as exc:
            out[name] = f"skipped: precondition fails ({exc})"

    if len(e) == 2:
        attempt("thm1", lambda: thm1_bound(e[0], e[1], p))
        attempt("thm2", lambda: thm2_bound(e[0], e[1], p))
        attempt("cor4", lambda: cor4_bound(e, [e[1]], p))
        out["thm3"] = "skipped: needs at least four parties"
    else:
        reason = "skipped: needs tail measures of mixed multi-qubit states"
        for name in ("thm1", "thm2"):
            out[name] = "skipped: three-party bound"
        out["cor4"] = out["thm3"] = reason

    chain_names = BOUND_NAMES[4:9]
    try:
        for name, val in zip(chain_names, cor7_chain(e, p)):
            out[name] = val
    except DegenerateInputError:
        for name in chain_names:
            out[name] = "skipped: degenerate (vanishing measure)"
    if bures:
        attempt("bures_simple", lambda: bures_simple_bound(e, p.alpha))
    return out
