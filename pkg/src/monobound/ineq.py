"""Scalar lower bounds for the binomial ``(1 + t)^x``.

Two regimes are covered: ``0 < t <= k <= 1`` (small ratio) and ``t >= k >= 1``
(large ratio). In both, ``m >= 0`` is a tightening parameter that is valid
whenever ``x >= 1 + log2(m + 2)``. Setting ``m = 0`` recovers earlier bounds.

The chain helpers return every competitor bound side by side so they can be
compared; each chain is ordered from tightest to loosest.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInputError

# Slack admitted at the domain edges (e.g. t == k computed from ratios).
DOMAIN_TOL = 1e-12


def min_exponent(m: float) -> float:
    """Smallest ``x`` for which the m-parameterized bounds hold."""
    return 1.0 + math.log2(m + 2.0)


def _check_xm(x: float, m: float):
    if not (math.isfinite(m) and m >= 0):
        raise InvalidInputError(f"m must be a finite number >= 0, got {m!r}")
    if not math.isfinite(x) or x < min_exponent(m) - DOMAIN_TOL:
        raise InvalidInputError(
            f"exponent x={x!r} below 1 + log2(m + 2) = {min_exponent(m)!r} for m={m!r}"
        )


@dataclass(frozen=True)
class BoundParams:
    """Exponent ``alpha``, monogamy power ``gamma``, tightening ``m`` and ratio cap ``k``."""

    alpha: float
    gamma: float
    m: float = 0.0
    k: float = 1.0

    def __post_init__(self):
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise InvalidInputError(f"gamma must be positive, got {self.gamma!r}")
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise InvalidInputError(f"alpha must be positive, got {self.alpha!r}")
        if not (self.k > 0 and math.isfinite(self.k)):
            raise InvalidInputError(f"k must be positive, got {self.k!r}")
        _check_xm(self.x, self.m)

    @property
    def x(self) -> float:
        return self.alpha / self.gamma

    def with_(self, **changes) -> "BoundParams":
        d = {"alpha": self.alpha, "gamma": self.gamma, "m": self.m, "k": self.k}
        d.update(changes)
        return BoundParams(**d)


def alpha_min(m: float, gamma: float) -> float:
    return min_exponent(m) * gamma


def optimal_m(alpha: float, gamma: float) -> int:
    """Largest integer m admissible for ``alpha``: floor(2^(alpha/gamma - 1) - 2)."""
    if alpha < 2 * gamma - DOMAIN_TOL:
        raise InvalidInputError(f"alpha={alpha!r} must be at least 2*gamma={2 * gamma!r}")
    m = max(math.floor(2.0 ** (alpha / gamma - 1.0) - 2.0), 0)
    # Guard against floor landing one above the threshold through rounding.
    while m > 0 and alpha_min(m, gamma) > alpha + DOMAIN_TOL:
        m -= 1
    return m


def h_func(x: float, y: float, m: float) -> float:
    """(1 + y)^x - y^x + y^-x - m x y, nondecreasing in y >= 1 for admissible x."""
    _check_xm(x, m)
    if not y >= 1.0:
        raise InvalidInputError(f"h is defined for y >= 1, got {y!r}")
    return (1.0 + y) ** x - y**x + y ** (-x) - m * x * y


def _check_case1(t, k):
    if not (0.0 <= t <= k + DOMAIN_TOL and 0.0 < k <= 1.0 + DOMAIN_TOL):
        raise InvalidInputError(f"small-ratio regime needs 0 < t <= k <= 1, got t={t!r}, k={k!r}")


def _check_case2(t, k):
    if not (math.isfinite(t) and t >= k - DOMAIN_TOL and k >= 1.0 - DOMAIN_TOL):
        raise InvalidInputError(f"large-ratio regime needs t >= k >= 1, got t={t!r}, k={k!r}")


def _k_coefficient(k: float, x: float) -> float:
    return ((1.0 + k) ** x - 1.0) / k**x


def case1_rhs(t: float, k: float, x: float, m: float) -> float:
    """Lower bound for (1+t)^x when 0 < t <= k <= 1.

    ``t = 0`` is accepted and returns the continuous limit 1.
    """
    _check_case1(t, k)
    _check_xm(x, m)
    tx = t**x
    # m x (1/t - 1/k) t^x written without the 1/t so t -> 0 is finite.
    m_term = m * x * (t ** (x - 1.0) - tx / k)
    return 1.0 + (_k_coefficient(k, x) + k**x - tx) * tx + m_term


def case2_rhs(t: float, k: float, x: float, m: float) -> float:
    """Lower bound for (1+t)^x when t >= k >= 1."""
    _check_case2(t, k)
    _check_xm(x, m)
    return t**x + (1.0 + k) ** x - k**x + k ** (-x) - t ** (-x) + m * x * (t - k)


def corollary_case1_rhs(t: float, x: float, m: float) -> float:
    """The k = 1 form: 1 + (2^x - t^x) t^x + m x (1/t - 1) t^x."""
    _check_case1(t, 1.0)
    _check_xm(x, m)
    tx = t**x
    return 1.0 + (2.0**x - tx) * tx + m * x * (t ** (x - 1.0) - tx)


def corollary_case2_rhs(t: float, x: float, m: float) -> float:
    """The k = 1 form: t^x + 2^x - t^-x + m x (t - 1)."""
    _check_case2(t, 1.0)
    _check_xm(x, m)
    return t**x + 2.0**x - t ** (-x) + m * x * (t - 1.0)


class Case1Chain(NamedTuple):
    """Small-ratio bounds, tightest first; ``with_m`` is :func:`case1_rhs`."""

    with_m: float
    k_corrected: float  # m = 0
    k_coefficient: float  # ((1+k)^x - 1)/k^x weight only
    flat: float  # 2^x - 1
    linear: float  # x
    plain: float  # 1 + t^x


class Case2Chain(NamedTuple):
    """Large-ratio bounds, tightest first; ``with_m`` is :func:`case2_rhs`."""

    with_m: float
    k_corrected: float  # m = 0
    k_shift: float  # drops k^-x - t^-x
    flat: float  # t^x + 2^x - 1
    plain: float  # t^x + 1


def case1_chain(t: float, k: float, x: float, m: float) -> Case1Chain:
    tx = t**x
    kc = _k_coefficient(k, x)
    return Case1Chain(
        with_m=case1_rhs(t, k, x, m),
        k_corrected=1.0 + (kc + k**x - tx) * tx,
        k_coefficient=1.0 + kc * tx,
        flat=1.0 + (2.0**x - 1.0) * tx,
        linear=1.0 + x * tx,
        plain=1.0 + tx,
    )


def case2_chain(t: float, k: float, x: float, m: float) -> Case2Chain:
    tx = t**x
    return Case2Chain(
        with_m=case2_rhs(t, k, x, m),
        k_corrected=tx + (1.0 + k) ** x - k**x + k ** (-x) - t ** (-x),
        k_shift=tx + (1.0 + k) ** x - k**x,
        flat=tx + 2.0**x - 1.0,
        plain=tx + 1.0,
    )
