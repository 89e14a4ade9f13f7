"""Bipartite entanglement measures: concurrence, CREN and the Bures measure.

Conventions
-----------
* Pure qubit-vs-rest concurrence is ``sqrt(2 (1 - tr rho_A^2))``.
* Two-qubit mixed concurrence uses the Wootters spectral formula.
* CREN equals the Wootters concurrence on two-qubit states and the negativity
  ``||rho^{T_A}||_1 - 1`` on pure qubit-vs-rest splits.
* The Bures measure of a two-qubit state is ``B(C)`` with
  ``B(x) = 2 - 2 sqrt((1 + sqrt(1 - x^2)) / 2)``.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from . import cmatrix
from .errors import InvalidInputError
from .qstate import PureState, density, reduced

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_YY = np.kron(SIGMA_Y, SIGMA_Y)
UNIT_TOL = 1e-12


class MeasureKind(enum.Enum):
    CONCURRENCE = "concurrence"
    CREN = "cren"
    BURES = "bures"

    @property
    def gamma(self) -> float:
        """Smallest power for which the measure is known to be monogamous."""
        return 1.0 if self is MeasureKind.BURES else 2.0

    @property
    def label(self) -> str:
        return {"concurrence": "C", "cren": "Nc", "bures": "EB"}[self.value]


def _check_qubit(s: PureState, party: int):
    if not 0 <= party < s.n_parties:
        raise InvalidInputError(f"party {party} out of range for {s.n_parties} parties")
    if s.dims[party] != 2:
        raise InvalidInputError(f"party {party} has dimension {s.dims[party]}, expected a qubit")


def _clamp_unit(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def concurrence_pure(s: PureState, party_a: int = 0) -> float:
    _check_qubit(s, party_a)
    rho_a = reduced(s, {party_a})
    purity = float(np.real(np.trace(rho_a @ rho_a)))
    return _clamp_unit(math.sqrt(max(2.0 * (1.0 - purity), 0.0)))


def wootters_concurrence(rho) -> float:
    rho = cmatrix.as_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidInputError(f"Wootters concurrence needs a 4x4 matrix, got {rho.shape}")
    if not cmatrix.is_density(rho):
        raise InvalidInputError("Wootters concurrence needs a density matrix")
    root = cmatrix.sqrt_psd(rho)
    # R = sqrt(rho) rho~ sqrt(rho) = A A^dagger with A = sqrt(rho) Y sqrt(rho)^*, so the
    # sqrt(mu_i) are the singular values of A. Reading them off the Hermitian
    # dilation [[0, A], [A^dagger, 0]] (eigenvalues +-sigma_i) avoids square roots
    # of round-off sized mu_i on rank-deficient inputs.
    a = root @ _YY @ np.conj(root)
    dilation = np.block([[np.zeros((4, 4)), a], [cmatrix.dagger(a), np.zeros((4, 4))]])
    dilation = 0.5 * (dilation + cmatrix.dagger(dilation))
    sigma = np.clip(cmatrix.hermitian_eig(dilation)[0][::-1][:4], 0.0, None)
    return _clamp_unit(float(sigma[0] - sigma[1] - sigma[2] - sigma[3]))


def cren_two_qubit(rho) -> float:
    return wootters_concurrence(rho)


def negativity_pure(s: PureState, party_a: int = 0) -> float:
    _check_qubit(s, party_a)
    pt = cmatrix.partial_transpose(density(s), s.dims, party_a)
    return _clamp_unit(cmatrix.trace_norm(pt) - 1.0)


def bures_from_concurrence(c: float) -> float:
    c = float(c)
    if not math.isfinite(c) or c < -UNIT_TOL or c > 1.0 + UNIT_TOL:
        raise InvalidInputError(f"concurrence {c!r} outside [0, 1]")
    c = _clamp_unit(c)
    return 2.0 - 2.0 * math.sqrt((1.0 + math.sqrt(1.0 - c * c)) / 2.0)


def pair_state(s: PureState, party_a: int, party_b: int) -> np.ndarray:
    _check_qubit(s, party_a)
    _check_qubit(s, party_b)
    if party_a == party_b:
        raise InvalidInputError("pairwise measure needs two distinct parties")
    rho = reduced(s, {party_a, party_b})
    if party_a > party_b:
        # reduced() orders kept parties ascending; put party_a first.
        rho = rho.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
    return rho


def measure(kind: MeasureKind, s: PureState, party_a: int = 0, party_b=None) -> float:
    """Evaluate ``kind`` on A|rest (``party_b`` None or "rest") or on the pair (A, B)."""
    kind = MeasureKind(kind)
    if party_b is None or party_b == "rest":
        if kind is MeasureKind.CREN:
            return negativity_pure(s, party_a)
        c = concurrence_pure(s, party_a)
        return bures_from_concurrence(c) if kind is MeasureKind.BURES else c
    c = wootters_concurrence(pair_state(s, party_a, int(party_b)))
    return bures_from_concurrence(c) if kind is MeasureKind.BURES else c


def pairwise_measures(kind: MeasureKind, s: PureState) -> list[float]:
    """``[E_{AB_1}, ..., E_{AB_{N-1}}]`` with A = party 0."""
    return [measure(kind, s, 0, b) for b in range(1, s.n_parties)]


def all_measures(s: PureState) -> dict[MeasureKind, tuple[float, list[float]]]:
    """(E_A|rest, pairwise list) for every kind, sharing one Wootters call per pair."""
    c_rest = concurrence_pure(s)
    c_pairs = [wootters_concurrence(pair_state(s, 0, b)) for b in range(1, s.n_parties)]
    return {
        MeasureKind.CONCURRENCE: (c_rest, c_pairs),
        MeasureKind.CREN: (negativity_pure(s), list(c_pairs)),
        MeasureKind.BURES: (bures_from_concurrence(c_rest), [bures_from_concurrence(c) for c in c_pairs]),
    }
