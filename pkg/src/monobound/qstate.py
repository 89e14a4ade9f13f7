"""Multi-qubit pure states: the canonical three-qubit family, random states,
state files, and reduced density matrices.

Subsystem 0 is always party A; subsystems 1..N-1 are B_1..B_{N-1}.

Random states come from numpy's PCG64 generator (``numpy.random.default_rng``),
so a fixed seed replays bit-identically on every platform numpy supports.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import cmatrix
from .errors import InvalidInputError, StateFileError

NORM_TOL = 1e-12
# Files carry decimal text; accept rounding and renormalize.
FILE_NORM_TOL = 1e-6


@dataclass(frozen=True)
class PureState:
    dims: tuple[int, ...]
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if not dims or any(d < 2 for d in dims):
            raise InvalidInputError(f"every subsystem needs dimension >= 2, got {dims}")
        if amps.size != math.prod(dims):
            raise InvalidInputError(
                f"{amps.size} amplitudes do not fit dims {dims} (need {math.prod(dims)})"
            )
        if not np.all(np.isfinite(amps)):
            raise InvalidInputError("amplitudes contain NaN or Inf")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise InvalidInputError(f"state is not normalized: sum |a|^2 = {norm2!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @classmethod
    def from_unnormalized(cls, dims, amplitudes) -> "PureState":
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        nrm = np.linalg.norm(amps)
        if nrm == 0:
            raise InvalidInputError("zero vector cannot be normalized")
        return cls(dims, amps / nrm)


@dataclass(frozen=True)
class AcinParams:
    """Coefficients of l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>."""

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    phi: float = 0.0

    def __post_init__(self):
        lam = self.lambdas
        if any(not math.isfinite(x) for x in (*lam, self.phi)):
            raise InvalidInputError("Acin parameters must be finite")
        if any(x < 0 for x in lam):
            raise InvalidInputError(f"Acin coefficients must be nonnegative: {lam}")
        s = math.fsum(x * x for x in lam)
        if abs(s - 1.0) > NORM_TOL:
            raise InvalidInputError(f"sum of squared Acin coefficients is {s!r}, not 1")

    @property
    def lambdas(self) -> tuple[float, ...]:
        return (self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4)

    @classmethod
    def random(cls, rng: np.random.Generator) -> "AcinParams":
        """Uniform point on the positive orthant of S^4 plus a uniform phase."""
        lam = np.abs(rng.standard_normal(5))
        lam /= np.linalg.norm(lam)
        # Renormalize in fsum so the invariant holds to the last ulp.
        s = math.sqrt(math.fsum(float(x) ** 2 for x in lam))
        return cls(*(float(x) / s for x in lam), phi=float(rng.uniform(0, 2 * np.pi)))


# Canonical worked examples (three parameter sets).
EXAMPLE_I = AcinParams(0.5, 0.5, 0.5, math.sqrt(2) / 4, math.sqrt(2) / 4)
EXAMPLE_II = AcinParams(
    math.sqrt(2) / 3, math.sqrt(2) / 3, math.sqrt(2) / 3, math.sqrt(6) / 6, math.sqrt(6) / 6
)
EXAMPLE_III = AcinParams(math.sqrt(2) / 3, 0.0, math.sqrt(5) / 3, math.sqrt(2) / 3, 0.0)


def acin_state(p: AcinParams) -> PureState:
    """Build the canonical state on parties (A, B, C) = (0, 1, 2).

    The customary ket labels are read in the order |A C B>, which is the
    labeling under which C_AB = 2 l0 l2 and C_AC = 2 l0 l3. In the
    lexicographic A,B,C basis used everywhere else, l2 therefore sits at
    |110> and l3 at |101>.
    """
    amps = np.zeros(8, dtype=np.complex128)
    amps[0b000] = p.lambda0
    amps[0b100] = p.lambda1 * np.exp(1j * p.phi)
    amps[0b110] = p.lambda2
    amps[0b101] = p.lambda3
    amps[0b111] = p.lambda4
    # |amps|^2 sums to 1 up to rounding in exp(i phi); absorb that here.
    return PureState.from_unnormalized((2, 2, 2), amps)


def density(s: PureState) -> np.ndarray:
    return np.outer(s.amplitudes, np.conj(s.amplitudes))


def reduced(s: PureState, keep) -> np.ndarray:
    keep = set(keep)
    n = s.n_parties
    if not keep or any(not 0 <= k < n for k in keep):
        raise InvalidInputError(f"invalid subsystem set {sorted(keep)} for {n} parties")
    return cmatrix.partial_trace(density(s), s.dims, keep)


def closed_form_concurrences(p: AcinParams) -> tuple[float, float, float]:
    """(C_A|BC, C_AB, C_AC) of the canonical three-qubit state."""
    l0, _, l2, l3, l4 = p.lambdas
    c_abc = 2 * l0 * math.sqrt(l2 * l2 + l3 * l3 + l4 * l4)
    return min(c_abc, 1.0), 2 * l0 * l2, 2 * l0 * l3


def random_pure_state(n_qubits: int, seed: int | np.random.Generator) -> PureState:
    if not 1 <= n_qubits <= 4:
        raise InvalidInputError(f"n_qubits must be in 1..4, got {n_qubits}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    d = 2**n_qubits
    amps = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureState.from_unnormalized((2,) * n_qubits, amps)


def load_state(path) -> PureState:
    """Read ``{"dims": [...], "amps": [[re, im], ...]}`` (lexicographic basis order)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise StateFileError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    return parse_state(doc, source=str(path))


def parse_state(doc, source: str = "<state>") -> PureState:
    if not isinstance(doc, dict):
        raise StateFileError(f"{source}: top level must be an object")
    for key in ("dims", "amps"):
        if key not in doc:
            raise StateFileError(f"{source}: missing field '{key}'")
    dims = doc["dims"]
    if not isinstance(dims, list) or not all(isinstance(d, int) and d >= 2 for d in dims):
        raise StateFileError(f"{source}: field 'dims' must be a list of integers >= 2")
    amps = doc["amps"]
    if not isinstance(amps, list):
        raise StateFileError(f"{source}: field 'amps' must be a list")
    values = []
    for i, a in enumerate(amps):
        if (
            not isinstance(a, list)
            or len(a) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in a)
        ):
            raise StateFileError(f"{source}: field 'amps[{i}]' must be [re, im]")
        values.append(complex(a[0], a[1]))
    if len(values) != math.prod(dims):
        raise StateFileError(
            f"{source}: field 'amps' has {len(values)} entries, dims need {math.prod(dims)}"
        )
    norm2 = math.fsum(abs(v) ** 2 for v in values)
    if abs(norm2 - 1.0) > FILE_NORM_TOL:
        raise StateFileError(f"{source}: field 'amps' is not normalized (sum |a|^2 = {norm2!r})")
    try:
        return PureState.from_unnormalized(dims, values)
    except InvalidInputError as exc:
        raise StateFileError(f"{source}: {exc}") from exc


def state_to_json(s: PureState) -> str:
    doc = {"dims": list(s.dims), "amps": [[a.real, a.imag] for a in s.amplitudes.tolist()]}
    return json.dumps(doc)
