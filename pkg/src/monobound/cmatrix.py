"""Small dense complex linear algebra on numpy arrays.

Matrices are plain ``complex128`` numpy arrays. The eigensolver is a cyclic
Jacobi iteration, which is plenty for the <= 16 dimensional operators this
package ever touches.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import InvalidInputError, NotPSDError

HERMITIAN_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12
PSD_CLAMP = -1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("matrix contains NaN or Inf")
    return a


def dagger(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    a = as_matrix(a)
    return bool(np.max(np.abs(a - dagger(a)), initial=0.0) <= tol)


def is_density(a, tol: float = DENSITY_TRACE_TOL) -> bool:
    a = as_matrix(a)
    if not is_hermitian(a):
        return False
    tr = np.trace(a)
    if abs(tr.imag) > tol or abs(tr.real - 1.0) > tol:
        return False
    return hermitian_eig(a)[0][0] >= PSD_CLAMP


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    Kept subsystems appear in ascending index order in the result.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise InvalidInputError(f"subsystem dimensions must be positive: {dims}")
    if math.prod(dims) != rho.shape[0]:
        raise InvalidInputError(
            f"dims {dims} multiply to {math.prod(dims)}, matrix has dim {rho.shape[0]}"
        )
    keep = sorted(set(int(k) for k in keep))
    n = len(dims)
    if not keep or keep[0] < 0 or keep[-1] >= n:
        raise InvalidInputError(f"invalid keep set {keep} for {n} subsystems")

    traced = [i for i in range(n) if i not in keep]
    t = rho.reshape(dims + dims)
    # Contract from the highest index down so remaining axis numbers stay valid.
    for i in reversed(traced):
        cur = t.ndim // 2
        t = np.trace(t, axis1=i, axis2=i + cur)
    d = math.prod(dims[k] for k in keep)
    return t.reshape(d, d)


def hermitian_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns ascending eigenvalues and a unitary whose columns are the
    matching eigenvectors. Sweeps stop once the off-diagonal Frobenius norm
    is below ``JACOBI_TOL`` times the matrix norm (floored at 1).
    """
    h = as_matrix(h)
    if not is_hermitian(h):
        raise InvalidInputError("hermitian_eig requires a Hermitian matrix")
    n = h.shape[0]
    # Plain Python lists: for n <= 16 this beats per-rotation numpy calls.
    a = (0.5 * (h + dagger(h))).tolist()
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    scale = max(math.sqrt(sum(abs(x) ** 2 for row in a for x in row)), 1.0)

    def off_norm():
        return math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))

    for _ in range(JACOBI_MAX_SWEEPS):
        if off_norm() <= JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                # Phase-rotate so the pivot is real, then apply a real rotation.
                phase = apq / mag
                theta = 0.5 * math.atan2(2.0 * mag, a[q][q].real - a[p][p].real)
                c, s = math.cos(theta), math.sin(theta)
                sp, sq = s * phase, s * phase.conjugate()
                for row in a:
                    x, y = row[p], row[q]
                    row[p] = c * x - sq * y
                    row[q] = sp * x + c * y
                rp, rq = a[p], a[q]
                for j in range(n):
                    x, y = rp[j], rq[j]
                    rp[j] = c * x - sp * y
                    rq[j] = sq * x + c * y
                rp[q] = rq[p] = 0j
                for row in v:
                    x, y = row[p], row[q]
                    row[p] = c * x - sq * y
                    row[q] = sp * x + c * y
    else:
        if off_norm() > 1e3 * JACOBI_TOL * scale:
            raise InvalidInputError("Jacobi iteration failed to converge")

    w = np.array([a[i][i].real for i in range(n)])
    order = np.argsort(w, kind="stable")
    return w[order], np.array(v, dtype=np.complex128)[:, order]


def sqrt_psd(h) -> np.ndarray:
    w, v = hermitian_eig(h)
    if w[0] < PSD_CLAMP:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e} < {PSD_CLAMP}")
    w = np.sqrt(np.clip(w, 0.0, None))
    r = (v * w) @ dagger(v)
    return 0.5 * (r + dagger(r))


def trace_norm(h) -> float:
    """Sum of |eigenvalues| of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eig(h)[0])))


def partial_transpose(rho, dims, sub: int) -> np.ndarray:
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    n = len(dims)
    if math.prod(dims) != rho.shape[0] or not 0 <= sub < n:
        raise InvalidInputError("partial_transpose: dimension or index mismatch")
    t = rho.reshape(dims + dims)
    t = np.swapaxes(t, sub, sub + n)
    return t.reshape(rho.shape)
