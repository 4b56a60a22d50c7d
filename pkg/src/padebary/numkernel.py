"""Complex dense linear algebra and polynomial helpers.

Everything here works in complex double precision. Polynomials are stored
with ascending coefficients, ``q[0] + q[1] x + ... + q[d] x**d``.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInput, NoConvergence, SingularMatrix

EPS = np.finfo(float).eps
TOL_SOLVE = 1e3 * EPS
TOL_ROOT = 1e-8


def as_cvector(x, name="vector") -> np.ndarray:
    """Return `x` as a 1-D complex array, rejecting NaN/Inf entries."""
    v = np.atleast_1d(np.asarray(x, dtype=complex))
    if v.ndim != 1:
        raise InvalidInput(f"{name} must be one-dimensional, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidInput(f"{name} has non-finite entries")
    return v


def as_cmatrix(a, name="matrix") -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise InvalidInput(f"{name} must be two-dimensional, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidInput(f"{name} has non-finite entries")
    return m


def solve_dense(A, b) -> np.ndarray:
    """Solve ``A x = b`` by Gaussian elimination with partial (row) pivoting.

    Raises
    ------
    SingularMatrix
        If a pivot is at most ``n * eps * max|A_ij|`` in magnitude.
    """
    A = as_cmatrix(A, "A")
    b = as_cvector(b, "b")
    n = A.shape[0]
    if A.shape != (n, n):
        raise InvalidInput(f"A must be square, got shape {A.shape}")
    if b.shape[0] != n:
        raise InvalidInput(f"b has length {b.shape[0]}, expected {n}")
    if n == 0:
        return np.zeros(0, dtype=complex)

    threshold = n * EPS * np.max(np.abs(A))
    M = np.hstack([A, b[:, None]])
    for col in range(n):
        piv = col + int(np.argmax(np.abs(M[col:, col])))
        if abs(M[piv, col]) <= threshold:
            raise SingularMatrix(
                f"pivot {abs(M[piv, col]):.3e} in column {col} is below {threshold:.3e}"
            )
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
        factors = M[col + 1:, col] / M[col, col]
        M[col + 1:, col:] -= factors[:, None] * M[col, col:]

    x = np.zeros(n, dtype=complex)
    for i in range(n - 1, -1, -1):
        x[i] = (M[i, n] - M[i, i + 1:n] @ x[i + 1:]) / M[i, i]
    return x


class Polynomial:
    """Polynomial with ascending complex coefficients.

    Trailing zeros are kept as given, so ``degree`` is the index of the last
    stored coefficient. An empty input is the zero polynomial ``[0]``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = as_cvector(coeffs, "coeffs") if np.size(coeffs) else np.zeros(1, complex)
        c.setflags(write=False)
        self.coeffs = c

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        return poly_eval(self, t)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"Polynomial({np.array2string(self.coeffs, precision=6)})"

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def derivative(self) -> "Polynomial":
        return poly_derivative(self)

    def trim(self, tol: float = 0.0) -> "Polynomial":
        """Drop trailing coefficients with magnitude ``<= tol * max|coeffs|``."""
        c = self.coeffs
        cutoff = tol * np.max(np.abs(c))
        nz = np.nonzero(np.abs(c) > cutoff)[0]
        return Polynomial(c[: nz[-1] + 1] if nz.size else [0])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(np.convolve(self.coeffs, other.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self), len(other))
        out = np.zeros(n, dtype=complex)
        out[: len(self)] += self.coeffs
        out[: len(other)] += other.coeffs
        return Polynomial(out)

    def scale(self, s) -> "Polynomial":
        return Polynomial(self.coeffs * s)

    def shift_up(self, n: int) -> "Polynomial":
        """Multiply by ``t**n``."""
        return Polynomial(np.concatenate([np.zeros(n, dtype=complex), self.coeffs]))


def poly_eval(p, t):
    """Horner evaluation; `t` may be a scalar or an array."""
    coeffs = p.coeffs if isinstance(p, Polynomial) else as_cvector(p)
    t = np.asarray(t, dtype=complex)
    acc = np.zeros_like(t)
    for c in coeffs[::-1]:
        acc = acc * t + c
    return acc[()] if acc.ndim == 0 else acc


def poly_derivative(p) -> Polynomial:
    coeffs = p.coeffs if isinstance(p, Polynomial) else as_cvector(p)
    if len(coeffs) == 1:
        return Polynomial([0])
    return Polynomial(coeffs[1:] * np.arange(1, len(coeffs)))


def _companion(coeffs: np.ndarray) -> np.ndarray:
    d = len(coeffs) - 1
    C = np.zeros((d, d), dtype=complex)
    C[1:, :-1] = np.eye(d - 1)
    C[:, -1] = -coeffs[:-1] / coeffs[-1]
    return C


def _merge_multiple_roots(coeffs, roots, radius=1e-4, safety=64.0):
    # Eigenvalues of a companion matrix split an m-fold root into a cluster of
    # radius ~eps**(1/m). A cluster is collapsed onto its mean when, at the
    # mean, the k-th derivative (k < m) is within safety * eps**((m-k)/m) of
    # the size of its terms, which is what round-off alone would leave.
    order = np.argsort(roots.real)
    roots = roots[order]
    used = np.zeros(len(roots), dtype=bool)
    derivs = [np.asarray(coeffs)]
    for _ in range(len(roots)):
        c = derivs[-1]
        derivs.append(c[1:] * np.arange(1, len(c)) if len(c) > 1 else np.zeros(1, complex))
    for i in range(len(roots)):
        if used[i]:
            continue
        cluster = [j for j in range(i, len(roots))
                   if not used[j] and abs(roots[j] - roots[i]) <= radius * max(1.0, abs(roots[i]))]
        m = len(cluster)
        if m < 2:
            continue
        mean = np.mean(roots[cluster])
        ok = True
        for k in range(m):
            c = derivs[k]
            scale = np.sum(np.abs(c) * np.abs(mean) ** np.arange(len(c)))
            if scale > 0 and abs(poly_eval(c, mean)) > safety * EPS ** ((m - k) / m) * scale:
                ok = False
                break
        if ok:
            roots[cluster] = mean
            used[cluster] = True
    out = np.empty_like(roots)
    out[order] = roots
    return out


def poly_roots(p) -> np.ndarray:
    """All complex roots of `p`, with multiplicity.

    Roots are the eigenvalues of the companion matrix, followed by one Newton
    correction per simple root. Clusters that are numerically a multiple root
    are replaced by their mean, so ``1 - 2x + x**2`` yields ``[1, 1]``.
    """
    coeffs = p.coeffs if isinstance(p, Polynomial) else as_cvector(p)
    d = len(coeffs) - 1
    if d < 1:
        raise InvalidInput("poly_roots needs degree >= 1")
    if coeffs[-1] == 0:
        raise InvalidInput("leading coefficient is zero")
    try:
        roots = np.linalg.eigvals(_companion(coeffs))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    if not np.all(np.isfinite(roots)):
        raise NoConvergence("companion eigenvalues are not finite")

    dcoeffs = poly_derivative(coeffs).coeffs
    for i, r in enumerate(roots):
        sep = np.min(np.abs(np.delete(roots, i) - r)) if d > 1 else np.inf
        dp = poly_eval(dcoeffs, r)
        if dp == 0:
            continue
        step = poly_eval(coeffs, r) / dp
        # Only polish isolated roots; a step comparable to the separation
        # would hop between roots.
        if abs(step) < 0.1 * sep:
            roots[i] = r - step
    roots = _merge_multiple_roots(coeffs, roots)

    bound = TOL_ROOT * np.max(np.abs(coeffs)) * np.maximum(1.0, np.abs(roots)) ** d
    if np.any(np.abs(poly_eval(coeffs, roots)) > bound):
        raise NoConvergence("root residuals exceed tolerance")
    return roots
