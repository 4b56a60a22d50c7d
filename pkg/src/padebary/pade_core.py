"""Padé and Padé-type approximants in rational (numerator/denominator) form.

The Padé approximant ``[p/q]`` of ``f = c_0 + c_1 t + ...`` is ``A(t)/B(t)``
with ``deg A <= p``, ``deg B <= q``, ``B(0) = 1`` and
``A(t)/B(t) - f(t) = O(t**(p+q+1))``. A Padé-type approximant ``(p/q)`` keeps
an arbitrary denominator and only matches through ``t**p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DegenerateDeterminant,
    InvalidDenominator,
    InvalidInput,
    ZeroAtOrigin,
)
from .numkernel import Polynomial, as_cvector, poly_roots, solve_dense
from .series import FormalPowerSeries, partial_sum


@dataclass(frozen=True)
class RationalFunction:
    num: Polynomial
    den: Polynomial

    def __call__(self, t):
        t = np.asarray(t, dtype=complex)
        n = self.num(t)
        d = self.den(t)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(d == 0, complex(np.inf, 0), n / np.where(d == 0, 1, d))
        return out[()] if out.ndim == 0 else out

    @property
    def p(self) -> int:
        return self.num.degree

    @property
    def q(self) -> int:
        return self.den.degree

    def normalized(self) -> "RationalFunction":
        """Scale numerator and denominator so that ``den(0) == 1``."""
        b0 = self.den.coeffs[0]
        if b0 == 0:
            raise ZeroAtOrigin("denominator vanishes at t = 0")
        return RationalFunction(self.num.scale(1 / b0), self.den.scale(1 / b0))

    def expand(self, N: int) -> FormalPowerSeries:
        return expand_rational(self, N)

    def poles(self) -> np.ndarray:
        den = self.den.trim(1e-14)
        if den.degree < 1:
            return np.zeros(0, dtype=complex)
        return poly_roots(den)


def pade_type_numerator(c: FormalPowerSeries, b, p: int) -> Polynomial:
    """Numerator ``a_k = sum_{j<=min(k,q)} c_{k-j} b_j``, ``k = 0..p``."""
    b = as_cvector(b, "denominator coefficients")
    if b[0] == 0 or b[-1] == 0:
        raise InvalidDenominator("need b_0 * b_q != 0")
    return _numerator(c, b, p)


def _numerator(c, b, p):
    if p < 0:
        raise InvalidInput("p must be >= 0")
    c.require(p, f"degree-{p} numerator")
    a = np.array([sum(c[k - j] * b[j] for j in range(min(k, len(b) - 1) + 1)) for k in range(p + 1)])
    return Polynomial(a)


def pade_type(c: FormalPowerSeries, b, p: int) -> RationalFunction:
    return RationalFunction(pade_type_numerator(c, b, p), Polynomial(b))


def pade_system(c: FormalPowerSeries, p: int, q: int) -> np.ndarray:
    """The homogeneous denominator system as a ``q x (q+1)`` matrix.

    Row ``k-1`` (``k = 1..q``) holds ``c_{p+k}, c_{p+k-1}, ..., c_{p+k-q}`` so
    that ``M @ [b_0, ..., b_q] = 0``.
    """
    c.require(p + q, f"[{p}/{q}] Padé denominator")
    return np.array([[c[p + k - j] for j in range(q + 1)] for k in range(1, q + 1)], dtype=complex).reshape(q, q + 1)


def pade_denominator(c: FormalPowerSeries, p: int, q: int) -> np.ndarray:
    """Denominator coefficients ``b_0 = 1, b_1, ..., b_q`` of ``[p/q]``.

    Raises SingularMatrix if the ``[p/q]`` entry is degenerate for `c`.
    """
    if p < 0 or q < 0:
        raise InvalidInput("degrees must be >= 0")
    M = pade_system(c, p, q)
    if q == 0:
        return np.ones(1, dtype=complex)
    rest = solve_dense(M[:, 1:], -M[:, 0])
    return np.concatenate([[1.0 + 0j], rest])


def pade(c: FormalPowerSeries, p: int, q: int) -> RationalFunction:
    """The ``[p/q]`` Padé approximant, normalized to ``den(0) = 1``.

    The denominator may come out with ``b_q = 0`` (a degree-deficient entry,
    e.g. ``[0/2]`` of ``1/(1 - 2t)``); that is still the Padé approximant.
    """
    b = pade_denominator(c, p, q)
    return RationalFunction(_numerator(c, b, p), Polynomial(b))


def _det(rows):
    """Determinant by first-row Laplace expansion; entries may be Polynomials."""
    n = len(rows)
    if n == 0:
        return 1.0
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = _mul(rows[0][j], _det(minor))
        if j % 2:
            term = _mul(term, -1.0)
        total = term if total is None else _add(total, term)
    return total


def laplace_det(M):
    """Determinant of a small matrix by cofactor expansion (no pivoting)."""
    return _det([list(row) for row in np.asarray(M)])


def _mul(x, y):
    if isinstance(x, Polynomial):
        return x.scale(y) if not isinstance(y, Polynomial) else x * y
    if isinstance(y, Polynomial):
        return y.scale(x)
    return x * y


def _add(x, y):
    if isinstance(x, Polynomial) or isinstance(y, Polynomial):
        x = x if isinstance(x, Polynomial) else Polynomial([x])
        y = y if isinstance(y, Polynomial) else Polynomial([y])
        return x + y
    return x + y


def pade_determinant_oracle(c: FormalPowerSeries, p: int, q: int) -> RationalFunction:
    """``[p/q]`` as a ratio of two ``(q+1) x (q+1)`` determinants.

    The first rows are ``t**(q-j) f_{p-q+j}(t)`` (numerator) and ``t**(q-j)``
    (denominator); the remaining rows are ``c_{p-q+i+j}``. Both are expanded
    along the first row by cofactors, independently of :func:`pade`. The
    result is not normalized.
    """
    if q > 4:
        raise InvalidInput("determinant oracle is limited to q <= 4")
    c.require(p + q, f"[{p}/{q}] determinant oracle")
    lower = [[c[p - q + i + j] for j in range(q + 1)] for i in range(1, q + 1)]
    top_num = [partial_sum(c, p - q + j).shift_up(q - j) for j in range(q + 1)]
    top_den = [Polynomial([0] * (q - j) + [1]) for j in range(q + 1)]
    num = _det([top_num] + lower)
    den = _det([top_den] + lower)
    num = num if isinstance(num, Polynomial) else Polynomial([num])
    den = den if isinstance(den, Polynomial) else Polynomial([den])

    scale = max(float(np.max(np.abs(c.coeffs[: p + q + 1]))), 1e-300) ** q
    if abs(den.coeffs[0]) <= 1e-12 * scale:
        raise DegenerateDeterminant(f"[{p}/{q}] coefficient determinant vanishes")
    return RationalFunction(num, den)


def expand_rational(R: RationalFunction, N: int) -> FormalPowerSeries:
    """Series coefficients ``d_0..d_N`` of ``num/den`` by long division."""
    a = R.num.coeffs
    b = R.den.coeffs
    if b[0] == 0:
        raise ZeroAtOrigin("denominator vanishes at t = 0")
    if N < 0:
        raise InvalidInput("N must be >= 0")
    d = np.zeros(N + 1, dtype=complex)
    for k in range(N + 1):
        acc = a[k] if k < len(a) else 0j
        m = min(k, len(b) - 1)
        if m:
            acc -= np.dot(b[1:m + 1], d[k - 1::-1][:m])
        d[k] = acc / b[0]
    return FormalPowerSeries(d)


# Degree shifting: build [n+p/p] and [p/n+p] from any diagonal constructor.

Engine = Callable[[FormalPowerSeries, int], object]


def classic_engine(c: FormalPowerSeries, m: int) -> RationalFunction:
    return pade(c, m, m)


def as_rational(approx) -> RationalFunction:
    if isinstance(approx, RationalFunction):
        return approx
    to_rat = getattr(approx, "to_rational", None)
    if to_rat is None:
        raise InvalidInput(f"cannot convert {type(approx).__name__} to a rational function")
    return to_rat()


def shift_numerator(c: FormalPowerSeries, n: int, p: int, engine: Engine = classic_engine) -> RationalFunction:
    """``[n+p/p]`` as ``c_0 + ... + c_{n-1} t**(n-1) + t**n R(t)``.

    ``R`` is the diagonal ``[p/p]`` approximant, built by `engine`, of the
    tail series ``c_n + c_{n+1} t + ...``.
    """
    if n < 0 or p < 0:
        raise InvalidInput("n and p must be >= 0")
    c.require(n + 2 * p, f"[{n + p}/{p}] via shifted numerator")
    R = as_rational(engine(c.shifted(n), p))
    head = partial_sum(c, n - 1)
    return RationalFunction(head * R.den + R.num.shift_up(n), R.den)


def shift_denominator(c: FormalPowerSeries, n: int, p: int, engine: Engine = classic_engine) -> RationalFunction:
    """``[p/n+p]`` as ``t**-n R(t)``, with ``R`` the ``[p+n/p+n]`` of ``t**n f``.

    The first `n` numerator coefficients of ``R`` vanish in exact arithmetic
    and are dropped.
    """
    if n < 0 or p < 0:
        raise InvalidInput("n and p must be >= 0")
    c.require(n + 2 * p, f"[{p}/{n + p}] via shifted denominator")
    R = as_rational(engine(c.padded(n).truncate(2 * (n + p)), p + n))
    num = R.num.coeffs
    if len(num) <= n:
        num = np.zeros(1, dtype=complex)
    else:
        num = num[n:]
    return RationalFunction(Polynomial(num), R.den)
