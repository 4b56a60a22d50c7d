"""Truncated formal power series and the test functions used throughout.

A :class:`FormalPowerSeries` holds ``c_0, ..., c_N``. Indexing below zero
returns 0 (so ``c[p - q]`` can be written without guards), indexing past
``N`` raises :class:`~padebary.errors.InsufficientOrder`.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InsufficientOrder, InvalidInput
from .numkernel import Polynomial, as_cvector


class FormalPowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = as_cvector(coeffs, "series coefficients")
        if c.size == 0:
            raise InvalidInput("a series needs at least one coefficient")
        c.setflags(write=False)
        self.coeffs = c

    @property
    def order(self) -> int:
        """Truncation order ``N`` (index of the last known coefficient)."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if isinstance(i, slice):
            raise TypeError("use .coeffs for slicing")
        i = int(i)
        if i < 0:
            return 0j
        if i > self.order:
            raise InsufficientOrder(f"coefficient c_{i} requested, series known to order {self.order}")
        return self.coeffs[i]

    def require(self, n: int, what: str = "operation") -> None:
        if self.order < n:
            raise InsufficientOrder(
                f"{what} needs coefficients through c_{n}, series has order {self.order}"
            )

    def truncate(self, n: int) -> "FormalPowerSeries":
        self.require(n, "truncate")
        return FormalPowerSeries(self.coeffs[: n + 1])

    def shifted(self, n: int) -> "FormalPowerSeries":
        """Tail series ``c_n + c_{n+1} t + ...`` (the series divided by ``t**n``)."""
        self.require(n, "shift")
        return FormalPowerSeries(self.coeffs[n:])

    def padded(self, n: int) -> "FormalPowerSeries":
        """``t**n`` times the series: ``n`` leading zeros, then ``c_0, c_1, ...``."""
        return FormalPowerSeries(np.concatenate([np.zeros(n, dtype=complex), self.coeffs]))

    def __call__(self, t):
        """Evaluate the truncated series (the partial sum of order ``N``)."""
        return partial_sum(self, self.order)(t)

    def __repr__(self):
        return f"FormalPowerSeries(order={self.order}, coeffs={np.array2string(self.coeffs, precision=6)})"

    def __eq__(self, other):
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None


def tan_over_t_series(omega: float, N: int) -> FormalPowerSeries:
    """Coefficients of ``tan(omega t) / (omega t)`` through ``t**N``.

    The Maclaurin coefficients ``T_m`` of ``tan x`` follow from
    ``tan' = 1 + tan**2``: ``(m + 1) T_{m+1} = [m == 0] + sum_{i+j=m} T_i T_j``.
    Then ``c_n = T_{n+1} omega**n``.
    """
    if omega == 0:
        raise InvalidInput("omega must be nonzero")
    if N < 0:
        raise InvalidInput("order must be >= 0")
    T = [0.0] * (N + 2)
    for m in range(N + 1):
        s = sum(T[i] * T[m - i] for i in range(m + 1))
        T[m + 1] = ((1.0 if m == 0 else 0.0) + s) / (m + 1)
    return FormalPowerSeries([T[n + 1] * omega**n for n in range(N + 1)])


def log1p_over_t_series(N: int) -> FormalPowerSeries:
    if N < 0:
        raise InvalidInput("order must be >= 0")
    return FormalPowerSeries([(-1) ** n / (n + 1) for n in range(N + 1)])


def geometric_series(r: complex, N: int) -> FormalPowerSeries:
    if N < 0:
        raise InvalidInput("order must be >= 0")
    r = complex(r)
    return FormalPowerSeries([r**n for n in range(N + 1)])


def exp_series(N: int) -> FormalPowerSeries:
    if N < 0:
        raise InvalidInput("order must be >= 0")
    return FormalPowerSeries([1.0 / math.factorial(n) for n in range(N + 1)])


def perturb(s: FormalPowerSeries, eps: float, seed: int) -> FormalPowerSeries:
    """Add i.i.d. real noise, uniform on ``[-eps, eps]``, to every coefficient.

    Noise comes from ``numpy.random.default_rng(seed)`` (PCG64), so a given
    seed always produces the same perturbed series.
    """
    if eps < 0:
        raise InvalidInput("eps must be >= 0")
    if eps == 0:
        return FormalPowerSeries(s.coeffs.copy())
    rng = np.random.default_rng(seed)
    u = rng.uniform(-eps, eps, size=len(s))
    return FormalPowerSeries(s.coeffs + u)


def partial_sum(s: FormalPowerSeries, n: int) -> Polynomial:
    """``f_n(t) = c_0 + ... + c_n t**n``; the zero polynomial for ``n < 0``."""
    if n < 0:
        return Polynomial([0])
    s.require(n, "partial_sum")
    return Polynomial(s.coeffs[: n + 1])


def mul_truncated(s1: FormalPowerSeries, s2: FormalPowerSeries, N: int) -> FormalPowerSeries:
    """Cauchy product of two series, truncated at ``t**N``."""
    s1.require(N, "mul_truncated")
    s2.require(N, "mul_truncated")
    return FormalPowerSeries(np.convolve(s1.coeffs[: N + 1], s2.coeffs[: N + 1])[: N + 1])


def contact_order(expansion, series: FormalPowerSeries, rtol: float = 1e-9) -> int:
    """Number of leading coefficients on which `expansion` agrees with `series`.

    Coefficient ``k`` agrees when ``|d_k - c_k| <= rtol * max_{i<=k} |c_i|``
    (with the scale floored at 1e-300 so a zero series still compares).
    """
    d = expansion.coeffs if isinstance(expansion, FormalPowerSeries) else as_cvector(expansion)
    c = series.coeffs
    n = min(len(d), len(c))
    running = np.maximum.accumulate(np.abs(c[:n]))
    bad = np.abs(d[:n] - c[:n]) > rtol * np.maximum(running, 1e-300)
    idx = np.nonzero(bad)[0]
    return int(idx[0]) if idx.size else n


def max_scaled_error(expansion, series: FormalPowerSeries, through: int) -> float:
    """``max_k |d_k - c_k| / max_i |c_i|`` over ``k = 0..through``."""
    d = expansion.coeffs if isinstance(expansion, FormalPowerSeries) else as_cvector(expansion)
    c = series.coeffs[: through + 1]
    scale = max(np.max(np.abs(c)), 1e-300)
    return float(np.max(np.abs(d[: through + 1] - c)) / scale)


# Analytic references for the test series.

def tan_over_t(t, omega: float):
    t = np.asarray(t, dtype=complex)
    x = omega * t
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(x == 0, 1.0 + 0j, np.tan(x) / np.where(x == 0, 1, x))
    return out[()] if out.ndim == 0 else out


def log1p_over_t(t):
    t = np.asarray(t, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(t == 0, 1.0 + 0j, np.log1p(t) / np.where(t == 0, 1, t))
    return out[()] if out.ndim == 0 else out


def geometric(t, r: complex):
    t = np.asarray(t, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = 1.0 / (1.0 - r * t)
    return out[()] if out.ndim == 0 else out


def exp(t):
    out = np.exp(np.asarray(t, dtype=complex))
    return out[()] if out.ndim == 0 else out
