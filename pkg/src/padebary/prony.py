"""Partial-fraction Padé approximants ``[k/k+1]`` by Prony's method.

We look for ``R(t) = sum_{i=0}^k a_i / (1 - p_i t)``, i.e. residues and nodes
with ``sum_i a_i p_i**j = c_j`` for ``j = 0..2k+1``. The steps are

1. solve the Hankel system ``sum_{j=1}^{k+1} b_j c_{j+n} = -c_n``, ``n = 0..k``;
2. take the nodes as the roots of ``B(x) = 1 + b_1 x + ... + b_{k+1} x**(k+1)``;
3. solve the Vandermonde system ``sum_i a_i p_i**j = c_j``, ``j = 0..k``.

The denominator ``prod(1 - p_i t)`` of ``R`` is ``B`` with its coefficients
reversed (and rescaled), which is the ``[k/k+1]`` Padé denominator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateDenominator,
    InvalidInput,
    NonDistinctNodes,
    ZeroDerivative,
    ZeroNode,
)
from .numkernel import Polynomial, as_cvector, poly_roots, solve_dense
from .pade_core import RationalFunction
from .series import FormalPowerSeries

NODE_SEPARATION = 1e-8


@dataclass(frozen=True)
class PartialFraction:
    """``sum_i residues[i] / (1 - nodes[i] t)``."""

    residues: np.ndarray
    nodes: np.ndarray

    def __post_init__(self):
        a = as_cvector(self.residues, "residues")
        p = as_cvector(self.nodes, "nodes")
        if len(a) != len(p):
            raise InvalidInput("need one residue per node")
        a.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "residues", a)
        object.__setattr__(self, "nodes", p)

    @property
    def k(self) -> int:
        return len(self.nodes) - 1

    @property
    def terms(self):
        return list(zip(self.residues, self.nodes))

    def __call__(self, t):
        t_arr = np.asarray(t, dtype=complex)
        denom = 1 - self.nodes[None, :] * t_arr.reshape(-1, 1)
        hit = np.abs(denom) <= 1e-13 * (1 + np.abs(t_arr.reshape(-1, 1) * self.nodes[None, :]))
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = (self.residues[None, :] / np.where(hit, 1, denom)).sum(axis=1)
        vals = np.where(hit.any(axis=1), complex(np.inf, 0), vals).reshape(t_arr.shape)
        return vals[()] if vals.ndim == 0 else vals

    def expand(self, N: int) -> FormalPowerSeries:
        j = np.arange(N + 1)[:, None]
        return FormalPowerSeries((self.residues[None, :] * self.nodes[None, :] ** j).sum(axis=1))

    def to_rational(self) -> RationalFunction:
        factors = [Polynomial([1, -p]) for p in self.nodes]
        den = Polynomial([1])
        for f in factors:
            den = den * f
        num = Polynomial([0])
        for i, a in enumerate(self.residues):
            term = Polynomial([a])
            for j, f in enumerate(factors):
                if j != i:
                    term = term * f
            num = num + term
        return RationalFunction(num, den)


def hankel_matrix(c: FormalPowerSeries, k: int) -> np.ndarray:
    """``(k+1) x (k+2)`` matrix ``H[n, j] = c_{n+j}``; ``H @ b = 0`` is the node system."""
    c.require(2 * k + 1, f"[{k}/{k + 1}] partial fraction")
    return np.array([[c[n + j] for j in range(k + 2)] for n in range(k + 1)], dtype=complex)


def prony_denominator(c: FormalPowerSeries, k: int) -> np.ndarray:
    """Coefficients ``b_0 = 1, b_1, ..., b_{k+1}`` of the node polynomial ``B``."""
    if k < 0:
        raise InvalidInput("k must be >= 0")
    H = hankel_matrix(c, k)
    rest = solve_dense(H[:, 1:], -H[:, 0])
    return np.concatenate([[1.0 + 0j], rest])


def orthogonality_residuals(c: FormalPowerSeries, b, k: int) -> np.ndarray:
    """``r_n = sum_{j=0}^{k+1} b_j c_{j+n}``, ``n = 0..k``.

    With ``c`` read as the moment functional ``c(x**i) = c_i``, ``r_n`` is
    ``c(x**n B(x))``; all vanish when ``B`` is the formal orthogonal
    polynomial of degree ``k+1``.
    """
    b = as_cvector(b, "b")
    if len(b) != k + 2:
        raise InvalidInput(f"expected {k + 2} coefficients, got {len(b)}")
    return hankel_matrix(c, k) @ b


def _check_separated(nodes):
    scale = np.max(np.abs(nodes))
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if abs(nodes[i] - nodes[j]) <= NODE_SEPARATION * scale:
                raise NonDistinctNodes(
                    f"nodes {nodes[i]:.6g} and {nodes[j]:.6g} coincide; "
                    "the approximant has a repeated pole and no simple partial-fraction form"
                )


def pfpa(c: FormalPowerSeries, k: int) -> PartialFraction:
    """Partial-fraction form of the ``[k/k+1]`` Padé approximant of `c`.

    Raises
    ------
    SingularMatrix
        The Hankel (or Vandermonde) system is singular.
    NonDistinctNodes
        Two nodes agree to within ``1e-8 * max|p_i|``.
    """
    b = prony_denominator(c, k)
    if b[-1] == 0 or abs(b[-1]) <= 1e-14 * np.max(np.abs(b)):
        raise DegenerateDenominator(f"[{k}/{k + 1}] denominator has degree below {k + 1}")
    nodes = poly_roots(Polynomial(b))
    _check_separated(nodes)
    V = nodes[None, :] ** np.arange(k + 1)[:, None]
    residues = solve_dense(V, c.coeffs[: k + 1])
    return PartialFraction(residues, nodes)


def residues_via_derivative(P, Q, nodes) -> np.ndarray:
    """Residues ``a_i = -p_i P(1/p_i) / Q'(1/p_i)`` from a numerator/denominator pair.

    `Q` is the denominator ``prod(1 - p_i t)``; `P` the matching numerator.
    """
    P = P if isinstance(P, Polynomial) else Polynomial(P)
    Q = Q if isinstance(Q, Polynomial) else Polynomial(Q)
    nodes = as_cvector(nodes, "nodes")
    if np.any(nodes == 0):
        raise ZeroNode("residue formula needs nonzero nodes")
    x = 1 / nodes
    dQ = Q.derivative()(x)
    if np.any(dQ == 0):
        raise ZeroDerivative("Q' vanishes at a reciprocal node")
    return -nodes * P(x) / dQ
