"""Barycentric Padé (BPA) and Padé-type (BPTA) approximants.

Two barycentric shapes are supported::

    form 1:  R(t) = sum_i a_i / (p_i - t)   /  sum_i b_i / (z_i - t)
    form 2:  R(t) = sum_i a_i / (1 - p_i t) /  sum_i b_i / (1 - z_i t)

The nodes are chosen by the caller; the coefficients are then fixed by
matching the power series of ``f`` at the origin. In form 1 the ``p_i`` are
poles and the ``z_i`` zeros of ``R``; in form 2 their reciprocals are.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateDenominator, InvalidInput, InvalidNodes, ZeroNode
from .numkernel import Polynomial, as_cvector, solve_dense
from .pade_core import RationalFunction
from .series import FormalPowerSeries

EPS_NODE = 1e-13
POLE = complex(np.inf, 0.0)


def _check_distinct(nodes, name):
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if abs(nodes[i] - nodes[j]) <= EPS_NODE * (1 + abs(nodes[i])):
                raise InvalidNodes(f"{name} {i} and {j} coincide ({nodes[i]})")


def _check_nonzero(nodes, name):
    if np.any(nodes == 0):
        raise ZeroNode(f"{name} must be nonzero")


def _hit(nodes, t):
    """Index of the first node within EPS_NODE of `t`, or -1."""
    close = np.nonzero(np.abs(nodes - t) <= EPS_NODE * (1 + abs(t)))[0]
    return int(close[0]) if close.size else -1


def _num_den_moments(weights, nodes, N, form):
    # k-th series coefficient of sum_i w_i / (node_i - t)   (form 1)
    # or of sum_i w_i / (1 - node_i t)                     (form 2)
    k = np.arange(N + 1)[:, None]
    if form == 1:
        return (weights[None, :] / nodes[None, :] ** (k + 1)).sum(axis=1)
    return (weights[None, :] * nodes[None, :] ** k).sum(axis=1)


def _expand(a, pnodes, b, znodes, N, form):
    if N < 0:
        raise InvalidInput("N must be >= 0")
    num = _num_den_moments(a, pnodes, N, form)
    den = _num_den_moments(b, znodes, N, form)
    size = np.sum(np.abs(b / znodes)) if form == 1 else np.sum(np.abs(b))
    if abs(den[0]) <= 1e-14 * size or den[0] == 0:
        raise DegenerateDenominator("barycentric denominator vanishes at t = 0")
    d = np.zeros(N + 1, dtype=complex)
    for k in range(N + 1):
        acc = num[k]
        if k:
            acc -= np.dot(den[1:k + 1], d[k - 1::-1])
        d[k] = acc / den[0]
    return FormalPowerSeries(d)


def _sigma(c: FormalPowerSeries, znodes, K, form, inclusive=False):
    """``S[k, i] = sum_{j=0}^{k-1} c_j g_i^(k-j)`` for k = 0..K.

    With ``g_i = 1/z_i`` and an extra ``1/z_i`` factor in form 1 (so the
    exponent is ``k-j+1``), or ``g_i = z_i`` in form 2. `inclusive` runs the
    inner sum through ``j = k``.
    """
    S = np.zeros((K + 1, len(znodes)), dtype=complex)
    for k in range(K + 1):
        top = k + 1 if inclusive else k
        for j in range(top):
            if form == 1:
                S[k] += c[j] / znodes ** (k - j + 1)
            else:
                S[k] += c[j] * znodes ** (k - j)
    return S


@dataclass(frozen=True)
class BarycentricForm1:
    """``sum a_i/(pnodes_i - t) / sum b_i/(znodes_i - t)``."""

    a: np.ndarray
    pnodes: np.ndarray
    b: np.ndarray
    znodes: np.ndarray

    def __post_init__(self):
        _init_fields(self)

    @property
    def p(self) -> int:
        return len(self.a) - 1

    @property
    def q(self) -> int:
        return len(self.b) - 1

    def __call__(self, t):
        return eval_form1(self, t)

    def expand(self, N: int) -> FormalPowerSeries:
        return expand_form1(self, N)

    def to_rational(self) -> RationalFunction:
        return to_rational(self)


@dataclass(frozen=True)
class BarycentricForm2:
    """``sum a_i/(1 - pnodes_i t) / sum b_i/(1 - znodes_i t)``."""

    a: np.ndarray
    pnodes: np.ndarray
    b: np.ndarray
    znodes: np.ndarray

    def __post_init__(self):
        _init_fields(self)

    @property
    def p(self) -> int:
        return len(self.a) - 1

    @property
    def q(self) -> int:
        return len(self.b) - 1

    def __call__(self, t):
        return eval_form2(self, t)

    def expand(self, N: int) -> FormalPowerSeries:
        return expand_form2(self, N)

    def to_rational(self) -> RationalFunction:
        return to_rational(self)


def _init_fields(obj):
    for name in ("a", "pnodes", "b", "znodes"):
        v = as_cvector(getattr(obj, name), name)
        v.setflags(write=False)
        object.__setattr__(obj, name, v)
    if len(obj.a) != len(obj.pnodes) or len(obj.b) != len(obj.znodes):
        raise InvalidInput("coefficient and node arrays must have matching lengths")
    _check_distinct(obj.pnodes, "pole nodes")
    _check_distinct(obj.znodes, "zero nodes")


def _nodes(pnodes, znodes, form):
    pnodes = as_cvector(pnodes, "pole nodes")
    znodes = as_cvector(znodes, "zero nodes")
    _check_distinct(pnodes, "pole nodes")
    _check_distinct(znodes, "zero nodes")
    if form == 1:
        _check_nonzero(pnodes, "form-1 pole nodes")
        _check_nonzero(znodes, "form-1 zero nodes")
    return pnodes, znodes


def _bpa(c, pnodes, znodes, form):
    pnodes, znodes = _nodes(pnodes, znodes, form)
    p, q = len(pnodes) - 1, len(znodes) - 1
    K = p + q
    c.require(K, f"barycentric [{p}/{q}]")
    k = np.arange(K + 1)[:, None]
    A = np.zeros((K + 2, K + 2), dtype=complex)
    rhs = np.zeros(K + 2, dtype=complex)
    # normalization: the denominator equals 1 at t = 0
    A[0, p + 1:] = 1 / znodes if form == 1 else 1.0
    rhs[0] = 1.0
    A[1:, : p + 1] = 1 / pnodes[None, :] ** (k + 1) if form == 1 else pnodes[None, :] ** k
    A[1:, p + 1:] = -_sigma(c, znodes, K, form)
    rhs[1:] = c.coeffs[: K + 1]
    x = solve_dense(A, rhs)
    cls = BarycentricForm1 if form == 1 else BarycentricForm2
    return cls(x[: p + 1], pnodes, x[p + 1:], znodes)


def bpa_form1(c: FormalPowerSeries, pnodes, znodes) -> BarycentricForm1:
    """Barycentric Padé approximant in form 1.

    Solves the ``(p+q+2)``-square system made of the normalization
    ``sum b_i/z_i = 1`` and, for ``k = 0..p+q``,

        sum_i a_i / p_i**(k+1) - sum_i b_i sum_{j<k} c_j / z_i**(k-j+1) = c_k,

    so that ``R(t) - f(t) = O(t**(p+q+1))``. All nodes must be nonzero and
    distinct within each family.
    """
    return _bpa(c, pnodes, znodes, 1)


def bpa_form2(c: FormalPowerSeries, pnodes, znodes) -> BarycentricForm2:
    """Barycentric Padé approximant in form 2 (normalization ``sum b_i = 1``).

    Zero nodes are allowed; they lower the corresponding degree.
    """
    return _bpa(c, pnodes, znodes, 2)


def _bpta(c, b, pnodes, znodes, form):
    pnodes, znodes = _nodes(pnodes, znodes, form)
    b = as_cvector(b, "denominator weights")
    if len(b) != len(znodes):
        raise InvalidInput(f"{len(b)} weights for {len(znodes)} zero nodes")
    p = len(pnodes) - 1
    c.require(p, f"barycentric Padé-type with p={p}")
    den0 = np.sum(b / znodes) if form == 1 else np.sum(b)
    size = np.sum(np.abs(b / znodes)) if form == 1 else np.sum(np.abs(b))
    if den0 == 0 or abs(den0) <= 1e-14 * size:
        raise DegenerateDenominator("the prescribed denominator vanishes at t = 0")
    k = np.arange(p + 1)[:, None]
    A = 1 / pnodes[None, :] ** (k + 1) if form == 1 else pnodes[None, :] ** k
    rhs = _sigma(c, znodes, p, form, inclusive=True) @ b
    a = solve_dense(A, rhs)
    cls = BarycentricForm1 if form == 1 else BarycentricForm2
    return cls(a, pnodes, b, znodes)


def bpta_form1(c: FormalPowerSeries, b, pnodes, znodes) -> BarycentricForm1:
    """Barycentric Padé-type approximant in form 1 with prescribed ``b``.

    The numerator weights solve, for ``k = 0..p``,

        sum_i a_i / p_i**(k+1) = sum_i b_i sum_{j<=k} c_j / z_i**(k-j+1),

    giving ``R(t) - f(t) = O(t**(p+1))`` for any ``b`` with
    ``sum b_i/z_i != 0``.
    """
    return _bpta(c, b, pnodes, znodes, 1)


def bpta_form2(c: FormalPowerSeries, b, pnodes, znodes) -> BarycentricForm2:
    return _bpta(c, b, pnodes, znodes, 2)


def _eval(R, t, form):
    t_arr = np.asarray(t, dtype=complex)
    flat = t_arr.ravel()
    out = np.empty(flat.shape, dtype=complex)
    if form == 1:
        pn, zn = R.pnodes, R.znodes
    else:
        with np.errstate(divide="ignore"):
            pn = np.where(R.pnodes == 0, np.inf, 1 / np.where(R.pnodes == 0, 1, R.pnodes))
            zn = np.where(R.znodes == 0, np.inf, 1 / np.where(R.znodes == 0, 1, R.znodes))
    for idx, x in enumerate(flat):
        ip = _hit(pn, x)
        iz = _hit(zn, x)
        if ip >= 0 and iz >= 0:
            out[idx] = R.a[ip] / R.b[iz]
        elif ip >= 0:
            out[idx] = POLE
        elif iz >= 0:
            out[idx] = 0.0
        else:
            if form == 1:
                num = np.sum(R.a / (R.pnodes - x))
                den = np.sum(R.b / (R.znodes - x))
            else:
                num = np.sum(R.a / (1 - R.pnodes * x))
                den = np.sum(R.b / (1 - R.znodes * x))
            out[idx] = POLE if den == 0 else num / den
    out = out.reshape(t_arr.shape)
    return out[()] if out.ndim == 0 else out


def eval_form1(R: BarycentricForm1, t):
    """Evaluate a form-1 approximant at scalar or array `t`.

    At a pole node the value is ``inf`` (a pole marker, not an error); at a
    zero node it is 0; where a pole node and a zero node coincide the
    removable limit ``a_i / b_j`` is returned.
    """
    return _eval(R, t, 1)


def eval_form2(R: BarycentricForm2, t):
    return _eval(R, t, 2)


def expand_form1(R: BarycentricForm1, N: int) -> FormalPowerSeries:
    """Series coefficients ``d_0..d_N`` of a form-1 approximant.

    Uses ``den_0 d_k = num_k - sum_{j<k} d_j den_{k-j}`` with
    ``num_k = sum a_i/p_i**(k+1)`` and ``den_m = sum b_i/z_i**(m+1)``;
    for a normalized BPA ``den_0 = 1``.
    """
    _check_nonzero(R.pnodes, "form-1 pole nodes")
    _check_nonzero(R.znodes, "form-1 zero nodes")
    return _expand(R.a, R.pnodes, R.b, R.znodes, N, 1)


def expand_form2(R: BarycentricForm2, N: int) -> FormalPowerSeries:
    return _expand(R.a, R.pnodes, R.b, R.znodes, N, 2)


def convert_form2_to_form1(R: BarycentricForm2) -> BarycentricForm1:
    if np.any(R.pnodes == 0) or np.any(R.znodes == 0):
        raise ZeroNode("a zero node has no form-1 counterpart")
    return BarycentricForm1(R.a / R.pnodes, 1 / R.pnodes, R.b / R.znodes, 1 / R.znodes)


def convert_form1_to_form2(R: BarycentricForm1) -> BarycentricForm2:
    if np.any(R.pnodes == 0) or np.any(R.znodes == 0):
        raise ZeroNode("form-1 nodes must be nonzero")
    return BarycentricForm2(R.a / R.pnodes, 1 / R.pnodes, R.b / R.znodes, 1 / R.znodes)


def _linear_factor(node, form):
    # (node - t) for form 1, (1 - node t) for form 2
    return Polynomial([node, -1]) if form == 1 else Polynomial([1, -node])


def _prod(factors):
    out = Polynomial([1])
    for f in factors:
        out = out * f
    return out


def to_rational(R) -> RationalFunction:
    """Collapse a barycentric approximant to ``num(t)/den(t)``.

    Form 1 becomes ``N_p(t) prod(z_i - t) / (D_q(t) prod(p_i - t))``. A pole
    node and a zero node that compare exactly equal cancel.
    """
    form = 1 if isinstance(R, BarycentricForm1) else 2
    if not isinstance(R, (BarycentricForm1, BarycentricForm2)):
        raise InvalidInput(f"not a barycentric form: {type(R).__name__}")
    pf = [_linear_factor(x, form) for x in R.pnodes]
    zf = [_linear_factor(x, form) for x in R.znodes]

    Np = Polynomial([0])
    for i in range(len(pf)):
        Np = Np + _prod(pf[:i] + pf[i + 1:]).scale(R.a[i])
    Dq = Polynomial([0])
    for i in range(len(zf)):
        Dq = Dq + _prod(zf[:i] + zf[i + 1:]).scale(R.b[i])

    keep_p = list(range(len(pf)))
    keep_z = list(range(len(zf)))
    for i, x in enumerate(R.pnodes):
        for j in keep_z:
            if R.znodes[j] == x:
                keep_p.remove(i)
                keep_z.remove(j)
                break
    num = Np * _prod([zf[j] for j in keep_z])
    den = Dq * _prod([pf[i] for i in keep_p])
    return RationalFunction(num, den)


def interpolatory_form1(nodes, values, weights) -> BarycentricForm1:
    """Form-1 interpolant ``sum w_i f_i/(x_i - t) / sum w_i/(x_i - t)``.

    Takes the value ``f_i`` at ``x_i`` whatever the (nonzero) weights are.
    """
    nodes = as_cvector(nodes, "nodes")
    values = as_cvector(values, "values")
    weights = as_cvector(weights, "weights")
    if not len(nodes) == len(values) == len(weights):
        raise InvalidInput("nodes, values and weights must have equal lengths")
    if np.any(weights == 0):
        raise InvalidNodes("weights must be nonzero")
    _check_nonzero(nodes, "nodes")
    return BarycentricForm1(weights * values, nodes, weights, nodes)


def barycentric_engine(nodes, form: int = 1):
    """Diagonal ``[m/m]`` constructor using the first ``m+1`` of `nodes`.

    Pole and zero nodes coincide, so the result is the classical Padé
    approximant whatever nodes are used. For the shift constructions in
    :mod:`padebary.pade_core`.
    """
    nodes = as_cvector(nodes, "nodes")
    build = bpa_form1 if form == 1 else bpa_form2

    def engine(c: FormalPowerSeries, m: int):
        if m + 1 > len(nodes):
            raise InvalidInput(f"engine has {len(nodes)} nodes, [{m}/{m}] needs {m + 1}")
        return build(c, nodes[: m + 1], nodes[: m + 1])

    return engine
