import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padebary.barycentric import (
    BarycentricForm1,
    BarycentricForm2,
    bpa_form1,
    bpa_form2,
    bpta_form1,
    bpta_form2,
    convert_form1_to_form2,
    convert_form2_to_form1,
    interpolatory_form1,
    to_rational,
)
from padebary.errors import (
    DegenerateDenominator,
    InsufficientOrder,
    InvalidInput,
    InvalidNodes,
    ZeroNode,
)
from padebary.pade_core import pade
from padebary.series import (
    FormalPowerSeries,
    contact_order,
    exp_series,
    log1p_over_t_series,
    max_scaled_error,
    tan_over_t_series,
)

EXP = exp_series(16)
LOG = log1p_over_t_series(16)
TAN = tan_over_t_series(4.0, 16)

P1 = np.array([1.5, -2.0 + 0.5j, 3.0, -4.5, 6.0 - 1j])
Z1 = np.array([-1.25, 2.5, -3.5 + 1j, 5.0, -7.0])


def example1_nodes(omega=4.0):
    base = np.array([1, -1, 3, -3, 5]) * np.pi
    return base / (2 * omega), base / omega


def test_form1_zero_order():
    c0 = 2.5
    R = bpa_form1(FormalPowerSeries([c0, 1.0]), [2.0], [3.0])
    # normalization b/z = 1 and a/p = c0
    np.testing.assert_allclose(R.b, [3.0])
    np.testing.assert_allclose(R.a, [c0 * 2.0])


def test_form2_zero_order():
    R = bpa_form2(FormalPowerSeries([2.5, 1.0]), [2.0], [3.0])
    np.testing.assert_allclose(R.a, [2.5])
    np.testing.assert_allclose(R.b, [1.0])


@pytest.mark.parametrize("build", [bpa_form1, bpa_form2])
def test_duplicate_nodes_rejected(build):
    with pytest.raises(InvalidNodes):
        build(EXP, [1.0, 1.0], [2.0])
    with pytest.raises(InvalidNodes):
        build(EXP, [1.0], [2.0, 3.0, 2.0])


def test_form1_zero_node_rejected():
    with pytest.raises(ZeroNode):
        bpa_form1(EXP, [0.0, 1.0], [2.0])
    with pytest.raises(ZeroNode):
        bpta_form1(EXP, [1.0], [1.0], [0.0])
    # form 2 takes zero nodes
    bpa_form2(EXP, [0.0, 1.0], [2.0])


def test_short_series_rejected():
    with pytest.raises(InsufficientOrder):
        bpa_form1(exp_series(3), P1[:3], Z1[:3])


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5)])
@pytest.mark.parametrize("build", [bpa_form1, bpa_form2])
@pytest.mark.parametrize("c", [EXP, LOG], ids=["exp", "log"])
def test_bpa_contact_order(p, q, build, c):
    R = build(c, P1[: p + 1], Z1[: q + 1])
    assert max_scaled_error(R.expand(p + q), c, p + q) <= 1e-9
    assert contact_order(R.expand(p + q + 1), c) >= p + q + 1


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("build", [bpa_form1, bpa_form2])
def test_coincident_nodes_give_pade(m, build):
    # with shared nodes the approximant is the classical [m/m]
    nodes = P1[: m + 1]
    R = build(LOG, nodes, nodes)
    t = np.linspace(-0.6, 0.6, 13)
    np.testing.assert_allclose(R(t), pade(LOG, m, m)(t), rtol=1e-9)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (4, 4), (3, 0)])
def test_forms_agree_under_reciprocal_nodes(p, q):
    A = bpa_form1(LOG, P1[: p + 1], Z1[: q + 1])
    B = bpa_form2(LOG, 1 / P1[: p + 1], 1 / Z1[: q + 1])
    t = np.linspace(-0.9, 0.9, 19) + 0.1j
    np.testing.assert_allclose(A(t), B(t), rtol=1e-9)


def test_eval_at_origin_is_c0():
    for build in (bpa_form1, bpa_form2):
        R = build(TAN, P1[:3], Z1[:3])
        assert abs(R(0.0) - TAN[0]) <= 1e-12


def test_eval_node_limits_form1():
    R = BarycentricForm1([1.0, 2.0], [1.0, 3.0], [1.0, 0.5], [2.0, 3.0])
    assert np.isinf(R(1.0))
    assert R(2.0) == 0
    # shared node: removable limit a_i / b_j
    assert R(3.0) == pytest.approx(2.0 / 0.5)
    vals = R(np.array([1.0, 0.25]))
    assert np.isinf(vals[0]) and np.isfinite(vals[1])


def test_eval_node_limits_form2():
    R = BarycentricForm2([1.0, 2.0], [1.0, 0.5], [1.0, 3.0], [0.25, 0.5])
    assert np.isinf(R(1.0))
    assert R(4.0) == 0
    assert R(2.0) == pytest.approx(2.0 / 3.0)


def test_eval_away_from_nodes_matches_definition():
    R = BarycentricForm1([1.0, -2.0], [1.0, 3.0], [1.0, 0.5], [2.0, -3.0])
    t = 0.37
    expected = (1 / (1 - t) - 2 / (3 - t)) / (1 / (2 - t) + 0.5 / (-3 - t))
    assert R(t) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("build", [bpa_form1, bpa_form2])
def test_expand_matches_rational(build):
    R = build(LOG, P1[:4], Z1[:3])
    np.testing.assert_allclose(R.expand(12).coeffs, R.to_rational().expand(12).coeffs, rtol=1e-9, atol=1e-12)


@pytest.mark.parametrize("build", [bpa_form1, bpa_form2])
def test_to_rational_values_and_degrees(build):
    p, q = 3, 2
    R = build(LOG, P1[: p + 1], Z1[: q + 1])
    F = to_rational(R)
    t = np.linspace(-0.8, 0.8, 9)
    # t = -0.8 is a zero node of the form-2 approximant
    np.testing.assert_allclose(F(t), R(t), rtol=1e-10, atol=1e-14)
    # N_p(t) prod(z - t) has degree p + q + 1 - 1 = p + q at most
    assert F.num.degree <= p + q + 1
    assert F.den.degree <= p + q + 1


def test_to_rational_cancels_shared_nodes():
    nodes = P1[:3]
    F = to_rational(bpa_form1(EXP, nodes, nodes))
    assert F.num.degree <= 2 and F.den.degree <= 2


def test_to_rational_zero_order():
    F = to_rational(BarycentricForm1([2.0], [1.0], [1.0], [3.0]))
    # 2/(1-t) / (1/(3-t)) = 2 (3 - t)/(1 - t)
    assert F.num.degree == 1 and F.den.degree == 1
    assert F(0.5) == pytest.approx(2 * 2.5 / 0.5)


def test_conversion_example():
    R2 = BarycentricForm2([1.0], [2.0], [1.0], [4.0])
    R1 = convert_form2_to_form1(R2)
    np.testing.assert_allclose(R1.a, [0.5])
    np.testing.assert_allclose(R1.pnodes, [0.5])
    with pytest.raises(ZeroNode):
        convert_form2_to_form1(BarycentricForm2([1.0], [0.0], [1.0], [4.0]))


@pytest.mark.parametrize("p,q", [(0, 0), (2, 1), (4, 4)])
def test_conversion_round_trip(p, q):
    R = bpa_form1(TAN, P1[: p + 1], Z1[: q + 1])
    back = convert_form2_to_form1(convert_form1_to_form2(R))
    np.testing.assert_allclose(back.a, R.a, rtol=1e-14)
    np.testing.assert_allclose(back.pnodes, R.pnodes, rtol=1e-14)
    t = np.linspace(-0.3, 0.3, 7)
    np.testing.assert_allclose(convert_form1_to_form2(R)(t), R(t), rtol=1e-12)


@pytest.mark.parametrize("build", [bpta_form1, bpta_form2])
@pytest.mark.parametrize("p", [0, 1, 3, 5])
def test_bpta_contact_through_p(build, p):
    rng = np.random.default_rng(p)
    b = rng.normal(size=3) + 1j * rng.normal(size=3)
    pn = np.concatenate([P1, [-8.0 + 2j]])[: p + 1]
    R = build(LOG, b, pn, Z1[:3])
    assert max_scaled_error(R.expand(p), LOG, p) <= 1e-9


def test_bpta_degenerate_denominator():
    with pytest.raises(DegenerateDenominator):
        bpta_form2(LOG, [1.0, -1.0], [2.0], [3.0, 4.0])
    with pytest.raises(DegenerateDenominator):
        bpta_form1(LOG, [3.0, -4.0], [2.0], [3.0, 4.0])
    with pytest.raises(InvalidInput):
        bpta_form1(LOG, [1.0], [2.0], [3.0, 4.0])


def test_interpolatory_form():
    x = np.array([-2.0, -0.5, 1.0, 2.5])
    f = np.cos(x)
    w = np.array([1.0, -3.0, 2.0, 0.5])
    R = interpolatory_form1(x, f, w)
    np.testing.assert_allclose(R(x), f, atol=1e-12)
    # scaling all weights leaves the function unchanged
    S = interpolatory_form1(x, f, 7.5 * w)
    t = np.linspace(-1.9, 2.4, 11)
    np.testing.assert_allclose(S(t), R(t), rtol=1e-12)
    with pytest.raises(InvalidNodes):
        interpolatory_form1(x, f, [1.0, 0.0, 1.0, 1.0])


def test_tail_bound_near_origin():
    R = bpa_form1(LOG, P1, Z1)
    N = 20
    d = R.expand(N).coeffs
    for t in np.linspace(-0.1, 0.1, 9):
        partial = np.polyval(d[::-1], t)
        assert abs(R(t) - partial) <= 2 * abs(d[N] * t**N) + 1e-14


def test_tan_example_form2_contact():
    pn, zn = example1_nodes()
    R = bpa_form2(TAN, 1 / pn, 1 / zn)
    assert max_scaled_error(R.expand(8), TAN, 8) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(0.2, 1.2), min_size=2, max_size=4, unique=True), st.integers(0, 2**31))
def test_bpa_contact_random_nodes(mags, seed):
    rng = np.random.default_rng(seed)
    pn = np.array(mags) * np.exp(2j * np.pi * rng.random(len(mags)))
    zn = np.array(mags[::-1]) * np.exp(2j * np.pi * rng.random(len(mags)))
    if np.min(np.abs(np.diff(np.sort_complex(pn)))) < 1e-2 or np.min(np.abs(pn[:, None] - pn[None, :]) + np.eye(len(pn))) < 1e-2:
        return
    R = bpa_form2(EXP, pn, zn)
    K = len(pn) + len(zn) - 2
    assert max_scaled_error(R.expand(K), EXP, K) <= 1e-8
