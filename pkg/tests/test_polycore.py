import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binform.polycore import (
    MultiForm,
    add,
    bracket,
    bracket_power,
    evaluate,
    exact_divide,
    from_json_dict,
    linear_substitute,
    mul,
    negate,
    omega,
    omega_power,
    polarize,
    scale,
    substitute_pair,
    to_json_dict,
)


def mono(exps, c=1):
    return MultiForm.monomial(exps, c)


def pair_power(pair, linear, e):
    """(a*x1 + b*x2)^e as a MultiForm."""
    out = MultiForm.constant(1)
    base = mono({pair: (1, 0)}, linear[0]) + mono({pair: (0, 1)}, linear[1])
    for _ in range(e):
        out = mul(out, base)
    return out


# -- pinned examples --------------------------------------------------------


def test_omega_on_x1y2():
    f = mono({"x": (1, 0), "y": (0, 1)})
    assert omega(f, "x", "y") == MultiForm.constant(1)


def test_polarize_x1x2_twice():
    g = mono({"x": (1, 1)})
    assert polarize(g, "x", "y", 2) == mono({"y": (1, 1)}, 2)


def test_exact_divide_difference_of_squares():
    num = mono({"x": (2, 0)}) - mono({"x": (0, 2)})
    den = mono({"x": (1, 0)}) - mono({"x": (0, 1)})
    assert exact_divide(num, den) == mono({"x": (1, 0)}) + mono({"x": (0, 1)})


def test_evaluate_example():
    f = mono({"x": (1, 0), "y": (0, 1)})
    assert evaluate(f, {"x": (2, 3), "y": (5, 7)}) == 14


def test_omega_of_bracket_is_two():
    # the r=1, m=n=1 instance: omega[(xy)] = 2, matching a unit factor of 1/2
    assert omega(bracket("x", "y"), "x", "y") == MultiForm.constant(2)


def test_omega_power_on_bracket_power():
    # Omega^r (xy)^r is the constant (r+1)! r! / 1 step by step; check r=3 value
    f = bracket_power("x", "y", 3)
    out = omega_power(f, "x", "y", 3)
    assert out == MultiForm.constant(144)  # 4!*3!/1! = 144


# -- error contracts --------------------------------------------------------


def test_unknown_pair_rejected():
    with pytest.raises(ValueError, match="unknown pair"):
        MultiForm.monomial({"t": (1, 0)})


def test_inactive_pair_errors():
    f = mono({"x": (2, 0)})
    with pytest.raises(ValueError, match="inactive pair"):
        omega(f, "x", "y")
    with pytest.raises(ValueError, match="inactive pair"):
        polarize(f, "y", "z", 1)
    with pytest.raises(ValueError, match="inactive pair"):
        substitute_pair(f, "y", "x")


def test_degenerate_bracket():
    with pytest.raises(ValueError, match="degenerate bracket"):
        bracket("x", "x")


def test_inexact_division():
    f = mono({"x": (2, 0)}) + mono({"x": (0, 2)})
    g = mono({"x": (1, 0)}) - mono({"x": (0, 1)})
    with pytest.raises(ValueError, match="inexact division"):
        exact_divide(f, g)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError, match="order mismatch"):
        MultiForm({"x": 2}, {(1, 0): 1})


def test_missing_assignment():
    f = mono({"x": (1, 0)})
    with pytest.raises(ValueError, match="missing assignment"):
        evaluate(f, {})


# -- structural behavior ----------------------------------------------------


def test_zero_coefficients_purged():
    f = MultiForm({"x": 1}, {(1, 0): 1, (0, 1): 0})
    assert list(f.terms.values()) == [F(1)]


def test_add_zero_preserves_orders():
    f = mono({"x": (2, 1)})
    assert add(f, MultiForm.zero()) == f
    assert add(MultiForm.zero(), f) == f


def test_polarize_past_order_gives_zero_form():
    f = mono({"x": (1, 1)})
    assert polarize(f, "x", "y", 3).is_zero()


def test_inhomogeneous_tag_is_transient():
    f = mono({"x": (1, 0)})
    s = add(f, MultiForm.constant(5))
    assert s.orders["x"] is None
    back = add(s, MultiForm.constant(-5))
    assert back == f and back.orders["x"] == 1


def test_substitute_pair_merges_exponents():
    f = mono({"x": (1, 0), "y": (0, 1)}, 3)
    assert substitute_pair(f, "y", "x") == mono({"x": (1, 1)}, 3)


def test_linear_substitute_expands():
    f = mono({"x": (2, 0)})
    g = linear_substitute(f, "x", (1, 1, 0, 1))  # x1 -> x1 + x2
    assert g == mono({"x": (2, 0)}) + mono({"x": (1, 1)}, 2) + mono({"x": (0, 2)})


def test_polarization_of_linear_powers():
    # (y d/dx)^l (c.x)^m = m!/(m-l)! (c.x)^(m-l) (c.y)^l for l <= m <= 6
    from math import perm

    c = (2, -3)
    for m in range(7):
        fx = pair_power("x", c, m)
        for ell in range(m + 1):
            expected = scale(mul(pair_power("x", c, m - ell), pair_power("y", c, ell)), perm(m, ell))
            assert polarize(fx, "x", "y", ell) == expected, (m, ell)


# -- JSON -------------------------------------------------------------------


def test_json_round_trip_and_stability():
    f = mono({"x": (2, 0)}, F(3, 7)) - mono({"x": (1, 1)}, 2) + mono({"x": (0, 2)})
    d = to_json_dict(f)
    assert from_json_dict(d) == f
    assert json.dumps(d) == json.dumps(to_json_dict(from_json_dict(d)))
    # leading term first
    assert d["terms"][0]["exps"]["x"] == [2, 0]
    assert d["terms"][0]["coeff"] == "3/7"


def test_json_inhomogeneous_tag():
    s = add(mono({"x": (1, 0)}), MultiForm.constant(1))
    d = to_json_dict(s)
    assert d["orders"]["x"] == "inhomogeneous"
    assert from_json_dict(d) == s


# -- property tests ---------------------------------------------------------


@st.composite
def homogeneous_forms(draw, pairs=("x", "y"), max_order=3):
    orders = {}
    for p in pairs:
        orders[p] = draw(st.integers(min_value=0, max_value=max_order))
    keys = [()]
    for p in pairs:
        m = orders[p]
        keys = [k + (e, m - e) for k in keys for e in range(m + 1)]
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-4, max_value=4, max_denominator=4),
            min_size=len(keys),
            max_size=len(keys),
        )
    )
    return MultiForm(orders, dict(zip(keys, coeffs)))


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(), homogeneous_forms())
def test_degree_bookkeeping_under_mul(f, g):
    h = mul(f, g)
    if f.is_zero() or g.is_zero():
        assert h.is_zero()
    else:
        for p in ("x", "y"):
            assert h.order(p) == f.order(p) + g.order(p)


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(), homogeneous_forms())
def test_evaluate_is_a_homomorphism(f, g):
    pt = {"x": (F(2), F(-3)), "y": (F(1, 2), F(5))}
    assert evaluate(add(f, g), pt) == evaluate(f, pt) + evaluate(g, pt)
    assert evaluate(mul(f, g), pt) == evaluate(f, pt) * evaluate(g, pt)


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(), homogeneous_forms())
def test_exact_divide_recovers_factor(f, g):
    if g.is_zero():
        return
    assert exact_divide(mul(f, g), g) == f


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(max_order=4))
def test_omega_antisymmetry(f):
    if f.order("x") is None or f.order("y") is None:
        return
    if f.order("x") < 1 or f.order("y") < 1:
        return
    assert omega(f, "x", "y") == negate(omega(f, "y", "x"))


@settings(max_examples=60, deadline=None)
@given(homogeneous_forms(max_order=4), st.integers(min_value=0, max_value=3))
def test_omega_lowers_orders(f, r):
    if f.is_zero() or f.order("x") < max(r, 1) or f.order("y") < max(r, 1):
        return
    out = omega_power(f, "x", "y", r)
    if not out.is_zero():
        assert out.order("x") == f.order("x") - r
        assert out.order("y") == f.order("y") - r
