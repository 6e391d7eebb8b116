"""Transvectants of binary forms and the maps that factor them.

A transvectant of index r pairs two binary forms of orders m and n into a
form of order m+n-2r.  The production route forms A(x)*B(y), applies the
omega operator r times, merges y back into x, and rescales; an independent
derivative-sum route is kept as an internal oracle.  The module also
provides the projection/section pair between the tensor space and each
transvectant summand, the scaling factors tying them together, and an
exchange identity on Jacobians used by the imbedding argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, perm
from typing import Iterable, Optional, Sequence

from .polycore import (
    MultiForm,
    add,
    bracket_power,
    mul,
    negate,
    omega_power,
    polarize,
    scale,
    substitute_pair,
)

Rational = Fraction


def _partner(pair: str) -> str:
    return "y" if pair != "y" else "x"


@dataclass(frozen=True)
class BinaryForm:
    """A binary form: homogeneous of a declared order in a single pair."""

    pair: str
    order: int
    form: MultiForm

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("negative order")
        if self.form.is_zero():
            return
        if self.form.pairs not in ((), (self.pair,)):
            raise ValueError(f"form involves pairs {self.form.pairs}, expected ({self.pair!r},)")
        if self.form.order(self.pair) != self.order:
            raise ValueError(f"order mismatch for pair {self.pair!r}")

    def is_zero(self) -> bool:
        return self.form.is_zero()

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, pair: str = "x", convention: str = "monomial") -> "BinaryForm":
        """Build from a coefficient list a_0..a_m.

        "monomial" reads sum a_k x1^(m-k) x2^k; "binomial" additionally
        weights a_k by C(m,k).
        """
        if convention not in ("monomial", "binomial"):
            raise ValueError(f"unknown convention {convention!r}")
        m = len(coeffs) - 1
        if m < 0:
            raise ValueError("empty coefficient list")
        terms = {}
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if convention == "binomial":
                c *= comb(m, k)
            if c:
                terms[(m - k, k)] = c
        return cls(pair, m, MultiForm({pair: m}, terms) if terms else MultiForm.zero())

    def to_coeffs(self, convention: str = "monomial") -> list:
        if convention not in ("monomial", "binomial"):
            raise ValueError(f"unknown convention {convention!r}")
        m = self.order
        out = []
        for k in range(m + 1):
            c = self.form.coefficient({self.pair: (m - k, k)}) if not self.form.is_zero() else Fraction(0)
            if convention == "binomial":
                c = c / comb(m, k)
            out.append(c)
        return out

    def to_json_dict(self, convention: str = "monomial") -> dict:
        return {
            "pair": self.pair,
            "order": self.order,
            "convention": convention,
            "coeffs": [str(c) for c in self.to_coeffs(convention)],
        }

    @classmethod
    def from_json_dict(cls, data) -> "BinaryForm":
        coeffs = [Fraction(c) for c in data["coeffs"]]
        bf = cls.from_coeffs(coeffs, data.get("pair", "x"), data.get("convention", "monomial"))
        if bf.order != data["order"]:
            raise ValueError("order mismatch in serialized form")
        return bf


# ---------------------------------------------------------------------------
# scaling factors
# ---------------------------------------------------------------------------


def _check_index(m: int, n: int, r: int) -> None:
    if r < 0 or r > min(m, n):
        raise ValueError(f"transvectant index out of range: r={r} for orders ({m},{n})")


def factor_f(m: int, n: int, r: int) -> Fraction:
    """Projection-side factor (m-r)!(n-r)!/(m!n!)."""
    _check_index(m, n, r)
    return Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))


def factor_h(m: int, n: int, r: int) -> Fraction:
    """Composite factor (m+n-2r+1)!/((m+n-r+1)! r!)."""
    _check_index(m, n, r)
    return Fraction(factorial(m + n - 2 * r + 1), factorial(m + n - r + 1) * factorial(r))


def factor_g(m: int, n: int, r: int) -> Fraction:
    """Section-side factor, defined so that factor_f * factor_g = factor_h."""
    _check_index(m, n, r)
    return factor_h(m, n, r) / factor_f(m, n, r)


# ---------------------------------------------------------------------------
# transvectants
# ---------------------------------------------------------------------------


def transvect(A: BinaryForm, B: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (A,B)_r, of order m+n-2r.

    Omega route: f(m,n;r) * [Omega^r A(x)B(y)] with y merged back into x.
    """
    if A.pair != B.pair:
        raise ValueError("forms are over different pairs")
    m, n = A.order, B.order
    if A.is_zero() or B.is_zero():
        return BinaryForm(A.pair, max(m + n - 2 * r, 0), MultiForm.zero())
    _check_index(m, n, r)
    out_order = m + n - 2 * r
    t = A.pair
    s = _partner(t)
    Bf = substitute_pair(B.form, t, s) if t in B.form.pairs else B.form
    F = mul(A.form, Bf)
    G = omega_power(F, t, s, r) if r else F
    if G.is_zero():
        return BinaryForm(t, out_order, MultiForm.zero())
    if s in G.pairs:
        G = substitute_pair(G, s, t)
    return BinaryForm(t, out_order, scale(G, factor_f(m, n, r)))


def _derivative(form: MultiForm, pair: str, d1: int, d2: int) -> MultiForm:
    s = 2 * form.pairs.index(pair)
    out = {}
    for key, c in form.terms.items():
        e1, e2 = key[s], key[s + 1]
        if e1 < d1 or e2 < d2:
            continue
        nk = list(key)
        nk[s] = e1 - d1
        nk[s + 1] = e2 - d2
        out[tuple(nk)] = c * perm(e1, d1) * perm(e2, d2)
    if not out:
        return MultiForm.zero()
    o = form.orders[pair]
    orders = dict(form.orders)
    orders[pair] = None if o is None else o - d1 - d2
    return MultiForm._make(form.pairs, orders, out)


def transvect_derivative(A: BinaryForm, B: BinaryForm, r: int) -> BinaryForm:
    """Derivative-sum route for (A,B)_r; internal oracle for transvect."""
    if A.pair != B.pair:
        raise ValueError("forms are over different pairs")
    m, n = A.order, B.order
    if A.is_zero() or B.is_zero():
        return BinaryForm(A.pair, max(m + n - 2 * r, 0), MultiForm.zero())
    _check_index(m, n, r)
    out_order = m + n - 2 * r
    t = A.pair
    total = MultiForm.zero()
    for i in range(r + 1):
        piece = mul(_derivative(A.form, t, r - i, i), _derivative(B.form, t, i, r - i))
        piece = scale(piece, comb(r, i))
        total = add(total, piece if i % 2 == 0 else negate(piece))
    return BinaryForm(t, out_order, scale(total, factor_f(m, n, r)))


# ---------------------------------------------------------------------------
# projection and section
# ---------------------------------------------------------------------------


def project_pi(F: MultiForm, m: int, n: int, r: int) -> MultiForm:
    """Project a bihomogeneous form of orders (m,n) in (x,y) onto the
    order-(m+n-2r) summand, landing in pair x."""
    _check_index(m, n, r)
    if F.is_zero():
        return MultiForm.zero()
    if F.order("x") != m or F.order("y") != n:
        raise ValueError("order mismatch for pair 'x'/'y'")
    G = omega_power(F, "x", "y", r) if r else F
    if G.is_zero():
        return MultiForm.zero()
    if "y" in G.pairs:
        G = substitute_pair(G, "y", "x")
    return scale(G, factor_f(m, n, r))


def section_iota(C, m: int, n: int, r: int) -> MultiForm:
    """Section of project_pi: embed an order-(m+n-2r) form into the (m,n)
    tensor space as g(m,n;r) (xy)^r times its split polarization."""
    _check_index(m, n, r)
    form = C.form if isinstance(C, BinaryForm) else C
    w = m + n - 2 * r
    if form.is_zero():
        return MultiForm.zero()
    if form.pairs == ("x",):
        form = substitute_pair(form, "x", "z")
    if form.pairs == ():
        if w != 0:
            raise ValueError(f"order mismatch: section expects a form of order {w}")
    elif form.pairs != ("z",) or form.order("z") != w:
        raise ValueError(f"order mismatch: section expects a form of order {w}")
    out = form
    if w:
        out = polarize(out, "z", "x", m - r)
        out = polarize(out, "z", "y", n - r)
    out = scale(out, factor_g(m, n, r) / factorial(w))
    if r:
        out = mul(out, bracket_power("x", "y", r))
    return out


def trace_element(m: int) -> MultiForm:
    """The canonical invariant (xy)^m in the (m,m) tensor space."""
    if m < 0:
        raise ValueError("negative order")
    return bracket_power("x", "y", m) if m else MultiForm.constant(1)


# ---------------------------------------------------------------------------
# the exchange identity
# ---------------------------------------------------------------------------


def _product(A: BinaryForm, B: BinaryForm) -> BinaryForm:
    return BinaryForm(A.pair, A.order + B.order, mul(A.form, B.form))


def jacobian_exchange_check(A: BinaryForm, B: BinaryForm, Q: BinaryForm, R: BinaryForm) -> bool:
    """Check (AQ,BR)_1 - (AR,BQ)_1 = s(m+n+2s)/((m+s)(n+s)) AB (Q,R)_1."""
    m, n, s = A.order, B.order, Q.order
    if R.order != s:
        raise ValueError("Q and R must have equal orders")
    lhs = add(
        transvect(_product(A, Q), _product(B, R), 1).form,
        negate(transvect(_product(A, R), _product(B, Q), 1).form),
    )
    if s == 0:
        return lhs.is_zero()
    c = Fraction(s * (m + n + 2 * s), (m + s) * (n + s))
    rhs = scale(mul(mul(A.form, B.form), transvect(Q, R, 1).form), c)
    return add(lhs, negate(rhs)).is_zero()


# ---------------------------------------------------------------------------
# randomized inputs for verification routines
# ---------------------------------------------------------------------------


def random_binary_form(m: int, rng, pair: str = "x") -> BinaryForm:
    """Random form with numerators in [-99,99] and denominators in [1,20]."""
    coeffs = [Fraction(rng.randint(-99, 99), rng.randint(1, 20)) for _ in range(m + 1)]
    return BinaryForm.from_coeffs(coeffs, pair)
