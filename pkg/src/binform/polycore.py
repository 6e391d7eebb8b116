"""Exact sparse arithmetic for polynomials in paired variables.

Every variable comes in a pair (x1, x2) drawn from a fixed registry of pair
names.  A MultiForm is a sparse polynomial over the rationals in any subset
of those pairs, with a declared homogeneity order per pair.  On top of the
ring operations this module provides the differential operators that drive
everything else in the package: the omega operator (the 2x2 polarization
determinant), single-pair polarization, bracket monomials, pair
substitution, and exact division.

All values are immutable and all operations are pure: inputs are never
mutated and equal inputs give equal outputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, perm
from typing import Iterable, Mapping, Optional, Union

Rational = Fraction

Coeff = Union[int, Fraction]

PAIR_NAMES = ("p", "q", "u", "v", "w", "x", "y", "z")

_PAIR_SET = frozenset(PAIR_NAMES)


def _check_pair(name: str) -> None:
    if name not in _PAIR_SET:
        raise ValueError(f"unknown pair {name!r}")


# ---------------------------------------------------------------------------
# Raw kernels.
#
# The heavy pipelines (operator chases, big transvectants) run on plain dicts
# mapping fixed-width exponent tuples to numeric coefficients.  When the
# coefficients are ints the arithmetic stays in ints, which is several times
# faster than Fraction.  MultiForm methods delegate to these kernels.
# `sa`, `sb`, ... are slot offsets: pair k occupies slots 2k and 2k+1.
# ---------------------------------------------------------------------------


def _raw_add_into(acc: dict, terms: Mapping, factor: Coeff = 1) -> None:
    for key, c in terms.items():
        nc = acc.get(key, 0) + c * factor
        if nc:
            acc[key] = nc
        else:
            acc.pop(key, None)


def _raw_mul(t1: Mapping, t2: Mapping) -> dict:
    out: dict = {}
    get = out.get
    for k1, c1 in t1.items():
        for k2, c2 in t2.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            nc = get(key, 0) + c1 * c2
            if nc:
                out[key] = nc
            else:
                del out[key]
    return out


def _raw_mul_many(factors: Iterable[Mapping]) -> dict:
    factors = sorted(factors, key=len)
    out: Optional[dict] = None
    for t in factors:
        out = dict(t) if out is None else _raw_mul(out, t)
    return {} if out is None else out


def _raw_omega_power(terms: Mapping, sa: int, sb: int, r: int) -> dict:
    # omega = d/da1 d/db2 - d/da2 d/db1, expanded to the r-th power in one
    # pass: sum_k (-1)^k C(r,k) da1^(r-k) da2^k db1^k db2^(r-k).
    if r == 0:
        return dict(terms)
    binoms = [comb(r, k) for k in range(r + 1)]
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        ea1, ea2, eb1, eb2 = key[sa], key[sa + 1], key[sb], key[sb + 1]
        for k in range(max(0, r - ea1, r - eb2), min(r, ea2, eb1) + 1):
            i, j = r - k, k
            mult = binoms[k] * perm(ea1, i) * perm(ea2, j) * perm(eb1, j) * perm(eb2, i)
            if k & 1:
                mult = -mult
            nk = list(key)
            nk[sa] = ea1 - i
            nk[sa + 1] = ea2 - j
            nk[sb] = eb1 - j
            nk[sb + 1] = eb2 - i
            nk = tuple(nk)
            nc = get(nk, 0) + c * mult
            if nc:
                out[nk] = nc
            else:
                del out[nk]
    return out


def _raw_polarize(terms: Mapping, ssrc: int, sdst: int, ell: int) -> dict:
    # (dst . d/dsrc)^ell = sum_k C(ell,k) dst1^k dst2^(ell-k) dsrc1^k dsrc2^(ell-k)
    if ell == 0:
        return dict(terms)
    binoms = [comb(ell, k) for k in range(ell + 1)]
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        es1, es2 = key[ssrc], key[ssrc + 1]
        for k in range(max(0, ell - es2), min(ell, es1) + 1):
            mult = binoms[k] * perm(es1, k) * perm(es2, ell - k)
            nk = list(key)
            nk[ssrc] = es1 - k
            nk[ssrc + 1] = es2 - (ell - k)
            nk[sdst] += k
            nk[sdst + 1] += ell - k
            nk = tuple(nk)
            nc = get(nk, 0) + c * mult
            if nc:
                out[nk] = nc
            else:
                del out[nk]
    return out


def _raw_substitute(terms: Mapping, ssrc: int, sdst: int) -> dict:
    # merge pair src into pair dst, zeroing the src slots in place
    out: dict = {}
    get = out.get
    for key, c in terms.items():
        nk = list(key)
        nk[sdst] += nk[ssrc]
        nk[sdst + 1] += nk[ssrc + 1]
        nk[ssrc] = 0
        nk[ssrc + 1] = 0
        nk = tuple(nk)
        nc = get(nk, 0) + c
        if nc:
            out[nk] = nc
        else:
            del out[nk]
    return out


def _raw_bracket_power(nslots: int, sa: int, sb: int, r: int) -> dict:
    # (ab)^r = sum_k (-1)^k C(r,k) a1^(r-k) a2^k b1^k b2^(r-k)
    out: dict = {}
    for k in range(r + 1):
        key = [0] * nslots
        key[sa] = r - k
        key[sa + 1] = k
        key[sb] = k
        key[sb + 1] = r - k
        out[tuple(key)] = -comb(r, k) if k & 1 else comb(r, k)
    return out


def _raw_monomial_power(nslots: int, slot: int, e: int) -> dict:
    key = [0] * nslots
    key[slot] = e
    return {tuple(key): 1}


# ---------------------------------------------------------------------------
# MultiForm
# ---------------------------------------------------------------------------


class MultiForm:
    """A sparse rational polynomial in registered variable pairs.

    Terms are keyed by flattened exponent tuples laid out pair by pair in
    alphabetical pair order: for pairs ("x", "y") the key (2, 0, 1, 1)
    means x1^2 * y1 * y2.  `orders` declares the homogeneity order of the
    form in each active pair; the value None marks a transiently
    inhomogeneous pair (it arises from adding forms of different orders
    and is never produced by the operator routes).
    """

    __slots__ = ("pairs", "orders", "terms", "_hash")

    def __init__(self, orders: Mapping[str, Optional[int]], terms: Mapping[tuple, Coeff]):
        pairs = tuple(sorted(orders))
        for name in pairs:
            _check_pair(name)
            o = orders[name]
            if o is not None and (not isinstance(o, int) or o < 0):
                raise ValueError(f"bad order for pair {name!r}: {o!r}")
        width = 2 * len(pairs)
        clean: dict = {}
        for key, c in terms.items():
            if len(key) != width or any((not isinstance(e, int)) or e < 0 for e in key):
                raise ValueError(f"bad exponent key {key!r} for pairs {pairs!r}")
            c = Fraction(c)
            if c:
                clean[tuple(key)] = c
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "orders", {p: orders[p] for p in pairs})
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)
        self._canonicalize(check_declared=True)

    @classmethod
    def _make(cls, pairs: tuple, orders: Mapping[str, Optional[int]], terms: Mapping[tuple, Coeff]) -> "MultiForm":
        # internal fast path: trusted layout, still canonicalized
        self = object.__new__(cls)
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "orders", dict(orders))
        object.__setattr__(self, "terms", {k: Fraction(c) for k, c in terms.items() if c})
        object.__setattr__(self, "_hash", None)
        self._canonicalize(check_declared=False)
        return self

    def _canonicalize(self, check_declared: bool) -> None:
        pairs = self.pairs
        terms = self.terms
        if not terms:
            object.__setattr__(self, "pairs", ())
            object.__setattr__(self, "orders", {})
            return
        # per-pair exponent sums: validate or promote declared orders,
        # then prune pairs the form does not actually involve
        keep = []
        orders = {}
        drop_slots = []
        for i, name in enumerate(pairs):
            sums = {key[2 * i] + key[2 * i + 1] for key in terms}
            declared = self.orders[name]
            if declared is None:
                if len(sums) == 1:
                    declared = next(iter(sums))
            elif check_declared and sums != {declared}:
                raise ValueError(f"order mismatch for pair {name!r}")
            if declared == 0:
                drop_slots.extend((2 * i, 2 * i + 1))
            else:
                keep.append(name)
                orders[name] = declared
        if drop_slots:
            drop = set(drop_slots)
            terms = {
                tuple(e for j, e in enumerate(key) if j not in drop): c
                for key, c in terms.items()
            }
            object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "pairs", tuple(keep))
        object.__setattr__(self, "orders", orders)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def order(self, pair: str) -> Optional[int]:
        _check_pair(pair)
        if pair not in self.orders:
            return 0
        return self.orders[pair]

    def _slot(self, pair: str) -> int:
        try:
            return 2 * self.pairs.index(pair)
        except ValueError:
            raise ValueError(f"inactive pair {pair!r}") from None

    def coefficient(self, exps: Mapping[str, tuple]) -> Fraction:
        """Coefficient of the monomial with the given per-pair exponents."""
        key = [0] * (2 * len(self.pairs))
        for name, (e1, e2) in exps.items():
            s = self._slot(name)
            key[s] = e1
            key[s + 1] = e2
        return self.terms.get(tuple(key), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiForm):
            return NotImplemented
        return (
            self.pairs == other.pairs
            and self.orders == other.orders
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.pairs, tuple(sorted(self.orders.items(), key=lambda kv: kv[0])),
                      frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiForm(0)"
        bits = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            mono = []
            for i, name in enumerate(self.pairs):
                for comp in (0, 1):
                    e = key[2 * i + comp]
                    if e == 1:
                        mono.append(f"{name}{comp + 1}")
                    elif e > 1:
                        mono.append(f"{name}{comp + 1}^{e}")
            body = "*".join(mono) if mono else "1"
            bits.append(f"{c}*{body}" if mono else f"{c}")
        return "MultiForm(" + " + ".join(bits) + ")"

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiForm":
        return MultiForm({}, {})

    @staticmethod
    def constant(c: Coeff) -> "MultiForm":
        return MultiForm({}, {(): c})

    @staticmethod
    def monomial(exps: Mapping[str, tuple], coeff: Coeff = 1) -> "MultiForm":
        """Single-term form, e.g. monomial({"x": (2, 1)}, 3) = 3*x1^2*x2."""
        orders = {name: e1 + e2 for name, (e1, e2) in exps.items()}
        pairs = tuple(sorted(orders))
        key = []
        for name in pairs:
            key.extend(exps[name])
        return MultiForm(orders, {tuple(key): coeff})

    # -- operator sugar ----------------------------------------------------

    def __add__(self, other: "MultiForm") -> "MultiForm":
        return add(self, other)

    def __sub__(self, other: "MultiForm") -> "MultiForm":
        return add(self, negate(other))

    def __neg__(self) -> "MultiForm":
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, MultiForm):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------


def _aligned(terms: Mapping, old_pairs: tuple, new_pairs: tuple) -> dict:
    if old_pairs == new_pairs:
        return dict(terms)
    slot_of = {name: i for i, name in enumerate(new_pairs)}
    width = 2 * len(new_pairs)
    out = {}
    for key, c in terms.items():
        nk = [0] * width
        for i, name in enumerate(old_pairs):
            j = slot_of[name]
            nk[2 * j] = key[2 * i]
            nk[2 * j + 1] = key[2 * i + 1]
        out[tuple(nk)] = c
    return out


def _merge_orders(f: MultiForm, g: MultiForm, pairs: tuple, combine) -> dict:
    orders = {}
    for name in pairs:
        o1 = f.orders.get(name, 0)
        o2 = g.orders.get(name, 0)
        orders[name] = combine(o1, o2)
    return orders


def add(f: MultiForm, g: MultiForm) -> MultiForm:
    if not f.terms:
        return g
    if not g.terms:
        return f
    pairs = tuple(sorted(set(f.pairs) | set(g.pairs)))
    terms = _aligned(f.terms, f.pairs, pairs)
    _raw_add_into(terms, _aligned(g.terms, g.pairs, pairs))

    def comb_orders(o1, o2):
        if o1 is None or o2 is None or o1 != o2:
            return None
        return o1

    return MultiForm._make(pairs, _merge_orders(f, g, pairs, comb_orders), terms)


def negate(f: MultiForm) -> MultiForm:
    return MultiForm._make(f.pairs, f.orders, {k: -c for k, c in f.terms.items()})


def scale(f: MultiForm, c: Coeff) -> MultiForm:
    c = Fraction(c)
    if not c:
        return MultiForm.zero()
    return MultiForm._make(f.pairs, f.orders, {k: v * c for k, v in f.terms.items()})


def mul(f: MultiForm, g: MultiForm) -> MultiForm:
    if not f.terms or not g.terms:
        return MultiForm.zero()
    pairs = tuple(sorted(set(f.pairs) | set(g.pairs)))
    t1 = _aligned(f.terms, f.pairs, pairs)
    t2 = _aligned(g.terms, g.pairs, pairs)

    def comb_orders(o1, o2):
        if o1 is None or o2 is None:
            return None
        return o1 + o2

    return MultiForm._make(pairs, _merge_orders(f, g, pairs, comb_orders), _raw_mul(t1, t2))


def evaluate(f: MultiForm, assignment: Mapping[str, tuple]) -> Fraction:
    """Evaluate at rational points, one (value1, value2) per active pair."""
    for name in f.pairs:
        if name not in assignment:
            raise ValueError(f"missing assignment for pair {name!r}")
    vals = [(Fraction(assignment[name][0]), Fraction(assignment[name][1])) for name in f.pairs]
    total = Fraction(0)
    for key, c in f.terms.items():
        term = c
        for i, (a1, a2) in enumerate(vals):
            e1, e2 = key[2 * i], key[2 * i + 1]
            if e1:
                term *= a1 ** e1
            if e2:
                term *= a2 ** e2
        total += term
    return total


def exact_divide(f: MultiForm, g: MultiForm) -> MultiForm:
    """Quotient f/g when g divides f exactly; raises otherwise.

    Runs lexicographic leading-term reduction: lex is multiplicative, so
    when f = q*g the leading term of f factors as LT(q)*LT(g) and the
    reduction peels off one quotient term per step.
    """
    if not g.terms:
        raise ZeroDivisionError("division by zero form")
    if not f.terms:
        return MultiForm.zero()
    pairs = tuple(sorted(set(f.pairs) | set(g.pairs)))
    rem = _aligned(f.terms, f.pairs, pairs)
    gt = _aligned(g.terms, g.pairs, pairs)
    glt = max(gt)
    gc = gt[glt]
    quot: dict = {}
    while rem:
        rlt = max(rem)
        qk = tuple(a - b for a, b in zip(rlt, glt))
        if any(e < 0 for e in qk):
            raise ValueError("inexact division")
        qc = rem[rlt] / gc
        quot[qk] = qc
        for k, c in gt.items():
            nk = tuple(a + b for a, b in zip(qk, k))
            nc = rem.get(nk, 0) - qc * c
            if nc:
                rem[nk] = nc
            else:
                rem.pop(nk, None)

    def comb_orders(o1, o2):
        if o1 is None or o2 is None:
            return None
        return o1 - o2

    orders = {}
    for name in pairs:
        o = comb_orders(f.orders.get(name, 0), g.orders.get(name, 0))
        orders[name] = None if (o is not None and o < 0) else o
    return MultiForm._make(pairs, orders, quot)


# ---------------------------------------------------------------------------
# differential and bracket operators
# ---------------------------------------------------------------------------


def omega_power(f: MultiForm, a: str, b: str, r: int) -> MultiForm:
    """Apply the omega operator for pairs (a, b) r times in one pass.

    omega = d/da1 d/db2 - d/da2 d/db1.  Lowers the order in each of the
    two pairs by r.
    """
    _check_pair(a)
    _check_pair(b)
    if a == b:
        raise ValueError(f"degenerate pair {a!r}")
    if r < 0:
        raise ValueError("negative operator power")
    if r == 0:
        return f
    terms = _raw_omega_power(f.terms, f._slot(a), f._slot(b), r)
    if not terms:
        return MultiForm.zero()
    orders = dict(f.orders)
    for name in (a, b):
        if orders[name] is not None:
            orders[name] -= r
    return MultiForm._make(f.pairs, orders, terms)


def omega(f: MultiForm, a: str, b: str) -> MultiForm:
    return omega_power(f, a, b, 1)


def polarize(f: MultiForm, src: str, dst: str, ell: int) -> MultiForm:
    """Apply the polarization operator (dst . d/dsrc) ell times in one pass.

    Moves ell degrees from pair src to pair dst.  When ell exceeds the
    order in src the result is the zero form.
    """
    _check_pair(src)
    _check_pair(dst)
    if src == dst:
        raise ValueError(f"degenerate pair {src!r}")
    if ell < 0:
        raise ValueError("negative operator power")
    if ell == 0:
        return f
    if src not in f.pairs:
        raise ValueError(f"inactive pair {src!r}")
    if dst in f.pairs:
        terms = _raw_polarize(f.terms, f._slot(src), f._slot(dst), ell)
        pairs = f.pairs
    else:
        pairs = tuple(sorted(set(f.pairs) | {dst}))
        terms = _raw_polarize(_aligned(f.terms, f.pairs, pairs), 2 * pairs.index(src),
                              2 * pairs.index(dst), ell)
    if not terms:
        return MultiForm.zero()
    orders = {name: f.orders.get(name, 0) for name in pairs}
    if orders[src] is not None:
        orders[src] -= ell
    if orders[dst] is not None:
        orders[dst] += ell
    return MultiForm._make(pairs, orders, terms)


def bracket_power(a: str, b: str, r: int) -> MultiForm:
    """The bracket monomial (ab)^r = (a1*b2 - a2*b1)^r, expanded."""
    _check_pair(a)
    _check_pair(b)
    if a == b:
        raise ValueError(f"degenerate bracket ({a}{b})")
    if r < 0:
        raise ValueError("negative bracket power")
    if r == 0:
        return MultiForm.constant(1)
    pairs = tuple(sorted((a, b)))
    sa = 2 * pairs.index(a)
    sb = 2 * pairs.index(b)
    terms = _raw_bracket_power(4, sa, sb, r)
    return MultiForm._make(pairs, {a: r, b: r}, terms)


def bracket(a: str, b: str) -> MultiForm:
    return bracket_power(a, b, 1)


def substitute_pair(f: MultiForm, src: str, dst: str) -> MultiForm:
    """Rename pair src to dst, merging exponents if dst is already active."""
    _check_pair(src)
    _check_pair(dst)
    if src == dst:
        return f
    if src not in f.pairs:
        raise ValueError(f"inactive pair {src!r}")
    if dst in f.pairs:
        terms = _raw_substitute(f.terms, f._slot(src), f._slot(dst))
        pairs = f.pairs
    else:
        pairs = tuple(sorted(set(f.pairs) | {dst}))
        terms = _raw_substitute(_aligned(f.terms, f.pairs, pairs), 2 * pairs.index(src),
                                2 * pairs.index(dst))
    if not terms:
        return MultiForm.zero()
    orders = {name: f.orders.get(name, 0) for name in pairs}
    osrc, odst = orders[src], orders[dst]
    orders[dst] = None if (osrc is None or odst is None) else osrc + odst
    orders[src] = 0
    out = MultiForm._make(pairs, orders, terms)
    return out


def linear_substitute(f: MultiForm, pair: str, coeffs: tuple) -> MultiForm:
    """Apply x1 -> a*x1 + b*x2, x2 -> c*x1 + d*x2 to one pair."""
    _check_pair(pair)
    if pair not in f.pairs:
        raise ValueError(f"inactive pair {pair!r}")
    a, b, c, d = (Fraction(v) for v in coeffs)
    s = f._slot(pair)
    out: dict = {}
    for key, co in f.terms.items():
        e1, e2 = key[s], key[s + 1]
        for i in range(e1 + 1):
            for j in range(e2 + 1):
                mult = co * comb(e1, i) * comb(e2, j) * a**i * b**(e1 - i) * c**j * d**(e2 - j)
                if not mult:
                    continue
                nk = list(key)
                nk[s] = i + j
                nk[s + 1] = (e1 - i) + (e2 - j)
                nk = tuple(nk)
                nc = out.get(nk, 0) + mult
                if nc:
                    out[nk] = nc
                else:
                    del out[nk]
    if not out:
        return MultiForm.zero()
    return MultiForm._make(f.pairs, f.orders, out)


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def rational_to_str(c: Coeff) -> str:
    return str(Fraction(c))


def rational_from_str(s: Union[str, int]) -> Fraction:
    return Fraction(s)


def to_json_dict(f: MultiForm) -> dict:
    orders = {
        name: ("inhomogeneous" if f.orders[name] is None else f.orders[name])
        for name in f.pairs
    }
    terms = []
    for key in sorted(f.terms, reverse=True):
        exps = {name: [key[2 * i], key[2 * i + 1]] for i, name in enumerate(f.pairs)}
        terms.append({"exps": exps, "coeff": rational_to_str(f.terms[key])})
    return {"orders": orders, "terms": terms}


def from_json_dict(data: Mapping) -> MultiForm:
    orders = {
        name: (None if o == "inhomogeneous" else int(o))
        for name, o in data["orders"].items()
    }
    pairs = tuple(sorted(orders))
    terms: dict = {}
    for entry in data["terms"]:
        key = []
        for name in pairs:
            e1, e2 = entry["exps"].get(name, (0, 0))
            key.extend((int(e1), int(e2)))
        terms[tuple(key)] = rational_from_str(entry["coeff"])
    return MultiForm(orders, terms)
