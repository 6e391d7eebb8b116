"""Exact Wigner 3-j, 6-j and 9-j symbols.

Values are quadratic surds q*sqrt(s) with q rational and s squarefree.
Each symbol is computed two independent ways: a differential-operator
chain acting on a highest-weight test form, and (for 9-j) a closed triple
sum.  The module also evaluates the syzygy coefficient kappa through a
9-j symbol, giving the third route used by the syzygy module's tests.

Square roots only ever arise from ratios of factorials, so surds are
assembled from prime exponents via Legendre's formula; nothing ever
factors a large integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, isqrt
from typing import Iterable, List, Sequence, Tuple, Union

from .polycore import (
    PAIR_NAMES,
    _raw_bracket_power,
    _raw_monomial_power,
    _raw_mul,
    _raw_omega_power,
    _raw_polarize,
    _raw_substitute,
)
from .transvectant import factor_h

HalfIntLike = Union["HalfInt", int, str, Fraction]


# ---------------------------------------------------------------------------
# half-integers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class HalfInt:
    """A nonnegative half-integer, stored as twice its value."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or self.twice < 0:
            raise ValueError(f"not a nonnegative half-integer: {self.twice}/2")

    @staticmethod
    def of(value: HalfIntLike) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"not a half-integer: {value}")
            return HalfInt(int(value * 2))
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


def _twice(value: HalfIntLike) -> int:
    return HalfInt.of(value).twice


# ---------------------------------------------------------------------------
# quadratic surds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticSurd:
    """Exact value coeff*sqrt(radicand), radicand squarefree positive."""

    coeff: Fraction
    radicand: int = 1

    def __post_init__(self):
        if self.radicand < 1:
            raise ValueError("radicand must be positive")
        if self.coeff == 0 and self.radicand != 1:
            object.__setattr__(self, "radicand", 1)

    @staticmethod
    def zero() -> "QuadraticSurd":
        return QuadraticSurd(Fraction(0), 1)

    @staticmethod
    def from_rational(q) -> "QuadraticSurd":
        return QuadraticSurd(Fraction(q), 1)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coeff == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("irrational value")
        return self.coeff

    def __mul__(self, other):
        if isinstance(other, QuadraticSurd):
            g = gcd(self.radicand, other.radicand)
            return QuadraticSurd(
                self.coeff * other.coeff * g,
                (self.radicand // g) * (other.radicand // g),
            )
        return QuadraticSurd(self.coeff * Fraction(other), self.radicand)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadraticSurd(-self.coeff, self.radicand)

    def __add__(self, other):
        if not isinstance(other, QuadraticSurd):
            other = QuadraticSurd.from_rational(other)
        if self.coeff == 0:
            return other
        if other.coeff == 0:
            return self
        if self.radicand != other.radicand:
            raise ValueError("incompatible radicands")
        return QuadraticSurd(self.coeff + other.coeff, self.radicand)

    def __sub__(self, other):
        return self + (-other)

    def __abs__(self):
        return QuadraticSurd(abs(self.coeff), self.radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        return f"{self.coeff} * sqrt({self.radicand})"


def _sieve(limit: int) -> List[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(2, limit + 1) if flags[p]]


def _legendre(n: int, p: int) -> int:
    total = 0
    pk = p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def sqrt_factorial_ratio(numerators: Iterable[int], denominators: Iterable[int]) -> QuadraticSurd:
    """Exactly sqrt(prod(a! for a in numerators) / prod(b!))."""
    nums = list(numerators)
    dens = list(denominators)
    for v in nums + dens:
        if v < 0:
            raise ValueError(f"negative factorial argument {v}")
    top = max(nums + dens, default=0)
    cnum, cden, rad = 1, 1, 1
    for p in _sieve(top):
        e = sum(_legendre(v, p) for v in nums) - sum(_legendre(v, p) for v in dens)
        half, rem = e // 2, e - 2 * (e // 2)
        if half >= 0:
            cnum *= p ** half
        else:
            cden *= p ** (-half)
        if rem:
            rad *= p
    return QuadraticSurd(Fraction(cnum, cden), rad)


def sqrt_rational(q) -> QuadraticSurd:
    """sqrt of a small positive rational; factors by trial division."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return QuadraticSurd.zero()
    n = q.numerator * q.denominator
    coeff, rad = Fraction(1, q.denominator), 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            coeff *= d
            n //= d * d
        if n % d == 0:
            rad *= d
            n //= d
        d += 1
    return QuadraticSurd(coeff, rad * n)


# ---------------------------------------------------------------------------
# triads
# ---------------------------------------------------------------------------


def _triad_defects(j1: int, j2: int, j: int) -> Tuple[int, int, int]:
    return (j1 + j2 - j, j2 + j - j1, j + j1 - j2)


def is_triad(j1: HalfIntLike, j2: HalfIntLike, j: HalfIntLike) -> bool:
    a, b, c = _twice(j1), _twice(j2), _twice(j)
    return all(d >= 0 and d % 2 == 0 for d in _triad_defects(a, b, c))


def is_stretched(j1: HalfIntLike, j2: HalfIntLike, j: HalfIntLike) -> bool:
    a, b, c = _twice(j1), _twice(j2), _twice(j)
    defects = _triad_defects(a, b, c)
    return all(d >= 0 and d % 2 == 0 for d in defects) and 0 in defects


def _require_triad(j1: int, j2: int, j: int, where: str) -> None:
    if not all(d >= 0 and d % 2 == 0 for d in _triad_defects(j1, j2, j)):
        raise ValueError(f"not a triad: {where} ({j1}/2, {j2}/2, {j}/2)")


# ---------------------------------------------------------------------------
# coupling coefficients and 3-j symbols
# ---------------------------------------------------------------------------


def _slot(name: str) -> int:
    return 2 * PAIR_NAMES.index(name)


def _check_projection(j: int, m: int) -> None:
    # m ranges over M_j: same parity as j, |m| <= j
    if abs(m) > j or (j - m) % 2:
        raise ValueError(f"projection {m}/2 out of range for j={j}/2")


def coupling_coefficient(j1: HalfIntLike, j2: HalfIntLike, j: HalfIntLike,
                         m1: HalfIntLike, m2: HalfIntLike, m: HalfIntLike) -> QuadraticSurd:
    """Vector coupling coefficient <e_{j1 m1} x e_{j2 m2} | i(e_{jm})>.

    The injection is the isometric Clebsch-Gordan section with the standard
    (Brussaard/Condon-Shortley) positive phase: its constant is the positive
    root sqrt((2j1)!(2j2)!(2j+1)! / ((j1+j2+j+1)! and the three defects)).
    """
    a1, a2, a = _twice(j1), _twice(j2), _twice(j)
    b1, b2, b = _signed_twice(m1), _signed_twice(m2), _signed_twice(m)
    _require_triad(a1, a2, a, "(j1, j2, j)")
    _check_projection(a1, b1)
    _check_projection(a2, b2)
    _check_projection(a, b)
    if b1 + b2 != b:
        return QuadraticSurd.zero()

    r = (a1 + a2 - a) // 2
    sz, sx, sy = _slot("z"), _slot("x"), _slot("y")
    t = {_mono_key(16, sz, (a - b) // 2, (a + b) // 2): 1}
    t = _raw_polarize(t, sz, sx, a1 - r)
    t = _raw_polarize(t, sz, sy, a2 - r)
    if r:
        t = _raw_mul(t, _raw_bracket_power(16, sx, sy, r))
    key = _mono_key2(16, sx, (a1 - b1) // 2, (a1 + b1) // 2,
                     sy, (a2 - b2) // 2, (a2 + b2) // 2)
    cf = Fraction(t.get(key, 0), factorial(a))
    if cf == 0:
        return QuadraticSurd.zero()
    # phase (-1)^((j+m)+(j1+m1)+(j2+m2)) from the three basis forms; the
    # surd combines sqrt(binom(2j, j-m)), the two monomial norms, and the
    # isometry constant into one factorial ratio
    sgn = -1 if ((a + b) // 2 + (a1 + b1) // 2 + (a2 + b2) // 2) % 2 else 1
    surd = sqrt_factorial_ratio(
        [a, a + 1, (a1 - b1) // 2, (a1 + b1) // 2, (a2 - b2) // 2, (a2 + b2) // 2],
        [(a - b) // 2, (a + b) // 2, a1 + a2 - r + 1, r, a1 - r, a2 - r],
    )
    return (sgn * cf) * surd


def _signed_twice(value: HalfIntLike) -> int:
    """Twice a possibly negative half-integer (projections m)."""
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, int):
        return 2 * value
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        if value.denominator not in (1, 2):
            raise ValueError(f"not a half-integer: {value}")
        return int(value * 2)
    raise TypeError(f"cannot interpret {value!r} as a half-integer")


def _mono_key(nslots: int, slot: int, e1: int, e2: int):
    key = [0] * nslots
    key[slot] = e1
    key[slot + 1] = e2
    return tuple(key)


def _mono_key2(nslots, s1, a1, a2, s2, b1, b2):
    key = [0] * nslots
    key[s1], key[s1 + 1] = a1, a2
    key[s2], key[s2 + 1] = b1, b2
    return tuple(key)


def threej(j1: HalfIntLike, j2: HalfIntLike, j: HalfIntLike,
           m1: HalfIntLike, m2: HalfIntLike, m: HalfIntLike) -> QuadraticSurd:
    """Wigner 3-j symbol (j1 j2 j; m1 m2 m)."""
    a1, a2, a = _twice(j1), _twice(j2), _twice(j)
    b1, b2, b = _signed_twice(m1), _signed_twice(m2), _signed_twice(m)
    _require_triad(a1, a2, a, "(j1, j2, j)")
    _check_projection(a1, b1)
    _check_projection(a2, b2)
    _check_projection(a, b)
    if b1 + b2 + b != 0:
        return QuadraticSurd.zero()
    C = coupling_coefficient(HalfInt(a1), HalfInt(a2), HalfInt(a),
                             Fraction(b1, 2), Fraction(b2, 2), Fraction(-b, 2))
    sgn = -1 if ((a1 - a2 - b) // 2) % 2 else 1
    return sgn * C * sqrt_rational(Fraction(1, a + 1))


# ---------------------------------------------------------------------------
# 6-j symbols
# ---------------------------------------------------------------------------


def _scalar_of_chain(t: dict, sz: int, order: int) -> int:
    target = _mono_key(16, sz, order, 0)
    if not t:
        return 0
    if set(t) == {target}:
        return t[target]
    raise ValueError("operator chain inconsistent")


def sixj(js: Sequence[HalfIntLike]) -> QuadraticSurd:
    """6-j symbol {j1 j2 j12; j3 J j23}, row-major input order."""
    if len(js) != 6:
        raise ValueError("sixj expects six entries")
    j1, j2, j12, j3, J, j23 = (_twice(v) for v in js)
    _require_triad(j1, j2, j12, "(j1, j2, j12)")
    _require_triad(j2, j3, j23, "(j2, j3, j23)")
    _require_triad(j12, j3, J, "(j12, j3, J)")
    _require_triad(j1, j23, J, "(j1, j23, J)")

    su, sy, sv, sw, sx, sz = (_slot(c) for c in ("u", "y", "v", "w", "x", "z"))
    t = _raw_monomial_power(16, sz, J)
    t = _raw_polarize(t, sz, su, (j1 + J - j23) // 2)
    t = _raw_polarize(t, sz, sy, (j23 + J - j1) // 2)
    t = _raw_mul(t, _raw_bracket_power(16, su, sy, (j1 + j23 - J) // 2))
    t = _raw_polarize(t, sy, sv, (j2 + j23 - j3) // 2)
    t = _raw_polarize(t, sy, sw, (j3 + j23 - j2) // 2)
    t = _raw_mul(t, _raw_bracket_power(16, sv, sw, (j2 + j3 - j23) // 2))
    t = _raw_omega_power(t, su, sv, (j1 + j2 - j12) // 2)
    t = _raw_substitute(t, su, sx)
    t = _raw_substitute(t, sv, sx)
    t = _raw_omega_power(t, sx, sw, (j12 + j3 - J) // 2)
    t = _raw_substitute(t, sx, sz)
    t = _raw_substitute(t, sw, sz)
    alpha = _scalar_of_chain(t, sz, J)

    h = lambda *v: [x // 2 for x in v]  # noqa: E731  twice-values to integers
    p1 = h(j1 + j12 - j2, j2 + j12 - j1, j12 + J - j3, j3 + J - j12)
    p2 = h(j1 + j23 - J, j1 + J - j23, j23 + J - j1, j2 + j3 - j23,
           j2 + j23 - j3, j3 + j23 - j2, j1 + j2 - j12, j12 + j3 - J)
    p3 = h(j1 + j2 + j12 + 2, j2 + j3 + j23 + 2, j1 + j23 + J + 2, j12 + j3 + J + 2)
    sgn = -1 if ((j1 + j2 + j3 + J) // 2) % 2 else 1
    return (Fraction(sgn * (J + 1) * alpha)) * sqrt_factorial_ratio(p1, p2 + p3)


# ---------------------------------------------------------------------------
# 9-j symbols
# ---------------------------------------------------------------------------


class NineJArray:
    """3x3 array of half-integers whose rows and columns are all triads."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[HalfIntLike]]):
        grid = tuple(tuple(HalfInt.of(v) for v in row) for row in rows)
        if len(grid) != 3 or any(len(row) != 3 for row in grid):
            raise ValueError("nine entries expected")
        tw = [[e.twice for e in row] for row in grid]
        for k in range(3):
            _require_triad(tw[k][0], tw[k][1], tw[k][2], f"row {k + 1}")
            _require_triad(tw[0][k], tw[1][k], tw[2][k], f"column {k + 1}")
        object.__setattr__(self, "rows", grid)

    def twice_rows(self) -> List[List[int]]:
        return [[e.twice for e in row] for row in self.rows]

    def transpose(self) -> "NineJArray":
        r = self.rows
        return NineJArray([[r[0][0], r[1][0], r[2][0]],
                           [r[0][1], r[1][1], r[2][1]],
                           [r[0][2], r[1][2], r[2][2]]])

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "NineJArray":
        r = self.rows
        return NineJArray([[r[row_perm[i]][col_perm[k]] for k in range(3)] for i in range(3)])

    def entry_sum_twice(self) -> int:
        return sum(e.twice for row in self.rows for e in row)

    def __eq__(self, other):
        return isinstance(other, NineJArray) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "; ".join(" ".join(str(e) for e in row) for row in self.rows)


def _ninej_q_lists(tw: List[List[int]]) -> Tuple[List[int], List[int], List[int]]:
    (j1, j2, j12), (j3, j4, j34), (j13, j24, J) = tw
    h = lambda *v: [x // 2 for x in v]  # noqa: E731
    q1 = h(j1 + j12 - j2, j2 + j12 - j1, j3 + j34 - j4,
           j4 + j34 - j3, j12 + J - j34, j34 + J - j12)
    q2 = h(j1 + j2 + j12 + 2, j3 + j4 + j34 + 2, j13 + j24 + J + 2,
           j1 + j3 + j13 + 2, j2 + j4 + j24 + 2, j12 + j34 + J + 2)
    q3 = h(j1 + j2 - j12, j3 + j4 - j34, j13 + j24 - J, j13 + J - j24,
           j24 + J - j13, j1 + j3 - j13, j1 + j13 - j3, j3 + j13 - j1,
           j2 + j4 - j24, j2 + j24 - j4, j4 + j24 - j2, j12 + j34 - J)
    return q1, q2, q3


def ninej_operator(arr: NineJArray) -> QuadraticSurd:
    """9-j symbol via the recoupling operator chain on z1^(2J)."""
    tw = arr.twice_rows()
    (j1, j2, j12), (j3, j4, j34), (j13, j24, J) = tw

    sp, sq, su, sv = (_slot(c) for c in ("p", "q", "u", "v"))
    sx, sy, sz = (_slot(c) for c in ("x", "y", "z"))
    t = _raw_monomial_power(16, sz, J)
    t = _raw_polarize(t, sz, sx, (j13 + J - j24) // 2)
    t = _raw_polarize(t, sz, sy, (j24 + J - j13) // 2)
    t = _raw_mul(t, _raw_bracket_power(16, sx, sy, (j13 + j24 - J) // 2))
    t = _raw_polarize(t, sx, sp, (j1 + j13 - j3) // 2)
    t = _raw_polarize(t, sx, sq, (j13 + j3 - j1) // 2)
    t = _raw_mul(t, _raw_bracket_power(16, sp, sq, (j1 + j3 - j13) // 2))
    t = _raw_polarize(t, sy, su, (j2 + j24 - j4) // 2)
    t = _raw_polarize(t, sy, sv, (j4 + j24 - j2) // 2)
    t = _raw_mul(t, _raw_bracket_power(16, su, sv, (j2 + j4 - j24) // 2))
    t = _raw_omega_power(t, sp, su, (j1 + j2 - j12) // 2)
    t = _raw_substitute(t, sp, sx)
    t = _raw_substitute(t, su, sx)
    t = _raw_omega_power(t, sq, sv, (j3 + j4 - j34) // 2)
    t = _raw_substitute(t, sq, sy)
    t = _raw_substitute(t, sv, sy)
    t = _raw_omega_power(t, sx, sy, (j12 + j34 - J) // 2)
    t = _raw_substitute(t, sx, sz)
    t = _raw_substitute(t, sy, sz)
    beta = _scalar_of_chain(t, sz, J)

    q1, q2, q3 = _ninej_q_lists(tw)
    return (Fraction((J + 1) * beta)) * sqrt_factorial_ratio(q1, q2 + q3)


def ninej_triple_sum(arr: NineJArray) -> QuadraticSurd:
    """9-j symbol via the three-index summation formula."""
    tw = arr.twice_rows()
    (j1, j2, j12), (j3, j4, j34), (j13, j24, J) = tw

    x1 = j34
    x2 = (j3 + j4 - j34) // 2
    x3 = (j12 - j34 + J) // 2
    x4 = (-j3 + j4 + j34) // 2
    x5 = (j12 + j34 - J) // 2
    y1 = (-j2 + j4 + j24) // 2
    y2 = (j13 + j24 - J) // 2
    y3 = j24 + 1
    y4 = (j2 + j4 - j24) // 2
    y5 = (j13 - j24 + J) // 2
    z1 = j1
    z2 = (-j1 + j2 + j12) // 2
    z3 = (j1 + j3 + j13 + 2) // 2
    z4 = (j1 + j3 - j13) // 2
    z5 = (j1 - j2 + j12) // 2
    p1 = (j1 + j3 - j24 + J) // 2
    p2 = (-j2 + j3 - j34 + j24) // 2
    p3 = (-j1 + j2 - j34 + J) // 2

    f = factorial
    total = Fraction(0)
    for x in range(0, min(x4, x5) + 1):
        for y in range(max(0, -p2 - x), min(y4, y5) + 1):
            for z in range(max(0, -p3 - x), min(z4, z5, p1 - y) + 1):
                num = (f(x1 - x) * f(x2 + x) * f(x3 + x) * f(y1 + y) * f(y2 + y)
                       * f(z1 - z) * f(z2 + z) * f(p1 - y - z))
                den = (f(x) * f(y) * f(z) * f(x4 - x) * f(x5 - x) * f(y3 + y)
                       * f(y4 - y) * f(y5 - y) * f(z3 - z) * f(z4 - z) * f(z5 - z)
                       * f(p2 + x + y) * f(p3 + x + z))
                term = Fraction(num, den)
                total += -term if (x + y + z) % 2 else term
    if total == 0:
        return QuadraticSurd.zero()

    def bracket(a, b, c, invert):
        # [a,b,c] = sqrt((a-b+c)!(a+b-c)!(a+b+c+1)!/(-a+b+c)!), args twice-values
        nums = [(a - b + c) // 2, (a + b - c) // 2, (a + b + c + 2) // 2]
        dens = [(-a + b + c) // 2]
        return (dens, nums) if invert else (nums, dens)

    nums, dens = [], []
    for a, b, c, inv in [
        (j3, j1, j13, False), (j2, j4, j24, False), (J, j13, j24, False),
        (j3, j4, j34, True), (j2, j1, j12, True), (J, j12, j34, True),
    ]:
        nn, dd = bracket(a, b, c, inv)
        nums.extend(nn)
        dens.extend(dd)
    sgn = -1 if x5 % 2 else 1
    return (sgn * total) * sqrt_factorial_ratio(nums, dens)


def ninej_support_size(arr: NineJArray) -> int:
    """Number of lattice triples the triple sum ranges over."""
    tw = arr.twice_rows()
    (j1, j2, j12), (j3, j4, j34), (j13, j24, J) = tw
    x4 = (-j3 + j4 + j34) // 2
    x5 = (j12 + j34 - J) // 2
    y4 = (j2 + j4 - j24) // 2
    y5 = (j13 - j24 + J) // 2
    z4 = (j1 + j3 - j13) // 2
    z5 = (j1 - j2 + j12) // 2
    p1 = (j1 + j3 - j24 + J) // 2
    p2 = (-j2 + j3 - j34 + j24) // 2
    p3 = (-j1 + j2 - j34 + J) // 2
    count = 0
    for x in range(0, min(x4, x5) + 1):
        for y in range(max(0, -p2 - x), min(y4, y5) + 1):
            lo = max(0, -p3 - x)
            hi = min(z4, z5, p1 - y)
            if hi >= lo:
                count += hi - lo + 1
    return count


_ROW_PERMS = [((0, 1, 2), 1), ((0, 2, 1), -1), ((1, 0, 2), -1),
              ((1, 2, 0), 1), ((2, 0, 1), 1), ((2, 1, 0), -1)]


def ninej_symmetry_check(arr: NineJArray, value=None) -> bool:
    """Transpose invariance plus the sign law for all 36 row/column
    permutations, checked with the triple-sum route."""
    if value is None:
        value = ninej_triple_sum(arr)
    if ninej_triple_sum(arr.transpose()) != value:
        return False
    odd_sign = -1 if arr.entry_sum_twice() // 2 % 2 else 1
    identity = (0, 1, 2)
    for rp, rsgn in _ROW_PERMS:
        for cp, csgn in _ROW_PERMS:
            if rp == identity and cp == identity:
                continue
            sgn = 1
            if rsgn < 0:
                sgn *= odd_sign
            if csgn < 0:
                sgn *= odd_sign
            if ninej_triple_sum(arr.permute(rp, cp)) != sgn * value:
                return False
    return True


# ---------------------------------------------------------------------------
# kappa through the 9-j bridge
# ---------------------------------------------------------------------------


def kappa_ninej_arrays(m: int, n: int, r: int, i: int, j: int,
                       p: Tuple[int, int]) -> Tuple[NineJArray, NineJArray]:
    """The 9-j array carrying kappa, and its rearrangement that feeds the
    triple sum (rows 2 and 3 swapped, columns 1 and 3 swapped, transposed;
    the net permutation leaves the value unchanged)."""
    a, b = p
    rows = [
        [Fraction(m, 2), Fraction(n, 2), Fraction(m + n - 2 * i, 2)],
        [Fraction(m, 2), Fraction(n, 2), Fraction(m + n - 2 * j, 2)],
        [m - 2 * a - 1, n - 2 * b - 1, m + n - r],
    ]
    base = NineJArray(rows)
    swapped = base.permute((0, 2, 1), (2, 1, 0)).transpose()
    return base, swapped


def kappa_via_ninej(m: int, n: int, r: int, i: int, j: int,
                    p: Tuple[int, int]) -> Fraction:
    """Third route to the syzygy coefficient: through a 9-j symbol."""
    from .syzygy import _check_admissible

    a, b = p
    _check_admissible(m, n, r, i, j, a, b)
    base, rearranged = kappa_ninej_arrays(m, n, r, i, j, p)
    value = ninej_triple_sum(rearranged)

    q1, q2, q3 = _ninej_q_lists(base.twice_rows())
    pref = sqrt_factorial_ratio(q2 + q3, q1)
    J2 = 2 * (m + n - r)
    K = (
        factor_h(m, n, i) * factor_h(m, n, j)
        * factor_h(m + n - 2 * i, m + n - 2 * j, r - i - j)
        / (factorial(2 * m + 2 * n - 2 * r)
           * factorial(2 * m - 4 * a - 2) * factorial(2 * n - 4 * b - 2))
    )
    out = (K / (J2 + 1)) * pref * value
    if not out.is_rational():
        raise ValueError("normalization mismatch")
    return out.to_fraction()
