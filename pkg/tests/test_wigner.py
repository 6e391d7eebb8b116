"""Recoupling coefficients, 6-j and 9-j symbols, and the 9-j route to kappa."""

import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binform.syzygy import kappa, pi_set
from binform.wigner import (
    HalfInt,
    NineJArray,
    QuadraticSurd,
    coupling_coefficient,
    is_stretched,
    is_triad,
    kappa_ninej_arrays,
    kappa_via_ninej,
    ninej_operator,
    ninej_support_size,
    ninej_symmetry_check,
    ninej_triple_sum,
    sixj,
    sqrt_factorial_ratio,
    sqrt_rational,
    threej,
)

from racah_oracle import racah_sixj


def _sq(v: QuadraticSurd) -> F:
    return v.coeff ** 2 * v.radicand


def _triads_upto(tmax):
    out = []
    for a in range(tmax + 1):
        for b in range(tmax + 1):
            for c in range(abs(a - b), min(a + b, tmax) + 1, 2):
                out.append((a, b, c))
    return out


def _arrays_upto(tmax):
    """All valid 9-j arrays with twice-entries at most tmax."""
    triads = _triads_upto(tmax)
    tset = set(triads)
    by_pair = {}
    for (a, b, c) in triads:
        by_pair.setdefault((a, b), []).append(c)
    out = []
    for r1 in triads:
        for r2 in triads:
            opts = [by_pair.get((r1[k], r2[k]), ()) for k in range(3)]
            for c1 in opts[0]:
                for c2 in opts[1]:
                    for c3 in opts[2]:
                        if (c1, c2, c3) in tset:
                            out.append((r1, r2, (c1, c2, c3)))
    return out


def _mk(tw) -> NineJArray:
    return NineJArray([[F(v, 2) for v in row] for row in tw])


class TestHalfInt:
    def test_parsing(self):
        assert HalfInt.of(2).twice == 4
        assert HalfInt.of("3/2").twice == 3
        assert HalfInt.of(F(5, 2)).twice == 5
        assert HalfInt.of(HalfInt(7)).twice == 7

    def test_str(self):
        assert str(HalfInt(4)) == "2"
        assert str(HalfInt(3)) == "3/2"

    def test_rejects_non_half_integers(self):
        with pytest.raises(ValueError, match="not a half-integer"):
            HalfInt.of(F(1, 3))
        with pytest.raises(ValueError):
            HalfInt(-1)
        with pytest.raises(TypeError):
            HalfInt.of(1.5)

    def test_ordering(self):
        assert HalfInt(3) < HalfInt(4)


_PRIME_POOL = (2, 3, 5, 7, 11, 13)


def _mask_radicand(mask: int) -> int:
    rad = 1
    for k, p in enumerate(_PRIME_POOL):
        if mask >> k & 1:
            rad *= p
    return rad


_surds = st.builds(
    lambda num, den, mask: QuadraticSurd(F(num, den), _mask_radicand(mask)),
    st.integers(-40, 40),
    st.integers(1, 12),
    st.integers(0, 63),
)


class TestQuadraticSurd:
    def test_constructor_normalizes_zero(self):
        assert QuadraticSurd(F(0), 15) == QuadraticSurd.zero()
        with pytest.raises(ValueError, match="radicand must be positive"):
            QuadraticSurd(F(1), 0)

    def test_to_fraction(self):
        assert QuadraticSurd(F(3, 4)).to_fraction() == F(3, 4)
        with pytest.raises(ValueError, match="irrational value"):
            QuadraticSurd(F(1), 2).to_fraction()

    def test_str(self):
        assert str(QuadraticSurd(F(2, 3), 5)) == "2/3 * sqrt(5)"
        assert str(QuadraticSurd(F(-1, 2))) == "-1/2"

    def test_incompatible_addition(self):
        with pytest.raises(ValueError, match="incompatible radicands"):
            QuadraticSurd(F(1), 2) + QuadraticSurd(F(1), 3)

    @given(_surds, _surds)
    def test_product_squares_multiply(self, u, v):
        w = u * v
        assert _sq(w) == _sq(u) * _sq(v)
        if u.coeff * v.coeff > 0:
            assert w.coeff > 0
        elif u.coeff * v.coeff < 0:
            assert w.coeff < 0

    @given(_surds, _surds)
    def test_product_radicand_squarefree(self, u, v):
        rad = (u * v).radicand
        for p in _PRIME_POOL:
            assert rad % (p * p) != 0

    @given(_surds, st.integers(-30, 30), st.integers(1, 9))
    def test_same_radicand_linear_arithmetic(self, u, num, den):
        v = QuadraticSurd(F(num, den), u.radicand)
        if u.is_zero() or v.is_zero():
            return
        assert (u + v).coeff == u.coeff + v.coeff
        assert (u - v).coeff == u.coeff - v.coeff
        assert u + QuadraticSurd.zero() == u
        assert abs(-u) == abs(u)

    @given(_surds, st.fractions(min_value=-5, max_value=5))
    def test_rational_scaling(self, u, q):
        assert (q * u).coeff == q * u.coeff
        assert (u * q).radicand in (1, u.radicand)


class TestSquareRootHelpers:
    @given(st.lists(st.integers(0, 14), max_size=6),
           st.lists(st.integers(0, 14), max_size=6))
    def test_factorial_ratio_square(self, nums, dens):
        from math import factorial

        v = sqrt_factorial_ratio(nums, dens)
        target = F(1)
        for x in nums:
            target *= factorial(x)
        for x in dens:
            target /= factorial(x)
        assert _sq(v) == target
        assert v.coeff > 0

    def test_negative_argument_rejected(self):
        with pytest.raises(ValueError, match="negative factorial argument"):
            sqrt_factorial_ratio([3, -1], [])

    @given(st.integers(0, 4000), st.integers(1, 4000))
    def test_sqrt_rational_square(self, num, den):
        q = F(num, den)
        v = sqrt_rational(q)
        assert _sq(v) == q
        assert v.coeff >= 0


class TestTriadPredicates:
    def test_examples(self):
        assert is_triad("1/2", "1/2", 1)
        assert not is_triad("1/2", "1/2", "1/2")
        assert is_triad(1, 1, 1)
        assert is_stretched("1/2", "1/2", 1)
        assert not is_stretched(1, 1, 1)
        assert is_triad(0, 0, 0) and is_stretched(0, 0, 0)


class TestCouplingCoefficient:
    def test_spin_half_top_state(self):
        c = coupling_coefficient("1/2", "1/2", 1, "1/2", "1/2", 1)
        assert c == QuadraticSurd(F(1))

    def test_projection_selection_rule(self):
        assert coupling_coefficient(1, 1, 2, 1, 0, 0).is_zero()

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError, match="not a triad"):
            coupling_coefficient(1, 1, 3, 1, 1, 2)
        with pytest.raises(ValueError, match="out of range"):
            coupling_coefficient(1, 1, 2, 2, 0, 2)
        with pytest.raises(ValueError, match="out of range"):
            coupling_coefficient(1, 1, 2, "1/2", "1/2", 1)

    def test_rows_are_unit_vectors(self):
        # fixed (j1, j2, j, m): the coefficients over m1 have unit square sum
        for (tj1, tj2, tj) in [(1, 1, 2), (2, 2, 2), (2, 1, 3), (3, 3, 4), (4, 2, 2)]:
            for tm in range(-tj, tj + 1, 2):
                total = F(0)
                for tm1 in range(-tj1, tj1 + 1, 2):
                    tm2 = tm - tm1
                    if abs(tm2) <= tj2:
                        total += _sq(coupling_coefficient(
                            F(tj1, 2), F(tj2, 2), F(tj, 2),
                            F(tm1, 2), F(tm2, 2), F(tm, 2)))
                assert total == 1

    def test_columns_are_unit_vectors(self):
        # fixed (j1, j2, m1, m2): summing over admissible j also gives 1
        for (tj1, tj2) in [(1, 1), (2, 1), (2, 2), (3, 2)]:
            for tm1 in range(-tj1, tj1 + 1, 2):
                for tm2 in range(-tj2, tj2 + 1, 2):
                    total = F(0)
                    for tj in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
                        if abs(tm1 + tm2) <= tj:
                            total += _sq(coupling_coefficient(
                                F(tj1, 2), F(tj2, 2), F(tj, 2),
                                F(tm1, 2), F(tm2, 2), F(tm1 + tm2, 2)))
                    assert total == 1

    def test_highest_weight_positivity(self):
        # the coefficient at m1 = j1, m = j is positive whenever admissible
        for (tj1, tj2, tj) in [(1, 1, 2), (2, 2, 2), (2, 1, 3), (4, 2, 2), (1, 3, 2)]:
            v = coupling_coefficient(F(tj1, 2), F(tj2, 2), F(tj, 2),
                                     F(tj1, 2), F(tj - tj1, 2), F(tj, 2))
            assert v.coeff > 0


class TestThreeJ:
    def test_spin_half_value(self):
        v = threej("1/2", "1/2", 1, "1/2", "1/2", -1)
        assert v == QuadraticSurd(F(-1, 3), 3)

    def test_zero_unless_projections_balance(self):
        assert threej(1, 1, 1, 1, 0, 0).is_zero()

    def test_pair_contraction(self):
        # (j, j, 0; m, -m, 0) = (-1)^(j - m) / sqrt(2j + 1)
        for tj in range(0, 7):
            for tm in range(-tj, tj + 1, 2):
                v = threej(F(tj, 2), F(tj, 2), 0, F(tm, 2), F(-tm, 2), 0)
                sgn = -1 if ((tj - tm) // 2) % 2 else 1
                assert v == sgn * sqrt_rational(F(1, tj + 1))

    def test_orthogonality(self):
        for (tj1, tj2, tj) in [(1, 1, 2), (2, 2, 2), (2, 1, 3), (3, 1, 2)]:
            total = F(0)
            for tm1 in range(-tj1, tj1 + 1, 2):
                for tm2 in range(-tj2, tj2 + 1, 2):
                    tm = -(tm1 + tm2)
                    if abs(tm) <= tj:
                        total += _sq(threej(F(tj1, 2), F(tj2, 2), F(tj, 2),
                                            F(tm1, 2), F(tm2, 2), F(tm, 2)))
            assert total * (tj + 1) == tj + 1 or total == 1

    def test_column_cycle_invariance(self):
        rnd = random.Random(11)
        for _ in range(6):
            tj1, tj2 = rnd.randint(0, 4), rnd.randint(0, 4)
            choices = list(range(abs(tj1 - tj2), tj1 + tj2 + 1, 2))
            tj = rnd.choice(choices)
            tm1 = rnd.randrange(-tj1, tj1 + 1, 2) if tj1 else 0
            tm2 = rnd.randrange(-tj2, tj2 + 1, 2) if tj2 else 0
            tm = -(tm1 + tm2)
            if abs(tm) > tj:
                continue
            args = [(tj1, tm1), (tj2, tm2), (tj, tm)]
            vals = []
            for shift in range(3):
                cyc = args[shift:] + args[:shift]
                vals.append(threej(*(F(t, 2) for t, _ in cyc),
                                   *(F(t, 2) for _, t in cyc)))
            assert vals[0] == vals[1] == vals[2]


class TestSixJ:
    def test_all_zero_entries(self):
        assert sixj([0, 0, 0, 0, 0, 0]) == QuadraticSurd(F(1))

    def test_all_ones(self):
        assert sixj([1, 1, 1, 1, 1, 1]) == QuadraticSurd(F(1, 6))

    def test_rejects_non_triads(self):
        with pytest.raises(ValueError, match="not a triad"):
            sixj([1, 1, 3, 1, 1, 1])

    def test_matches_single_sum_oracle(self):
        count = 0
        for tjs in itertools.product(range(5), repeat=6):
            a, b, c, d, e, f = tjs
            if not (is_triad(F(a, 2), F(b, 2), F(c, 2))
                    and is_triad(F(a, 2), F(e, 2), F(f, 2))
                    and is_triad(F(d, 2), F(b, 2), F(f, 2))
                    and is_triad(F(d, 2), F(e, 2), F(c, 2))):
                continue
            mine = sixj([F(x, 2) for x in tjs])
            assert mine == racah_sixj([F(x, 2) for x in tjs]), tjs
            count += 1
        assert count == 570


class TestNineJArray:
    def test_rejects_bad_shapes_and_triads(self):
        with pytest.raises(ValueError, match="nine entries"):
            NineJArray([[1, 1], [1, 1]])
        with pytest.raises(ValueError, match="row 1"):
            NineJArray([[1, 1, 3], [1, 1, 1], [1, 1, 1]])
        with pytest.raises(ValueError, match="column 2"):
            NineJArray([[2, 2, 4], [2, 2, 4], [2, "3/2", "1/2"]])

    def test_str_and_equality(self):
        arr = _mk([[1, 1, 2], [1, 1, 2], [2, 2, 4]])
        assert str(arr) == "1/2 1/2 1; 1/2 1/2 1; 1 1 2"
        assert arr == _mk([[1, 1, 2], [1, 1, 2], [2, 2, 4]])
        assert arr.transpose().transpose() == arr


class TestNineJ:
    def test_all_zero_entries(self):
        arr = NineJArray([[0, 0, 0], [0, 0, 0], [0, 0, 0]])
        assert ninej_triple_sum(arr) == QuadraticSurd(F(1))
        assert ninej_operator(arr) == QuadraticSurd(F(1))

    def test_routes_agree(self):
        arrays = _arrays_upto(4)
        rnd = random.Random(17)
        for tw in rnd.sample(arrays, 150):
            arr = _mk(tw)
            assert ninej_operator(arr) == ninej_triple_sum(arr), tw

    def test_zero_corner_collapses_to_sixj(self):
        # {j1 j2 e; j3 j4 e; f f 0} against the 6-j of the residual couplings
        cnt = 0
        for tw in itertools.product(range(4), repeat=4):
            tj1, tj2, tj3, tj4 = tw
            for te in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2):
                if not is_triad(F(tj3, 2), F(tj4, 2), F(te, 2)):
                    continue
                for tf in range(abs(tj1 - tj3), tj1 + tj3 + 1, 2):
                    if not is_triad(F(tj2, 2), F(tj4, 2), F(tf, 2)):
                        continue
                    arr = _mk([(tj1, tj2, te), (tj3, tj4, te), (tf, tf, 0)])
                    sj = sixj([F(tj1, 2), F(tj2, 2), F(te, 2),
                               F(tj4, 2), F(tj3, 2), F(tf, 2)])
                    sgn = -1 if ((tj2 + tj3 + te + tf) // 2) % 2 else 1
                    rhs = sgn * (sqrt_rational(F(1, (te + 1) * (tf + 1))) * sj)
                    assert ninej_triple_sum(arr) == rhs, (tw, te, tf)
                    cnt += 1
        assert cnt == 270

    def test_transpose_and_permutation_signs(self):
        arrays = _arrays_upto(4)
        rnd = random.Random(23)
        for tw in rnd.sample(arrays, 60):
            arr = _mk(tw)
            v = ninej_triple_sum(arr)
            assert ninej_triple_sum(arr.transpose()) == v
            sg = -1 if (arr.entry_sum_twice() // 2) % 2 else 1
            assert ninej_triple_sum(arr.permute((1, 0, 2), (0, 1, 2))) == sg * v
            assert ninej_triple_sum(arr.permute((0, 1, 2), (0, 2, 1))) == sg * v
            assert ninej_triple_sum(arr.permute((1, 2, 0), (0, 1, 2))) == v

    def test_full_symmetry_check(self):
        assert ninej_symmetry_check(_mk([[2, 2, 2], [2, 2, 2], [2, 2, 2]]))
        assert ninej_symmetry_check(_mk([[1, 1, 2], [1, 1, 2], [2, 2, 2]]))
        assert ninej_symmetry_check(_mk([[2, 1, 3], [1, 2, 3], [3, 3, 4]]))

    def test_support_size_counts_terms(self):
        arr = _mk([[2, 2, 2], [2, 2, 2], [2, 2, 2]])
        assert ninej_support_size(arr) >= 2
        stretched = _mk([[2, 2, 4], [2, 2, 4], [4, 4, 8]])
        assert ninej_support_size(stretched) == 1


class TestKappaBridge:
    GRIDS = [(5, 3, 2), (5, 3, 3), (7, 5, 4), (8, 6, 5), (6, 6, 4)]

    def test_matches_triple_sum_route(self):
        for (m, n, r) in self.GRIDS:
            for p in pi_set(m, n, r):
                for i in range(r + 1):
                    for j in range(r - i + 1):
                        assert kappa_via_ninej(m, n, r, i, j, p) == \
                            kappa(m, n, r, i, j, p), (m, n, r, i, j, p)

    def test_rearranged_array_layout(self):
        for (m, n, r) in self.GRIDS:
            for (a, b) in pi_set(m, n, r):
                for i in range(r + 1):
                    for j in range(r - i + 1):
                        base, rearranged = kappa_ninej_arrays(m, n, r, i, j, (a, b))
                        expect = NineJArray([
                            [F(m + n, 2) - i, m + n - r, F(m + n, 2) - j],
                            [F(n, 2), n - 2 * b - 1, F(n, 2)],
                            [F(m, 2), m - 2 * a - 1, F(m, 2)],
                        ])
                        assert rearranged == expect
                        assert base.permute((0, 2, 1), (2, 1, 0)).transpose() == rearranged

    def test_inadmissible_inputs_rejected(self):
        with pytest.raises(ValueError, match="inadmissible"):
            kappa_via_ninej(5, 3, 4, 0, 0, (0, 0))
        with pytest.raises(ValueError, match="inadmissible"):
            kappa_via_ninej(5, 3, 3, 0, 3, (1, 1))

    def test_doubly_stretched_single_term(self):
        for (m, n, r) in self.GRIDS:
            _, rearranged = kappa_ninej_arrays(m, n, r, 0, r, (0, 0))
            assert ninej_support_size(rearranged) == 1
            assert kappa_via_ninej(m, n, r, 0, r, (0, 0)) != 0
