"""Symmetric-group modules: tableaux, characters, couplings, and the
quadratic relation between projections of a tensor square."""

from fractions import Fraction as F
from itertools import permutations
from math import factorial, gcd

import pytest

from binform import seeding
from binform.symgroup import (
    ConjectureReport,
    RepMatrix,
    S5Report,
    _anchored,
    _coupling,
    _five_couplings,
    _kernel_basis,
    _module,
    character,
    check_shape,
    class_size,
    compose,
    cycle_perm,
    generator_matrices,
    hook_dimension,
    identity_perm,
    inverse_perm,
    multiplicity,
    partitions,
    perm_sign,
    projection_matrix,
    relation_residual_vanishes,
    rep_matrix,
    standard_tableaux,
    swap_perm,
    transposition_perm,
    verify_s5_syzygy,
)
from binform.symgroup import test_conjecture as conjecture_check

# the pinned degree-4 coupling matrix, rows = source basis pairs
P4 = ((1, -1, 2), (2, 1, 1), (-2, 1, 1), (-1, 2, -1), (-1, 2, 1), (1, 1, 2))

S5_COEFFS = (32, 100, 25, -180)


def _random_perm(rng, d):
    p = list(range(1, d + 1))
    rng.shuffle(p)
    return tuple(p)


class TestPartitions:
    def test_counts(self):
        assert [len(partitions(d)) for d in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]

    def test_shape_validity_and_order(self):
        for d in range(1, 8):
            parts = partitions(d)
            assert parts[0] == (d,)
            assert parts[-1] == (1,) * d
            for sh in parts:
                assert sum(sh) == d
                assert all(sh[k] >= sh[k + 1] for k in range(len(sh) - 1))

    def test_check_shape_rejects_bad_input(self):
        with pytest.raises(ValueError, match="not a partition"):
            check_shape((3, 0))
        with pytest.raises(ValueError, match="weakly decreasing"):
            check_shape((1, 2))

    def test_hook_dimension_examples(self):
        assert hook_dimension((5,)) == 1
        assert hook_dimension((1, 1, 1, 1)) == 1
        assert hook_dimension((3, 2)) == 5
        assert hook_dimension((4, 1)) == 4
        assert hook_dimension((2, 2)) == 2
        assert hook_dimension((3, 1, 1)) == 6

    def test_dimension_squares_sum_to_factorial(self):
        for d in range(1, 8):
            assert sum(hook_dimension(sh) ** 2 for sh in partitions(d)) == factorial(d)


class TestPermutations:
    def test_signs(self):
        assert perm_sign(identity_perm(5)) == 1
        assert perm_sign(transposition_perm(5)) == -1
        for d in range(2, 8):
            assert perm_sign(cycle_perm(d)) == (-1) ** (d - 1)

    def test_compose_and_inverse(self):
        rng = seeding.stream(61, "perm")
        for _ in range(20):
            d = rng.randint(2, 7)
            p, q = _random_perm(rng, d), _random_perm(rng, d)
            assert compose(p, inverse_perm(p)) == identity_perm(d)
            assert perm_sign(compose(p, q)) == perm_sign(p) * perm_sign(q)

    def test_swap_perm(self):
        assert swap_perm(2, 4, 5) == (1, 4, 3, 2, 5)
        assert perm_sign(swap_perm(1, 3, 4)) == -1


class TestStandardTableaux:
    def test_three_two_display_list(self):
        tabs = standard_tableaux((3, 2))
        assert [str(t) for t in tabs] == [
            "[1 2 3 / 4 5]",
            "[1 2 4 / 3 5]",
            "[1 2 5 / 3 4]",
            "[1 3 4 / 2 5]",
            "[1 3 5 / 2 4]",
        ]

    def test_counts_match_hook_formula(self):
        for d in range(1, 7):
            for sh in partitions(d):
                assert len(standard_tableaux(sh)) == hook_dimension(sh)

    def test_listed_by_row_reading_word(self):
        for sh in [(3, 2), (4, 1), (2, 2, 1), (3, 1, 1)]:
            words = [t.reading_word() for t in standard_tableaux(sh)]
            assert words == sorted(words)

    def test_rows_and_columns_increase(self):
        for t in standard_tableaux((3, 2, 1)):
            for row in t.rows:
                assert list(row) == sorted(row)
            for c in range(3):
                col = [row[c] for row in t.rows if len(row) > c]
                assert col == sorted(col)


class TestGeneratorMatrices:
    def test_full_row_shape_is_trivial(self):
        s, c = generator_matrices((6,))
        assert s.entries == ((1,),)
        assert c.entries == ((1,),)

    def test_single_column_is_sign(self):
        for d in range(2, 7):
            s, c = generator_matrices((1,) * d)
            assert s.entries == ((-1,),)
            assert c.entries == (((-1) ** (d - 1),),)

    def test_transposition_trace_matches_character(self):
        for d in range(2, 8):
            ct = (2,) + (1,) * (d - 2)
            for sh in partitions(d):
                s, _ = generator_matrices(sh)
                assert len(s.entries) == hook_dimension(sh)
                assert sum(s.entries[i][i] for i in range(len(s.entries))) == \
                    character(sh, ct)

    def test_character_rows_orthogonal(self):
        for d in range(2, 7):
            shapes = partitions(d)
            for a in shapes:
                assert character(a, (1,) * d) == hook_dimension(a)
                for b in shapes:
                    inner = sum(class_size(ct) * character(a, ct) * character(b, ct)
                                for ct in shapes)
                    assert inner == (factorial(d) if a == b else 0)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError, match="does not match"):
            rep_matrix((3, 1), (1, 2, 3))


class TestMultiplicity:
    def test_pinned_values(self):
        assert multiplicity((3, 2), (3, 2), (4, 1)) == 1
        assert multiplicity((3, 1), (2, 2), (2, 1, 1)) == 1
        assert multiplicity((3, 1, 1), (3, 1, 1), (4, 1)) == 1
        assert multiplicity((3, 2), (3, 1, 1), (3, 1, 1)) == 2
        assert multiplicity((5,), (5,), (4, 1)) == 0

    def test_full_row_component_detects_equality(self):
        for a in partitions(5):
            for b in partitions(5):
                assert multiplicity(a, b, (5,)) == (1 if a == b else 0)

    def test_totally_symmetric(self):
        rng = seeding.stream(67, "mult")
        for _ in range(20):
            d = rng.randint(2, 7)
            parts = partitions(d)
            l, m, n = (parts[rng.randrange(len(parts))] for _ in range(3))
            vals = {multiplicity(*trip) for trip in permutations((l, m, n))}
            assert len(vals) == 1

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError, match="partitions of different integers"):
            multiplicity((3, 1), (2, 2), (3, 2))


def _nullspace_coupling(lam, mu, nu):
    """Oracle: solve the intertwining equations directly as one dense
    nullspace problem over the unknown matrix entries."""
    lmod, mmod, nmod = _module(lam), _module(mu), _module(nu)
    d = sum(nu)
    dl, dm, dn = lmod.dim, mmod.dim, nmod.dim
    nunk = dl * dm * dn
    rows = []
    for g in (transposition_perm(d), cycle_perm(d)):
        ql, qm, qn = lmod.matrix(g), mmod.matrix(g), nmod.matrix(g)
        for il in range(dl):
            for im in range(dm):
                for k in range(dn):
                    row = [0] * nunk
                    for jl in range(dl):
                        for jm in range(dm):
                            row[(jl * dm + jm) * dn + k] += ql[il][jl] * qm[im][jm]
                    for t in range(dn):
                        row[(il * dm + im) * dn + t] -= qn[t][k]
                    rows.append(row)
    kernel = _kernel_basis(rows, nunk)
    assert len(kernel) == 1
    vec = kernel[0]
    den = 1
    for v in vec:
        den = den * v.denominator
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(tuple(ints[p * dn + k] for k in range(dn)) for p in range(dl * dm))


class TestProjectionMatrix:
    def test_degree_four_pin(self):
        M = projection_matrix((3, 1), (2, 2), (2, 1, 1))
        assert M.entries == P4
        assert M.entries[2] == (-2, 1, 1)
        assert M.shape == (2, 1, 1)

    def test_first_nonzero_entry_positive_and_primitive(self):
        for trip in [((4, 1), (4, 1), (3, 2)), ((4, 1), (3, 2), (4, 1))]:
            M = projection_matrix(*trip).entries
            flat = [v for row in M for v in row]
            assert next(v for v in flat if v) > 0
            g = 0
            for v in flat:
                g = gcd(g, v)
            assert g == 1

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(ValueError, match="projection not unique"):
            projection_matrix((5,), (5,), (4, 1))

    def test_higher_multiplicity_rejected(self):
        with pytest.raises(ValueError, match="projection not unique"):
            projection_matrix((3, 2), (3, 1, 1), (3, 1, 1))

    def test_equivariance_on_random_words(self):
        rng = seeding.stream(71, "equivariance")
        for lam, mu, nu in [((3, 1), (2, 2), (2, 1, 1)), ((4, 1), (3, 2), (4, 1))]:
            M = projection_matrix(lam, mu, nu).entries
            lmod, mmod, nmod = _module(lam), _module(mu), _module(nu)
            d = sum(nu)
            dl, dm, dn = lmod.dim, mmod.dim, nmod.dim
            for _ in range(10):
                g = _random_perm(rng, d)
                ql, qm, qn = lmod.matrix(g), mmod.matrix(g), nmod.matrix(g)
                for il in range(dl):
                    for im in range(dm):
                        for k in range(dn):
                            lhs = sum(ql[il][jl] * qm[im][jm] * M[jl * dm + jm][k]
                                      for jl in range(dl) for jm in range(dm))
                            rhs = sum(M[il * dm + im][t] * qn[t][k]
                                      for t in range(dn))
                            assert lhs == rhs

    def test_matches_dense_nullspace_solver(self):
        for trip in [((3, 1), (2, 2), (2, 1, 1)),
                     ((4, 1), (4, 1), (4, 1)),
                     ((4, 1), (4, 1), (3, 2)),
                     ((4, 1), (3, 2), (4, 1)),
                     ((3, 2), (3, 2), (4, 1))]:
            assert projection_matrix(*trip).entries == _nullspace_coupling(*trip)

    def test_invariant_pairing_spans_group_average(self):
        # the coupling onto the full-row shape is the invariant pairing; its
        # line must agree with the image of averaging Q(g) x Q(g) over the
        # whole group
        for sh in [(2, 1), (3, 1), (2, 2), (2, 1, 1)]:
            d = sum(sh)
            mod = _module(sh)
            n = mod.dim
            vec = [row[0] for row in projection_matrix(sh, sh, (d,)).entries]
            total = [[0] * (n * n) for _ in range(n * n)]
            for p in permutations(range(1, d + 1)):
                q = mod.matrix(tuple(p))
                for i1 in range(n):
                    for i2 in range(n):
                        for j1 in range(n):
                            for j2 in range(n):
                                total[i1 * n + i2][j1 * n + j2] += \
                                    q[i1][j1] * q[i2][j2]
            col = next(c for c in zip(*total) if any(c))
            for i in range(n * n):
                for j in range(n * n):
                    assert col[i] * vec[j] == col[j] * vec[i]


class TestS5Relation:
    def test_report(self):
        rep = verify_s5_syzygy()
        assert isinstance(rep, S5Report)
        assert rep.passed
        assert rep.coefficients == S5_COEFFS
        assert rep.scale == F(1)
        assert rep.matched_scaling == "anchored+transition"
        assert rep.transition == "negate standard-module basis vector 2"
        assert rep.standard_signs == (1, -1, 1, 1)
        assert rep.two_row_signs == (1, 1, 1, 1, 1)
        assert rep.kernel_dimension == 1
        assert rep.basis_pairs == 16
        assert rep.identity_exact
        assert rep.perturbation_breaks

    def test_multiplicities_and_trivial_component(self):
        rep = verify_s5_syzygy()
        assert rep.coupling_multiplicity == 1
        assert rep.wedge_multiplicity == 1
        assert rep.trivial_dimension == 1

    def test_anchor_values_in_canonical_scaling(self):
        rep = verify_s5_syzygy()
        assert rep.raw_anchor_values == (3, 2, 2, 2, 2)
        assert rep.raw_coefficients == (32, 100, -25, -180)
        assert rep.anchored_coefficients == (32, -100, 25, -180)

    def test_relation_holds_identically(self):
        assert relation_residual_vanishes(5, S5_COEFFS)
        assert relation_residual_vanishes(5, tuple(2 * c for c in S5_COEFFS))

    def test_perturbed_leading_coefficient_breaks(self):
        assert not relation_residual_vanishes(5, (33, 100, 25, -180))

    def test_other_perturbations_break(self):
        assert not relation_residual_vanishes(5, (32, 100, 26, -180))
        assert not relation_residual_vanishes(5, (32, 100, 25, -181))

    def test_anchor_mismatch_reported(self):
        maps = list(_five_couplings(5))
        broken = [list(row) for row in maps[1]]
        broken[0][1] = 0
        maps[1] = broken
        with pytest.raises(ValueError, match="normalization anchor mismatch") as err:
            _anchored(tuple(maps))
        assert "standard*standard->two-row" in str(err.value)
        assert "expected 2" in str(err.value)


class TestConjecture:
    def test_degree_six(self):
        rep = conjecture_check(6)
        assert isinstance(rep, ConjectureReport)
        assert rep.passed
        assert rep.coupling_multiplicity == 1
        assert rep.wedge_multiplicity == 1
        assert rep.kernel_dimension == 1
        assert rep.c4_nonzero
        assert rep.scaling == "raw"
        assert rep.coefficients == (25, 60, -12, -240)
        assert relation_residual_vanishes(6, rep.coefficients)

    def test_degree_seven(self):
        rep = conjecture_check(7)
        assert rep.passed
        assert rep.coupling_multiplicity == 1
        assert rep.wedge_multiplicity == 1
        assert rep.kernel_dimension == 1
        assert rep.c4_nonzero
        assert rep.coefficients == (432, 882, -49, -6300)
        assert relation_residual_vanishes(7, rep.coefficients)

    def test_degree_five_runs_same_path(self):
        rep = conjecture_check(5)
        assert rep.passed
        assert rep.coefficients == S5_COEFFS
        assert rep.scaling == "anchored+transition"

    def test_perturbed_vectors_rejected(self):
        assert not relation_residual_vanishes(6, (26, 60, -12, -240))
        assert not relation_residual_vanishes(7, (432, 882, -49, -6301))

    def test_rejects_other_degrees(self):
        with pytest.raises(ValueError, match="degree must be 5, 6, or 7"):
            conjecture_check(4)
        with pytest.raises(ValueError, match="degree must be 5, 6, or 7"):
            conjecture_check(8)
