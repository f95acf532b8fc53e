import io

import numpy as np
import pytest

from rectdesign import algebra, binmat
from rectdesign.algebra import (
    DifferenceScheme,
    Group,
    MolsParseError,
    NotPrimePowerError,
    SchemeParseError,
    UnsupportedOrderError,
    gffield,
)


class TestPrimePowers:
    @pytest.mark.parametrize("q,p,e", [
        (2, 2, 1), (3, 3, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2),
        (27, 3, 3), (25, 5, 2), (1024, 2, 10),
    ])
    def test_factor(self, q, p, e):
        assert algebra.factor_prime_power(q) == (p, e)

    @pytest.mark.parametrize("q", [1, 6, 10, 12, 15, 100])
    def test_not_prime_power(self, q):
        assert not algebra.is_prime_power(q)


class TestFiniteField:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
    def test_field_axioms(self, q):
        f = gffield(q)
        els = range(q)
        for a in els:
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
        # sampled distributivity
        rng = np.random.default_rng(q)
        for _ in range(20):
            a, b, c = (int(x) for x in rng.integers(0, q, 3))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))

    def test_prime_field_is_modular(self):
        f = gffield(7)
        assert all(f.add(a, b) == (a + b) % 7 for a in range(7) for b in range(7))
        assert all(f.mul(a, b) == (a * b) % 7 for a in range(7) for b in range(7))

    def test_primitive_element_order(self):
        for q in (4, 9, 16):
            f = gffield(q)
            assert f.order(f.primitive) == q - 1

    def test_squares_count(self):
        # odd q: (q-1)/2 nonzero squares
        assert len(gffield(7).squares() - {0}) == 3
        assert len(gffield(9).squares() - {0}) == 4

    def test_rejects_non_prime_power(self):
        with pytest.raises(NotPrimePowerError):
            algebra.FiniteField(6)


class TestSkewHadamard:
    @pytest.mark.parametrize("t", [1, 2, 3, 5, 6])
    def test_identity_suite(self, t):
        """All four defining identities at every supported Paley order."""
        sh = algebra.skew_hadamard_design(t)
        assert sh.order == 4 * t - 1
        assert algebra.skew_hadamard_verify(sh) == []

    def test_t2_is_circulant(self):
        sh = algebra.skew_hadamard_design(2)
        assert sh.incidence == binmat.circulant([0, 1, 1, 0, 1, 0, 0])

    def test_gram_two_valued(self):
        sh = algebra.skew_hadamard_design(3)
        g = binmat.gram(sh.incidence).data
        assert g[0, 0] == 5 and g[0, 1] == 2  # (2t-1, t-1) at t = 3

    def test_unsupported_order(self):
        with pytest.raises(UnsupportedOrderError):
            algebra.skew_hadamard_design(4)  # 15 is not a prime power

    def test_load_verifies(self):
        sh = algebra.skew_hadamard_design(2)
        buf = io.StringIO()
        binmat.write_matrix(sh.incidence, buf)
        back = algebra.load_skew_hadamard(io.StringIO(buf.getvalue()), 2)
        assert back.incidence == sh.incidence

    def test_load_rejects_wrong_design(self):
        buf = io.StringIO()
        binmat.write_matrix(binmat.identity(7), buf)
        with pytest.raises(ValueError):
            algebra.load_skew_hadamard(io.StringIO(buf.getvalue()), 2)


class TestMols:
    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13, 16])
    def test_orthogonality_census(self, q):
        ms = algebra.mols(q)
        assert len(ms.squares) == q - 1
        assert algebra.mols_verify(ms) == []

    def test_first_rows_natural(self):
        for sq in algebra.mols(5).squares:
            assert sq[0] == (1, 2, 3, 4, 5)

    def test_round_trip(self):
        ms = algebra.mols(4)
        buf = io.StringIO()
        algebra.write_mols(ms, buf)
        back = algebra.read_mols(io.StringIO(buf.getvalue()))
        assert back.squares == ms.squares

    def test_parse_error(self):
        with pytest.raises(MolsParseError):
            algebra.read_mols(io.StringIO("MOLS x 2\n"))


class TestPaleySrg:
    @pytest.mark.parametrize("q", [5, 9, 13, 17])
    def test_quadratic_identity(self, q):
        g = algebra.paley_srg(q)
        assert (g.v, g.k) == (q, (q - 1) // 2)
        assert (g.lam, g.mu) == ((q - 5) // 4, (q - 1) // 4)
        assert algebra.srg_verify(g) == []

    def test_adjacency_symmetric(self):
        a = algebra.paley_srg(13).adjacency.data
        assert (a == a.T).all() and not a.diagonal().any()

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            algebra.paley_srg(7)  # 7 % 4 != 1

    def test_verify_catches_tampering(self):
        g = algebra.paley_srg(5)
        bad = algebra.SrgGraph(g.v, g.k, g.lam + 1, g.mu, g.adjacency)
        assert algebra.srg_verify(bad)


class TestDifferenceSchemes:
    @pytest.mark.parametrize("make", [
        lambda: algebra.ds_field(3),
        lambda: algebra.ds_field(4),
        lambda: algebra.ds_field(5),
        lambda: algebra.ds_sylvester(1),
        lambda: algebra.ds_sylvester(2),
        lambda: algebra.ds_sylvester(3),
        lambda: algebra.ds_compose(algebra.ds_sylvester(1), algebra.ds_sylvester(1)),
    ])
    def test_census(self, make):
        """Full column-difference census for every built-in scheme."""
        assert algebra.ds_verify(make()) == []

    def test_field_scheme_shape(self):
        d = algebra.ds_field(4)
        assert (d.m, d.s, d.x) == (4, 4, 1)
        assert d.group.kind == "ea"

    def test_sylvester_shape(self):
        d = algebra.ds_sylvester(3)
        assert (d.m, d.s, d.x) == (8, 2, 4)

    def test_normalization(self):
        for d in (algebra.ds_field(5), algebra.ds_sylvester(2)):
            assert all(e == 0 for e in d.entries[0])
            assert all(row[0] == 0 for row in d.entries)

    def test_search_finds_field_scheme(self):
        d = algebra.ds_search(3, 3, 1)
        assert d is not None and algebra.ds_verify(d) == []

    def test_search_finds_doubled_scheme(self):
        d = algebra.ds_search(4, 2, 2)
        assert d is not None and algebra.ds_verify(d) == []

    def test_search_exhausts_impossible(self):
        # x*s mismatch is rejected up front
        with pytest.raises(ValueError):
            algebra.ds_search(5, 2, 2)

    def test_search_result_is_lex_least(self):
        d = algebra.ds_search(2, 2, 1)
        assert d.entries == ((0, 0), (0, 1))

    def test_group_permutation(self):
        g = Group("cyclic", 3)
        p = algebra.group_permutation(1, g)  # maps x to x + 1
        assert p.data.tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
        total = sum(algebra.group_permutation(e, g).data for e in g.elements())
        assert (total == 1).all()

    def test_round_trip(self):
        d = algebra.ds_sylvester(2)
        buf = io.StringIO()
        algebra.write_scheme(d, buf)
        back = algebra.read_scheme(io.StringIO(buf.getvalue()))
        assert back.entries == d.entries and back.group == d.group

    def test_parse_rejects_bad_census(self):
        text = "DS 2 2 1 cyclic\n0 0\n0 0\n"
        with pytest.raises(SchemeParseError):
            algebra.read_scheme(io.StringIO(text))


def test_searched_scheme_10_5_2(ds_10_5_2):
    assert (ds_10_5_2.m, ds_10_5_2.s, ds_10_5_2.x) == (10, 5, 2)
    assert algebra.ds_verify(ds_10_5_2) == []


def test_searched_scheme_8_4_2_needs_ea_group(ds_8_4_2):
    assert ds_8_4_2.group == Group("ea", 4)
    assert algebra.ds_verify(ds_8_4_2) == []
