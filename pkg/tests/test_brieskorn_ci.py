"""
Tests for Brieskorn complete-intersection links.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sasaki_links.brieskorn_ci import (
    base_orbifold_order,
    build_link,
    canonical_index,
    is_homology_sphere,
    link_order,
    link_report,
    link_summary,
    orbifold_c1,
    riemann_hurwitz_order,
    sasaki_type,
    seifert_data,
)
from sasaki_links.errors import EuclideanOrbifoldError, InvalidInputError, NullTypeError
from sasaki_links.exact_core import pairwise_coprime, product
from sasaki_links.search import SearchConfig, enum_pairwise_coprime
from sasaki_links.summary import SasakiType

coprime_triples = st.tuples(
    st.integers(2, 30), st.integers(2, 30), st.integers(2, 30)
).filter(pairwise_coprime)


class TestBuildLink:
    def test_poincare(self):
        link = build_link((5, 3, 2))
        assert link.a == (2, 3, 5)
        assert link.w == (15, 10, 6)
        assert link.d == 30
        assert link.d_total == 30
        assert link.w_total == 31
        assert link.is_poincare
        assert link.name == "L(2,3,5)"

    def test_quadruple(self):
        link = build_link((2, 3, 5, 7))
        assert link.num_equations == 2
        assert link.d_total == 2 * 210

    @pytest.mark.parametrize("a", [(2, 3), (2, 0, 3), (2, -3, 5)])
    def test_invalid(self, a):
        with pytest.raises(InvalidInputError):
            build_link(a)


class TestHomologySphere:
    @pytest.mark.parametrize(
        "a,expected",
        [((2, 3, 5), True), ((2, 3, 7), True), ((2, 4, 5), False), ((6, 10, 15), False)],
    )
    def test_pairwise_coprime_rule(self, a, expected):
        assert is_homology_sphere(a) is expected

    def test_too_few(self):
        with pytest.raises(InvalidInputError):
            is_homology_sphere((2, 3))


class TestSeifertData:
    def test_poincare(self):
        data = seifert_data(build_link((2, 3, 5)))
        assert [c.alpha for c in data.cones] == [2, 3, 5]
        assert [c.multiplicity for c in data.cones] == [1, 1, 1]
        assert data.genus == 0
        assert data.euler == Fraction(-1, 30)

    def test_non_homology_sphere(self):
        data = seifert_data(build_link((6, 10, 15)))
        assert data.genus == 11
        assert data.euler == -1
        assert [c.multiplicity for c in data.cones] == [5, 3, 2]

    def test_all_twos(self):
        data = seifert_data(build_link((2, 2, 2)))
        assert data.genus == 0
        assert data.euler == -2
        assert [c.alpha for c in data.cones] == [1, 1, 1]

    @settings(max_examples=60, deadline=None)
    @given(coprime_triples)
    def test_beta_weights_sum_to_one(self, a):
        link = build_link(a)
        data = seifert_data(link)
        assert sum(c.beta * w for c, w in zip(data.cones, link.w)) == 1
        assert link_order(link) == product(a)

    @settings(max_examples=60, deadline=None)
    @given(st.tuples(st.integers(2, 30), st.integers(2, 30), st.integers(2, 30)))
    def test_cone_terms_sum_to_minus_euler(self, a):
        data = seifert_data(build_link(a))
        assert sum(c.multiplicity * c.beta / c.alpha for c in data.cones) == -data.euler


class TestIndexAndType:
    def test_canonical_index(self):
        assert canonical_index(build_link((2, 3, 5))) == -1
        assert canonical_index(build_link((2, 3, 7))) == 1
        assert canonical_index(build_link((5, 11, 13))) == 452

    @pytest.mark.parametrize(
        "a,expected",
        [
            ((1, 2, 3), SasakiType.STANDARD_SPHERE),
            ((2, 3, 5), SasakiType.POSITIVE),
            ((2, 3, 7), SasakiType.NEGATIVE),
            ((2, 2, 2), SasakiType.POSITIVE),
            ((6, 10, 15), SasakiType.NEGATIVE),
        ],
    )
    def test_sasaki_type(self, a, expected):
        assert sasaki_type(build_link(a)) is expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_negative_except_poincare(self, n):
        for a in enum_pairwise_coprime(SearchConfig(bound=30, n=n)):
            expected = SasakiType.POSITIVE if a == (2, 3, 5) else SasakiType.NEGATIVE
            assert sasaki_type(build_link(a)) is expected, a

    @pytest.mark.parametrize("a", [(3, 3, 3), (2, 4, 4)])
    def test_null_type(self, a):
        with pytest.raises(NullTypeError):
            sasaki_type(build_link(a))

    def test_orbifold_c1(self):
        assert orbifold_c1(build_link((2, 3, 5))) == Fraction(1, 30)
        assert orbifold_c1(build_link((2, 3, 7))) < 0


class TestRiemannHurwitz:
    @pytest.mark.parametrize(
        "orders,genus,expected",
        [((2, 3, 5), 0, 60), ((2, 3, 4), 0, 24), ((2, 3, 3), 0, 12), ((2, 2), 0, 2), ((2, 3, 7), 0, -84)],
    )
    def test_orders(self, orders, genus, expected):
        assert riemann_hurwitz_order(orders, genus) == expected

    @pytest.mark.parametrize("orders", [(2, 3, 6), (2, 2, 2, 2), (3, 3, 3)])
    def test_euclidean(self, orders):
        with pytest.raises(EuclideanOrbifoldError):
            riemann_hurwitz_order(orders)

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            riemann_hurwitz_order((1, 2))
        with pytest.raises(InvalidInputError):
            riemann_hurwitz_order((2, 3), genus=-1)

    def test_base_orbifold_of_poincare(self):
        assert base_orbifold_order(build_link((2, 3, 5))) == 60


class TestSummaryAndReport:
    def test_poincare_summary(self):
        s = link_summary(build_link((2, 3, 5)))
        assert s.is_poincare and s.is_positive and s.einstein_base
        assert (s.upsilon, s.index, s.d_total, s.b2) == (30, -1, 30, 0)
        assert not s.is_simply_connected

    def test_standard_sphere(self):
        s = link_summary(build_link((1, 2, 3)))
        assert s.is_positive and s.is_simply_connected and s.is_homology_sphere

    def test_non_homology_sphere(self):
        s = link_summary(build_link((6, 10, 15)))
        assert s.d_total == 0
        assert s.b2 == 22
        assert s.is_negative

    def test_report(self):
        report = link_report(build_link((2, 3, 5)))
        assert report["d"] == 30
        assert report["index"] == -1
        assert report["fano_index"] == 1
        assert report["upsilon"] == 30
        assert report["type"] == "positive"
        assert report["sum_beta_w"] == 1
        assert report["gcd_d_index"] == 1

    def test_report_null_type(self):
        report = link_report(build_link((3, 3, 3)))
        assert report["type"] == "null"
