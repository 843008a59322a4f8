"""
Tests for the built-in reference data.
"""

import pytest

from sasaki_links.config import SPORADIC_TABLE
from sasaki_links.data_store import get_builtin_summary, list_fixture_rows


class TestFixtureRows:
    def test_rows(self):
        rows = list_fixture_rows()
        assert len(rows) == 5
        assert rows[1] == {"b2": 1, "w": (2, 4, 6, 11), "poly": "z0^12+z1^6+z2^4+z3^2*z0"}

    def test_returns_copies(self):
        rows = list_fixture_rows()
        rows[0]["b2"] = 99
        assert SPORADIC_TABLE[0]["b2"] == 0


class TestBuiltinSummaries:
    @pytest.mark.parametrize("name", ["poincare", "Poincare", " L(2,3,5) "])
    def test_poincare(self, name):
        s = get_builtin_summary(name)
        assert s.is_poincare
        assert s.upsilon == 30

    @pytest.mark.parametrize("name,dim", [("S3", 3), ("s^5", 5), ("S^7", 7)])
    def test_spheres(self, name, dim):
        s = get_builtin_summary(name)
        assert s.dim == dim
        assert s.index == -(dim + 1) // 2
        assert s.is_simply_connected

    @pytest.mark.parametrize("name", ["S4", "S1", "torus", ""])
    def test_unknown(self, name):
        assert get_builtin_summary(name) is None
