"""
Tests for text and JSON rendering.
"""

import json
from fractions import Fraction

import pytest

from sasaki_links.errors import InvalidInputError
from sasaki_links.report import LINE, render_report, to_plain
from sasaki_links.sasaki_join import JoinSpec, join_report
from sasaki_links.search import SearchConfig, scan_eta_einstein
from sasaki_links.verification import CheckResult, Status


class TestToPlain:
    def test_values(self):
        assert to_plain(Fraction(-1, 30)) == "-1/30"
        assert to_plain(Status.WARN) == "WARN"
        assert to_plain((1, 2)) == [1, 2]
        assert to_plain(CheckResult(name="x", status=Status.PASS)) == {"name": "x", "status": "PASS", "detail": ""}

    def test_dataclass(self):
        pair = scan_eta_einstein(SearchConfig(bound=13, budget=1))[0]
        assert set(to_plain(pair)) == {"a", "b", "k", "l"}

    def test_unsupported(self):
        with pytest.raises(InvalidInputError):
            to_plain(object())


class TestJson:
    def test_canonical(self):
        report = {"b": True, "a": [Fraction(1, 2), None], "c": {"y": 1, "x": 2}}
        text = render_report(report, "json")
        assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text
        assert json.loads(text)["a"] == ["1/2", None]

    def test_empty(self):
        assert render_report([], "json") == "[]"

    def test_join_report(self, poincare, s3):
        text = render_report(join_report(JoinSpec(m1=poincare, m2=s3, k=1, l=2)), "json")
        data = json.loads(text)
        assert data["sasaki_einstein"] is True
        assert data["c1_coeff"] == 0


class TestText:
    def test_join_report(self, poincare, s3):
        text = render_report(join_report(JoinSpec(m1=poincare, m2=s3, k=1, l=2)), title="join")
        lines = text.splitlines()
        assert lines[0] == LINE
        assert "sasaki_einstein: true" in lines
        assert "eta_einstein: false" in lines
        assert "m1:" in lines
        assert "  name: L(2,3,5)" in lines

    def test_empty(self):
        assert "(no results)" in render_report([])

    def test_tuples_and_fractions(self):
        text = render_report({"w": [2, 4, 6, 11], "euler": Fraction(-1, 30), "fano_index": None})
        assert "w: (2,4,6,11)" in text
        assert "euler: -1/30" in text
        assert "fano_index: none" in text

    def test_rows(self):
        text = render_report([{"name": "x", "status": "PASS"}, [2, 3, 5]])
        assert "1. name=x, status=PASS" in text
        assert "2. (2,3,5)" in text

    def test_unknown_format(self):
        with pytest.raises(InvalidInputError):
            render_report({}, "xml")
