"""
Tests for the command-line front end.
"""

import json

import pytest

from sasaki_links.cli import run
from tests.conftest import ROW2_POLY


def _json(capsys):
    return json.loads(capsys.readouterr().out)


class TestBrieskorn:
    def test_poincare_json(self, capsys):
        assert run(["brieskorn", "2", "3", "5", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["d"] == 30
        assert data["index"] == -1
        assert data["upsilon"] == 30
        assert data["type"] == "positive"
        assert data["euler"] == "-1/30"

    def test_json_is_canonical(self, capsys):
        run(["brieskorn", "2", "3", "7", "--format", "json"])
        out = capsys.readouterr().out
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out

    def test_too_few_exponents(self, capsys):
        assert run(["brieskorn", "2", "3"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Error" in captured.err


class TestLink:
    def test_table_row(self, capsys):
        assert run(["link", "--poly", ROW2_POLY]) == 0
        out = capsys.readouterr().out
        assert "w: (2,4,6,11)" in out
        assert "d: 24" in out
        assert "b2: 1" in out
        assert "index: 1" in out

    def test_json_input(self, tmp_path, capsys):
        path = tmp_path / "poly.json"
        path.write_text(json.dumps({"nvars": 3, "monomials": [[5, 0, 0], [0, 3, 0], [0, 0, 2]]}), encoding="utf-8")
        assert run(["link", "--json", str(path), "--format", "json"]) == 0
        assert _json(capsys)["w"] == [6, 10, 15]

    def test_not_weighted_homogeneous(self):
        assert run(["link", "--poly", "z0^2+z0^3"]) == 1

    def test_syntax_error(self):
        assert run(["link", "--poly", "z0^"]) == 1

    def test_missing_file(self, tmp_path):
        assert run(["link", "--json", str(tmp_path / "missing.json")]) == 1

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        assert run(["link", "--json", str(path)]) == 1


class TestJoin:
    def test_sasaki_einstein_plan(self, capsys):
        assert run(["join", "--m1-summary", "poincare", "--sphere", "1"]) == 0
        out = capsys.readouterr().out
        assert "sasaki_einstein: true" in out
        assert "k: 1" in out and "l: 2" in out

    def test_eta_einstein_plan(self, capsys):
        assert run(["join", "--a", "2", "3", "7", "--b", "5", "11", "13", "--format", "json"]) == 0
        data = _json(capsys)
        assert (data["k"], data["l"]) == (1, 452)
        assert data["smooth"] and data["eta_einstein"]

    def test_explicit_kl(self, capsys):
        assert run(["join", "--m1-summary", "poincare", "--n-summary", "S3", "--k", "2", "--l", "1"]) == 0
        assert "smooth: false" in capsys.readouterr().out

    def test_summary_file(self, tmp_path, capsys, second_series_9):
        path = tmp_path / "n.json"
        path.write_text(json.dumps(second_series_9.to_dict()), encoding="utf-8")
        assert run(["join", "--a", "5", "7", "11", "--n-summary", str(path), "--format", "json"]) == 0
        data = _json(capsys)
        assert (data["k"], data["l"]) == (218, 1)
        assert data["h2_rank"] == 9

    def test_n_poly(self, capsys):
        assert run(["join", "--a", "5", "7", "11", "--n-poly", "z0^4+z1^2+z2^9+z3^9", "--format", "json"]) == 0
        assert _json(capsys)["eta_einstein"] is True

    def test_n_poly_not_isolated(self):
        assert run(["join", "--a", "2", "3", "7", "--n-poly", "z0^2+z1^3+z2", "--k", "1", "--l", "1"]) == 1

    def test_half_kl(self):
        assert run(["join", "--m1-summary", "poincare", "--sphere", "1", "--k", "1"]) == 1

    def test_no_plan(self):
        assert run(["join", "--a", "2", "3", "7", "--b", "2", "5", "11"]) == 1


class TestSearch:
    def test_coprime(self, capsys):
        assert run(["search", "coprime", "--bound", "5", "--format", "json"]) == 0
        assert _json(capsys) == [[2, 3, 5], [3, 4, 5]]

    def test_coprime_budget(self, capsys):
        assert run(["search", "coprime", "--bound", "13", "--budget", "2", "--format", "json"]) == 0
        assert _json(capsys) == [[2, 3, 5], [2, 3, 7]]

    def test_empty(self, capsys):
        assert run(["search", "coprime", "--bound", "4"]) == 0
        assert "(no results)" in capsys.readouterr().out

    def test_joins(self, capsys):
        assert run(["search", "joins", "--m1-summary", "poincare", "--sphere", "1", "--kl-bound", "3",
                    "--format", "json"]) == 0
        assert _json(capsys) == [{"k": 1, "l": 1}, {"k": 1, "l": 2}, {"k": 1, "l": 3}]

    def test_gomez(self, capsys):
        assert run(["search", "gomez", "--series", "2", "--k", "11", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["b2"] == 10
        assert data["expected"]["index"] == 3

    def test_gomez_invalid_k(self):
        assert run(["search", "gomez", "--series", "2", "--k", "8"]) == 1

    def test_sporadic(self, capsys):
        assert run(["search", "sporadic"]) == 0
        assert "listed weights inconsistent; using inferred (3,6,6,8)" in capsys.readouterr().out

    def test_eta_einstein(self, capsys):
        assert run(["search", "eta-einstein", "--bound", "13", "--budget", "5", "--format", "json"]) == 0
        data = _json(capsys)
        assert len(data) == 5
        assert all(set(p) == {"a", "b", "k", "l"} for p in data)


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [[], ["brieskorn"], ["frobnicate"], ["brieskorn", "2", "x", "5"], ["search", "galaxy"],
         ["join", "--a", "2", "3", "5"]],
    )
    def test_usage_errors(self, argv):
        assert run(argv) == 2

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert run(["brieskorn", "2", "3", "5", "--format", "json", "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(out.read_text(encoding="utf-8"))["d"] == 30

    def test_logs_go_to_stderr(self, capsys):
        assert run(["brieskorn", "2", "3", "5", "-vv"]) == 0
        captured = capsys.readouterr()
        assert "Computed invariants of L(2,3,5)" in captured.err
        assert "Computed invariants" not in captured.out


class TestVerifyCommand:
    def test_passes(self, capsys):
        assert run(["verify-paper", "--format", "json"]) == 0
        rows = _json(capsys)
        assert {r["status"] for r in rows} <= {"PASS", "WARN"}
