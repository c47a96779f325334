from fractions import Fraction

import jsonschema
import pytest

from unicolor import Report, hgr
from unicolor import verify
from unicolor.coloring import Uniqueness
from unicolor.report import REPORT_SCHEMA
from unicolor.verify import (
    replay,
    verify_boundary,
    verify_construction,
    verify_corollary_construction,
    verify_ffk,
    verify_main_theorem,
    verify_phi331,
    verify_sunflower_fact,
)


class TestConstruction:
    def test_three_uniform(self):
        report = verify_construction(3, 3, 1, 2)
        assert report.verdict == "PASS"
        assert (report.measured["n"], report.measured["delta"]) == (10, 2)
        assert report.measured["ratio"] == Fraction(1, 5)
        assert report.measured["ffk_checks"] == 2

    def test_large_branch(self):
        report = verify_construction(4, 3, 3, 1)
        assert report.verdict == "PASS"
        assert (report.measured["n"], report.measured["delta"]) == (10, 4)
        assert report.measured["ratio"] == Fraction(2, 5)

    @pytest.mark.parametrize("alpha", [2, "3/2"])
    def test_other_alphas_rejected(self, alpha):
        with pytest.raises(ValueError):
            verify_construction(3, 3, alpha, 1)


class TestBoundary:
    def test_three_uniform(self):
        report = verify_boundary(3, 3, 1)
        assert report.verdict == "PASS"
        assert report.measured["delta"] == 1 and report.measured["threshold_times_n"] == 1

    def test_six_uniform(self):
        report = verify_boundary(8, 6, 1)
        assert report.verdict == "PASS"
        assert report.measured["binding_alpha"] == 3
        assert (report.measured["delta"], report.measured["n"]) == (7, 22)
        assert report.measured["other_alpha"] == 1
        assert report.measured["other_ratio"] == Fraction(3, 10)

    def test_graph_case(self):
        report = verify_boundary(2, 2, 3)
        assert report.verdict == "PASS"
        assert (report.measured["delta"], report.measured["n"]) == (3, 12)


class TestUniquenessHarness:
    def test_exhaustive_bipartite(self):
        report = verify_main_theorem(2, 2, 7, None)
        assert report.verdict == "PASS"
        assert report.measured["instances"] == report.measured["uniquely_colorable"] > 0

    def test_sampled(self):
        report = verify_main_theorem(3, 3, 8, 60, seed=42)
        assert report.verdict == "PASS"
        assert report.measured["instances"] == report.measured["uniquely_colorable"] == 60

    def test_zero_instances_skipped(self):
        assert verify_main_theorem(3, 3, 2, 10, seed=1).verdict == "SKIPPED"
        assert verify_main_theorem(2, 2, 1, None).verdict == "SKIPPED"

    def test_needs_seed(self):
        with pytest.raises(ValueError):
            verify_main_theorem(3, 3, 8, 10)

    def test_exhaustive_refuses_big_hosts(self):
        with pytest.raises(ValueError):
            verify_main_theorem(2, 2, 9, None)

    def test_failure_carries_counterexample(self, monkeypatch):
        monkeypatch.setattr(verify, "uniqueness_status", lambda H, k: Uniqueness.NOT_UNIQUE)
        report = verify_main_theorem(3, 3, 6, 3, seed=5)
        assert report.verdict == "FAIL"
        assert report.failures
        assert hgr.loads(report.counterexample).r == 3


class TestOtherHarnesses:
    def test_phi331(self):
        report = verify_phi331(3, 40, 9, 3)
        assert report.verdict == "PASS"
        extremal = report.measured["extremal"]
        assert [row["delta"] for row in extremal] == [2, 8, 18]
        assert all(row["delta"] == row["n2_over_18"] for row in extremal)
        assert all(row["classes"] == 2 for row in extremal)
        assert report.measured["instances"] == 40

    def test_sunflower(self):
        report = verify_sunflower_fact(4, 9)
        assert report.verdict == "PASS"
        assert report.measured["instances"] == 8 + 7 + 6

    def test_sunflower_up_to_seven(self):
        report = verify_sunflower_fact(3, 7)
        assert report.verdict == "PASS"

    @pytest.mark.parametrize(
        "k,r,i,m,delta",
        [(4, 3, 1, 2, 12), (3, 3, 1, 1, 1), (3, 3, 2, 1, 1)],
    )
    def test_alpha_one_degree_identity(self, k, r, i, m, delta):
        report = verify_corollary_construction(k, r, i, m)
        assert report.verdict == "PASS"
        assert report.measured["delta"] == delta

    def test_ffk(self):
        report = verify_ffk(200, 9)
        assert report.verdict == "PASS"
        assert report.measured["equality_cases"] == sum(r - 1 for k in range(2, 6) for r in range(2, k + 1))


class TestReports:
    @pytest.mark.parametrize(
        "make",
        [
            lambda: verify_construction(3, 3, 3, 1),
            lambda: verify_boundary(4, 3, 1),
            lambda: verify_main_theorem(3, 3, 7, 25, seed=8),
            lambda: verify_main_theorem(2, 2, 5, None),
            lambda: verify_phi331(2, 10, 8, 1),
            lambda: verify_sunflower_fact(3, 6),
            lambda: verify_corollary_construction(4, 4, 2, 1),
            lambda: verify_ffk(50, 2),
        ],
    )
    def test_json_round_trip_and_replay(self, make):
        report = make()
        data = report.to_dict()
        jsonschema.validate(data, REPORT_SCHEMA)
        back = Report.from_json(report.to_json())
        assert back == report
        again = replay(back)
        assert again.to_dict() == data

    def test_same_seed_same_report(self):
        a = verify_main_theorem(3, 3, 8, 5, seed=1)
        b = verify_main_theorem(3, 3, 8, 5, seed=1)
        assert a == b

    def test_unknown_verdict(self):
        with pytest.raises(ValueError):
            Report("x", verdict="MAYBE")

    def test_fraction_strings(self):
        data = verify_construction(3, 3, 1, 1).to_dict()
        assert data["measured"]["ratio"] == "1/5"
        assert data["params"]["alpha"] == "1/1"
