import pytest

from polymat import parse_ideal
from polymat.harness import SUITES, Run, budget_from_env, run_suite


def test_registry_descriptions():
    assert list(SUITES)[0] == "fixtures"
    assert all(s.description for s in SUITES.values())


@pytest.mark.parametrize("name, n, d", [("fixtures", None, None), ("poly2", 3, None), ("pc", 4, 3),
                                        ("akhar", 3, None), ("cap-prod", 3, 3)])
def test_small_suites_are_clean(name, n, d):
    r = run_suite(name, n=n, d=d)
    assert r.clean and r.population > 0 and r.failures == 0 and r.counterexamples == []


def test_rerun_is_deterministic():
    a, b = run_suite("remark-q", n=3, d=3, cases=50), run_suite("remark-q", n=3, d=3, cases=50)
    assert a.counts == b.counts and a.population == b.population == 50


def test_budget_exceeded():
    r = run_suite("poly2", n=4, budget=10)
    assert r.budget_exceeded and not r.clean and r.evaluations == 11


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_counterexamples_round_trip_through_parser():
    run = Run(100)
    I = parse_ideal("vars a,b\n(a^2, a*b)")
    assert not run.check(False, I, "example")
    assert run.failures == 1
    assert parse_ideal(run.counterexamples[0]["ideal"]) == I


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("POLYMAT_BUDGET", "123")
    assert budget_from_env() == 123
    monkeypatch.delenv("POLYMAT_BUDGET")
    assert budget_from_env(7) == 7


def test_report_json_shape():
    doc = run_suite("fixtures").to_json()
    assert doc["suite"] == "fixtures" and doc["population"] == 7 and doc["failures"] == 0
    assert set(doc["counts"]) >= {"exam-c2", "exam2"}
