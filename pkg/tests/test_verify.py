import pytest

from glwedge.verify import BY_NAME, IDENTITIES, PARAMS, SweepConfig, report_json, report_text, run_sweep

SMALL = SweepConfig(k_max=1, r_max=2, max_weight=2, trunc=4)


def test_identity_names_unique_and_parametrized():
    assert len(BY_NAME) == len(IDENTITIES)
    for ident in IDENTITIES:
        names = PARAMS[ident.cases]
        for case in ident.cases(SMALL):
            assert len(case) == len(names), ident.name


def test_small_sweep_passes():
    report = run_sweep(SMALL)
    assert report["ok"], report_text(report)
    assert report["total_cases"] == sum(i["passed"] for i in report["identities"])


def test_injected_failure_is_named():
    report = run_sweep(SMALL, ["giambelli", "cauchy"], inject="giambelli")
    assert not report["ok"]
    by = {i["identity"]: i for i in report["identities"]}
    assert by["cauchy"]["failed"] == 0
    assert by["giambelli"]["passed"] == 0
    assert by["giambelli"]["failures"][0] == {"r": 1, "lambda": []}
    assert "FAIL giambelli" in report_text(report)


def test_parallel_matches_serial():
    names = ["first_version", "second_version", "vacuum_gamma"]
    assert report_json(run_sweep(SMALL, names, workers=2)) == report_json(run_sweep(SMALL, names))


def test_unknown_identity_rejected():
    with pytest.raises(KeyError):
        run_sweep(SMALL, ["no_such_identity"])
