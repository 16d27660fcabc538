import pytest

import prym_verify as pv


def test_suite_names():
    assert pv.suite_names() == ["classes", "fano", "theta", "cubic", "quartic", "all"]


def test_classes_report_passes():
    report = pv.run_suite("classes")
    assert report["pass"] is True
    ids = {c["check_id"]: c for c in report["checks"]}
    assert ids["classes.prym6_pushforward_To6"]["computed"] == "10584*L - 1320*D"
    assert all(c["expected"] == c["computed"] for c in report["checks"])


def test_fano_numbers():
    report = pv.run_suite("fano")
    computed = {c["check_id"]: c["computed"] for c in report["checks"]}
    assert computed["fano.nodes"] == "1485"
    assert computed["fano.shared_nodes"] == "720"
    assert computed["fano.residual_nodes"] == "765"
    assert pv.node_budget() == 1485
    assert pv.adjunction_genus(24) == "1621"


def test_theta_counts():
    assert pv.count_parities(3) == (36, 28)
    report = pv.run_suite("theta", genus=2)
    assert report["pass"] is True


def test_fiber_relation():
    assert pv.fiber_relation("even") == "0"
    assert pv.fiber_relation("odd") == "4"
    assert pv.class_T(5, "odd").startswith("64*lambda")


def test_bitangents():
    assert pv.builtin_bitangent_count("fermat", 2) == (28, 12)


def test_cubic_samples_recorded():
    report = pv.run_suite("cubic", samples=5, seed=3)
    assert report["seed"] == 3
    assert len(report["samples"]["cubic.lambda"]) == 5
    assert report["pass"] is True


def test_deterministic_json():
    assert pv.run_suite_json("fano") == pv.run_suite_json("fano")


def test_usage_errors():
    with pytest.raises(ValueError):
        pv.run_suite("theta", genus=5)
    with pytest.raises(ValueError):
        pv.run_suite("nope")
    with pytest.raises(ValueError):
        pv.class_T(5, "neither")
