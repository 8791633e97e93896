import json

import pytest

import permsieve


def test_registries():
    assert "st039" in permsieve.stat_keys()
    assert "corteel" in permsieve.map_keys()


def test_worked_example():
    s = permsieve.parse("1,7,6,3,8,10,9,12,2,11,4,5")
    assert permsieve.map_apply("corteel", s) == [1, 10, 12, 2, 7, 6, 9, 8, 5, 11, 4, 3]
    assert permsieve.stat_eval("st638", [5, 3, 1, 4, 2]) == 4


def test_gf_and_orbits():
    assert permsieve.stat_gf("st021", 3)["coeffs"] == [1, 4, 1]
    orbits = permsieve.map_orbits("lehmer_code_rotation", 4)
    assert orbits["signature"] == "12:2"
    assert orbits["fixed"][0] == 24


def test_verdict():
    v = permsieve.csp_check("st039", "corteel", 5)
    assert v["holds"]
    assert [row["fixed"] for row in v["table"]] == [120, 16]
    assert not permsieve.csp_check("st539", "reverse", 4)["holds"]
    assert permsieve.equidistributed("st039", "st223", 5)
    assert permsieve.q_minus_one("st494", 5) == 0


def test_scan_is_deterministic(tmp_path):
    kw = dict(n_min=3, n_max=5, stats=["st018", "st039"], maps=["rotation", "corteel"])
    cold = permsieve.scan(**kw, workers=1, cache_dir=str(tmp_path))
    warm = permsieve.scan(**kw, workers=2, cache_dir=str(tmp_path))
    assert cold == warm
    report = json.loads(cold)
    assert report["summary"]["pairs"] == 4


def test_errors():
    with pytest.raises(permsieve.PermsieveError):
        permsieve.parse("2231")
    with pytest.raises(ValueError):
        permsieve.stat_eval("no_such_stat", [1])


def test_criterion():
    ok, title, notes = permsieve.run_criterion(1)
    assert ok, notes
