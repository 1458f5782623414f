import json
import os

import pytest

import lieinv


def test_catalog_and_tables():
    alg = lieinv.catalog("g_{3,4}", {"a": "2"})
    assert alg.dim == 3
    assert alg.kind == "lie"
    psi = lieinv.invariant_function(alg, "psi")
    assert psi["generic"] == 3
    points = sorted((e["roots_display"], e["value"]) for e in psi["exceptional"])
    assert points == [("1", 4), ("1/2", 4), ("2", 4)]
    phi0 = lieinv.invariant_function(alg, "phi0")
    assert phi0["generic"] == 0
    assert {e["roots_display"]: e["value"] for e in phi0["exceptional"]} == {
        "2": 2,
        "3": 1,
        "3/2": 1,
    }


def test_validate_and_json_round_trip():
    alg = lieinv.catalog("j_{2,5}")
    assert lieinv.validate(alg)["valid"]
    back = lieinv.load(alg.to_json())
    assert back.dim == 2
    assert lieinv.invariant_function(back, "psi") == lieinv.invariant_function(alg, "psi")


def test_identify_published_input():
    data_dir = os.environ.get("LIEINV_DATA")
    with open(os.path.join(data_dir, "el1.json")) as f:
        alg = lieinv.load(f.read())
    result = lieinv.identify(alg)
    assert result["label"] == "g_{4,2}"
    assert result["case"] == "(g-11)"
    assert result["params"] == ["2"]


def test_contraction_decisions():
    g32 = lieinv.catalog("g_{3,2}")
    g33 = lieinv.catalog("g_{3,3}")
    assert lieinv.decide_contraction3(g32, g33)["decision"] == "Exists"
    assert lieinv.decide_contraction3(g33, g32)["decision"] == "Excluded"
    v = lieinv.contraction_criteria(lieinv.catalog("g_{4,7}"), lieinv.catalog("g_{4,2}(1)"))
    assert v["decision"] == "Excluded"
    assert v["phi0_leq"]["witness"]["point"] == "3/2"


def test_inv_tuple_and_change_basis():
    alg = lieinv.catalog("l_{17,9}")
    t = lieinv.inv_tuple(alg)
    assert t["text"] == "(8,4,0)(8,4,2,0)(2,5,8)  2  [16,19,9,11]"
    g32 = lieinv.catalog("g_{3,2}")
    moved = lieinv.change_basis(g32, [["1", "1", "0"], ["0", "1", "0"], ["0", "2", "1"]])
    assert lieinv.identify(moved)["label"] == "g_{3,2}"


def test_errors_are_typed():
    with pytest.raises(lieinv.LieInvError):
        lieinv.catalog("g_{4,2}", {"a": "-2"})
