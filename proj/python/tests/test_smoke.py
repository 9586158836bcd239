import json

import pytest

import rainbow


def test_patterns_and_counts():
    p4 = rainbow.Pattern.parse("P4")
    assert (p4.num_vertices, p4.num_edges) == (5, 4)
    assert rainbow.copy_count("C4", 4) == 3
    assert rainbow.copy_count(rainbow.path(2), 4) == 12
    assert rainbow.isomorphic(rainbow.Pattern.parse("K2,2"), rainbow.cycle(4))


def test_goodness_and_certificates():
    mono = rainbow.Family.monochromatic(8)
    report = rainbow.family_is_good(mono, "I4")
    assert not report["is_good"]
    valid, problems = rainbow.check_certificate(mono, report["witness"])
    assert valid and problems == []
    assert rainbow.family_is_good(rainbow.Family.injective(5), "P2")["is_good"]
    with pytest.raises(rainbow.ScaleGuardExceeded):
        rainbow.family_is_good(mono, "P2", max_copies=5)


def test_find_round_trip():
    family = rainbow.Family.uniform(800, 3, 9)
    out = rainbow.find(family, "C4")
    assert out["success"]
    cert = json.loads(out["certificate"])
    assert cert["pattern"]["name"] == "C4"
    assert rainbow.check_certificate(family, out["certificate"])[0]

    refused = rainbow.find(rainbow.Family.injective(24), "I4")
    assert not refused["success"]
    assert refused["observed"] < refused["required"]


def test_extractions():
    assert rainbow.matching_extract(rainbow.Family.monochromatic(9))["triple_count"] == 9
    assert rainbow.clique_extract(rainbow.Family.monochromatic(9))["pair_count"] == 315
    star = rainbow.star_extract(rainbow.Family.monochromatic(6))
    assert len(star["S"]) == 5 and star["triple_count"] == 0


def test_exact_and_generate():
    assert rainbow.compute_c(3, "P2")["value"] == 2
    good, witness = rainbow.decide_good_exists(3, "P2", 2)
    assert good and rainbow.family_is_good(witness, "P2")["is_good"]
    assert "p cnf 27" in rainbow.cnf(3, "P2", 2)

    built = rainbow.construct_good_family(6, "I2", 5)
    assert rainbow.family_is_good(built["family"], "I2")["is_good"]
    with pytest.raises(rainbow.BudgetExhausted):
        rainbow.generate("resampled-good", 6, 1, pattern="P2", budget=10)
    a = rainbow.generate("uniform", 10, 2, seed=42)
    assert a == rainbow.generate("uniform", 10, 2, seed=42)


def test_sweep_rows_in_grid_order():
    rows = rainbow.sweep(["S4", "C4"], [100], [3], [0, 1], threads=2)
    assert [(r["pattern"], r["seed"]) for r in rows] == [("S4", 0), ("S4", 1), ("C4", 0), ("C4", 1)]
    assert all(r["outcome"] in ("success", "refused") for r in rows)
