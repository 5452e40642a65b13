import json

import pytest

import fintopo as ft


@pytest.fixture
def s2():
    return ft.Space.from_json(
        json.dumps({"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]})
    )


@pytest.fixture
def d3():
    opens = [[], ["a"], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"]]
    return ft.Space.from_json(json.dumps({"points": ["a", "b", "c"], "opens": opens}))


def test_space_basics(s2):
    assert s2.n == 2
    assert s2.opens == [0, 1, 3]
    assert not s2.is_regular()
    assert s2.is_prime()
    assert s2.interior(2) == 0
    assert s2.closure(1) == 3


def test_space_validation_errors():
    with pytest.raises(ft.TopoError):
        ft.Space.from_opens(2, [0, 1, 2])


def test_preorder_roundtrip(s2):
    t = ft.space_from_preorder(2, [(1, 0)], ["a", "b"])
    assert t == s2
    assert set(ft.specialization_pairs(t)) == {(0, 0), (1, 1), (1, 0)}


def test_family_calculus(d3):
    f = ft.isotone_hull(d3, [0b001, 0b010])
    assert len(f) == 6
    assert ft.is_compact_family(f, "oracle")
    r = ft.restrict_to(f, 0b101)
    assert r == ft.isotone_hull(d3, [0b001])
    sec = ft.section_by(ft.isotone_hull(d3, [0b101]), 0b011)
    assert sec == ft.isotone_hull(d3, [0b001])
    assert not ft.meet_within(f, f, f)  # {a} ∩ {b} is empty and not a member


def test_collections_and_fixed_points(s2):
    kap = ft.kappa(s2)
    assert len(kap) == 4
    assert len(ft.k_collection(s2)) == 3
    assert ft.k_collection(s2) == ft.p_collection(s2)
    lam = ft.lambda_collection(s2)
    assert lam == kap
    assert ft.lambda_down_collection(s2) == kap
    assert ft.sigma_collection(s2) == kap
    assert ft.is_self_joinable(kap)
    assert ft.is_hereditary(kap)
    assert ft.is_sectionable(kap)
    assert ft.is_self_splittable(kap)


def test_split_modes(d3):
    top = ft.family_from_members(d3, 1 << 7)
    single = ft.collection_of(d3, [top.members])
    assert not ft.is_splittable_rel(top, single)
    assert not ft.is_splittable_rel(top, single, strict=True)


def test_classify_report(s2):
    report = json.loads(ft.classify_space(s2))
    assert report["consonant"]
    assert report["infraconsonant"]
    assert report["compactly_splittable"]
    assert report["inclusions_ok"]
    assert report["collection_sizes"]["kappa"] == 4


def test_hyperspace(s2):
    hk = ft.generate_topology(ft.k_collection(s2))
    hkap = ft.generate_topology(ft.kappa(s2))
    assert ft.compare_topologies(hk, hkap) == "equal"
    assert ft.meet_jointly_continuous(ft.kappa(s2))
    assert ft.function_space_matches_dual(s2, ft.kappa(s2))
    obs = ft.sierpinski_observer()
    assert len(ft.continuous_maps(s2, obs)) == 3


def test_measure(d3):
    mu = ft.Measure(d3, ["1", "2", "4"])
    assert mu.measure_of(0b110) == "6"
    rep = ft.verify_selfjoin(mu, 0b110, "5/2")
    assert rep["pass"] and rep["m"] == "17/4"
    rep = ft.verify_selfsplit(mu, 0b011, 0b110, "5")
    assert rep["pass"] and rep["d"] == "2" and rep["m1"] == "2" and rep["m2"] == "5"
    gamma = ft.measure_level_collection(mu)
    assert ft.is_self_joinable(gamma, hereditary=True)
    assert ft.is_self_splittable(gamma)
    with pytest.raises(ft.TopoError):
        ft.verify_selfjoin(mu, 0b001, "1")


def test_enumeration_and_battery(s2):
    assert len(ft.enumerate_spaces(2)) == 4
    assert len(ft.enumerate_spaces(3)) == 29
    assert ft.random_space(5, 42) == ft.random_space(5, 42)
    report = json.loads(ft.run_battery(s2))
    assert all(c["pass"] for c in report["claims"])


def test_search():
    spec = {"expression": "!compactly_splittable", "spaces": {"mode": "exhaustive", "n": 2}}
    result = json.loads(ft.search(json.dumps(spec)))
    assert result["hits"] == []
    assert result["instances_scanned"] == 4


def test_dot_export(s2):
    dot = ft.export_dot_lattice(s2)
    assert dot.startswith("digraph")
    incl = ft.export_dot_inclusion_diagram(s2)
    assert "lambda_down" in incl and "sigma" in incl
