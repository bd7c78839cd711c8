import json

import pytest

import cag


def test_graph_roundtrip():
    g = cag.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert cag.from_graph6(g.graph6()) == g
    with pytest.raises(Exception):
        cag.Graph(2, [(0, 2)])


def test_chordality_and_holes():
    c5 = cag.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert not cag.is_chordal(c5)
    assert len(cag.find_hole(c5)) == 5
    assert cag.is_chordal(cag.net())


def test_flip_of_path_end_is_complete():
    p4 = cag.Graph(4, [(0, 1), (1, 2), (2, 3)])
    f = cag.flip(p4, 0)
    assert len(f.result.edges()) == 6
    assert f.inside == [0, 1]


def test_sun_star_is_not_circular_arc():
    sun_star = cag.otimes([2, 1])["graph"]
    flip_v = cag.is_ca_via_flip(sun_star)
    fam_v = cag.is_ca_via_families(sun_star)
    assert flip_v["ca"] is False and fam_v["ca"] is False
    ok, why = cag.verify_certificate_json(sun_star, flip_v["certificate"])
    assert ok, why
    assert cag.ca_oracle(sun_star) is None


def test_net_is_ca_but_not_helly():
    assert cag.is_ca_via_families(cag.net())["ca"] is True
    assert cag.is_hca_chordal(cag.net())["ca"] is False
    assert cag.hca_oracle(cag.net()) is None
    model = cag.ca_oracle(cag.net())
    assert model is not None and cag.realizes(model, cag.net())


def test_family_listing():
    fam = cag.forbidden_family_upto(7)
    assert len(fam) == 6
    names = {m["family"] for m in fam}
    assert "long-claw" in names and "fig7e" in names


def test_deciders_match_oracle_on_small_corpus():
    for g in cag.enumerate_chordal(5):
        oracle = cag.ca_oracle(g) is not None
        assert cag.is_ca_via_flip(g)["ca"] == oracle
        assert cag.is_ca_via_families(g)["ca"] == oracle


def test_arc_model_fixtures():
    b = cag.fig1b_model()
    assert cag.is_helly(b)[0]
    flipped = cag.flip_arcs(b, [1, 3, 5])
    assert cag.is_isomorphic(cag.intersection_graph(flipped), cag.net()) is not None
    c = cag.fig1c_model()
    helly, clique = cag.is_helly(c)
    assert not helly and clique == [1, 3, 5]


def test_otimes_models():
    spec = [1, 1, 1, 3]
    g = cag.otimes(spec)["graph"]
    assert g.n == cag.otimes_order(spec) == 11
    m = cag.model_otimes_minus(spec, 0)
    assert cag.realizes(m, cag.remove_vertex(g, 0))
    assert cag.is_helly(m)[0]
    assert cag.otimes_normalize([3, 4, 1, 2]) == [1, 2, 3, 4]


def test_certificate_json_shape():
    verdict = cag.is_ca_via_families(cag.net_star())
    cert = cag.certificate(verdict)
    assert cert["kind"] == "induced-copy"
    assert cert["family"] == "fig7a"


def test_region_and_configuration():
    assert cag.classify_region(cag.long_claw()) == 4
    hit = cag.has_forbidden_configuration(cag.otimes([1, 1, 1, 3])["graph"], 0)
    assert hit["family"] == "hole"
