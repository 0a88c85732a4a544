import json

import pytest

import artintcp

EDGE3 = json.dumps({"vertices": ["s", "t"], "edges": [["s", "t", 3]]})
TRIANGLE3 = json.dumps(
    {
        "vertices": ["a", "b", "c"],
        "edges": [["a", "b", 3], ["b", "c", 3], ["a", "c", 3]],
    }
)
TRIANGLE6 = TRIANGLE3.replace("3]", "6]")


def test_group_construction_and_flags():
    g = artintcp.Group(TRIANGLE6)
    assert g.generators == ["a", "b", "c"]
    flags = g.type_flags()
    assert flags["xxxl"] and flags["free_of_infinity"]
    assert not flags["even_edge"]
    with pytest.raises(artintcp.GroupError):
        artintcp.Group('{"vertices":["s","t"],"edges":[["s","t",1]]}')


def test_eligibility_routes():
    assert artintcp.Group(TRIANGLE6).eligibility()["route"] == "XXXL-route"
    assert artintcp.Group(TRIANGLE3).eligibility()["route"] == "hierarchy-route"
    edge = artintcp.Group(EDGE3)
    assert edge.eligibility()["route"] == "ineligible"
    assert edge.eligibility(assume_out_generated=True)["route"] == "assumed"


def test_word_problem():
    g = artintcp.Group(EDGE3)
    assert g.equal_words("s t s", "t s t")["result"] == "equal"
    assert g.equal_words("s s", "t t")["result"] == "not_equal"
    assert g.dihedral_normal_form("s t s") == g.dihedral_normal_form("t s t")
    assert g.coxeter_trivial("s s")
    assert not g.coxeter_trivial("s t")
    assert g.abelianize("s t^-1") == [0]


def test_tcp_and_orbit():
    tri = artintcp.Group(TRIANGLE3)
    no = tri.tcp("inv=1", "a", "")
    assert no["verdict"] == "no"
    assert no["certificate"] == "abelianization"
    yes = tri.tcp("", "a b", "a b")
    assert yes["verdict"] == "yes"
    orbit = artintcp.Group(EDGE3).orbit_decide(
        "s", "t", assume_out_generated=True
    )
    assert orbit["verdict"] == "yes"


def test_outer_representatives_and_extension():
    tri = artintcp.Group(TRIANGLE3)
    assert len(tri.outer_representatives()) == 12
    text = tri.extension("inv=1", finite_order=True)
    assert "x x = 1" in text
    assert "x a x^-1 = a^-1" in text


def test_thicken():
    g = artintcp.Group(EDGE3)
    patch = g.thicken(3, check_links=True)
    assert patch["group_vertices"] == 47
    assert patch["precells"] == 6
    assert patch["link_failures"] == 0
    complex_json = json.loads(patch["json"])
    assert len(complex_json["vertices"]) == patch["vertices"]
