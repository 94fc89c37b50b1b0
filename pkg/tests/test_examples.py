import pytest

from paperlab.corpus import categories, corpus, simplicial_categories, ssets
from paperlab.examples import collapse_example, hexagon, hexagon_cone, hexagon_pushout, subdivision_pushout


def test_corpus_contents():
    names = {e.name for e in corpus()}
    assert {f"Delta^{n}" for n in range(5)} <= names
    assert {"N[2]", "ssd N[2]", "hexagon"} <= names
    assert len(categories()) == 29
    assert all(e.obj.dim <= 2 for e in simplicial_categories())
    assert all(e.kind == "sset" for e in ssets())


def test_random_categories_are_seeded():
    a = [e.obj.size() for e in categories(5)]
    b = [e.obj.size() for e in categories(5)]
    assert a == b


def test_hexagon_shapes():
    assert hexagon().size() == (6, 12)
    assert hexagon_cone().size() == (7, 19)


@pytest.mark.parametrize("n", [2, 3])
def test_collapse(n):
    r = collapse_example(n)
    assert r["witness"]["nerve_is_point"]
    assert r["verdict"] == "mismatch" and r["agrees_with_claim"]


def test_hexagon_pushout():
    r = hexagon_pushout()
    assert r["witness"]["cat_side_is_point"] and r["witness"]["sset_side_is_S2"]


def test_esd_pushout_sphere():
    r = subdivision_pushout("esd", 1, 2)
    assert r["witness"]["cat_pushout_nerve_is_point"] and r["witness"]["sset_pushout_is_sphere"]


def test_infinite_pushouts_reported():
    r = subdivision_pushout("esd", 1, 1)
    assert r["left"] == "infinite nerve" and r["verdict"] == "mismatch"
