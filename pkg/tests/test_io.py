import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.corpus import categories, random_directed_category, ssets
from paperlab.io import (
    FormatError,
    catpres_from_dict,
    catpres_to_dict,
    decode,
    dump_report,
    encode,
    fincat_from_dict,
    fincat_to_dict,
    load_catpres,
    load_fincat,
    load_sset,
    save_catpres,
    save_fincat,
    save_sset,
    sset_from_dict,
    sset_to_dict,
)
from paperlab.nerve import cat_presentation
from paperlab.sset import boundary

keys = st.recursive(st.one_of(st.integers(), st.text(max_size=3), st.none(), st.booleans()),
                    lambda c: st.one_of(st.tuples(c, c), st.frozensets(st.integers(0, 5), max_size=3)),
                    max_leaves=6)


@given(keys)
def test_key_roundtrip(k):
    assert decode(json.loads(json.dumps(encode(k)))) == k


@pytest.mark.parametrize("entry", ssets(), ids=lambda e: e.name)
def test_sset_roundtrip(entry, tmp_path):
    S = entry.obj
    path = tmp_path / "x.sset.json"
    save_sset(S, path)
    T = load_sset(path)
    a, b = sset_to_dict(T), sset_to_dict(S)
    assert a["faces"] == b["faces"]
    assert {n: sorted(v) for n, v in a["simplices"].items()} == {n: sorted(v) for n, v in b["simplices"].items()}


@pytest.mark.parametrize("entry", categories(3), ids=lambda e: e.name)
def test_fincat_roundtrip(entry, tmp_path):
    C = entry.obj
    path = tmp_path / "x.fincat.json"
    save_fincat(C, path)
    D = load_fincat(path)
    assert D.morphisms == C.morphisms and D.identities == C.identities
    assert all(D.comp(g, f) == C.comp(g, f) for g, f in C.composable_pairs())


def test_catpres_roundtrip(tmp_path):
    P = cat_presentation(boundary(2)[0])
    path = tmp_path / "x.catpres.json"
    save_catpres(P, path)
    Q = load_catpres(path)
    assert catpres_to_dict(Q) == catpres_to_dict(P)


def test_malformed_inputs():
    with pytest.raises(FormatError):
        sset_from_dict({"faces": {}})
    with pytest.raises(FormatError):
        fincat_from_dict({"objects": []})
    with pytest.raises(FormatError):
        catpres_from_dict({})
    with pytest.raises(FormatError):
        decode({"nope": 1})
    with pytest.raises(FormatError):
        encode(1.5)


def test_report_is_json():
    text = dump_report({"check": "x", "verdict": "match", "left": (1, 2)})
    assert json.loads(text)["verdict"] == "match"


def test_fincat_dict_is_json_serializable():
    json.dumps(fincat_to_dict(random_directed_category(3)))
