import pytest

from paperlab.category import find_isomorphism, ordinal
from paperlab.presentation import ClosureBoundExceeded, CatPresentation, free_category, realize_presentation
from paperlab.corpus import square


def test_free_path_category():
    P = free_category([0, 1, 2], {"a": (0, 1), "b": (1, 2)})
    C = realize_presentation(P)
    assert find_isomorphism(C, ordinal(2)) is not None


def test_commuting_square():
    P = CatPresentation([0, 1, 2, 3], {"a": (0, 1), "b": (1, 3), "c": (0, 2), "d": (2, 3)})
    P.add_relation(("a", "b"), ("c", "d"))
    C = realize_presentation(P)
    assert find_isomorphism(C, square()) is not None
    assert C.generators is not None


def test_parallel_edges_stay_distinct():
    P = CatPresentation([0, 1], {"a": (0, 1), "b": (0, 1)})
    assert realize_presentation(P).size() == (2, 4)


def test_loop_exceeds_bound():
    P = CatPresentation([0], {"x": (0, 0)})
    with pytest.raises(ClosureBoundExceeded):
        realize_presentation(P, bound=16)


def test_idempotent_loop_is_finite():
    P = CatPresentation([0], {"x": (0, 0)})
    P.add_relation(("x", "x"), ("x",))
    assert realize_presentation(P).size() == (1, 2)


def test_relation_endpoints_checked():
    P = CatPresentation([0, 1, 2], {"a": (0, 1), "b": (1, 2)})
    with pytest.raises(ValueError):
        P.add_relation(("a",), ("b",))
