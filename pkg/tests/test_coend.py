import pytest

from paperlab.coend import TruncationTooSmall, coend_sset, constant, standard_simplices
from paperlab.corpus import ssets
from paperlab.sset import is_isomorphic, point, simplex_mod_boundary


@pytest.mark.parametrize("entry", ssets()[:9], ids=lambda e: e.name)
def test_coyoneda(entry):
    # S (x)_Delta Delta^bullet = S
    S = entry.obj
    X = coend_sset(S, standard_simplices(S.dimension)).sset
    assert is_isomorphic(X, S)


def test_constant_cosimplicial_gives_components():
    S = simplex_mod_boundary(2)
    X = coend_sset(S, constant(point(), 2)).sset
    assert X.f_vector() == (1,)


def test_truncation_checked():
    S = simplex_mod_boundary(2)
    with pytest.raises(TruncationTooSmall):
        coend_sset(S, standard_simplices(2), trunc=1)


def test_cosimplicial_identities():
    standard_simplices(3).validate()
