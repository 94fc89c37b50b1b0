from math import comb

import pytest

from paperlab.category import ordinal
from paperlab.coend import TruncationTooSmall
from paperlab.resolved import coend_identity_check, injective_delta, resolved_realization_demo
from paperlab.simplicial_cat import constant_scat, discrete_scat, realization_functor
from paperlab.sset import simplex_mod_boundary


@pytest.mark.parametrize("N", range(4))
def test_injective_delta_counts(N):
    I = injective_delta(N)
    I.validate()
    # [DERIVED] injections [m] -> [n]
    assert len(I.morphisms) == sum(comb(n + 1, m + 1) for n in range(N + 1) for m in range(n + 1))


@pytest.mark.parametrize("tag", ["D0", "D1", "D3"])
def test_constant_point_resolves_to_point(tag):
    from paperlab.homology import HomologyResult
    r = resolved_realization_demo(tag, constant_scat(ordinal(0), "pt"), 2)
    assert r["verdict"] == "match"
    assert HomologyResult.from_table(r["left"]).is_point()


def test_truncation_rule():
    with pytest.raises(TruncationTooSmall):
        resolved_realization_demo("D1", discrete_scat(simplex_mod_boundary(1)), 3)


@pytest.mark.parametrize("N", [1, 2])
def test_coend_identity(N):
    C = discrete_scat(simplex_mod_boundary(1))
    assert coend_identity_check(C, realization_functor("D1", N), N)
