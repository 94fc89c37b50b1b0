"""The fourteen acceptance criteria, each at its stated time limit.

Each test runs the registered experiment(s) for its criterion, prints one
PASS/FAIL line and fails unless every experiment agrees with the claimed
outcome within the limit.
"""
import time

import pytest

from paperlab.experiments import REGISTRY, ExperimentSpec, run

from conftest import ACCEPTANCE_LINES

CRITERIA = {
    1: ("cat(N C) = C on the category corpus", 5, ["cat_nerve_retraction"]),
    2: ("cat preserves products", 10, ["cat_products"]),
    3: ("N cat(Delta^n/boundary) is a point, the quotient is S^n", 5, ["collapse_quotient"]),
    4: ("hexagon: Cat pushout is a point, SSet pushout is S^2", 5, ["hexagon_pushout"]),
    5: ("F_D1 = cat diag N", 30, ["d1_realization"]),
    6: ("F_D2 = cat sd^2 diag N and D2 is good", 300, ["d2_realization"]),
    7: ("sd(Delta^1 x Delta^1): 11 vs 9 vertices", 5, ["sd_product"]),
    8: ("esd/ssd identities and products", 30, ["edgewise_products"]),
    9: ("ssd N C = N C'", 30, ["ssd_nerve"]),
    10: ("ssd^k support bound and terminal barycenter", 60, ["ssd_support"]),
    11: ("subdivided pushouts: point vs S^n", 60, ["ssd_pushout", "esd_pushout"]),
    12: ("two-sided construction identities", 60, ["two_sided_identities"]),
    13: ("two-sided homotopy invariance", 120, ["heggie_invariance"]),
    14: ("resolved realization of Delta^1/boundary is S^1", 120, ["resolved_realization"]),
}


def test_registry_covers_criteria():
    for _, _, names in CRITERIA.values():
        assert all(n in REGISTRY for n in names)


def _failure_detail(report):
    w = report.get("witness", {})
    if w.get("failing"):
        return f"failing cases {w['failing']}"
    return f"left={report['left']} right={report['right']} verdict={report['verdict']}"


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, limit, names = CRITERIA[number]
    t0 = time.perf_counter()
    reports = [run(ExperimentSpec(n)) for n in names]
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if not r["agrees_with_claim"]]
    ok = not bad and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f} s, limit {limit} s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f} s (limit {limit} s)"
    assert not bad, "; ".join(f"{r['experiment']}: {_failure_detail(r)}" for r in bad)
