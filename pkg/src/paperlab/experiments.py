"""Experiment registry: one pipeline per claim, each producing a report.

Every report carries the comparison (``left``/``right``/``verdict``), the
claimed outcome (``expected``) and whether the two agree
(``agrees_with_claim``), plus timing and the toolkit version.  Experiments
with no parameters given run their whole reference set of cases.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Dict, List, Optional

from . import __version__
from .category import cat_product, find_isomorphism, opposite, ordinal, terminal_objects
from .corpus import categories, simplicial_categories, square
from .examples import collapse_example, hexagon_pushout, subdivision_pushout
from .homology import HomologyResult, sphere_homology
from .nerve import cat, cat_nerve_counit, cat_product_comparison, nerve
from .presentation import DEFAULT_BOUND, ClosureBoundExceeded
from .realize import F, goodness_check
from .resolved import resolved_realization_demo
from .simplicial_cat import diag_nerve
from .sset import SSetError, boundary, product, standard_simplex
from .subdivide import (
    barycenter,
    check_operator_formulas,
    esd,
    sd,
    ssd,
    ssd_nerve_comparison,
    subdivision_product_check,
    support,
    vertex_coordinates,
)
from .twosided import (
    associativity_map,
    coend_compat,
    constant_diagram,
    counit,
    heggie_invariance_check,
    point_comparison,
    point_diagram,
    random_heggie_instance,
    random_poset_relation,
    ranked_poset_diagram,
)


class FeasibilityRefused(ValueError):
    """Parameters outside an experiment's documented feasibility envelope."""


@dataclass
class ExperimentSpec:
    """A named experiment with its parameters; ``None`` means the experiment default."""

    name: str
    n: Optional[int] = None
    k: Optional[int] = None
    trunc: Optional[int] = None
    bound: int = DEFAULT_BOUND
    seed: int = 0
    out: Optional[str] = None


@dataclass
class Experiment:
    name: str
    criterion: Optional[int]
    claim: str
    envelope: str
    runner: Callable[[ExperimentSpec], dict]
    check: Callable[[ExperimentSpec], Optional[str]] = field(default=lambda spec: None)


REGISTRY: Dict[str, Experiment] = {}


def experiment(name: str, criterion: Optional[int], claim: str, envelope: str,
               check: Callable[[ExperimentSpec], Optional[str]] = None):
    def deco(fn):
        REGISTRY[name] = Experiment(name, criterion, claim, envelope, fn, check or (lambda spec: None))
        return fn
    return deco


def _bound_ok(spec: ExperimentSpec) -> Optional[str]:
    if not 8 <= spec.bound <= 4096:
        return f"bound {spec.bound} outside 8..4096"
    return None


def _outcome(check: str, inputs: dict, cases: List[dict], left=None, right=None, expected: str = "match",
             witness: dict = None) -> dict:
    """Report for a set of cases, each with an ``ok`` flag; the verdict is ``match`` iff all pass."""
    ok = all(c["ok"] for c in cases)
    verdict = "match" if ok else "mismatch"
    failing = [c["case"] for c in cases if not c["ok"]]
    w = {"cases": cases, "failing": failing}
    w.update(witness or {})
    return {
        "check": check,
        "inputs": inputs,
        "left": left if left is not None else f"{len(cases) - len(failing)} of {len(cases)} cases hold",
        "right": right if right is not None else f"{len(cases)} cases claimed",
        "verdict": verdict,
        "witness": w,
        "expected": expected,
        "agrees_with_claim": verdict == expected,
    }


# ---------------------------------------------------------------------------
# Nerve and cat


@experiment("cat_nerve_retraction", 1, "cat(N C) is isomorphic to C",
            "n (number of random categories) in 0..50; random categories have at most 6 objects",
            lambda s: _bound_ok(s) or (None if s.n is None or 0 <= s.n <= 50 else "n must be in 0..50"))
def run_cat_nerve_retraction(spec: ExperimentSpec) -> dict:
    n_random = 20 if spec.n is None else spec.n
    cases = []
    for e in categories(0):
        cases.append(_retraction_case(e.name, e.obj, spec.bound))
    from .corpus import random_directed_category
    for s in range(spec.seed, spec.seed + n_random):
        cases.append(_retraction_case(f"random{s}", random_directed_category(s, bound=spec.bound), spec.bound))
    return _outcome("cat(N C) = C", {"random": n_random, "seed": spec.seed}, cases)


def _retraction_case(name: str, C, bound: int) -> dict:
    eps = cat_nerve_counit(C, bound)
    eps.validate()
    return {"case": name, "size": list(C.size()), "ok": eps.is_isomorphism()}


def _small_ssets():
    return {
        "Delta^1": standard_simplex(1),
        "Delta^2": standard_simplex(2),
        "boundary Delta^2": boundary(2)[0],
        "N[2]": nerve(ordinal(2)),
    }


@experiment("cat_products", 2, "cat(S x T) is isomorphic to cat S x cat T",
            "fixed inputs Delta^1, Delta^2, boundary Delta^2, N[2]", _bound_ok)
def run_cat_products(spec: ExperimentSpec) -> dict:
    S = _small_ssets()
    cases = []
    for (a, A), (b, B) in iproduct(S.items(), S.items()):
        phi = cat_product_comparison(A, B, spec.bound)
        phi.validate()
        cases.append({"case": f"{a} x {b}", "size": list(phi.source.size()), "ok": phi.is_isomorphism()})
    return _outcome("cat preserves products", {}, cases)


def _collapse_envelope(spec: ExperimentSpec) -> Optional[str]:
    if spec.n is not None and not 2 <= spec.n <= 5:
        return "n must be in 2..5 (n = 1 gives an infinite category)"
    return _bound_ok(spec)


@experiment("collapse_quotient", 3,
            "N cat(Delta^n/boundary) is a point while Delta^n/boundary has the homology of S^n",
            "n in 2..5; default runs n = 2 and n = 3", _collapse_envelope)
def run_collapse_quotient(spec: ExperimentSpec) -> dict:
    ns = (2, 3) if spec.n is None else (spec.n,)
    reports = [collapse_example(n, spec.bound) for n in ns]
    for r, n in zip(reports, ns):
        r["agrees_with_claim"] = (r["witness"]["nerve_is_point"]
                                  and homology_of(r["right"]) == sphere_homology(n))
    return _merge("N cat(Delta^n/boundary) vs Delta^n/boundary", reports, "mismatch")


@experiment("hexagon_pushout", 4,
            "the Cat pushout of the hexagon has point homology, the pushout of nerves is S^2",
            "fixed input", _bound_ok)
def run_hexagon_pushout(spec: ExperimentSpec) -> dict:
    r = hexagon_pushout(spec.bound)
    r["agrees_with_claim"] = r["witness"]["cat_side_is_point"] and r["witness"]["sset_side_is_S2"]
    return r


def homology_of(table) -> HomologyResult:
    return HomologyResult.from_table(table)


def _merge(check: str, reports: List[dict], expected: str) -> dict:
    """Combine per-case reports; the claim holds iff it holds for every case."""
    if len(reports) == 1:
        return reports[0]
    agree = all(r["agrees_with_claim"] for r in reports)
    verdicts = {r["verdict"] for r in reports}
    verdict = verdicts.pop() if len(verdicts) == 1 else "mismatch"
    return {
        "check": check,
        "inputs": [r["inputs"] for r in reports],
        "left": [r["left"] for r in reports],
        "right": [r["right"] for r in reports],
        "verdict": verdict,
        "witness": {"cases": reports},
        "expected": expected,
        "agrees_with_claim": agree,
    }


# ---------------------------------------------------------------------------
# Realizations


def _realization_envelope(lo: int, hi: int):
    def check(spec: ExperimentSpec) -> Optional[str]:
        if spec.trunc is not None and not lo <= spec.trunc <= hi:
            return f"trunc must be in {lo}..{hi}"
        return _bound_ok(spec)
    return check


@experiment("d1_realization", 5, "F_D1(C_*) is isomorphic to cat(diag N C_*)",
            "trunc in 2..3 (default: the skeletal dimension of each input)", _realization_envelope(2, 3))
def run_d1_realization(spec: ExperimentSpec) -> dict:
    cases, skipped = [], {}
    for e in simplicial_categories():
        trunc = spec.trunc if spec.trunc is not None else e.obj.dim
        sides = []
        for build in (lambda: F("D1", e.obj, trunc=trunc, bound=spec.bound),
                      lambda: cat(diag_nerve(e.obj), spec.bound)):
            try:
                sides.append(build())
            except ClosureBoundExceeded:
                sides.append(None)
        left, right = sides
        if left is None and right is None:
            # both sides infinite (a loop gives a free monoid); not decidable extensionally
            skipped[e.name] = "both sides exceed the closure bound"
            continue
        ok = left is not None and right is not None and find_isomorphism(left, right) is not None
        cases.append({"case": e.name, "sizes": [list(X.size()) if X is not None else "infinite" for X in sides],
                      "ok": ok})
    return _outcome("F_D1 = cat diag N", {"trunc": spec.trunc}, cases, witness={"skipped": skipped})


@experiment("d2_realization", 6,
            "F_D2(C_*) is isomorphic to cat(sd^2 diag N C_*) and D2 is good on the corpus",
            "trunc in 2..3 (default: the skeletal dimension of each input)", _realization_envelope(2, 3))
def run_d2_realization(spec: ExperimentSpec) -> dict:
    cases = []
    for e in simplicial_categories():
        C = e.obj
        trunc = spec.trunc if spec.trunc is not None else C.dim
        left = F("D2", C, trunc=trunc, bound=spec.bound)
        right = cat(sd(sd(diag_nerve(C))), spec.bound)
        iso = left.size() == right.size() and find_isomorphism(left, right) is not None
        good = goodness_check("D2", C, trunc=trunc, bound=spec.bound)
        cases.append({"case": e.name, "sizes": [list(left.size()), list(right.size())], "identity": iso,
                      "goodness": good["verdict"], "ok": iso and good["verdict"] == "match"})
    d1 = goodness_check("D1", _corpus_scat("disc Delta^2/boundary"), bound=spec.bound)
    return _outcome("F_D2 = cat sd^2 diag N, and goodness(D2)", {"trunc": spec.trunc}, cases,
                    witness={"goodness(D1) on disc Delta^2/boundary": d1["verdict"]})


def _corpus_scat(name: str):
    return {e.name: e.obj for e in simplicial_categories()}[name]


@experiment("goodness_d1_quotient", None, "D1 is not good: on disc Delta^2/boundary it gives a point, not S^2",
            "fixed input", _bound_ok)
def run_goodness_d1(spec: ExperimentSpec) -> dict:
    r = goodness_check("D1", _corpus_scat("disc Delta^2/boundary"), bound=spec.bound)
    r["expected"] = "mismatch"
    r["agrees_with_claim"] = (r["left"] != "infinite nerve" and homology_of(r["left"]).is_point()
                              and homology_of(r["right"]) == sphere_homology(2))
    return r


@experiment("goodness_d3_circle", None, "D3 with k = 1 is not good: on disc Delta^1/boundary it gives a point, not S^1",
            "k in 1..2", lambda s: _bound_ok(s) or (None if s.k in (None, 1, 2) else "k must be 1 or 2"))
def run_goodness_d3(spec: ExperimentSpec) -> dict:
    k = spec.k or 1
    r = goodness_check("D3", _corpus_scat("disc Delta^1/boundary"), k=k, bound=spec.bound)
    r["expected"] = "mismatch"
    r["agrees_with_claim"] = (r["left"] not in ("infinite nerve", "infinite category")
                              and homology_of(r["left"]).is_point()
                              and homology_of(r["right"]) == sphere_homology(1))
    return r


# ---------------------------------------------------------------------------
# Subdivisions


@experiment("sd_product", 7, "sd(Delta^1 x Delta^1) has 11 vertices, sd(Delta^1) x sd(Delta^1) has 9",
            "fixed input")
def run_sd_product(spec: ExperimentSpec) -> dict:
    I = standard_simplex(1)
    ok, w = subdivision_product_check("sd", I, I)
    left, right = len(sd(product(I, I)).simplices(0)), len(product(sd(I), sd(I)).simplices(0))
    return {
        "check": "sd(S x T) -> sd S x sd T",
        "inputs": {"S": "Delta^1", "T": "Delta^1"},
        "left": {"vertices": left, "f_vector": w["sub(SxT)"]},
        "right": {"vertices": right, "f_vector": w["sub(S)xsub(T)"]},
        "verdict": "match" if ok else "mismatch",
        "witness": w,
        "expected": "mismatch",
        "agrees_with_claim": (not ok) and (left, right) == (11, 9),
    }


@experiment("edgewise_products", 8,
            "esd and ssd satisfy the simplicial identities and preserve products",
            "fixed inputs Delta^1, Delta^2, boundary Delta^2")
def run_edgewise_products(spec: ExperimentSpec) -> dict:
    from .corpus import ssets

    cases = []
    for kind, op in (("esd", esd), ("ssd", ssd)):
        cases.append({"case": f"{kind} operator formulas", "ok": check_operator_formulas(kind)})
        for e in ssets():
            X = op(e.obj)
            try:
                X.validate()
                ok = True
            except SSetError:
                ok = False
            cases.append({"case": f"{kind}({e.name}) identities", "f_vector": list(X.f_vector()), "ok": ok})
        S = {k: v for k, v in _small_ssets().items() if k != "N[2]"}
        for (a, A), (b, B) in iproduct(S.items(), S.items()):
            ok, w = subdivision_product_check(kind, A, B)
            cases.append({"case": f"{kind}({a} x {b})", "f_vectors": [w["sub(SxT)"], w["sub(S)xsub(T)"]],
                          "ok": ok})
    return _outcome("edgewise subdivisions: identities and products", {}, cases)


@experiment("ssd_nerve", 9, "ssd(N C) is isomorphic to N(C') for the morphism category C'",
            "fixed inputs [1], [2], [3], square")
def run_ssd_nerve(spec: ExperimentSpec) -> dict:
    cases = []
    for name, C in (("[1]", ordinal(1)), ("[2]", ordinal(2)), ("[3]", ordinal(3)), ("square", square())):
        f = ssd_nerve_comparison(C)
        f.validate()
        cases.append({"case": name, "f_vector": list(f.source.f_vector()), "ok": f.is_isomorphism()})
    return _outcome("ssd N C = N C'", {}, cases)


SUPPORT_CASES = ((1, 1), (1, 2), (1, 3), (2, 3))


def _support_envelope(spec: ExperimentSpec) -> Optional[str]:
    if (spec.k is None) != (spec.n is None):
        return "give both k and n, or neither"
    if spec.k is not None and not (1 <= spec.k <= 2 and 1 <= spec.n <= 3):
        return "k in 1..2 and n in 1..3"
    return _bound_ok(spec)


@experiment("ssd_support", 10,
            "vertices of ssd^k(Delta^n) have at most 2^k nonzero coordinates; for n = 2^k - 1 "
            "the single interior vertex is the barycenter and is terminal",
            "k in 1..2, n in 1..3; default runs (1,1), (1,2), (1,3), (2,3)", _support_envelope)
def run_ssd_support(spec: ExperimentSpec) -> dict:
    pairs = SUPPORT_CASES if spec.k is None else ((spec.k, spec.n),)
    cases = []
    for k, n in pairs:
        X, coords = vertex_coordinates("ssd", k, n)
        worst = max(support(p) for p in coords.values())
        case = {"case": f"k={k}, n={n}", "vertices": len(coords), "max_support": worst}
        ok = worst <= 2 ** k
        if n == 2 ** k - 1:
            interior = [v for v, p in coords.items() if support(p) == n + 1]
            case["interior_vertices"] = len(interior)
            ok = ok and len(interior) == 1
            if len(interior) == 1:
                v = interior[0]
                case["is_barycenter"] = coords[v] == barycenter(n)
                terms = terminal_objects(cat(X, spec.bound))
                case["terminal"] = v in terms
                case["terminal_objects"] = repr(terms)
                ok = ok and case["is_barycenter"] and case["terminal"]
        case["ok"] = ok
        cases.append(case)
    return _outcome("ssd^k support bound and barycenter", {"k": spec.k, "n": spec.n}, cases)


def _pushout_envelope(spec: ExperimentSpec) -> Optional[str]:
    k = spec.k or 1
    n = spec.n
    if not 1 <= k <= 2:
        return "k in 1..2"
    if n is not None and not 1 <= n <= 3:
        return "n in 1..3"
    return _bound_ok(spec)


def _pushout(kind: str, spec: ExperimentSpec, default_n: int) -> dict:
    k = spec.k or 1
    n = spec.n if spec.n is not None else default_n
    r = subdivision_pushout(kind, k, n, spec.bound)
    r["agrees_with_claim"] = r["witness"]["cat_pushout_nerve_is_point"] and r["witness"]["sset_pushout_is_sphere"]
    return r


@experiment("ssd_pushout", 11,
            "collapsing ssd^k(boundary) in cat ssd^k(Delta^n) gives point homology, the pushout of "
            "simplicial sets is S^n (default k = 1, n = 1)",
            "k in 1..2, n in 1..3", _pushout_envelope)
def run_ssd_pushout(spec: ExperimentSpec) -> dict:
    return _pushout("ssd", spec, 1)


@experiment("esd_pushout", 11,
            "collapsing esd^k(boundary) in cat esd^k(Delta^n) gives point homology, the pushout of "
            "simplicial sets is S^n (default k = 1, n = 2)",
            "k in 1..2, n in 1..3", _pushout_envelope)
def run_esd_pushout(spec: ExperimentSpec) -> dict:
    return _pushout("esd", spec, 2)


# ---------------------------------------------------------------------------
# Two-sided construction


def _index_categories():
    return {"[1]": ordinal(1), "[2]": ordinal(2), "square": square()}


@experiment("two_sided_identities", 12,
            "C(*,K,*) = K, associativity, coend compatibility and the counit section law with "
            "homology equivalence",
            "fixed index categories [1], [2], square; seed selects the random diagrams",
            _bound_ok)
def run_two_sided(spec: ExperimentSpec) -> dict:
    import random

    rng = random.Random(spec.seed)

    def rel(n=3):
        return random_poset_relation(rng, n, 0.5)

    cases = []
    Ks = _index_categories()
    for name, K in Ks.items():
        phi = point_comparison(K)
        phi.validate()
        cases.append({"case": f"C(*,{name},*) = {name}", "ok": phi.is_isomorphism()})
    for (kn, K), (ln, L) in iproduct(Ks.items(), Ks.items()):
        Fd = ranked_poset_diagram(K, rel(), 2, contravariant=True, name="F")
        G = ranked_poset_diagram(cat_product(K, opposite(L)), rel(), 2, name="G")
        H = ranked_poset_diagram(L, rel(), 2, name="H")
        phi = associativity_map(Fd, K, G, L, H)
        phi.validate()
        cases.append({"case": f"associativity K={kn}, L={ln}", "size": list(phi.source.size()),
                      "ok": phi.is_isomorphism()})
    A = B = ordinal(1)
    for kn, K in Ks.items():
        U = ranked_poset_diagram(A, rel(), 2, contravariant=True, name="U")
        V = ranked_poset_diagram(B, rel(), 2, name="V")
        Fd = ranked_poset_diagram(cat_product(A, opposite(K)), rel(), 2, name="F")
        G = ranked_poset_diagram(cat_product(K, opposite(B)), rel(), 2, name="G")
        left, right = coend_compat(U, Fd, A, K, G, B, V, spec.bound)
        cases.append({"case": f"coend compatibility K={kn}", "sizes": [list(left.size()), list(right.size())],
                      "ok": find_isomorphism(left, right) is not None})
        left, right = coend_compat(point_diagram(opposite(A)), constant_diagram(cat_product(A, opposite(K))), A, K,
                                   constant_diagram(cat_product(K, opposite(B))), B, point_diagram(B), spec.bound)
        cases.append({"case": f"coend compatibility, trivial diagrams, K={kn}",
                      "ok": find_isomorphism(left, K) is not None and find_isomorphism(right, K) is not None})
    for kn, K in Ks.items():
        G = ranked_poset_diagram(K, rel(), 3, name="G")
        for k in K.objects:
            c = counit(K, G, k)
            c.eps.validate()
            c.section.validate()
            cases.append({"case": f"counit K={kn}, k={k!r}", "section_law": c.section_law(),
                          "tau_natural": c.tau_is_natural(),
                          "ok": c.section_law() and c.tau_is_natural() and c.homology_equivalence()})
    return _outcome("two-sided construction identities", {"seed": spec.seed}, cases)


@experiment("heggie_invariance", 13,
            "levelwise homology equivalences induce homology isomorphisms of two-sided constructions",
            "n (number of instances) in 1..40; K alternates [1], [2]",
            lambda s: _bound_ok(s) or (None if s.n is None or 1 <= s.n <= 40 else "n must be in 1..40"))
def run_heggie(spec: ExperimentSpec) -> dict:
    count = 10 if spec.n is None else spec.n
    cases = []
    for i in range(count):
        K = ordinal(1 + i % 2)
        beta, gamma = random_heggie_instance(spec.seed + i, K)
        r = heggie_invariance_check(beta, gamma)
        cases.append({"case": f"seed {spec.seed + i}, K=[{1 + i % 2}]", "homology": r["left"],
                      "sizes": r["witness"]["sizes"], "ok": r["verdict"] == "match"})
    return _outcome("homotopy invariance of C(F,K,G)", {"seed": spec.seed, "instances": count}, cases)


def _resolved_envelope(spec: ExperimentSpec) -> Optional[str]:
    if spec.trunc is not None and not 4 <= spec.trunc <= 5:
        return "trunc N in 4..5 (N >= 2 dim + 2 = 4; N = 5 takes minutes)"
    return _bound_ok(spec)


@experiment("resolved_realization", 14,
            "the resolved realization of disc Delta^1/boundary has the homology of S^1",
            "trunc N in 4..5 (default 4)", _resolved_envelope)
def run_resolved(spec: ExperimentSpec) -> dict:
    N = 4 if spec.trunc is None else spec.trunc
    C = _corpus_scat("disc Delta^1/boundary")
    r = resolved_realization_demo("D1", C, N, bound=spec.bound)
    plain = goodness_check("D1", C, bound=spec.bound)
    r["witness"]["bare F_D1"] = plain["left"]
    r["expected"] = "match"
    r["agrees_with_claim"] = r["verdict"] == "match" and homology_of(r["left"]) == sphere_homology(1)
    return r


# ---------------------------------------------------------------------------
# Running


def names() -> List[str]:
    return list(REGISTRY)


def run(spec: ExperimentSpec) -> dict:
    """Run one experiment; raises :class:`FeasibilityRefused` outside its envelope."""
    if spec.name not in REGISTRY:
        raise KeyError(f"unknown experiment {spec.name!r}; known: {', '.join(REGISTRY)}")
    exp = REGISTRY[spec.name]
    problem = exp.check(spec)
    if problem:
        raise FeasibilityRefused(f"{spec.name}: {problem}. Envelope: {exp.envelope}")
    t0 = time.perf_counter()
    report = exp.runner(spec)
    elapsed = time.perf_counter() - t0
    report.update({
        "experiment": exp.name,
        "criterion": exp.criterion,
        "claim": exp.claim,
        "params": {"n": spec.n, "k": spec.k, "trunc": spec.trunc, "bound": spec.bound, "seed": spec.seed},
        "timing_s": round(elapsed, 3),
        "version": __version__,
    })
    return report


def run_all(bound: int = DEFAULT_BOUND, seed: int = 0) -> List[dict]:
    return [run(ExperimentSpec(name, bound=bound, seed=seed)) for name in REGISTRY]


def markdown_summary(reports: List[dict]) -> str:
    """Human-readable summary table of reports."""
    lines = ["| experiment | criterion | verdict | expected | agrees with claim | time (s) |",
             "|---|---|---|---|---|---|"]
    for r in reports:
        crit = r.get("criterion")
        lines.append(f"| {r.get('experiment', r['check'])} | {crit if crit is not None else '-'} | {r['verdict']} "
                     f"| {r.get('expected', '-')} | {'yes' if r.get('agrees_with_claim') else 'NO'} "
                     f"| {r.get('timing_s', '-')} |")
    lines.append("")
    for r in reports:
        lines.append(f"## {r.get('experiment', r['check'])}")
        lines.append("")
        lines.append(f"Claim: {r.get('claim', r['check'])}")
        lines.append("")
        lines.append(f"- left: `{_short(r['left'])}`")
        lines.append(f"- right: `{_short(r['right'])}`")
        failing = r.get("witness", {}).get("failing")
        if failing:
            lines.append(f"- failing cases: {', '.join(map(str, failing))}")
        lines.append("")
    return "\n".join(lines)


def _short(x, limit: int = 300) -> str:
    s = _table_text(x)
    return s if len(s) <= limit else s[:limit] + " ..."


def _table_text(x) -> str:
    if isinstance(x, list) and x and isinstance(x[0], dict) and "betti" in x[0]:
        return str(HomologyResult.from_table(x))
    return str(x)
