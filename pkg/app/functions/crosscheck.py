"""
Cross-check suites behind `verify`: closed forms against oracles, family
predictions against measurement, recursions against Hochster, and the
theorem-level properties over a census.
"""

from typing import Callable, Dict, Iterable, List

from pydantic import BaseModel

from app.errors import CoverPairsError
from app.functions import families as fam
from app.functions.betti import RATIONALS, chordal_reg_cover, hochster_table
from app.functions.corpus import CorpusItem, free_trees, random_forests, random_graphs
from app.functions.graph_core import (
    Graph, canonical_form, classify, enumerate_connected, from_edge_list, from_graph6, to_graph6,
)
from app.functions.hilbert import (
    Hypergraph, degree_report, h_cover, h_cover_oracle, h_edge_Ds, h_edge_fvector, h_edge_hypergraph_oracle,
    hf_cover, hf_cover_series,
)
from app.functions.indpoly import bundle, gvector_bruteforce
from app.functions.polyring import IntPoly
from app.functions.recursions import block_check, jk_alpha_M, jk_pdim
from app.functions.survey import SurveyOptions, run_survey
from app.ingest.models.PairSet import PairSet
from app.ingest.models.VerifyReport import SuiteResult, VerifyReport
from app.ingest.transforms.logging_consumers import log_failure, log_ok, log_start


class VerifyLevel(BaseModel):
    """Sizes for one verify level"""
    name: str
    census_n: int
    random_graphs: int
    random_max_n: int
    tree_n: int
    random_forests: int
    forest_max_n: int
    radius2_n: int
    split_n: int
    bk_max: int
    gkr_max_n: int
    hnp_max_n: int
    whisker_base_n: int
    whisker_q: int


LEVELS: Dict[str, VerifyLevel] = {
    "quick": VerifyLevel(
        name="quick", census_n=6, random_graphs=40, random_max_n=8, tree_n=7, random_forests=30,
        forest_max_n=10, radius2_n=8, split_n=7, bk_max=3, gkr_max_n=10, hnp_max_n=9,
        whisker_base_n=4, whisker_q=2,
    ),
    "full": VerifyLevel(
        name="full", census_n=7, random_graphs=500, random_max_n=10, tree_n=9, random_forests=200,
        forest_max_n=14, radius2_n=11, split_n=10, bk_max=6, gkr_max_n=14, hnp_max_n=12,
        whisker_base_n=6, whisker_q=3,
    ),
}

REG_ONE_GRAPHS = {
    "C3": from_edge_list(3, [(0, 1), (1, 2), (0, 2)]),
    "P3": from_edge_list(3, [(0, 1), (1, 2)]),
    "P4": from_edge_list(4, [(0, 1), (1, 2), (2, 3)]),
}


def _census(level: VerifyLevel) -> List[Graph]:
    return [g for n in range(2, level.census_n + 1) for g in enumerate_connected(n)]


def _check(result: SuiteResult, ok: bool, message: Callable[[], str]):
    result.checked += 1
    if not ok:
        result.failures.append(message())


# --- suites ----------------------------------------------------------------

def oracle_suite(graphs: Iterable[Graph]) -> SuiteResult:
    result = SuiteResult(name="oracles")
    for g in graphs:
        tag = to_graph6(g)
        b = bundle(g)
        _check(result, gvector_bruteforce(g) == b.gvec, lambda: f"{tag}: g-vector vs subset scan")
        _check(result, h_edge_fvector(b) == h_edge_Ds(b), lambda: f"{tag}: h_I forms disagree")
        hyper = Hypergraph.from_graph(g)
        if hyper.edges:
            _check(result, h_edge_fvector(b) == h_edge_hypergraph_oracle(hyper),
                   lambda: f"{tag}: h_I vs series extraction")
        if not b.has_edge:
            continue
        series = hf_cover_series(g, 2 * g.n)
        for d in range(1, 2 * g.n + 1):
            _check(result, hf_cover(g.n, b.gvec, d) == series[d], lambda: f"{tag}: HF(R/J, {d}) closed form")
        try:
            profile = h_cover(b)
            degree_report(b)
        except CoverPairsError as e:
            result.checked += 1
            result.failures.append(f"{tag}: {e}")
            continue
        _check(result, IntPoly(tuple(profile.h)) == h_cover_oracle(g), lambda: f"{tag}: h_J vs series extraction")
        _check(result, profile.deg_h == g.n - 2 - b.M, lambda: f"{tag}: deg h_J != n-2-M")
        _check(result, profile.a_invariant == -b.M, lambda: f"{tag}: a-invariant != -M")
        _check(result, h_edge_fvector(b).degree == b.alpha - b.M, lambda: f"{tag}: deg h_I != alpha-M")
    return result


def _family_checks(result: SuiteResult, label: str, g: Graph, pred):
    for check in fam.check_prediction(g, pred, fam.reference_pdim_method(g)):
        _check(result, check.match,
               lambda: f"{label}: {check.field} predicted {check.predicted} measured {check.measured} ({check.provenance})")


def family_suite(level: VerifyLevel) -> SuiteResult:
    result = SuiteResult(name="families")

    for n in range(2, level.radius2_n + 1):
        measured = PairSet(n=n)
        for spec in fam.radius2_specs(n):
            g = fam.build_radius2(spec)
            pred = fam.predict_radius2(spec)
            _family_checks(result, f"radius2 L1={spec.L1} ts={spec.ts}", g, pred)
            m = fam.measure_graph(g, ("pdim", "deg_h_cover"), fam.reference_pdim_method(g))
            measured.add(m.reg_cover, m.deg_h_cover)
        if n >= 4:
            predicted = fam.radius2_pairs(n)
            _check(result, predicted.as_set() == measured.as_set(),
                   lambda: f"radius2 n={n}: predicted {predicted.pairs()} measured {measured.pairs()}")
            for r, d in predicted.pairs():
                w = fam.build_radius2(fam.radius2_witness(n, r, d))
                m = fam.measure_graph(w, ("pdim", "deg_h_cover"), fam.reference_pdim_method(w))
                _check(result, (m.reg_cover, m.deg_h_cover) == (r, d), lambda: f"radius2 witness ({r},{d}) n={n}")

    for n in range(2, level.split_n + 1):
        for spec in fam.split_specs(n):
            g = fam.build_split(spec)
            if not classify(g).connected:
                continue
            _family_checks(result, f"split sizes={spec.sizes}", g, fam.predict_split(g))
        for q, _ in fam.split_pairs(n).pairs():
            w = fam.build_split(fam.split_witness(n, q))
            m = fam.measure_graph(w, ("pdim", "deg_h_cover"), fam.reference_pdim_method(w))
            _check(result, (m.reg_cover, m.deg_h_cover) == (q, q), lambda: f"split witness q={q} n={n}")

    for k in range(1, level.bk_max + 1):
        _family_checks(result, f"B_{k}", fam.build_Bk(k), fam.predict_Bk(k))
    for n in range(5, level.gkr_max_n + 1):
        for k, r in fam.gkr_params(n):
            _family_checks(result, f"G_{k},{r}", fam.build_Gkr(k, r), fam.predict_Gkr(k, r))
    for n in range(6, level.hnp_max_n + 1):
        for p in fam.hnp_params(n):
            _family_checks(result, f"H_{n},{p}", fam.build_Hnp(n, p), fam.predict_Hnp(n, p))
    for p in range(2, 5):
        for q in range(1, level.whisker_q + 1):
            if p * (q + 1) <= 16:
                _family_checks(result, f"H_{p},{q}", fam.build_Hpq(p, q), fam.predict_Hpq(p, q))

    for n in range(1, level.whisker_base_n + 1):
        for base in enumerate_connected(n):
            tag = to_graph6(base)
            for q in range(1, level.whisker_q + 1):
                _family_checks(result, f"whisker {tag} q={q}", fam.whisker_all(base, q), fam.predict_whisker_all(base, q))
            for v in range(base.n):
                _family_checks(result, f"whisker1 {tag} v={v}", fam.whisker_vertex(base, v), fam.predict_whisker_vertex(base, v))
            _family_checks(result, f"cone {tag}", fam.cone(base), fam.predict_cone(base))
    return result


def recursion_suite(trees: Iterable[Graph], forests: Iterable[Graph], max_n: int) -> SuiteResult:
    result = SuiteResult(name="recursions")
    for g in list(trees) + list(forests):
        tag = to_graph6(g)
        pdim = hochster_table(g, RATIONALS, max_n=max_n).pdim
        _check(result, jk_pdim(g) == pdim, lambda: f"{tag}: jk_pdim != Hochster pdim {pdim}")
        b = bundle(g)
        amc = jk_alpha_M(g)
        _check(result, (amc.alpha, amc.M, amc.c) == (b.alpha, b.M, b.c),
               lambda: f"{tag}: jk_alpha_M {(amc.alpha, amc.M, amc.c)} != {(b.alpha, b.M, b.c)}")
    return result


def theorem_suite(graphs: List[Graph]) -> SuiteResult:
    result = SuiteResult(name="theorems")
    reg_one = {canonical_form(g) for g in REG_ONE_GRAPHS.values()}
    for g in graphs:
        flags = classify(g)
        if flags.block_graph and flags.connected:
            report = block_check(g)
            _check(result, report.satisfied and report.identity_ok and report.i_recursion_ok,
                   lambda: f"{to_graph6(g)}: block recursion check failed")
        if flags.chordal and flags.connected and not g.is_edgeless():
            try:
                chordal_reg_cover(g, cross_check=True)
                result.checked += 1
            except CoverPairsError as e:
                result.failures.append(f"{to_graph6(g)}: {e}")

    survey = run_survey(
        _items(graphs),
        SurveyOptions(spot_check_rate=1.0, oracle_sample_rate=1.0, jobs=1),
    )
    s = survey.summary
    result.checked += s.processed
    result.failures.extend(s.hard_failures)
    result.failures.extend(f"band violated by {g6}" for g6 in s.band_violations)
    result.failures.extend(f"alpha corollary violated by {g6}" for g6 in s.corollary_violations)
    for record in survey.records:
        if record.reg_cover == 1:
            g = from_graph6(record.graph6)
            _check(result, canonical_form(g) in reg_one, lambda: f"{record.graph6}: unexpected reg = 1 graph")

    for n, pairs in s.pairs.items():
        if n >= 4:
            missing = fam.radius2_pairs(n).as_set() - pairs.as_set()
            _check(result, not missing, lambda: f"n={n}: radius-2 pairs {sorted(missing)} not realized in census")
        missing = fam.split_pairs(n).as_set() - pairs.as_set()
        _check(result, not missing, lambda: f"n={n}: split pairs {sorted(missing)} not realized in census")
        for pair in fam.hnp_pairs(n).pairs() + fam.gkr_pairs(n).pairs():
            _check(result, pair in pairs, lambda: f"n={n}: family pair {pair} not realized in census")
        for split_graph in (g for g in graphs if g.n == n and classify(g).split and not g.is_edgeless()):
            pred = fam.predict_split(split_graph)
            _check(result, pred.pair() in fam.split_pairs(n),
                   lambda: f"{to_graph6(split_graph)}: split pair {pred.pair()} off the predicted diagonal")
    return result


def _items(graphs: Iterable[Graph]):
    for g in graphs:
        yield CorpusItem(None, to_graph6(g), g)


def run_verify(level_name: str = "quick") -> VerifyReport:
    if level_name not in LEVELS:
        raise ValueError(f"unknown verify level {level_name!r}, expected one of {sorted(LEVELS)}")
    level = LEVELS[level_name]
    report = VerifyReport(level=level.name)
    census = _census(level)
    randoms = list(random_graphs(level.random_graphs, 2, level.random_max_n))
    trees = [t for n in range(1, level.tree_n + 1) for t in free_trees(n)]
    forests = list(random_forests(level.random_forests, 2, level.forest_max_n))

    suites = [
        ("oracles", lambda: oracle_suite(census + randoms)),
        ("families", lambda: family_suite(level)),
        ("recursions", lambda: recursion_suite(trees, forests, max(level.forest_max_n, level.tree_n))),
        ("theorems", lambda: theorem_suite(census)),
    ]
    for name, run in suites:
        log_start(f"Suite {name} ({level.name})")
        suite = run()
        report.suites.append(suite)
        if suite.ok:
            log_ok(f"{name}: {suite.checked} checks passed")
        else:
            log_failure(f"{name}: {len(suite.failures)} of {suite.checked} checks failed")
            for line in suite.failures[:20]:
                log_failure(f"  {line}")
    return report
