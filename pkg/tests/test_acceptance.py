"""Acceptance suite: one recorded PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in
the terminal summary under "acceptance criteria".
"""

import random
import time
import timeit

from degreelists.construct import realize
from degreelists.core import DIGRAPH, GRAPH, LOOPDIGRAPH, Transfer
from degreelists.count import _count_directed, _count_symmetric, count, count_realizations, lower_bound
from degreelists.experiments import (
    balanced_lists,
    digraph_lex,
    digraph_transfer,
    exponential_family,
    graph_lists,
    graph_transfer,
    left_transfer,
    loop_transfer,
    opposed_dominance,
    random_permutation_invariance,
)
from degreelists.extremal import opposed_sort, staircase_family, verify_extremal_max
from degreelists.feasibility import (
    brute_force_realizable,
    erdos_gallai,
    explain,
    fulkerson_chen_anstee,
    gale_ryser,
    is_feasible,
)
from degreelists.majorize import apply_transfer, is_majorized, l1_half, muirhead_path, pascal_inequality

# time limits, seconds
FIXTURE_CALL_LIMIT = 1e-3
ORACLE_LIMIT = 300
COUNT_FIXTURE_LIMIT = 1.0
MONOTONICITY_LIMIT = 900
EXTREMAL_LIMIT = 600

SEED = 20240601


def _best_time(fn, repeat=20):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def oracle_universe():
    """(list, kind) for every list of the declared oracle universes."""
    for pairs in balanced_lists(4, LOOPDIGRAPH):
        yield pairs, LOOPDIGRAPH
    for pairs in balanced_lists(4, DIGRAPH):
        yield pairs, DIGRAPH
    for d in graph_lists(6, cap=5, nonincreasing=False):
        yield d, GRAPH


def test_criterion_1_feasibility_fixtures(criterion):
    opposed = opposed_sort(((2, 1), (1, 0), (0, 2)))
    checks = {
        "erdos_gallai((3,3,1,1))": (lambda: erdos_gallai((3, 3, 1, 1)), False),
        "gale_ryser(((3,3),(1,3),(2,0)))": (lambda: gale_ryser(((3, 3), (1, 3), (2, 0))), False),
        "fca(((2,1),(1,0),(0,2)))": (lambda: fulkerson_chen_anstee(((2, 1), (1, 0), (0, 2))), False),
        "fca(opposed)": (lambda: fulkerson_chen_anstee(opposed), True),
    }
    ok = opposed == ((2, 0), (1, 1), (0, 2))
    worst = 0.0
    for name, (fn, expected) in checks.items():
        ok &= fn() is expected
        worst = max(worst, _best_time(fn))
    threshold = explain(((3, 3), (1, 3), (2, 0)), LOOPDIGRAPH).threshold
    ok &= threshold == ((2, 3), (2, 3), (2, 0))
    ok &= worst < FIXTURE_CALL_LIMIT
    criterion(1, ok, f"threshold={threshold} slowest call {worst * 1e3:.3f} ms (limit 1 ms)")


def test_criterion_2_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    checked, disagreements = 0, []
    for values, kind in oracle_universe():
        checked += 1
        if is_feasible(values, kind) != brute_force_realizable(values, kind):
            disagreements.append((values, kind))
    elapsed = time.perf_counter() - t0
    criterion(2, not disagreements and elapsed <= ORACLE_LIMIT,
              f"{checked} lists, {len(disagreements)} disagreements, {elapsed:.1f} s (limit {ORACLE_LIMIT} s)")


def test_criterion_3_counting_fixtures(criterion):
    _count_directed.cache_clear()
    _count_symmetric.cache_clear()
    t0 = time.perf_counter()
    got = (
        count_realizations(((4, 1), (2, 1), (0, 1), (0, 1), (0, 1), (0, 1)), LOOPDIGRAPH).exact,
        count_realizations(((3, 1), (3, 1), (0, 1), (0, 1), (0, 1), (0, 1)), LOOPDIGRAPH).exact,
        count_realizations(((2, 0), (2, 2), (2, 1), (0, 3)), DIGRAPH).exact,
        count_realizations(((2, 0), (2, 2), (1, 1), (1, 3)), DIGRAPH).exact,
        count_realizations(((1, 1), (1, 1), (1, 1)), DIGRAPH).exact,
    )
    elapsed = time.perf_counter() - t0
    criterion(3, got == (15, 20, 1, 1, 2) and elapsed < COUNT_FIXTURE_LIMIT,
              f"counts {got} in {elapsed * 1e3:.1f} ms")


def test_criterion_4_monotonicity_suite(criterion):
    t0 = time.perf_counter()
    reports = [
        loop_transfer(),
        digraph_transfer(),
        digraph_lex(),
        graph_transfer(),
        left_transfer(),
        opposed_dominance(),
    ]
    elapsed = time.perf_counter() - t0
    weak = reports[1]
    ok = all(r.passed for r in reports) and len(weak.equalities) > 0 and elapsed <= MONOTONICITY_LIMIT
    summary = "; ".join(f"{r.theorem} {r.checked}/{len(r.violations)}" for r in reports)
    criterion(4, ok, f"checked/violations: {summary}; weak-form equalities {len(weak.equalities)}; "
                     f"{elapsed:.1f} s")


def test_criterion_5_extremal_suite(criterion):
    t0 = time.perf_counter()
    cases = ((4, 6, LOOPDIGRAPH), (3, 3, DIGRAPH), (4, 4, DIGRAPH), (5, 4, GRAPH), (4, 6, GRAPH))
    results = [verify_extremal_max(n, m, kind) for n, m, kind in cases]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results) and elapsed <= EXTREMAL_LIMIT
    detail = "; ".join(f"({r.n},{r.m},{r.kind.value}) ref={r.reference_count} max={r.max_count}" for r in results)
    criterion(5, ok, f"{detail}; {elapsed:.2f} s")


def test_criterion_6_exponential_family(criterion):
    rows = []
    ok = True
    for n in (4, 5, 6):
        _, target = staircase_family(n)
        exact = count(target, LOOPDIGRAPH)
        bound = lower_bound(target).lower_bound
        ok &= exact >= 2 ** (n - 2) and bound <= exact
        rows.append(f"n={n} N1={exact} >= {2 ** (n - 2)}, bound {bound}")
    # lower_bound <= exact on every loop-digraphic list of the small universe
    for pairs in balanced_lists(4, LOOPDIGRAPH):
        if gale_ryser(pairs):
            ok &= lower_bound(pairs).lower_bound <= count(pairs, LOOPDIGRAPH)
    ok &= exponential_family().passed
    criterion(6, ok, "; ".join(rows))


def _random_majorization_pair(rng):
    n = rng.randint(1, 8)
    ap = sorted((rng.randint(0, 8) for _ in range(n)), reverse=True)
    x = list(ap)
    for _ in range(rng.randint(0, 16)):
        moves = [(i, j) for i in range(n) for j in range(i + 1, n) if x[i] >= x[j] + 2]
        if not moves:
            break
        i, j = rng.choice(moves)
        x[i] -= 1
        x[j] += 1
        x.sort(reverse=True)
    return tuple(x), tuple(ap)


def test_criterion_7_muirhead_path(criterion):
    rng = random.Random(SEED)
    ok = True
    nontrivial = 0
    for _ in range(1000):
        a, ap = _random_majorization_pair(rng)
        assert is_majorized(a, ap)
        path = muirhead_path(a, ap)
        nontrivial += path.kappa > 0
        ok &= path.kappa == l1_half(a, ap)
        cur = ap
        for t, nxt in zip(path.steps, path.intermediates):
            ok &= cur[t.i] >= cur[t.j] + 2 and t.i < t.j
            cur = apply_transfer(cur, t)
            ok &= cur == nxt and is_majorized(a, cur) and is_majorized(cur, ap)
        ok &= cur == a
    fixture = muirhead_path((2, 2, 2, 0), (4, 2, 0, 0)).steps
    ok &= fixture == (Transfer(0, 2), Transfer(0, 2))
    criterion(7, ok, f"1000 pairs ({nontrivial} nontrivial), fixture {[str(t) for t in fixture]}")


def test_criterion_8_pascal(criterion):
    ok = True
    cases = 0
    for c in range(2, 13):
        for ell in range(1, c):
            lhs, rhs = pascal_inequality(c, ell)
            cases += 1
            ok &= lhs >= rhs and ((lhs > rhs) == (ell >= 2))
    criterion(8, ok, f"{cases} cases, c <= 12")


def test_criterion_9_realization_soundness(criterion):
    checked, bad = 0, []
    for values, kind in oracle_universe():
        if not is_feasible(values, kind):
            if realize(values, kind) is not None:
                bad.append(values)
            continue
        m = realize(values, kind)
        checked += 1
        got = m.col_sums() if kind is GRAPH else m.margins()
        if got != tuple(values) or not m.satisfies(kind):
            bad.append(values)
    golden = (
        realize(((2, 3), (2, 3), (2, 0)), LOOPDIGRAPH).to_text() == "111\n111\n000"
        and realize(((1, 1), (1, 1), (1, 1)), DIGRAPH).to_text() == "010\n001\n100"
        and realize((3, 3, 1, 1), GRAPH) is None
    )
    criterion(9, not bad and golden, f"{checked} feasible lists realized, {len(bad)} failures, golden={golden}")


def test_criterion_10_permutation_invariance(criterion):
    rng = random.Random(SEED)
    rep = random_permutation_invariance(rng, lists=50, perms=20, max_n=4)
    first, second = ((2, 1), (1, 0), (0, 2)), ((2, 0), (1, 1), (0, 2))
    witness = (count(first, DIGRAPH), count(second, DIGRAPH))
    ok = rep.passed and rep.checked == 1000 and witness == (0, 1)
    criterion(10, ok, f"{rep.checked} comparisons, {len(rep.violations)} violations; digraph witness N2={witness}")
