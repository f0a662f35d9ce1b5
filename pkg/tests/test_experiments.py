import random

from degreelists.core import LOOPDIGRAPH
from degreelists.experiments import (
    EXPERIMENTS,
    balanced_lists,
    digraph_transfer,
    exponential_family,
    graph_lists,
    left_transfer,
    loop_transfer,
    minconvex,
    random_permutation_invariance,
    run_experiment,
)


def test_universe_sizes():
    # n=1: sums 0,1 -> 1+1 lists; n=2, entries 0..2: 1+4+9+4+1
    assert sum(1 for _ in balanced_lists(2, LOOPDIGRAPH)) == 2 + 19
    assert all(max(v) <= 2 for v in graph_lists(3))
    assert all(sum(v) % 2 == 0 for v in graph_lists(5))


def test_digraph_weak_form_finds_known_equality():
    rep = digraph_transfer(max_n=4)
    assert rep.passed and rep.equalities
    before_after = {(r[0], r[1]) for r in rep.equalities}
    assert (((2, 0), (2, 2), (2, 1), (0, 3)), ((2, 0), (2, 2), (1, 1), (1, 3))) in before_after


def test_reports_are_deterministic():
    assert loop_transfer(max_n=3).to_tsv() == loop_transfer(max_n=3).to_tsv()


def test_parallel_report_equals_serial():
    assert left_transfer(jobs=2).to_tsv() == left_transfer(jobs=1).to_tsv()


def test_tsv_header_names_theorem():
    for name in ("exponential-family", "minconvex"):
        tsv = run_experiment(name).to_tsv()
        assert tsv.splitlines()[0] == f"# theorem\t{name}"
    assert set(EXPERIMENTS) >= {"loop-transfer", "graph-transfer", "opposed-dominance", "permutation-invariance"}


def test_exponential_and_minconvex_pass():
    assert exponential_family().passed
    assert minconvex().passed


def test_sampled_invariance():
    rep = random_permutation_invariance(random.Random(7), lists=5, perms=3)
    assert rep.passed and rep.checked == 15


def test_remaining_experiments_pass():
    for name in ("loop-majorization", "graph-transfer", "opposed-dominance", "digraph-lex"):
        rep = run_experiment(name)
        assert rep.passed and rep.checked > 0, rep.summary()
