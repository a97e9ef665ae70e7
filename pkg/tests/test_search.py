"""Searches re-derive extremal values; reports are deterministic and sound."""

from itertools import combinations

import pytest

from sepsys import (
    CapacityError,
    binom,
    dual,
    f2_exact,
    is_k_hyperseparating,
    is_nice,
    k_prime,
    pair_family_valid,
)
from sepsys.search import (
    exists_nice_of_size,
    max_nice_size,
    max_pair_family,
    max_unique_subset_family,
    min_m_hyperseparating,
)


# --- independent naive oracles (no masks, no symmetry, no pruning) -----------


def _naive_has_separator(words, i, k, m):
    for size in range(0, k + 1):
        for idxs in combinations(range(m), size):
            s = sum(1 << t for t in idxs)
            key = words[i] & s
            if all(words[j] & s != key for j in range(len(words)) if j != i):
                return True
    return False


def _naive_g(m, k):
    best = 0

    def ext(prefix, start):
        nonlocal best
        best = max(best, len(prefix))
        for w in range(start, 1 << m):
            nxt = prefix + [w]
            if all(_naive_has_separator(nxt, i, k, m) for i in range(len(nxt))):
                ext(nxt, w + 1)

    ext([], 0)
    return best


def _naive_owns(words, i, k, m):
    wi = words[i]
    for size in range(0, k + 1):
        for idxs in combinations(range(m), size):
            s = sum(1 << t for t in idxs)
            if s & ~wi:
                continue
            if all(s & ~words[j] for j in range(len(words)) if j != i):
                return True
    return False


def _naive_unique_max(m, k):
    best = 0

    def ext(prefix, start):
        nonlocal best
        best = max(best, len(prefix))
        for w in range(start, 1 << m):
            nxt = prefix + [w]
            if all(_naive_owns(nxt, i, k, m) for i in range(len(nxt))):
                ext(nxt, w + 1)

    ext([], 0)
    return best


# --- max_nice_size -----------------------------------------------------------


def test_max_nice_size_matches_naive_small():
    for m in range(0, 4):
        for k in (1, 2, 3):
            rep = max_nice_size(m, k)
            assert rep.best == _naive_g(m, k), (m, k)
            assert rep.exhausted


def test_max_nice_size_known_values():
    assert max_nice_size(2, 2).best == 4
    assert max_nice_size(4, 2).best == 8
    rep = max_nice_size(4, 2)
    assert rep.exhausted and len(rep.example) == 8
    assert is_nice(rep.example, 2)


def test_max_nice_size_m5(g5_report):
    assert g5_report.best == 10
    assert g5_report.exhausted
    assert is_nice(g5_report.example, 2)
    assert len(g5_report.example) == 10


def test_max_nice_size_symmetry_cross_check():
    for m in (0, 1, 2, 3):
        for k in (1, 2, 3):
            with_sym = max_nice_size(m, k, use_symmetry=True)
            without = max_nice_size(m, k, use_symmetry=False)
            assert with_sym.best == without.best, (m, k)


def test_max_nice_size_thread_count_invariance():
    one = max_nice_size(3, 2, threads=1)
    four = max_nice_size(3, 2, threads=4)
    assert (one.best, one.example, one.exhausted, one.nodes_visited) == (
        four.best,
        four.example,
        four.exhausted,
        four.nodes_visited,
    )


def test_max_nice_size_monotone_in_m_and_k():
    vals = {}
    for m in range(0, 5):
        for k in (1, 2, 3):
            vals[m, k] = max_nice_size(m, k).best
    for m in range(1, 5):
        for k in (1, 2, 3):
            assert vals[m, k] >= vals[m - 1, k]
    for m in range(0, 5):
        for k in (1, 2):
            assert vals[m, k + 1] >= vals[m, k]


def test_max_nice_size_budget_expiry():
    rep = max_nice_size(5, 2, budget_ms=0)
    assert not rep.exhausted
    assert rep.wall_budget_ms == 0


def test_max_nice_size_capacity_guard():
    with pytest.raises(CapacityError):
        max_nice_size(7, 2)
    with pytest.raises(ValueError):
        max_nice_size(3, 0)


# --- exists_nice_of_size -----------------------------------------------------


def test_exists_nice_examples():
    res = exists_nice_of_size(3, 2, 7)
    assert res.family is None and res.exhausted
    assert res.status == "proven-absent"

    res = exists_nice_of_size(4, 2, 8)
    assert res.family is not None and len(res.family) == 8
    assert is_nice(res.family, 2)
    assert res.status == "found"

    res = exists_nice_of_size(2, 2, 5)  # more members than subsets
    assert res.status == "proven-absent" and res.nodes_visited == 0


def test_exists_nice_budget_status():
    res = exists_nice_of_size(5, 2, 11, budget_ms=0)
    assert res.status == "budget-exhausted"


# --- min_m_hyperseparating ---------------------------------------------------


def test_min_m_examples():
    rep = min_m_hyperseparating(8, 2, 5)
    assert rep.best == 4 and rep.exhausted
    assert rep.example.ground_size == 8
    assert is_k_hyperseparating(rep.example, 2)

    rep = min_m_hyperseparating(3, 2, 3)
    assert rep.best == 2 and rep.exhausted


def test_min_m_duality_consistency_small():
    for n in range(2, 9):
        rep = min_m_hyperseparating(n, 2, 6)
        assert rep.best == f2_exact(n), n
        assert rep.exhausted
        # the found dual family is the dual of the emitted primal example
        assert is_nice(dual(rep.example), 2)


def test_min_m_not_found_report():
    rep = min_m_hyperseparating(9, 2, 4)  # f(9,2) = 5 > 4
    assert rep.best is None and rep.example is None
    assert rep.exhausted  # all levels proven absent
    assert rep.levels[-1] == (4, "proven-absent")


def test_min_m_validates_inputs():
    with pytest.raises(ValueError):
        min_m_hyperseparating(1, 2, 5)
    with pytest.raises(ValueError):
        min_m_hyperseparating(200, 2, 6)
    with pytest.raises(CapacityError):
        min_m_hyperseparating(8, 2, 7)


# --- max_unique_subset_family ------------------------------------------------


def test_max_unique_matches_naive():
    for m in range(1, 5):
        for k in (1, 2, 3):
            rep = max_unique_subset_family(m, k)
            assert rep.best == _naive_unique_max(m, k), (m, k)
            assert rep.exhausted


def test_max_unique_known_values():
    assert max_unique_subset_family(2, 2).best == 2
    assert max_unique_subset_family(3, 2).best == 3
    assert max_unique_subset_family(4, 2).best == 6
    rep = max_unique_subset_family(5, 2)
    assert rep.best == 10 == binom(5, k_prime(5, 2))
    # the example family really has the ownership property
    words = rep.example.members
    assert all(
        _naive_owns(words, i, 2, rep.example.ground_size) for i in range(len(words))
    )


def test_max_unique_capacity():
    with pytest.raises(CapacityError):
        max_unique_subset_family(6, 2)


def test_max_unique_agrees_with_binomial_formula():
    # the search independently confirms the closed form behind min_m_hcs
    for k in (1, 2, 3):
        for m in range(1, 6):
            rep = max_unique_subset_family(m, k)
            assert rep.exhausted
            assert rep.best == binom(m, k_prime(m, k)), (m, k)


# --- max_pair_family ---------------------------------------------------------


def _naive_pair_max(m, k):
    cand = []
    for s in range(1 << m):
        if s.bit_count() > k:
            continue
        sub = s
        while True:
            cand.append((s, sub))
            if sub == 0:
                break
            sub = (sub - 1) & s
    best = 0

    def compatible(chosen, p):
        s, key = p
        for s2, key2 in chosen:
            if (s2, key2) == (s, key):
                return False
            if key2 == key and (s & ~s2 == 0 or s2 & ~s == 0):
                return False
        return True

    def ext(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(cand) - start <= best:
            return
        for t in range(start, len(cand)):
            if compatible(chosen, cand[t]):
                chosen.append(cand[t])
                ext(chosen, t + 1)
                chosen.pop()

    ext([], 0)
    return best


def test_max_pair_family_matches_naive():
    for m in (2, 3):
        for k in (1, 2):
            assert max_pair_family(m, k).best == _naive_pair_max(m, k), (m, k)


def test_max_pair_family_known_values():
    assert max_pair_family(4, 2).best == 24
    assert max_pair_family(2, 1).best == 4
    assert max_pair_family(3, 1).best == 6
    # below the m >= 2k threshold the bound does not apply
    assert max_pair_family(2, 2).best == 5


def test_max_pair_family_examples_validate():
    for m, k in ((2, 1), (3, 1), (4, 2), (5, 2)):
        rep = max_pair_family(m, k)
        assert len(rep.example_pairs) == rep.best
        assert pair_family_valid(list(rep.example_pairs), m, k) is True


def test_max_pair_family_bound_direction():
    for k in (1, 2):
        for m in range(2 * k, 7):
            assert max_pair_family(m, k).best == (1 << k) * binom(m, k), (m, k)


def test_max_pair_family_validates_inputs():
    with pytest.raises(ValueError):
        max_pair_family(4, 3)
    with pytest.raises(CapacityError):
        max_pair_family(7, 2)
