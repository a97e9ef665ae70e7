"""Exhaustive and branch-and-bound searches with symmetry reduction.

The searches re-derive the small-case extremal values independently of the
closed-form formulas.  Families are built as strictly increasing sequences
of member words, which kills member-permutation duplicates for free; on top
of that, prefixes of length <= 2 are required to be canonical under the
applicable symmetry group.  Rejecting non-canonical prefixes is sound
because the lexicographically least representative of any orbit has only
canonical prefixes (inserting the image of a removed member into a smaller
sorted list keeps it smaller).

Feasibility is tracked incrementally: adding a member can only invalidate
witnesses of existing members, so each node carries per-member masks of
surviving witness sets, and a branch dies as soon as some mask empties.

Reports are deterministic and identical for any thread count: each depth-2
subtree is explored independently (no shared best across subtrees) and the
results merge by (max value, earliest subtree), so worker scheduling cannot
influence the outcome.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    CapacityError,
    Family,
    PERMUTATIONS_AND_SWITCHING,
    PERMUTATIONS_ONLY,
    SeparatorWitness,
    canonical_form,
    dual,
)

SYMMETRY_DEPTH = 2

_MODE_SEPARATOR = "separator"  # witness survives members it intersects the difference of
_MODE_OWNED_SUBSET = "owned-subset"  # witness must avoid being a subset of others


@dataclass(frozen=True)
class SearchReport:
    """Result of an extremal search.

    ``exhausted`` is True only when the full symmetry-reduced space was
    covered, making ``best`` a proven optimum; it is False whenever the wall
    budget expired first.  ``nodes_visited`` counts expanded nodes in the
    deterministic sequential exploration order.
    """

    best: int | None
    example: Family | None
    exhausted: bool
    nodes_visited: int
    wall_budget_ms: int | None = None
    example_pairs: tuple[SeparatorWitness, ...] | None = None
    levels: tuple[tuple[int, str], ...] | None = None


@dataclass(frozen=True)
class ExistenceResult:
    """Three-valued outcome of a fixed-size existence search."""

    family: Family | None
    exhausted: bool
    nodes_visited: int

    @property
    def status(self) -> str:
        if self.family is not None:
            return "found"
        return "proven-absent" if self.exhausted else "budget-exhausted"


@lru_cache(maxsize=None)
def _witness_tables(m: int, k: int, mode: str):
    """Per-word witness bookkeeping tables.

    Witness sets are all words of at most k bits.  ``kill[u]`` is the mask
    of witnesses killed by u, where u is the XOR of two members (separator
    mode: a witness survives only if it intersects every pairwise
    difference) or the other member itself (owned-subset mode: a witness
    dies when it is contained in another member).  ``init[w]`` is the mask
    of witnesses available to a lone member w.
    """
    seps = [w for w in range(1 << m) if w.bit_count() <= k]
    nsep = len(seps)
    full = (1 << nsep) - 1
    kill = []
    for u in range(1 << m):
        mask = 0
        for t, S in enumerate(seps):
            dead = (S & u) == 0 if mode == _MODE_SEPARATOR else (S & ~u) == 0
            if dead:
                mask |= 1 << t
        kill.append(mask)
    if mode == _MODE_SEPARATOR:
        init = [full] * (1 << m)
    else:
        # witnesses must sit inside the member itself
        init = [kill[w] for w in range(1 << m)]
    return tuple(kill), tuple(init)


@lru_cache(maxsize=None)
def _is_canonical_prefix(m: int, words: tuple[int, ...], group: str) -> bool:
    return canonical_form(Family(m, words), group).members == words


class _Budget:
    def __init__(self, budget_ms: int | None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.expired = False

    def check(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.expired = True
        return self.expired


class _Subtree:
    """DFS below one fixed prefix; self-contained so subtrees can run on any
    worker without affecting each other's pruning or node counts."""

    __slots__ = ("kill", "xor_mode", "target", "budget", "best", "best_members", "nodes", "found")

    def __init__(self, kill, xor_mode, target, budget):
        self.kill = kill
        self.xor_mode = xor_mode
        self.target = target
        self.budget = budget
        self.best = -1
        self.best_members = None
        self.nodes = 0
        self.found = None

    def run(self, members, survs, cands):
        self._dfs(list(members), list(survs), cands)

    def _dfs(self, members, survs, cands):
        self.nodes += 1
        if self.budget.expired or (self.nodes & 1023 == 0 and self.budget.check()):
            return
        s = len(members)
        if s > self.best:
            self.best = s
            self.best_members = tuple(members)
        target = self.target
        if target is not None:
            if s >= target:
                self.found = tuple(members)
                return
            if s + len(cands) < target:
                return
        elif s + len(cands) <= self.best:
            return
        kill = self.kill
        xor_mode = self.xor_mode
        for idx in range(len(cands)):
            w, alive = cands[idx]
            new_survs = []
            ok = True
            if xor_mode:
                for i in range(s):
                    ns = survs[i] & ~kill[members[i] ^ w]
                    if ns == 0:
                        ok = False
                        break
                    new_survs.append(ns)
            else:
                kr = ~kill[w]
                for i in range(s):
                    ns = survs[i] & kr
                    if ns == 0:
                        ok = False
                        break
                    new_survs.append(ns)
            if not ok:
                continue
            new_survs.append(alive)
            child = []
            if xor_mode:
                for t in range(idx + 1, len(cands)):
                    w2, a2 = cands[t]
                    a2n = a2 & ~kill[w2 ^ w]
                    if a2n:
                        child.append((w2, a2n))
            else:
                for t in range(idx + 1, len(cands)):
                    w2, a2 = cands[t]
                    a2n = a2 & kr
                    if a2n:
                        child.append((w2, a2n))
            members.append(w)
            self._dfs(members, new_survs, child)
            members.pop()
            if self.budget.expired or self.found is not None:
                return


def _search(m, k, mode, group, target, budget_ms, threads, use_symmetry):
    """Common driver: enumerate canonical alive prefixes of length <= 2, then
    run one independent subtree per prefix and merge deterministically."""
    kill, init = _witness_tables(m, k, mode)
    xor_mode = mode == _MODE_SEPARATOR
    budget = _Budget(budget_ms)
    nodes = 0
    best = 0
    best_members: tuple[int, ...] = ()
    found = None
    roots = []

    # breadth-limited walk over depths 0..2 (counted once, not per subtree)
    def shallow(members, survs, cands, depth):
        nonlocal nodes, best, best_members, found
        nodes += 1
        if found is not None or budget.check():
            return
        if len(members) > best:
            best = len(members)
            best_members = tuple(members)
        if target is not None and len(members) >= target:
            found = tuple(members)
            return
        if depth == SYMMETRY_DEPTH:
            roots.append((tuple(members), tuple(survs), cands))
            return
        for idx in range(len(cands)):
            w, alive = cands[idx]
            new_survs = []
            ok = True
            for i in range(len(members)):
                ns = survs[i] & ~kill[members[i] ^ w] if xor_mode else survs[i] & ~kill[w]
                if ns == 0:
                    ok = False
                    break
                new_survs.append(ns)
            if not ok:
                continue
            nxt = tuple(members) + (w,)
            if use_symmetry and not _is_canonical_prefix(m, nxt, group):
                continue
            new_survs.append(alive)
            child = []
            for t in range(idx + 1, len(cands)):
                w2, a2 = cands[t]
                a2n = a2 & ~kill[w2 ^ w] if xor_mode else a2 & ~kill[w]
                if a2n:
                    child.append((w2, a2n))
            shallow(list(nxt), new_survs, child, depth + 1)
            if found is not None:
                return

    base = [(w, init[w]) for w in range(1 << m) if init[w]]
    shallow([], [], base, 0)

    if found is not None or budget.expired:
        if found is not None:
            fam = Family(m, found)
        elif target is None:
            fam = Family(m, best_members)  # best-so-far on expiry
        else:
            fam = None
        return best, best_members, fam, not budget.expired, nodes

    if target is not None or threads <= 1:
        # sequential, with early exit on the first subtree that finds a target
        for members, survs, cands in roots:
            sub = _Subtree(kill, xor_mode, target, budget)
            sub.run(members, survs, cands)
            nodes += sub.nodes
            if sub.best > best:
                best = sub.best
                best_members = sub.best_members
            if sub.found is not None:
                return best, best_members, Family(m, sub.found), not budget.expired, nodes
            if budget.expired:
                break
    else:
        def work(root):
            members, survs, cands = root
            sub = _Subtree(kill, xor_mode, None, budget)
            sub.run(members, survs, cands)
            return sub
        with ThreadPoolExecutor(max_workers=threads) as pool:
            subs = list(pool.map(work, roots))
        for sub in subs:
            nodes += sub.nodes
            if sub.best > best:
                best = sub.best
                best_members = sub.best_members
    if target is not None:
        return best, best_members, None, not budget.expired, nodes
    return best, best_members, Family(m, best_members), not budget.expired, nodes


def max_nice_size(
    m: int,
    k: int,
    budget_ms: int | None = None,
    threads: int = 1,
    use_symmetry: bool = True,
) -> SearchReport:
    """Largest family of distinct subsets of an m-ground in which every
    member has a separator of size <= k, by exhaustive symmetry-reduced DFS.

    The example is the lexicographically least optimum visited; the result
    is identical for any thread count.
    """
    _check_mk(m, k, m_cap=6)
    best, _, fam, exhausted, nodes = _search(
        m, k, _MODE_SEPARATOR, PERMUTATIONS_AND_SWITCHING,
        None, budget_ms, threads, use_symmetry,
    )
    return SearchReport(best, fam, exhausted, nodes, wall_budget_ms=budget_ms)


def exists_nice_of_size(
    m: int,
    k: int,
    target_n: int,
    budget_ms: int | None = None,
    use_symmetry: bool = True,
) -> ExistenceResult:
    """Decision form of max_nice_size with early exit on the first witness."""
    _check_mk(m, k, m_cap=6)
    if target_n < 0:
        raise ValueError(f"target_n must be >= 0, got {target_n}")
    if target_n > 1 << m:
        return ExistenceResult(None, True, 0)  # more members than distinct subsets
    _, _, fam, exhausted, nodes = _search(
        m, k, _MODE_SEPARATOR, PERMUTATIONS_AND_SWITCHING,
        target_n, budget_ms, 1, use_symmetry,
    )
    return ExistenceResult(fam, exhausted, nodes)


def min_m_hyperseparating(
    n: int,
    k: int,
    m_max: int,
    budget_ms: int | None = None,
    threads: int = 1,
) -> SearchReport:
    """Smallest m <= m_max carrying a nice-for-k family of n distinct
    subsets; by duality this is the minimum k-hyperseparating system size.

    The example is the primal system (the dual of the found family).  Levels
    below ceil(log2 n) cannot hold n distinct subsets and are skipped.
    """
    del threads  # level scan is sequential so reports stay deterministic
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m_max > 6:
        raise CapacityError(f"m_max {m_max} exceeds the exhaustive cap of 6")
    if n > 1 << m_max:
        raise ValueError(f"n = {n} exceeds 2^m_max = {1 << m_max}")
    budget = _Budget(budget_ms)
    nodes = 0
    levels: list[tuple[int, str]] = []
    for m in range(1, m_max + 1):
        if n > 1 << m:
            levels.append((m, "infeasible"))
            continue
        remaining = None
        if budget.deadline is not None:
            remaining = max(0, int((budget.deadline - time.monotonic()) * 1000))
        res = exists_nice_of_size(m, k, n, budget_ms=remaining)
        nodes += res.nodes_visited
        levels.append((m, res.status))
        if res.family is not None:
            exhausted = all(st in ("infeasible", "proven-absent") for _, st in levels[:-1])
            return SearchReport(
                m, dual(res.family), exhausted, nodes,
                wall_budget_ms=budget_ms, levels=tuple(levels),
            )
        if res.status == "budget-exhausted":
            break
    exhausted = all(st in ("infeasible", "proven-absent") for _, st in levels) and len(
        levels
    ) == m_max
    return SearchReport(
        None, None, exhausted, nodes, wall_budget_ms=budget_ms, levels=tuple(levels)
    )


def max_unique_subset_family(
    m: int,
    k: int,
    budget_ms: int | None = None,
    threads: int = 1,
    use_symmetry: bool = True,
) -> SearchReport:
    """Largest family of distinct subsets where each member owns a subset of
    size <= k contained in no other member.

    Symmetry reduction uses relabelings only; switching does not preserve
    the ownership property.
    """
    _check_mk(m, k, m_cap=5)
    best, _, fam, exhausted, nodes = _search(
        m, k, _MODE_OWNED_SUBSET, PERMUTATIONS_ONLY,
        None, budget_ms, threads, use_symmetry,
    )
    return SearchReport(best, fam, exhausted, nodes, wall_budget_ms=budget_ms)


def max_pair_family(m: int, k: int) -> SearchReport:
    """Largest family of distinct (separator, key) pairs with per-key
    Sperner separators of size <= k.

    Keys constrain nothing across groups, so the optimum decomposes as an
    independent maximum antichain per key, each found by brute force.
    """
    if not 1 <= k <= 2:
        raise ValueError(f"k must be 1 or 2, got {k}")
    if not 1 <= m <= 6:
        raise CapacityError(f"m must be in 1..6, got {m}")
    total = 0
    nodes = 0
    pairs: list[SeparatorWitness] = []
    for key in range(1 << m):
        if key.bit_count() > k:
            continue
        cands = [
            S
            for S in range(1 << m)
            if S & key == key and S.bit_count() <= k
        ]
        chosen, n2 = _max_antichain(cands)
        nodes += n2
        total += len(chosen)
        pairs.extend(SeparatorWitness(S, key) for S in chosen)
    return SearchReport(
        total, None, True, nodes, example_pairs=tuple(pairs)
    )


def _max_antichain(words: list[int]) -> tuple[list[int], int]:
    words = sorted(words)
    best: list[int] = []
    nodes = 0

    def ext(chosen: list[int], idx: int):
        nonlocal best, nodes
        nodes += 1
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (len(words) - idx) <= len(best):
            return
        for t in range(idx, len(words)):
            w = words[t]
            if all(w & ~c != 0 and c & ~w != 0 for c in chosen):
                chosen.append(w)
                ext(chosen, t + 1)
                chosen.pop()

    ext([], 0)
    return best, nodes


def _check_mk(m: int, k: int, m_cap: int) -> None:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m > m_cap:
        raise CapacityError(f"m = {m} exceeds the exhaustive-search cap of {m_cap}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
