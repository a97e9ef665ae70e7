"""Explicit constructions and the constructive proof devices.

Every constructor returns a family that passes its target oracle; the sizes
match the closed-form formulas in ``bounds`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Family, dual, family_from_words, is_proper, is_sperner, new_family, switch_set
from .verify import is_nice, words_of_size
from .bounds import binom, k_prime, min_m_hcs, spencer_min

CASE_KEYS_DIFFER_BY_ONE = "SharedSeparatorKeysDifferByOne"
CASE_KEYS_DIFFER_BY_TWO = "SharedSeparatorKeysDifferByTwo"
CASE_SINGLETON_SEPARATOR = "SingletonSeparator"
CASE_NO_REDUCTION = "NoReduction"


@dataclass(frozen=True)
class ReductionOutcome:
    """Which case of the size-bound case analysis applied, and its result.

    ``reduced`` (absent for NoReduction) lives on one fewer ground element
    and has been re-verified nice for the same k.
    """

    case: str
    reduced: Family | None
    removed_members: int


def _require_n2(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def binary_separating(n: int) -> Family:
    """Separating system from binary digits: member i holds the ground
    elements whose i-th bit is one.  ceil(log2 n) members."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t = (n - 1).bit_length()
    words = []
    for i in range(t):
        w = 0
        for j in range(n):
            if (j >> i) & 1:
                w |= 1 << j
        words.append(w)
    return family_from_words(n, words)


def _subset_assignment(m: int, j: int, n: int) -> list[tuple[int, ...]]:
    """First n j-subsets of range(m) in index order, fixed up so that every
    ground index is covered (an uncovered index would yield an empty member
    in the dual and an off-by-one in the size claim)."""
    subs = list(combinations(range(m), j))
    if n > len(subs):
        raise ValueError(f"cannot pick {n} distinct {j}-subsets of {m} elements")
    chosen = subs[:n]
    covered = set()
    for s in chosen:
        covered.update(s)
    if j == 0 or len(covered) == m:
        return chosen
    # dedicate the least subset through each index, then refill in order
    dedicated: list[tuple[int, ...]] = []
    for u in range(m):
        for s in subs:
            if u in s and s not in dedicated:
                dedicated.append(s)
                break
    fill = [s for s in subs if s not in dedicated]
    out = (dedicated + fill)[:n]
    covered = set()
    for s in out:
        covered.update(s)
    assert covered == set(range(m)), "subset assignment failed to cover the ground"
    return out


def _dual_of_assigned_subsets(n: int, m: int, j: int) -> Family:
    subs = _subset_assignment(m, j, n)
    words = []
    for i in range(m):
        w = 0
        for v, s in enumerate(subs):
            if i in s:
                w |= 1 << v
        words.append(w)
    return family_from_words(n, words)


def spencer_completely_separating(n: int) -> Family:
    """Minimum completely separating system: assign each element a distinct
    middle-layer subset and dualize."""
    _require_n2(n)
    m = spencer_min(n)
    return _dual_of_assigned_subsets(n, m, m // 2)


def k_hcs_minimal(n: int, k: int) -> Family:
    """Minimum k-hypercompletely separating system: assign each element a
    distinct k'-subset and dualize.  Exactly min_m_hcs(n, k) members."""
    _require_n2(n)
    m = min_m_hcs(n, k)
    return _dual_of_assigned_subsets(n, m, k_prime(m, k))


_NICE_SMALL = {
    1: [[], [0]],
    2: [[], [0], [1], [0, 1]],
    3: [[0], [1], [2], [0, 1], [0, 2], [1, 2]],
    4: [[], [0], [1], [0, 2], [1, 3], [0, 2, 3], [1, 2, 3], [0, 1, 2, 3]],
}


def nice_small_m(m: int) -> Family:
    """The explicit size-2m families on ground m <= 4 in which every member
    has a separator of size at most 2."""
    if m not in _NICE_SMALL:
        raise ValueError(f"m must be in 1..4, got {m}")
    return new_family(m, _NICE_SMALL[m])


def hyperseparating_minimal_2(n: int) -> Family:
    """2-hyperseparating system of the exact minimum size f2_exact(n).

    For n <= 10 this is the dual of a size-2m nice family on m = ceil(n/2)
    elements: the explicit small families up to m = 4, and the family of all
    2-subsets for m = 5 (each member is its own separator).  The last member
    is dropped when n is odd; removing a member can only relax the
    uniqueness constraints, so niceness survives.  For n >= 11 the
    k-hypercompletely-separating construction is already optimal.
    """
    _require_n2(n)
    if n >= 11:
        return k_hcs_minimal(n, 2)
    m = (n + 1) // 2
    if m == 5:
        d = new_family(5, [list(s) for s in combinations(range(5), 2)])
    else:
        d = nice_small_m(m)
    if n % 2:
        d = Family(d.ground_size, d.members[:-1])
    return dual(d)


def antichain_lift(f: Family) -> Family:
    """Replace the minimum-size layer by all its immediate supersets.

    Requires a proper, nonempty Sperner family whose minimum member size l
    satisfies l + 1 < ground_size - l.  Each minimum-layer member is then
    contained in ground_size - l supersets while each superset covers at
    most l + 1 of them, so the result is strictly larger; it is Sperner
    again because no surviving member can compare with the new layer.
    """
    if not f.members:
        raise ValueError("family is empty")
    if not is_proper(f):
        raise ValueError("family has duplicate members")
    if not is_sperner(f):
        raise ValueError("family is not Sperner")
    m = f.ground_size
    lvl = min(w.bit_count() for w in f.members)
    if lvl + 1 >= m - lvl:
        raise ValueError(
            f"counting condition fails: l+1 = {lvl + 1} is not below m-l = {m - lvl}"
        )
    low = [w for w in f.members if w.bit_count() == lvl]
    keep = [w for w in f.members if w.bit_count() != lvl]
    lifted = set()
    for w in low:
        for t in range(m):
            if not (w >> t) & 1:
                lifted.add(w | (1 << t))
    return Family(m, tuple(keep + sorted(lifted)))


def _drop_ground_bit(w: int, bit: int) -> int:
    below = bit - 1
    return (w & below) | ((w >> 1) & ~below)


def _delete_members(f: Family, gone) -> list[int]:
    return [w for i, w in enumerate(f.members) if i not in gone]


def proof_step_reduction(d: Family, k: int = 2) -> ReductionOutcome:
    """One step of the size-bound case analysis on a nice family.

    Looks for a 2-set that separates two distinct members (checking each
    member's full separator set, not just the canonical one), preferring key
    difference one over two; failing that, a singleton separator.  The
    chosen case is normalized by switching, the touched members and ground
    element(s) are deleted, and the reduced family is re-verified nice.
    With no applicable case, asserts |members| <= C(ground_size, 2).
    """
    if k != 2:
        raise ValueError("the case analysis is specific to k = 2")
    if d.ground_size < 2:
        raise ValueError(f"ground_size must be >= 2, got {d.ground_size}")
    if not is_proper(d):
        raise ValueError("family has duplicate members")
    if not is_nice(d, 2):
        raise ValueError("family is not nice for k = 2")
    m, words, n = d.ground_size, d.members, len(d.members)

    def separated_by(S: int) -> list[int]:
        out = []
        for i in range(n):
            key = words[i] & S
            if all(words[j] & S != key for j in range(n) if j != i):
                out.append(i)
        return out

    shared = []
    for S in words_of_size(m, 2):
        idxs = separated_by(S)
        if len(idxs) >= 2:
            shared.append((S, idxs))
    for want in (1, 2):
        for S, idxs in shared:
            for a, b in combinations(idxs, 2):
                if ((words[a] ^ words[b]) & S).bit_count() == want:
                    return _reduce_shared(d, S, a, b, want)
    for S in words_of_size(m, 1):
        hit = separated_by(S)
        if hit:
            return _reduce_singleton(d, S, hit[0])
    assert n <= binom(m, 2), "no case applies yet the family exceeds C(m, 2)"
    return ReductionOutcome(CASE_NO_REDUCTION, None, 0)


def _reverify(reduced: Family) -> Family:
    cert = is_nice(reduced, 2)
    if not cert:
        raise AssertionError(
            f"reduced family failed the niceness re-check at member {cert.failure}"
        )
    return reduced


def _reduce_shared(d: Family, S: int, a: int, b: int, diff: int) -> ReductionOutcome:
    words = d.members
    ka, kb = words[a] & S, words[b] & S
    if diff == 1:
        big = a if ka.bit_count() > kb.bit_count() else b
        # switching S minus the larger key turns the keys into S and S-minus-
        # difference; the element both keys then share can be deleted
        sw = switch_set(d, S & ~words[big])
        drop = S & ~(words[a] ^ words[b])
        keep = _delete_members(sw, (a, b))
        # after normalization only the two deleted members contained it
        assert all(w & drop == 0 for w in keep)
        reduced = Family(
            d.ground_size - 1, tuple(_drop_ground_bit(w, drop) for w in keep)
        )
        return ReductionOutcome(CASE_KEYS_DIFFER_BY_ONE, _reverify(reduced), 2)
    # keys are complementary in S: normalize to (S, empty), delete both
    # separator elements, and record "had x but not y" on a fresh element
    sw = switch_set(d, S & ~words[a])
    x_bit = S & -S
    y_bit = S ^ x_bit
    keep = _delete_members(sw, (a, b))
    out = []
    for w in keep:
        z = bool(w & x_bit) and not (w & y_bit)
        w2 = _drop_ground_bit(w & ~x_bit & ~y_bit, x_bit)
        if z:
            w2 |= 1 << (y_bit.bit_length() - 2)  # the fresh element reuses y's slot
        out.append(w2)
    reduced = Family(d.ground_size - 1, tuple(out))
    return ReductionOutcome(CASE_KEYS_DIFFER_BY_TWO, _reverify(reduced), 2)


def _reduce_singleton(d: Family, S: int, i: int) -> ReductionOutcome:
    sw = d if d.members[i] & S else switch_set(d, S)
    keep = _delete_members(sw, (i,))
    # member i was the unique one containing the separator element
    assert all(w & S == 0 for w in keep)
    reduced = Family(d.ground_size - 1, tuple(_drop_ground_bit(w, S) for w in keep))
    return ReductionOutcome(CASE_SINGLETON_SEPARATOR, _reverify(reduced), 1)
