"""Decision oracles with certificates for every separation property.

Each oracle returns a Certificate that is truthy on success and carries
either per-element/per-member witnesses or a concrete counterexample.  All
tie-breaking is (size, numeric word value), so results are reproducible
bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Family, SeparatorWitness, dual

SEPARATING = "separating"
COMPLETELY_SEPARATING = "completely-separating"
HYPERCOMPLETELY = "hypercompletely-separating"
HYPERSEPARATING = "hyperseparating"
NICE = "nice"


@dataclass(frozen=True)
class Certificate:
    """Outcome of a separation check.

    On success, ``witnesses`` holds one certifying object per ground element
    (primal checks) or per member (dual checks).  On failure, ``failure``
    holds the counterexample: an element, a member index, or a pair.
    """

    prop: str
    ok: bool
    k: int | None = None
    witnesses: tuple = ()
    failure: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PairFamilyViolation:
    """Why a separator/key pair family is invalid.  Falsy by design."""

    kind: str  # "duplicate" | "oversized" | "containment"
    key: int | None
    separators: tuple[int, ...]
    message: str

    def __bool__(self) -> bool:
        return False


def _require_k(k: int) -> None:
    # k = 0 is rejected rather than defined: a size-0 separator only exists
    # for a single-member family.
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _signatures(f: Family) -> list[int]:
    # like dual(f).members but without the 64-member capacity cap
    sigs = []
    for v in range(f.ground_size):
        bit = 1 << v
        s = 0
        for i, w in enumerate(f.members):
            if w & bit:
                s |= 1 << i
        sigs.append(s)
    return sigs


def words_of_size(m: int, size: int):
    """All words with `size` bits among the low m, in ascending word order."""
    if size == 0:
        yield 0
        return
    if size > m:
        return
    limit = 1 << m
    w = (1 << size) - 1
    while w < limit:
        yield w
        u = w & -w
        v = w + u
        w = v | (((w ^ v) // u) >> 2)


def is_separating(f: Family) -> Certificate:
    """Some member splits every pair of ground elements.

    Equivalent to all element signatures being pairwise distinct; witnesses
    are the signatures, failure is a pair of elements sharing one.
    """
    sigs = _signatures(f)
    seen: dict[int, int] = {}
    for v, s in enumerate(sigs):
        if s in seen:
            return Certificate(SEPARATING, False, failure=(seen[s], v))
        seen[s] = v
    return Certificate(SEPARATING, True, witnesses=tuple(sigs))


def is_completely_separating(f: Family) -> Certificate:
    """For every ordered pair (v, v2), some member contains v but not v2.

    Witnesses store, per element v, the lowest distinguishing member index
    against each other element; failure is the first bad ordered pair.
    """
    sigs = _signatures(f)
    n = f.ground_size
    wit = []
    for v in range(n):
        row = []
        for v2 in range(n):
            if v2 == v:
                continue
            d = sigs[v] & ~sigs[v2]
            if d == 0:
                return Certificate(COMPLETELY_SEPARATING, False, failure=(v, v2))
            row.append((v2, (d & -d).bit_length() - 1))
        wit.append(tuple(row))
    return Certificate(COMPLETELY_SEPARATING, True, witnesses=tuple(wit))


def is_k_hypercompletely_separating(f: Family, k: int) -> Certificate:
    """Every ground element is the exact intersection of <= k members.

    Repeating a member never changes an intersection, so witnesses are
    nonempty subfamilies of at most k distinct members; the stored witness
    per element is minimal in (size, index order).  Failure is the first
    element with no witness.
    """
    _require_k(k)
    nm = len(f.members)
    wit = []
    for v in range(f.ground_size):
        target = 1 << v
        found = None
        for size in range(1, min(k, nm) + 1):
            for idxs in combinations(range(nm), size):
                acc = f.members[idxs[0]]
                for t in idxs[1:]:
                    acc &= f.members[t]
                if acc == target:
                    found = idxs
                    break
            if found is not None:
                break
        if found is None:
            return Certificate(HYPERCOMPLETELY, False, k=k, failure=v)
        wit.append(found)
    return Certificate(HYPERCOMPLETELY, True, k=k, witnesses=tuple(wit))


def find_separator(d: Family, i: int, k: int) -> SeparatorWitness | None:
    """Deterministic separator for member i of a dual family, or None.

    Scans candidate sets S by (size, numeric word value) over sizes 0..k and
    returns the first S whose intersection with member i differs from its
    intersection with every other member.  Returns None when no separator
    exists (in particular when member i has a duplicate).
    """
    if not 0 <= i < len(d.members):
        raise ValueError(f"member index {i} out of range for {len(d.members)} members")
    _require_k(k)
    m = d.ground_size
    wi = d.members[i]
    others = [w for j, w in enumerate(d.members) if j != i]
    for size in range(0, k + 1):
        for S in words_of_size(m, size):
            key = wi & S
            if all(w & S != key for w in others):
                return SeparatorWitness(S, key)
    return None


def is_nice(d: Family, k: int) -> Certificate:
    """Every member of the dual family has a separator of size <= k."""
    _require_k(k)
    wits = []
    for i in range(len(d.members)):
        w = find_separator(d, i, k)
        if w is None:
            return Certificate(NICE, False, k=k, failure=i)
        wits.append(w)
    return Certificate(NICE, True, k=k, witnesses=tuple(wits))


def is_k_hyperseparating(f: Family, k: int) -> Certificate:
    """Every element is pinned down by its pattern on some <= k members.

    Decided through the dual: the witness separator indexes the witness
    member sets, and the key says which of them must contain the element.
    """
    cert = is_nice(dual(f), k)
    return Certificate(
        HYPERSEPARATING, cert.ok, k=k, witnesses=cert.witnesses, failure=cert.failure
    )


def pair_family_valid(pairs, m: int, k: int):
    """Validate a family of (separator, key) pairs on an m-element ground.

    True iff all pairs are distinct, every separator has at most k elements,
    and for each fixed key the separators carrying it form a Sperner family.
    Returns a falsy PairFamilyViolation naming the offending key and
    separators otherwise.  Malformed pairs (key not inside separator,
    separator outside the ground) raise.
    """
    _require_k(k)
    seen = set()
    by_key: dict[int, list[int]] = {}
    for p in pairs:
        if p.key & ~p.separator:
            raise ValueError(
                f"malformed pair: key {p.key:#x} not contained in separator {p.separator:#x}"
            )
        if p.separator < 0 or p.separator >> m:
            raise ValueError(
                f"separator {p.separator:#x} uses indices beyond ground size {m}"
            )
        t = (p.separator, p.key)
        if t in seen:
            return PairFamilyViolation(
                "duplicate", p.key, (p.separator,),
                f"pair (separator {p.separator:#x}, key {p.key:#x}) appears twice",
            )
        seen.add(t)
        if p.separator.bit_count() > k:
            return PairFamilyViolation(
                "oversized", p.key, (p.separator,),
                f"separator {p.separator:#x} has more than {k} elements",
            )
        by_key.setdefault(p.key, []).append(p.separator)
    for key, seps in by_key.items():
        for a in range(len(seps)):
            for b in range(len(seps)):
                if a != b and seps[a] & ~seps[b] == 0:
                    return PairFamilyViolation(
                        "containment", key, (seps[a], seps[b]),
                        f"key {key:#x}: separator {seps[a]:#x} contained in {seps[b]:#x}",
                    )
    return True


def check_separator_witness(d: Family, i: int, witness: SeparatorWitness, k: int) -> bool:
    """Independent full-scan re-validation of one separator witness."""
    S = witness.separator
    if S < 0 or S >> d.ground_size or S.bit_count() > k:
        return False
    if witness.key != d.members[i] & S:
        return False
    return all(w & S != witness.key for j, w in enumerate(d.members) if j != i)


def recheck_certificate(f: Family, cert: Certificate) -> bool:
    """Re-validate every witness of a successful certificate by full scan.

    Independent of the oracles' own search order: each stored witness is
    checked against all members/elements from scratch.
    """
    if not cert.ok:
        raise ValueError("can only recheck a successful certificate")
    if cert.prop == SEPARATING:
        sigs = _signatures(f)
        return (
            len(cert.witnesses) == f.ground_size
            and list(cert.witnesses) == sigs
            and len(set(sigs)) == len(sigs)
        )
    if cert.prop == COMPLETELY_SEPARATING:
        if len(cert.witnesses) != f.ground_size:
            return False
        for v, row in enumerate(cert.witnesses):
            seen = set()
            for v2, idx in row:
                w = f.members[idx]
                if not (w >> v) & 1 or (w >> v2) & 1:
                    return False
                seen.add(v2)
            if seen != set(range(f.ground_size)) - {v}:
                return False
        return True
    if cert.prop == HYPERCOMPLETELY:
        if len(cert.witnesses) != f.ground_size:
            return False
        for v, idxs in enumerate(cert.witnesses):
            if not 1 <= len(idxs) <= cert.k or len(set(idxs)) != len(idxs):
                return False
            acc = f.members[idxs[0]]
            for t in idxs[1:]:
                acc &= f.members[t]
            if acc != 1 << v:
                return False
        return True
    if cert.prop == NICE:
        return len(cert.witnesses) == len(f.members) and all(
            check_separator_witness(f, i, w, cert.k)
            for i, w in enumerate(cert.witnesses)
        )
    if cert.prop == HYPERSEPARATING:
        d = dual(f)
        return len(cert.witnesses) == f.ground_size and all(
            check_separator_witness(d, v, w, cert.k)
            for v, w in enumerate(cert.witnesses)
        )
    raise ValueError(f"unknown certificate property {cert.prop!r}")
