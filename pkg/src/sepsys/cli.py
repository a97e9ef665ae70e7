"""Command-line surface: verification, construction, bounds, search, tables.

Family documents travel on stdin/stdout in two formats: a JSON object
{"ground_size": m, "sets": [[indices]], ...} and a terse text format whose
first line is "m n" followed by n rows of m '0'/'1' characters (columns are
ground elements, rows are members).  Output is byte-deterministic for a
fixed command line.

Exit codes: 0 success/PASS, 1 property FAIL or table mismatch, 2 usage or
input error, 3 internal self-verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, construct, search, verify
from .core import (
    Family,
    PERMUTATIONS_AND_SWITCHING,
    PERMUTATIONS_ONLY,
    SeparatorWitness,
    bits,
    canonical_form,
    dual,
    member_lists,
    new_family,
    switch,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_SELFCHECK = 3

BUDGET_ENV = "SEPSYS_BUDGET_MS"


class SelfCheckError(Exception):
    """A constructed family failed its own oracle; emitting it would be a bug."""


def parse_family(text: str) -> Family:
    """Parse either document format (sniffed on the first non-space char)."""
    stripped = text.lstrip()
    if not stripped:
        raise ValueError("empty input document")
    if stripped[0] == "{":
        return parse_family_json(text)
    return parse_family_text(text)


def parse_family_json(text: str) -> Family:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid JSON document: {e}") from None
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    if "ground_size" not in doc or "sets" not in doc:
        raise ValueError("document needs 'ground_size' and 'sets' fields")
    gs = doc["ground_size"]
    sets = doc["sets"]
    if not isinstance(gs, int) or isinstance(gs, bool):
        raise ValueError("'ground_size' must be an integer")
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise ValueError("'sets' must be a list of index lists")
    for pos, s in enumerate(sets):
        for idx in s:
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise ValueError(f"member {pos}: index {idx!r} is not an integer")
    return new_family(gs, sets)


def parse_family_text(text: str) -> Family:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty input document")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"line 1: expected 'm n', got {lines[0]!r}")
    try:
        m, n = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"line 1: expected two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} member rows, got {len(lines) - 1}")
    rows = []
    for t, ln in enumerate(lines[1:], start=2):
        if len(ln) != m or any(c not in "01" for c in ln):
            raise ValueError(f"line {t}: expected {m} characters of 0/1, got {ln!r}")
        rows.append([i for i, c in enumerate(ln) if c == "1"])
    return new_family(m, rows)


def emit_family(
    f: Family,
    fmt: str = "json",
    role: str | None = None,
    witnesses: list[tuple[int, SeparatorWitness]] | None = None,
) -> str:
    if fmt == "text":
        lines = [f"{f.ground_size} {len(f.members)}"]
        for w in f.members:
            lines.append("".join("1" if (w >> i) & 1 else "0" for i in range(f.ground_size)))
        return "\n".join(lines)
    doc: dict = {"ground_size": f.ground_size, "sets": member_lists(f)}
    if role is not None:
        doc["role"] = role
    if witnesses is not None:
        doc["witnesses"] = [
            {"member_index": i, "separator": bits(w.separator), "key": bits(w.key)}
            for i, w in witnesses
        ]
    return json.dumps(doc, separators=(",", ":"))


def _fmt_set(word: int) -> str:
    return "{" + ",".join(str(i) for i in bits(word)) + "}"


def _read_input(args) -> Family:
    if getattr(args, "input", None):
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse_family(text)


def _need_k(args) -> int:
    if args.k is None:
        raise ValueError(f"--k is required for property {args.property!r}")
    return args.k


def cmd_verify(args) -> int:
    f = _read_input(args)
    prop = args.property
    if prop == "separating":
        cert = verify.is_separating(f)
    elif prop == "completely":
        cert = verify.is_completely_separating(f)
    elif prop == "hcs":
        cert = verify.is_k_hypercompletely_separating(f, _need_k(args))
    elif prop == "hs":
        cert = verify.is_k_hyperseparating(f, _need_k(args))
    else:  # nice; the input family is read as a dual family
        cert = verify.is_nice(f, _need_k(args))
    if not cert:
        print(f"FAIL {prop}: counterexample {cert.failure}")
        return EXIT_FAIL
    print(f"PASS {prop}" + (f" k={cert.k}" if cert.k is not None else ""))
    _print_witnesses(f, cert)
    return EXIT_OK


def _print_witnesses(f: Family, cert) -> None:
    if cert.prop == verify.SEPARATING:
        for v, sig in enumerate(cert.witnesses):
            print(f"  element {v}: signature {_fmt_set(sig)}")
    elif cert.prop == verify.COMPLETELY_SEPARATING:
        for v, row in enumerate(cert.witnesses):
            pieces = " ".join(f"{v}|{v2}->set{idx}" for v2, idx in row)
            print(f"  element {v}: {pieces}")
    elif cert.prop == verify.HYPERCOMPLETELY:
        for v, idxs in enumerate(cert.witnesses):
            print(f"  element {v}: intersection of members {list(idxs)}")
    elif cert.prop == verify.NICE:
        for i, w in enumerate(cert.witnesses):
            print(
                f"  member {i} {_fmt_set(f.members[i])}: separator {_fmt_set(w.separator)}"
                f" key {_fmt_set(w.key)}"
            )
    elif cert.prop == verify.HYPERSEPARATING:
        for v, w in enumerate(cert.witnesses):
            print(
                f"  element {v}: witness members {bits(w.separator)},"
                f" contained in exactly {bits(w.key)}"
            )


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "binary":
        fam = construct.binary_separating(_need_n(args))
        cert = verify.is_separating(fam)
        role = "primal"
    elif kind == "spencer":
        fam = construct.spencer_completely_separating(_need_n(args))
        cert = verify.is_completely_separating(fam)
        role = "primal"
    elif kind == "hcs":
        if args.k is None:
            raise ValueError("--k is required for kind 'hcs'")
        fam = construct.k_hcs_minimal(_need_n(args), args.k)
        cert = verify.is_k_hypercompletely_separating(fam, args.k)
        role = "primal"
    elif kind == "hs2":
        fam = construct.hyperseparating_minimal_2(_need_n(args))
        cert = verify.is_k_hyperseparating(fam, 2)
        role = "primal"
    else:  # nice-small
        if args.m is None:
            raise ValueError("--m is required for kind 'nice-small'")
        fam = construct.nice_small_m(args.m)
        cert = verify.is_nice(fam, 2)
        role = "dual"
    if not cert:
        raise SelfCheckError(f"construction {kind} failed its oracle at {cert.failure}")
    wits = None
    if kind == "nice-small":
        wits = list(enumerate(cert.witnesses))
    print(emit_family(fam, args.format, role=role, witnesses=wits))
    return EXIT_OK


def _need_n(args) -> int:
    if args.n is None:
        raise ValueError("--n is required")
    return args.n


def cmd_bounds(args) -> int:
    n, k = _need_n(args), args.k if args.k is not None else 2
    pair = bounds.f_bounds(n, k)
    tag = pair.lower_source + (", clamped" if pair.lower_clamped else "")
    print(f"{pair.lower} ≤ f({n},{k}) ≤ {pair.upper} [{tag}]")
    return EXIT_OK


def cmd_dual(args) -> int:
    print(emit_family(dual(_read_input(args)), args.format))
    return EXIT_OK


def cmd_switch(args) -> int:
    if args.v is None:
        raise ValueError("--v is required for switch")
    print(emit_family(switch(_read_input(args), args.v), args.format))
    return EXIT_OK


def cmd_canon(args) -> int:
    group = (
        PERMUTATIONS_AND_SWITCHING if args.group == "perm+switch" else PERMUTATIONS_ONLY
    )
    print(emit_family(canonical_form(_read_input(args), group), args.format))
    return EXIT_OK


def _budget_ms(args) -> int | None:
    if args.budget_ms is not None:
        return args.budget_ms
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return None


def cmd_search(args) -> int:
    problem = args.problem
    budget = _budget_ms(args)
    sym = not args.no_symmetry
    k = args.k if args.k is not None else 2
    if problem == "g":
        if args.m is None:
            raise ValueError("--m is required for problem 'g'")
        rep = search.max_nice_size(args.m, k, budget, threads=args.threads, use_symmetry=sym)
        print(f"g({args.m},{k}) = {rep.best} ({_status(rep.exhausted)})")
        if k >= 3:
            print("note: no known exact reference for k >= 3; value is search evidence")
        print(f"nodes: {rep.nodes_visited}")
        if rep.example is not None:
            print(emit_family(rep.example, args.format, role="dual"))
    elif problem == "exists":
        if args.m is None or args.n is None:
            raise ValueError("--m and --n are required for problem 'exists'")
        res = search.exists_nice_of_size(args.m, k, args.n, budget, use_symmetry=sym)
        print(f"exists(m={args.m},k={k},n={args.n}): {res.status}")
        print(f"nodes: {res.nodes_visited}")
        if res.family is not None:
            print(emit_family(res.family, args.format, role="dual"))
        elif not res.exhausted:
            return EXIT_FAIL
    elif problem == "min-m":
        rep = search.min_m_hyperseparating(_need_n(args), k, args.m_max, budget)
        for m, status in rep.levels or ():
            print(f"  m={m}: {status}")
        if rep.best is None:
            print(f"f({args.n},{k}) not found up to m_max={args.m_max} ({_status(rep.exhausted)})")
            print(f"nodes: {rep.nodes_visited}")
            # a proven absence is a definitive answer; only an expired budget fails
            return EXIT_OK if rep.exhausted else EXIT_FAIL
        print(f"f({args.n},{k}) = {rep.best} ({_status(rep.exhausted)})")
        print(f"nodes: {rep.nodes_visited}")
        print(emit_family(rep.example, args.format, role="primal"))
    elif problem == "unique-subset":
        if args.m is None:
            raise ValueError("--m is required for problem 'unique-subset'")
        rep = search.max_unique_subset_family(
            args.m, k, budget, threads=args.threads, use_symmetry=sym
        )
        print(f"max-unique-subset({args.m},{k}) = {rep.best} ({_status(rep.exhausted)})")
        print(f"nodes: {rep.nodes_visited}")
        print(emit_family(rep.example, args.format))
    else:  # pair-family
        if args.m is None:
            raise ValueError("--m is required for problem 'pair-family'")
        rep = search.max_pair_family(args.m, k)
        print(f"max-pair-family({args.m},{k}) = {rep.best} ({_status(rep.exhausted)})")
        print(f"nodes: {rep.nodes_visited}")
        doc = [
            {"separator": bits(w.separator), "key": bits(w.key)}
            for w in rep.example_pairs
        ]
        print(json.dumps({"pairs": doc}, separators=(",", ":")))
    return EXIT_OK


def _status(exhausted: bool) -> str:
    return "exhausted" if exhausted else "budget-exhausted"


def cmd_table(args) -> int:
    n_max = args.n_max
    check_up_to = args.check_search_up_to
    if n_max > 200:
        raise ValueError(f"--n-max is capped at 200, got {n_max}")
    if check_up_to > 12:
        raise ValueError(f"--check-search-up-to is capped at 12, got {check_up_to}")
    bad = 0
    for n in range(2, n_max + 1):
        f2 = bounds.f2_exact(n)
        pair = bounds.f_bounds(n, 2)
        line = f"{n:>3}  {f2:>2}  [{pair.lower} ≤ {f2} ≤ {pair.upper}]"
        if n <= check_up_to:
            rep = search.min_m_hyperseparating(n, 2, 6, _budget_ms(args))
            mark = "✓" if rep.best == f2 else "✗"
            if rep.best != f2:
                bad += 1
            line += f"  search:{rep.best} {mark}"
        print(line)
    return EXIT_FAIL if bad else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sepsys",
        description="Construct, verify, and exhaustively search extremal separating set systems.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, input_doc=False):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        if input_doc:
            sp.add_argument("--input", help="read the family document from a file instead of stdin")

    sp = sub.add_parser("verify", help="check a separation property of a family document")
    sp.add_argument("--property", required=True, choices=("separating", "completely", "hcs", "hs", "nice"))
    sp.add_argument("--k", type=int)
    common(sp, input_doc=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("construct", help="emit a self-verified construction")
    sp.add_argument("--kind", required=True, choices=("binary", "spencer", "hcs", "hs2", "nice-small"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("bounds", help="print the lower/upper sandwich for f(n,k)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("search", help="run an extremal search")
    sp.add_argument("--problem", required=True, choices=("g", "exists", "min-m", "unique-subset", "pair-family"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--m-max", type=int, default=6)
    sp.add_argument("--budget-ms", type=int)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--no-symmetry", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("table", help="reproduce the f(n,2) table with bound and search checks")
    sp.add_argument("--n-max", type=int, default=30)
    sp.add_argument("--check-search-up-to", type=int, default=0)
    sp.add_argument("--budget-ms", type=int)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("dual", help="dualize a family document")
    common(sp, input_doc=True)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("switch", help="complement one ground element across all members")
    sp.add_argument("--v", type=int)
    common(sp, input_doc=True)
    sp.set_defaults(func=cmd_switch)

    sp = sub.add_parser("canon", help="canonical form under the chosen symmetry group")
    sp.add_argument("--group", choices=("perm", "perm+switch"), default="perm+switch")
    common(sp, input_doc=True)
    sp.set_defaults(func=cmd_canon)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SelfCheckError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_SELFCHECK
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
