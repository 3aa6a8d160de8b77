"""Command line front end: ``hiso <command> ...``.

Every command prints a report of ``key: value`` lines (or one JSON object
with ``--json``) and exits with 0 on success, 1 on a negative decision,
2 on bad input and 3 when a search or enumeration cap would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import __version__
from .analysis import commuting_set, search_half_isomorphisms, specialness, specialness_criteria
from .corpus import resolve_table
from .errors import CapExceededError, CommutativeInputError, HalfIsoError
from .groups import anti_automorphism_exists, half_groups, is_group, verify_prop22
from .infinite import LoopPair, find_phi_violation, nonspecial_witness_infinite
from .magma import (
    CayleyTable,
    Permutation,
    classify,
    is_associative,
    is_commutative,
    parse_permutation,
)
from .principal import (
    DEFAULT_R_CAP,
    are_half_isomorphic,
    enumerate_MI,
    iter_sigma_tables,
    log2_principal_groupoids,
    pair_partition,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class PowerOfTwo:
    exponent: int

    def __str__(self):
        return f"2^{self.exponent}"


@dataclass
class Report:
    items: list[tuple[str, Any]] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def add(self, key: str, value: Any) -> "Report":
        self.items.append((key, value))
        return self

    def render_text(self) -> str:
        lines = []
        for key, value in self.items:
            if isinstance(value, list):
                lines.append(f"{key}: {len(value)} item(s)")
                lines.extend(f"  {_text(v)}" for v in value)
            else:
                lines.append(f"{key}: {_text(value)}")
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        return json.dumps({k: _jsonable(v) for k, v in self.items}) + "\n"


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, tuple):
        return "(" + ",".join(map(str, value)) + ")"
    if isinstance(value, CayleyTable):
        return " | ".join(" ".join(map(str, row)) for row in value.entries.tolist())
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Permutation):
        return list(value.images)
    if isinstance(value, CayleyTable):
        return value.entries.tolist()
    if isinstance(value, PowerOfTwo):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _label(t: CayleyTable, arg: str) -> str:
    return t.name or arg


def cmd_check(args) -> Report:
    t = resolve_table(args.table)
    cls = classify(t)
    rep = Report()
    rep.add("table", _label(t, args.table)).add("order", t.n).add("class", cls.kind.value)
    if cls.is_loop:
        rep.add("identity", cls.identity)
    comm = is_commutative(t)
    rep.add("associative", is_associative(t)).add("commutative", comm)
    rep.add("K", commuting_set(t).size)
    log2_m = log2_principal_groupoids(t)
    rep.add("log2_M", log2_m).add("M", PowerOfTwo(log2_m))
    if not comm:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            part = pair_partition(t)
        rep.add("r", part.r)
        if cls.is_quasigroup:
            rep.add("N", PowerOfTwo(part.r))
            rep.add("min_class_size", min(part.sizes()))
    return rep


def _two(args):
    a, b = resolve_table(args.a), resolve_table(args.b)
    return a, b


def cmd_halfiso(args) -> Report:
    a, b = _two(args)
    rep = Report()
    rep.add("a", _label(a, args.a)).add("b", _label(b, args.b))
    if args.perm is not None:
        f = parse_permutation(args.perm, a.n)
        v = specialness(a, b, f)
        rep.add("perm", f).add("half_iso", v.is_half_iso)
        if v.is_half_iso:
            rep.add("special", v.is_special)
            rep.add("isomorphism", v.is_isomorphism).add("anti_isomorphism", v.is_anti_isomorphism)
            if v.nonspecial_witness is not None:
                rep.add("witness", v.nonspecial_witness)
            rep.add("criteria_agree", specialness_criteria(a, b, f).agree)
        rep.add("K_a", commuting_set(a).size).add("K_b", commuting_set(b).size)
        rep.exit_code = EXIT_OK if v.is_half_iso else EXIT_NEGATIVE
        return rep

    mode = "all" if args.all else "special_only" if args.special_only else "first"
    found = search_half_isomorphisms(a, b, mode)
    rep.add("mode", mode).add("count", len(found))
    if mode == "first":
        rep.add("perm", found[0] if found else None)
    else:
        rep.add("perms", found)
    rep.exit_code = EXIT_OK if found else EXIT_NEGATIVE
    return rep


def cmd_half_group(args) -> Report:
    t = resolve_table(args.table)
    g = half_groups(t)
    rep = Report()
    rep.add("table", _label(t, args.table)).add("order", t.n)
    rep.add("aut", len(g.aut)).add("ant", len(g.ant)).add("half_t", len(g.half_t))
    rep.add("half_s", len(g.half_s)).add("half", len(g.half)).add("index", g.index_mi)
    rep.add("half_is_group", is_group(g.half))
    try:
        anti = anti_automorphism_exists(t, g)
    except CommutativeInputError:
        anti = "commutative"
    rep.add("anti_automorphism", anti)
    rep.add("group_structure", verify_prop22(t, g))
    return rep


def cmd_principal(args) -> Report:
    t = resolve_table(args.table)
    rep = Report()
    rep.add("table", _label(t, args.table)).add("order", t.n)
    if is_commutative(t):
        raise CommutativeInputError("principal families need a noncommutative table")
    cls = classify(t)
    log2_m = log2_principal_groupoids(t)
    rep.add("K", commuting_set(t).size).add("log2_M", log2_m).add("M", PowerOfTwo(log2_m))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        part = pair_partition(t)
    rep.add("r", part.r)
    if cls.is_quasigroup:
        rep.add("N", PowerOfTwo(part.r))

    if args.mi:
        tables = enumerate_MI(t)
        rep.add("MI", len(tables)).add("tables", tables)
    elif args.max is not None:
        if not cls.is_quasigroup:
            raise HalfIsoError("principal h-quasigroups need a quasigroup")
        pairs = list(iter_sigma_tables(t, part, args.max))
        rep.add("listed", len(pairs))
        rep.add("sigmas", [str(s) for s, _ in pairs])
        rep.add("tables", [q for _, q in pairs])
    return rep


def cmd_hrelated(args) -> Report:
    a, b = _two(args)
    f = are_half_isomorphic(a, b, r_cap=args.r_cap)
    rep = Report()
    rep.add("a", _label(a, args.a)).add("b", _label(b, args.b))
    rep.add("half_isomorphic", f is not None)
    if f is not None:
        rep.add("perm", f)
    rep.exit_code = EXIT_OK if f is not None else EXIT_NEGATIVE
    return rep


def cmd_infinite_demo(args) -> Report:
    a, b = _two(args)
    f = Permutation.identity(a.n) if args.perm is None else parse_permutation(args.perm, a.n)
    p = LoopPair.build(a, b, f)
    rep = Report()
    rep.add("a", _label(a, args.a)).add("b", _label(b, args.b))
    rep.add("f", p.f).add("witness", p.witness)
    x, y = nonspecial_witness_infinite(p)
    rep.add("inverse_violation_a", str(x)).add("inverse_violation_b", str(y))
    rep.add("samples", args.samples).add("seed", args.seed)
    bad = find_phi_violation(p, args.samples, args.seed)
    rep.add("phi_half_automorphism", bad is None)
    if bad is not None:
        rep.add("counterexample_a", str(bad[0])).add("counterexample_b", str(bad[1]))
    rep.exit_code = EXIT_OK if bad is None else EXIT_NEGATIVE
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object")

    parser = argparse.ArgumentParser(prog="hiso", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="classify a table")
    p.add_argument("table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("halfiso", parents=[common], help="test or search half-isomorphisms")
    p.add_argument("a")
    p.add_argument("b")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--perm", help='image list "2 1 3" or cycles "(3 5 7)(4 6 8)"')
    g.add_argument("--all", action="store_true")
    g.add_argument("--first", action="store_true")
    g.add_argument("--special-only", action="store_true")
    p.set_defaults(func=cmd_halfiso)

    p = sub.add_parser("half-group", parents=[common], help="half-automorphism groups")
    p.add_argument("table")
    p.set_defaults(func=cmd_half_group)

    p = sub.add_parser("principal", parents=[common], help="principal h-groupoid families")
    p.add_argument("table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count-only", action="store_true")
    g.add_argument("--max", type=int, metavar="N", help="list the first N sigma tables")
    g.add_argument("--mi", action="store_true", help="list members isomorphic to the table")
    p.set_defaults(func=cmd_principal)

    p = sub.add_parser("hrelated", parents=[common], help="decide half-isomorphy of quasigroups")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--r-cap", type=int, default=DEFAULT_R_CAP)
    p.set_defaults(func=cmd_hrelated)

    p = sub.add_parser("infinite-demo", parents=[common], help="shift map on the product loop")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--perm")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_infinite_demo)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except CapExceededError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (HalfIsoError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(report.render_json() if args.json else report.render_text())
    return report.exit_code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
