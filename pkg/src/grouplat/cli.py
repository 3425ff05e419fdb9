"""Command line interface.

Subcommands mirror the library layers: ``universe`` for catalogs,
``op`` for the operator calculus, ``formation`` for residuals and
products, ``topology`` for the attached finite spaces, and ``verify``
for the standing criteria suite.

Exit codes: 0 on success, 1 when a check reports FAIL or a domain error
occurs, 2 for malformed expressions and bad usage. Informational lines
use the CHECK / WITNESS / NOTE prefixes; statuses are PASS, FAIL,
INCONCLUSIVE-TRUNCATION, and EXPERIMENTAL stamps where applicable.
"""

from __future__ import annotations

import argparse
import os
import sys

from .classes import class_from_text
from .errors import ExpressionError, GroupLatError, UnknownName
from .formations import (
    fitting_closure,
    formation_closure,
    gaschutz_product,
    residual,
    verify_formation,
)
from .operators import (
    check_additive,
    check_adjunction,
    check_axioms,
    check_leq,
    apply,
    parse_operator,
    render_operator,
)
from .topology import (
    build_preorder,
    connected_components_bfs,
    connected_components_union_find,
    homotopy_equivalent,
    operator_space_probe,
    stong_core,
    to_dot,
)
from .universe import (
    Universe,
    build_universe,
    catalog_counts,
    load_catalog,
    render_catalog,
    save_catalog,
)
from .verify import run_verification


def _resolve_universe(args) -> Universe:
    path = getattr(args, "catalog", None) or os.environ.get("GROUPLAT_CATALOG")
    if path:
        return load_catalog(path)
    return build_universe(args.max_order)


def _print_universe_summary(u: Universe) -> None:
    print(f"UNIVERSE max_order={u.max_order} count={len(u.entries)}")
    counts = catalog_counts(u)
    for order in sorted(counts):
        print(f"ORDER {order}: {counts[order]}")


# -- universe ---------------------------------------------------------------


def cmd_universe_build(args) -> int:
    _print_universe_summary(build_universe(args.max_order))
    return 0


def cmd_universe_info(args) -> int:
    u = _resolve_universe(args)
    if args.group is None:
        _print_universe_summary(u)
        return 0
    try:
        gid = u.name_index[args.group]
    except KeyError:
        raise UnknownName(f"no catalog entry named {args.group!r}") from None
    e = u.entries[gid]
    st = u.structure(gid)
    print(f"GROUP {e.name} id={gid} order={e.group.order}")
    flags = e.flags
    print(
        "FLAGS"
        f" abelian={flags.abelian} nilpotent={flags.nilpotent}"
        f" soluble={flags.soluble} p_group_for={flags.p_group_for}"
    )
    print("SUBGROUPS " + ", ".join(u.name(i) for i in sorted(st.subgroup_ids)))
    print("SUBNORMALS " + ", ".join(u.name(i) for i in sorted(st.subnormal_ids)))
    print("QUOTIENTS " + ", ".join(u.name(i) for i in sorted(st.quotient_ids)))
    print(
        "FRATTINI-QUOTIENTS "
        + ", ".join(u.name(i) for i in sorted(st.frattini_quotient_ids))
    )
    if st.unresolved_count:
        print(f"NOTE {st.unresolved_count} related classes fall outside this catalog")
    return 0


def cmd_universe_save(args) -> int:
    u = build_universe(args.max_order)
    save_catalog(u, args.out)
    size = os.path.getsize(args.out)
    print(f"SAVED {args.out} entries={len(u.entries)} bytes={size}")
    return 0


def cmd_universe_load(args) -> int:
    path = args.catalog or os.environ.get("GROUPLAT_CATALOG")
    if not path:
        print("ERROR universe load requires --catalog or GROUPLAT_CATALOG", file=sys.stderr)
        return 2
    u = load_catalog(path)
    _print_universe_summary(u)
    with open(path, "r", encoding="ascii") as fh:
        byte_exact = fh.read() == render_catalog(u)
    print(f"CHECK round trip byte-exact: {'PASS' if byte_exact else 'FAIL'}")
    return 0 if byte_exact else 1


# -- op -----------------------------------------------------------------------


def cmd_op_apply(args) -> int:
    u = _resolve_universe(args)
    x = class_from_text(args.cls, u)
    y = apply(parse_operator(args.op), x)
    print(f"RESULT {y.render()}")
    print(f"COUNT {len(y.ids)}")
    return 0


def cmd_op_axioms(args) -> int:
    u = _resolve_universe(args)
    rep = check_axioms(parse_operator(args.op), u, trials=args.trials, seed=args.seed)
    for law, ok in (
        ("preserves the empty class", rep.empty_preserved),
        ("extensive", rep.extensive),
        ("monotone", rep.monotone),
        ("idempotent", rep.idempotent),
    ):
        print(f"CHECK {rep.operator} {law}: {'PASS' if ok else 'FAIL'}")
    for w in rep.witnesses:
        print(f"WITNESS {w.law} on {w.input_render}: {w.detail}")
    print(
        f"NOTE {rep.classes_checked} classes and {rep.pairs_checked} nested pairs"
        f" over U_{u.max_order}"
    )
    return 0 if rep.is_closure else 1


def cmd_op_additive(args) -> int:
    u = _resolve_universe(args)
    v = check_additive(parse_operator(args.op), u, trials=args.trials, seed=args.seed)
    print(f"CHECK {v.operator} additive: {'PASS' if v.additive else 'FAIL'}")
    if v.witness:
        print(f"WITNESS X={v.witness[0]} Y={v.witness[1]} group {v.witness[2]}")
    print(f"NOTE {v.pairs_checked} pairs over U_{u.max_order}")
    return 0 if v.additive else 1


def cmd_op_leq(args) -> int:
    u = _resolve_universe(args)
    v = check_leq(
        parse_operator(args.left),
        parse_operator(args.right),
        u,
        headroom=args.headroom,
        seed=args.seed,
    )
    print(f"CHECK {v.left} below {v.right}: {v.status}")
    if v.witness:
        print(f"WITNESS on {v.witness[0]}: {v.witness[1]}")
    print(f"NOTE {v.detail}")
    return 1 if v.status == "FAIL" else 0


def cmd_op_adjunction(args) -> int:
    u = _resolve_universe(args)
    rep = check_adjunction(
        parse_operator(args.a), parse_operator(args.b), parse_operator(args.c),
        u, seed=args.seed,
    )
    print(
        f"CHECK join of {rep.lower_left} and {rep.lower_right} against {rep.upper}:"
        f" {'PASS' if rep.consistent else 'FAIL'}"
    )
    print(
        f"NOTE join_below={rep.join_below_upper} parts_below={rep.parts_below_upper}"
        f" join_dominates={rep.join_dominates_parts}"
    )
    return 0 if rep.consistent else 1


# -- formation -------------------------------------------------------------------


def cmd_formation_residual(args) -> int:
    u = _resolve_universe(args)
    f = class_from_text(args.formation, u)
    spec = verify_formation(f)
    if not spec.is_formation:
        print(
            f"NOTE the class is not a formation over U_{u.max_order}"
            f" (q_closed={spec.q_closed} r0_closed={spec.r0_closed})"
        )
    try:
        gid = u.name_index[args.group]
    except KeyError:
        raise UnknownName(f"no catalog entry named {args.group!r}") from None
    w = residual(f, gid)
    print(f"RESIDUAL {u.name(w.residual_id)}")
    print(f"QUOTIENT {u.name(w.quotient_id)}")
    print(f"CHECK quotient lies in the class: {'PASS' if w.quotient_in_class else 'FAIL'}")
    return 0 if w.quotient_in_class else 1


def cmd_formation_product(args) -> int:
    u = _resolve_universe(args)
    outer = verify_formation(class_from_text(args.a, u))
    inner = verify_formation(class_from_text(args.b, u))
    prod = gaschutz_product(outer, inner)
    print(f"RESULT {prod.render()}")
    print(f"COUNT {len(prod.ids)}")
    return 0


def cmd_formation_closure(args) -> int:
    u = _resolve_universe(args)
    out = formation_closure(class_from_text(args.cls, u))
    print(f"RESULT {out.render()}")
    print(f"COUNT {len(out.ids)}")
    return 0


def cmd_formation_fit(args) -> int:
    u = _resolve_universe(args)
    out = fitting_closure(class_from_text(args.cls, u))
    print(f"RESULT {out.render()}")
    print(f"COUNT {len(out.ids)}")
    return 0


# -- topology ----------------------------------------------------------------------


def cmd_topology_core(args) -> int:
    u = _resolve_universe(args)
    pre = build_preorder(u, args.relation)
    core = stong_core(pre)
    print(f"SPACE {args.relation} points={pre.n}")
    print(f"CORE size={core.size} survivors=" + ", ".join(core.core.names))
    if args.emit_dot:
        print(to_dot(core.core, f"{args.relation}-core"), end="")
    return 0


def cmd_topology_connected(args) -> int:
    u = _resolve_universe(args)
    pre = build_preorder(u, args.relation)
    bfs = connected_components_bfs(pre)
    uf = connected_components_union_find(pre)
    print(f"SPACE {args.relation} points={pre.n}")
    print(f"COMPONENTS bfs={bfs} union_find={uf}")
    print(f"CHECK the two algorithms agree: {'PASS' if bfs == uf else 'FAIL'}")
    return 0 if bfs == uf else 1


def cmd_topology_equiv(args) -> int:
    u = _resolve_universe(args)
    pa = build_preorder(u, args.a)
    pb = build_preorder(u, args.b)
    ok = homotopy_equivalent(pa, pb)
    print(f"CHECK {args.a} and {args.b} homotopy equivalent: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_topology_probe(args) -> int:
    u = _resolve_universe(args)
    probe = operator_space_probe(u, prime=args.prime)
    print(f"STATUS {probe.stamp}")
    print(f"SPACE points={probe.space.n} components={probe.components}")
    print("CORE " + ", ".join(sorted(probe.core_names)))
    return 0


# -- verify -------------------------------------------------------------------------


def cmd_verify(args) -> int:
    report = run_verification(max_order=args.max_order, seed=args.seed, trials=args.trials)
    print(report.render())
    return report.exit_status


# -- wiring -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=12,
                        help="bound for a freshly built universe (default 12)")
    common.add_argument("--catalog", help="catalog file to load instead of building")
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--trials", type=int, default=60)

    parser = argparse.ArgumentParser(
        prog="grouplat",
        description="closure operators, formations, and finite spaces over group catalogs",
    )
    top = parser.add_subparsers(dest="command", required=True)

    p_universe = top.add_parser("universe", help="build, inspect, save, load catalogs")
    sub = p_universe.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("build", parents=[common])
    p.set_defaults(func=cmd_universe_build)
    p = sub.add_parser("info", parents=[common])
    p.add_argument("--group", help="catalog entry name to describe")
    p.set_defaults(func=cmd_universe_info)
    p = sub.add_parser("save", parents=[common])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_universe_save)
    p = sub.add_parser("load", parents=[common])
    p.set_defaults(func=cmd_universe_load)

    p_op = top.add_parser("op", help="evaluate and check operator expressions")
    sub = p_op.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("apply", parents=[common])
    p.add_argument("--op", required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=cmd_op_apply)
    p = sub.add_parser("axioms", parents=[common])
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_op_axioms)
    p = sub.add_parser("additive", parents=[common])
    p.add_argument("--op", required=True)
    p.set_defaults(func=cmd_op_additive)
    p = sub.add_parser("leq", parents=[common])
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--headroom", type=int, default=1)
    p.set_defaults(func=cmd_op_leq)
    p = sub.add_parser("adjunction", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(func=cmd_op_adjunction)

    p_formation = top.add_parser("formation", help="residuals, products, closures")
    sub = p_formation.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("residual", parents=[common])
    p.add_argument("--formation", required=True)
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_formation_residual)
    p = sub.add_parser("product", parents=[common])
    p.add_argument("--a", required=True, help="outer class expression")
    p.add_argument("--b", required=True, help="inner class expression")
    p.set_defaults(func=cmd_formation_product)
    p = sub.add_parser("closure", parents=[common])
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=cmd_formation_closure)
    p = sub.add_parser("fit", parents=[common])
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=cmd_formation_fit)

    p_topology = top.add_parser("topology", help="finite spaces over the catalog")
    sub = p_topology.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("core", parents=[common])
    p.add_argument("--relation", required=True,
                   choices=("subgroup", "subnormal", "quotient"))
    p.add_argument("--emit-dot", action="store_true")
    p.set_defaults(func=cmd_topology_core)
    p = sub.add_parser("connected", parents=[common])
    p.add_argument("--relation", required=True,
                   choices=("subgroup", "subnormal", "quotient"))
    p.set_defaults(func=cmd_topology_connected)
    p = sub.add_parser("equiv", parents=[common])
    p.add_argument("--a", required=True, choices=("subgroup", "subnormal", "quotient"))
    p.add_argument("--b", required=True, choices=("subgroup", "subnormal", "quotient"))
    p.set_defaults(func=cmd_topology_equiv)
    p = sub.add_parser("probe", parents=[common])
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_topology_probe)

    p_verify = top.add_parser("verify", parents=[common],
                              help="run the standing verification criteria")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExpressionError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 2
    except GroupLatError as exc:
        print(f"ERROR {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
