"""The standing verification suite.

Nine numbered criteria probe the package against independent oracles
and against the calculus's own laws. Each criterion reports PASS or
FAIL plus detail lines; a FAIL is an honest negative finding, not
necessarily a code defect. In particular criterion 3 tests a claimed
additivity law for the formation closure that a small concrete
counterexample refutes, and it is expected to fail; the fitting half of
the same criterion passes.

Checks run at three universe tiers to balance strength and cost: an
exhaustive tier over every class of a tiny universe, a sampled tier at
a mid bound, and structural tiers at the requested bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classes import GroupClass, class_from_text, full_class
from .errors import GroupLatError
from .formations import (
    gaschutz_product,
    residual,
    residual_composition_check,
    residual_epi_commute_check,
    verify_formation,
)
from .operators import (
    Compose,
    Join,
    Meet,
    Primitive,
    all_classes,
    apply,
    check_additive,
    check_adjunction,
    check_axioms,
    check_leq,
    comparison_edges,
    fixture_classes,
    render_operator,
    sample_class,
)
from .oracles import (
    KNOWN_GROUP_COUNTS,
    brute_force_subgroups,
    enumerate_groups,
    join_q_r0_fixpoint,
    q_members_bruteforce,
    r0_members_bruteforce,
    subnormal_via_chains,
)
from .topology import (
    alexandrov_closure,
    build_preorder,
    connected_components_bfs,
    connected_components_union_find,
    homotopy_equivalent,
    operator_space_probe,
    stong_core,
)
from .universe import Universe, build_universe, catalog_counts

_TEN = ("Id", "S", "Q", "Sn", "R0", "N0", "D0", "EPhi", "Ep(2)", "CTop")
_ADDITIVE = ("Id", "S", "Q", "Sn", "EPhi", "Ep(2)", "Ep(3)", "CTop")
_NON_ADDITIVE = ("R0", "N0", "D0")


def _op(text: str):
    from .operators import parse_operator

    return parse_operator(text)


@dataclass
class CheckResult:
    criterion: int
    title: str
    status: str
    lines: list[str] = field(default_factory=list)

    def check(self, label: str, ok: bool, note: str | None = None) -> bool:
        verdict = "PASS" if ok else "FAIL"
        suffix = f" ({note})" if note else ""
        self.lines.append(f"CHECK {label}: {verdict}{suffix}")
        if not ok:
            self.status = "FAIL"
        return ok

    def witness(self, text: str) -> None:
        self.lines.append(f"WITNESS {text}")

    def note(self, text: str) -> None:
        self.lines.append(f"NOTE {text}")


@dataclass
class RunReport:
    bound: int
    seed: int
    trials: int
    results: list[CheckResult]

    @property
    def exit_status(self) -> int:
        return 1 if any(r.status == "FAIL" for r in self.results) else 0

    def render(self) -> str:
        out = [f"VERIFICATION bound={self.bound} seed={self.seed} trials={self.trials}"]
        for r in self.results:
            out.append(f"CRITERION {r.criterion} {r.status} {r.title}")
            out.extend(f"  {line}" for line in r.lines)
        passed = sum(1 for r in self.results if r.status == "PASS")
        failed = sum(1 for r in self.results if r.status == "FAIL")
        out.append(f"SUMMARY {passed} passed, {failed} failed")
        return "\n".join(out)


# -- criterion 1: closure axioms ------------------------------------------------


def check_closure_axioms(u_mid: Universe, u_small: Universe, trials: int,
                         seed: int) -> CheckResult:
    res = CheckResult(1, "the ten primitives are closure operators", "PASS")
    for text in _TEN:
        rep = check_axioms(_op(text), u_small, exhaustive=True)
        res.check(f"exhaustive axioms over U_{u_small.max_order} for {text}", rep.is_closure)
        if not rep.is_closure and rep.witnesses:
            w = rep.witnesses[0]
            res.witness(f"{w.law} on {w.input_render}: {w.detail}")
    for text in _TEN:
        rep = check_axioms(_op(text), u_mid, trials=trials, seed=seed)
        res.check(
            f"sampled axioms over U_{u_mid.max_order} for {text}",
            rep.is_closure,
            f"{rep.classes_checked} classes, {rep.pairs_checked} monotone pairs",
        )
        if not rep.is_closure and rep.witnesses:
            w = rep.witnesses[0]
            res.witness(f"{w.law} on {w.input_render}: {w.detail}")
    return res


# -- criterion 2: the additivity partition ----------------------------------------


def check_additivity_partition(u: Universe, trials: int, seed: int) -> CheckResult:
    res = CheckResult(2, "additivity holds exactly where expected", "PASS")
    for text in _ADDITIVE:
        v = check_additive(_op(text), u, trials=trials, seed=seed)
        res.check(f"{text} additive", v.additive, f"{v.pairs_checked} pairs")
        if not v.additive and v.witness:
            res.witness(f"X={v.witness[0]} Y={v.witness[1]} group {v.witness[2]}")
    for text in _NON_ADDITIVE:
        v = check_additive(_op(text), u, trials=trials, seed=seed)
        ok = (not v.additive) and v.witness == ("{1, C2}", "{1, C3}", "C6")
        res.check(f"{text} non-additive with the canonical witness", ok)
        if v.witness:
            res.witness(f"X={v.witness[0]} Y={v.witness[1]} group {v.witness[2]}")
    return res


# -- criterion 3: additivity of the two closure joins ------------------------------


def check_closure_join_additivity(u: Universe, trials: int, seed: int) -> CheckResult:
    res = CheckResult(
        3, "formation closure additive, fitting closure not", "PASS"
    )
    formation = Join(Primitive("Q"), Primitive("R0"))
    v = check_additive(formation, u, trials=trials, seed=seed)
    res.check("formation closure Q v R0 additive", v.additive, f"{v.pairs_checked} pairs")
    if not v.additive and v.witness:
        res.witness(f"X={v.witness[0]} Y={v.witness[1]} group {v.witness[2]}")
        res.note(
            "the closure of the union reaches the witness through a subdirect"
            " product of one member from each side, which neither one-sided"
            " closure can form"
        )
    fitting = Join(Primitive("Sn"), Primitive("N0"))
    w = check_additive(fitting, u, trials=trials, seed=seed)
    ok = (not w.additive) and w.witness == ("{1, C2}", "{1, C3}", "C6")
    res.check("fitting closure Sn v N0 non-additive with the canonical witness", ok)
    if w.witness:
        res.witness(f"X={w.witness[0]} Y={w.witness[1]} group {w.witness[2]}")
    return res


# -- criterion 4: residuals commute with epimorphic images --------------------------


def check_residual_lemma(u: Universe) -> CheckResult:
    res = CheckResult(4, "residuals commute with epimorphic images", "PASS")
    for text in ("abelian", "nilpotent", "soluble", "p-group(2)", "p-group(3)",
                 "elementary-abelian(2)"):
        spec = verify_formation(class_from_text(text, u))
        if not spec.is_formation:
            res.check(f"{text} verifies as a formation", False)
            continue
        checked, fails = residual_epi_commute_check(spec.cls)
        res.check(f"epi commutation for {text}", not fails, f"{checked} pairs")
        for f in fails[:2]:
            res.witness(f)
    return res


# -- criterion 5: the formation product is monoidal ---------------------------------


def check_monoidal_laws(u: Universe) -> CheckResult:
    res = CheckResult(5, "the formation product is monoidal", "PASS")
    ab = verify_formation(class_from_text("abelian", u))
    nil = verify_formation(class_from_text("nilpotent", u))
    p2 = verify_formation(class_from_text("p-group(2)", u))
    p3 = verify_formation(class_from_text("p-group(3)", u))
    unit = verify_formation(GroupClass(u, (0,)))
    res.check("the trivial class verifies as a formation", unit.is_formation)
    for name, spec in (("abelian", ab), ("nilpotent", nil), ("p-group(2)", p2)):
        left = gaschutz_product(unit, spec)
        right = gaschutz_product(spec, unit)
        res.check(f"unit laws for {name}", left.ids == spec.cls.ids == right.ids)
    lhs = gaschutz_product(verify_formation(gaschutz_product(ab, p2)), p3)
    rhs = gaschutz_product(ab, verify_formation(gaschutz_product(p2, p3)))
    res.check("associativity on (abelian, p-group(2), p-group(3))", lhs.ids == rhs.ids)
    lhs2 = gaschutz_product(verify_formation(gaschutz_product(nil, ab)), ab)
    rhs2 = gaschutz_product(nil, verify_formation(gaschutz_product(ab, ab)))
    res.check("associativity on (nilpotent, abelian, abelian)", lhs2.ids == rhs2.ids)
    for oname, outer, iname, inner in (
        ("abelian", ab, "abelian", ab),
        ("p-group(2)", p2, "p-group(3)", p3),
        ("nilpotent", nil, "abelian", ab),
    ):
        checked, fails = residual_composition_check(outer, inner)
        res.check(
            f"composite residual for {oname} o {iname}", not fails, f"{checked} groups"
        )
        for f in fails[:2]:
            res.witness(f)
    return res


# -- criterion 6: the operator lattice ------------------------------------------------


def check_operator_lattice(u_mid: Universe, u_small: Universe, seed: int) -> CheckResult:
    res = CheckResult(6, "meets, joins, and the bounding operators", "PASS")
    pool = all_classes(u_small)
    memo: dict[tuple[str, frozenset], frozenset] = {}

    def ap(text: str, x: GroupClass) -> frozenset:
        key = (text, x.ids)
        got = memo.get(key)
        if got is None:
            got = apply(_op(text), x).ids
            memo[key] = got
        return got

    for text in _TEN:
        ok_lo = all(x.ids <= ap(text, x) for x in pool)
        ok_hi = all(ap(text, x) <= ap("CTop", x) for x in pool)
        res.check(f"Id below {text} below CTop over U_{u_small.max_order}", ok_lo and ok_hi)

    rng = random.Random(seed)
    samples = fixture_classes(u_mid) + [sample_class(u_mid, rng) for _ in range(20)]
    fixture_ops = [
        (Primitive("S"), Primitive("Q")),
        (Primitive("Sn"), Primitive("R0")),
        (Primitive("D0"), Primitive("EPhi")),
        (Primitive("Q"), Primitive("Ep", 2)),
    ]
    for a, b in fixture_ops:
        meet_ab, meet_ba = Meet(a, b), Meet(b, a)
        join_ab, join_ba = Join(a, b), Join(b, a)
        ok = True
        for x in samples:
            ma = apply(meet_ab, x).ids
            ok &= ma == apply(meet_ba, x).ids
            ok &= ma <= apply(a, x).ids and ma <= apply(b, x).ids
            ja = apply(join_ab, x).ids
            ok &= ja == apply(join_ba, x).ids
            ok &= apply(a, x).ids <= ja and apply(b, x).ids <= ja
            ok &= apply(Meet(a, join_ab), x).ids == apply(a, x).ids
            ok &= apply(Join(a, meet_ab), x).ids == apply(a, x).ids
        res.check(
            f"lattice identities for {render_operator(a)} and {render_operator(b)}", ok,
            f"{len(samples)} classes",
        )

    triples = [
        ("S", "Q", "CTop"),
        ("Sn", "Q", "CTop"),
        ("S", "Q", "S v Q"),
        ("S", "Q", "S"),
        ("Sn", "S", "S"),
    ]
    for a_t, b_t, c_t in triples:
        rep = check_adjunction(_op(a_t), _op(b_t), _op(c_t), u_mid, samples=10, seed=seed)
        res.check(
            f"join of {a_t} and {b_t} is least below {c_t}: consistent", rep.consistent,
            f"join_below={rep.join_below_upper} parts_below={rep.parts_below_upper}",
        )
    return res


# -- criterion 7: the comparison diagram -----------------------------------------------


def check_comparison_diagram(u: Universe, seed: int, headroom: int = 2) -> CheckResult:
    res = CheckResult(7, "the comparison edges produce no counterexample", "PASS")
    passes = inconclusive = 0
    for lo, hi in comparison_edges(primes=(2, 3)):
        v = check_leq(lo, hi, u, samples=10, headroom=headroom, seed=seed)
        if v.status == "FAIL":
            res.check(f"{v.left} below {v.right}", False)
            if v.witness:
                res.witness(f"on {v.witness[0]}: {v.witness[1]} escapes the right side")
        elif v.status == "PASS":
            passes += 1
        else:
            inconclusive += 1
            res.note(f"{v.left} below {v.right}: {v.status}, {v.detail}")
    res.check(
        f"all {passes + inconclusive} edges free of failures",
        res.status == "PASS",
        f"{passes} PASS, {inconclusive} INCONCLUSIVE-TRUNCATION",
    )
    return res


# -- criterion 8: the attached finite spaces --------------------------------------------


def check_topology(bounds: list[int], u_small: Universe, seed: int) -> CheckResult:
    res = CheckResult(8, "the group spaces are connected and contractible", "PASS")
    for bound in bounds:
        u = build_universe(bound)
        spaces = {}
        for kind in ("subgroup", "subnormal", "quotient"):
            pre = build_preorder(u, kind)
            spaces[kind] = pre
            anti = pre.is_antisymmetric
            c_bfs = connected_components_bfs(pre)
            c_uf = connected_components_union_find(pre)
            lo = stong_core(pre, variant="lowest")
            hi = stong_core(pre, variant="highest")
            ok = anti and c_bfs == c_uf == 1 and lo.size == hi.size == 1
            res.check(
                f"U_{bound} {kind} space: poset, connected, contractible", ok,
                f"{pre.n} points, core survivor {lo.core.names[0]}",
            )
        ok = homotopy_equivalent(spaces["subgroup"], spaces["quotient"]) and (
            homotopy_equivalent(spaces["subgroup"], spaces["subnormal"])
        )
        res.check(f"U_{bound} spaces pairwise homotopy equivalent", ok)

    pre = build_preorder(u_small, "subgroup")
    n = pre.n
    subsets = [tuple(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
    ok_add = ok_ext = ok_idem = True
    closure = {s: set(alexandrov_closure(pre, s)) for s in subsets}
    for s in subsets:
        cs = closure[s]
        ok_ext &= set(s) <= cs
        ok_idem &= closure[tuple(sorted(cs))] == cs
    rng = random.Random(seed)
    for _ in range(300):
        a = subsets[rng.randrange(len(subsets))]
        b = subsets[rng.randrange(len(subsets))]
        merged = tuple(sorted(set(a) | set(b)))
        ok_add &= closure[merged] == closure[a] | closure[b]
    res.check(
        f"Kuratowski axioms over U_{u_small.max_order}, all {len(subsets)} subsets",
        ok_ext and ok_idem and ok_add and not closure[()],
    )
    probe = operator_space_probe(u_small)
    res.check(
        "extension probe runs and is stamped experimental",
        probe.stamp == "EXPERIMENTAL-TRUNCATED",
        f"{probe.components} components, core size {len(probe.core_names)}",
    )
    return res


# -- criterion 9: agreement with independent oracles -------------------------------------


def check_oracles(u: Universe, u_small: Universe) -> CheckResult:
    res = CheckResult(9, "the catalog agrees with independent oracles", "PASS")
    counts = catalog_counts(u)
    expect = {n: c for n, c in KNOWN_GROUP_COUNTS.items() if n <= u.max_order}
    res.check(
        f"iso-class counts match the classification up to {max(expect)}",
        all(counts.get(n, 0) == c for n, c in expect.items()),
    )
    for n in range(1, min(8, u.max_order) + 1):
        found = enumerate_groups(n)
        ids = {u.canonical_id(g) for g in found}
        ok = len(found) == len(ids) == len(u.ids_of_order(n))
        res.check(f"regular search re-derives order {n}", ok, f"{len(found)} classes")
    for name in ("S3", "D8", "Q8", "C12", "A4"):
        if name not in u.name_index:
            continue
        g = u.group(u.name_index[name])
        brute = {frozenset(s) for s in brute_force_subgroups(g)}
        fast = {frozenset(s) for s in g.subgroups_raw}
        res.check(f"subgroup lattice of {name} matches brute force", brute == fast)
        sn_fast = {frozenset(s) for s in g.subnormal_subgroups_raw}
        ok_sn = all(
            subnormal_via_chains(g, sorted(s)) == (s in sn_fast) for s in brute
        )
        res.check(f"subnormal family of {name} matches chain search", ok_sn)
    for text in ("{1, C6}", "{1, C2, C3}", "{1, S3}"):
        x = class_from_text(text, u)
        r_fast = apply(Primitive("R0"), x).ids
        r_brute = r0_members_bruteforce(u, x.ids)
        res.check(f"R0 on {text} matches brute force", r_fast == r_brute)
        q_fast = apply(Primitive("Q"), x).ids
        q_brute = q_members_bruteforce(u, x.ids)
        res.check(f"Q on {text} matches brute force", q_fast == q_brute)
    seed_cls = class_from_text("{1, C6}", u)
    fix = join_q_r0_fixpoint(u, seed_cls.ids)
    joined = apply(Join(Primitive("Q"), Primitive("R0")), seed_cls).ids
    res.check("formation closure of {1, C6} matches the alternating fixpoint", fix == joined)
    return res


# -- assembly ----------------------------------------------------------------------------


def run_verification(max_order: int = 12, seed: int = 7, trials: int = 200) -> RunReport:
    u_big = build_universe(max_order)
    u_mid = build_universe(min(12, max_order))
    u_small = build_universe(min(6, max_order))
    topo_bounds = [t for t in (8, 12, 15) if t <= max_order] or [max_order]

    results = [
        check_closure_axioms(u_mid, u_small, trials=min(trials, 200), seed=seed),
        check_additivity_partition(u_big, trials=min(trials, 120), seed=seed),
        check_closure_join_additivity(u_big, trials=min(trials, 60), seed=seed),
        check_residual_lemma(u_big),
        check_monoidal_laws(u_big),
        check_operator_lattice(u_mid, u_small, seed=seed),
        check_comparison_diagram(u_mid, seed=seed, headroom=2),
        check_topology(topo_bounds, u_small, seed=seed),
        check_oracles(u_big, u_small),
    ]
    return RunReport(bound=max_order, seed=seed, trials=trials, results=results)
