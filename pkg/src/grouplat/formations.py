"""Formations, residuals, and the Gaschutz product.

A formation is a class closed under epimorphic images (Q) and under
finite subdirect-style products (R0). For a formation F every finite
group G has a least normal subgroup with quotient in F, the F-residual
G^F, and it equals the intersection of all normal subgroups whose
quotient lies in F.

We compute that intersection for arbitrary classes and record on the
witness whether the quotient by it actually landed in the class; for
verified formations it always does. The Gaschutz product of two
formations is the class of groups whose inner residual lies in the
outer class. Restricted to a catalog, every quantifier ranges over
catalog entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import GroupClass
from .errors import EmptyFormation, NotAFormation
from .groups import GroupTable
from .operators import Join, Primitive, apply

_FORMATION_JOIN = Join(Primitive("Q"), Primitive("R0"))
_FITTING_JOIN = Join(Primitive("Sn"), Primitive("N0"))


@dataclass(frozen=True)
class ResidualWitness:
    group: str
    members: tuple[int, ...]
    residual_id: int
    quotient_id: int
    quotient_in_class: bool


def residual(f: GroupClass, gid: int) -> ResidualWitness:
    """The least normal subgroup of group ``gid`` with quotient in ``f``.

    Computed as the intersection of every qualifying kernel, which is
    the least one exactly when ``f`` is R0 closed; the witness records
    whether the final quotient landed in the class so callers can tell.
    """
    u = f.universe
    if not f.ids:
        raise EmptyFormation("the empty class admits no residuals")
    g = u.group(gid)
    st = u.structure(gid)
    kernels = [info.members for info in st.normals if info.quot_id in f.ids]
    if not kernels:
        raise EmptyFormation(f"{u.name(gid)} has no quotient in the class")
    acc = frozenset(kernels[0])
    for k in kernels[1:]:
        if len(acc) == 1:
            break
        acc &= frozenset(k)
    members = tuple(sorted(acc))
    rid = u.canonical_id(g.subgroup_table(members))
    qt, _ = g.quotient_data(members)
    qid = u.canonical_id(qt)
    return ResidualWitness(u.name(gid), members, rid, qid, qid in f.ids)


def residual_members_of_table(g: GroupTable, f: GroupClass) -> frozenset[int]:
    """Raw-table residual for groups that live outside the catalog.

    Quotient classes that the catalog cannot name are skipped, which
    matches the restriction-to-catalog reading of membership in ``f``.
    """
    u = f.universe
    if not f.ids:
        raise EmptyFormation("the empty class admits no residuals")
    acc = frozenset(range(g.order))
    for m in g.normal_subgroups_raw:
        if len(acc) == 1:
            break
        qt, _ = g.quotient_data(sorted(m))
        qid = u.canonical_id_or_none(qt)
        if qid is not None and qid in f.ids:
            acc &= frozenset(m)
    return acc


# -- formation verification -------------------------------------------------


@dataclass(frozen=True)
class FormationSpec:
    cls: GroupClass
    q_closed: bool
    r0_closed: bool

    @property
    def is_formation(self) -> bool:
        return self.q_closed and self.r0_closed


def verify_formation(cls: GroupClass) -> FormationSpec:
    """Observed closure flags for the class, within its universe."""
    q_closed = apply(Primitive("Q"), cls).ids == cls.ids
    r0_closed = apply(Primitive("R0"), cls).ids == cls.ids
    return FormationSpec(cls, q_closed, r0_closed)


# -- products ---------------------------------------------------------------


def class_product(x: GroupClass, y: GroupClass) -> GroupClass:
    """The extension class XY: groups with a normal X-member and Y-quotient."""
    u = x.universe
    x._check(y)
    if not x.ids or not y.ids:
        return GroupClass(u, ())
    hits = []
    for e in u.entries:
        st = u.structure(e.iso_id)
        for info in st.normals:
            if info.sub_id in x.ids and info.quot_id in y.ids:
                hits.append(e.iso_id)
                break
    return GroupClass(u, hits)


def gaschutz_product(outer: FormationSpec, inner: FormationSpec) -> GroupClass:
    """The formation product: groups whose inner residual lies in the outer class.

    The inner factor must be a verified formation, otherwise the
    residual intersection has no least-kernel meaning and the product
    would be an arbitrary set.
    """
    if not inner.cls.ids:
        raise EmptyFormation("the inner factor of a formation product is empty")
    if not inner.is_formation:
        raise NotAFormation(
            "the inner factor is not Q and R0 closed over this universe"
        )
    u = inner.cls.universe
    inner.cls._check(outer.cls)
    hits = [
        gid
        for gid in u.all_ids()
        if residual(inner.cls, gid).residual_id in outer.cls.ids
    ]
    return GroupClass(u, hits)


# -- the two lemma checks used by the verification suite ----------------------


def residual_epi_commute_check(
    f: GroupClass, gids: list[int] | None = None
) -> tuple[int, list[str]]:
    """Residuals commute with epimorphic images.

    For every normal N of every checked G, the image of G^F in G/N must
    equal the residual of G/N computed natively in the quotient. Returns
    the number of (group, normal) pairs checked and any failures.
    """
    u = f.universe
    checked = 0
    failures: list[str] = []
    for gid in gids if gids is not None else u.all_ids():
        g = u.group(gid)
        res = frozenset(residual(f, gid).members)
        for info in u.structure(gid).normals:
            qt, coset_of = g.quotient_data(info.members)
            image = frozenset(int(coset_of[m]) for m in res)
            native = residual_members_of_table(qt, f)
            checked += 1
            if image != native:
                failures.append(
                    f"{u.name(gid)} mod kernel of size {len(info.members)}:"
                    f" image {sorted(image)} vs native {sorted(native)}"
                )
    return checked, failures


def residual_composition_check(
    outer: FormationSpec, inner: FormationSpec, gids: list[int] | None = None
) -> tuple[int, list[str]]:
    """The residual of the product formation is the composite residual.

    Checks G^(outer o inner) = (G^inner)^outer member by member, with the
    outer residual computed inside the inner residual subgroup.
    """
    u = inner.cls.universe
    prod = verify_formation(gaschutz_product(outer, inner))
    checked = 0
    failures: list[str] = []
    for gid in gids if gids is not None else u.all_ids():
        g = u.group(gid)
        lhs = frozenset(residual(prod.cls, gid).members)
        inner_members = residual(inner.cls, gid).members
        sub = g.subgroup_table(inner_members)
        local = residual_members_of_table(sub, outer.cls)
        rhs = frozenset(inner_members[i] for i in local)
        checked += 1
        if lhs != rhs:
            failures.append(
                f"{u.name(gid)}: product residual {sorted(lhs)}"
                f" vs composite {sorted(rhs)}"
            )
    return checked, failures


def class_product_associativity_gap(
    x: GroupClass, y: GroupClass, z: GroupClass
) -> list[str]:
    """Names witnessing (XY)Z != X(YZ), empty when the bracketings agree.

    Plain class products carry no least-kernel structure, so nothing
    forces associativity; this reports what actually happens over the
    given universe.
    """
    u = x.universe
    left = class_product(class_product(x, y), z)
    right = class_product(x, class_product(y, z))
    return [u.name(i) for i in sorted(left.ids ^ right.ids)]


# -- closure wrappers ---------------------------------------------------------


def formation_closure(x: GroupClass) -> GroupClass:
    """The least Q and R0 closed class containing ``x``, over its universe."""
    return apply(_FORMATION_JOIN, x)


def fitting_closure(x: GroupClass) -> GroupClass:
    """The least Sn and N0 closed class containing ``x``, over its universe."""
    return apply(_FITTING_JOIN, x)
