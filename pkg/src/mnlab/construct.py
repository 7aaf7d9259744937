"""Named group constructors, regular and coset actions, and the sweep catalog."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .perm import (DEFAULT_ORDER_BOUND, Perm, PermGroup, _compose,
                   _require_subgroup, _small_genset, group_closure)


def cyclic(n: int) -> PermGroup:
    """Z_n acting naturally: generated by the n-cycle (degree n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    rot = Perm([(i + 1) % n for i in range(n)])
    return group_closure(n, [rot])


def symmetric(n: int) -> PermGroup:
    """S_n in its natural action, generated by adjacent transpositions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return PermGroup.trivial(1)
    gens = []
    for i in range(n - 1):
        img = list(range(n))
        img[i], img[i + 1] = img[i + 1], img[i]
        gens.append(Perm(img))
    return group_closure(n, gens)


def alternating(n: int) -> PermGroup:
    """A_n in its natural action, generated by consecutive 3-cycles."""
    if n < 3:
        return PermGroup.trivial(max(n, 1))
    gens = [Perm.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    return group_closure(n, gens)


def klein() -> PermGroup:
    """The Klein four-group in its regular degree-4 action."""
    return group_closure(4, [Perm((1, 0, 3, 2)), Perm((2, 3, 0, 1))])


def dihedral(m: int) -> PermGroup:
    """The order-2m dihedral group (rotation of order m plus a reflection).

    For m >= 3 this is the natural degree-m action.  The degree-2 action of
    the m = 2 case is unfaithful, so that case returns the regular degree-4
    Klein representation instead.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if m == 2:
        return klein()
    rot = Perm([(i + 1) % m for i in range(m)])
    ref = Perm([(-i) % m for i in range(m)])
    return group_closure(m, [rot, ref])


def quaternion() -> PermGroup:
    """The quaternion group Q_8 in its regular degree-8 action."""
    # points ordered 1, -1, i, -i, j, -j, k, -k; generators act by left
    # multiplication with i and j
    gi = Perm((2, 3, 1, 0, 6, 7, 5, 4))
    gj = Perm((4, 5, 7, 6, 1, 0, 2, 3))
    G = group_closure(8, [gi, gj])
    assert G.order == 8
    return G


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """G x H acting on the disjoint union of the two carriers."""
    dg, dh = G.degree, H.degree
    gens = [Perm(tuple(g.images) + tuple(range(dg, dg + dh))) for g in G.generators]
    gens += [Perm(tuple(range(dg)) + tuple(dg + i for i in h.images))
             for h in H.generators]
    P = group_closure(dg + dh, gens)
    assert P.order == G.order * H.order
    return P


def regular_action(G: PermGroup, max_order: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    """G acting on itself by left translation, on the canonical element order.

    Faithful and transitive with trivial point stabilizers, degree |G|.
    """
    if G.order > max_order:
        raise ValueError(f"group order {G.order} exceeds bound {max_order}")
    idx = {p._b: i for i, p in enumerate(G.elements)}
    gens = [Perm([idx[_compose(g._b, x._b)] for x in G.elements])
            for g in G.generators]
    return group_closure(G.order, gens)


class CosetAction(NamedTuple):
    action: PermGroup
    kernel: PermGroup


def coset_action(G: PermGroup, H: PermGroup) -> CosetAction:
    """G's generators acting on the left cosets of H, plus the kernel.

    The kernel is computed directly as {g : g fixes every coset}; it always
    equals core(G, H), so the action is faithful exactly when H is core-free.
    """
    from .perm import cosets as _cosets
    _require_subgroup(G, H)
    cos = _cosets(G, H)
    idx = {m._b: i for i, c in enumerate(cos) for m in c.members}
    reps = [c.rep._b for c in cos]

    def induced(b: bytes) -> tuple[int, ...]:
        return tuple(idx[_compose(b, r)] for r in reps)

    gens = [Perm(induced(g._b)) for g in G.generators]
    action = group_closure(len(cos), gens)
    ident = tuple(range(len(cos)))
    kernel_eset = {p._b for p in G.elements if induced(p._b) == ident}
    kernel = PermGroup._from_eset(G.degree, kernel_eset,
                                  _small_genset(G.degree, kernel_eset))
    return CosetAction(action, kernel)


@dataclass(frozen=True)
class GroupSpec:
    """Constructor recipe: kind plus parameters.

    kinds: "cyclic" (n), "dihedral" (m), "symmetric" (n), "klein",
    "direct_product" (two factor specs).
    """
    kind: str
    n: Optional[int] = None
    factors: tuple["GroupSpec", ...] = field(default=())

    def expected_order(self) -> int:
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dihedral":
            return 2 * self.n
        if self.kind == "symmetric":
            import math
            return math.factorial(self.n)
        if self.kind == "klein":
            return 4
        if self.kind == "direct_product":
            a, b = self.factors
            return a.expected_order() * b.expected_order()
        raise ValueError(f"unknown kind {self.kind!r}")

    def build(self) -> PermGroup:
        if self.kind == "cyclic":
            G = cyclic(self.n)
        elif self.kind == "dihedral":
            G = dihedral(self.n)
        elif self.kind == "symmetric":
            G = symmetric(self.n)
        elif self.kind == "klein":
            G = klein()
        elif self.kind == "direct_product":
            a, b = self.factors
            G = direct_product(a.build(), b.build())
        else:
            raise ValueError(f"unknown kind {self.kind!r}")
        assert G.order == self.expected_order()
        return G


CATALOG_ORDER_BOUND = 48


def catalog(max_order: int = 24) -> list[tuple[str, PermGroup]]:
    """Deterministic catalog of regular representations for the sweeps.

    Members: all cyclic groups, the Klein group, all dihedral groups, S_3 and
    S_4, A_4, Q_8 (orders permitting), and the direct products of two base
    members whose order product fits.  Every entry is the regular action and
    entries are deduplicated by canonical element-set key, so e.g. the regular
    D_6 and regular S_3 appear once.
    """
    if max_order > CATALOG_ORDER_BOUND:
        raise ValueError(f"max_order {max_order} exceeds bound {CATALOG_ORDER_BOUND}")
    base: list[tuple[str, PermGroup]] = []
    for n in range(1, max_order + 1):
        base.append((f"Z{n}", cyclic(n)))
    if max_order >= 4:
        base.append(("V4", klein()))
    for m in range(2, max_order // 2 + 1):
        base.append((f"D{2 * m}", dihedral(m)))
    if max_order >= 6:
        base.append(("S3", symmetric(3)))
    if max_order >= 24:
        base.append(("S4", symmetric(4)))
    if max_order >= 12:
        base.append(("A4", alternating(4)))
    if max_order >= 8:
        base.append(("Q8", quaternion()))

    out: list[tuple[str, PermGroup]] = []
    seen = set()

    def add(name: str, G: PermGroup) -> None:
        R = regular_action(G)
        k = R.key()
        if k not in seen:
            seen.add(k)
            out.append((name, R))

    for name, G in base:
        add(name, G)
    for i, (n1, G1) in enumerate(base):
        for n2, G2 in base[i:]:
            if G1.order * G2.order <= max_order:
                add(f"{n1}x{n2}", direct_product(G1, G2))
    return out
