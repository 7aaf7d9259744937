"""Unary algebras, congruence lattices, and the partition Galois closure.

A congruence of a unary algebra is a partition compatible with every
operation (x ~ y implies f(x) ~ f(y)).  The main route computes all
congruences by generating principal ones and closing under join; the oracle
route filters every partition of the carrier.  ``galois_closure`` goes the
other way: from a set of partitions to all maps preserving them, and back to
the congruence lattice of the resulting algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .lattice import FinLattice
from .partition import Partition, all_rgs, bell_number, rgs_canonical, rgs_join
from .perm import PermGroup

CON_SIZE_BOUND = 64
ORACLE_SIZE_BOUND = 11
MAPS_SIZE_BOUND = 8


@dataclass(frozen=True)
class UnaryAlgebra:
    """A finite carrier {0..size-1} with a list of unary operation tables."""

    size: int
    ops: tuple[tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("carrier must be nonempty")
        object.__setattr__(self, "ops", tuple(tuple(op) for op in self.ops))
        for op in self.ops:
            if len(op) != self.size or any(not 0 <= x < self.size for x in op):
                raise ValueError(f"bad operation table {op!r} for size {self.size}")

    def __repr__(self) -> str:
        return f"UnaryAlgebra(size={self.size}, ops={len(self.ops)})"


def gset_algebra(action: PermGroup, name: Optional[str] = None) -> UnaryAlgebra:
    """The unary algebra of a group action: one operation per generator.

    A partition is compatible with the whole group exactly when it is
    compatible with the generators, so the generator tables suffice.
    """
    return UnaryAlgebra(action.degree,
                        tuple(g.images for g in action.generators), name)


def preserves(op: Sequence[int], part: Partition) -> bool:
    """True iff x ~ y (part) implies op(x) ~ op(y) (part)."""
    if len(op) != part.size:
        raise ValueError(f"size mismatch: op has {len(op)}, partition {part.size}")
    return _rgs_preserved(part.rgs, op)


def _rgs_preserved(rgs: Sequence[int], op: Sequence[int]) -> bool:
    pin: dict[int, int] = {}
    for x, blk in enumerate(rgs):
        img_blk = rgs[op[x]]
        if blk in pin:
            if pin[blk] != img_blk:
                return False
        else:
            pin[blk] = img_blk
    return True


def _principal_rgs(size: int, ops: Sequence[Sequence[int]],
                   a: int, b: int) -> tuple[int, ...]:
    """Smallest compatible partition containing (a, b), by union-find closure."""
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        for op in ops:
            stack.append((op[x], op[y]))
    return rgs_canonical([find(i) for i in range(size)])


def principal_congruence(A: UnaryAlgebra, a: int, b: int) -> Partition:
    """The smallest congruence of A relating a and b."""
    if not (0 <= a < A.size and 0 <= b < A.size):
        raise ValueError(f"elements ({a}, {b}) out of range for size {A.size}")
    return Partition(_principal_rgs(A.size, A.ops, a, b))


def _congruence_set(size: int, ops: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
    """All congruences as RGS tuples: principal generation plus join closure."""
    bottom = tuple(range(size))
    found = {bottom}
    found.update(_principal_rgs(size, ops, a, b)
                 for a in range(size) for b in range(a + 1, size))
    work = list(found)
    while work:
        r = work.pop()
        new = []
        for s in found:
            j = rgs_join(r, s)
            if j not in found:
                new.append(j)
        for j in new:
            if j not in found:
                found.add(j)
                work.append(j)
    return found


def _lattice_from_rgs(rgs_set: set[tuple[int, ...]]) -> FinLattice:
    from .partition import rgs_refines
    items = sorted(rgs_set)
    labels = [",".join(map(str, r)) for r in items]
    return FinLattice.from_inclusion(items, rgs_refines, labels)


def lattice_partitions(L: FinLattice) -> list[Partition]:
    """Recover the Partition objects of a congruence lattice from its labels."""
    return [Partition(int(x) for x in lab.split(",")) for lab in L.labels]


def all_congruences(A: UnaryAlgebra, max_size: int = CON_SIZE_BOUND) -> FinLattice:
    """The congruence lattice of A, elements labelled by RGS.

    Generates every principal congruence and closes under pairwise join; the
    set of all congruences is automatically meet-closed, so no meet pass is
    needed.
    """
    if A.size > max_size:
        raise ValueError(f"carrier size {A.size} exceeds bound {max_size}")
    return _lattice_from_rgs(_congruence_set(A.size, A.ops))


def congruences_oracle(A: UnaryAlgebra) -> FinLattice:
    """Brute-force route: keep every partition of the carrier that all
    operations preserve.  Bounded by Bell numbers, so size <= 11."""
    if A.size > ORACLE_SIZE_BOUND:
        raise ValueError(f"carrier size {A.size} exceeds oracle bound "
                         f"{ORACLE_SIZE_BOUND} (Bell({ORACLE_SIZE_BOUND}) = "
                         f"{bell_number(ORACLE_SIZE_BOUND)})")
    keep = {rgs for rgs in all_rgs(A.size)
            if all(_rgs_preserved(rgs, op) for op in A.ops)}
    return _lattice_from_rgs(keep)


def preserving_maps(size: int, parts: Sequence[Partition]) -> list[tuple[int, ...]]:
    """All unary tables f with preserves(f, p) for every p, in lexicographic
    order.  Prunes by prefix feasibility: a partial table that already sends
    two related elements to unrelated images is abandoned."""
    if size > MAPS_SIZE_BOUND:
        raise ValueError(f"carrier size {size} exceeds bound {MAPS_SIZE_BOUND}")
    for p in parts:
        if p.size != size:
            raise ValueError(f"partition size {p.size} does not match carrier {size}")
    rgss = [p.rgs for p in parts]
    # pins[k][blk] = block that partition k forces images of blk into (-1 open)
    pins = [[-1] * (max(r) + 1 if r else 0) for r in rgss]
    table = [0] * size
    out: list[tuple[int, ...]] = []

    def assign(i: int) -> None:
        if i == size:
            out.append(tuple(table))
            return
        for v in range(size):
            touched = []
            ok = True
            for k, r in enumerate(rgss):
                blk, img = r[i], r[v]
                pinned = pins[k][blk]
                if pinned == -1:
                    pins[k][blk] = img
                    touched.append(k)
                elif pinned != img:
                    ok = False
                    break
            if ok:
                table[i] = v
                assign(i + 1)
            for k in touched:
                pins[k][rgss[k][i]] = -1

    assign(0)
    return out


def galois_closure(size: int, parts: Sequence[Partition]) -> FinLattice:
    """Congruence lattice of the algebra of *all* maps preserving ``parts``.

    The input partitions always appear in the result.  They form a full
    congruence lattice on their own exactly when the result adds nothing
    beyond the bottom, the parts, and the top.
    """
    maps = preserving_maps(size, parts)
    return _lattice_from_rgs(_congruence_set(size, maps))


def galois_is_closed(size: int, parts: Sequence[Partition]) -> bool:
    """True iff the closure is exactly {bottom} | parts | {top}."""
    want = {tuple(range(size)), (0,) * size}
    want.update(p.rgs for p in parts)
    got = {p.rgs for p in lattice_partitions(galois_closure(size, parts))}
    return got == want
