"""Permutations on {0..d-1} and finite permutation groups.

Permutations are stored as image tuples (0-based); internally every hot loop
works on the equivalent ``bytes`` encoding so that composition is a single
``bytes.translate`` call.  Groups carry their full element set, closed under
composition and inverse, in a canonical order (lexicographic on images), so
two groups are equal exactly when they have the same degree and the same
element set.
"""

from __future__ import annotations

import functools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

_PAD = bytes(range(256))

DEFAULT_ORDER_BOUND = 5040


def _table(img: bytes) -> bytes:
    # bytes.translate wants a 256-entry table
    return img + _PAD[len(img):]


def _compose(p: bytes, q: bytes) -> bytes:
    # (p . q)(x) = p(q(x))
    return q.translate(_table(p))


def _inverse(p: bytes) -> bytes:
    inv = bytearray(len(p))
    for i, j in enumerate(p):
        inv[j] = i
    return bytes(inv)


def _order_of(p: bytes) -> int:
    n = len(p)
    seen = [False] * n
    out = 1
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            out = math.lcm(out, length)
    return out


def mulclose(degree: int, gens: Iterable[bytes], *, seed: Iterable[bytes] = (),
             stop_above: Optional[int] = None) -> Optional[set[bytes]]:
    """Close ``gens`` (image bytes) under composition; returns the element set.

    ``seed`` may pre-populate the result with elements already known to lie in
    the generated group.  If ``stop_above`` is given and the closure exceeds
    that many elements, returns None (the caller knows which full group that
    forces).
    """
    ident = bytes(range(degree))
    seen = {ident}
    seen.update(seed)
    tables = [_table(g) for g in dict.fromkeys(gens) if g != ident]
    frontier = list(seen)
    while frontier:
        new = []
        for t in tables:
            for x in frontier:
                y = x.translate(t)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        if stop_above is not None and len(seen) > stop_above:
            return None
        frontier = new
    return seen


class Perm:
    """A permutation of {0..d-1}, stored as the tuple of images."""

    __slots__ = ("images", "_b")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images!r}")
        self.images = images
        self._b = bytes(images)

    @classmethod
    def _raw(cls, b: bytes) -> "Perm":
        p = object.__new__(cls)
        p.images = tuple(b)
        p._b = b
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(bytes(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self._b)

    def __call__(self, x: int) -> int:
        return self._b[x]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Perm._raw(_compose(self._b, other._b))

    def __invert__(self) -> "Perm":
        return Perm._raw(_inverse(self._b))

    def inverse(self) -> "Perm":
        return ~self

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return (~self) ** (-k)
        out = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def order(self) -> int:
        return _order_of(self._b)

    def is_identity(self) -> bool:
        return self._b == bytes(range(self.degree))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if not seen[i] and self._b[i] != i:
                cyc = [i]
                seen[i] = True
                j = self._b[i]
                while j != i:
                    cyc.append(j)
                    seen[j] = True
                    j = self._b[j]
                out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._b == other._b

    def __lt__(self, other: "Perm") -> bool:
        return self._b < other._b

    def __le__(self, other: "Perm") -> bool:
        return self._b <= other._b

    def __hash__(self) -> int:
        return hash(self._b)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Perm({self.images!r})"


def compose(p: Perm, q: Perm) -> Perm:
    """Composition p after q: (p . q)(x) = p(q(x))."""
    return p * q


class PermGroup:
    """A finite permutation group given by generators plus its element set.

    ``elements`` is always the full closure, sorted lexicographically on image
    tuples (the identity comes first).  Instances are immutable and hashable;
    equality means same degree and same element set.
    """

    __slots__ = ("degree", "generators", "elements", "_eset", "_hash")

    def __init__(self, degree: int, generators: Sequence[Perm],
                 elements: Sequence[Perm], _eset: Optional[frozenset] = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._eset = _eset if _eset is not None else frozenset(p._b for p in elements)
        self._hash = None

    @classmethod
    def _from_eset(cls, degree: int, eset: Iterable[bytes],
                   gens: Iterable[bytes] = ()) -> "PermGroup":
        elems = tuple(Perm._raw(b) for b in sorted(eset))
        gens = tuple(Perm._raw(b) for b in gens)
        return cls(degree, gens, elems, frozenset(e._b for e in elems))

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls._from_eset(degree, [bytes(range(degree))])

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    def key(self) -> tuple:
        """Canonical identity of the group: degree plus sorted element images."""
        return (self.degree, tuple(p._b for p in self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p._b in self._eset

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._eset == other._eset)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, self._eset))
        return self._hash

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._eset <= other._eset

    def orbits(self) -> list[tuple[int, ...]]:
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g._b):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return [tuple(v) for v in sorted(groups.values())]

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def point_stabilizer(self, x: int) -> "PermGroup":
        eset = {p._b for p in self.elements if p._b[x] == x}
        return PermGroup._from_eset(self.degree, eset, _small_genset(self.degree, eset))


def _small_genset(degree: int, eset: Iterable[bytes]) -> tuple[bytes, ...]:
    """Greedy small generating set for a closed element set."""
    ident = bytes(range(degree))
    gens: list[bytes] = []
    got = {ident}
    for b in sorted(eset):
        if b not in got:
            gens.append(b)
            got = mulclose(degree, gens)
    return tuple(gens)


def group_closure(degree: int, gens: Iterable[Perm]) -> PermGroup:
    """The group generated by ``gens``: smallest closed superset plus identity."""
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: generator {g!r} has degree "
                             f"{g.degree}, expected {degree}")
    eset = mulclose(degree, [g._b for g in gens])
    elems = tuple(Perm._raw(b) for b in sorted(eset))
    return PermGroup(degree, gens, elems)


def _require_subgroup(G: PermGroup, H: PermGroup, name: str = "H") -> None:
    if not H.is_subgroup_of(G):
        raise ValueError(f"{name} (order {H.order}, degree {H.degree}) is not a "
                         f"subgroup of G (order {G.order}, degree {G.degree})")


def _cyclic_subgroup_records(G: PermGroup) -> dict[frozenset, tuple[bytes, ...]]:
    """All cyclic subgroups of G as {element set: (generator,)}."""
    degree = G.degree
    ident = bytes(range(degree))
    out: dict[frozenset, tuple[bytes, ...]] = {}
    for p in G.elements:
        g = p._b
        if g == ident:
            continue
        elems = {ident, g}
        x = _compose(g, g)
        while x != ident:
            elems.add(x)
            x = _compose(x, g)
        key = frozenset(elems)
        if key not in out:
            out[key] = (g,)
    return out


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


@functools.lru_cache(maxsize=None)
def all_subgroups(G: PermGroup, max_order: int = DEFAULT_ORDER_BOUND) -> tuple[PermGroup, ...]:
    """Every subgroup of G, in canonical order.

    Seeds with all cyclic subgroups and closes under pairwise join until no
    new subgroup appears.  Joins are scheduled against the prime-power cyclic
    subgroups only, which reaches the same fixed point: every subgroup is the
    join of the prime-power cyclic subgroups it contains.
    """
    if G.order > max_order:
        raise ValueError(f"group order {G.order} exceeds bound {max_order}")
    degree = G.degree
    ident = bytes(range(degree))
    full_key = G._eset
    # largest possible proper-subgroup order; a closure past it must be G
    largest_proper = G.order // min(
        (p for p in range(2, G.order + 1) if G.order % p == 0), default=1)

    cyc = _cyclic_subgroup_records(G)
    subs: dict[frozenset, tuple[bytes, ...]] = {frozenset({ident}): ()}
    subs.update(cyc)
    subs[full_key] = tuple(g._b for g in G.generators)
    units = sorted((gens[0], key) for key, gens in cyc.items()
                   if _is_prime_power(len(key)))

    work = deque(kv for kv in subs.items() if kv[0] != full_key)
    while work:
        eset, gens = work.popleft()
        for g, ceset in units:
            if g in eset:
                continue
            res = mulclose(degree, gens + (g,), seed=eset, stop_above=largest_proper)
            key = full_key if res is None else frozenset(res)
            if key not in subs:
                item = (key, gens + (g,))
                subs[key] = item[1]
                work.append(item)
    groups = [PermGroup._from_eset(degree, eset, gens) for eset, gens in subs.items()]
    groups.sort(key=lambda K: (K.order, K.key()))
    return tuple(groups)


def interval(G: PermGroup, H: PermGroup,
             max_order: int = DEFAULT_ORDER_BOUND) -> tuple[PermGroup, ...]:
    """All subgroups K with H <= K <= G, as a sublist of all_subgroups(G)."""
    _require_subgroup(G, H)
    return tuple(K for K in all_subgroups(G, max_order) if H._eset <= K._eset)


@dataclass(frozen=True)
class Coset:
    """A left coset of a subgroup, with its least element as representative."""
    rep: Perm
    members: tuple[Perm, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)


def cosets(G: PermGroup, H: PermGroup) -> list[Coset]:
    """Left cosets gH, ordered by representative (least member)."""
    _require_subgroup(G, H)
    hset = [p._b for p in H.elements]
    covered: set[bytes] = set()
    out = []
    for p in G.elements:  # ascending, so the first hit in a coset is its min
        if p._b in covered:
            continue
        members = sorted(_compose(p._b, h) for h in hset)
        covered.update(members)
        out.append(Coset(Perm._raw(members[0]),
                         tuple(Perm._raw(b) for b in members)))
    return out


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    """True iff gHg^-1 = H for every generator g of G."""
    _require_subgroup(G, H)
    for g in G.generators:
        gb, gi = g._b, _inverse(g._b)
        conj = {_compose(_compose(gb, h), gi) for h in H._eset}
        if conj != H._eset:
            return False
    return True


def core(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest normal subgroup of G inside H: the intersection of H's conjugates."""
    _require_subgroup(G, H)
    ident = bytes(range(G.degree))
    cur = set(H._eset)
    for g in G.elements:
        gb, gi = g._b, _inverse(g._b)
        cur &= {_compose(_compose(gb, h), gi) for h in cur}
        if cur == {ident}:
            break
    return PermGroup._from_eset(G.degree, cur, _small_genset(G.degree, cur))


def subgroup_join(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    """Closure of A union B inside G."""
    _require_subgroup(G, A, "A")
    _require_subgroup(G, B, "B")
    gens = tuple(g._b for g in A.generators) + tuple(g._b for g in B.generators)
    eset = mulclose(G.degree, gens, seed=A._eset | B._eset)
    return PermGroup._from_eset(G.degree, eset, gens)


def quotient(G: PermGroup, N: PermGroup) -> PermGroup:
    """G/N as the permutation group of G's generators acting on cosets of N."""
    if not is_normal(G, N):
        raise ValueError("N is not normal in G")
    cos = cosets(G, N)
    idx = {m._b: i for i, c in enumerate(cos) for m in c.members}
    gen_perms = [Perm([idx[_compose(g._b, c.rep._b)] for c in cos])
                 for g in G.generators]
    Q = group_closure(len(cos), gen_perms)
    assert Q.order == G.order // N.order
    return Q


def is_dihedral(G: PermGroup) -> Optional[int]:
    """m >= 2 with |G| = 2m if G has a cyclic subgroup of index 2 and is
    generated by two involutions; None otherwise.

    m = 2 admits the Klein four-group; the 2-element group is rejected.
    """
    n = G.order
    if n < 4 or n % 2:
        return None
    m = n // 2
    elems = [p._b for p in G.elements]
    if not any(_order_of(b) == m for b in elems):
        return None
    ident = bytes(range(G.degree))
    invs = [b for b in elems if b != ident and _compose(b, b) == ident]
    for i, a in enumerate(invs):
        for b in invs[i + 1:]:
            if len(mulclose(G.degree, (a, b))) == n:
                return m
    return None


def is_simple(G: PermGroup) -> bool:
    """True iff the only normal subgroups are the trivial group and G."""
    if G.order == 1:
        raise ValueError("simplicity is undefined for the trivial group")
    for H in all_subgroups(G):
        if 1 < H.order < G.order and is_normal(G, H):
            return False
    return True
