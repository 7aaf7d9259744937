"""Set partitions in restricted-growth-string form, with meet and join.

The RGS of a partition assigns each element its block index, blocks numbered
by first appearance (so rgs[0] = 0 and rgs[i] <= 1 + max of the prefix).
This canonical form is the sole equality key and serialization.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def rgs_canonical(labels: Sequence[int]) -> tuple[int, ...]:
    """Renumber arbitrary block labels by first appearance."""
    relabel: dict[int, int] = {}
    out = []
    for x in labels:
        if x not in relabel:
            relabel[x] = len(relabel)
        out.append(relabel[x])
    return tuple(out)


def rgs_is_valid(rgs: Sequence[int]) -> bool:
    top = -1
    for x in rgs:
        if x > top + 1 or x < 0:
            return False
        top = max(top, x)
    return True


def rgs_meet(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Common refinement: same block iff same block in both."""
    if not a:
        return ()
    stride = max(b) + 1
    return rgs_canonical([ai * stride + bi for ai, bi in zip(a, b)])


def rgs_join(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Finest common coarsening, via union-find over both block structures."""
    n = len(a)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rgs in (a, b):
        first: dict[int, int] = {}
        for i, blk in enumerate(rgs):
            if blk in first:
                ri, rj = find(first[blk]), find(i)
                if ri != rj:
                    parent[ri] = rj
            else:
                first[blk] = i
    return rgs_canonical([find(i) for i in range(n)])


def rgs_refines(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff every block of a lies inside a block of b (a <= b)."""
    pin: dict[int, int] = {}
    for ai, bi in zip(a, b):
        if ai in pin:
            if pin[ai] != bi:
                return False
        else:
            pin[ai] = bi
    return True


def all_rgs(n: int) -> Iterator[tuple[int, ...]]:
    """Every partition of an n-set, as RGS tuples in lexicographic order."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    maxes = [0] * n
    while True:
        yield tuple(rgs)
        # scan for the rightmost position that can still grow
        i = n - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            maxes[j] = maxes[i]


def bell_number(n: int) -> int:
    """Number of partitions of an n-set (Bell triangle)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


class Partition:
    """An equivalence relation on {0..n-1} in canonical RGS form."""

    __slots__ = ("rgs",)

    def __init__(self, rgs: Iterable[int]):
        rgs = tuple(rgs)
        if not rgs_is_valid(rgs):
            raise ValueError(f"not a restricted-growth string: {rgs!r}")
        self.rgs = rgs

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        return cls(rgs_canonical(labels))

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = [-1] * size
        for bi, block in enumerate(blocks):
            for x in block:
                if labels[x] != -1:
                    raise ValueError(f"element {x} occurs in two blocks")
                labels[x] = bi
        if -1 in labels:
            raise ValueError("blocks do not cover the carrier")
        return cls.from_labels(labels)

    @classmethod
    def bottom(cls, size: int) -> "Partition":
        """All singletons (the identity relation)."""
        return cls(range(size))

    @classmethod
    def top(cls, size: int) -> "Partition":
        """A single block relating everything."""
        return cls([0] * size)

    @property
    def size(self) -> int:
        return len(self.rgs)

    @property
    def num_blocks(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.rgs):
            out[b].append(i)
        return tuple(tuple(b) for b in out)

    def same(self, x: int, y: int) -> bool:
        return self.rgs[x] == self.rgs[y]

    def is_bottom(self) -> bool:
        return self.num_blocks == self.size

    def is_top(self) -> bool:
        return self.num_blocks <= 1

    def meet(self, other: "Partition") -> "Partition":
        self._check(other)
        return Partition(rgs_meet(self.rgs, other.rgs))

    def join(self, other: "Partition") -> "Partition":
        self._check(other)
        return Partition(rgs_join(self.rgs, other.rgs))

    def refines(self, other: "Partition") -> bool:
        self._check(other)
        return rgs_refines(self.rgs, other.rgs)

    __and__ = meet
    __or__ = join

    def __le__(self, other: "Partition") -> bool:
        return self.refines(other)

    def _check(self, other: "Partition") -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.rgs == other.rgs

    def __lt__(self, other: "Partition") -> bool:
        return self.rgs < other.rgs

    def __hash__(self) -> int:
        return hash(self.rgs)

    def __str__(self) -> str:
        return "|".join(" ".join(map(str, b)) for b in self.blocks())

    def __repr__(self) -> str:
        return f"Partition({self.rgs!r})"


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of {0..n-1} in lexicographic RGS order."""
    for rgs in all_rgs(n):
        yield Partition(rgs)
