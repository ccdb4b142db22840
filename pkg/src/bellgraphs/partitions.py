"""Canonical independent-set partitions and the single-vertex-move relation.

A partition is stored in a canonical form (each block ascending, blocks
ordered by first element), so structural equality and hashing are the
universal identity.  Two partitions are adjacent when one is obtained from
the other by changing the part of exactly one vertex: moving it into
another existing part, or splitting it off as a new singleton.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph


class PartitionCapExceeded(RuntimeError):
    """Enumeration produced more partitions than the configured cap."""


@dataclass(frozen=True)
class SetPartition:
    """A partition of a vertex set into blocks, in canonical form."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        canon = sorted(tuple(sorted(b)) for b in blocks if len(tuple(b)))
        flat = [v for b in canon for v in b]
        if len(set(flat)) != len(flat):
            raise ValueError("blocks are not pairwise disjoint")
        return cls(tuple(canon))

    @property
    def part_count(self) -> int:
        return len(self.blocks)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for b in self.blocks for v in b))

    def block_of(self, v: int) -> tuple[int, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def to_text(self) -> str:
        return "|".join(",".join(str(v) for v in b) for b in self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "SetPartition":
        text = text.strip()
        if not text:
            return cls(())
        blocks = [[int(v) for v in part.split(",")] for part in text.split("|")]
        return cls.from_blocks(blocks)


def is_independent_partition(g: Graph, p: SetPartition) -> bool:
    """Blocks disjoint, covering {0..n-1}, and each independent in g."""
    if p.vertices() != tuple(range(g.n)):
        return False
    for block in p.blocks:
        mask = 0
        for v in block:
            if g.adj[v] & mask:
                return False
            mask |= 1 << v
    return True


def make_partition(blocks: Iterable[Iterable[int]], g: Graph | None = None) -> SetPartition:
    p = SetPartition.from_blocks(blocks)
    if g is not None and not is_independent_partition(g, p):
        raise ValueError("not an independent-set partition of the given graph")
    return p


def singleton_partition(n: int) -> SetPartition:
    """The partition with every vertex in its own part."""
    return SetPartition(tuple((v,) for v in range(n)))


def enumerate_partitions(
    g: Graph, min_parts: int, max_parts: int, cap: int = 500_000
) -> list[SetPartition]:
    """All independent-set partitions of g with part count in the bounds.

    Restricted-growth enumeration: vertex v joins an existing block (when
    no neighbour is already there) or opens a new block, so every
    partition appears exactly once, already in canonical form.
    """
    n = g.n
    if n == 0:
        return [SetPartition(())] if min_parts <= 0 else []
    if min_parts > max_parts or max_parts < 1:
        return []
    adj = g.adj
    out: list[SetPartition] = []
    blocks: list[list[int]] = []
    masks: list[int] = []

    def rec(v: int) -> None:
        if v == n:
            if len(blocks) >= min_parts:
                out.append(SetPartition(tuple(tuple(b) for b in blocks)))
                if len(out) > cap:
                    raise PartitionCapExceeded(
                        f"more than {cap} partitions for n={n}, "
                        f"bounds [{min_parts}, {max_parts}]"
                    )
            return
        if len(blocks) + (n - v) < min_parts:
            return
        row = adj[v]
        bit = 1 << v
        for i in range(len(blocks)):
            if not masks[i] & row:
                blocks[i].append(v)
                masks[i] |= bit
                rec(v + 1)
                blocks[i].pop()
                masks[i] ^= bit
        if len(blocks) < max_parts:
            blocks.append([v])
            masks.append(bit)
            rec(v + 1)
            blocks.pop()
            masks.pop()

    rec(0)
    return out


def are_adjacent(p: SetPartition, q: SetPartition) -> bool:
    """True when q arises from p by moving exactly one vertex."""
    if p.vertices() != q.vertices():
        raise ValueError("partitions are over different vertex sets")
    if p == q:
        return False
    in_q = set(q.blocks)
    in_p = set(p.blocks)
    only_p = [b for b in p.blocks if b not in in_q]
    only_q = [b for b in q.blocks if b not in in_p]
    if sorted((len(only_p), len(only_q))) == [1, 2]:
        # one block split into two, or two blocks merged into one
        (whole,) = only_p if len(only_p) == 1 else only_q
        a, b = only_q if len(only_p) == 1 else only_p
        if len(a) != 1 and len(b) != 1:
            return False
        return tuple(sorted(a + b)) == whole
    if len(only_p) == 2 and len(only_q) == 2:
        for src, other in ((only_p[0], only_p[1]), (only_p[1], only_p[0])):
            src_set, other_set = set(src), set(other)
            for shrunk, grown in ((only_q[0], only_q[1]), (only_q[1], only_q[0])):
                if len(shrunk) != len(src) - 1 or len(grown) != len(other) + 1:
                    continue
                moved = src_set - set(shrunk)
                if len(moved) == 1 and set(shrunk) < src_set and set(grown) == other_set | moved:
                    return True
        return False
    return False


def _moved_partition(
    blocks: list[tuple[int, ...]], source: int, u: int, target: int | None
) -> SetPartition:
    new_blocks: list[tuple[int, ...]] = []
    for i, b in enumerate(blocks):
        if i == source:
            rest = tuple(x for x in b if x != u)
            if rest:
                new_blocks.append(rest)
        elif target is not None and i == target:
            new_blocks.append(tuple(sorted(b + (u,))))
        else:
            new_blocks.append(b)
    if target is None:
        new_blocks.append((u,))
    new_blocks.sort()
    return SetPartition(tuple(new_blocks))


def neighbors_of(
    g: Graph, p: SetPartition, min_parts: int, max_parts: int
) -> list[SetPartition]:
    """All single-vertex moves from p staying within the part-count bounds.

    Agrees with filtering enumerate_partitions by are_adjacent; the two
    routes to a merge of singletons collapse to one partition here.
    """
    blocks = list(p.blocks)
    masks = [sum(1 << v for v in b) for b in blocks]
    k = len(blocks)
    seen: set[SetPartition] = set()
    for bi, block in enumerate(blocks):
        size = len(block)
        for u in block:
            if size >= 2 and k + 1 <= max_parts:
                seen.add(_moved_partition(blocks, bi, u, None))
            row = g.adj[u]
            new_count = k - 1 if size == 1 else k
            if new_count < min_parts:
                continue
            for bj in range(k):
                if bj != bi and not masks[bj] & row:
                    seen.add(_moved_partition(blocks, bi, u, bj))
    return sorted(seen, key=lambda s: s.blocks)
