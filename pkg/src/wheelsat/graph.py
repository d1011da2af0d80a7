"""Bitset graphs on at most 64 labeled vertices.

A :class:`Graph` is an immutable value: ``adj[v]`` is the neighbour set of
``v`` packed into an int. Mutation-style helpers return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphSizeError(ValueError):
    """Vertex count outside 1..64, or a construction would exceed it."""


class GraphArgumentError(ValueError):
    """Bad vertex argument (out of range, or a loop)."""


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphArgumentError("adjacency length does not match n")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def add_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        if self.adj[u] >> v & 1:
            return self
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above it shift down by one."""
        self._check_vertex(v)
        if self.n == 1:
            raise GraphSizeError("cannot delete the only vertex")
        low = (1 << v) - 1

        def squeeze(mask: int) -> int:
            return (mask & low) | ((mask >> (v + 1)) << v)

        adj = tuple(squeeze(a) for i, a in enumerate(self.adj) if i != v)
        return Graph(self.n - 1, adj)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphArgumentError("relabel needs a permutation of range(n)")
        adj = [0] * self.n
        for v, a in enumerate(self.adj):
            m = 0
            for w in bits(a):
                m |= 1 << perm[w]
            adj[perm[v]] = m
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    # -- queries ----------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphArgumentError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def common_neighbors(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.adj[u] & self.adj[v] & ~(1 << u) & ~(1 << v)

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(a.bit_count() for a in self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, a in enumerate(self.adj):
            for v in bits(a >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> list[tuple[int, int]]:
        """Missing pairs ``(u, v)`` with ``u < v``, lexicographic."""
        out = []
        full = self.full_mask
        for u in range(self.n - 1):
            missing = ~self.adj[u] & full & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(missing))
        return out

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(a | (1 << v) == full for v, a in enumerate(self.adj))

    def edge_count(self, mask: int) -> int:
        """Number of edges inside the vertex set ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def validate(self) -> None:
        """Raise if symmetry, irreflexivity or the width bound is broken."""
        full = self.full_mask
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphArgumentError(f"vertex {v} has neighbours >= n")
            if a >> v & 1:
                raise GraphArgumentError(f"loop at vertex {v}")
            for w in bits(a):
                if not self.adj[w] >> v & 1:
                    raise GraphArgumentError(f"asymmetric pair ({v}, {w})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphArgumentError(f"edge ({u}, {v}) out of range for n={n}")
    if u == v:
        raise GraphArgumentError(f"loop at vertex {u}")


# -- standard graphs ------------------------------------------------------


def empty(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphSizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    return Graph(n, (0,) * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return g.non_edges()


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(
        g.n + h.n,
        list(g.edges()) + [(u + shift, v + shift) for u, v in h.edges()],
    )


def join_universal(g: Graph) -> Graph:
    """``G`` joined with a single new vertex (label ``g.n``) adjacent to all."""
    if g.n >= MAX_VERTICES:
        raise GraphSizeError("join would exceed 64 vertices")
    top = 1 << g.n
    adj = tuple(a | top for a in g.adj) + (g.full_mask,)
    return Graph(g.n + 1, adj)


def wheel(m: int) -> Graph:
    """``W_m``: rim ``0..m-1``, centre ``m``."""
    return join_universal(cycle(m))


def complete_split(k: int, n: int) -> Graph:
    """``K_k`` joined with an independent set, ``n`` vertices in total."""
    g = empty(n - k) if n > k else None
    for _ in range(k):
        g = join_universal(g) if g is not None else empty(1)
    return g
