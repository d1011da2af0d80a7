"""Subgraph-containment tests for the saturation targets C4, K_k and W_m.

All predicates are non-induced containment. Wheels are found centre first:
``W_m`` sits in ``G`` iff some vertex has a ``C_m`` inside its neighbourhood.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .graph import Graph, bits


def _has_c4_within(adj: tuple[int, ...], mask: int) -> bool:
    # a C4 exists in G[mask] iff two of its vertices share >= 2 neighbours there
    rest = mask
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        rest ^= low
        na = adj[a] & mask
        if na.bit_count() < 2:
            continue
        m = rest
        while m:
            lb = m & -m
            m ^= lb
            if (na & adj[lb.bit_length() - 1]).bit_count() >= 2:
                return True
    return False


def _c4_witness_within(adj: tuple[int, ...], mask: int) -> tuple[int, int, int, int] | None:
    vs = list(bits(mask))
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            common = adj[a] & adj[b] & mask
            if common.bit_count() >= 2:
                c, d = list(bits(common))[:2]
                return (a, c, b, d)
    return None


def _has_clique_within(adj: tuple[int, ...], cand: int, k: int) -> bool:
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    if k == 1:
        return True
    order = sorted(bits(cand), key=lambda v: -(adj[v] & cand).bit_count())
    for v in order:
        if (adj[v] & cand).bit_count() >= k - 1 and _has_clique_within(adj, cand & adj[v], k - 1):
            return True
        cand &= ~(1 << v)
        if cand.bit_count() < k:
            return False
    return False


def _has_cycle_within(adj: tuple[int, ...], mask: int, length: int) -> bool:
    """Plain backtracking for a cycle of exactly ``length`` vertices in ``G[mask]``."""
    if mask.bit_count() < length:
        return False

    def extend(start: int, cur: int, visited: int, depth: int, allowed: int) -> bool:
        if depth == length:
            return bool(adj[cur] >> start & 1)
        for w in bits(adj[cur] & allowed & ~visited):
            if extend(start, w, visited | (1 << w), depth + 1, allowed):
                return True
        return False

    for s in bits(mask):
        # s is the smallest vertex of the cycle
        allowed = mask & ~((1 << (s + 1)) - 1)
        if extend(s, s, 1 << s, 1, allowed):
            return True
    return False


def contains_c4(g: Graph) -> bool:
    return _has_c4_within(g.adj, g.full_mask)


def contains_clique(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("clique size must be >= 1")
    return _has_clique_within(g.adj, g.full_mask, k)


def contains_w4(g: Graph) -> bool:
    adj = g.adj
    for v in range(g.n):
        if adj[v].bit_count() >= 4 and _has_c4_within(adj, adj[v]):
            return True
    return False


def contains_wheel(g: Graph, m: int) -> bool:
    if m < 3:
        raise ValueError("wheel rim must have at least 3 vertices")
    adj = g.adj
    for v in range(g.n):
        nv = adj[v]
        if nv.bit_count() < m:
            continue
        if m == 3:
            found = _has_clique_within(adj, nv, 3)
        elif m == 4:
            found = _has_c4_within(adj, nv)
        else:
            found = _has_cycle_within(adj, nv, m)
        if found:
            return True
    return False


def c4_in_neighborhood_witness(g: Graph, v: int) -> tuple[int, int, int, int] | None:
    """Four vertices of ``N(v)`` forming a 4-cycle in the listed order, if any."""
    return _c4_witness_within(g.adj, g.neighbors(v))


@dataclass(frozen=True)
class Target:
    """A saturation target: ``kind`` is ``"clique"``, ``"c4"`` or ``"wheel"``."""

    kind: str
    size: int

    @property
    def name(self) -> str:
        if self.kind == "c4":
            return "C4"
        return ("K" if self.kind == "clique" else "W") + str(self.size)

    @property
    def num_edges(self) -> int:
        if self.kind == "c4":
            return 4
        if self.kind == "clique":
            return self.size * (self.size - 1) // 2
        return 2 * self.size

    @property
    def triangle_edged(self) -> bool:
        """True when every edge of the target lies on a triangle."""
        if self.kind == "clique":
            return self.size >= 3
        return self.kind == "wheel"

    def contained_in(self, g: Graph) -> bool:
        return _CHECKERS[self.kind](g, self.size)

    def __str__(self) -> str:
        return self.name


_CHECKERS: dict[str, Callable[[Graph, int], bool]] = {
    "c4": lambda g, _: contains_c4(g),
    "clique": contains_clique,
    "wheel": lambda g, m: contains_w4(g) if m == 4 else contains_wheel(g, m),
}

W4 = Target("wheel", 4)
C4 = Target("c4", 4)
K4 = Target("clique", 4)


def parse_target(name: str) -> Target:
    """Parse ``W4``, ``C4``, ``K<k>`` or ``W<m>`` (case-insensitive)."""
    text = name.strip().upper()
    if text == "C4":
        return C4
    match = re.fullmatch(r"([KW])(\d+)", text)
    if not match:
        raise ValueError(f"unknown target {name!r}; expected C4, K<k> or W<m>")
    size = int(match.group(2))
    if match.group(1) == "K":
        if size < 2:
            raise ValueError("clique target needs k >= 2")
        return Target("clique", size)
    if size < 3:
        raise ValueError("wheel target needs m >= 3")
    return Target("wheel", size)
