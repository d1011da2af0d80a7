"""Saturation checks and the minimum-degree vertex partition.

Half-integer quantities (the f and g vertex weights) are computed as doubled
integers and only turned into :class:`fractions.Fraction` at the surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .detect import Target, _has_c4_within, _has_clique_within, contains_w4
from .graph import Graph, GraphArgumentError, bits


class NoWitnessError(ValueError):
    """Adding the edge does not create a W4."""


class NoPartitionError(ValueError):
    """The partition is undefined for complete graphs."""


def is_free(g: Graph, target: Target) -> bool:
    return not target.contained_in(g)


def _completes(target: Target, adj: list[int], u: int, v: int) -> bool:
    """Whether ``G + uv`` contains ``target``, given ``G`` does not.

    ``adj`` must already include the edge ``uv``. Any new copy uses ``uv``, so
    only centres among ``u``, ``v`` and their common neighbours are tried.
    """
    if target.kind == "clique":
        return _has_clique_within(adj, adj[u] & adj[v], target.size - 2)
    if target.kind == "c4":
        bu = 1 << u
        bv = 1 << v
        nv = adj[v] & ~bu
        for a in bits(adj[u] & ~bv):
            if adj[a] & nv & ~(1 << a):
                return True
        return False
    m = target.size
    centres = (1 << u) | (1 << v) | (adj[u] & adj[v])
    for c in bits(centres):
        nc = adj[c]
        if nc.bit_count() < m:
            continue
        if m == 4:
            if _has_c4_within(adj, nc):
                return True
        elif m == 3:
            if _has_clique_within(adj, nc, 3):
                return True
        elif target.contained_in(Graph(len(adj), tuple(adj))):
            return True
    return False


def completes(g: Graph, u: int, v: int, target: Target) -> bool:
    """Whether adding ``uv`` to the target-free graph ``g`` creates ``target``."""
    adj = list(g.add_edge(u, v).adj)
    return _completes(target, adj, u, v)


def is_saturated(g: Graph, target: Target) -> bool:
    if target.contained_in(g):
        return False
    adj = list(g.adj)
    for u, v in g.non_edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        ok = _completes(target, adj, u, v)
        adj[u] = g.adj[u]
        adj[v] = g.adj[v]
        if not ok:
            return False
    return True


def has_common_neighbor_everywhere(g: Graph) -> bool:
    """Every non-adjacent pair shares a neighbour (diameter <= 2 when n >= 3)."""
    adj = g.adj
    return all(adj[u] & adj[v] for u, v in g.non_edges())


def completion_witness(g: Graph, u: int, v: int) -> frozenset[int]:
    """Five vertices, ``u`` and ``v`` among them, spanning a W4 in ``G + uv``.

    The lexicographically first such 5-set is returned.
    """
    if g.has_edge(u, v) or u == v:
        raise GraphArgumentError(f"({u}, {v}) is not a non-edge")
    h = g.add_edge(u, v)
    others = [w for w in range(g.n) if w not in (u, v)]
    for rest in combinations(others, 3):
        chosen = sorted((u, v) + rest)
        if contains_w4(h.induced(chosen)):
            return frozenset(chosen)
    raise NoWitnessError(f"adding ({u}, {v}) creates no W4")


# -- the partition around a minimum-degree vertex ---------------------------


@dataclass(frozen=True)
class VertexPartition:
    x: int
    delta: int
    nx: int  # N(x) as a bitmask
    vx: int  # V \ N[x]
    layers: tuple[int, ...]  # layers[i]: vertices of vx with i neighbours in N(x)

    @property
    def neighbours(self) -> list[int]:
        return list(bits(self.nx))

    def layer_of(self, v: int) -> int:
        for i, layer in enumerate(self.layers):
            if layer >> v & 1:
                return i
        raise GraphArgumentError(f"vertex {v} is not outside N[x]")


def min_degree_vertex_partition(g: Graph) -> VertexPartition:
    """Partition around ``x`` of minimum degree, then minimum ``e(N[x])``.

    Remaining ties go to the lowest vertex index.
    """
    if g.is_complete():
        raise NoPartitionError("complete graph has no partition")
    delta = g.min_degree()
    best = None
    for v in range(g.n):
        if g.adj[v].bit_count() != delta:
            continue
        inner = g.edge_count(g.adj[v] | (1 << v))
        if best is None or inner < best[0]:
            best = (inner, v)
    x = best[1]
    nx = g.adj[x]
    vx = g.full_mask & ~nx & ~(1 << x)
    layers = [0] * (delta + 1)
    for v in bits(vx):
        layers[(g.adj[v] & nx).bit_count()] |= 1 << v
    return VertexPartition(x, delta, nx, vx, tuple(layers))


def _f2(g: Graph, part: VertexPartition, v: int) -> int:
    i = part.layer_of(v)
    upper = 0
    for layer in part.layers[i + 1 :]:
        upper |= layer
    nv = g.adj[v]
    return 2 * i + (nv & part.layers[i]).bit_count() + 2 * (nv & upper).bit_count()


def _g2(g: Graph, part: VertexPartition, v: int) -> int:
    if not part.vx >> v & 1:
        raise GraphArgumentError(f"vertex {v} is not outside N[x]")
    nv = g.adj[v]
    return 2 * (nv & part.nx).bit_count() + (nv & part.vx).bit_count()


def f_value(g: Graph, part: VertexPartition, v: int) -> Fraction:
    """``i + |N(v) & V_i|/2 + |N(v) & (V_i+1 | ... )|`` for ``v`` in layer ``i``."""
    return Fraction(_f2(g, part, v), 2)


def g_value(g: Graph, part: VertexPartition, v: int) -> Fraction:
    """``|N(v) & N(x)| + |N(v) & V_x|/2``."""
    return Fraction(_g2(g, part, v), 2)


def fg_identity_check(g: Graph) -> bool:
    """Both ``e(G) = e(N[x]) + sum f`` and ``e(G) = e(N[x]) + sum g`` hold."""
    if g.is_complete():
        return True
    part = min_degree_vertex_partition(g)
    twice_total = 2 * g.num_edges
    twice_inner = 2 * g.edge_count(part.nx | (1 << part.x))
    vs = list(bits(part.vx))
    f_ok = twice_total == twice_inner + sum(_f2(g, part, v) for v in vs)
    g_ok = twice_total == twice_inner + sum(_g2(g, part, v) for v in vs)
    return f_ok and g_ok


def shadow_of(g: Graph, part: VertexPartition, v: int) -> frozenset[int]:
    """Vertices ``w`` outside ``N[x]`` with ``vw``, ``w x_i``, ``w x_j``, ``x_i x_j`` all edges.

    Here ``x_i`` is the single neighbour of ``v`` in ``N(x)`` and ``x_j`` ranges
    over the other neighbours of ``x``.
    """
    if not (len(part.layers) > 1 and part.layers[1] >> v & 1):
        raise GraphArgumentError(f"vertex {v} is not in layer 1")
    adj = g.adj
    xi = (adj[v] & part.nx).bit_length() - 1
    partners = adj[xi] & part.nx
    found = set()
    for w in bits(adj[v] & adj[xi] & part.vx):
        if adj[w] & partners:
            found.add(w)
    return frozenset(found)


class LemmaCheck(NamedTuple):
    name: str
    passed: bool


def lemma31_suite(g: Graph) -> list[LemmaCheck]:
    """Minimum degree, common neighbours, and empty layer 0.

    Every W4-saturated graph on at least 6 vertices passes all three.
    """
    checks = [
        LemmaCheck("min_degree_at_least_2", g.min_degree() >= 2),
        LemmaCheck("nonadjacent_pairs_share_neighbor", has_common_neighbor_everywhere(g)),
    ]
    if g.is_complete():
        checks.append(LemmaCheck("layer_0_empty", True))
    else:
        checks.append(LemmaCheck("layer_0_empty", min_degree_vertex_partition(g).layers[0] == 0))
    return checks


def shadow_check(g: Graph) -> bool:
    """Every layer-1 vertex has at least one shadow."""
    if g.is_complete():
        return True
    part = min_degree_vertex_partition(g)
    if len(part.layers) < 2:
        return True
    return all(shadow_of(g, part, v) for v in bits(part.layers[1]))


def invariant_report(g: Graph) -> dict[str, bool]:
    """All structural checks on a W4-saturated candidate, by name."""
    out = {c.name: c.passed for c in lemma31_suite(g)}
    out["layer_1_shadows"] = shadow_check(g)
    out["edge_identities"] = fg_identity_check(g)
    return out

