"""Isomorph-free enumeration by canonical augmentation, and the sat(n, H) search.

Level ``m`` holds one representative per isomorphism class of ``n``-vertex
graphs with ``m`` edges. A child ``C = P + e`` is accepted only when deleting
the canonical last edge of ``C`` gives back the class of ``P``; siblings from
the same parent are deduplicated by canonical key. Every class therefore has
exactly one accepting parent class, so levels are complete and duplicate-free
without a global seen-set.

The canonical last edge is picked among edges with the largest cheap
invariant (degrees and codegree), so most rejected children never reach the
canonical labeler.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import _key_from_code, canonical_form, canonical_key
from .detect import Target
from .formats import graph6_encode
from .graph import Graph, empty
from .saturation import has_common_neighbor_everywhere, is_saturated

Keep = Callable[[Graph], bool]


@dataclass(frozen=True)
class PruneOptions:
    # drop graphs containing the target; sound because containment is monotone
    hereditary: bool = True
    # only test graphs whose non-adjacent pairs share a neighbour; None = auto
    common_neighbor: bool | None = None

    def common_neighbor_for(self, target: Target) -> bool:
        if self.common_neighbor is None:
            return target.triangle_edged
        return self.common_neighbor


NO_PRUNE = PruneOptions(hereditary=False, common_neighbor=False)


@dataclass(frozen=True)
class TargetFree:
    """Picklable ``keep`` predicate: the graph avoids ``target``."""

    target: Target

    def __call__(self, g: Graph) -> bool:
        return not self.target.contained_in(g)


def _edge_invariant(adj: tuple[int, ...], u: int, v: int) -> tuple[int, int, int]:
    du = adj[u].bit_count()
    dv = adj[v].bit_count()
    return (max(du, dv), min(du, dv), (adj[u] & adj[v]).bit_count())


def augment(parent: Graph, parent_key: bytes, keep: Keep | None = None) -> list[tuple[bytes, Graph]]:
    """Canonically accepted children of ``parent`` with one more edge.

    Children are returned relabeled canonically, sorted by key.
    """
    accepted: dict[bytes, Graph] = {}
    seen: set[bytes] = set()
    n = parent.n
    for u, v in parent.non_edges():
        child = parent.add_edge(u, v)
        if keep is not None and not keep(child):
            continue
        adj = child.adj
        inv_uv = _edge_invariant(adj, u, v)
        top: list[tuple[int, int]] = []
        rejected = False
        for a, b in child.edges():
            inv = _edge_invariant(adj, a, b)
            if inv > inv_uv:
                rejected = True
                break
            if inv == inv_uv:
                top.append((a, b))
        if rejected:
            continue
        form = canonical_form(child)
        key = _key_from_code(n, form.code)
        if key in seen:
            continue
        seen.add(key)
        pos = form.position
        last = max(top, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))
        if last != (u, v) and canonical_key(child.remove_edge(*last)) != parent_key:
            continue
        accepted[key] = child.relabel(pos)
    return sorted(accepted.items())


def _augment_many(args: tuple[list[tuple[bytes, Graph]], Keep | None]) -> list[tuple[bytes, Graph]]:
    parents, keep = args
    out = []
    for key, g in parents:
        out.extend(augment(g, key, keep))
    return out


def next_level(
    level: list[tuple[bytes, Graph]],
    keep: Keep | None = None,
    workers: int = 1,
) -> list[tuple[bytes, Graph]]:
    """All classes one edge above ``level``, sorted by canonical key."""
    if workers > 1 and len(level) > 4 * workers:
        # contiguous chunks; the merge below restores a global order anyway
        size = -(-len(level) // (4 * workers))
        chunks = [(level[i : i + size], keep) for i in range(0, len(level), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_augment_many, chunks))
    else:
        parts = [_augment_many((level, keep))]
    merged: dict[bytes, Graph] = {}
    for part in parts:
        for key, g in part:
            if key in merged:
                raise AssertionError("class accepted from two parents")
            merged[key] = g
    return sorted(merged.items())


def enumerate_levels(
    n: int,
    max_edges: int | None = None,
    keep: Keep | None = None,
    workers: int = 1,
) -> Iterator[tuple[int, list[tuple[bytes, Graph]]]]:
    """Yield ``(m, classes)`` for ``m = 0, 1, ...`` up to ``max_edges``.

    With ``keep`` given, only classes satisfying it are kept; ``keep`` must be
    closed under taking subgraphs for the result to stay complete.
    """
    top = n * (n - 1) // 2 if max_edges is None else min(max_edges, n * (n - 1) // 2)
    g0 = empty(n)
    level = [(canonical_key(g0), g0)] if keep is None or keep(g0) else []
    m = 0
    while True:
        yield m, level
        if m >= top or not level:
            return
        level = next_level(level, keep, workers)
        m += 1


@dataclass
class SaturationReport:
    n: int
    target: Target
    sat_value: int | None
    extremal: list[tuple[bytes, Graph]]
    graphs_examined: int
    wall_time: float
    status: str = "ok"  # "ok" or "edge_cap"
    level_sizes: list[int] = field(default_factory=list)

    @property
    def keys(self) -> list[bytes]:
        return [k for k, _ in self.extremal]

    @property
    def graphs(self) -> list[Graph]:
        return [g for _, g in self.extremal]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "target": self.target.name,
            "sat_value": self.sat_value,
            "extremal": [graph6_encode(g) for g in self.graphs],
            "graphs_examined": self.graphs_examined,
            "wall_ms": round(self.wall_time * 1000),
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def search_min_saturated(
    n: int,
    target: Target,
    edge_cap: int | None = None,
    prune: PruneOptions = PruneOptions(),
    workers: int = 1,
) -> SaturationReport:
    """Smallest edge count of an ``n``-vertex ``target``-saturated graph.

    Edge levels are enumerated upward; the first level holding a saturated
    class is finished and returned in full.
    """
    if not 1 <= n <= 12:
        raise ValueError("exact search is limited to 1 <= n <= 12")
    if edge_cap is not None and edge_cap < 0:
        raise ValueError("edge cap must be non-negative")
    start = time.perf_counter()
    keep = TargetFree(target) if prune.hereditary else None
    filter_cn = prune.common_neighbor_for(target)
    examined = 0
    sizes = []
    for m, level in enumerate_levels(n, edge_cap, keep, workers):
        examined += len(level)
        sizes.append(len(level))
        hits = [
            (key, g)
            for key, g in level
            if (not filter_cn or has_common_neighbor_everywhere(g)) and is_saturated(g, target)
        ]
        if hits:
            return SaturationReport(n, target, m, hits, examined, time.perf_counter() - start, "ok", sizes)
    return SaturationReport(n, target, None, [], examined, time.perf_counter() - start, "edge_cap", sizes)
