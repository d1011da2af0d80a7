"""Canonical labeling by partition refinement and individualization.

The canonical form of a graph is the lexicographically smallest upper-triangle
bit string over all leaves of the individualization-refinement tree. Subtrees
are skipped when an automorphism already found (fixing the current prefix)
maps the branching vertex onto one that has been explored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits


@dataclass(frozen=True)
class CanonicalForm:
    order: tuple[int, ...]  # order[i] = vertex that gets canonical label i
    code: int  # upper triangle, column-major, first pair is the top bit
    automorphisms: tuple[tuple[int, ...], ...]

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)


def refine(adj: tuple[int, ...], cells: list[int], splitters: list[int] | None = None) -> list[int]:
    """Coarsest equitable refinement of an ordered partition of bitmask cells.

    Cells are split by neighbour count into each splitter cell, pieces kept in
    increasing-count order, so the result is equivariant under relabeling.
    When the input was already equitable apart from a freshly individualized
    vertex, passing just that singleton as ``splitters`` is enough.
    """
    cells = list(cells)
    pending = list(cells) if splitters is None else list(splitters)
    while pending:
        splitter = pending.pop(0)
        new_cells = []
        for c in cells:
            if c & (c - 1) == 0:
                new_cells.append(c)
                continue
            groups: dict[int, int] = {}
            m = c
            while m:
                low = m & -m
                k = (adj[low.bit_length() - 1] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | low
                m ^= low
            if len(groups) == 1:
                new_cells.append(c)
            else:
                pieces = [groups[k] for k in sorted(groups)]
                new_cells.extend(pieces)
                pending.extend(pieces)
        cells = new_cells
        if all(c & (c - 1) == 0 for c in cells):
            break
    return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> CanonicalForm:
    adj = g.adj
    n = g.n
    autos: list[tuple[int, ...]] = []
    # first and best leaves as (code, order, individualized prefix)
    state: dict[str, tuple[int, list[int], list[int]]] = {}

    def common_depth(a: list[int], b: list[int]) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def leaf(cells: list[int], prefix: list[int]) -> int:
        """Record a leaf; return the depth the search may jump back to."""
        order = [c.bit_length() - 1 for c in cells]
        code = _code(adj, order)
        if not state:
            state["first"] = state["best"] = (code, order, prefix)
            return len(prefix)
        for key in ("first", "best"):
            ref_code, ref_order, ref_prefix = state[key]
            if code == ref_code:
                gamma = [0] * n
                for a, b in zip(order, ref_order):
                    gamma[a] = b
                autos.append(tuple(gamma))
                # the automorphism maps the reference branch onto this one,
                # which was explored in full: resume at the common ancestor
                return common_depth(prefix, ref_prefix)
        if code < state["best"][0]:
            state["best"] = (code, order, prefix)
        return len(prefix)

    def search(cells: list[int], prefix: list[int]) -> int:
        target_index = -1
        best_size = n + 1
        for i, c in enumerate(cells):
            size = c.bit_count()
            if 1 < size < best_size:
                best_size = size
                target_index = i
        if target_index < 0:
            return leaf(cells, prefix)
        depth = len(prefix)
        target = cells[target_index]
        parent = list(range(n))
        merged = 0

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        explored: list[int] = []
        for v in bits(target):
            # fold in automorphisms found since the last child that fix the prefix
            while merged < len(autos):
                a = autos[merged]
                merged += 1
                if all(a[p] == p for p in prefix):
                    for x in range(n):
                        rx, ry = find(x), find(a[x])
                        if rx != ry:
                            parent[rx] = ry
            rv = find(v)
            if any(find(w) == rv for w in explored):
                continue
            split = cells[:target_index] + [1 << v, target & ~(1 << v)] + cells[target_index + 1 :]
            back = search(refine(adj, split, [1 << v]), prefix + [v])
            if back < depth:
                return back
            explored.append(v)
        return depth

    search(refine(adj, [g.full_mask]), [])
    code, order, _ = state["best"]
    return CanonicalForm(tuple(order), code, tuple(autos))


def canonical_key(g: Graph) -> bytes:
    """Bytes equal for two graphs iff they are isomorphic."""
    return _key_from_code(g.n, canonical_form(g).code)


def _key_from_code(n: int, code: int) -> bytes:
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([n]) + code.to_bytes(nbytes, "big")


def canonical_graph(g: Graph) -> Graph:
    """Relabel ``g`` into its canonical labeling."""
    return g.relabel(canonical_form(g).position)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_key(g) == canonical_key(h)
