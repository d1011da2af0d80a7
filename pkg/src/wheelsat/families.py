"""The named graphs and families: H*, F1-F3 (C4-extremal), A1-A3 and B1-B3.

Every builder takes the vertex count and the free integers the family leaves
open, and fixes the labels documented below so tests can refer to named
vertices. :func:`enumerate_family` walks every admissible parameter tuple and
keeps one graph per isomorphism class.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .canon import canonical_form, _key_from_code
from .detect import contains_c4
from .graph import Graph, complete, join_universal

FAMILIES = ("f1", "f2", "f3", "a1", "a2", "a3", "b1", "b2", "b3", "hstar")

# label layout of the B constructions
B1_LABELS = {"x": 0, "y": 1, "z": 2, "x1": 3, "x2": 4, "u1": 5, "u2": 6}
B2_LABELS = {"x": 0, "y": 1, "x1": 2, "x2": 3, "u1": 4, "u2": 5}
B3_LABELS = {"x": 0, "y": 1, "x1": 2, "x2": 3, "v1": 4, "v2": 5, "u1": 6, "u2": 7}


class FamilyParamError(ValueError):
    """Vertex count or parameters not admissible for the family."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyParamError(message)


def h_star() -> Graph:
    """K5 minus the two edges 0-1 and 1-2."""
    return complete(5).remove_edge(0, 1).remove_edge(1, 2)


def _attach_pairs(edges: list[tuple[int, int]], anchor: int, count: int, start: int) -> int:
    """Hang ``count`` triangles ``anchor-a-b`` off ``anchor``; return next free label."""
    for _ in range(count):
        a, b = start, start + 1
        edges += [(a, b), (anchor, a), (anchor, b)]
        start += 2
    return start


def _guard_c4_free(g: Graph, family: str) -> Graph:
    if contains_c4(g):
        raise AssertionError(f"{family} member contains a C4")
    return g


def build_f1(n: int, pairs: tuple[int, int, int]) -> Graph:
    """Triangle 0-1-2, pendant ``3 + i`` on triangle vertex ``i``, then pair triangles."""
    _require(n >= 6 and n % 2 == 0, f"F1 needs even n >= 6, got {n}")
    k = tuple(pairs)
    _require(len(k) == 3 and min(k) >= 0, "F1 takes three non-negative pair counts")
    _require(sum(k) == (n - 6) // 2, f"F1 pair counts must sum to {(n - 6) // 2}")
    edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    nxt = 6
    for anchor, count in enumerate(k):
        nxt = _attach_pairs(edges, anchor, count, nxt)
    return _guard_c4_free(Graph.from_edges(n, edges), "F1")


def build_f2(n: int, params: tuple[int, int, int, int]) -> Graph:
    """An F1 graph on ``n + 1`` vertices minus the pendant on triangle vertex ``d``.

    ``params`` is ``(k1, k2, k3, d)`` with ``d`` in {0, 1, 2}.
    """
    _require(n >= 5 and n % 2 == 1, f"F2 needs odd n >= 5, got {n}")
    *k, d = params
    _require(d in (0, 1, 2), "F2 deleted pendant index must be 0, 1 or 2")
    return _guard_c4_free(build_f1(n + 1, tuple(k)).remove_vertex(3 + d), "F2")


def build_f3(n: int, pairs: tuple[int, int]) -> Graph:
    """C5 on 0..4 with ``k1`` pair triangles on vertex 0 and ``k2`` on vertex 1."""
    _require(n >= 5 and n % 2 == 1, f"F3 needs odd n >= 5, got {n}")
    k = tuple(pairs)
    _require(len(k) == 2 and min(k) >= 0, "F3 takes two non-negative pair counts")
    _require(sum(k) == (n - 5) // 2, f"F3 pair counts must sum to {(n - 5) // 2}")
    edges = [(i, (i + 1) % 5) for i in range(5)]
    nxt = _attach_pairs(edges, 0, k[0], 5)
    _attach_pairs(edges, 1, k[1], nxt)
    return _guard_c4_free(Graph.from_edges(n, edges), "F3")


def build_a(variant: int, n: int, inner: tuple[int, ...]) -> Graph:
    """A member of A1/A2/A3: the F1/F2/F3 graph on ``n - 1`` vertices plus a universal vertex."""
    if variant == 1:
        _require(n >= 7 and n % 2 == 1, f"A1 needs odd n >= 7, got {n}")
        return join_universal(build_f1(n - 1, inner))
    if variant == 2:
        _require(n >= 6 and n % 2 == 0, f"A2 needs even n >= 6, got {n}")
        return join_universal(build_f2(n - 1, inner))
    if variant == 3:
        _require(n >= 6 and n % 2 == 0, f"A3 needs even n >= 6, got {n}")
        return join_universal(build_f3(n - 1, inner))
    raise FamilyParamError(f"unknown A variant {variant}")


def _matched_block(edges: list[tuple[int, int]], size: int, anchors: tuple[int, int], start: int) -> int:
    """``size`` new vertices, perfectly matched, each joined to both anchors."""
    for a in range(start, start + size, 2):
        edges.append((a, a + 1))
    for v in range(start, start + size):
        edges += [(v, anchors[0]), (v, anchors[1])]
    return start + size


def _even_sizes(sizes: Iterable[int]) -> bool:
    return all(s >= 0 and s % 2 == 0 for s in sizes)


def build_b1(n: int, sizes: tuple[int, int, int]) -> Graph:
    """``sizes = (|U11|, |U12|, |U2|)``; labels as in :data:`B1_LABELS`."""
    _require(n >= 7 and n % 2 == 1, f"B1 needs odd n >= 7, got {n}")
    _require(len(sizes) == 3 and _even_sizes(sizes), "B1 set sizes must be even and non-negative")
    _require(sum(sizes) == n - 7, f"B1 set sizes must sum to {n - 7}")
    x, y, z, x1, x2, u1, u2 = range(7)
    edges = [(x1, x2), (x1, u1), (x1, u2), (x2, u1), (x2, u2), (u1, u2)]
    edges += [(x, x1), (x, x2), (y, x1), (y, u1), (z, x2), (z, u1)]
    nxt = _matched_block(edges, sizes[0], (x1, u1), 7)
    nxt = _matched_block(edges, sizes[1], (x2, u1), nxt)
    _matched_block(edges, sizes[2], (x1, x2), nxt)
    return Graph.from_edges(n, edges)


def build_b2(n: int, sizes: tuple[int, int, int]) -> Graph:
    """A B1 graph on ``n + 1`` vertices with ``|U12| >= 2``, minus ``z``."""
    _require(n >= 8 and n % 2 == 0, f"B2 needs even n >= 8, got {n}")
    _require(len(sizes) == 3 and sizes[1] >= 2, "B2 needs |U12| >= 2")
    return build_b1(n + 1, sizes).remove_vertex(B1_LABELS["z"])


def build_b3(n: int, sizes: tuple[int, int]) -> Graph:
    """``sizes = (|U1|, |U2|)``; labels as in :data:`B3_LABELS`."""
    _require(n >= 8 and n % 2 == 0, f"B3 needs even n >= 8, got {n}")
    _require(len(sizes) == 2 and _even_sizes(sizes), "B3 set sizes must be even and non-negative")
    _require(sum(sizes) == n - 8, f"B3 set sizes must sum to {n - 8}")
    x, y, x1, x2, v1, v2, u1, u2 = range(8)
    edges = [(x1, x2), (x1, u1), (x1, u2), (x2, u1), (x2, u2), (u1, u2)]
    edges += [(x, x1), (x, x2), (y, x1), (y, u1)]
    edges += [(v1, x1), (v1, v2), (v1, u2), (v2, x2), (v2, u1)]
    nxt = _matched_block(edges, sizes[0], (x1, u1), 8)
    _matched_block(edges, sizes[1], (x1, x2), nxt)
    return Graph.from_edges(n, edges)


# -- parameter spaces -------------------------------------------------------


def _compositions(total: int, parts: int, step: int = 1) -> list[tuple[int, ...]]:
    values = range(0, total + 1, step)
    return [c for c in product(values, repeat=parts) if sum(c) == total]


def family_params(family: str, n: int) -> list[tuple[int, ...]]:
    """Every admissible parameter tuple; empty when ``n`` is out of range."""
    family = family.lower()
    odd = n % 2 == 1
    if family == "hstar":
        return [()] if n == 5 else []
    if family == "f1":
        return _compositions((n - 6) // 2, 3) if n >= 6 and not odd else []
    if family == "f2":
        if n < 5 or not odd:
            return []
        return [k + (d,) for k in _compositions((n - 5) // 2, 3) for d in range(3)]
    if family == "f3":
        return _compositions((n - 5) // 2, 2) if n >= 5 and odd else []
    if family == "a1":
        return family_params("f1", n - 1) if n >= 7 and odd else []
    if family == "a2":
        return family_params("f2", n - 1) if n >= 6 and not odd else []
    if family == "a3":
        return family_params("f3", n - 1) if n >= 6 and not odd else []
    if family == "b1":
        return _compositions(n - 7, 3, 2) if n >= 7 and odd else []
    if family == "b2":
        if n < 8 or odd:
            return []
        return [s for s in _compositions(n - 6, 3, 2) if s[1] >= 2]
    if family == "b3":
        return _compositions(n - 8, 2, 2) if n >= 8 and not odd else []
    raise FamilyParamError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def build(family: str, n: int, params: tuple[int, ...]) -> Graph:
    family = family.lower()
    if family == "hstar":
        _require(n == 5, "H* has exactly 5 vertices")
        return h_star()
    builders = {
        "f1": build_f1,
        "f2": build_f2,
        "f3": build_f3,
        "a1": lambda n, p: build_a(1, n, p),
        "a2": lambda n, p: build_a(2, n, p),
        "a3": lambda n, p: build_a(3, n, p),
        "b1": build_b1,
        "b2": build_b2,
        "b3": build_b3,
    }
    if family not in builders:
        raise FamilyParamError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return builders[family](n, tuple(params))


def enumerate_family(family: str, n: int) -> list[tuple[bytes, Graph]]:
    """One canonically labeled graph per isomorphism class, sorted by key."""
    classes: dict[bytes, Graph] = {}
    for params in family_params(family, n):
        g = build(family, n, params)
        form = canonical_form(g)
        key = _key_from_code(n, form.code)
        if key not in classes:
            classes[key] = g.relabel(form.position)
    return sorted(classes.items())


def theorem_families(n: int) -> tuple[str, ...]:
    return ("a1", "b1") if n % 2 == 1 else ("a2", "a3", "b2", "b3")


def theorem_rhs(n: int) -> list[tuple[bytes, Graph]]:
    """Union of the W4-extremal families at ``n`` (n >= 6), deduplicated."""
    if n < 6:
        raise ValueError("the family description starts at n = 6; use h_star() for n = 5")
    classes: dict[bytes, Graph] = {}
    for family in theorem_families(n):
        for key, g in enumerate_family(family, n):
            classes.setdefault(key, g)
    return sorted(classes.items())


def c4_extremal_rhs(n: int) -> list[tuple[bytes, Graph]]:
    """F1 for even ``n``, F2 together with F3 for odd ``n`` (n >= 5)."""
    if n < 5:
        raise ValueError("the C4 families start at n = 5")
    names = ("f1",) if n % 2 == 0 else ("f2", "f3")
    classes: dict[bytes, Graph] = {}
    for family in names:
        for key, g in enumerate_family(family, n):
            classes.setdefault(key, g)
    return sorted(classes.items())
