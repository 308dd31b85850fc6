"""Subgraph containment, isomorphism testing, and canonical labeling.

Containment is non-induced: an injective map of H's vertices into G sending
every H-edge to a G-edge.  All routines are backtracking searches with degree
and color pruning, intended for the small graphs this package handles
(forbidden subgraphs, and enumeration at n <= 9).
"""

from __future__ import annotations

from .graphs import Graph, _bits


def _h_vertex_order(h: Graph) -> list[int]:
    """Order H's vertices so each one touches the already-ordered prefix."""
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        best = best_key = None
        for v in remaining:
            key = ((h.adj[v] & placed).bit_count(), h.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def contains_subgraph(g: Graph, h: Graph, *, require_vertex: int | None = None) -> bool:
    """True iff some (not necessarily induced) subgraph of g is isomorphic to h.

    With ``require_vertex`` set, only embeddings whose image contains that
    g-vertex count (used to test augmented graphs incrementally).
    """
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    order = _h_vertex_order(h)
    g_deg = [g.degree(v) for v in range(g.n)]
    h_deg = [h.degree(v) for v in range(h.n)]
    image = [-1] * h.n
    g_all = (1 << g.n) - 1

    def extend(pos: int, used: int, hit: bool) -> bool:
        if pos == h.n:
            return hit
        hv = order[pos]
        candidates = g_all & ~used
        for u in _bits(h.adj[hv]):
            if image[u] >= 0:
                candidates &= g.adj[image[u]]
        if not hit and pos == h.n - 1:
            candidates &= 1 << require_vertex  # last slot must cover it
        for gv in _bits(candidates):
            if g_deg[gv] < h_deg[hv]:
                continue
            image[hv] = gv
            if extend(pos + 1, used | (1 << gv), hit or gv == require_vertex):
                return True
            image[hv] = -1
        return False

    return extend(0, 0, require_vertex is None)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via color-constrained backtracking."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    gc = refinement_colors(g)
    hc = refinement_colors(h)
    if sorted(gc) != sorted(hc):
        return False
    order = sorted(range(h.n), key=lambda v: (hc[v], -h.degree(v)))
    image = [-1] * h.n

    def extend(pos: int, used: int) -> bool:
        if pos == h.n:
            return True
        hv = order[pos]
        for gv in range(g.n):
            if used >> gv & 1 or gc[gv] != hc[hv]:
                continue
            ok = True
            for u in order[:pos]:
                if h.has_edge(hv, u) != g.has_edge(gv, image[u]):
                    ok = False
                    break
            if ok:
                image[hv] = gv
                if extend(pos + 1, used | (1 << gv)):
                    return True
                image[hv] = -1
        return False

    return extend(0, 0)


def refinement_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colors from iterated neighborhood refinement.

    Color ids are ranks of canonically sorted signatures, so isomorphic
    graphs get identical color multisets (the converse can fail for regular
    graphs; use :func:`is_isomorphic` to decide ties).
    """
    colors = tuple(g.degree(v) for v in range(g.n))
    while True:
        sigs = tuple(
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        )
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = tuple(ranking[s] for s in sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant bucket key (not a complete invariant)."""
    return (g.n, g.edge_count, tuple(sorted(refinement_colors(g))))


def canonical_label(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonically relabeled copy of ``g`` plus the relabeling permutation.

    Vertices are grouped by refinement color (classes in fixed order); within
    classes every ordering is explored with lexicographic pruning on the
    growing adjacency bitstring, keeping the maximal one.  Exact, but
    exponential for highly symmetric graphs; meant for n <= ~10.
    """
    n = g.n
    e = g.edge_count
    if e == 0 or e == n * (n - 1) // 2:
        return g, tuple(range(n))
    colors = refinement_colors(g)
    class_of: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        class_of.setdefault(c, []).append(v)
    slots: list[list[int]] = [class_of[c] for c in sorted(class_of)]
    boundaries = []
    acc = 0
    for s in slots:
        acc += len(s)
        boundaries.append(acc)

    best_rows: list[int] | None = None
    best_order: list[int] | None = None
    order: list[int] = []
    rows: list[int] = []

    def visit(cls_idx: int, used: int) -> None:
        nonlocal best_rows, best_order
        if cls_idx == len(slots):
            if best_rows is None or rows > best_rows:
                best_rows = rows.copy()
                best_order = order.copy()
            return
        pos = len(order)
        nxt = cls_idx + (1 if pos + 1 == boundaries[cls_idx] else 0)
        for v in slots[cls_idx]:
            if used >> v & 1:
                continue
            row_bits = 0
            for i, u in enumerate(order):
                if g.has_edge(v, u):
                    row_bits |= 1 << i
            if best_rows is not None and row_bits < best_rows[pos] and rows == best_rows[:pos]:
                continue
            rows.append(row_bits)
            order.append(v)
            visit(nxt, used | (1 << v))
            order.pop()
            rows.pop()

    visit(0, 0)
    assert best_order is not None
    perm = [0] * n
    for new, old in enumerate(best_order):
        perm[old] = new
    return g.relabel(perm), tuple(perm)


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    cg, _ = canonical_label(g)
    return (cg.n, cg.adj)
