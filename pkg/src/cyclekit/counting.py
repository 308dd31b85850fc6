"""Exact cycle and path counting by anchored subset dynamic programming.

Cycles are counted up to rotation and reflection.  Each cycle is charged to
its lowest-indexed vertex s: a DP over (subset of vertices above s, endpoint)
counts simple paths starting at s, a path closes to a cycle through the edge
back to s, and the two traversal directions are merged by halving.

All counts are Python ints, so they are exact at any size; the caps below
only bound runtime.
"""

from __future__ import annotations

import json

from .graphs import Graph, PartitionInfo

DEFAULT_CYCLE_CAP = 24
DEFAULT_PATH_CAP = 22
DEFAULT_SPLIT_CAP = 20


def cycle_spectrum(g: Graph, *, max_n: int = DEFAULT_CYCLE_CAP) -> dict[int, int]:
    """Per-length cycle counts {r: count, 3 <= r <= n}; zero entries omitted."""
    n = g.n
    if n > max_n:
        raise ValueError(f"cycle counting capped at {max_n} vertices (n={n})")
    doubled = [0] * (n + 1)
    for s in range(n - 2):
        above = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        if (g.adj[s] & above).bit_count() < 2:
            continue
        frontier = {(0, s): 1}
        size = 1
        while frontier:
            nxt: dict[tuple[int, int], int] = {}
            for (mask, v), cnt in frontier.items():
                if size >= 3 and g.adj[v] >> s & 1:
                    doubled[size] += cnt
                ext = g.adj[v] & above & ~mask
                while ext:
                    b = ext & -ext
                    ext ^= b
                    key = (mask | b, b.bit_length() - 1)
                    nxt[key] = nxt.get(key, 0) + cnt
            frontier = nxt
            size += 1
    assert all(c % 2 == 0 for c in doubled)
    return {r: doubled[r] // 2 for r in range(3, n + 1) if doubled[r]}


def count_cycles(g: Graph, *, max_n: int = DEFAULT_CYCLE_CAP) -> int:
    """Total number of cycles in g."""
    return sum(cycle_spectrum(g, max_n=max_n).values())


def count_hamilton(g: Graph, *, max_n: int = DEFAULT_CYCLE_CAP) -> int:
    """Number of Hamilton cycles (spanning cycles) in g."""
    return cycle_spectrum(g, max_n=max_n).get(g.n, 0)


def count_paths_from(g: Graph, x: int, *, max_n: int = DEFAULT_PATH_CAP) -> dict[int, int]:
    """Map y -> number of simple x-y paths with at least one edge, for y != x."""
    n = g.n
    if n > max_n:
        raise ValueError(f"path counting capped at {max_n} vertices (n={n})")
    if not 0 <= x < n:
        raise ValueError(f"vertex {x} out of range")
    result: dict[int, int] = {}
    frontier = {(1 << x, x): 1}
    while frontier:
        nxt: dict[tuple[int, int], int] = {}
        for (mask, v), cnt in frontier.items():
            ext = g.adj[v] & ~mask
            while ext:
                b = ext & -ext
                ext ^= b
                w = b.bit_length() - 1
                result[w] = result.get(w, 0) + cnt
                key = (mask | b, w)
                nxt[key] = nxt.get(key, 0) + cnt
        frontier = nxt
    return result


def count_paths(g: Graph, x: int, y: int, *, max_n: int = DEFAULT_PATH_CAP) -> int:
    """Number of simple paths between distinct vertices x and y."""
    if x == y:
        raise ValueError("path endpoints must differ")
    return count_paths_from(g, x, max_n=max_n).get(y, 0)


def count_regular_and_irregular_cycles(
    g: Graph, part: PartitionInfo, *, max_n: int = DEFAULT_SPLIT_CAP
) -> tuple[int, int]:
    """(cycles using only between-class edges, cycles using a within-class edge).

    The partition must describe g exactly: every vertex assigned, and its
    irregular edge list equal to the within-class edges of g.
    """
    if len(part.assignment) != g.n:
        raise ValueError("partition does not assign every vertex")
    derived = {
        (u, v) for u, v in g.edges() if part.assignment[u] == part.assignment[v]
    }
    if derived != {tuple(sorted(e)) for e in part.irregular_edges}:
        raise ValueError("partition irregular edges inconsistent with graph")
    total = count_cycles(g, max_n=max_n)
    regular_only = count_cycles(g.without_edges(derived), max_n=max_n)
    return regular_only, total - regular_only


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def spectrum_total(spectrum: dict[int, int]) -> int:
    return sum(spectrum.values())


def spectrum_to_csv(spectrum: dict[int, int]) -> str:
    lines = ["r,count"]
    lines += [f"{r},{spectrum[r]}" for r in sorted(spectrum)]
    return "\n".join(lines) + "\n"


def spectrum_to_json(spectrum: dict[int, int]) -> str:
    return json.dumps({str(r): spectrum[r] for r in sorted(spectrum)})


def spectrum_from_json(text: str) -> dict[int, int]:
    raw = json.loads(text)
    return {int(r): int(c) for r, c in raw.items()}
