"""Simple undirected graphs on at most 64 vertices, with bitset adjacency.

Vertices are integers ``0..n-1`` and each adjacency row is an int bitmask so
that the subset dynamic programming elsewhere stays in machine words.  All
values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
CHROMATIC_CAP = 16
PARTITION_CAP = 16


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in drop:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates are merged.

    Raises ValueError on out-of-range endpoints or self-loops.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class ClassVector:
    """A composition ``(c_1, ..., c_k)`` of positive class sizes, sum <= 64."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 1:
            raise ValueError("at least one class required")
        if any(c < 1 for c in self.parts):
            raise ValueError("class sizes must be positive")
        if sum(self.parts) > MAX_VERTICES:
            raise ValueError(f"total size exceeds {MAX_VERTICES}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @classmethod
    def balanced(cls, n: int, k: int) -> "ClassVector":
        return cls(turan_class_sizes(n, k))


def as_class_vector(c: "ClassVector | Sequence[int]") -> ClassVector:
    if isinstance(c, ClassVector):
        return c
    return ClassVector(tuple(int(x) for x in c))


def turan_class_sizes(n: int, k: int) -> tuple[int, ...]:
    """Class sizes of the Turán graph T_k(n), nonincreasing."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    q, r = divmod(n, k)
    return tuple([q + 1] * r + [q] * (k - r))


def complete_multipartite(c: ClassVector | Sequence[int]) -> Graph:
    """Complete multipartite graph: classes of sizes ``c``, edges across classes."""
    cv = as_class_vector(c)
    n = cv.n
    cls_of = []
    for i, size in enumerate(cv.parts):
        cls_of.extend([i] * size)
    class_mask = [0] * cv.k
    for v, i in enumerate(cls_of):
        class_mask[i] |= 1 << v
    full = (1 << n) - 1
    adj = tuple(full & ~class_mask[cls_of[v]] for v in range(n))
    return Graph(n, adj)


def turan_graph(n: int, k: int) -> Graph:
    return complete_multipartite(turan_class_sizes(n, k))


def turan_edge_count(n: int, k: int) -> int:
    """Number of edges of T_k(n)."""
    sizes = turan_class_sizes(n, k)
    return (n * n - sum(s * s for s in sizes)) // 2


def vertex_classes(c: ClassVector | Sequence[int]) -> tuple[int, ...]:
    """Class index of each vertex of ``complete_multipartite(c)``."""
    cv = as_class_vector(c)
    out = []
    for i, size in enumerate(cv.parts):
        out.extend([i] * size)
    return tuple(out)


# ---------------------------------------------------------------------------
# Chromatic diagnostics
# ---------------------------------------------------------------------------


def _independent_set_counts(g: Graph) -> list[int]:
    """ind[S] = number of independent subsets of S (including the empty set)."""
    n = g.n
    ind = [0] * (1 << n)
    ind[0] = 1
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        ind[mask] = ind[rest] + ind[rest & ~g.adj[v]]
    return ind


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by inclusion-exclusion over independent sets.

    Capped at 16 vertices; the table has 2^n entries.
    """
    if g.n > CHROMATIC_CAP:
        raise ValueError(f"chromatic_number capped at {CHROMATIC_CAP} vertices")
    n = g.n
    if g.edge_count == 0:
        return 1
    ind = _independent_set_counts(g)
    full = (1 << n) - 1
    for t in range(2, n + 1):
        total = 0
        for mask in range(1 << n):
            term = ind[mask] ** t
            if (full ^ mask).bit_count() & 1:
                total -= term
            else:
                total += term
        if total > 0:
            return t
    return n


def has_critical_edge(g: Graph) -> bool:
    """True iff removing some edge lowers the chromatic number."""
    chi = chromatic_number(g)
    if chi <= 1:
        return False
    for u, v in g.edges():
        if chromatic_number(g.without_edges([(u, v)])) == chi - 1:
            return True
    return False


# ---------------------------------------------------------------------------
# Best k-partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionInfo:
    """A k-partition of the vertices with its within-class (irregular) edges."""

    assignment: tuple[int, ...]
    irregular_edges: tuple[tuple[int, int], ...]
    regular_edges: int
    certified: bool = True


def _partition_info(g: Graph, assignment: Sequence[int], certified: bool) -> PartitionInfo:
    irregular = tuple(
        (u, v) for u, v in g.edges() if assignment[u] == assignment[v]
    )
    return PartitionInfo(
        assignment=tuple(assignment),
        irregular_edges=irregular,
        regular_edges=g.edge_count - len(irregular),
        certified=certified,
    )


def _greedy_partition(g: Graph, k: int) -> list[int]:
    assignment = [0] * g.n
    for v in range(g.n):
        best_cls, best_cost = 0, None
        for c in range(k):
            cost = sum(1 for u in range(v) if assignment[u] == c and g.has_edge(u, v))
            if best_cost is None or cost < best_cost:
                best_cls, best_cost = c, cost
        assignment[v] = best_cls
    # 1-opt moves until stable
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            cur = assignment[v]
            costs = [0] * k
            for u in _bits(g.adj[v]):
                costs[assignment[u]] += 1
            best = min(range(k), key=lambda c: costs[c])
            if costs[best] < costs[cur]:
                assignment[v] = best
                improved = True
    return assignment


def best_k_partition(g: Graph, k: int, *, exhaustive_cap: int = PARTITION_CAP) -> PartitionInfo:
    """A k-partition of ``g`` minimizing the number of within-class edges.

    Exhaustive branch-and-bound (restricted-growth assignments, so class
    labels are canonical) up to ``exhaustive_cap`` vertices, with the
    lexicographically smallest optimal assignment.  Beyond the cap a greedy +
    local-search heuristic is used and the result is flagged ``certified=False``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.n
    if n > exhaustive_cap:
        return _partition_info(g, _greedy_partition(g, k), certified=False)

    greedy = _greedy_partition(g, k)
    best_cost = sum(1 for u, v in g.edges() if greedy[u] == greedy[v])
    best_assignment: list[int] | None = None
    assignment = [0] * n

    def descend(v: int, cost: int, used: int) -> None:
        nonlocal best_cost, best_assignment
        if cost > best_cost or (cost == best_cost and best_assignment is not None):
            return
        if v == n:
            if cost < best_cost or best_assignment is None:
                best_cost = cost
                best_assignment = assignment.copy()
            return
        for c in range(min(used + 1, k)):
            extra = 0
            for u in _bits(g.adj[v] & ((1 << v) - 1)):
                if assignment[u] == c:
                    extra += 1
            assignment[v] = c
            descend(v + 1, cost + extra, max(used, c + 1))
        assignment[v] = 0

    descend(0, 0, 0)
    assert best_assignment is not None  # the greedy cost is always attainable
    return _partition_info(g, best_assignment, certified=True)


def falling_factorial(n: int, i: int) -> int:
    """(n)_i = n (n-1) ... (n-i+1); equals 1 for i = 0."""
    out = 1
    for j in range(i):
        out *= n - j
    return out
