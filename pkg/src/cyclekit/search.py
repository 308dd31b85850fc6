"""Exhaustive desk-scale search and verification.

Enumeration generates one representative per isomorphism class by vertex
augmentation: every graph on m+1 vertices arises from a graph on m vertices
by attaching a new vertex, and forbidden-subgraph freeness is hereditary, so
augmenting the representatives level by level reaches every class.  Children
are deduplicated inside invariant buckets with exact isomorphism tests.

The verify_* suites check the counting inequalities exactly, in integer or
rational arithmetic, across every composition in range.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Iterator, Sequence

from .analytic import (
    cycle_spectrum_multipartite,
    hamilton_multipartite,
    prob_Q_given_P,
    rooted_hamilton_permutations_general,
)
from .counting import count_cycles
from .graphs import Graph, complete_multipartite, turan_class_sizes
from .morphisms import canonical_label, contains_subgraph, invariant_key, is_isomorphic
from .graph_io import graph_to_graph6

ENUM_CAP = 9


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------


def partitions_at_most(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of positive ints summing to n, at most k parts."""

    def rec(remaining: int, parts_left: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if parts_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - first, parts_left - 1, first, prefix + (first,))

    yield from rec(n, k, n, ())


def partitions_exact(n: int, k: int) -> Iterator[tuple[int, ...]]:
    for p in partitions_at_most(n, k):
        if len(p) == k:
            yield p


def compositions_exact(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of k positive ints summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions_exact(n - first, k - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Isomorphism-free enumeration
# ---------------------------------------------------------------------------


def _augmentations(parents: list[Graph], forbid: Graph | None) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for parent in parents:
        m = parent.n
        for nb in range(1 << m):
            adj = [row | ((nb >> v & 1) << m) for v, row in enumerate(parent.adj)]
            adj.append(nb)
            child = Graph(m + 1, tuple(adj))
            if forbid is not None and contains_subgraph(child, forbid, require_vertex=m):
                continue
            bucket = buckets.setdefault(invariant_key(child), [])
            if any(is_isomorphic(child, seen) for seen in bucket):
                continue
            bucket.append(child)
            out.append(child)
    return out


def enumerate_graphs(n: int, forbid: Graph | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of forbid-free graphs on n vertices."""
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"enumeration capped at {ENUM_CAP} vertices")
    level = [Graph(1, (0,))]
    if forbid is not None and forbid.n <= 1:
        raise ValueError("forbidden graph needs at least 2 vertices")
    for _ in range(1, n):
        level = _augmentations(level, forbid)
    yield from level


def extremal_number(t: int, forbid: Graph) -> int:
    """Maximum edge count of a forbid-free graph on t vertices (exhaustive)."""
    return max(g.edge_count for g in enumerate_graphs(t, forbid))


def extremal_function_from_search(forbid: Graph, t_max: int) -> "ExtremalFunction":
    """Edge-maximum table for the path-product optimizer, filled by exhaustive
    search over forbid-free graphs (t_max capped by the enumeration limit)."""
    from .bounds import ExtremalFunction

    values = tuple(extremal_number(t, forbid) for t in range(2, t_max + 1))
    return ExtremalFunction(values, provenance="exhaustive")


# ---------------------------------------------------------------------------
# Maximum-cycle search
# ---------------------------------------------------------------------------


@dataclass
class SearchResult:
    n: int
    forbidden: str
    max_cycles: int
    extremal_graphs: tuple[str, ...]
    unique: bool
    graphs_examined: int
    elapsed: float
    from_cache: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forbidden": self.forbidden,
            "max_cycles": str(self.max_cycles),
            "extremal_graphs": list(self.extremal_graphs),
            "unique": self.unique,
            "graphs_examined": self.graphs_examined,
            "elapsed": self.elapsed,
            "from_cache": self.from_cache,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "SearchResult":
        return cls(
            n=int(raw["n"]),
            forbidden=raw["forbidden"],
            max_cycles=int(raw["max_cycles"]),
            extremal_graphs=tuple(raw["extremal_graphs"]),
            unique=bool(raw["unique"]),
            graphs_examined=int(raw["graphs_examined"]),
            elapsed=float(raw["elapsed"]),
            from_cache=bool(raw.get("from_cache", False)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _cache_path(cache_dir: Path, n: int, h_canonical_g6: str) -> Path:
    digest = hashlib.sha256(h_canonical_g6.encode()).hexdigest()[:16]
    return cache_dir / f"maxcycles_n{n}_{digest}.json"


def max_cycles_h_free(
    n: int,
    forbid: Graph,
    *,
    forbid_label: str | None = None,
    cache_dir: str | Path | None = None,
) -> SearchResult:
    """Exact maximum cycle count over forbid-free graphs on n vertices, with
    all extremal isomorphism classes as canonical graph6 strings.

    Results are cached per (n, canonical form of the forbidden graph) when a
    cache directory is given; rerunning serves the stored report.
    """
    canon_h, _ = canonical_label(forbid)
    canon_g6 = graph_to_graph6(canon_h)
    label = forbid_label if forbid_label is not None else canon_g6
    path = None
    if cache_dir is not None:
        path = _cache_path(Path(cache_dir), n, canon_g6)
        if path.exists():
            result = SearchResult.from_dict(json.loads(path.read_text()))
            result.from_cache = True
            return result
    t0 = time.perf_counter()
    best = 0
    extremal: list[Graph] = []
    examined = 0
    for g in enumerate_graphs(n, forbid):
        examined += 1
        c = count_cycles(g)
        if c > best or not extremal:
            best = c
            extremal = [g]
        elif c == best:
            extremal.append(g)
    g6s = tuple(sorted(graph_to_graph6(canonical_label(g)[0]) for g in extremal))
    result = SearchResult(
        n=n,
        forbidden=label,
        max_cycles=best,
        extremal_graphs=g6s,
        unique=len(g6s) == 1,
        graphs_examined=examined,
        elapsed=time.perf_counter() - t0,
        from_cache=False,
    )
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(result.to_json())
    return result


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    name: str
    params: dict
    cases: list[dict] = field(default_factory=list)
    failures: int = 0
    passed: bool | None = None  # None: findings only, nothing asserted

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_turan_dominance(
    n: int, k: int, sample_subgraphs: int = 0, seed: int = 0
) -> VerifyReport:
    """Balanced class sizes dominate: per-length cycle counts of T_k(n) are
    pointwise maximal over all complete multipartite graphs with at most k
    classes, strictly in total for unbalanced ones once n >= 5; sampled proper
    spanning subgraphs stay strictly below as well."""
    report = VerifyReport(
        name="turanbest",
        params={"n": n, "k": k, "sample_subgraphs": sample_subgraphs, "seed": seed},
    )
    balanced = turan_class_sizes(n, k)
    t_spec = cycle_spectrum_multipartite(balanced)
    t_total = sum(t_spec.values())
    rng = random.Random(seed)
    for comp in partitions_at_most(n, k):
        spec = cycle_spectrum_multipartite(comp)
        dominated = all(
            t_spec.get(r, 0) >= spec.get(r, 0) for r in set(spec) | set(t_spec)
        )
        case = {
            "composition": list(comp),
            "total": str(sum(spec.values())),
            "dominated": dominated,
        }
        ok = dominated
        is_balanced = comp == tuple(sorted(balanced, reverse=True))
        if n >= 5 and not is_balanced:
            strict = t_total > sum(spec.values())
            case["strict"] = strict
            ok = ok and strict
        sampled_failures = 0
        kg = complete_multipartite(comp)
        edges = list(kg.edges())
        if sample_subgraphs and edges:
            for _ in range(sample_subgraphs):
                mask = rng.randrange(1, 1 << len(edges))
                drop = [e for i, e in enumerate(edges) if mask >> i & 1]
                sub_total = count_cycles(kg.without_edges(drop))
                good = sub_total < t_total if n >= 5 else sub_total <= t_total
                if not good:
                    sampled_failures += 1
            case["sampled"] = sample_subgraphs
            case["sampled_failures"] = sampled_failures
        ok = ok and sampled_failures == 0
        case["ok"] = ok
        if not ok:
            report.failures += 1
        report.cases.append(case)
    report.passed = report.failures == 0
    return report


def verify_balanced_code_probability(n: int, k: int) -> VerifyReport:
    """Among words with fixed letter content, balanced content maximizes the
    probability of being cyclically adjacent-distinct (exact rationals).

    Contents with empty letters reduce to fewer-letter instances, so ranging
    over partitions into at most k positive parts covers every content.
    """
    report = VerifyReport(name="major", params={"n": n, "k": k})
    if k < 2:
        report.passed = True
        report.cases.append({"note": "k=1 is degenerate; nothing to compare"})
        return report
    kk = min(k, n)  # empty letters reduce k > n to the all-distinct content
    p_balanced = prob_Q_given_P(turan_class_sizes(n, kk))
    for comp in partitions_at_most(n, kk):
        p = prob_Q_given_P(comp)
        ok = p_balanced >= p
        report.cases.append(
            {
                "composition": list(comp),
                "prob": f"{p.numerator}/{p.denominator}",
                "balanced_prob": f"{p_balanced.numerator}/{p_balanced.denominator}",
                "ok": ok,
            }
        )
        if not ok:
            report.failures += 1
    report.passed = report.failures == 0
    return report


def _move(comp: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    out = list(comp)
    out[i - 1] += 1
    out[j - 1] -= 1
    return tuple(out)


def verify_rooted_move_inequality(n: int, k: int) -> VerifyReport:
    """Exact check that moving one vertex from a larger class j to a smaller
    class i (c_i <= c_j - 2) cannot shrink the rooted Hamilton count by more
    than the factor (c_i+1)c_j / (c_i(c_j-1)); all ordered compositions."""
    if k < 3:
        raise ValueError("k must be >= 3")
    report = VerifyReport(name="stepcount", params={"n": n, "k": k})
    for comp in compositions_exact(n, k):
        base: int | None = None
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i == j or comp[i - 1] > comp[j - 1] - 2:
                    continue
                if base is None:
                    base = rooted_hamilton_permutations_general(comp, 1, 2)
                moved = _move(comp, i, j)
                other = rooted_hamilton_permutations_general(moved, 1, 2)
                ci, cj = comp[i - 1], comp[j - 1]
                ok = base * ci * (cj - 1) <= (ci + 1) * cj * other
                report.cases.append(
                    {
                        "composition": list(comp),
                        "move": [i, j],
                        "lhs": str(base),
                        "rhs_count": str(other),
                        "ok": ok,
                    }
                )
                if not ok:
                    report.failures += 1
    report.passed = report.failures == 0
    return report


def _matched_balanced(comp: tuple[int, ...]) -> tuple[int, ...] | None:
    """Balanced sizes arranged so b_i >= b_j exactly when c_i >= c_j, or None
    when no arrangement satisfies that (ties in c against unequal sizes)."""
    k = len(comp)
    sizes = sorted(turan_class_sizes(sum(comp), k), reverse=True)
    order = sorted(range(k), key=lambda idx: (-comp[idx], idx))
    b = [0] * k
    for rank, idx in enumerate(order):
        b[idx] = sizes[rank]
    for i in range(k):
        for j in range(k):
            if (b[i] >= b[j]) != (comp[i] >= comp[j]):
                return None
    return tuple(b)


def verify_rooted_turan_envelope(n: int, k: int) -> VerifyReport:
    """Exact check that the rooted Hamilton count of any composition is at
    most the matched Turán one times prod max(b_i/c_i, c_i/b_i).

    The comparison factor exp|log(b_i/c_i)| is exactly that rational maximum,
    so no rounding is involved.  Compositions admitting no order-matched
    balanced vector are reported as skipped.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    report = VerifyReport(name="close", params={"n": n, "k": k})
    for comp in compositions_exact(n, k):
        b = _matched_balanced(comp)
        if b is None:
            report.cases.append(
                {"composition": list(comp), "skipped": "no order-matched balanced vector"}
            )
            continue
        lhs = rooted_hamilton_permutations_general(comp, 1, 2)
        rhs = Fraction(rooted_hamilton_permutations_general(b, 1, 2))
        for ci, bi in zip(comp, b):
            rhs *= Fraction(max(bi, ci), min(bi, ci))
        ok = lhs <= rhs
        report.cases.append(
            {
                "composition": list(comp),
                "matched_balanced": list(b),
                "lhs": str(lhs),
                "rhs": str(rhs),
                "ok": ok,
            }
        )
        if not ok:
            report.failures += 1
    report.passed = report.failures == 0
    return report


def report_rooted_class_share(n: int, k: int) -> VerifyReport:
    """For every ordered pair of Turán classes, compare the rooted Hamilton
    count against (2/3k) of the total Hamilton count.  Findings only: the
    inequality is claimed for large n, so failures are recorded, not asserted.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    report = VerifyReport(name="turancount", params={"n": n, "k": k})
    sizes = turan_class_sizes(n, k)
    total = hamilton_multipartite(sizes)
    for r in range(1, k + 1):
        for s in range(1, k + 1):
            if r == s:
                continue
            hv = rooted_hamilton_permutations_general(sizes, r, s)
            holds = 3 * k * hv >= 2 * total
            report.cases.append(
                {
                    "root_class": r,
                    "second_class": s,
                    "root_size": sizes[r - 1],
                    "second_size": sizes[s - 1],
                    "rooted_count": str(hv),
                    "hamilton": str(total),
                    "holds": holds,
                }
            )
            if not holds:
                report.failures += 1
    report.passed = None
    return report


# ---------------------------------------------------------------------------
# Brute-force cross-checks (used by tests; kept here so the CLI can expose them)
# ---------------------------------------------------------------------------


def brute_force_graph_classes(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism by scanning every edge mask
    and deduplicating with the minimum adjacency key over all permutations.
    Exponential twice over; only sensible for n <= 5."""
    if n > 5:
        raise ValueError("brute-force class listing is a tiny-n cross-check")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(n, _adj_from_edges(n, edges))
        key = min(tuple(g.relabel(p).adj) for p in permutations(range(n)))
        if key not in seen:
            seen.add(key)
            out.append(Graph(n, key))
    return out


def _adj_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)
