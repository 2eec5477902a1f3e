"""Deciding strong set-colorability by exhaustive search.

solve() backtracks over vertex labels directly, deriving every edge
label by XOR, and is the reference the packing route is checked
against.  exhaustive_oracle() re-decides tiny instances with no
pruning at all, over explicit subsets instead of bitmasks, so the two
share no code path.  enumerate_colorable() sweeps every graph shape at
a given size and keeps the colorable ones.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coloring import Coloring
from .errors import InputError, UnsupportedError
from .gf2 import MAX_DIMENSION, ColorVector, subset_to_vector
from .graphs import CANONICAL_VERTEX_CAP, Graph, canonical_form

COLORABLE = "colorable"
NOT_COLORABLE = "not colorable"
NOT_COLORABLE_SIZE = "not colorable (size)"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for solve().

    find_all counts every coloring instead of stopping at the first.
    use_symmetry pins the first assigned vertex to label 1; invertible
    linear maps act transitively on nonzero labels and preserve the
    XOR rule, so the verdict is unchanged while the count shrinks.
    node_limit bounds attempted label placements; exceeding it yields
    the inconclusive outcome instead of a verdict.
    """

    find_all: bool = False
    use_symmetry: bool = False
    node_limit: int | None = None

    def __post_init__(self) -> None:
        if self.node_limit is not None:
            if not isinstance(self.node_limit, int) or self.node_limit < 1:
                raise InputError(f"node_limit must be positive, got {self.node_limit!r}")


@dataclass(frozen=True)
class SolveResult:
    status: str
    coloring: Coloring | None
    count: int | None
    nodes: int


def dimension_for_size(total: int) -> int | None:
    """The n with total = 2^n - 1, or None when no such n exists."""
    if total < 1:
        return None
    x = total + 1
    if x & (x - 1):
        return None
    n = x.bit_length() - 1
    if n > MAX_DIMENSION:
        raise UnsupportedError(f"size {total} needs dimension {n} > {MAX_DIMENSION}")
    return n


def _search(g: Graph, n: int, cfg: SearchConfig, first_label: int | None) -> SolveResult:
    nv = g.num_vertices
    size = 1 << n
    deg = g.degrees()
    # High-degree vertices first: they complete edges early, which is
    # where pruning comes from.
    order = sorted(range(nv), key=lambda v: (-deg[v], v))
    position = {v: i for i, v in enumerate(order)}
    closers: list[list[int]] = [[] for _ in range(nv)]
    for u, v in g.edges:
        if position[u] > position[v]:
            u, v = v, u
        closers[position[v]].append(u)

    labels = [0] * nv
    used = bytearray(size)
    used[0] = 1  # derived edge labels may never be zero
    state = {"nodes": 0, "count": 0, "first": None, "limited": False}
    limit = cfg.node_limit

    def snapshot() -> Coloring:
        vertex_labels = {v: ColorVector(labels[v], n) for v in range(nv)}
        edge_labels = {
            (u, v): ColorVector(labels[u] ^ labels[v], n) for u, v in g.edges
        }
        return Coloring(n, vertex_labels, edge_labels)

    def extend(i: int) -> bool:
        if i == nv:
            state["count"] += 1
            if state["first"] is None:
                state["first"] = snapshot()
            return not cfg.find_all
        v = order[i]
        if i == 0 and first_label is not None:
            candidates = range(first_label, first_label + 1)
        else:
            candidates = range(1, size)
        for c in candidates:
            if used[c]:
                continue
            state["nodes"] += 1
            if limit is not None and state["nodes"] > limit:
                state["limited"] = True
                return True
            derived = []
            ok = True
            for u in closers[i]:
                e = labels[u] ^ c
                if used[e]:
                    ok = False
                    break
                used[e] = 1
                derived.append(e)
            if ok:
                used[c] = 1
                labels[v] = c
                stop = extend(i + 1)
                used[c] = 0
                if stop:
                    for e in derived:
                        used[e] = 0
                    return True
            for e in derived:
                used[e] = 0
        return False

    extend(0)
    if state["limited"]:
        return SolveResult(INCONCLUSIVE, state["first"], None, state["nodes"])
    if state["count"] > 0:
        count = state["count"] if cfg.find_all else None
        return SolveResult(COLORABLE, state["first"], count, state["nodes"])
    return SolveResult(NOT_COLORABLE, None, 0 if cfg.find_all else None, state["nodes"])


def _solve_branch(payload: tuple[Graph, int, SearchConfig, int]) -> SolveResult:
    g, n, cfg, label = payload
    return _search(g, n, cfg, label)


def solve(g: Graph, cfg: SearchConfig | None = None, threads: int = 1) -> SolveResult:
    """Decide strong set-colorability of g by exhaustive backtracking.

    Graphs whose element count is not 2^n - 1 are rejected immediately
    without search.  Otherwise vertices are assigned nonzero labels in
    descending-degree order and edge labels are derived, never guessed.
    threads > 1 splits the search at the root by the first vertex's
    label; the verdict and count are identical to the sequential run.
    """
    if cfg is None:
        cfg = SearchConfig()
    if not isinstance(threads, int) or threads < 1:
        raise InputError(f"threads must be a positive integer, got {threads!r}")
    total = g.num_vertices + g.num_edges
    n = dimension_for_size(total)
    if n is None:
        return SolveResult(NOT_COLORABLE_SIZE, None, 0 if cfg.find_all else None, 0)

    first_label = 1 if cfg.use_symmetry else None
    if threads == 1 or g.num_vertices == 0:
        return _search(g, n, cfg, first_label)

    if cfg.node_limit is not None:
        raise InputError("node_limit is not supported with threads > 1")
    roots = [1] if cfg.use_symmetry else list(range(1, 1 << n))
    payloads = [(g, n, cfg, c) for c in roots]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_solve_branch, payloads))
    nodes = sum(r.nodes for r in results)
    first = next((r.coloring for r in results if r.coloring is not None), None)
    if cfg.find_all:
        count = sum(r.count for r in results)
        if count > 0:
            return SolveResult(COLORABLE, first, count, nodes)
        return SolveResult(NOT_COLORABLE, None, 0, nodes)
    if first is not None:
        return SolveResult(COLORABLE, first, None, nodes)
    return SolveResult(NOT_COLORABLE, None, None, nodes)


def exhaustive_oracle(g: Graph) -> Coloring | None:
    """Independent decision procedure for tiny graphs.

    Tries every injective assignment of nonempty color subsets to the
    vertices and validates the whole candidate at the end, with sets
    rather than bitmasks.  Deliberately unpruned; used to cross-check
    solve().
    """
    total = g.num_vertices + g.num_edges
    n = dimension_for_size(total)
    if n is None:
        return None
    if n > 3:
        raise UnsupportedError(f"exhaustive oracle is limited to n <= 3, needed {n}")
    colors = range(1, n + 1)
    subsets = [
        frozenset(c)
        for r in range(1, n + 1)
        for c in itertools.combinations(colors, r)
    ]
    for assignment in itertools.permutations(subsets, g.num_vertices):
        edge_sets = [assignment[u] ^ assignment[v] for u, v in g.edges]
        if any(not s for s in edge_sets):
            continue
        everything = list(assignment) + edge_sets
        if len(set(everything)) != total:
            continue
        vertex_labels = {
            v: subset_to_vector(assignment[v], n) for v in range(g.num_vertices)
        }
        edge_labels = {
            e: subset_to_vector(edge_sets[k], n) for k, e in enumerate(g.edges)
        }
        return Coloring(n, vertex_labels, edge_labels)
    return None


def _is_connected(g: Graph) -> bool:
    if g.num_vertices == 0:
        return True
    adj = g.adjacency_masks()
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        rest = adj[v] & ~seen
        while rest:
            low = rest & -rest
            seen |= low
            stack.append(low.bit_length() - 1)
            rest ^= low
    return seen == (1 << g.num_vertices) - 1


def _cores_by_edge_count(total: int) -> list[list[Graph]]:
    """Canonical graphs without isolated vertices, grouped by edge count.

    Level b holds every isomorphism class with b edges on at most
    min(10, total - b) vertices; that cap is exact because a core used
    in a graph with total elements leaves total - b vertex slots.  Each
    level grows from the previous one by a single edge: inside the
    existing vertices, hanging off one new vertex, or as a detached
    pair.  Removing one edge (and stripping the endpoints it frees)
    inverts each move, so no class is missed.
    """
    levels: list[list[Graph]] = [[Graph(0)]]
    for b in range(total):
        limit = min(CANONICAL_VERTEX_CAP, total - (b + 1))
        nxt: list[Graph] = []
        seen: set[Graph] = set()
        if limit >= 2:
            for g in levels[b]:
                k = g.num_vertices
                existing = set(g.edges)
                grown: list[Graph] = []
                for u in range(k):
                    for v in range(u + 1, k):
                        if (u, v) not in existing:
                            grown.append(Graph(k, g.edges + ((u, v),)))
                if k + 1 <= limit:
                    grown.extend(
                        Graph(k + 1, g.edges + ((u, k),)) for u in range(k)
                    )
                if k + 2 <= limit:
                    grown.append(Graph(k + 2, g.edges + ((k, k + 1),)))
                for cand in grown:
                    if cand.num_vertices > limit:
                        continue
                    canon = canonical_form(cand)
                    if canon not in seen:
                        seen.add(canon)
                        nxt.append(canon)
        levels.append(nxt)
        if not nxt:
            levels.extend([] for _ in range(total - b - 1))
            break
    return levels


def enumerate_colorable(n: int, connected_only: bool = False) -> list[Graph]:
    """All strongly set-colorable graphs with 2^n - 1 elements, up to
    isomorphism, as canonical representatives.

    Every vertex/edge split of the total is swept.  Isomorphism classes
    are generated as an isolated-vertex-free core plus padding; a
    canonical core padded with trailing isolated vertices is itself
    canonical, since any minimal relabeling packs the non-isolated
    vertices into the lowest labels.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"dimension must be a positive integer, got {n!r}")
    if n > 4:
        raise UnsupportedError(f"enumeration is limited to n <= 4, got {n}")
    total = (1 << n) - 1
    levels = _cores_by_edge_count(total)
    out = []
    for b in range(total + 1):
        a = total - b
        if a < 1 or b > a * (a - 1) // 2:
            continue
        for core in levels[b]:
            if core.num_vertices > a:
                continue
            g = Graph(a, core.edges)
            if connected_only and not _is_connected(g):
                continue
            res = solve(g, SearchConfig(use_symmetry=True))
            if res.status == COLORABLE:
                out.append(g)
    out.sort(key=lambda g: (g.num_vertices, g.num_edges, g.edges))
    return out
