"""Simple graphs, their incidence triple structure, and canonical forms.

A graph on m vertices with e edges spans m + e incidence points:
vertex v is point v, and the edge of rank k in sorted edge order is
point m + k.  Every edge uv contributes the triple {u, v, point(uv)}.
Label files and packing searches all rely on this numbering, so it is
frozen here and never recomputed differently elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, UnsupportedError

# canonical_form searches over vertex relabelings; above this it would
# stop being a desk-scale tool.
CANONICAL_VERTEX_CAP = 10


@dataclass(frozen=True, slots=True, init=False)
class Graph:
    """Finite simple graph on vertices 0..num_vertices-1.

    Edges are normalized to (min, max) pairs and stored sorted, so
    structural equality is plain field equality.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, num_vertices: int, edges=()) -> None:
        if not isinstance(num_vertices, int) or isinstance(num_vertices, bool):
            raise InputError(f"vertex count must be an integer, got {num_vertices!r}")
        if num_vertices < 0:
            raise InputError(f"vertex count must be nonnegative, got {num_vertices}")
        seen = set()
        normalized = []
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise InputError(f"edge must be a pair, got {edge!r}") from None
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InputError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        normalized.sort()
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks over vertex indices."""
        adj = [0] * self.num_vertices
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


@dataclass(frozen=True, slots=True)
class Hypergraph:
    """The 3-uniform incidence structure of a graph.

    Points are the m + e incidence points described in the module
    docstring; each triple is (u, v, edge point) for one edge uv.
    """

    num_points: int
    triples: tuple[tuple[int, int, int], ...]

    @property
    def num_vertices(self) -> int:
        return self.num_points - len(self.triples)


def build_hypergraph(g: Graph) -> Hypergraph:
    m = g.num_vertices
    triples = tuple((u, v, m + k) for k, (u, v) in enumerate(g.edges))
    return Hypergraph(m + len(triples), triples)


def iter_records(text: str):
    """Yield (line number, tokens) for significant lines of a text file.

    Blank lines and lines starting with '#' are skipped.  Shared by all
    the line-oriented file formats in this package.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: {what} must be an integer, got {token!r}") from None


def parse_graph(text: str) -> Graph:
    """Read the graph file format.

    Header `graph <num_vertices> <num_edges>` followed by exactly
    num_edges lines `e <u> <v>`.  Errors carry the offending line
    number.
    """
    records = iter_records(text)
    try:
        lineno, tokens = next(records)
    except StopIteration:
        raise InputError("empty graph file") from None
    if len(tokens) != 3 or tokens[0] != "graph":
        raise InputError(f"line {lineno}: expected header 'graph <num_vertices> <num_edges>'")
    num_vertices = parse_int(tokens[1], lineno, "vertex count")
    num_edges = parse_int(tokens[2], lineno, "edge count")
    if num_vertices < 0 or num_edges < 0:
        raise InputError(f"line {lineno}: counts must be nonnegative")

    edges = []
    seen = set()
    for lineno, tokens in records:
        if len(edges) == num_edges:
            raise InputError(f"line {lineno}: unexpected content after {num_edges} edges")
        if len(tokens) != 3 or tokens[0] != "e":
            raise InputError(f"line {lineno}: expected edge line 'e <u> <v>'")
        u = parse_int(tokens[1], lineno, "vertex")
        v = parse_int(tokens[2], lineno, "vertex")
        if not (0 <= u < num_vertices) or not (0 <= v < num_vertices):
            raise InputError(f"line {lineno}: vertex out of range in edge ({u}, {v})")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise InputError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != num_edges:
        raise InputError(f"expected {num_edges} edge lines, found {len(edges)}")
    return Graph(num_vertices, edges)


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.num_vertices} {g.num_edges}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def canonical_form(g: Graph) -> Graph:
    """Relabel g so its edge list is lexicographically least.

    Two graphs are isomorphic exactly when their canonical forms are
    equal.  The minimum edge list is found by maximizing the adjacency
    bits read row by row: labels are assigned one at a time, each new
    label's full row is forced by reordering the not-yet-labeled
    vertices neighbors-first inside their distinguishability classes,
    and only the partial labelings with the best rows so far survive.
    """
    if g.num_vertices > CANONICAL_VERTEX_CAP:
        raise UnsupportedError(
            f"canonical_form supports at most {CANONICAL_VERTEX_CAP} vertices, "
            f"got {g.num_vertices}"
        )
    n = g.num_vertices
    if not g.edges:
        return g
    adj = g.adjacency_masks()

    # Frontier entries are (labels placed so far, ordered partition of the
    # rest).  All entries agree on every committed row; entries whose
    # partitions coincide have identical futures, so one witness suffices.
    frontier = {(frozenset(range(n)),): ((), [list(range(n))])}
    for _ in range(n):
        best_row = -1
        survivors: dict = {}
        for placed, blocks in frontier.values():
            for w in blocks[0]:
                row = 0
                refined = []
                for block in blocks:
                    hits = []
                    misses = []
                    for x in block:
                        if x == w:
                            continue
                        if adj[w] >> x & 1:
                            hits.append(x)
                        else:
                            misses.append(x)
                    row = (row << (len(hits) + len(misses))) | (
                        ((1 << len(hits)) - 1) << len(misses)
                    )
                    if hits:
                        refined.append(hits)
                    if misses:
                        refined.append(misses)
                if row < best_row:
                    continue
                key = tuple(frozenset(b) for b in refined)
                if row > best_row:
                    best_row = row
                    survivors = {key: (placed + (w,), refined)}
                else:
                    survivors.setdefault(key, (placed + (w,), refined))
        frontier = survivors

    order = next(iter(frontier.values()))[0]
    pos = {v: i for i, v in enumerate(order)}
    edges = [(pos[u], pos[v]) for u, v in g.edges]
    return Graph(n, edges)
