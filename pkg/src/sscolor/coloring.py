"""Strong set-coloring certificates, their verifier, and the linear-time
construction from a packing realization.

A strong set-coloring of a graph with m vertices and e edges assigns to
every vertex and edge a distinct nonempty subset of an n-color set,
uses every subset exactly once (so m + e = 2^n - 1), and labels each
edge with the symmetric difference of its endpoint labels.  The
construction takes an embedding of the incidence points into the
triple system on 1..2^n - 1 plus a point labeling whose blocks XOR to
zero, and reads the coloring off in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .gf2 import ColorVector, check_dimension
from .graphs import Graph, iter_records, parse_int


@dataclass(frozen=True)
class Coloring:
    """A claimed strong set-coloring; verify_coloring decides the claim."""

    n: int
    vertex_labels: dict[int, ColorVector]
    edge_labels: dict[tuple[int, int], ColorVector]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None


@dataclass(frozen=True)
class PackingRealization:
    """Input bundle for color_from_packing.

    embedding maps incidence point indices (vertices, then edges in
    sorted order) to system points 1..2^n - 1.  point_labels optionally
    overrides the identity labeling of system points by vectors; raw
    integers are kept so that inconsistent inputs, including the zero
    vector, can be represented and then rejected by the construction.
    """

    n: int
    embedding: dict[int, int]
    point_labels: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        check_dimension(self.n)

    def label_of(self, point: int) -> int:
        return self.point_labels.get(point, point)


class PackingFailure(Exception):
    """Rejection of a packing realization, tagged with a failure class.

    F1: vertex and edge count is not 2^n - 1 for the claimed n
    F2: some element's point carries the zero label
    F3: some edge label differs from the XOR of its endpoint labels
    F4: two elements carry the same label
    """

    def __init__(self, code: str, element: str | None, detail: str) -> None:
        self.code = code
        self.element = element
        self.detail = detail
        where = f" at {element}" if element else ""
        super().__init__(f"{code}{where}: {detail}")


def _describe(g: Graph, idx: int) -> str:
    if idx < g.num_vertices:
        return f"vertex {idx}"
    u, v = g.edges[idx - g.num_vertices]
    return f"edge ({u}, {v})"


def verify_coloring(g: Graph, c: Coloring) -> Verdict:
    """Check a certificate against the defining conditions.

    Scan order is fixed: the size condition, then label distinctness
    over vertices in index order followed by edges in sorted order,
    then the symmetric-difference rule per edge.  The first violation
    is reported with the offending element.
    """
    n = check_dimension(c.n)
    for v in range(g.num_vertices):
        if v not in c.vertex_labels:
            raise InputError(f"coloring has no label for vertex {v}")
    for e in g.edges:
        if e not in c.edge_labels:
            raise InputError(f"coloring has no label for edge {e}")
    if len(c.vertex_labels) != g.num_vertices:
        extra = sorted(set(c.vertex_labels) - set(range(g.num_vertices)))[0]
        raise InputError(f"coloring labels unknown vertex {extra}")
    if len(c.edge_labels) != g.num_edges:
        extra = sorted(set(c.edge_labels) - set(g.edges))[0]
        raise InputError(f"coloring labels unknown edge {extra}")
    labels = [c.vertex_labels[v] for v in range(g.num_vertices)]
    labels.extend(c.edge_labels[e] for e in g.edges)
    for idx, label in enumerate(labels):
        if label.n != n:
            raise InputError(
                f"label of {_describe(g, idx)} has dimension {label.n}, expected {n}"
            )

    total = g.num_vertices + g.num_edges
    if total != (1 << n) - 1:
        return Verdict(
            False, f"size: |V| + |E| = {total} is not 2^{n} - 1 = {(1 << n) - 1}"
        )
    seen = bytearray(1 << n)
    for idx, label in enumerate(labels):
        if seen[label.bits]:
            return Verdict(
                False,
                f"duplicate label: {_describe(g, idx)} reuses {label.hex()}",
            )
        seen[label.bits] = 1
    for u, v in g.edges:
        expected = c.vertex_labels[u].bits ^ c.vertex_labels[v].bits
        got = c.edge_labels[(u, v)].bits
        if got != expected:
            return Verdict(
                False,
                f"edge rule: edge ({u}, {v}) has label {format(got, 'x')}, "
                f"expected {format(expected, 'x')}",
            )
    return Verdict(True)


def color_from_packing(g: Graph, pr: PackingRealization) -> Coloring:
    """Build a certificate from a packing realization in linear time.

    Raises PackingFailure with the failure class and offending element
    when the input is inconsistent; the checks run in a fixed order
    (F1 size, then F2 per element, then F3 per edge, then F4 per
    element), each a single pass.
    """
    n = pr.n
    num_points = (1 << n) - 1
    nv = g.num_vertices
    total = nv + g.num_edges
    if total != num_points:
        raise PackingFailure(
            "F1", None, f"|V| + |E| + 1 = {total + 1} is not 2^{n}"
        )

    values = [0] * total
    for idx in range(total):
        point = pr.embedding.get(idx)
        if point is None:
            raise InputError(f"realization assigns no point to {_describe(g, idx)}")
        if not (1 <= point <= num_points):
            raise InputError(
                f"point {point} of {_describe(g, idx)} is out of range 1..{num_points}"
            )
        value = pr.label_of(point)
        if not (0 <= value < (1 << n)):
            raise InputError(f"label of point {point} is out of range for n = {n}")
        if value == 0:
            raise PackingFailure(
                "F2", _describe(g, idx), f"point {point} carries the zero label"
            )
        values[idx] = value

    for k, (u, v) in enumerate(g.edges):
        expected = values[u] ^ values[v]
        got = values[nv + k]
        if got != expected:
            raise PackingFailure(
                "F3",
                f"edge ({u}, {v})",
                f"label {format(got, 'x')} is not the XOR {format(expected, 'x')} "
                f"of its endpoint labels",
            )

    seen = bytearray(1 << n)
    for idx, value in enumerate(values):
        if seen[value]:
            raise PackingFailure(
                "F4", _describe(g, idx), f"label {format(value, 'x')} already used"
            )
        seen[value] = 1

    vertex_labels = {v: ColorVector(values[v], n) for v in range(nv)}
    edge_labels = {
        e: ColorVector(values[nv + k], n) for k, e in enumerate(g.edges)
    }
    return Coloring(n, vertex_labels, edge_labels)


def make_star_realization(n: int) -> tuple[Graph, PackingRealization]:
    """A star whose incidence points tile the system by XOR pairs.

    The center takes point 1, and each remaining point pair {y, y^1}
    with y even carries one leaf and its edge, so {1, y, y^1} is a
    block.  With the identity point labeling this realization always
    colors successfully, at any size 2^n - 1.
    """
    check_dimension(n)
    leaves = (1 << (n - 1)) - 1
    g = Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    embedding = {0: 1}
    for i in range(1, leaves + 1):
        embedding[i] = 2 * i
        embedding[leaves + i] = 2 * i + 1
    return g, PackingRealization(n, embedding)


def coloring_to_text(c: Coloring) -> str:
    lines = [f"coloring {c.n}"]
    lines.extend(f"v {v} {c.vertex_labels[v].hex()}" for v in sorted(c.vertex_labels))
    lines.extend(
        f"e {u} {v} {c.edge_labels[(u, v)].hex()}" for u, v in sorted(c.edge_labels)
    )
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    records = iter_records(text)
    try:
        lineno, tokens = next(records)
    except StopIteration:
        raise InputError("empty coloring file") from None
    if len(tokens) != 2 or tokens[0] != "coloring":
        raise InputError(f"line {lineno}: expected header 'coloring <n>'")
    n = parse_int(tokens[1], lineno, "dimension")
    check_dimension(n)

    vertex_labels: dict[int, ColorVector] = {}
    edge_labels: dict[tuple[int, int], ColorVector] = {}
    for lineno, tokens in records:
        if tokens[0] == "v" and len(tokens) == 3:
            vid = parse_int(tokens[1], lineno, "vertex")
            if vid < 0:
                raise InputError(f"line {lineno}: vertex must be nonnegative")
            if vid in vertex_labels:
                raise InputError(f"line {lineno}: vertex {vid} labeled twice")
            vertex_labels[vid] = _parse_hex_label(tokens[2], n, lineno)
        elif tokens[0] == "e" and len(tokens) == 4:
            u = parse_int(tokens[1], lineno, "vertex")
            v = parse_int(tokens[2], lineno, "vertex")
            if u == v:
                raise InputError(f"line {lineno}: self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in edge_labels:
                raise InputError(f"line {lineno}: edge ({u}, {v}) labeled twice")
            edge_labels[(u, v)] = _parse_hex_label(tokens[3], n, lineno)
        else:
            raise InputError(
                f"line {lineno}: expected 'v <id> <hex>' or 'e <u> <v> <hex>'"
            )
    return Coloring(n, vertex_labels, edge_labels)


def _parse_hex_label(token: str, n: int, lineno: int) -> ColorVector:
    try:
        return ColorVector.from_hex(token, n)
    except InputError as exc:
        raise InputError(f"line {lineno}: {exc}") from None


def realization_to_text(g: Graph, pr: PackingRealization) -> str:
    nv = g.num_vertices
    for idx in range(nv + g.num_edges):
        if idx not in pr.embedding:
            raise InputError(f"realization assigns no point to {_describe(g, idx)}")
    lines = [f"realization {pr.n}"]
    lines.extend(f"v {v} {pr.embedding[v]}" for v in range(nv))
    lines.extend(
        f"e {u} {v} {pr.embedding[nv + k]}" for k, (u, v) in enumerate(g.edges)
    )
    lines.extend(
        f"lambda {point} {format(pr.point_labels[point], 'x')}"
        for point in sorted(pr.point_labels)
    )
    return "\n".join(lines) + "\n"


def parse_realization(text: str, g: Graph) -> PackingRealization:
    """Read a realization file; entries are matched against g."""
    records = iter_records(text)
    try:
        lineno, tokens = next(records)
    except StopIteration:
        raise InputError("empty realization file") from None
    if len(tokens) != 2 or tokens[0] != "realization":
        raise InputError(f"line {lineno}: expected header 'realization <n>'")
    n = parse_int(tokens[1], lineno, "dimension")
    check_dimension(n)
    num_points = (1 << n) - 1
    nv = g.num_vertices
    edge_rank = {e: nv + k for k, e in enumerate(g.edges)}

    embedding: dict[int, int] = {}
    point_labels: dict[int, int] = {}
    for lineno, tokens in records:
        if tokens[0] == "v" and len(tokens) == 3:
            vid = parse_int(tokens[1], lineno, "vertex")
            if not (0 <= vid < nv):
                raise InputError(f"line {lineno}: vertex {vid} not in graph")
            if vid in embedding:
                raise InputError(f"line {lineno}: vertex {vid} assigned twice")
            embedding[vid] = _parse_point(tokens[2], num_points, lineno)
        elif tokens[0] == "e" and len(tokens) == 4:
            u = parse_int(tokens[1], lineno, "vertex")
            v = parse_int(tokens[2], lineno, "vertex")
            if u > v:
                u, v = v, u
            idx = edge_rank.get((u, v))
            if idx is None:
                raise InputError(f"line {lineno}: edge ({u}, {v}) not in graph")
            if idx in embedding:
                raise InputError(f"line {lineno}: edge ({u}, {v}) assigned twice")
            embedding[idx] = _parse_point(tokens[3], num_points, lineno)
        elif tokens[0] == "lambda" and len(tokens) == 3:
            point = _parse_point(tokens[1], num_points, lineno)
            if point in point_labels:
                raise InputError(f"line {lineno}: point {point} labeled twice")
            try:
                value = int(tokens[2], 16)
            except ValueError:
                raise InputError(
                    f"line {lineno}: not a hex label: {tokens[2]!r}"
                ) from None
            if not (0 <= value < (1 << n)):
                raise InputError(
                    f"line {lineno}: label {tokens[2]} out of range for n = {n}"
                )
            point_labels[point] = value
        else:
            raise InputError(
                f"line {lineno}: expected 'v <id> <point>', 'e <u> <v> <point>' "
                f"or 'lambda <point> <hex>'"
            )

    for idx in range(nv + g.num_edges):
        if idx not in embedding:
            raise InputError(f"realization missing {_describe(g, idx)}")
    return PackingRealization(n, embedding, point_labels)


def _parse_point(token: str, num_points: int, lineno: int) -> int:
    point = parse_int(token, lineno, "point")
    if not (1 <= point <= num_points):
        raise InputError(f"line {lineno}: point {point} out of range 1..{num_points}")
    return point
