"""Steiner triple systems on the nonzero vectors of F_2^n.

Points are the integers 1..2^n - 1 read as coordinate vectors, and the
blocks are the triples {p, q, p XOR q}.  Every pair of points lies in
exactly one block, so this is S(2, 3, 2^n - 1); the XOR closure is what
lets edge images be propagated instead of searched when embedding the
incidence triples of a graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .gf2 import check_dimension
from .graphs import Hypergraph


@dataclass(frozen=True, slots=True)
class TripleSystem:
    n: int
    num_points: int
    blocks: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True, slots=True)
class PackingEmbedding:
    """Images of the incidence points of a graph inside a triple system.

    point_map[i] is the system point carrying incidence point i.  A
    valid embedding is injective and sends every incidence triple onto
    a block, which the XOR model reduces to a zero triple sum.
    """

    point_map: tuple[int, ...]


def third_point(p: int, q: int) -> int:
    """The point completing the unique block through p and q."""
    if p <= 0 or q <= 0:
        raise InputError(f"points must be positive, got {p} and {q}")
    if p == q:
        raise InputError(f"no block through a repeated point {p}")
    return p ^ q


def generate_sts(n: int) -> TripleSystem:
    """All blocks {p, q, p XOR q} with p < q < p XOR q, in sorted order.

    n = 1 gives the degenerate one-point system with no blocks.
    """
    check_dimension(n)
    num_points = (1 << n) - 1
    blocks = []
    for p in range(1, num_points + 1):
        for q in range(p + 1, num_points + 1):
            r = p ^ q
            if q < r:
                blocks.append((p, q, r))
    return TripleSystem(n, num_points, tuple(blocks))


def verify_pair_coverage(ts: TripleSystem) -> bool:
    """True when every pair of distinct points lies in exactly one block."""
    width = ts.num_points + 1
    counts = bytearray(width * width)
    for p, q, r in ts.blocks:
        for a, b in ((p, q), (p, r), (q, r)):
            if a > b:
                a, b = b, a
            idx = a * width + b
            if counts[idx]:
                return False
            counts[idx] = 1
    for a in range(1, ts.num_points + 1):
        base = a * width
        for b in range(a + 1, ts.num_points + 1):
            if not counts[base + b]:
                return False
    return True


def sts_to_text(ts: TripleSystem) -> str:
    lines = [f"sts {ts.n} {ts.num_points} {len(ts.blocks)}"]
    lines.extend(f"b {p} {q} {r}" for p, q, r in ts.blocks)
    return "\n".join(lines) + "\n"


def check_packing_embedding(h: Hypergraph, emb: PackingEmbedding, n: int) -> bool:
    """Decide whether emb maps h bijectively onto points with block triples."""
    check_dimension(n)
    num_points = (1 << n) - 1
    if h.num_points != num_points:
        raise InputError(
            f"hypergraph has {h.num_points} points, expected {num_points} for n = {n}"
        )
    pm = emb.point_map
    if len(pm) != num_points:
        return False
    seen = bytearray(num_points + 1)
    for p in pm:
        if not isinstance(p, int) or p < 1 or p > num_points or seen[p]:
            return False
        seen[p] = 1
    for a, b, c in h.triples:
        if pm[a] ^ pm[b] ^ pm[c] != 0:
            return False
    return True


def find_packing_embedding(h: Hypergraph, n: int) -> PackingEmbedding | None:
    """Search for an embedding of h onto the points of S(2, 3, 2^n - 1).

    Backtracking assigns graph vertices in index order, always trying
    the lowest free point first; the image of each edge point is forced
    by XOR as soon as both endpoints are placed.  Exhaustive, so None
    means no embedding exists.  Intended for desk-scale n.
    """
    check_dimension(n)
    num_points = (1 << n) - 1
    if h.num_points != num_points:
        raise InputError(
            f"hypergraph has {h.num_points} points, expected {num_points} for n = {n}"
        )
    nv = h.num_vertices

    # For each vertex, the triples it closes: (earlier vertex, edge point).
    closers: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for a, b, c in h.triples:
        closers[max(a, b)].append((min(a, b), c))

    point_map = [0] * num_points
    used = bytearray(num_points + 1)

    def extend(v: int) -> bool:
        if v == nv:
            return True
        for p in range(1, num_points + 1):
            if used[p]:
                continue
            used[p] = 1
            point_map[v] = p
            derived = []
            ok = True
            for u, e in closers[v]:
                r = point_map[u] ^ p
                if used[r]:
                    ok = False
                    break
                used[r] = 1
                point_map[e] = r
                derived.append(r)
            if ok and extend(v + 1):
                return True
            for r in derived:
                used[r] = 0
            used[p] = 0
        return False

    if extend(0):
        return PackingEmbedding(tuple(point_map))
    return None
