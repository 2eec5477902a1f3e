"""Shared helpers for the test suite.

These deliberately re-derive things the package also computes (graph
classes by brute force over edge subsets, isomorphism by permutation
search) so that tests compare two independent routes.
"""

from __future__ import annotations

import itertools

from sscolor import Graph, canonical_form


def permuted(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.num_vertices, [(perm[u], perm[v]) for u, v in g.edges])


def isomorphic_by_search(g1: Graph, g2: Graph) -> bool:
    """Plain permutation search, no canonicalization involved."""
    if g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges:
        return False
    target = set(g2.edges)
    for perm in itertools.permutations(range(g1.num_vertices)):
        mapped = {
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g1.edges
        }
        if mapped == target:
            return True
    return False


def all_graph_classes(total: int) -> list[Graph]:
    """Every isomorphism class with |V| + |E| = total.

    Ranks every edge subset for every vertex/edge split and keeps one
    canonical representative per class.
    """
    out = []
    for a in range(1, total + 1):
        b = total - a
        if b > a * (a - 1) // 2:
            continue
        pairs = list(itertools.combinations(range(a), 2))
        forms = set()
        for chosen in itertools.combinations(pairs, b):
            forms.add(canonical_form(Graph(a, chosen)))
        out.extend(sorted(forms, key=lambda g: (g.num_vertices, g.num_edges, g.edges)))
    return out
