"""End-to-end checks of the package's promises, one test per claim.

Each test prints a single PASS or FAIL line on the live terminal so a
full run reads as a checklist; the assert carries the same condition.
"""

import itertools
import random
import subprocess
import sys
import time

from sscolor import (
    COLORABLE,
    NOT_COLORABLE,
    NOT_COLORABLE_SIZE,
    ColorVector,
    Coloring,
    Graph,
    PackingFailure,
    PackingRealization,
    SearchConfig,
    build_hypergraph,
    check_packing_embedding,
    color_from_packing,
    exhaustive_oracle,
    find_packing_embedding,
    generate_sts,
    make_star_realization,
    solve,
    verify_coloring,
    verify_pair_coverage,
)
from util import all_graph_classes


def report(capfd, number, ok, detail):
    with capfd.disabled():
        print(f"acceptance {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_size_rejection_is_immediate(capfd):
    rng = random.Random(20260814)
    cases = []
    while len(cases) < 200:
        nv = rng.randrange(2, 26)
        pairs = list(itertools.combinations(range(nv), 2))
        ne = rng.randrange(0, len(pairs) + 1)
        g = Graph(nv, rng.sample(pairs, ne))
        total = nv + ne
        if total + 1 & total:
            cases.append(g)
    start = time.perf_counter()
    results = [solve(g) for g in cases]
    elapsed = time.perf_counter() - start
    ok = (
        all(r.status == NOT_COLORABLE_SIZE for r in results)
        and all(r.nodes == 0 for r in results)
        and elapsed < 1.0
    )
    report(
        capfd,
        1,
        ok,
        f"200 off-size graphs rejected with zero search nodes in {elapsed:.3f}s",
    )


def test_criterion_2_triple_systems_are_steiner(capfd):
    ok = True
    elapsed_top = 0.0
    for n in range(2, 11):
        start = time.perf_counter()
        ts = generate_sts(n)
        num_points = (1 << n) - 1
        ok = ok and len(ts.blocks) == num_points * (num_points - 1) // 6
        ok = ok and verify_pair_coverage(ts)
        if n == 10:
            elapsed_top = time.perf_counter() - start
    ok = ok and elapsed_top < 5.0
    report(
        capfd,
        2,
        ok,
        f"block counts and pair coverage hold for n = 2..10, n = 10 in "
        f"{elapsed_top:.2f}s",
    )


def test_criterion_3_solver_matches_unpruned_oracle(capfd):
    start = time.perf_counter()
    disagreements = 0
    bad_certs = 0
    checked = 0
    for total in (3, 7):
        for g in all_graph_classes(total):
            checked += 1
            res = solve(g)
            cert = exhaustive_oracle(g)
            if (res.status == COLORABLE) != (cert is not None):
                disagreements += 1
            if res.coloring is not None and not verify_coloring(g, res.coloring).ok:
                bad_certs += 1
            if cert is not None and not verify_coloring(g, cert).ok:
                bad_certs += 1
    elapsed = time.perf_counter() - start
    ok = disagreements == 0 and bad_certs == 0 and elapsed < 120.0
    report(
        capfd,
        3,
        ok,
        f"{checked} isomorphism classes, {disagreements} disagreements, "
        f"{bad_certs} bad certificates, {elapsed:.2f}s",
    )


def test_criterion_4_search_matches_packing_route(capfd):
    disagreements = 0
    bad_embeddings = 0
    checked = 0
    for n, total in ((2, 3), (3, 7)):
        for g in all_graph_classes(total):
            checked += 1
            h = build_hypergraph(g)
            emb = find_packing_embedding(h, n)
            colorable = solve(g).status == COLORABLE
            if (emb is not None) != colorable:
                disagreements += 1
            if emb is not None and not check_packing_embedding(h, emb, n):
                bad_embeddings += 1
    ok = disagreements == 0 and bad_embeddings == 0
    report(
        capfd,
        4,
        ok,
        f"{checked} classes, solver and embedding search agree, "
        f"{bad_embeddings} invalid embeddings",
    )


def test_criterion_5_stars_color_and_faults_are_caught(capfd):
    ok = True
    for n in range(2, 21):
        g, pr = make_star_realization(n)
        c = color_from_packing(g, pr)
        ok = ok and verify_coloring(g, c).ok

    g, pr = make_star_realization(4)
    num_points = (1 << 4) - 1
    injected = 0
    caught = {"F1": 0, "F2": 0, "F3": 0, "F4": 0}

    p3 = Graph(3, [(0, 1), (1, 2)])
    injected += 1
    try:
        color_from_packing(p3, PackingRealization(4, {i: i + 1 for i in range(5)}))
    except PackingFailure as exc:
        caught[exc.code] += 1

    for point in range(1, num_points + 1):
        for wrong in (0, point % num_points + 1):
            injected += 1
            try:
                color_from_packing(
                    g, PackingRealization(4, pr.embedding, {point: wrong})
                )
            except PackingFailure as exc:
                caught[exc.code] += 1

    emb = dict(pr.embedding)
    leaves = (1 << 3) - 1
    emb[2] = emb[1]
    emb[leaves + 2] = emb[leaves + 1]
    injected += 1
    try:
        color_from_packing(g, PackingRealization(4, emb))
    except PackingFailure as exc:
        caught[exc.code] += 1

    detected = sum(caught.values())
    ok = (
        ok
        and detected == injected
        and caught["F1"] == 1
        and caught["F2"] == num_points
        and caught["F3"] == num_points
        and caught["F4"] == 1
    )
    report(
        capfd,
        5,
        ok,
        f"stars n = 2..20 color and verify; {detected}/{injected} injected "
        f"faults detected (F1 {caught['F1']}, F2 {caught['F2']}, "
        f"F3 {caught['F3']}, F4 {caught['F4']})",
    )


def test_criterion_6_construction_scales_linearly(capfd):
    def best_time(n, repeats):
        g, pr = make_star_realization(n)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            color_from_packing(g, pr)
            best = min(best, time.perf_counter() - start)
        return best

    small = best_time(16, 3)
    large = best_time(20, 2)
    ratio = large / small
    ok = 5.3 <= ratio <= 48.0
    report(
        capfd,
        6,
        ok,
        f"16x element growth costs {ratio:.1f}x time "
        f"({small * 1000:.0f}ms -> {large * 1000:.0f}ms)",
    )


def test_criterion_7_forced_examples(capfd):
    k1 = solve(Graph(1), SearchConfig(find_all=True))
    k2 = solve(Graph(2, [(0, 1)]), SearchConfig(find_all=True))
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    c3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    ok = (
        k1.status == COLORABLE
        and k1.count == 1
        and k1.coloring == Coloring(1, {0: ColorVector(1, 1)}, {})
        and k2.status == COLORABLE
        and k2.count == 6
        and verify_coloring(Graph(2, [(0, 1)]), k2.coloring).ok
        and solve(p4).status == NOT_COLORABLE
        and exhaustive_oracle(p4) is None
        and solve(c3).status == NOT_COLORABLE_SIZE
        and exhaustive_oracle(c3) is None
    )
    report(
        capfd,
        7,
        ok,
        "single vertex and single edge are colorable with the known "
        "certificates; the 4-path and the triangle are not",
    )


def test_criterion_8_enumeration_cli(capfd):
    proc = subprocess.run(
        [sys.executable, "-m", "sscolor", "enumerate", "--n", "2"],
        capture_output=True,
        text=True,
    )
    lines = proc.stdout.splitlines()
    ok = (
        proc.returncode == 0
        and lines == ["graph 2 1 e 0 1", "graph 3 0", "total 2"]
    )
    proc = subprocess.run(
        [sys.executable, "-m", "sscolor", "enumerate", "--n", "2", "--connected"],
        capture_output=True,
        text=True,
    )
    ok = ok and proc.stdout.splitlines() == ["graph 2 1 e 0 1", "total 1"]
    report(
        capfd,
        8,
        ok,
        "CLI enumeration finds exactly 2 colorable graphs at n = 2, "
        "1 of them connected",
    )
