import itertools

import pytest

from sscolor import (
    Graph,
    InputError,
    PackingEmbedding,
    TripleSystem,
    build_hypergraph,
    check_packing_embedding,
    find_packing_embedding,
    generate_sts,
    sts_to_text,
    third_point,
    verify_pair_coverage,
)


def brute_force_blocks(n):
    """All 3-subsets of 1..2^n - 1 that XOR to zero, found by ranking."""
    points = range(1, 1 << n)
    return tuple(
        t for t in itertools.combinations(points, 3) if t[0] ^ t[1] ^ t[2] == 0
    )


def test_third_point_examples():
    assert third_point(0b001, 0b010) == 0b011
    assert third_point(0b011, 0b101) == 0b110
    for p, q in itertools.permutations(range(1, 16), 2):
        assert third_point(p, third_point(p, q)) == q


def test_third_point_rejects_degenerate_pairs():
    with pytest.raises(InputError):
        third_point(3, 3)
    with pytest.raises(InputError):
        third_point(0, 1)
    with pytest.raises(InputError):
        third_point(2, -1)


def test_generate_sts_small_systems():
    ts = generate_sts(2)
    assert ts.num_points == 3
    assert ts.blocks == ((1, 2, 3),)

    fano = generate_sts(3)
    assert fano.num_points == 7
    assert fano.blocks == (
        (1, 2, 3),
        (1, 4, 5),
        (1, 6, 7),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 5, 6),
    )


def test_generate_sts_matches_brute_force():
    for n in (2, 3, 4):
        assert generate_sts(n).blocks == brute_force_blocks(n)


def test_generate_sts_block_counts():
    for n in range(2, 8):
        v = (1 << n) - 1
        assert len(generate_sts(n).blocks) == v * (v - 1) // 6


def test_generate_sts_degenerate_point():
    ts = generate_sts(1)
    assert ts.num_points == 1 and ts.blocks == ()
    assert verify_pair_coverage(ts)


def test_blocks_are_sorted_and_closed():
    for n in (2, 3, 5):
        ts = generate_sts(n)
        assert list(ts.blocks) == sorted(ts.blocks)
        for p, q, r in ts.blocks:
            assert p < q < r
            assert third_point(p, q) == r


def test_pair_coverage():
    for n in range(2, 7):
        assert verify_pair_coverage(generate_sts(n))


def test_pair_coverage_detects_damage():
    fano = generate_sts(3)
    missing = TripleSystem(3, 7, fano.blocks[1:])
    assert not verify_pair_coverage(missing)
    doubled = TripleSystem(3, 7, fano.blocks[:1] + fano.blocks)
    assert not verify_pair_coverage(doubled)
    # a non-closed triple covers the wrong pairs
    wrong = TripleSystem(3, 7, fano.blocks[:-1] + ((3, 5, 7),))
    assert not verify_pair_coverage(wrong)


def test_sts_text_format():
    assert sts_to_text(generate_sts(2)) == "sts 2 3 1\nb 1 2 3\n"
    lines = sts_to_text(generate_sts(3)).splitlines()
    assert lines[0] == "sts 3 7 7"
    assert lines[1] == "b 1 2 3"
    assert len(lines) == 8


def test_check_packing_embedding_examples():
    h = build_hypergraph(Graph(2, [(0, 1)]))
    assert check_packing_embedding(h, PackingEmbedding((1, 2, 3)), 2)
    assert not check_packing_embedding(h, PackingEmbedding((1, 2, 2)), 2)
    assert check_packing_embedding(h, PackingEmbedding((1, 3, 2)), 2)
    # triple not a block
    assert not check_packing_embedding(
        build_hypergraph(Graph(4, [(0, 1), (0, 2), (0, 3)])),
        PackingEmbedding((1, 2, 4, 5, 3, 6, 7)),
        3,
    )
    assert not check_packing_embedding(h, PackingEmbedding((1, 2)), 2)
    assert not check_packing_embedding(h, PackingEmbedding((1, 2, 9)), 2)


def test_check_packing_embedding_size_mismatch():
    h = build_hypergraph(Graph(2, [(0, 1)]))
    with pytest.raises(InputError):
        check_packing_embedding(h, PackingEmbedding((1, 2, 3)), 3)


def test_find_packing_embedding_k2():
    h = build_hypergraph(Graph(2, [(0, 1)]))
    emb = find_packing_embedding(h, 2)
    assert emb is not None
    assert check_packing_embedding(h, emb, 2)
    # deterministic: lowest points first, edge image forced
    assert emb.point_map == (1, 2, 3)


def test_find_packing_embedding_path_absent():
    h = build_hypergraph(Graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert find_packing_embedding(h, 3) is None


def test_find_packing_embedding_edgeless():
    h = build_hypergraph(Graph(3))
    emb = find_packing_embedding(h, 2)
    assert emb is not None and emb.point_map == (1, 2, 3)
    assert check_packing_embedding(h, emb, 2)


def test_find_packing_embedding_star():
    h = build_hypergraph(Graph(4, [(0, 1), (0, 2), (0, 3)]))
    emb = find_packing_embedding(h, 3)
    assert emb is not None
    assert check_packing_embedding(h, emb, 3)


def test_find_packing_embedding_size_mismatch():
    h = build_hypergraph(Graph(2, [(0, 1)]))
    with pytest.raises(InputError):
        find_packing_embedding(h, 3)
