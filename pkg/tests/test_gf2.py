import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import adjacency_lists, det_mod2, diagrams, rank_mod2
from slchord import _kernels_py
from slchord.diagram import ChordDiagram
from slchord.gf2 import (
    Gf2Matrix,
    adjacency_matrix,
    congruence_witness_check,
    congruent_by_witness,
    gf2_det,
    gf2_rank,
    is_semisymmetric_matrix,
    parse_matrix,
    permutation_canonical,
)
from slchord.graph import IntersectionGraph, intersection_graph, shared_colors, tilde_move

try:
    from slchord import _ckernels
except ImportError:  # extension not built
    _ckernels = None

COLLISION_MATRIX = ["10000", "11000", "11100", "01110", "01101"]

matrices = st.integers(0, 8).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


def M(rows):
    return Gf2Matrix.from_lists([[int(ch) for ch in r] for r in rows])


def test_adjacency_examples():
    single = adjacency_matrix(intersection_graph(ChordDiagram.from_lists([["a"], ["a"]])))
    assert single.to_lists() == [[1]]
    knot = adjacency_matrix(intersection_graph(ChordDiagram.from_lists([["a", "b", "a", "b"]])))
    assert knot.to_lists() == [[0, 1], [1, 0]]


def test_collision_matrix_arises_from_four_strand_diagrams():
    # one diagram of each Conway value found by the collision scan
    from slchord.harness import permutation_equivalent

    target = M(COLLISION_MATRIX)
    d1 = ChordDiagram.from_lists([["1"], ["2"], ["3", "4", "5"], ["3", "4", "1", "2", "5"]])
    d0 = ChordDiagram.from_lists([[], ["1", "2"], ["3", "4", "1", "5"], ["3", "4", "2", "5"]])
    for d in (d1, d0):
        assert permutation_equivalent(target, adjacency_matrix(intersection_graph(d)))


@given(diagrams())
def test_adjacency_matches_oracle(d):
    assert adjacency_matrix(intersection_graph(d)).to_lists() == adjacency_lists(d.strands)


def test_rank_examples():
    assert gf2_rank(Gf2Matrix.identity(3)) == 3
    assert gf2_rank(M(["11", "11"])) == 1
    assert gf2_rank(M(COLLISION_MATRIX)) == 5


def test_det_examples():
    assert gf2_det(Gf2Matrix(0, ())) == 1
    assert gf2_det(M(["01", "10"])) == 1
    assert gf2_det(M(["101", "000", "111"])) == 0


@given(matrices)
def test_rank_det_match_oracles(rows):
    m = Gf2Matrix.from_lists(rows)
    assert gf2_rank(m) == rank_mod2(rows)
    assert gf2_det(m) == det_mod2(rows)


@given(st.lists(st.integers(0, 2**70), max_size=70))
def test_kernels_agree(rows):
    assert _kernels_py.gf2_rank(rows) == rank_mod2([[r >> j & 1 for j in range(71)] for r in rows])
    if _ckernels is not None:
        assert _ckernels.gf2_rank(rows) == _kernels_py.gf2_rank(rows)


@given(st.permutations(range(9)))
def test_cycle_kernels_agree(perm):
    if _ckernels is not None:
        assert _ckernels.count_cycles(perm) == _kernels_py.count_cycles(perm)


def _invertible(rnd, n):
    """Random product of row swaps and row additions."""
    p = Gf2Matrix.identity(n)
    for _ in range(3 * n):
        i, j = rnd.sample(range(n), 2) if n > 1 else (0, 0)
        rows = list(p.rows)
        if i == j:
            continue
        if rnd.random() < 0.3:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] ^= rows[j]
        p = Gf2Matrix(n, tuple(rows))
    return p


@settings(max_examples=80)
@given(matrices.filter(len), st.randoms())
def test_congruence_preserves_rank_and_det(rows, rnd):
    m = Gf2Matrix.from_lists(rows)
    p = _invertible(rnd, m.n)
    assert det_mod2(p.to_lists()) == 1
    c = p @ m @ p.transpose()
    assert gf2_rank(c) == gf2_rank(m)
    assert gf2_det(c) == gf2_det(m)


def test_witness_examples():
    g = intersection_graph(ChordDiagram.from_lists([["a", "b"], ["b", "a"]]))
    assert congruence_witness_check(g, 0, 1, 0)
    after = adjacency_matrix(tilde_move(g, 0, 1, 0))
    corrupted = Gf2Matrix(after.n, (after.rows[0] ^ 0b10,) + after.rows[1:])
    assert not congruent_by_witness(adjacency_matrix(g), corrupted, 0, 1)


@settings(max_examples=80)
@given(diagrams(max_n=5), st.data())
def test_witness_holds_on_random_triples(d, data):
    g = intersection_graph(d)
    pairs = [(a, b) for a in range(g.order) for b in range(g.order) if a != b and shared_colors(g, a, b)]
    if not pairs:
        return
    a, b = data.draw(st.sampled_from(pairs))
    color = data.draw(st.sampled_from(shared_colors(g, a, b)))
    assert congruence_witness_check(g, a, b, color)


@given(diagrams())
def test_adjacency_of_realised_graph_is_semisymmetric(d):
    assert is_semisymmetric_matrix(adjacency_matrix(intersection_graph(d)))


def test_parse_matrix():
    assert parse_matrix("# m\n10\n01\n") == Gf2Matrix.identity(2)
    with pytest.raises(ValueError):
        parse_matrix("10\n0")
    with pytest.raises(ValueError):
        parse_matrix("12\n01")


@given(matrices, st.randoms())
def test_permutation_canonical_is_order_free(rows, rnd):
    m = Gf2Matrix.from_lists(rows)
    order = list(range(m.n))
    rnd.shuffle(order)
    if m.n <= 6:
        assert permutation_canonical(m.permuted(order)) == permutation_canonical(m)


def test_matrix_text():
    assert M(COLLISION_MATRIX).text() == "\n".join(COLLISION_MATRIX)
    g = IntersectionGraph(((0, 0),), (0,))
    assert adjacency_matrix(g).text() == "0"
