import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import adjacency_lists, det_mod2, diagrams, rank_mod2, surgery_components
from slchord.diagram import ChordDiagram, Endpoint, canonical_text, relabel_canonical
from slchord.graph import intersection_graph, tilde_move
from slchord.harness import slide_closure
from slchord.relations import (
    BELOW,
    SlideError,
    SlideMove,
    _Rewriter,
    all_slides,
    applicable_slides,
    apply_slide,
    four_term_diagram_vector,
    four_term_diagrams,
    is_normal_form,
    normal_form,
    normal_form_summary,
    slide_result,
)
from slchord.surgery import conway_weight, homfly_weight


def D(*strands):
    return ChordDiagram.from_lists(strands)


CROSSING = D(["a", "b"], ["b", "a"])
PARALLEL = D(["a", "b"], ["a", "b"])
THREE_PARALLEL = D(["a", "b", "c"], ["a", "b", "c"])


def invariants(d):
    adj = adjacency_lists(d.strands)
    return surgery_components(d.strands), det_mod2(adj), rank_mod2(adj)


def test_applicable_examples():
    assert applicable_slides(D(["a"], ["a"])) == []
    assert len(applicable_slides(PARALLEL)) == 2
    assert len(applicable_slides(D(["a", "b", "a", "b"]))) == 3
    assert len(all_slides(PARALLEL)) == 4


def test_slide_example():
    m = SlideMove(Endpoint(0, 0), Endpoint(0, 1))
    assert m.direction == BELOW
    e = apply_slide(CROSSING, m)
    assert [CROSSING.chord_name(c) for c in e.strands[1]] == ["b", "a", "a"]
    assert e.label(0) == (1, 1)
    assert conway_weight(e) == conway_weight(CROSSING) == 0
    assert intersection_graph(e) == tilde_move(intersection_graph(CROSSING), 0, 1, 0)


def test_slide_errors():
    d = D(["a", "a", "b"], ["b"])
    with pytest.raises(SlideError):
        apply_slide(d, SlideMove(Endpoint(0, 0), Endpoint(0, 1)))  # same chord
    with pytest.raises(SlideError):
        apply_slide(d, SlideMove(Endpoint(0, 0), Endpoint(0, 2)))  # not adjacent
    with pytest.raises(SlideError):
        apply_slide(d, SlideMove(Endpoint(0, 2), Endpoint(1, 0)))  # different strands


@settings(max_examples=200)
@given(diagrams(max_n=5), st.data())
def test_slide_contracts(d, data):
    moves = all_slides(d)
    if not moves:
        return
    m = data.draw(st.sampled_from(moves))
    e = apply_slide(d, m)
    g = intersection_graph(d)
    assert intersection_graph(e) == tilde_move(g, d.chord_at(m.p), d.chord_at(m.q), m.p.strand)
    assert invariants(e) == invariants(d)
    assert homfly_weight(e) == homfly_weight(d)


@given(diagrams(max_n=3), st.data())
def test_slide_back_restores(d, data):
    moves = all_slides(d)
    if not moves:
        return
    m = data.draw(st.sampled_from(moves))
    e, landed = slide_result(d, m)
    step = -1 if m.direction == BELOW else 1
    back = apply_slide(e, SlideMove(landed, Endpoint(landed.strand, landed.position + step)))
    assert canonical_text(back) == canonical_text(d)


@given(diagrams(max_n=4), st.data())
def test_four_term_vector(d, data):
    pairs = [
        (Endpoint(s, i), Endpoint(s, i + 1))
        for s, w in enumerate(d.strands)
        for i in range(len(w) - 1)
        if w[i] != w[i + 1]
    ]
    if not pairs:
        return
    p, q = data.draw(st.sampled_from(pairs))
    if data.draw(st.booleans()):
        p, q = q, p
    terms = four_term_diagrams(d, p, q)
    assert [s for _, s in terms] == [1, -1, -1, 1]
    # det and rank of the adjacency annihilate the vector
    assert sum(s * det_mod2(adjacency_lists(x.strands)) for x, s in terms) == 0
    assert sum(s * rank_mod2(adjacency_lists(x.strands)) for x, s in terms) == 0


def test_four_term_coefficients_cancel():
    v = four_term_diagram_vector(D(["a", "b", "a", "b"]), Endpoint(0, 0), Endpoint(0, 1))
    assert sum(c for _, c in v.items()) == 0


def test_normal_form_examples():
    nf, trace, summary = normal_form(CROSSING)
    assert summary.text() == "path=1,2 bridges=1 m1=1 m2=0"
    assert is_normal_form(nf) and trace.replay() == nf

    nf, trace, summary = normal_form(PARALLEL)
    assert len(trace) == 0 and nf == PARALLEL
    assert summary.text() == "path=1,2 bridges=2 m1=0 m2=0"

    nf, trace, summary = normal_form(THREE_PARALLEL)
    assert summary.text() == "path=1,2 bridges=1 m1=0 m2=1"
    assert invariants(nf)[1:] == invariants(THREE_PARALLEL)[1:] == (1, 3)


def test_is_normal_form_examples():
    assert is_normal_form(ChordDiagram.empty(2))
    assert is_normal_form(D(["a"], ["a"]))
    assert not is_normal_form(D(["a", "b", "b"], ["a"]))  # loop above a bridge end
    assert is_normal_form(D(["b", "b", "a"], ["a"]))
    assert not is_normal_form(CROSSING)


def test_summary_reports_each_component():
    d = D(["a", "a"], ["b"], ["b"], [])
    s = normal_form_summary(d)
    assert s is not None and len(s.components) == 3


@settings(max_examples=150, deadline=None)
@given(diagrams(max_k=4, max_n=6))
def test_normal_form_properties(d):
    nf, trace, summary = normal_form(d)
    assert is_normal_form(nf)
    assert trace.replay() == nf
    assert invariants(nf) == invariants(d)
    assert conway_weight(nf) == conway_weight(d) and homfly_weight(nf) == homfly_weight(d)
    before = trace.start
    for m, t_before, t_after in trace.steps():
        assert t_before == canonical_text(before)
        before = apply_slide(before, m)
        assert t_after == canonical_text(before)


@settings(max_examples=40, deadline=None)
@given(diagrams(max_k=2, max_n=3, min_n=1))
def test_normal_form_within_slide_closure(d):
    nf, _, _ = normal_form(d)
    assert relabel_canonical(nf).strands in slide_closure(d)


# -- camel passing in arbitrary surroundings -----------------------------------


@st.composite
def camel_context(draw):
    """A diagram with a parked camel on strand 1 and a foreign endpoint next to it."""
    two = draw(st.booleans())
    camel = ["x", "y", "x", "y"] if two else ["x", "x"]
    rest = draw(diagrams(max_k=3, max_n=3))
    strands = [[f"r{c}" for c in s] for s in rest.strands]
    row = strands[0]
    cut = draw(st.integers(0, len(row)))
    below = draw(st.booleans())
    strands[0] = row[:cut] + (["e"] + camel if below else camel + ["e"]) + row[cut:]
    # the other end of e goes anywhere outside the camel block
    other = draw(st.integers(0, rest.k - 1))
    if other == 0:
        strands[0].insert(0 if draw(st.booleans()) else len(strands[0]), "e")
    else:
        strands[other].insert(draw(st.integers(0, len(strands[other]))), "e")
    return D(*strands), tuple(camel[: 2 if two else 1]), below


@settings(max_examples=200)
@given(camel_context())
def test_camel_passing(ctx):
    d, names, below = ctx
    ids = {d.chord_name(c): c for c in range(d.n)}
    camel = tuple(ids[n] for n in names)
    rw = _Rewriter(d)
    s, b, size = rw.camel_span(camel)
    word = list(d.strands[s])
    if below:
        e = word[b - 1]
        rw.pass_up(camel)
        expected = word[: b - 1] + word[b : b + size] + [e] + word[b + size :]
    else:
        e = word[b + size]
        rw.pass_down(camel)
        expected = word[:b] + [e] + word[b : b + size] + word[b + size + 1 :]
    assert list(rw.d.strands[s]) == expected
    assert all(rw.d.strands[t] == d.strands[t] for t in range(d.k) if t != s)
    assert invariants(rw.d) == invariants(d)
