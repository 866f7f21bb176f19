"""Exhaustive machine checks of the weight-system identities on small diagrams.

Each suite walks :func:`enumerate_diagrams` over its bounds and records every
counterexample it meets.  Weight-system suites start at one chord; the algebraic
suites (``hom``, ``bialgebra``) include the empty diagram as the unit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product

from .diagram import (
    ChordDiagram,
    Endpoint,
    adjacent_transposition,
    canonical_text,
    coproduct_terms,
    diagram_coproduct,
    relabel_canonical,
    stack_product,
)
from .enumerate import enumerate_diagrams
from .formal import FormalSum, swap_tensor, tensor_key
from .gf2 import (
    Gf2Matrix,
    adjacency_matrix,
    congruence_witness_check,
    gf2_det,
    gf2_rank,
    is_semisymmetric_matrix,
)
from .graph import (
    complement_edge,
    four_term_graphs,
    graph_coproduct,
    graph_coproduct_terms,
    graph_key,
    graph_product,
    intersection_graph,
    is_semisymmetric,
    label_parity_ok,
    shared_colors,
    tilde_move,
)
from .relations import (
    all_slides,
    four_term_diagrams,
    is_normal_form,
    normal_form,
    slide_result,
)
from .surgery import (
    closure_state,
    components_after_surgery,
    conway_weight,
    homfly_weight,
    surger_chord,
)


@dataclass
class SuiteReport:
    name: str
    k_max: int
    n_max: int
    cases: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, d: ChordDiagram | str, detail: str) -> None:
        text = d if isinstance(d, str) else canonical_text(d)
        self.failures.append((text, detail))

    def text(self) -> str:
        lines = [
            f"suite={self.name} k<={self.k_max} n<={self.n_max} "
            f"cases={self.cases} failures={len(self.failures)}"
        ]
        for diagram, detail in sorted(self.failures):
            lines.append(f"  {diagram.replace(chr(10), ' / ')} :: {detail}")
        return "\n".join(lines)


def _diagrams(ks, n_lo: int, n_hi: int, connected_only: bool = False):
    for k in ks:
        for n in range(n_lo, n_hi + 1):
            yield from enumerate_diagrams(k, n, connected_only)


def _adj(d: ChordDiagram) -> Gf2Matrix:
    return adjacency_matrix(intersection_graph(d))


# -- weight-system identities --------------------------------------------------


def suite_conway2(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("conway2", 2, n_max)
    for d in _diagrams([2], 1, n_max):
        rep.cases += 1
        m = _adj(d)
        expected = gf2_det(m) * gf2_rank(m) % 2
        got = conway_weight(d)
        if got != expected:
            rep.fail(d, f"C={got} det*rank={expected}")
    return rep


def suite_knot_conway(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("knot-conway", 1, n_max)
    for d in _diagrams([1], 1, n_max):
        rep.cases += 1
        det = gf2_det(_adj(d))
        got = conway_weight(d)
        if got != det:
            rep.fail(d, f"C={got} det={det}")
    return rep


def homfly_from_rank(n: int, r: int) -> tuple[int, int]:
    return (n, n - r) if r % 2 else (n, n - r + 1)


def suite_homfly2(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("homfly2", 2, n_max)
    for d in _diagrams([2], 1, n_max):
        rep.cases += 1
        h = homfly_weight(d)
        expected = homfly_from_rank(d.n, gf2_rank(_adj(d)))
        if (h.a_exp, h.b_exp) != expected:
            rep.fail(d, f"H={h} expected a^{expected[0]} b^{expected[1]}")
    return rep


def suite_parity(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("parity", k_max, n_max)
    for d in _diagrams(range(1, k_max + 1), 1, n_max):
        rep.cases += 1
        c = conway_weight(d)
        det = gf2_det(_adj(d))
        if det == 0 and c:
            rep.fail(d, "det=0 but C=1")
        if (d.n + d.k) % 2 == 0 and c:
            rep.fail(d, "n+k even but C=1")
        comps = components_after_surgery(d)
        if comps % 2 != (d.n + d.k) % 2:
            rep.fail(d, f"{comps} components after surgery, n+k={d.n + d.k}")
        state = closure_state(d)
        before = state.components()
        for chord in range(d.n):
            state = surger_chord(state, chord)
            after = state.components()
            if abs(after - before) != 1:
                rep.fail(d, f"surgery on chord {chord} changed components by {after - before}")
            before = after
        if d.n <= 4:
            for order in permutations(range(d.n)):
                if components_after_surgery(d, order) != comps:
                    rep.fail(d, f"surgery order {order} changes the component count")
                    break
    return rep


# -- graph and matrix identities -------------------------------------------------


def _vertex_triples(g):
    for a in range(g.order):
        for b in range(g.order):
            if a != b:
                for color in shared_colors(g, a, b):
                    yield a, b, color


def suite_congruence(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("congruence", k_max, n_max)
    for d in _diagrams(range(1, k_max + 1), 1, n_max):
        rep.cases += 1
        g = intersection_graph(d)
        for a, b, color in _vertex_triples(g):
            if not congruence_witness_check(g, a, b, color):
                rep.fail(d, f"witness fails for A={a} B={b} i={color + 1}")
    return rep


def suite_semisymmetry(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("semisymmetry", k_max, n_max)
    for d in _diagrams(range(1, k_max + 1), 1, n_max):
        rep.cases += 1
        g = intersection_graph(d)
        if not label_parity_ok(g):
            rep.fail(d, "label parity violated")
        if not is_semisymmetric(g):
            rep.fail(d, "graph not semisymmetric")
        if not is_semisymmetric_matrix(adjacency_matrix(g)):
            rep.fail(d, "adjacency matrix not semisymmetric")
        for a, b, color in _vertex_triples(g):
            t = tilde_move(g, a, b, color)
            if not (label_parity_ok(t) and is_semisymmetric(t)):
                rep.fail(d, f"tilde move A={a} B={b} i={color + 1} breaks semisymmetry")
    return rep


def suite_slides(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("slides", k_max, n_max)
    for d in _diagrams(range(1, k_max + 1), 1, n_max):
        rep.cases += 1
        g = intersection_graph(d)
        m0 = adjacency_matrix(g)
        inv0 = (components_after_surgery(d), gf2_det(m0), gf2_rank(m0), homfly_weight(d))
        for mv in all_slides(d):
            e, landed = slide_result(d, mv)
            c, dd = d.chord_at(mv.p), d.chord_at(mv.q)
            ge = intersection_graph(e)
            if ge != tilde_move(g, c, dd, mv.p.strand):
                rep.fail(d, f"{mv.text()}: graph differs from tilde move")
            m1 = adjacency_matrix(ge)
            inv1 = (components_after_surgery(e), gf2_det(m1), gf2_rank(m1), homfly_weight(e))
            if inv1 != inv0:
                rep.fail(d, f"{mv.text()}: invariants {inv0} -> {inv1}")
            back = _slide_back(e, landed, mv)
            if relabel_canonical(back).strands != relabel_canonical(d).strands:
                rep.fail(d, f"{mv.text()}: sliding back does not restore the diagram")
    return rep


def _slide_back(e: ChordDiagram, landed: Endpoint, mv) -> ChordDiagram:
    from .relations import BELOW, SlideMove, apply_slide

    step = -1 if mv.direction == BELOW else 1
    return apply_slide(e, SlideMove(landed, Endpoint(landed.strand, landed.position + step)))


def _adjacent_pairs(d: ChordDiagram):
    for si, s in enumerate(d.strands):
        for pos in range(len(s) - 1):
            if s[pos] != s[pos + 1]:
                lo, hi = Endpoint(si, pos), Endpoint(si, pos + 1)
                yield lo, hi
                yield hi, lo


def suite_fourterm(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("fourterm", k_max, n_max)
    for d in _diagrams(range(1, k_max + 1), 1, n_max):
        rep.cases += 1
        g = intersection_graph(d)
        for p, q in _adjacent_pairs(d):
            a, b = d.chord_at(p), d.chord_at(q)
            swapped = intersection_graph(adjacent_transposition(d, p, q))
            if swapped != complement_edge(g, a, b):
                rep.fail(d, f"transposition at {p},{q} is not the edge complement")
            dia = four_term_diagrams(d, p, q)
            gra = four_term_graphs(g, a, b, p.strand)
            for (dx, sx), (gx, sg) in zip(dia, gra):
                if sx != sg or intersection_graph(dx) != gx:
                    rep.fail(d, f"4-term at {p},{q}: term images differ")
                    break
            det_sum = sum(s * gf2_det(adjacency_matrix(x)) for x, s in gra)
            rank_sum = sum(s * gf2_rank(adjacency_matrix(x)) for x, s in gra)
            if det_sum or rank_sum:
                rep.fail(d, f"4-term at {p},{q}: det/rank do not vanish ({det_sum},{rank_sum})")
    return rep


# -- bialgebra ---------------------------------------------------------------------


def _tensor_products(terms1, terms2, mult, key) -> FormalSum:
    """Product of two expanded coproducts, factors multiplied componentwise."""
    return FormalSum(
        (tensor_key(key(mult(a1, a2)), key(mult(b1, b2))), 1)
        for (_, a1, b1), (_, a2, b2) in product(terms1, terms2)
    )


def diagram_coproduct_of_product(d1, d2) -> tuple[FormalSum, FormalSum]:
    """(Delta(d1 d2), Delta(d1) Delta(d2))."""
    lhs = diagram_coproduct(stack_product(d1, d2))
    rhs = _tensor_products(
        list(coproduct_terms(d1)), list(coproduct_terms(d2)), stack_product, canonical_text
    )
    return lhs, rhs


def graph_coproduct_of_product(g1, g2) -> tuple[FormalSum, FormalSum]:
    lhs = graph_coproduct(graph_product(g1, g2))
    rhs = _tensor_products(
        list(graph_coproduct_terms(g1)), list(graph_coproduct_terms(g2)), graph_product, graph_key
    )
    return lhs, rhs


def gamma_of_coproduct(d: ChordDiagram) -> FormalSum:
    """(Gamma x Gamma) applied to Delta(d), keyed by graph class."""
    return FormalSum(
        (tensor_key(graph_key(intersection_graph(a)), graph_key(intersection_graph(b))), 1)
        for _, a, b in coproduct_terms(d)
    )


def coassociativity(d: ChordDiagram) -> tuple[FormalSum, FormalSum]:
    """((Delta x id) Delta d, (id x Delta) Delta d) as triple-tensor sums."""
    left = []
    right = []
    for _, a, b in coproduct_terms(d):
        kb = canonical_text(b)
        ka = canonical_text(a)
        for _, a1, a2 in coproduct_terms(a):
            left.append((tensor_key(tensor_key(canonical_text(a1), canonical_text(a2)), kb), 1))
        for _, b1, b2 in coproduct_terms(b):
            right.append((tensor_key(ka, tensor_key(canonical_text(b1), canonical_text(b2))), 1))
    return FormalSum(left), FormalSum(right)


def suite_hom(k_max: int, n_max: int) -> SuiteReport:
    """Gamma(D1 D2) = Gamma(D1) Gamma(D2) exactly, with D1's vertices first."""
    rep = SuiteReport("hom", k_max, n_max)
    for k in range(1, k_max + 1):
        ds = list(_diagrams([k], 0, n_max))
        for d1, d2 in product(ds, ds):
            rep.cases += 1
            lhs = intersection_graph(stack_product(d1, d2))
            rhs = graph_product(intersection_graph(d1), intersection_graph(d2))
            if lhs != rhs:
                rep.fail(f"{canonical_text(d1)} * {canonical_text(d2)}", "Gamma is not multiplicative")
    return rep


def suite_bialgebra(k_max: int, n_max: int) -> SuiteReport:
    """Coproduct identities; products are taken over pairs of total degree <= n_max."""
    rep = SuiteReport("bialgebra", k_max, n_max)
    for k in range(1, k_max + 1):
        ds = list(_diagrams([k], 0, n_max))
        for d in ds:
            rep.cases += 1
            g = intersection_graph(d)
            mu = graph_coproduct(g)
            if gamma_of_coproduct(d) != mu:
                rep.fail(d, "(Gamma x Gamma) Delta != mu Gamma")
            if swap_tensor(mu) != mu:
                rep.fail(d, "mu is not co-commutative")
            if diagram_coproduct(d).mass() != 2**d.n:
                rep.fail(d, "coproduct mass is not 2^n")
            left, right = coassociativity(d)
            if left != right:
                rep.fail(d, "Delta is not coassociative")
        for d1, d2 in product(ds, ds):
            if d1.n + d2.n > n_max:
                continue
            rep.cases += 1
            lhs, rhs = diagram_coproduct_of_product(d1, d2)
            if lhs != rhs:
                rep.fail(f"{canonical_text(d1)} * {canonical_text(d2)}", "Delta not multiplicative")
            g1, g2 = intersection_graph(d1), intersection_graph(d2)
            lhs, rhs = graph_coproduct_of_product(g1, g2)
            if lhs != rhs:
                rep.fail(f"{canonical_text(d1)} * {canonical_text(d2)}", "mu not multiplicative")
            for a, b, color in _vertex_triples(g1):
                gh = graph_product(g1, g2)
                if graph_product(complement_edge(g1, a, b), g2) != complement_edge(gh, a, b):
                    rep.fail(f"{canonical_text(d1)} * {canonical_text(d2)}", "complement not product-stable")
                if graph_product(tilde_move(g1, a, b, color), g2) != tilde_move(gh, a, b, color):
                    rep.fail(f"{canonical_text(d1)} * {canonical_text(d2)}", "tilde move not product-stable")
    return rep


# -- normal form ---------------------------------------------------------------


def slide_closure(d: ChordDiagram, limit: int = 200_000) -> set:
    """Canonical strand tuples reachable from ``d`` by slides (breadth first)."""
    start = relabel_canonical(d)
    seen = {start.strands}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for mv in all_slides(x):
            y = relabel_canonical(slide_result(x, mv)[0])
            if y.strands not in seen:
                if len(seen) >= limit:
                    raise RuntimeError("slide closure exceeded its size limit")
                seen.add(y.strands)
                queue.append(y)
    return seen


def _weights(d: ChordDiagram):
    m = _adj(d)
    return conway_weight(d), homfly_weight(d), gf2_det(m), gf2_rank(m)


def suite_normalform(k_max: int, n_max: int) -> SuiteReport:
    rep = SuiteReport("normalform", k_max, n_max)
    closures: dict = {}
    for d in _diagrams(range(1, k_max + 1), 1, n_max, connected_only=True):
        rep.cases += 1
        try:
            nf, trace, _ = normal_form(d)
        except Exception as exc:  # reported, not raised: the suite lists every failure
            rep.fail(d, f"normal_form raised {exc!r}")
            continue
        if not is_normal_form(nf):
            rep.fail(d, "result is not in normal form")
        if relabel_canonical(trace.replay()).strands != relabel_canonical(nf).strands:
            rep.fail(d, "trace does not replay to the result")
        if _weights(nf) != _weights(d):
            rep.fail(d, "weights changed")
        if d.k <= 2 and d.n <= 3:
            key = relabel_canonical(d).strands
            if key not in closures:
                cl = slide_closure(d)
                for member in cl:
                    closures[member] = cl
            if relabel_canonical(nf).strands not in closures[key]:
                rep.fail(d, "normal form not in the slide closure")
    return rep


SUITES = {
    "conway2": (suite_conway2, (2, 4)),
    "knot-conway": (suite_knot_conway, (1, 5)),
    "homfly2": (suite_homfly2, (2, 4)),
    "parity": (suite_parity, (3, 4)),
    "congruence": (suite_congruence, (3, 4)),
    "semisymmetry": (suite_semisymmetry, (3, 4)),
    "slides": (suite_slides, (3, 4)),
    "fourterm": (suite_fourterm, (3, 3)),
    "hom": (suite_hom, (3, 2)),
    "bialgebra": (suite_bialgebra, (2, 3)),
    "normalform": (suite_normalform, (3, 4)),
}


def run_suite(name: str, k_max: int | None = None, n_max: int | None = None) -> SuiteReport:
    """Run one suite; ``all`` runs every suite at its default bounds and merges."""
    if name == "all":
        merged = SuiteReport("all", 0, 0)
        for sub in SUITES:
            r = run_suite(sub, k_max, n_max)
            merged.k_max = max(merged.k_max, r.k_max)
            merged.n_max = max(merged.n_max, r.n_max)
            merged.cases += r.cases
            merged.failures.extend((f"[{sub}] {t}", detail) for t, detail in r.failures)
        return merged
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    fn, (k_def, n_def) = SUITES[name]
    return fn(k_def if k_max is None else k_max, n_def if n_max is None else n_max)


# -- adjacency collisions --------------------------------------------------------

COUNTEREXAMPLE = Gf2Matrix.from_lists(
    [
        [1, 0, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 1, 1, 0, 1],
    ]
)


def _profile(m: Gf2Matrix):
    """Permutation-invariant fingerprint used to prune the exact comparison."""
    t = m.transpose()
    return tuple(
        sorted((m[i, i], bin(m.rows[i]).count("1"), bin(t.rows[i]).count("1")) for i in range(m.n))
    )


def permutation_equivalent(a: Gf2Matrix, b: Gf2Matrix) -> bool:
    """Whether ``b`` is ``a`` with rows and columns simultaneously reordered."""
    if a.n != b.n or _profile(a) != _profile(b):
        return False
    return any(a.permuted(order) == b for order in permutations(range(a.n)))


def canonical_adjacency(m: Gf2Matrix) -> tuple[int, ...]:
    return min(m.permuted(order).rows for order in permutations(range(m.n)))


def find_adjacency_collisions(k: int, n: int, target: Gf2Matrix | None = None):
    """Diagrams sharing an adjacency class that disagree on the Conway weight.

    With a target, returns every degree-``n`` diagram whose matrix is the
    target up to reordering.  Without one, every degree from 1 to ``n`` is
    scanned and the members of each class holding both Conway values are
    returned.
    """
    if target is not None:
        prof = _profile(target)
        found = []
        for d in enumerate_diagrams(k, n):
            m = _adj(d)
            if _profile(m) == prof and permutation_equivalent(target, m):
                found.append((d, conway_weight(d)))
        return found
    classes: dict = {}
    for d in _diagrams([k], 1, n):
        classes.setdefault(canonical_adjacency(_adj(d)), []).append((d, conway_weight(d)))
    out = []
    for key in sorted(classes):
        members = classes[key]
        if len({c for _, c in members}) > 1:
            out.extend(members)
    return out
