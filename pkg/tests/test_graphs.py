"""Decorated complete-graph poset operad and the forgetful map q."""

import random

import pytest

from operadix import graphs, strings

from util import by_output, small_strings


def graph_compose_at(alpha, i, beta):
    """Substitute beta into vertex i, singleton graphs elsewhere."""
    betas = []
    for v in range(1, alpha.n + 1):
        if v == i:
            betas.append(beta)
        else:
            out_open = alpha.vertex_open[v - 1]
            betas.append(graphs.GraphElement((out_open,), {}, out_open))
    return graphs.compose(alpha, betas)


class TestEnumerate:
    def test_counts_frozen(self):
        assert len(graphs.enumerate_graphs((False, False), False, 2)) == 4
        assert len(graphs.enumerate_graphs((False, False), True, 2)) == 4
        assert len(graphs.enumerate_graphs((True, False), True, 2)) == 3
        assert len(graphs.enumerate_graphs((True, True), True, 2)) == 2

    def test_enumerated_graphs_are_valid_and_in_filtration(self):
        for alpha in graphs.enumerate_graphs((True, False), True, 2):
            assert graphs.validate(alpha)
            assert graphs.in_filtration(alpha, 2)


class TestPoset:
    def test_leq_is_a_partial_order(self):
        elems = graphs.enumerate_graphs((False, False), False, 2)
        for a in elems:
            assert graphs.leq(a, a)
            for b in elems:
                if graphs.leq(a, b) and graphs.leq(b, a):
                    assert a == b
                for c in elems:
                    if graphs.leq(a, b) and graphs.leq(b, c):
                        assert graphs.leq(a, c)

    def test_leq_needs_matching_colours(self):
        a = graphs.enumerate_graphs((False, False), False, 2)[0]
        b = graphs.enumerate_graphs((False, False), True, 2)[0]
        with pytest.raises(ValueError):
            graphs.leq(a, b)


class TestSymAct:
    def test_group_laws(self):
        elems = graphs.enumerate_graphs((False, False), False, 2)
        for a in elems:
            assert graphs.sym_act([1, 2], a) == a
            s, t = [2, 1], [2, 1]
            st = [s[t[j] - 1] for j in range(2)]
            assert graphs.sym_act(s, graphs.sym_act(t, a)) == graphs.sym_act(st, a)


class TestQ:
    def test_worked_example(self):
        alpha = graphs.q(strings.parse("(12|21)^c"))
        assert alpha.edge_dict() == {(1, 2): (2, -1)}
        assert alpha.vertex_open == (False, False)
        assert not alpha.output_open

    def test_levels_follow_pairwise_complexity(self):
        alpha = graphs.q(strings.parse("(1u2|1u4u231||u2u4)^o"))
        assert alpha.edge_dict()[(1, 2)] == (5, -1)
        assert alpha.edge_dict()[(3, 4)] == (2, 1)

    def test_q_preserves_filtration(self):
        for x in small_strings(5, 3, m=2):
            assert graphs.in_filtration(graphs.q(x), 2)

    def test_q_is_a_lax_morphism(self):
        rng = random.Random(9)
        elems = small_strings(5, 3, m=2)
        table = by_output(elems)
        checked = 0
        while checked < 300:
            f = rng.choice(elems)
            ins, _ = strings.colours(f)
            if not ins:
                continue
            i = rng.randrange(len(ins)) + 1
            gs = table.get(ins[i - 1], [])
            if not gs:
                continue
            g = rng.choice(gs)
            fg = strings.compose(f, i, g)
            if not (strings.arity(fg) and strings.arity(f) and strings.arity(g)):
                continue
            composed = graph_compose_at(graphs.q(f), i, graphs.q(g))
            assert graphs.leq(graphs.q(fg), composed)
            checked += 1


class TestCompose:
    def test_identity_blocks_are_neutral(self):
        for alpha in graphs.enumerate_graphs((True, False), True, 2):
            betas = [
                graphs.GraphElement((oo,), {}, oo) for oo in alpha.vertex_open
            ]
            assert graphs.compose(alpha, betas) == alpha
