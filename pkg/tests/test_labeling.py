import random

import pytest
from hypothesis import given, strategies as st

from admshell.errors import NotACover, NotDominant
from admshell.labeling import (
    LabelSet,
    ReflectionOrder,
    positive_affine_roots,
    reflection_order_violations,
)

from conftest import group

TYPES = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2), ("A", 3)]


def test_a1_default_order():
    rd = group("A", 1).rd
    order = ReflectionOrder.standard(rd)
    alpha, minus = 0, rd.neg(0)
    roots = [(alpha, 0), (alpha, 1), (minus, 1), (minus, 2)]
    assert order.sorted(roots) == [(minus, 1), (minus, 2), (alpha, 1), (alpha, 0)]


@pytest.mark.parametrize("t", TYPES)
def test_default_order_is_a_reflection_order(t):
    rd = group(*t).rd
    roots = positive_affine_roots(rd, 3)
    assert reflection_order_violations(ReflectionOrder.standard(rd), roots) == []


@given(st.sampled_from(TYPES[1:5]), st.integers(0, 10**6))
def test_random_orders_are_reflection_orders(t, seed):
    rd = group(*t).rd
    order = ReflectionOrder.random(rd, random.Random(seed))
    assert reflection_order_violations(order, positive_affine_roots(rd, 2)) == []


def test_violation_detector_catches_a_bad_order():
    """Sorting by level then finite root index is not a reflection order for A2."""
    rd = group("A", 2).rd

    class ByLevel(ReflectionOrder):
        def key(self, ar):
            return (ar[1], ar[0])

    bad = ByLevel(rd)
    assert reflection_order_violations(bad, positive_affine_roots(rd, 2))


def test_a1_labels(a1):
    G, L = a1.G, a1.labels
    s1, t1, tm1 = G.parse("s1"), G.parse("t[1]"), G.parse("t[-1]")
    alpha, minus = 0, G.rd.neg(0)
    assert L.label_edge(None, t1) == L.eta(0)
    assert L.render(L.label_edge(None, tm1)) == "eta[s1]"
    assert L.label_edge(t1, s1) == L.root((alpha, 1))
    assert L.label_edge(tm1, s1) == L.root((minus, 1))
    assert L.key(L.root((minus, 1))) < L.key(L.eta(0)) < L.key(L.eta(1)) < L.key(L.root((alpha, 0)))


def test_label_edge_rejects_non_covers(a1):
    G, L = a1.G, a1.labels
    with pytest.raises(NotACover):
        L.label_edge(G.parse("t[1]"), G.one)
    with pytest.raises(NotACover):
        L.label_edge(None, G.parse("s1"))


@pytest.mark.parametrize("t", TYPES[1:])
def test_eta_order_refines_bruhat(t):
    G = group(*t)
    rd = G.rd
    theta = rd.roots[rd.highest_roots[0]].coroot_lat
    L = LabelSet(G, theta)
    W = rd.weyl
    for a in L.eta_order:
        for b in L.eta_order:
            if a != b and W.leq(a, b):
                assert L.eta_pos[a] < L.eta_pos[b]


def test_labels_need_dominant_coweight():
    with pytest.raises(NotDominant):
        LabelSet(group("A", 2), (1, -1))
