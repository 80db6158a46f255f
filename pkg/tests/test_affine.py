import pytest
from hypothesis import given, strategies as st

from admshell.errors import ConfigError, IncomparableCosets, NotAcute
from admshell.rootdatum import parabolic

from conftest import adm, group, subword_downset

SMALL = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]


def random_element(G, data, max_len=7):
    word = data.draw(st.lists(st.sampled_from(G.affine_nodes), max_size=max_len))
    return G.from_affine_word(word)


@given(st.sampled_from(SMALL + [("A", 3)]), st.data())
def test_length_matches_reduced_word(t, data):
    G = group(*t)
    w = random_element(G, data)
    word, tau = G.reduced_word(w)
    assert len(word) == G.length(w)
    assert G.length(tau) == 0
    assert G.from_affine_word(word, tau) == w


@given(st.sampled_from(SMALL), st.data())
def test_presentation_length_bound(t, data):
    """l(x) + <lam, 2rho> - l(y) <= l(x t^lam y), with equality iff acute."""
    G = group(*t)
    rd, W = G.rd, G.rd.weyl
    w = random_element(G, data)
    for p in G.presentations(w):
        assert G.from_presentation(p) == w
        assert G.length_by_presentation(p) == G.length(w)
        bound = W.length[p.x] + rd.pair_rho2(p.lam) - W.length[p.y]
        assert bound <= G.length(w)
        assert (bound == G.length(w)) == G.is_acute(p)
    assert G.acute_presentations(w)


@given(st.sampled_from(SMALL), st.data())
def test_standard_presentation(t, data):
    G = group(*t)
    w = random_element(G, data)
    p = G.standard_presentation(w)
    assert G.is_acute(p) and G.from_presentation(p) == w
    assert G.rd.is_dominant(p.lam)


@given(st.sampled_from(SMALL), st.data())
def test_bruhat_oracles_agree_with_subwords(t, data):
    G = group(*t)
    u = random_element(G, data, 6)
    down = subword_downset(G, u)
    for w in down:
        assert G.bruhat_leq(w, u)
        assert G.bruhat_leq_criterion(w, u)
    v = random_element(G, data, 6)
    assert G.bruhat_leq(v, u) == (v in down) == G.bruhat_leq_criterion(v, u)


@pytest.mark.parametrize("t,mu", [(("A", 1), "theta"), (("A", 2), "theta"), (("B", 2), "theta"), (("G", 2), "theta")])
def test_bruhat_oracles_on_admissible_pairs(t, mu):
    p = adm(*t, "sc", mu)
    G = p.G
    for a in p.elements:
        for b in p.elements:
            assert G.bruhat_leq(a, b) == G.bruhat_leq_criterion(a, b)


@given(st.sampled_from(SMALL), st.data())
def test_cover_oracles_agree(t, data):
    G = group(*t)
    w = random_element(G, data, 6)
    brute = G.covers_bruteforce(w)
    for pres in G.acute_presentations(w):
        got = G.covers_schremmer(w, pres)
        assert {c.elt for c in got} == set(brute)
        assert len(got) == len({c.elt for c in got})  # each cover in exactly one case


def test_down_covers_agree_with_upward_covers():
    G = group("A", 2)
    w = G.from_affine_word([0, 1, 2, 0])
    for v, ar in G.down_covers(w):
        assert w in G.covers_bruteforce(v)
        assert G.mul(v, G.reflection(ar)) == w


def test_translation_acute_presentations():
    """For lambda0 dominant, t^{z lambda0} has acute presentations z u t^{lambda0} u^-1 z^-1, u in W_J."""
    G = group("A", 2, "ad")
    W = G.rd.weyl
    lam0 = (1, 0)
    par = parabolic(G.rd, lam0)
    for z in range(W.size):
        t = G.translation(W.act_lattice(z, lam0))
        got = {(p.x, p.lam, p.y) for p in G.acute_presentations(t)}
        expect = {(W.mul(z, u), lam0, W.inv[W.mul(z, u)]) for u in par.W_J}
        assert got == expect


def test_non_acute_rejected():
    G = group("A", 1)
    w = G.translation((1,))
    bad = next(p for p in G.presentations(w) if not G.is_acute(p))
    with pytest.raises(NotAcute):
        G.covers_schremmer(w, bad)


def test_incomparable_cosets():
    G = group("A", 1, "ad")
    with pytest.raises(IncomparableCosets):
        G.bruhat_leq(G.one, G.translation((1,)))


@given(st.sampled_from(SMALL), st.data())
def test_text_roundtrip(t, data):
    G = group(*t)
    w = random_element(G, data)
    assert G.parse(G.format(w)) == w
    word, tau = G.reduced_word(w)
    assert G.parse_affine_word(G.format_affine_word(w).split("*tau")[0], tau) == w


def test_parse_errors():
    G = group("A", 2)
    for bad in ["t[1]", "s7", "x"]:
        with pytest.raises(ConfigError):
            G.parse(bad)


def test_affine_labels_are_positive():
    G = group("B", 2)
    w = G.from_affine_word([0, 1, 2, 1, 0])
    for v, ar in G.down_covers(w):
        assert G.is_positive_root(ar)
        assert G.label(w, v) == ar
