import pytest
from hypothesis import given, strategies as st

from admshell.errors import InvalidLattice, NotDominant, UnknownType
from admshell.rootdatum import (
    CartanSpec,
    build_root_datum,
    cartan_matrix,
    dominant_conjugate,
    parabolic,
)

from conftest import group

TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3), ("C", 3), ("D", 4)]
# |Phi+|, |W0|
SIZES = {("A", 1): (1, 2), ("A", 2): (3, 6), ("A", 3): (6, 24), ("B", 2): (4, 8), ("C", 2): (4, 8),
         ("G", 2): (6, 12), ("B", 3): (9, 48), ("C", 3): (9, 48), ("D", 4): (12, 192)}


@pytest.mark.parametrize("family,rank", TYPES)
def test_root_and_group_counts(family, rank):
    rd = build_root_datum(CartanSpec.simple(family, rank))
    npos, order = SIZES[(family, rank)]
    assert rd.npos == npos
    assert len(rd.roots) == 2 * npos
    assert rd.weyl.size == order
    assert rd.weyl.length[rd.weyl.longest] == npos


def test_g2_convention_short_first():
    # a_ij = <alpha_i^vee, alpha_j>; alpha_1 short
    assert cartan_matrix("G", 2) == [[2, -3], [-1, 2]]
    rd = build_root_datum(CartanSpec.simple("G", 2))
    theta = rd.roots[rd.highest_roots[0]]
    assert theta.coords == (3, 2)


def test_unknown_type_and_lattice():
    with pytest.raises(UnknownType):
        build_root_datum(CartanSpec.simple("G", 3))
    with pytest.raises(InvalidLattice):
        CartanSpec.simple("A", 2, "xyz")
    with pytest.raises(InvalidLattice):
        build_root_datum(CartanSpec.simple("B", 2, "gl"))


@pytest.mark.parametrize("family,rank,lattice,expected", [
    ("G", 2, "sc", (3, 5)),
    ("B", 2, "ad", (1, 1)),
    ("C", 2, "ad", (1, 1)),
    ("A", 2, "sc", (1, 1)),
])
def test_rho_coweight(family, rank, lattice, expected):
    rd = group(family, rank, lattice).rd
    assert rd.coweight([1] * rank) == expected


@pytest.mark.parametrize("family", ["B", "C"])
def test_rho_not_in_simply_connected_b2_c2(family):
    assert group(family, 2).rd.coweight([1, 1]) is None


def test_gl_fundamental_coweights():
    rd = group("A", 3, "gl").rd
    assert [rd.fundamental_coweight(i) for i in range(3)] == [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)]


def test_theta_coroot_g2():
    rd = group("G", 2).rd
    assert rd.roots[rd.highest_roots[0]].coroot_lat == (1, 2)
    assert rd.pair_rho2((1, 2)) == 6


def test_cartan_json_roundtrip():
    spec = CartanSpec.simple("C", 3, "ad")
    assert CartanSpec.from_json(spec.to_json()) == spec


def test_not_dominant():
    with pytest.raises(NotDominant):
        parabolic(group("A", 2).rd, (1, -1))


@given(st.sampled_from([("A", 2), ("B", 2), ("G", 2), ("A", 3)]), st.data())
def test_weyl_action_preserves_pairing(t, data):
    """<w lam, w alpha> = <lam, alpha> for all w, lam and roots alpha."""
    rd = group(*t).rd
    W = rd.weyl
    w = data.draw(st.integers(0, W.size - 1))
    lam = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rd.dim, max_size=rd.dim)))
    r = data.draw(st.integers(0, len(rd.roots) - 1))
    assert rd.pair(W.act_lattice(w, lam), W.act_root(w, r)) == rd.pair(lam, r)


@given(st.sampled_from([("A", 2), ("C", 2), ("G", 2), ("A", 3)]), st.data())
def test_dominant_conjugate(t, data):
    rd = group(*t).rd
    lam = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rd.dim, max_size=rd.dim)))
    dom, w = dominant_conjugate(rd, lam)
    assert rd.is_dominant(dom)
    assert rd.weyl.act_lattice(w, lam) == dom


@given(st.sampled_from([("A", 2), ("B", 2), ("G", 2), ("A", 3)]), st.data())
def test_length_is_inversion_count_and_multiplicative_parity(t, data):
    W = group(*t).rd.weyl
    u = data.draw(st.integers(0, W.size - 1))
    v = data.draw(st.integers(0, W.size - 1))
    uv = W.mul(u, v)
    assert (W.length[uv] - W.length[u] - W.length[v]) % 2 == 0
    assert W.length[uv] <= W.length[u] + W.length[v]
    assert len(W.word[u]) == W.length[u]
    assert W.from_word(W.word[u]) == u
