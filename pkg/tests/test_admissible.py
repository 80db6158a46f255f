import pytest

from admshell.admissible import (
    build_coxeter_subsets,
    chain_to_qbg_path,
    is_spherical,
    sigma_data,
    top_two,
)
from admshell.errors import CapExceeded, NotInAdm, NotSpherical
from admshell.shellability import maximal_chains

from conftest import adm, group, subword_downset

CONFIGS = [
    ("A", 1, "sc", "theta"),
    ("A", 2, "sc", "theta"),
    ("B", 2, "sc", "theta"),
    ("C", 2, "sc", "theta"),
    ("G", 2, "sc", "theta"),
    ("B", 2, "ad", "rho"),
    ("A", 2, "gl", "omega1"),
    ("A", 3, "gl", "omega2"),
    ("A", 3, "sc", "theta"),
]
# independently known sizes: GL3 omega1 -> 7, GL4 omega2 -> 33, GL4 omega1 -> 15
KNOWN_SIZES = {("A", 2, "gl", "omega1"): 7, ("A", 3, "gl", "omega2"): 33, ("A", 3, "gl", "omega1"): 15}


def oracle(p, v=None):
    G, W = p.G, p.rd.weyl
    out = set()
    for a in p.par.WJ_min:
        if v is None or W.leq(a, v):
            out |= subword_downset(G, G.translation(W.act_lattice(a, p.mu)))
    return out


def test_a1_elements(a1):
    assert a1.names == ["1", "s1", "t[1]*s1", "t[-1]", "t[1]"]
    assert a1.N == 2 and a1.ident == "A1:mu=1"
    assert [a1.names[c] for c in a1.coatoms] == ["t[1]", "t[-1]"]


@pytest.mark.parametrize("cfg", CONFIGS + list(KNOWN_SIZES))
def test_elements_match_subword_oracle(cfg):
    p = adm(*cfg)
    assert set(p.elements) == oracle(p)
    if cfg in KNOWN_SIZES:
        assert len(p) == KNOWN_SIZES[cfg]


@pytest.mark.parametrize("cfg", CONFIGS[:6])
def test_restricted_sets_match_oracle(cfg):
    G = group(*cfg[:3])
    W = G.rd.weyl
    base = adm(*cfg)
    for v in (0, W.longest, W.size // 2):
        p = adm(*cfg, v)
        assert set(p.elements) == oracle(base, v)


@pytest.mark.parametrize("cfg", CONFIGS[:5])
def test_covers_are_exact(cfg):
    p = adm(*cfg)
    G = p.G
    for i, u in enumerate(p.elements):
        below = subword_downset(G, u)
        expect = {j for j, w in enumerate(p.elements) if p.length[j] == p.length[i] - 1 and w in below}
        assert set(p.lower[i]) == expect


def test_sigma_a1(a1):
    sd = sigma_data(a1, a1.G.one)
    assert sd.sigma == [0, 1] and sd.z_min == 0 and sd.a_min == 0


def test_sigma_rejects_outsiders(a1):
    with pytest.raises(NotInAdm):
        sigma_data(a1, a1.G.parse("t[2]"))


@pytest.mark.parametrize("cfg", CONFIGS[:6])
def test_sigma_everywhere(cfg):
    p = adm(*cfg)
    for i, w in enumerate(p.elements):
        if p.length[i] < p.N:
            for pres in p.G.acute_presentations(w):
                sigma_data(p, w, pres)  # raises on any inconsistency


@pytest.mark.parametrize("cfg", CONFIGS)
def test_top_two(cfg):
    p = adm(*cfg)
    recs = top_two(p)
    assert {r.w for r in recs} == {w for i, w in enumerate(p.elements) if p.length[i] == p.N - 1}


@pytest.mark.parametrize("cfg", CONFIGS[:5])
def test_chains_thread_through_qbg(cfg):
    p = adm(*cfg)
    P, _, _ = p.augmented()
    for c in p.coatoms[:2]:
        for chain in maximal_chains(P, p.hat0, c, cap=2000):
            elts = [p.elements[x] for x in chain]
            for pres in p.G.acute_presentations(elts[-1]):
                path = chain_to_qbg_path(p, elts, pres)
                assert len(path.edges) == len(chain) - 1


def test_length_cap():
    from admshell import AdmPoset
    G = group("G", 2)
    with pytest.raises(CapExceeded):
        AdmPoset(G, (3, 5), caps={"length": 10, "elements": 10**6, "chains": 1, "search": 1})


def test_figure_counts():
    cs = build_coxeter_subsets(group("A", 4), (1, 1, 1, 1), K=[1, 2, 3, 4])
    assert len(cs.KCox) == 11 and cs.coxeter_type
    cs = build_coxeter_subsets(group("A", 2), (1, 1))
    assert len(cs.KAdm0) == 13 and len(cs.KCox) == 10 and not cs.coxeter_type


def test_non_spherical_K():
    G = group("A", 2)
    assert not is_spherical(G, [0, 1, 2])
    with pytest.raises(NotSpherical):
        build_coxeter_subsets(G, (1, 1), K=[0, 1, 2])
