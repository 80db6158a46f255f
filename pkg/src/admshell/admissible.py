"""Admissible sets, their top layers and the Sigma_w machinery.

``Adm(mu)`` is generated as the downward cover-closure of the translations
``t^{a(mu)}``; every cover between two admissible elements is a Bruhat
cover of the affine Weyl group, so the cover lists are exact.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .affine import AffineElt, AffineWeylGroup, Presentation
from .errors import (
    CapExceeded,
    CaseClassificationFailed,
    MinNotUnique,
    NotAcute,
    NotInAdm,
    NotSpherical,
    TheoryViolation,
)
from .labeling import Label, LabelSet, ReflectionOrder
from .poset import GradedPoset, bits
from .qbg import BRUHAT, Edge, vec_add, vec_leq, vec_sub
from .rootdatum import RootDatum, Vec

DEFAULT_LENGTH_CAP = 40


def default_caps() -> dict:
    """Caps, overridable through ADMSHELL_BUDGET ("length=30,elements=200000")."""
    caps = {"length": DEFAULT_LENGTH_CAP, "elements": 500_000, "chains": 10**7, "search": 10**6}
    raw = os.environ.get("ADMSHELL_BUDGET", "")
    for item in filter(None, (s.strip() for s in raw.split(","))):
        if "=" in item:
            k, v = item.split("=", 1)
            caps[k.strip()] = int(v)
        else:
            caps["search"] = int(item)
    return caps


class AdmPoset:
    """Adm(mu) or Adm(mu)_{<=v}, elements indexed by (length, text) order."""

    def __init__(self, G: AffineWeylGroup, mu: Sequence[int], v: int | None = None,
                 order: ReflectionOrder | None = None, caps: dict | None = None):
        caps = caps or default_caps()
        rd = G.rd
        self.G = G
        self.rd = rd
        self.mu = tuple(mu)
        self.v = v
        self.labels = LabelSet(G, mu, order)  # raises NotDominant
        self.par = self.labels.par
        self.N = rd.pair_rho2(mu)
        if self.N > caps["length"]:
            raise CapExceeded(f"<mu,2rho> = {self.N} exceeds length cap {caps['length']}")
        W = rd.weyl
        self.coatom_a = [a for a in self.labels.eta_order if v is None or W.leq(a, v)]
        tops = [G.translation(W.act_lattice(a, mu)) for a in self.coatom_a]

        seen = set(tops)
        frontier = list(tops)
        down: dict[AffineElt, list] = {}
        while frontier:
            nxt = []
            for u in frontier:
                covers = G.down_covers(u)
                down[u] = covers
                for y, _ in covers:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > caps["elements"]:
                            raise CapExceeded(f"more than {caps['elements']} admissible elements")
            frontier = nxt

        text = {u: G.format(u) for u in seen}
        self.elements: list[AffineElt] = sorted(seen, key=lambda u: (G.length(u), text[u]))
        self.index = {u: i for i, u in enumerate(self.elements)}
        self.names = [text[u] for u in self.elements]
        self.length = [G.length(u) for u in self.elements]
        self.lower: list[list[int]] = []
        self.root_label: dict[tuple[int, int], tuple[int, int]] = {}
        for i, u in enumerate(self.elements):
            cs = []
            for y, ar in down[u]:
                j = self.index[y]
                cs.append(j)
                self.root_label[(i, j)] = ar
            self.lower.append(sorted(cs))
        self.upper: list[list[int]] = [[] for _ in self.elements]
        for i, cs in enumerate(self.lower):
            for j in cs:
                self.upper[j].append(i)
        self.coatoms = [self.index[t] for t in tops]
        mins = [i for i, cs in enumerate(self.lower) if not cs]
        if len(mins) != 1:
            raise TheoryViolation(f"admissible set has {len(mins)} minimal elements", witness=[self.names[i] for i in mins])
        self.hat0 = mins[0]
        for i in range(len(self.elements)):
            for j in self.lower[i]:
                if self.length[j] + 1 != self.length[i]:
                    raise TheoryViolation(f"cover {self.names[i]} > {self.names[j]} is not graded")
        if any(self.length[c] != self.N for c in self.coatoms):
            raise TheoryViolation("a maximal translation does not have length <mu,2rho>")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w: AffineElt) -> bool:
        return w in self.index

    # -- order ----------------------------------------------------------------------

    @cached_property
    def downmask(self) -> list[int]:
        m = [0] * len(self)
        for i in range(len(self)):  # indices are sorted by length
            acc = 1 << i
            for j in self.lower[i]:
                acc |= m[j]
            m[i] = acc
        return m

    @cached_property
    def upmask(self) -> list[int]:
        m = [0] * len(self)
        for i in reversed(range(len(self))):
            acc = 1 << i
            for j in self.upper[i]:
                acc |= m[j]
            m[i] = acc
        return m

    def leq(self, i: int, j: int) -> bool:
        return bool(self.downmask[j] >> i & 1)

    def coatom_of(self, a: int) -> int:
        return self.coatoms[self.coatom_a.index(a)]

    @property
    def hat1(self) -> int:
        """Index of the adjoined top in :meth:`augmented`."""
        return len(self)

    # -- labels ------------------------------------------------------------------------

    def label(self, hi: int, lo: int) -> Label:
        if hi == self.hat1:
            return self.labels.eta(self.coatom_a[self.coatoms.index(lo)])
        return self.labels.root(self.root_label[(hi, lo)])

    def augmented(self) -> tuple[GradedPoset, dict, dict]:
        """(poset with 1^ adjoined, label keys per edge, rendered labels per edge)."""
        lower = [list(c) for c in self.lower] + [list(self.coatoms)]
        P = GradedPoset(self.names + ["1^"], lower, ident=self.ident)
        keys, text = {}, {}
        for hi, lo in P.edges:
            lab = self.label(hi, lo)
            keys[(hi, lo)] = self.labels.key(lab)
            text[(hi, lo)] = self.labels.render(lab)
        return P, keys, text

    def poset(self) -> GradedPoset:
        return GradedPoset(self.names, self.lower, ident=self.ident)

    @property
    def ident(self) -> str:
        mu = ",".join(map(str, self.mu))
        tag = f"{self.rd.spec.name}:mu={mu}"
        if self.v is not None:
            tag += f":v={self.rd.weyl.word_str(self.v)}"
        return tag

    # -- export -------------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "id": self.ident,
            "elements": self.names,
            "length": self.length,
            "covers": [[self.names[i], self.names[j]] for i in range(len(self)) for j in self.lower[i]],
            "coatoms": [self.names[c] for c in self.coatoms],
            "bottom": self.names[self.hat0],
        }

    def to_dot(self) -> str:
        P, _, text = self.augmented()
        return P.to_dot(text)


def build_adm(rd_or_group, mu: Sequence[int], v: int | None = None, **kw) -> AdmPoset:
    G = rd_or_group if isinstance(rd_or_group, AffineWeylGroup) else AffineWeylGroup(rd_or_group)
    return AdmPoset(G, mu, v, **kw)


# ----------------------------------------------------------------------------
# Sigma_w


@dataclass
class SigmaData:
    w: AffineElt
    presentation: Presentation
    sigma: list[int]  # W0 indices, ascending
    sigma_J: list[int]
    z_min: int
    a_min: int


def _check_sigma_pre(p: AdmPoset, w: AffineElt, pres: Presentation):
    G = p.G
    if w not in p:
        raise NotInAdm(f"{G.format(w)} is not in {p.ident}")
    if G.length(w) >= p.N:
        raise ValueError(f"{G.format(w)} has maximal length")
    if G.from_presentation(pres) != w or not G.is_acute(pres):
        raise NotAcute(f"{pres} is not an acute presentation of {G.format(w)}")


def sigma_data(p: AdmPoset, w: AffineElt, pres: Presentation | None = None, cross_check: bool = True) -> SigmaData:
    """Sigma_w = {z | wt(x, z) + wt(z, y^-1) <= mu - lambda} and its minima."""
    G, rd = p.G, p.rd
    W, g = rd.weyl, G.qbg
    if pres is None:
        pres = G.acute_presentations(w)[0]
    _check_sigma_pre(p, w, pres)
    budget = rd.lattice_to_coroot(vec_sub(p.mu, pres.lam))
    if budget is None:
        raise TheoryViolation(f"mu - lambda is not in the coroot lattice for {G.format(w)}")
    x, yi = pres.x, W.inv[pres.y]
    sigma = [z for z in range(W.size) if vec_leq(vec_add(g.wt(x, z), g.wt(z, yi)), budget)]
    sigma_J = sorted({p.par.coset_min(z) for z in sigma})
    z_min = W.minimum(sigma)
    a_min = W.minimum(sigma_J)
    if z_min is None or a_min is None:
        raise MinNotUnique(
            f"Sigma_w has no unique minimum for w = {G.format(w)}",
            witness={"sigma": [W.word_str(z) for z in sigma], "sigma_J": [W.word_str(a) for a in sigma_J]},
        )
    if p.par.coset_min(z_min) != a_min:
        raise TheoryViolation(f"z_min = {W.word_str(z_min)} is not in a_min W_J for {G.format(w)}")
    if cross_check:
        direct = sorted(a for a in p.par.WJ_min if G.bruhat_leq(w, G.translation(W.act_lattice(a, p.mu))))
        if direct != sigma_J:
            raise TheoryViolation(
                f"Sigma_w^J disagrees with the Bruhat order for {G.format(w)}",
                witness={"sigma_J": [W.word_str(a) for a in sigma_J], "bruhat": [W.word_str(a) for a in direct]},
            )
    return SigmaData(w, pres, sigma, sigma_J, z_min, a_min)


# ----------------------------------------------------------------------------
# top two layers


@dataclass
class TopTwoRecord:
    w: AffineElt
    covers: tuple[AffineElt, AffineElt]
    presentation: Presentation  # z1 t^lam z2^-1
    edge: Edge  # z1 -> z2
    lam: Vec
    cases: tuple[str, str]  # Schremmer case of the covers over z1 and z2
    increasing_via: AffineElt  # t^{z(mu)}, z = min(z1, z2)
    decreasing_via: AffineElt


def top_two(p: AdmPoset) -> list[TopTwoRecord]:
    """Check the description of the elements of length <mu,2rho> - 1.

    Every acute presentation z1 t^lam z2^-1 of such a w is examined; a
    failure raises TheoryViolation carrying the offending element.
    """
    if p.v is not None:
        raise ValueError("top_two needs the unrestricted admissible set")
    G, rd = p.G, p.rd
    W, g = rd.weyl, G.qbg
    out = []
    for i, w in enumerate(p.elements):
        if p.length[i] != p.N - 1:
            continue
        name = p.names[i]
        ups = [p.elements[j] for j in p.upper[i]]
        if len(ups) != 2 or any(u.z != 0 for u in ups):
            raise TheoryViolation(f"{name} is covered by {[G.format(u) for u in ups]}", witness=name)
        for pres in G.acute_presentations(w):
            z1, z2 = pres.x, W.inv[pres.y]
            e = g.edge(z1, z2)
            if e is None:
                raise TheoryViolation(f"no QBG edge {W.word_str(z1)} -> {W.word_str(z2)} for {name}", witness=name)
            wt_lat = rd.coroot_to_lattice(g.wt(z1, z2))
            if pres.lam != vec_sub(p.mu, wt_lat):
                raise TheoryViolation(f"lambda != mu - wt(z1, z2) for {name}", witness=name)
            if p.par.in_phi_J(e.root):
                raise TheoryViolation(f"edge root of {name} lies in Phi_J", witness=name)
            t1 = G.translation(W.act_lattice(z1, p.mu))
            t2 = G.translation(W.act_lattice(z2, p.mu))
            if {t1, t2} != set(ups):
                raise TheoryViolation(f"covers of {name} are not t^(z1 mu), t^(z2 mu)", witness=name)
            quantum = e.kind != BRUHAT
            # over z1 the cover is case (i)/(ii), over z2 case (iii)/(iv)
            cases = ("ii", "iv") if quantum else ("i", "iii")
            schremmer = {c.elt: c.case for c in G.covers_schremmer(w, pres)}
            if (schremmer.get(t1), schremmer.get(t2)) != cases:
                raise TheoryViolation(f"cover cases of {name} are {schremmer}, expected {cases}", witness=name)
            for t, case in ((t1, cases[0]), (t2, cases[1])):
                positive = p.labels.is_positive(p.labels.root(G.label(t, w)))
                if positive != (case in ("i", "iv")):
                    raise TheoryViolation(f"case ({case}) cover of {name} has the wrong label sign", witness=name)
            lo, hi = (z1, z2) if W.leq(z1, z2) else (z2, z1)
            t_lo = G.translation(W.act_lattice(lo, p.mu))
            t_hi = G.translation(W.act_lattice(hi, p.mu))
            eta_lo = p.labels.key(p.labels.eta(p.par.coset_min(lo)))
            eta_hi = p.labels.key(p.labels.eta(p.par.coset_min(hi)))
            lab_lo = p.labels.key(p.labels.root(G.label(t_lo, w)))
            lab_hi = p.labels.key(p.labels.root(G.label(t_hi, w)))
            if not (eta_lo <= lab_lo and eta_hi >= lab_hi):
                raise TheoryViolation(f"top chains through {name} are not increasing/decreasing as predicted", witness=name)
            out.append(TopTwoRecord(w, (t1, t2), pres, e, pres.lam, cases, t_lo, t_hi))
    return out


# ----------------------------------------------------------------------------
# chains to QBG paths


@dataclass
class ChainPath:
    edges: list[Edge]
    weight: Vec
    presentations: list[Presentation]
    cases: list[str]


def chain_to_qbg_path(p_or_group, chain: Sequence[AffineElt], pres: Presentation, mu: Sequence[int] | None = None) -> ChainPath:
    """Thread acute presentations up a maximal chain w = c[0] < ... < c[-1].

    x-moves extend the path at the x end, y-moves prepend reversed edges at
    the y^-1 end; the result runs x -> ... -> y^-1 with weight mu - lambda
    when the chain ends at a translation t^{a(mu)}.
    """
    G = p_or_group.G if isinstance(p_or_group, AdmPoset) else p_or_group
    if mu is None and isinstance(p_or_group, AdmPoset):
        mu = p_or_group.mu
    rd, W, g = G.rd, G.W, G.qbg
    chain = list(chain)
    if chain and G.length(chain[0]) > G.length(chain[-1]):
        chain.reverse()
    if G.from_presentation(pres) != chain[0] or not G.is_acute(pres):
        raise NotAcute(f"{pres} is not an acute presentation of {G.format(chain[0])}")
    x_edges: list[Edge] = []
    y_edges: list[Edge] = []
    pres_list = [pres]
    cases = []
    cur = pres
    for lo, hi in zip(chain, chain[1:]):
        hits = [c for c in G.covers_schremmer(lo, cur) if c.elt == hi]
        if len(hits) != 1:
            raise CaseClassificationFailed(
                f"{G.format(hi)} > {G.format(lo)} matched {len(hits)} cases", witness=[c.case for c in hits]
            )
        c = hits[0]
        nxt = c.presentation
        if c.case in ("iii", "iv"):
            e = g.edge(cur.x, nxt.x)
            x_edges.append(e)
        else:
            e = g.edge(W.inv[nxt.y], W.inv[cur.y])
            y_edges.append(e)
        if e is None or (e.kind == BRUHAT) != (c.case in ("i", "iii")):
            raise CaseClassificationFailed(f"case ({c.case}) does not match a QBG edge")
        cases.append(c.case)
        pres_list.append(nxt)
        cur = nxt
    edges = x_edges + list(reversed(y_edges))
    for a, b in zip(edges, edges[1:]):
        if a.target != b.source:
            raise CaseClassificationFailed("threaded path is not connected")
    weight = (0,) * rd.rank
    for e in edges:
        weight = vec_add(weight, e.weight)
    lam0 = pres.lam
    total = rd.lattice_to_coroot(vec_sub(cur.lam, lam0))
    if total != weight:
        raise CaseClassificationFailed("path weight differs from the change of translation part")
    if mu is not None and chain[-1].z == 0 and cur.lam == tuple(mu):
        if not vec_leq(g.wt(pres.x, W.inv[pres.y]), weight):
            raise TheoryViolation("wt(x, y^-1) exceeds mu - lambda")
    return ChainPath(edges, weight, pres_list, cases)


# ----------------------------------------------------------------------------
# Coxeter-type subsets


@dataclass
class CoxeterSubsets:
    mu: Vec
    sigma: dict[int, int]
    tau: AffineElt
    K: frozenset[int]
    KAdm0: list[AffineElt]
    KCox: list[AffineElt]
    adm: AdmPoset = field(repr=False)

    @property
    def coxeter_type(self) -> bool:
        return set(self.KCox) == set(self.KAdm0)

    def poset(self, which: str = "KCox") -> GradedPoset:
        elts = self.KCox if which == "KCox" else self.KAdm0
        p = self.adm
        keep = sorted(p.index[w] for w in elts)
        sub = p.poset().restrict(keep, ident=f"{p.ident}:{which}")
        # name by reduced affine words, matching how such posets are usually drawn
        words = {p.names[i]: p.G.format_affine_word(p.elements[i]) for i in keep}
        sub.names = [words[n] for n in sub.names]
        sub.index = {n: i for i, n in enumerate(sub.names)}
        return sub


def _components_nodes(G: AffineWeylGroup) -> list[set[int]]:
    rd = G.rd
    comps = [set() for _ in range(rd.ncomponents)]
    for i in range(rd.rank):
        comps[rd.node_component[i]].add(i + 1)
    for c in range(rd.ncomponents):
        comps[c].add(-c)
    return comps


def is_spherical(G: AffineWeylGroup, K: Iterable[int]) -> bool:
    K = set(K)
    return not any(nodes <= K for nodes in _components_nodes(G))


def tau_action(G: AffineWeylGroup, tau: AffineElt) -> dict[int, int]:
    """Ad(tau) on affine simple nodes: tau s_i tau^-1 = s_{tau(i)}."""
    ti = G.inverse(tau)
    out = {}
    for i in G.affine_nodes:
        conj = G.mul(G.mul(tau, G.simple_reflection(i)), ti)
        j = next((j for j in G.affine_nodes if G.simple_reflection(j) == conj), None)
        if j is None:
            raise TheoryViolation(f"{G.format(tau)} does not normalize the simple reflections")
        out[i] = j
    return out


def sigma_support(G: AffineWeylGroup, w: AffineElt, twist: dict[int, int]) -> tuple[frozenset[int], tuple[int, ...]]:
    """(closure of supp(w') under ``twist``, a reduced word of w')."""
    word, _ = G.reduced_word(w)
    supp = set(word)
    stack = list(supp)
    while stack:
        j = twist[stack.pop()]
        if j not in supp:
            supp.add(j)
            stack.append(j)
    return frozenset(supp), word


def _orbits(nodes, twist) -> dict[int, int]:
    rep = {}
    for i in nodes:
        if i in rep:
            continue
        j = i
        while j not in rep:
            rep[j] = i
            j = twist[j]
    return rep


def build_coxeter_subsets(rd_or_group, mu: Sequence[int], sigma: dict[int, int] | None = None,
                          K: Iterable[int] = (), adm: AdmPoset | None = None) -> CoxeterSubsets:
    """^K Adm(mu)_0 and ^K Cox(mu); ^K W~ is taken as the elements with no
    left descent in K (minimal in their W_K coset)."""
    G = rd_or_group if isinstance(rd_or_group, AffineWeylGroup) else AffineWeylGroup(rd_or_group)
    K = frozenset(K)
    nodes = G.affine_nodes
    if not K <= set(nodes):
        raise NotSpherical(f"K = {sorted(K)} contains unknown nodes")
    if not is_spherical(G, K):
        raise NotSpherical(f"K = {sorted(K)} is not spherical")
    sigma = dict(sigma) if sigma else {i: i for i in nodes}
    p = adm or AdmPoset(G, mu)
    tau = G.reduced_word(G.translation(p.mu))[1]
    ad_tau = tau_action(G, tau)
    twist = {i: ad_tau[sigma[i]] for i in nodes}
    orbit = _orbits(nodes, twist)
    kadm, kcox = [], []
    for w in p.elements:
        if any(G.length(G.mul(G.simple_reflection(k), w)) < G.length(w) for k in K):
            continue
        supp, word = sigma_support(G, w, twist)
        if not is_spherical(G, supp):
            continue
        kadm.append(w)
        reps = [orbit[i] for i in word]
        if len(set(reps)) == len(reps):
            kcox.append(w)
    return CoxeterSubsets(p.mu, sigma, tau, K, kadm, kcox, p)
