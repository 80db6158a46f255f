"""Reflection orders on positive affine roots and the label set Lambda.

A positive affine root (alpha, k) of one irreducible component is written
in the affine simple roots (alpha~_0 = (-theta, 1) first, then the finite
simple roots of that component in Dynkin order) and scaled onto the
simplex where the coefficients sum to 1.  A reflection order compares
these normalized points lexicographically after applying a fixed list of
linear functionals; any such order is compatible with convex
combinations, which is exactly the reflection-order axiom.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine import AffineElt, AffineRoot, AffineWeylGroup
from .errors import NotACover
from .rootdatum import ParabolicData, RootDatum, parabolic


class ReflectionOrder:
    """Total order on positive affine roots given by normalized-coordinate keys.

    ``functionals[c]`` is a list of rational vectors applied to the
    normalized coordinates of component ``c``; smaller key means earlier.
    With ``sign_presort`` roots of negative finite part come first, which
    for the default functionals changes nothing inside a component but
    keeps (-alpha, k) before (beta, k') across components.
    """

    def __init__(self, rd: RootDatum, functionals=None, sign_presort: bool = True):
        self.rd = rd
        self.nodes = []  # per component: finite node indices in Dynkin order
        for c in range(rd.ncomponents):
            self.nodes.append([i for i in range(rd.rank) if rd.node_component[i] == c])
        if functionals is None:
            functionals = []
            for c in range(rd.ncomponents):
                d = len(self.nodes[c]) + 1
                # k beta~ >_lex k gamma~  <=>  beta~ precedes gamma~
                functionals.append([tuple(-int(i == j) for j in range(d)) for i in range(d)])
        self.functionals = functionals
        self.sign_presort = sign_presort
        self._cache: dict[AffineRoot, tuple] = {}

    @classmethod
    def standard(cls, rd: RootDatum) -> "ReflectionOrder":
        """The order with every (-alpha, k) before every (beta, k')."""
        return cls(rd)

    @classmethod
    def random(cls, rd: RootDatum, rng: random.Random) -> "ReflectionOrder":
        """A reflection order from random functionals, completed by a shuffled
        signed coordinate lex order so that distinct roots never tie."""
        funcs = []
        for c in range(rd.ncomponents):
            d = len(cls._nodes_of(rd, c)) + 1
            fs = [tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(d)) for _ in range(2)]
            coords = list(range(d))
            rng.shuffle(coords)
            fs += [tuple(rng.choice((-1, 1)) * int(i == j) for j in range(d)) for i in coords]
            funcs.append(fs)
        return cls(rd, funcs, sign_presort=False)

    @staticmethod
    def _nodes_of(rd, c):
        return [i for i in range(rd.rank) if rd.node_component[i] == c]

    def normalized(self, ar: AffineRoot) -> tuple[int, tuple[Fraction, ...]]:
        """(component, k_beta * beta~) in affine-simple-root coordinates."""
        r, k = ar
        root = self.rd.roots[r]
        c = root.component
        theta = self.rd.roots[self.rd.highest_roots[c]].coords
        coeffs = [k] + [root.coords[i] + k * theta[i] for i in self.nodes[c]]
        assert all(x >= 0 for x in coeffs), f"{ar} is not a positive affine root"
        s = sum(coeffs)
        return c, tuple(Fraction(x, s) for x in coeffs)

    def key(self, ar: AffineRoot) -> tuple:
        got = self._cache.get(ar)
        if got is None:
            c, p = self.normalized(ar)
            vals = tuple(sum(f * x for f, x in zip(fn, p)) for fn in self.functionals[c])
            if self.sign_presort:
                got = (int(self.rd.is_positive(ar[0])), c, vals)
            else:
                got = (c, vals)
            self._cache[ar] = got
        return got

    def lt(self, a: AffineRoot, b: AffineRoot) -> bool:
        return self.key(a) < self.key(b)

    def sorted(self, roots) -> list[AffineRoot]:
        return sorted(roots, key=self.key)


def positive_affine_roots(rd: RootDatum, max_level: int) -> list[AffineRoot]:
    out = []
    for r in range(len(rd.roots)):
        lo = 0 if rd.is_positive(r) else 1
        out.extend((r, k) for k in range(lo, max_level + 1))
    return out


def reflection_order_violations(order: ReflectionOrder, roots: Sequence[AffineRoot]) -> list[tuple]:
    """Triples (b, g, d) with b < g, d = a b + c g (a, c > 0) but d not between.

    Brute force over the given finite set of positive affine roots.
    """
    rd = order.rd
    vec = {ar: tuple(rd.roots[ar[0]].coords) + (ar[1],) for ar in roots}
    srt = order.sorted(roots)
    pos = {ar: i for i, ar in enumerate(srt)}
    bad = []
    for i, b in enumerate(srt):
        for g in srt[i + 1:]:
            vb, vg = vec[b], vec[g]
            for d in roots:
                if d in (b, g):
                    continue
                coef = _positive_combination(vb, vg, vec[d])
                if coef and not (pos[b] < pos[d] < pos[g]):
                    bad.append((b, g, d))
    return bad


def _positive_combination(u, v, w):
    """(a, c) with a, c > 0 and a u + c v == w, or None."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            det = u[i] * v[j] - u[j] * v[i]
            if det:
                a = Fraction(w[i] * v[j] - w[j] * v[i], det)
                c = Fraction(u[i] * w[j] - u[j] * w[i], det)
                if a > 0 and c > 0 and all(a * x + c * y == z for x, y, z in zip(u, v, w)):
                    return a, c
                return None
    return None


# --------------------------------------------------------------------------
# label set


@dataclass(frozen=True)
class Label:
    kind: str  # "root" or "eta"
    value: object  # AffineRoot or W^J index


class LabelSet:
    """Lambda = positive affine roots plus eta_a for a in W^J.

    Order: negative labels < all eta_a < positive labels; eta_a ordered by
    (length of a, lex reduced word), which refines the Bruhat order.
    """

    def __init__(self, G: AffineWeylGroup, mu: Sequence[int], order: ReflectionOrder | None = None):
        self.G = G
        self.rd = G.rd
        self.mu = tuple(mu)
        self.par: ParabolicData = parabolic(self.rd, mu)
        self.order = order or ReflectionOrder.standard(self.rd)
        self.eta_order = sorted(self.par.WJ_min, key=lambda a: (self.rd.weyl.length[a], self.rd.weyl.word[a]))
        self.eta_pos = {a: i for i, a in enumerate(self.eta_order)}

    def key(self, label: Label) -> tuple:
        if label.kind == "eta":
            return (1, self.eta_pos[label.value])
        r, _ = label.value
        return (2 if self.rd.is_positive(r) else 0, self.order.key(label.value))

    def is_negative(self, label: Label) -> bool:
        return label.kind == "root" and not self.rd.is_positive(label.value[0])

    def is_positive(self, label: Label) -> bool:
        return label.kind == "root" and self.rd.is_positive(label.value[0])

    def eta(self, a: int) -> Label:
        return Label("eta", a)

    def root(self, ar: AffineRoot) -> Label:
        return Label("root", ar)

    def render(self, label: Label) -> str:
        if label.kind == "eta":
            return f"eta[{self.rd.weyl.word_str(label.value)}]"
        return self.G.root_str(label.value)

    def label_edge(self, upper: AffineElt | None, lower: AffineElt) -> Label:
        """Label of upper > lower; ``upper=None`` stands for the added top element."""
        G = self.G
        if upper is None:
            if lower.z != 0:
                raise NotACover(f"{G.format(lower)} is not a coatom")
            for a in self.par.WJ_min:
                if G.rd.weyl.act_lattice(a, self.mu) == lower.lam:
                    return self.eta(a)
            raise NotACover(f"{G.format(lower)} is not a coatom")
        if G.length(upper) != G.length(lower) + 1:
            raise NotACover(f"{G.format(upper)} does not cover {G.format(lower)}")
        try:
            return self.root(G.label(upper, lower))
        except ValueError as exc:
            raise NotACover(str(exc)) from exc


def build_reflection_order(rd: RootDatum) -> ReflectionOrder:
    return ReflectionOrder.standard(rd)


def build_label_set(G: AffineWeylGroup, mu: Sequence[int]) -> LabelSet:
    return LabelSet(G, mu)
