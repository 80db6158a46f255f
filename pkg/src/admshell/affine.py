"""Extended affine Weyl group X_* x| W0.

An element ``t^lam z`` is stored as ``AffineElt(lam, z)`` with ``lam`` an
integer vector in the X_* basis and ``z`` an index into ``rd.weyl``.
Affine roots are pairs ``(r, k)`` with ``r`` a root index; the positive
ones are those with ``k >= Phi^-(alpha_r)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    ConfigError,
    IncomparableCosets,
    MixedDatum,
    NotAcute,
    TheoryViolation,
)
from .qbg import BRUHAT, QUANTUM, QBGraph, edge_kind, vec_add, vec_leq, vec_sub
from .rootdatum import RootDatum, Vec

AffineRoot = tuple[int, int]


@dataclass(frozen=True)
class AffineElt:
    lam: Vec
    z: int
    group: "AffineWeylGroup" = field(compare=False, repr=False)

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        return self.group.mul(self, other)

    def inverse(self) -> "AffineElt":
        return self.group.inverse(self)

    @property
    def length(self) -> int:
        return self.group.length(self)

    def __str__(self):
        return self.group.format(self)


@dataclass(frozen=True)
class Presentation:
    """w = x t^lam y."""

    x: int
    lam: Vec
    y: int


CASES = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class SchremmerCover:
    elt: AffineElt
    root: AffineRoot  # w' = w s_root
    case: str
    alpha: int  # the positive finite root of the case condition
    presentation: Presentation  # acute presentation of elt


class AffineWeylGroup:
    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.W = rd.weyl
        self.zero = (0,) * rd.dim
        self.one = AffineElt(self.zero, 0, self)
        self._downset: dict[AffineElt, frozenset] = {}

    @cached_property
    def qbg(self) -> QBGraph:
        return QBGraph(self.rd)

    # -- construction -----------------------------------------------------------

    def elt(self, lam: Sequence[int], z: int = 0) -> AffineElt:
        return AffineElt(tuple(lam), z, self)

    def translation(self, lam: Sequence[int]) -> AffineElt:
        return AffineElt(tuple(lam), 0, self)

    def finite(self, z: int) -> AffineElt:
        return AffineElt(self.zero, z, self)

    def _check(self, *elts: AffineElt):
        for e in elts:
            if e.group is not self:
                raise MixedDatum("elements belong to different root data")

    def mul(self, a: AffineElt, b: AffineElt) -> AffineElt:
        self._check(a, b)
        lam = vec_add(a.lam, self.W.act_lattice(a.z, b.lam))
        return AffineElt(lam, self.W.mul(a.z, b.z), self)

    def inverse(self, a: AffineElt) -> AffineElt:
        zi = self.W.inv[a.z]
        return AffineElt(tuple(-x for x in self.W.act_lattice(zi, a.lam)), zi, self)

    def from_presentation(self, p: Presentation) -> AffineElt:
        # x t^lam y = t^{x(lam)} x y
        return AffineElt(self.W.act_lattice(p.x, p.lam), self.W.mul(p.x, p.y), self)

    # -- affine roots -------------------------------------------------------------

    def is_positive_root(self, ar: AffineRoot) -> bool:
        r, k = ar
        return k >= (0 if self.rd.is_positive(r) else 1)

    def act_root(self, w: AffineElt, ar: AffineRoot) -> AffineRoot:
        r, k = ar
        zr = self.W.act_root(w.z, r)
        return zr, k - self.rd.pair(w.lam, zr)

    def reflection(self, ar: AffineRoot) -> AffineElt:
        """s_(alpha,k) = s_alpha t^{k alpha^vee} = t^{-k alpha^vee} s_alpha."""
        r, k = ar
        rd = self.rd
        a = r if rd.is_positive(r) else rd.neg(r)
        cor = rd.roots[r].coroot_lat
        return AffineElt(tuple(-k * c for c in cor), self.W.reflection[a], self)

    def reflection_root(self, s: AffineElt) -> AffineRoot | None:
        """The positive affine root whose reflection is s, if s is a reflection."""
        rd = self.rd
        try:
            a = self.W.reflection.index(s.z)
        except ValueError:
            return None
        c = rd.lattice_to_coroot(s.lam)
        cor = rd.roots[a].coroot
        if c is None:
            return None
        # s = t^{m alpha^vee} s_alpha
        m = None
        for ci, ai in zip(c, cor):
            if ai:
                m = ci // ai
                break
        if tuple(m * x for x in cor) != c:
            return None
        if -m >= 0:
            return (a, -m)
        return (rd.neg(a), m)

    def root_str(self, ar: AffineRoot) -> str:
        r, k = ar
        coords = self.rd.roots[r].coords
        terms = []
        for i, c in enumerate(coords):
            if c:
                coef = "" if abs(c) == 1 else str(abs(c))
                terms.append(("-" if c < 0 else "+") + f"{coef}a{i + 1}")
        s = "".join(terms)
        if s.startswith("+"):
            s = s[1:]
        return f"({s}, {k})"

    # -- length ---------------------------------------------------------------

    def length(self, w: AffineElt) -> int:
        rd, W = self.rd, self.W
        inv_neg = W.neg[W.inv[w.z]]
        total = 0
        for a in range(rd.npos):
            p = rd.pair(w.lam, a)
            total += abs(p - 1) if inv_neg[a] else abs(p)
        return total

    def presentation_value(self, p: Presentation, a: int) -> int:
        """Phi^-(x alpha) + <lam, alpha> - Phi^-(y^{-1} alpha)."""
        W, rd = self.W, self.rd
        return int(W.neg[p.x][a]) + rd.pair(p.lam, a) - int(W.neg[W.inv[p.y]][a])

    def length_by_presentation(self, p: Presentation) -> int:
        return sum(abs(self.presentation_value(p, a)) for a in range(self.rd.npos))

    def is_acute(self, p: Presentation) -> bool:
        return all(self.presentation_value(p, a) >= 0 for a in range(self.rd.npos))

    def coset_tag(self, w: AffineElt) -> Vec:
        return self.rd.coset_tag(w.lam)

    # -- presentations ----------------------------------------------------------

    def presentations(self, w: AffineElt) -> list[Presentation]:
        """All x t^lam y = w; x determines lam = x^{-1}(nu) and y = x^{-1} z."""
        W = self.W
        out = []
        for x in range(W.size):
            xi = W.inv[x]
            out.append(Presentation(x, W.act_lattice(xi, w.lam), W.mul(xi, w.z)))
        return out

    def acute_presentations(self, w: AffineElt) -> list[Presentation]:
        return [p for p in self.presentations(w) if self.is_acute(p)]

    def standard_presentation(self, w: AffineElt) -> Presentation:
        """x0 t^lam0 y0 with lam0 dominant and t^lam0 y0 minimal in W0 t^lam0 y0."""
        best = None
        for p in self.presentations(w):
            if not self.rd.is_dominant(p.lam):
                continue
            ln = self.length(AffineElt(p.lam, p.y, self))
            if best is None or ln < best[0]:
                best = (ln, [p])
            elif ln == best[0]:
                best[1].append(p)
        assert best is not None and len(best[1]) == 1, "standard presentation not unique"
        return best[1][0]

    # -- covers ------------------------------------------------------------------

    def inversion_roots(self, w: AffineElt) -> list[AffineRoot]:
        """Positive affine roots sent to negative ones by w (ws < w)."""
        rd, W = self.rd, self.W
        out = []
        for r in range(len(rd.roots)):
            zr = W.act_root(w.z, r)
            lo = 0 if rd.is_positive(r) else 1
            hi = rd.pair(w.lam, zr) + (0 if rd.is_positive(zr) else 1) - 1
            for k in range(lo, hi + 1):
                out.append((r, k))
        return out

    def down_covers(self, w: AffineElt) -> list[tuple[AffineElt, AffineRoot]]:
        lw = self.length(w)
        out = []
        for ar in self.inversion_roots(w):
            v = self.mul(w, self.reflection(ar))
            if self.length(v) == lw - 1:
                out.append((v, ar))
        return out

    def covers_bruteforce(self, w: AffineElt, length_cap: int | None = None) -> dict[AffineElt, AffineRoot]:
        """Upward covers {w s | l(w s) = l(w) + 1} by scanning reflections.

        A reflection s_(alpha,k) has length >= |2k + 1|, and
        l(ws) <= l(w) + 1 forces l(s) <= 2 l(w) + 1, so |k| <= l(w) + 1.
        """
        lw = self.length(w)
        if length_cap is not None and lw >= length_cap:
            raise CapExceeded(f"length {lw} reaches cap {length_cap}")
        rd = self.rd
        out = {}
        bound = lw + 1
        for r in range(len(rd.roots)):
            lo = 0 if rd.is_positive(r) else 1
            for k in range(lo, bound + 1):
                ar = (r, k)
                if not self.is_positive_root(self.act_root(w, ar)):
                    continue
                v = self.mul(w, self.reflection(ar))
                if self.length(v) == lw + 1:
                    out[v] = ar
        return out

    def covers_schremmer(self, w: AffineElt, pres: Presentation) -> list[SchremmerCover]:
        """Upward covers of w read off an acute presentation via the QBG.

        Each cover is produced together with its case, the finite root
        alpha of the case condition and the induced acute presentation.
        """
        if not self.is_acute(pres) or self.from_presentation(pres) != w:
            raise NotAcute(f"{pres} is not an acute presentation of {self.format(w)}")
        rd, W = self.rd, self.W
        x, lam, y = pres.x, pres.lam, pres.y
        yi = W.inv[y]
        out = []
        for a in range(rd.npos):
            sa = W.reflection[a]
            cor = rd.roots[a].coroot_lat
            ya = W.act_root(yi, a)  # y^{-1} alpha
            # y-moves: edge y^{-1} s_alpha -> y^{-1}
            kind = edge_kind(rd, W.mul(yi, sa), a)
            if kind is not None:
                if kind == BRUHAT:
                    case, ar, newlam = "i", (rd.neg(ya), 0), lam
                else:
                    case, ar, newlam = "ii", (rd.neg(ya), 1), vec_add(lam, cor)
                p = Presentation(x, newlam, W.mul(sa, y))
                if self.is_acute(p):
                    out.append(self._schremmer_item(w, ar, case, a, p))
            # x-moves: edge x -> x s_alpha
            kind = edge_kind(rd, x, a)
            if kind is not None:
                pl = rd.pair(lam, a)
                if kind == BRUHAT:
                    case, ar, newlam = "iii", (ya, pl), lam
                else:
                    case, ar, newlam = "iv", (ya, pl + 1), vec_add(lam, cor)
                p = Presentation(W.mul(x, sa), newlam, y)
                if self.is_acute(p):
                    out.append(self._schremmer_item(w, ar, case, a, p))
        return out

    def _schremmer_item(self, w, ar, case, a, p) -> SchremmerCover:
        v = self.from_presentation(p)
        if not self.is_positive_root(ar) or self.mul(w, self.reflection(ar)) != v:
            raise TheoryViolation(
                f"case ({case}) for {self.format(w)}: root {self.root_str(ar)} does not give {self.format(v)}"
            )
        if self.length(v) != self.length(w) + 1:
            raise TheoryViolation(f"case ({case}) element {self.format(v)} is not a cover of {self.format(w)}")
        return SchremmerCover(v, ar, case, a, p)

    def label(self, upper: AffineElt, lower: AffineElt) -> AffineRoot:
        """The positive affine root with lower^{-1} upper = s_root."""
        ar = self.reflection_root(self.mul(self.inverse(lower), upper))
        if ar is None:
            raise ValueError(f"{self.format(lower)}^-1 {self.format(upper)} is not a reflection")
        return ar

    # -- Bruhat order ---------------------------------------------------------------

    def downset(self, w: AffineElt) -> frozenset:
        got = self._downset.get(w)
        if got is None:
            seen = {w}
            frontier = [w]
            while frontier:
                nxt = []
                for u in frontier:
                    for v, _ in self.down_covers(u):
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
                frontier = nxt
            got = frozenset(seen)
            self._downset[w] = got
        return got

    def _same_coset(self, a: AffineElt, b: AffineElt):
        self._check(a, b)
        if self.coset_tag(a) != self.coset_tag(b):
            raise IncomparableCosets(f"{self.format(a)} and {self.format(b)} lie in different W_aff cosets")

    def bruhat_leq(self, a: AffineElt, b: AffineElt) -> bool:
        """a <= b by reachability along down-covers from b."""
        self._same_coset(a, b)
        if self.length(a) > self.length(b):
            return False
        return a in self.downset(b)

    def bruhat_leq_criterion(self, a: AffineElt, b: AffineElt, pres: Presentation | None = None) -> bool:
        """a <= b via the QBG weight criterion over all presentations of b."""
        self._same_coset(a, b)
        if pres is None:
            pres = self.standard_presentation(a)
        elif not self.is_acute(pres):
            raise NotAcute(f"{pres} is not acute")
        g, W, rd = self.qbg, self.W, self.rd
        xi, yi = pres.x, W.inv[pres.y]
        for q in self.presentations(b):
            diff = rd.lattice_to_coroot(vec_sub(q.lam, pres.lam))
            if diff is None:
                continue
            lhs = vec_add(g.wt(xi, q.x), g.wt(W.inv[q.y], yi))
            if vec_leq(lhs, diff):
                return True
        return False

    # -- affine simple reflections and reduced words ------------------------------------

    @cached_property
    def affine_nodes(self) -> list[int]:
        """Affine simple nodes: 1..n finite, then 0, -1, ... per component."""
        return list(range(1, self.rd.rank + 1)) + [-c for c in range(self.rd.ncomponents)]

    def simple_reflection(self, i: int) -> AffineElt:
        if i >= 1:
            return self.finite(self.W.gens[i - 1])
        theta = self.rd.highest_roots[-i]
        return self.reflection((self.rd.neg(theta), 1))

    def affine_simple_root(self, i: int) -> AffineRoot:
        if i >= 1:
            return (self.rd.simple_roots[i - 1], 0)
        return (self.rd.neg(self.rd.highest_roots[-i]), 1)

    def reduced_word(self, w: AffineElt) -> tuple[tuple[int, ...], AffineElt]:
        """(word, tau) with w = s_word tau and l(tau) = 0; greedy left descents."""
        word = []
        lw = self.length(w)
        nodes = sorted(self.affine_nodes, key=lambda i: (i > 0, abs(i)))
        while lw:
            for i in nodes:
                v = self.mul(self.simple_reflection(i), w)
                if self.length(v) < lw:
                    word.append(i)
                    w, lw = v, lw - 1
                    break
        return tuple(word), w

    def from_affine_word(self, word: Iterable[int], tau: AffineElt | None = None) -> AffineElt:
        w = self.one
        for i in word:
            w = self.mul(w, self.simple_reflection(i))
        return self.mul(w, tau) if tau is not None else w

    def length_zero_part(self, w: AffineElt) -> AffineElt:
        return self.reduced_word(w)[1]

    # -- text notation ---------------------------------------------------------------

    def format(self, w: AffineElt) -> str:
        parts = []
        if any(w.lam):
            parts.append("t[" + ",".join(str(x) for x in w.lam) + "]")
        if w.z:
            parts.append(self.W.word_str(w.z))
        return "*".join(parts) if parts else "1"

    _ELT_RE = re.compile(r"^\s*(?:t\[([^\]]*)\])?\s*\*?\s*([s0-9.\s]*)$")

    def parse(self, text: str) -> AffineElt:
        """Inverse of :meth:`format`: ``t[1,0]*s1s2``, ``t[1,0]``, ``s2``, ``1``."""
        m = self._ELT_RE.match(text)
        if not m:
            raise ConfigError(f"cannot parse element {text!r}")
        lam_s, word_s = m.group(1), m.group(2).strip()
        if lam_s is not None:
            try:
                lam = tuple(int(x) for x in lam_s.split(","))
            except ValueError as exc:
                raise ConfigError(f"bad translation in {text!r}") from exc
            if len(lam) != self.rd.dim:
                raise ConfigError(f"translation {lam} must have {self.rd.dim} coordinates")
        else:
            lam = self.zero
        z = 0
        if word_s and word_s != "1":
            for i in parse_word(word_s):
                if not 1 <= i <= self.rd.rank:
                    raise ConfigError(f"no finite simple reflection s{i}")
                z = self.W.mul(z, self.W.gens[i - 1])
        elif lam_s is None and word_s != "1":
            raise ConfigError(f"cannot parse element {text!r}")
        return AffineElt(lam, z, self)

    def format_affine_word(self, w: AffineElt) -> str:
        word, tau = self.reduced_word(w)
        s = word_to_str(word)
        if tau != self.one:
            s = f"{s}*tau[{self.format(tau)}]" if word else f"tau[{self.format(tau)}]"
        return s

    def parse_affine_word(self, text: str, tau: AffineElt | None = None) -> AffineElt:
        text = text.strip()
        word = () if text in ("", "1") else parse_word(text)
        for i in word:
            if i not in self.affine_nodes:
                raise ConfigError(f"no affine simple reflection s{i}")
        return self.from_affine_word(word, tau)


_TOKEN = re.compile(r"s(-?\d+)")


def parse_word(text: str) -> tuple[int, ...]:
    """'s1s2', 's1.s12' or 's0 s4' -> (1, 2) etc.  Multi-digit indices need a separator."""
    text = text.strip()
    if "." in text or " " in text:
        toks = [t for t in re.split(r"[.\s]+", text) if t]
        out = []
        for t in toks:
            m = re.fullmatch(r"s(-?\d+)", t)
            if not m:
                raise ConfigError(f"bad word token {t!r}")
            out.append(int(m.group(1)))
        return tuple(out)
    out = []
    pos = 0
    while pos < len(text):
        m = re.match(r"s(-?\d)", text[pos:])
        if not m:
            raise ConfigError(f"bad word {text!r}")
        out.append(int(m.group(1)))
        pos += m.end()
    return tuple(out)


def word_to_str(word: Sequence[int]) -> str:
    if not word:
        return "1"
    if all(0 <= i <= 9 for i in word):
        return "".join(f"s{i}" for i in word)
    return ".".join(f"s{i}" for i in word)
