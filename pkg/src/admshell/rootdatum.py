"""Based root data, finite Weyl groups and parabolic quotients.

Roots are integer vectors in simple-root coordinates, coroots in
simple-coroot coordinates. The cocharacter lattice X_* is a free module
Z^m with a chosen basis; every coweight is an integer m-vector in that
basis. A root acts on X_* through an integer functional, so the pairing
<lambda, alpha> is a plain dot product.

Cartan matrix convention: ``A[i][j] = <alpha_i^vee, alpha_j>`` with
Bourbaki numbering (simple nodes are numbered 1..n across components).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import GroupTooLarge, InvalidLattice, NotDominant, UnknownType

Vec = tuple[int, ...]

DEFAULT_GROUP_BOUND = 10**6


# --------------------------------------------------------------------------
# Cartan matrices


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    n = rank
    if family not in "ABCDEFG" or len(family) != 1:
        raise UnknownType(f"unknown Cartan family {family!r}")
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 3,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if not valid[family]:
        raise UnknownType(f"no Cartan type {family}{n}")
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif family == "C":
            link(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return A


# --------------------------------------------------------------------------
# exact linear algebra helpers


def _inverse(M: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    H = [list(r) for r in rows]
    m = len(H[0]) if H else 0
    out = []
    col = 0
    while H and col < m:
        nz = [r for r in H if r[col] != 0]
        if not nz:
            col += 1
            continue
        # Euclid on the column
        while len([r for r in H if r[col] != 0]) > 1:
            nz = sorted((r for r in H if r[col] != 0), key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for k in range(m):
                    r[k] -= q * p[k]
        p = next(r for r in H if r[col] != 0)
        H.remove(p)
        if p[col] < 0:
            p = [-x for x in p]
        for prev in out:
            q = prev[col] // p[col]
            for k in range(m):
                prev[k] -= q * p[k]
        out.append(p)
        col += 1
    return out


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


# --------------------------------------------------------------------------
# specification


@dataclass(frozen=True)
class CartanSpec:
    """Input description of a root datum.

    ``lattice`` is one of ``"sc"``, ``"ad"``, ``"gl"`` or a tuple of basis
    rows in simple-coroot-plus-central coordinates.
    """

    types: tuple[tuple[str, int], ...]
    lattice: str | tuple[tuple[Fraction, ...], ...] = "sc"

    @classmethod
    def simple(cls, family: str, rank: int, lattice="sc") -> "CartanSpec":
        return cls(((family, rank),), _freeze_lattice(lattice))

    @classmethod
    def from_json(cls, data) -> "CartanSpec":
        if isinstance(data, str):
            data = json.loads(data)
        t = data["type"]
        if isinstance(t, str):
            types = ((t, int(data["rank"])),)
        else:
            types = tuple((str(f), int(r)) for f, r in t)
        return cls(types, _freeze_lattice(data.get("lattice", "sc")))

    def to_json(self) -> dict:
        if len(self.types) == 1:
            out = {"type": self.types[0][0], "rank": self.types[0][1]}
        else:
            out = {"type": [list(t) for t in self.types]}
        if isinstance(self.lattice, str):
            out["lattice"] = self.lattice
        else:
            out["lattice"] = {"basis": [[str(x) for x in row] for row in self.lattice]}
        return out

    @property
    def name(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.types)


def _freeze_lattice(lattice):
    if isinstance(lattice, str):
        if lattice not in ("sc", "ad", "gl"):
            raise InvalidLattice(f"unknown lattice preset {lattice!r}")
        return lattice
    if isinstance(lattice, dict):
        lattice = lattice["basis"]
    return tuple(tuple(Fraction(x) for x in row) for row in lattice)


# --------------------------------------------------------------------------
# root datum


@dataclass(frozen=True)
class Root:
    index: int
    coords: Vec  # simple-root coordinates
    coroot: Vec  # simple-coroot coordinates
    coroot_lat: Vec  # coroot in the X_* basis
    functional: Vec  # <b_k, alpha> for the X_* basis b_k
    component: int
    height: int

    @property
    def positive(self) -> bool:
        return self.height > 0


class RootDatum:
    """Root system with a chosen cocharacter lattice.

    Roots are indexed so that ``roots[:npos]`` are the positive roots in
    (height, lex) order and ``roots[npos + i] == -roots[i]``.
    """

    def __init__(self, spec: CartanSpec, group_bound: int = DEFAULT_GROUP_BOUND):
        self.spec = spec
        self.group_bound = group_bound
        blocks = [cartan_matrix(f, r) for f, r in spec.types]
        n = sum(len(b) for b in blocks)
        A = [[0] * n for _ in range(n)]
        comp = []
        off = 0
        for c, b in enumerate(blocks):
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    A[off + i][off + j] = x
                comp.append(c)
            off += len(b)
        self.rank = n
        self.cartan = A
        self.node_component = comp
        self.ncomponents = len(blocks)
        self._build_lattice()
        self._build_roots()

    # -- lattice -----------------------------------------------------------

    def _build_lattice(self):
        n, A = self.rank, self.cartan
        lat = self.spec.lattice
        if lat == "sc":
            P = [row[:] for row in A]
            C = [[int(i == j) for j in range(n)] for i in range(n)]
        elif lat == "ad":
            P = [[int(i == j) for j in range(n)] for i in range(n)]
            C = [row[:] for row in A]
        elif lat == "gl":
            if len(self.spec.types) != 1 or self.spec.types[0][0] != "A":
                raise InvalidLattice("the gl preset exists only for a single type A")
            m = n + 1
            P = [[int(k == j) - int(k == j + 1) for j in range(n)] for k in range(m)]
            C = [[int(k == i) - int(k == i + 1) for k in range(m)] for i in range(n)]
        else:
            B = [list(row) for row in lat]
            m = len(B)
            if any(len(row) != m for row in B) or m < n:
                raise InvalidLattice("basis matrix must be square with at least rank columns")
            Binv = _inverse(B)
            if Binv is None:
                raise InvalidLattice("basis matrix is not full rank")
            Pf = [[sum(B[k][i] * A[i][j] for i in range(n)) for j in range(n)] for k in range(m)]
            Cf = [Binv[i] for i in range(n)]
            if any(x.denominator != 1 for row in Pf + Cf for x in row):
                raise InvalidLattice("lattice must contain the coroot lattice and pair integrally with roots")
            P = [[int(x) for x in row] for row in Pf]
            C = [[int(x) for x in row] for row in Cf]
        self.dim = len(P)
        self.simple_pairing = P  # P[k][j] = <b_k, alpha_j>
        self.simple_coroots_lat = C  # C[i] = alpha_i^vee in the X_* basis
        self._hnf = _hermite_rows(C)
        self._cartan_inv = _inverse(A)

    # -- roots -------------------------------------------------------------

    def _build_roots(self):
        n, A = self.rank, self.cartan
        # symmetrizer d_i = (alpha_i, alpha_i) / 2
        d = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if j != i and A[i][j] != 0 and d[j] is None:
                        d[j] = d[i] * A[i][j] / A[j][i]
                        stack.append(j)
        self._sym = d

        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    c = sum(beta[j] * A[i][j] for j in range(n))
                    if c == 0:
                        continue
                    gamma = tuple(beta[j] - (c if j == i else 0) for j in range(n))
                    if gamma not in seen and all(x >= 0 for x in gamma):
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        pos = sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b)))
        self.npos = len(pos)
        roots = []
        for idx, coords in enumerate(pos + [tuple(-x for x in b) for b in pos]):
            roots.append(self._make_root(idx, coords))
        self.roots: list[Root] = roots
        self.root_index = {r.coords: r.index for r in roots}
        self.simple_roots = [self.root_index[s] for s in simple]

    def _make_root(self, idx: int, coords: Vec) -> Root:
        n, A, d = self.rank, self.cartan, self._sym
        norm = sum(coords[i] * coords[j] * d[i] * A[i][j] for i in range(n) for j in range(n))
        cor = [Fraction(2) * coords[j] * d[j] / norm for j in range(n)]
        assert all(x.denominator == 1 for x in cor)
        coroot = tuple(int(x) for x in cor)
        C = self.simple_coroots_lat
        coroot_lat = tuple(sum(coroot[i] * C[i][k] for i in range(n)) for k in range(self.dim))
        functional = tuple(
            sum(coords[j] * self.simple_pairing[k][j] for j in range(n)) for k in range(self.dim)
        )
        support = [i for i in range(n) if coords[i]]
        return Root(idx, coords, coroot, coroot_lat, functional,
                    self.node_component[support[0]], sum(coords))

    def neg(self, r: int) -> int:
        return r + self.npos if r < self.npos else r - self.npos

    def is_positive(self, r: int) -> bool:
        return r < self.npos

    def pair(self, lam: Sequence[int], r: int) -> int:
        """<lam, alpha_r> for lam in the X_* basis."""
        return _dot(lam, self.roots[r].functional)

    def coroot_pair(self, a: int, b: int) -> int:
        """<alpha_a^vee, alpha_b>."""
        ca, cb = self.roots[a].coroot, self.roots[b].coords
        A = self.cartan
        return sum(ca[i] * A[i][j] * cb[j] for i in range(self.rank) for j in range(self.rank) if ca[i] and cb[j])

    @cached_property
    def highest_roots(self) -> list[int]:
        """Index of theta per irreducible component."""
        out = []
        for c in range(self.ncomponents):
            cand = [r for r in self.roots[: self.npos] if r.component == c]
            out.append(max(cand, key=lambda r: r.height).index)
        return out

    @cached_property
    def rho2(self) -> Vec:
        """2 rho in simple-root coordinates."""
        return tuple(sum(r.coords[i] for r in self.roots[: self.npos]) for i in range(self.rank))

    def pair_rho2(self, lam: Sequence[int]) -> int:
        """<lam, 2 rho>."""
        return sum(self.pair(lam, r) for r in range(self.npos))

    def coroot_rho2(self, r: int) -> int:
        """<alpha_r^vee, 2 rho>."""
        return sum(self.coroot_pair(r, b) for b in range(self.npos))

    # -- coweights -----------------------------------------------------------

    def coroot_to_lattice(self, c: Sequence[int]) -> Vec:
        C = self.simple_coroots_lat
        return tuple(sum(c[i] * C[i][k] for i in range(self.rank)) for k in range(self.dim))

    def lattice_to_coroot(self, lam: Sequence[int]) -> Vec | None:
        """Simple-coroot coordinates of lam, or None if lam is not in the coroot lattice."""
        p = [self.pair(lam, s) for s in self.simple_roots]
        Ainv = self._cartan_inv
        c = [sum(p[j] * Ainv[j][i] for j in range(self.rank)) for i in range(self.rank)]
        if any(x.denominator != 1 for x in c):
            return None
        c = tuple(int(x) for x in c)
        if self.coroot_to_lattice(c) != tuple(lam):
            return None
        return c

    def coset_tag(self, lam: Sequence[int]) -> Vec:
        """Canonical representative of lam modulo the coroot lattice."""
        v = list(lam)
        for row in self._hnf:
            piv = next(k for k, x in enumerate(row) if x)
            q = v[piv] // row[piv]
            v = [a - q * b for a, b in zip(v, row)]
        return tuple(v)

    def simple_pairings(self, lam: Sequence[int]) -> Vec:
        return tuple(self.pair(lam, s) for s in self.simple_roots)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(x >= 0 for x in self.simple_pairings(lam))

    def coweight(self, pairings: Sequence[int]) -> Vec | None:
        """The coweight with the given simple pairings, in the X_* basis.

        For the gl preset this is sum_i p_i (1, ..., 1, 0, ...) with i ones;
        otherwise the unique solution in the span of the coroots.  None if
        that solution is not in X_*.
        """
        n = self.rank
        if len(pairings) != n:
            raise ValueError(f"need {n} pairings, got {len(pairings)}")
        if self.spec.lattice == "gl":
            lam = tuple(sum(pairings[i] for i in range(k, n)) for k in range(self.dim))
        else:
            c = [sum(pairings[i] * self._cartan_inv[i][j] for i in range(n)) for j in range(n)]
            C = self.simple_coroots_lat
            x = [sum(c[j] * C[j][k] for j in range(n)) for k in range(self.dim)]
            if any(Fraction(v).denominator != 1 for v in x):
                return None
            lam = tuple(int(v) for v in x)
        assert list(self.simple_pairings(lam)) == list(pairings)
        return lam

    def fundamental_coweight(self, i: int) -> Vec | None:
        """omega_i^vee (0-based node i) in the X_* basis, if it lies in X_*."""
        return self.coweight([int(j == i) for j in range(self.rank)])

    def minuscule_nodes(self) -> list[int]:
        """Nodes i whose fundamental coweight is minuscule (coefficient 1 in theta)."""
        out = []
        for i in range(self.rank):
            c = self.node_component[i]
            if self.roots[self.highest_roots[c]].coords[i] == 1:
                out.append(i)
        return out

    # -- Weyl group ------------------------------------------------------------

    @cached_property
    def weyl(self) -> "WeylGroup":
        return WeylGroup(self, self.group_bound)

    def __repr__(self):
        lat = self.spec.lattice if isinstance(self.spec.lattice, str) else "custom"
        return f"RootDatum({self.spec.name}, {lat})"


def build_root_datum(spec: CartanSpec | dict | str, group_bound: int = DEFAULT_GROUP_BOUND) -> RootDatum:
    if not isinstance(spec, CartanSpec):
        spec = CartanSpec.from_json(spec)
    return RootDatum(spec, group_bound)


# --------------------------------------------------------------------------
# finite Weyl group


@dataclass(frozen=True)
class WeylElt:
    """Element of W0, canonically the images of the simple roots."""

    images: tuple[Vec, ...]
    group: "WeylGroup" = field(compare=False, repr=False)

    @property
    def index(self) -> int:
        return self.group.index_of_images[self.images]

    @property
    def length(self) -> int:
        return self.group.length[self.index]

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.word[self.index]

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.elt(self.group.mul(self.index, other.index))

    def inverse(self) -> "WeylElt":
        return self.group.elt(self.group.inv[self.index])

    def __str__(self):
        return self.group.word_str(self.index)


class WeylGroup:
    """W0 as permutations of the root list, indexed in (length, lex word) order.

    Index 0 is the identity. ``word[w]`` is the lex-smallest reduced word,
    obtained by repeatedly stripping the smallest left descent.
    """

    def __init__(self, rd: RootDatum, bound: int = DEFAULT_GROUP_BOUND):
        self.rd = rd
        n, N = rd.rank, len(rd.roots)
        gens = []
        for i in range(n):
            si = rd.simple_roots[i]
            perm = []
            for r in rd.roots:
                c = rd.coroot_pair(si, r.index)
                img = tuple(x - (c if j == i else 0) for j, x in enumerate(r.coords))
                perm.append(rd.root_index[img])
            gens.append(tuple(perm))
        ident = tuple(range(N))
        seen = {ident}
        order = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[x] for x in p)
                    if q not in seen:
                        seen.add(q)
                        if len(seen) > bound:
                            raise GroupTooLarge(f"|W0| exceeds bound {bound}")
                        nxt.append(q)
                        order.append(q)
            frontier = nxt
        npos = rd.npos

        def length(p):
            return sum(1 for a in range(npos) if p[a] >= npos)

        pindex = {p: k for k, p in enumerate(order)}
        lens = [length(p) for p in order]
        # lex-smallest reduced word by greedy left descents; s_i is a left
        # descent of w iff w^{-1}(alpha_i) < 0
        by_len = sorted(range(len(order)), key=lambda k: lens[k])
        words: dict[int, tuple[int, ...]] = {}
        for k in by_len:
            p = order[k]
            if lens[k] == 0:
                words[k] = ()
                continue
            inv = [0] * N
            for a, b in enumerate(p):
                inv[b] = a
            i = next(i for i in range(n) if inv[rd.simple_roots[i]] >= npos)
            rest = pindex[tuple(gens[i][x] for x in p)]
            words[k] = (i,) + words[rest]
        perm = sorted(range(len(order)), key=lambda k: (lens[k], words[k]))
        self.perms: list[tuple[int, ...]] = [order[k] for k in perm]
        self.length: list[int] = [lens[k] for k in perm]
        self.word: list[tuple[int, ...]] = [words[k] for k in perm]
        self.size = len(self.perms)
        self.index = {p: k for k, p in enumerate(self.perms)}
        self.gens = [self.index[g] for g in gens]
        self.inv = []
        for p in self.perms:
            q = [0] * N
            for a, b in enumerate(p):
                q[b] = a
            self.inv.append(self.index[tuple(q)])
        self.index_of_images = {self.images(k): k for k in range(self.size)}
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._lat = self._lattice_matrices()
        # neg[w][a]: w(alpha_a) < 0 for positive a
        self.neg = [tuple(p[a] >= npos for a in range(npos)) for p in self.perms]
        self.longest = max(range(self.size), key=lambda k: self.length[k])
        # reflection s_alpha for positive alpha
        self.reflection = [self._reflection_index(a) for a in range(npos)]

    def _reflection_index(self, a: int) -> int:
        rd = self.rd
        perm = []
        for r in rd.roots:
            c = rd.coroot_pair(a, r.index)
            img = tuple(x - c * y for x, y in zip(r.coords, rd.roots[a].coords))
            perm.append(rd.root_index[img])
        return self.index[tuple(perm)]

    def _lattice_matrices(self):
        rd = self.rd
        m = rd.dim
        P, C = rd.simple_pairing, rd.simple_coroots_lat
        gen_mats = []
        for i in range(rd.rank):
            gen_mats.append(tuple(
                tuple(int(k == l) - C[i][k] * P[l][i] for l in range(m)) for k in range(m)
            ))
        mats = [None] * self.size
        mats[0] = tuple(tuple(int(k == l) for l in range(m)) for k in range(m))
        for w in range(1, self.size):
            i = self.word[w][0]
            rest = self.mul(self.gens[i], w)
            G, R = gen_mats[i], mats[rest]
            mats[w] = tuple(
                tuple(sum(G[k][j] * R[j][l] for j in range(m)) for l in range(m)) for k in range(m)
            )
        return mats

    def images(self, w: int) -> tuple[Vec, ...]:
        rd = self.rd
        return tuple(rd.roots[self.perms[w][s]].coords for s in rd.simple_roots)

    def elt(self, w: int) -> WeylElt:
        return WeylElt(self.images(w), self)

    def mul(self, u: int, v: int) -> int:
        key = (u, v)
        r = self._mul_cache.get(key)
        if r is None:
            pu, pv = self.perms[u], self.perms[v]
            r = self.index[tuple(pu[x] for x in pv)]
            self._mul_cache[key] = r
        return r

    def act_root(self, w: int, r: int) -> int:
        return self.perms[w][r]

    def act_lattice(self, w: int, lam: Sequence[int]) -> Vec:
        M = self._lat[w]
        return tuple(sum(row[l] * lam[l] for l in range(len(lam))) for row in M)

    def from_word(self, word: Sequence[int]) -> int:
        w = 0
        for i in word:
            w = self.mul(w, self.gens[i])
        return w

    def word_str(self, w: int) -> str:
        wd = self.word[w]
        if not wd:
            return "1"
        sep = "." if self.rd.rank >= 10 else ""
        return sep.join(f"s{i + 1}" for i in wd)

    def is_right_descent(self, w: int, i: int) -> bool:
        return self.neg[w][self.rd.simple_roots[i]]

    # -- Bruhat order on W0 (independent of the QBG) --------------------------

    @cached_property
    def down_covers(self) -> list[list[int]]:
        out = []
        for w in range(self.size):
            lw = self.length[w]
            out.append(sorted(
                ws for ws in (self.mul(w, s) for s in self.reflection) if self.length[ws] == lw - 1
            ))
        return out

    @cached_property
    def downset(self) -> list[int]:
        """Bitmask of the Bruhat ideal below each element."""
        masks = [0] * self.size
        for w in sorted(range(self.size), key=lambda k: self.length[k]):
            m = 1 << w
            for y in self.down_covers[w]:
                m |= masks[y]
            masks[w] = m
        return masks

    def leq(self, u: int, v: int) -> bool:
        return bool(self.downset[v] >> u & 1)

    def minimum(self, elems) -> int | None:
        """Unique Bruhat-minimum of a set, or None if there is none."""
        elems = list(elems)
        mins = [u for u in elems if not any(v != u and self.leq(v, u) for v in elems)]
        return mins[0] if len(mins) == 1 else None

    def maximum(self, elems) -> int | None:
        elems = list(elems)
        maxs = [u for u in elems if not any(v != u and self.leq(u, v) for v in elems)]
        return maxs[0] if len(maxs) == 1 else None


def weyl_elements(rd: RootDatum) -> list[WeylElt]:
    W = rd.weyl
    return [W.elt(k) for k in range(W.size)]


# --------------------------------------------------------------------------
# parabolic data


@dataclass
class ParabolicData:
    J: frozenset[int]  # 0-based simple nodes
    W_J: list[int]
    WJ_min: list[int]  # minimal coset representatives of W0 / W_J, in W0 order
    rd: RootDatum = field(repr=False)

    def coset_min(self, w: int) -> int:
        W = self.rd.weyl
        changed = True
        while changed:
            changed = False
            for j in self.J:
                if W.is_right_descent(w, j):
                    w = W.mul(w, W.gens[j])
                    changed = True
        return w

    def factor(self, w: int) -> tuple[int, int]:
        """w = a * u with a in W^J, u in W_J."""
        W = self.rd.weyl
        a = self.coset_min(w)
        u = W.mul(W.inv[a], w)
        return a, u

    def in_phi_J(self, r: int) -> bool:
        coords = self.rd.roots[r].coords
        return all(coords[i] == 0 for i in range(self.rd.rank) if i not in self.J)


def parabolic_for_J(rd: RootDatum, J) -> ParabolicData:
    W = rd.weyl
    J = frozenset(J)
    W_J = [w for w in range(W.size) if set(W.word[w]) <= J]
    mins = [w for w in range(W.size) if not any(W.is_right_descent(w, j) for j in J)]
    return ParabolicData(J, W_J, mins, rd)


def parabolic(rd: RootDatum, mu: Sequence[int]) -> ParabolicData:
    pairs = rd.simple_pairings(mu)
    if any(x < 0 for x in pairs):
        raise NotDominant(f"coweight {tuple(mu)} is not dominant (pairings {pairs})")
    return parabolic_for_J(rd, [i for i, x in enumerate(pairs) if x == 0])


def dominant_conjugate(rd: RootDatum, lam: Sequence[int]) -> tuple[Vec, int]:
    """(dominant conjugate of lam, some w with w(lam) dominant)."""
    W = rd.weyl
    lam = tuple(lam)
    w = 0
    while True:
        bad = next((i for i, x in enumerate(rd.simple_pairings(lam)) if x < 0), None)
        if bad is None:
            return lam, w
        g = W.gens[bad]
        lam = W.act_lattice(g, lam)
        w = W.mul(g, w)
