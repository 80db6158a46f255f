"""Quantum Bruhat graph of W0 and its weight function.

Weights live in the coroot lattice and are stored as simple-coroot
coordinate tuples; ``gamma <= gamma'`` means coordinatewise.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import NoWitness, NotUnique
from .rootdatum import RootDatum, Vec

BRUHAT = "bruhat"
QUANTUM = "quantum"


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    kind: str
    root: int  # positive root alpha with target = source * s_alpha
    weight: Vec


def vec_add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vec_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def edge_kind(rd: RootDatum, w: int, a: int) -> str | None:
    """Kind of the QBG edge w -> w s_alpha (alpha positive), or None."""
    W = rd.weyl
    lw, lv = W.length[w], W.length[W.mul(w, W.reflection[a])]
    if lv == lw + 1:
        return BRUHAT
    if lv == lw + 1 - rd.coroot_rho2(a):
        return QUANTUM
    return None


class QBGraph:
    def __init__(self, rd: RootDatum):
        self.rd = rd
        W = rd.weyl
        self.size = W.size
        self.zero = (0,) * rd.rank
        self._rho = [rd.coroot_rho2(a) for a in range(rd.npos)]
        edges = []
        out: list[list[Edge]] = [[] for _ in range(W.size)]
        for w in range(W.size):
            lw = W.length[w]
            for a in range(rd.npos):
                v = W.mul(w, W.reflection[a])
                lv = W.length[v]
                if lv == lw + 1:
                    e = Edge(w, v, BRUHAT, a, self.zero)
                elif lv == lw + 1 - self._rho[a]:
                    e = Edge(w, v, QUANTUM, a, rd.roots[a].coroot)
                else:
                    continue
                edges.append(e)
                out[w].append(e)
        for lst in out:
            lst.sort(key=lambda e: e.target)
        self.edges = edges
        self.out = out
        self._edge_map = {(e.source, e.target): e for e in edges}

    def edge(self, u: int, v: int) -> Edge | None:
        return self._edge_map.get((u, v))

    # -- shortest paths ----------------------------------------------------------

    def _bfs(self, s: int):
        dist = [-1] * self.size
        parent: list[Edge | None] = [None] * self.size
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.out[u]:
                if dist[e.target] < 0:
                    dist[e.target] = dist[u] + 1
                    parent[e.target] = e
                    q.append(e.target)
        return dist, parent

    @cached_property
    def _tables(self):
        dist, wt = [], []
        for s in range(self.size):
            d, par = self._bfs(s)
            if min(d) < 0:
                raise AssertionError("quantum Bruhat graph is not strongly connected")
            row = [None] * self.size
            row[s] = self.zero
            for v in sorted(range(self.size), key=lambda k: d[k]):
                if v != s:
                    e = par[v]
                    row[v] = vec_add(row[e.source], e.weight)
            dist.append(d)
            wt.append(row)
        return dist, wt

    @property
    def dist(self) -> list[list[int]]:
        return self._tables[0]

    def wt(self, u: int, v: int) -> Vec:
        return self._tables[1][u][v]

    def shortest_path_weights(self, u: int, v: int) -> set[Vec]:
        """Weights of all shortest u -> v paths (strict-mode oracle)."""
        dist = self.dist[u]
        layer = {u: {self.zero}}
        for step in range(dist[v]):
            nxt: dict[int, set[Vec]] = {}
            for x, ws in layer.items():
                for e in self.out[x]:
                    y = e.target
                    if dist[y] == step + 1 and self.dist[y][v] == dist[v] - step - 1:
                        nxt.setdefault(y, set()).update(vec_add(w, e.weight) for w in ws)
            layer = nxt
        return layer[v]

    def shortest_paths(self, u: int, v: int) -> Iterator[list[Edge]]:
        total = self.dist[u][v]

        def rec(x, depth, acc):
            if x == v:
                yield list(acc)
                return
            for e in self.out[x]:
                if self.dist[e.target][v] == total - depth - 1:
                    acc.append(e)
                    yield from rec(e.target, depth + 1, acc)
                    acc.pop()

        yield from rec(u, 0, [])

    # -- extremal elements --------------------------------------------------------

    def min_weight_bounded(self, v: int, gamma: Sequence[int], side: str) -> int:
        """side="to": max{u | wt(u,v) <= gamma}; side="from": min{u | wt(v,u) <= gamma}."""
        W = self.rd.weyl
        if side == "to":
            cand = [u for u in range(self.size) if vec_leq(self.wt(u, v), gamma)]
            res = W.maximum(cand)
        elif side == "from":
            cand = [u for u in range(self.size) if vec_leq(self.wt(v, u), gamma)]
            res = W.minimum(cand)
        else:
            raise ValueError(f"side must be 'to' or 'from', not {side!r}")
        if res is None:
            raise NotUnique(
                f"no unique extremal element for v={W.word_str(v)}, gamma={tuple(gamma)}, side={side}",
                witness={"candidates": cand},
            )
        return res

    def downup_witness(self, u: int, v: int, shape: str = "down-up") -> list[Edge]:
        """Shortest u -> v path with all quantum edges before all Bruhat edges
        (down-up) or all Bruhat edges first (up-down)."""
        if u == v:
            raise ValueError("u and v must differ")
        first = QUANTUM if shape == "down-up" else BRUHAT
        if shape not in ("down-up", "up-down"):
            raise ValueError(f"unknown shape {shape!r}")
        total = self.dist[u][v]

        def rec(x, depth, phase, acc):
            if x == v:
                return list(acc)
            for e in self.out[x]:
                if self.dist[e.target][v] != total - depth - 1:
                    continue
                if phase == 1 and e.kind == first:
                    continue
                acc.append(e)
                got = rec(e.target, depth + 1, 0 if e.kind == first and phase == 0 else 1, acc)
                acc.pop()
                if got is not None:
                    return got
            return None

        path = rec(u, 0, 0, [])
        if path is None:
            W = self.rd.weyl
            raise NoWitness(f"no {shape} shortest path {W.word_str(u)} -> {W.word_str(v)}")
        return path

    # -- duality ---------------------------------------------------------------

    def dual_edge_map(self) -> dict[Edge, Edge] | None:
        """Image of each edge u -> v under u -> w0 u, which is the edge w0 v -> w0 u
        (lengths are reversed); None if that is not a bijection preserving
        kinds and weights."""
        W = self.rd.weyl
        w0 = W.longest
        out = {}
        for e in self.edges:
            f = self.edge(W.mul(w0, e.target), W.mul(w0, e.source))
            if f is None or f.kind != e.kind or f.weight != e.weight:
                return None
            out[e] = f
        if len(set(out.values())) != len(self.edges):
            return None
        return out

    # -- export ------------------------------------------------------------------

    def weight_str(self, gamma: Sequence[int]) -> str:
        terms = []
        for i, c in enumerate(gamma):
            if c:
                coef = "" if abs(c) == 1 else str(abs(c))
                terms.append(("-" if c < 0 else "+") + f"{coef}a{i + 1}v")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s

    def to_dot(self) -> str:
        W = self.rd.weyl
        lines = ["digraph qbg {", "  rankdir=BT;"]
        for w in range(self.size):
            lines.append(f'  "{W.word_str(w)}";')
        for e in self.edges:
            a, b = W.word_str(e.source), W.word_str(e.target)
            if e.kind == BRUHAT:
                lines.append(f'  "{a}" -> "{b}" [style=solid];')
            else:
                lines.append(f'  "{a}" -> "{b}" [style=dashed, label="{self.weight_str(e.weight)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        W = self.rd.weyl
        return {
            "vertices": [W.word_str(w) for w in range(self.size)],
            "edges": [
                {
                    "source": W.word_str(e.source),
                    "target": W.word_str(e.target),
                    "kind": e.kind,
                    "root": list(self.rd.roots[e.root].coords),
                    "weight": list(e.weight),
                }
                for e in self.edges
            ],
        }

    def wt_table_json(self) -> list[dict]:
        W = self.rd.weyl
        return [
            {"u": W.word_str(u), "v": W.word_str(v), "wt": list(self.wt(u, v))}
            for u in range(self.size)
            for v in range(self.size)
        ]


def build_qbg(rd: RootDatum) -> QBGraph:
    return QBGraph(rd)
