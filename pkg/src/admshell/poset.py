"""Finite posets given by their cover relation.

Elements are integers ``0..n-1``; reachability is kept as Python-int
bitmasks so ``x <= y`` and interval membership are single bit tests.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


def bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class PurityViolation:
    element: int
    long_chain: list[int]  # top-down, ends at a minimal element
    short_chain: list[int]


class GradedPoset:
    """A poset presented by lower covers.

    ``rank`` is the length of the longest chain down to a minimal element;
    when the poset is pure that is the common length of all of them.
    """

    def __init__(self, names: Sequence[str], lower: Sequence[Sequence[int]], ident: str = "poset"):
        self.names = list(names)
        self.n = len(self.names)
        self.ident = ident
        self.lower = [sorted(set(c)) for c in lower]
        self.upper: list[list[int]] = [[] for _ in range(self.n)]
        for x, cs in enumerate(self.lower):
            for y in cs:
                self.upper[y].append(x)
        indeg = [len(u) for u in self.upper]
        # topological order from the top, then ranks bottom-up
        order = []
        stack = [x for x in range(self.n) if indeg[x] == 0]
        while stack:
            x = stack.pop()
            order.append(x)
            for y in self.lower[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        if len(order) != self.n:
            raise ValueError("cover relation has a cycle")
        self.rank = [0] * self.n
        for x in reversed(order):
            if self.lower[x]:
                self.rank[x] = 1 + max(self.rank[y] for y in self.lower[x])
        self.order = sorted(range(self.n), key=lambda x: (self.rank[x], x))
        self.index = {name: i for i, name in enumerate(self.names)}

    # -- structure ---------------------------------------------------------------

    @cached_property
    def minimal(self) -> list[int]:
        return [x for x in range(self.n) if not self.lower[x]]

    @cached_property
    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if not self.upper[x]]

    @property
    def bottom(self) -> int | None:
        return self.minimal[0] if len(self.minimal) == 1 else None

    @property
    def top(self) -> int | None:
        return self.maximal[0] if len(self.maximal) == 1 else None

    @cached_property
    def downmask(self) -> list[int]:
        m = [0] * self.n
        for x in self.order:
            acc = 1 << x
            for y in self.lower[x]:
                acc |= m[y]
            m[x] = acc
        return m

    @cached_property
    def upmask(self) -> list[int]:
        m = [0] * self.n
        for x in reversed(self.order):
            acc = 1 << x
            for y in self.upper[x]:
                acc |= m[y]
            m[x] = acc
        return m

    def leq(self, x: int, y: int) -> bool:
        return bool(self.downmask[y] >> x & 1)

    def interval_mask(self, lo: int, hi: int) -> int:
        return self.downmask[hi] & self.upmask[lo]

    def interval(self, lo: int, hi: int) -> list[int]:
        return sorted(bits(self.interval_mask(lo, hi)), key=lambda x: (self.rank[x], x))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in self.lower[x]]

    def purity_violation(self) -> PurityViolation | None:
        """An element reached from below by chains of different lengths, if any.

        Also catches minimal elements at different heights below a common
        element, since ranks are longest-chain lengths.
        """
        for x in self.order:
            for y in self.lower[x]:
                if self.rank[y] + 1 != self.rank[x]:
                    return PurityViolation(x, self._longest_chain(x), [x] + self._longest_chain(y))
        return None

    def is_pure(self) -> bool:
        if self.purity_violation() is not None:
            return False
        return len({self.rank[x] for x in self.maximal}) <= 1

    def _longest_chain(self, x: int) -> list[int]:
        chain = [x]
        while self.lower[x]:
            x = max(self.lower[x], key=lambda y: (self.rank[y], -y))
            chain.append(x)
        return chain

    # -- derived posets ------------------------------------------------------------

    def restrict(self, keep: Iterable[int], ident: str | None = None) -> "GradedPoset":
        """Induced subposet on ``keep`` (covers recomputed from the order)."""
        keep = sorted(set(keep), key=lambda x: (self.rank[x], x))
        pos = {x: i for i, x in enumerate(keep)}
        kmask = 0
        for x in keep:
            kmask |= 1 << x
        lower = []
        for x in keep:
            below = self.downmask[x] & kmask & ~(1 << x)
            covers = []
            for y in bits(below):
                # y is a cover in the subposet iff nothing kept lies strictly between
                if not any(self.leq(y, z) for z in bits(below & ~(1 << y))):
                    covers.append(pos[y])
            lower.append(covers)
        return GradedPoset([self.names[x] for x in keep], lower, ident or self.ident)

    def with_top(self, name: str = "1^") -> "GradedPoset":
        """Adjoin a new top element above the maximal elements (index n)."""
        lower = [list(c) for c in self.lower] + [list(self.maximal)]
        return GradedPoset(self.names + [name], lower, self.ident)

    # -- serialization --------------------------------------------------------------

    @classmethod
    def from_covers(cls, names: Sequence[str], covers: Iterable[tuple[str, str]], ident: str = "poset") -> "GradedPoset":
        """``covers`` are (upper, lower) name pairs."""
        index = {n: i for i, n in enumerate(names)}
        lower: list[list[int]] = [[] for _ in names]
        for hi, lo in covers:
            lower[index[hi]].append(index[lo])
        return cls(names, lower, ident)

    def cover_pairs(self) -> list[tuple[str, str]]:
        return [(self.names[x], self.names[y]) for x, y in self.edges]

    def to_json(self) -> dict:
        return {
            "id": self.ident,
            "elements": self.names,
            "covers": [list(p) for p in self.cover_pairs()],
            "rank": {self.names[x]: self.rank[x] for x in range(self.n)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedPoset":
        return cls.from_covers(data["elements"], [tuple(c) for c in data["covers"]], data.get("id", "poset"))

    def dump(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def to_dot(self, edge_labels: dict | None = None) -> str:
        lines = [f'graph "{self.ident}" {{', "  rankdir=BT;"]
        for r in sorted(set(self.rank)):
            same = " ".join(f'"{self.names[x]}";' for x in self.order if self.rank[x] == r)
            lines.append(f"  {{ rank=same; {same} }}")
        for x, y in self.edges:
            attr = ""
            if edge_labels and (x, y) in edge_labels:
                attr = f' [label="{edge_labels[(x, y)]}"]'
            lines.append(f'  "{self.names[y]}" -- "{self.names[x]}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"
