"""Verification of dual EL-labelings, recursive coatom orderings and N-CM.

Labels are arbitrary comparable sort keys attached to cover pairs
``(upper, lower)``.  A chain is read from the top down; it is increasing
when consecutive labels are weakly increasing in that direction.
"""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Sequence

from .admissible import AdmPoset, sigma_data
from .affine import AffineElt, AffineWeylGroup
from .errors import ChainCapExceeded, SearchBudgetExceeded, TheoryViolation, WitnessMismatch
from .labeling import ReflectionOrder
from .poset import GradedPoset, bits

Labels = Mapping[tuple[int, int], Any]


# ----------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    poset_id: str
    check: str  # dual_el | coatom | ncm
    scope: str | None
    passed: bool
    witnesses: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    intervals_checked: int = 0
    wall_time_ms: int | None = None

    def to_json(self) -> dict:
        return {
            "poset_id": self.poset_id,
            "check": self.check,
            "scope": self.scope,
            "pass": self.passed,
            "witnesses": self.witnesses,
            "violations": self.violations,
            "intervals_checked": self.intervals_checked,
            "wall_time_ms": self.wall_time_ms,
        }


ELReport = VerificationReport


def _label_text(text: Labels | None, keys: Labels, edge) -> str:
    return str(text[edge]) if text is not None else str(keys[edge])


def chain_labels(chain: Sequence[int], keys: Labels) -> list:
    return [keys[(a, b)] for a, b in zip(chain, chain[1:])]


def is_increasing(chain: Sequence[int], keys: Labels) -> bool:
    labs = chain_labels(chain, keys)
    return all(a <= b for a, b in zip(labs, labs[1:]))


# ----------------------------------------------------------------------------
# chains


def maximal_chains(P: GradedPoset, lo: int, hi: int, keys: Labels | None = None,
                   cap: int = 10**7) -> Iterator[list[int]]:
    """Maximal chains of [lo, hi] from the top down, in lex label order when
    labels are given (ascending label at every step), else by element index."""
    if not P.leq(lo, hi):
        raise ValueError(f"{P.names[lo]} is not below {P.names[hi]}")
    inside = P.upmask[lo]
    count = 0

    def rec(x, acc):
        nonlocal count
        if x == lo:
            count += 1
            if count > cap:
                raise ChainCapExceeded(f"more than {cap} maximal chains in [{P.names[lo]}, {P.names[hi]}]")
            yield list(acc)
            return
        nxt = [y for y in P.lower[x] if inside >> y & 1]
        if keys is not None:
            nxt.sort(key=lambda y: (keys[(x, y)], y))
        for y in nxt:
            acc.append(y)
            yield from rec(y, acc)
            acc.pop()

    yield from rec(hi, [hi])


def increasing_chains(P: GradedPoset, lo: int, hi: int, keys: Labels, limit: int | None = None) -> list[list[int]]:
    """All label-increasing maximal chains of [lo, hi] by pruned search."""
    inside = P.upmask[lo]
    out: list[list[int]] = []

    def rec(x, last, acc):
        if limit is not None and len(out) >= limit:
            return
        if x == lo:
            out.append(list(acc))
            return
        for y in P.lower[x]:
            if inside >> y & 1:
                k = keys[(x, y)]
                if last is None or last <= k:
                    acc.append(y)
                    rec(y, k, acc)
                    acc.pop()

    rec(hi, None, [hi])
    return out


# ----------------------------------------------------------------------------
# dual EL


def _check_bottom(P: GradedPoset, keys: Labels, b: int, only: int | None, top: int | None):
    """Dynamic programme over the up-set of ``b``.

    For every x >= b: the number of increasing maximal chains of [b, x]
    (split by the top edge) and the lex-minimal chain with a flag saying
    whether it is increasing.  Returns (b, #passing intervals, failures,
    lex-minimal chain of [b, top] or None).
    """
    order = [x for x in bits(P.upmask[b])]
    order.sort(key=lambda x: P.rank[x])
    up = P.upmask[b]
    inc_edge: dict[tuple[int, int], int] = {}
    best: dict[int, tuple] = {b: ()}
    nxt: dict[int, int] = {}
    incr = {b: True}
    bad = []
    good = 0
    for x in order:
        if x == b:
            continue
        total = 0
        choice = None
        for y in P.lower[x]:
            if not up >> y & 1:
                continue
            k = keys[(x, y)]
            if y == b:
                c = 1
            else:
                c = 0
                for z in P.lower[y]:
                    if up >> z & 1 and k <= keys[(y, z)]:
                        c += inc_edge[(y, z)]
            inc_edge[(x, y)] = c
            total += c
            cand = (k,) + best[y]
            if choice is None or cand < choice[0]:
                choice = (cand, y)
        best[x], y = choice
        nxt[x] = y
        incr[x] = incr[y] and (y == b or keys[(x, y)] <= keys[(y, nxt[y])])
        if only is not None and x != only:
            continue
        if total == 1 and incr[x]:
            good += 1
        else:
            bad.append((x, total, incr[x]))
    witness = None
    if top is not None and top in nxt:
        witness = [top]
        while witness[-1] != b:
            witness.append(nxt[witness[-1]])
    return b, good, bad, witness


def _lexmin_chain(P: GradedPoset, keys: Labels, lo: int, hi: int) -> list[int]:
    return next(maximal_chains(P, lo, hi, keys))


def _el_worker(args):
    P, keys, chunk, only, top = args
    return [_check_bottom(P, keys, b, only, top) for b in chunk]


def verify_dual_EL(P: GradedPoset, keys: Labels, scope: str = "all-intervals", text: Labels | None = None,
                   jobs: int = 1, timing: bool = False) -> VerificationReport:
    """Check both conditions of a dual EL-labeling on every interval in scope.

    ``all-intervals`` covers every [w, w'] with w < w'; ``top-intervals``
    only the intervals [w, 1^].  Witness chains are reported for the
    intervals ending at the top element.
    """
    t0 = time.perf_counter()
    if scope not in ("all-intervals", "top-intervals"):
        raise ValueError(f"unknown scope {scope!r}")
    rep = VerificationReport(P.ident, "dual_el", scope, True)
    pv = P.purity_violation()
    if pv is not None:
        rep.passed = False
        rep.violations.append({
            "kind": "not pure",
            "element": P.names[pv.element],
            "chains": [[P.names[x] for x in pv.long_chain], [P.names[x] for x in pv.short_chain]],
        })
        return rep
    top = P.top
    if scope == "top-intervals" and top is None:
        raise ValueError("top-intervals scope needs a unique maximal element")
    bottoms = [x for x in P.order if x != top]
    only = top if scope == "top-intervals" else None
    if jobs > 1 and len(bottoms) > 1:
        chunks = [bottoms[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = [r for part in ex.map(_el_worker, [(P, keys, c, only, top) for c in chunks]) for r in part]
    else:
        results = [_check_bottom(P, keys, b, only, top) for b in bottoms]
    results.sort(key=lambda r: (P.rank[r[0]], r[0]))
    for b, good, bad, witness in results:
        rep.intervals_checked += good + len(bad)
        for x, total, incr in bad:
            rep.passed = False
            rep.violations.append(_describe_el_violation(P, keys, text, b, x, total, incr))
        if witness is not None and not any(x == top for x, _, _ in bad):
            rep.witnesses.append({
                "bottom": P.names[b],
                "chain": [P.names[x] for x in witness],
                "labels": [_label_text(text, keys, e) for e in zip(witness, witness[1:])],
            })
    if timing:
        rep.wall_time_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def _describe_el_violation(P, keys, text, b, x, total, incr) -> dict:
    names = P.names
    d = {"interval": [names[b], names[x]], "increasing_chains": total}
    if total == 0:
        d["kind"] = "no increasing chain"
    elif total > 1:
        d["kind"] = "several increasing chains"
        d["chains"] = [[names[y] for y in c] for c in increasing_chains(P, b, x, keys, limit=2)]
    else:
        d["kind"] = "increasing chain is not lexicographically minimal"
        lexmin = _lexmin_chain(P, keys, b, x)
        d["chains"] = [[names[y] for y in c] for c in increasing_chains(P, b, x, keys, limit=1)]
        d["lex_min_chain"] = [names[y] for y in lexmin]
        d["lex_min_labels"] = [_label_text(text, keys, e) for e in zip(lexmin, lexmin[1:])]
    return d


def el_witness(report: VerificationReport, bottom: str) -> list[str] | None:
    for w in report.witnesses:
        if w["bottom"] == bottom:
            return w["chain"]
    return None


# ----------------------------------------------------------------------------
# recursive coatom ordering


class _CoatomChecker:
    def __init__(self, P: GradedPoset, keys: Labels | None, budget: int):
        self.P = P
        self.keys = keys
        self.budget = budget
        self.spent = 0
        self.memo: dict[tuple[int, frozenset], bool] = {}
        self.bottom = P.bottom

    def first_failure(self, x: int, order: Sequence[int]) -> tuple[int, str] | None:
        """(position, condition) of the first failure of ``order`` at x."""
        P = self.P
        dm = P.downmask
        seen_union = 0
        covered_before: set[int] = set()
        for j, xj in enumerate(order):
            below_j = dm[xj] & ~(1 << xj)
            # condition (2): everything below x_j and an earlier x_i lies under
            # some w' covered by x_j and an earlier x_k
            if j:
                need = below_j & seen_union
                shared = [y for y in P.lower[xj] if y in covered_before]
                reach = 0
                for y in shared:
                    reach |= dm[y]
                if need & ~reach:
                    return j, "2"
            # condition (1)
            S = frozenset(y for y in P.lower[xj] if y in covered_before)
            if not self.admits(xj, S):
                return j, "1"
            seen_union |= dm[xj]
            covered_before.update(P.lower[xj])
        return None

    def admits(self, x: int, S: frozenset) -> bool:
        """[0^, x] has a recursive coatom ordering starting with S."""
        P = self.P
        if P.rank[x] - P.rank[self.bottom] <= 1:
            return True
        key = (x, S)
        got = self.memo.get(key)
        if got is not None:
            return got
        coatoms = list(P.lower[x])
        if self.keys is not None:
            hint = sorted(coatoms, key=lambda y: (y not in S, self.keys[(x, y)], y))
        else:
            hint = sorted(coatoms, key=lambda y: (y not in S, y))
        ok = self.first_failure(x, hint) is None
        if not ok:
            first = [y for y in coatoms if y in S]
            rest = [y for y in coatoms if y not in S]
            for a in itertools.permutations(first):
                for b in itertools.permutations(rest):
                    self.spent += 1
                    if self.spent > self.budget:
                        raise SearchBudgetExceeded(f"coatom ordering search exceeded {self.budget} orderings")
                    if self.first_failure(x, a + b) is None:
                        ok = True
                        break
                if ok:
                    break
        self.memo[key] = ok
        return ok


def verify_recursive_coatom_ordering(P: GradedPoset, ordering: Sequence[int] | None = None,
                                     keys: Labels | None = None, budget: int = 10**6,
                                     timing: bool = False) -> VerificationReport:
    """Check that ``ordering`` of the coatoms of P is a recursive coatom ordering.

    Sub-intervals need only admit some ordering with the prescribed first
    block; the label order (if labels are given) is tried first there.
    """
    t0 = time.perf_counter()
    top, bottom = P.top, P.bottom
    if top is None or bottom is None:
        raise ValueError("recursive coatom orderings need a bounded poset")
    coatoms = P.lower[top]
    if ordering is None:
        ordering = sorted(coatoms, key=lambda y: (keys[(top, y)], y)) if keys is not None else list(coatoms)
    if sorted(ordering) != sorted(coatoms):
        raise ValueError("ordering is not a permutation of the coatoms")
    rep = VerificationReport(P.ident, "coatom", None, True)
    rep.witnesses.append({"ordering": [P.names[x] for x in ordering]})
    pv = P.purity_violation()
    if pv is not None:
        rep.passed = False
        rep.violations.append({"kind": "not pure", "element": P.names[pv.element]})
        return rep
    if P.rank[top] - P.rank[bottom] > 1:
        chk = _CoatomChecker(P, keys, budget)
        fail = chk.first_failure(top, list(ordering))
        rep.intervals_checked = len(chk.memo) + 1
        if fail is not None:
            j, cond = fail
            rep.passed = False
            rep.violations.append({"kind": f"condition ({cond})", "position": j, "coatom": P.names[ordering[j]]})
    else:
        rep.intervals_checked = 1
    if timing:
        rep.wall_time_ms = int((time.perf_counter() - t0) * 1000)
    return rep


# ----------------------------------------------------------------------------
# N-Cohen-Macaulay


class _NCM:
    def __init__(self, Q: GradedPoset, budget: int):
        self.Q = Q
        self.budget = budget
        self.spent = 0
        self.memo: dict[tuple[int, int], list[int] | None] = {}
        self.base = Q.rank[Q.bottom]

    def maxima(self, mask: int) -> list[int]:
        um = self.Q.upmask
        return [x for x in bits(mask) if um[x] & mask == 1 << x]

    def solve(self, mask: int, N: int, hint: Sequence[int] | None = None) -> list[int] | None:
        """A good ordering of the maximal elements of the ideal ``mask``, or None."""
        key = (mask, N)
        if key in self.memo:
            return self.memo[key]
        Q = self.Q
        maxs = self.maxima(mask)
        if any(Q.rank[x] - self.base != N for x in maxs):
            res = None
        elif len(maxs) == 1:
            res = maxs
        else:
            if hint is not None:
                pos = {x: i for i, x in enumerate(hint)}
                maxs.sort(key=lambda x: (pos.get(x, len(pos)), x))
            res = self._search(maxs, N)
        self.memo[key] = res
        return res

    def _search(self, maxs: list[int], N: int) -> list[int] | None:
        dm = self.Q.downmask
        dead: set[int] = set()
        k = len(maxs)

        def rec(placed: int, union: int, acc: list[int]):
            if len(acc) == k:
                return list(acc)
            if placed in dead:
                return None
            for i in range(k):
                if placed >> i & 1:
                    continue
                self.spent += 1
                if self.spent > self.budget:
                    raise SearchBudgetExceeded(f"N-CM ordering search exceeded {self.budget} steps")
                x = maxs[i]
                if acc:
                    inter = dm[x] & ~(1 << x) & union
                    if self.solve(inter, N - 1) is None:
                        continue
                acc.append(x)
                got = rec(placed | 1 << i, union | dm[x], acc)
                acc.pop()
                if got is not None:
                    return got
            dead.add(placed)
            return None

        return rec(0, 0, [])


def verify_NCM(Q: GradedPoset, N: int, hint: Sequence[int] | None = None, budget: int = 10**6,
               timing: bool = False) -> VerificationReport:
    """Decide whether Q (pure, with a bottom element) is N-Cohen-Macaulay.

    The search over orderings of maximal elements is exhaustive (with
    memoization), starting from ``hint`` when given.
    """
    t0 = time.perf_counter()
    rep = VerificationReport(Q.ident, "ncm", None, False)
    if Q.bottom is None:
        raise ValueError("N-CM needs a unique minimal element")
    if not Q.is_pure():
        rep.violations.append({"kind": "not pure"})
        return rep
    solver = _NCM(Q, budget)
    full = (1 << Q.n) - 1
    order = solver.solve(full, N, hint)
    rep.intervals_checked = len(solver.memo)
    if order is not None:
        rep.passed = True
        rep.witnesses.append({"N": N, "ordering": [Q.names[x] for x in order]})
    else:
        lengths = sorted({Q.rank[x] - Q.rank[Q.bottom] for x in Q.maximal})
        rep.violations.append({"kind": "no ordering of maximal elements works", "N": N, "maximal_lengths": lengths})
    if timing:
        rep.wall_time_ms = int((time.perf_counter() - t0) * 1000)
    return rep


# ----------------------------------------------------------------------------
# admissible-set specific oracles


def predicted_chain(p: AdmPoset, w: int) -> list[int]:
    """1^ > t^{a_min(mu)} > ... > w, indices into ``p.augmented()``.

    The part below the translation is the unique increasing chain of the
    Bruhat interval, found by exhaustive pruned search.
    """
    if p.length[w] >= p.N:
        raise ValueError("w must lie below the top layer")
    sd = sigma_data(p, p.elements[w])
    if p.v is not None and not p.rd.weyl.leq(sd.a_min, p.v):
        raise TheoryViolation(f"a_min is not below v for {p.names[w]}")
    t = p.coatom_of(sd.a_min)
    P, keys, _ = p.augmented()
    chains = increasing_chains(P, w, t, keys)
    if len(chains) != 1:
        raise TheoryViolation(
            f"[{p.names[w]}, {p.names[t]}] has {len(chains)} increasing chains",
            witness=[[P.names[x] for x in c] for c in chains],
        )
    chain = [p.hat1] + chains[0]
    if not is_increasing(chain, keys):
        raise TheoryViolation(f"predicted chain for {p.names[w]} is not increasing", witness=[P.names[x] for x in chain])
    return chain


def check_witness_agreement(p: AdmPoset, report: VerificationReport) -> int:
    """Compare predicted chains with the verifier's witnesses; returns the count."""
    P, _, _ = p.augmented()
    n = 0
    for w in range(len(p)):
        if p.length[w] >= p.N:
            continue
        pred = [P.names[x] for x in predicted_chain(p, w)]
        got = el_witness(report, p.names[w])
        if got != pred:
            raise WitnessMismatch(f"witness for {p.names[w]} differs from the predicted chain",
                                  witness={"predicted": pred, "verifier": got})
        n += 1
    return n


def negative_label_violations(p: AdmPoset) -> list[dict]:
    """Property (*) for every w and every a in Sigma_w^J other than a_min.

    The increasing chain of [w, t^{a(mu)}] should start with a negative
    label; failing that, some t^{a(mu)} > w' >= w with a negative label
    must exist.
    """
    P, keys, text = p.augmented()
    out = []
    for w in range(len(p)):
        if p.length[w] >= p.N:
            continue
        sd = sigma_data(p, p.elements[w], cross_check=False)
        for a in sd.sigma_J:
            if a == sd.a_min or a not in p.coatom_a:
                continue
            t = p.coatom_of(a)
            chains = increasing_chains(P, w, t, keys)
            top_edge = (chains[0][0], chains[0][1]) if len(chains) == 1 else None
            if top_edge is not None and p.labels.is_negative(p.label(*top_edge)):
                continue
            alt = [y for y in P.lower[t] if P.leq(w, y) and p.labels.is_negative(p.label(t, y))]
            if not alt:
                out.append({
                    "w": p.names[w],
                    "coatom": p.names[t],
                    "increasing_chains": len(chains),
                    "top_label": text[top_edge] if top_edge else None,
                })
    return out


# ----------------------------------------------------------------------------
# Bruhat intervals under arbitrary reflection orders


def bruhat_interval(G: AffineWeylGroup, lo: AffineElt, hi: AffineElt) -> tuple[GradedPoset, list[AffineElt]]:
    elts = [u for u in G.downset(hi) if G.bruhat_leq(lo, u)]
    elts.sort(key=lambda u: (G.length(u), G.format(u)))
    pos = {u: i for i, u in enumerate(elts)}
    lower = [[pos[v] for v, _ in G.down_covers(u) if v in pos] for u in elts]
    return GradedPoset([G.format(u) for u in elts], lower, ident=f"[{G.format(lo)}, {G.format(hi)}]"), elts


def sample_bruhat_intervals(G: AffineWeylGroup, rng: random.Random, count: int, max_len: int = 4,
                            top_len: tuple[int, int] = (3, 9)) -> list[tuple[AffineElt, AffineElt]]:
    """Random intervals [w, w'] with 1 <= l(w') - l(w) <= max_len."""
    nodes = [i for i in G.affine_nodes]
    out = []
    while len(out) < count:
        target = rng.randint(*top_len)
        hi = G.one
        while G.length(hi) < target:
            s = G.simple_reflection(rng.choice(nodes))
            nxt = G.mul(hi, s)
            if G.length(nxt) > G.length(hi):
                hi = nxt
        lo = hi
        for _ in range(rng.randint(1, max_len)):
            covers = G.down_covers(lo)
            if not covers:
                break
            lo = sorted(covers, key=lambda c: G.format(c[0]))[rng.randrange(len(covers))][0]
        if lo != hi:
            out.append((lo, hi))
    return out


def dyer_spot_check(G: AffineWeylGroup, intervals: Sequence[tuple[AffineElt, AffineElt]],
                    orders: Sequence[ReflectionOrder]) -> tuple[int, list[dict]]:
    """Run the dual-EL check on each interval under each reflection order."""
    passed = 0
    failures = []
    for lo, hi in intervals:
        P, elts = bruhat_interval(G, lo, hi)
        roots = {(x, y): G.label(elts[x], elts[y]) for x, y in P.edges}
        for k, order in enumerate(orders):
            keys = {e: order.key(r) for e, r in roots.items()}
            rep = verify_dual_EL(P, keys, "all-intervals")
            if rep.passed:
                passed += 1
            else:
                failures.append({"interval": P.ident, "order": k, "violations": rep.violations})
    return passed, failures


# ----------------------------------------------------------------------------
# labeling search on posets without a canonical labeling


def search_root_labeling(G: AffineWeylGroup, P: GradedPoset, elts: Sequence[AffineElt],
                         scope: str = "all-intervals", budget: int = 40320) -> VerificationReport:
    """Look for a dual EL-labeling of ``P`` with a top adjoined, inside one family.

    The family: covers inside P carry their affine-root labels under the
    default reflection order or its reverse; the edges into the new top
    carry distinct labels between the negative and positive roots, in any order of the
    maximal elements.  A FAIL means only that no member of this family works.
    """
    order = ReflectionOrder.standard(G.rd)
    roots: dict[tuple[int, int], Any] = {}
    names: dict[tuple[int, int], str] = {}
    for x, y in P.edges:
        if G.length(elts[x]) != G.length(elts[y]) + 1:
            rep = VerificationReport(P.ident, "dual_el", scope, False)
            rep.violations.append({"kind": "family not applicable", "cover": [P.names[x], P.names[y]]})
            return rep
        ar = G.label(elts[x], elts[y])
        roots[(x, y)] = (2 if G.rd.is_positive(ar[0]) else 0, order.key(ar))
        names[(x, y)] = G.root_str(ar)
    Q = P.with_top()
    top = Q.n - 1
    first_fail = None
    tried = 0
    for direction in ("forward", "reverse"):
        sign = 1 if direction == "forward" else -1
        base = {e: _signed_key(k, sign) for e, k in roots.items()}
        for perm in itertools.permutations(P.maximal):
            tried += 1
            if tried > budget:
                raise SearchBudgetExceeded(f"more than {budget} labelings tried")
            keys = dict(base)
            keys.update({(top, m): (sign, i) for i, m in enumerate(perm)})
            text = dict(names)
            text.update({(top, m): f"top[{i}]" for i, m in enumerate(perm)})
            rep = verify_dual_EL(Q, keys, scope, text)
            if rep.passed:
                rep.witnesses.insert(0, {"root_order": direction, "top_edge_order": [Q.names[m] for m in perm]})
                return rep
            first_fail = first_fail or rep
    first_fail.violations.insert(0, {"kind": "no labeling in searched family", "labelings_tried": tried})
    return first_fail


def _signed_key(key: tuple, sign: int) -> tuple:
    """Order-reversing image of a root key when ``sign`` is -1."""
    group, inner = key
    return (group, inner) if sign > 0 else (-group, _Rev(inner))


@dataclass(frozen=True)
class _Rev:
    value: Any

    def __lt__(self, other: "_Rev") -> bool:
        return other.value < self.value

    def __le__(self, other: "_Rev") -> bool:
        return other.value <= self.value
