"""Acceptance criteria, all checked exactly (no tolerances).

Each ``criterion_*`` function raises AssertionError on failure and returns
a one-line summary otherwise.  Under pytest a PASS/FAIL line per criterion
is printed in the terminal summary; ``python tests/test_acceptance.py``
prints the same lines directly.
"""
from __future__ import annotations

import functools
import itertools
import json
import os
import random
import subprocess
import sys
import tempfile
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from admshell import AdmPoset, build_coxeter_subsets, top_two  # noqa: E402
from admshell.config import parse_coweight  # noqa: E402
from admshell.figures import compare_fixture  # noqa: E402
from admshell.labeling import ReflectionOrder  # noqa: E402
from admshell.qbg import BRUHAT, QUANTUM, vec_add, vec_leq  # noqa: E402
from admshell.shellability import (  # noqa: E402
    check_witness_agreement,
    dyer_spot_check,
    sample_bruhat_intervals,
    verify_dual_EL,
    verify_NCM,
    verify_recursive_coatom_ordering,
)
from conftest import group  # noqa: E402

# (family, rank, lattice, coweight); minuscule coweights need the adjoint lattice
MATRIX_MU = [
    ("A", 1, "ad", "omega1"), ("A", 1, "sc", "theta"),
    ("A", 2, "ad", "omega1"), ("A", 2, "ad", "omega2"), ("A", 2, "sc", "theta"), ("A", 2, "ad", "omega1+omega2"),
    ("A", 3, "ad", "omega1"), ("A", 3, "ad", "omega2"), ("A", 3, "ad", "omega3"), ("A", 3, "sc", "theta"),
    ("B", 2, "ad", "omega1"), ("B", 2, "sc", "theta"), ("B", 2, "ad", "omega1+omega2"),
    ("C", 2, "ad", "omega2"), ("C", 2, "sc", "theta"), ("C", 2, "ad", "omega1+omega2"),
    ("G", 2, "sc", "theta"), ("G", 2, "sc", "omega1+omega2"),
]
RANK_LE_3 = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 2), ("G", 2), ("B", 3), ("C", 3)]


def v_choices(family, rank, lattice, mu):
    """w0 and two further elements drawn with a seed fixed by the configuration."""
    W = group(family, rank, lattice).rd.weyl
    rng = random.Random(f"{family}{rank}:{lattice}:{mu}")
    others = [w for w in range(W.size) if w != W.longest]
    return [W.longest] + sorted(rng.sample(others, min(2, len(others))))


def matrix():
    for cfg in MATRIX_MU:
        for v in v_choices(*cfg):
            yield cfg, v


@functools.lru_cache(maxsize=None)
def poset(cfg, v):
    G = group(*cfg[:3])
    return AdmPoset(G, parse_coweight(G.rd, cfg[3]), v)


@functools.lru_cache(maxsize=None)
def el_report(cfg, v):
    P, keys, text = poset(cfg, v).augmented()
    return verify_dual_EL(P, keys, "all-intervals", text)


def tag(cfg, v=None):
    return poset(cfg, v).ident


# ----------------------------------------------------------------------------


def criterion_1() -> str:
    n = intervals = 0
    for cfg, v in matrix():
        rep = el_report(cfg, v)
        assert rep.passed, (tag(cfg, v), rep.violations[:3])
        n += 1
        intervals += rep.intervals_checked
    return f"{n} configurations, {intervals} intervals, each with one increasing chain that is lex-minimal"


def criterion_2(max_n: int = 6) -> str:
    n = 0
    for rank in range(1, max_n):
        G = group("A", rank, "gl")
        for k in range(1, rank + 1):
            mu = G.rd.fundamental_coweight(k - 1)
            p = AdmPoset(G, mu)
            P, keys, text = p.augmented()
            rep = verify_dual_EL(P, keys, "all-intervals", text)
            assert rep.passed, (p.ident, rep.violations[:3])
            n += 1
    return f"GL_n for 2 <= n <= {max_n} and every minuscule omega_k: {n} posets pass"


def criterion_3() -> str:
    n = 0
    for cfg, v in matrix():
        p = poset(cfg, v)
        assert el_report(cfg, v).passed
        P, keys, _ = p.augmented()
        rep = verify_recursive_coatom_ordering(P, keys=keys)
        assert rep.passed, (p.ident, rep.violations)
        ncm = verify_NCM(p.poset(), p.N, hint=p.coatoms)
        assert ncm.passed, (p.ident, ncm.violations)
        n += 1
    return f"{n} configurations: label-induced coatom ordering is recursive and Adm is <mu,2rho>-CM"


def criterion_4() -> str:
    cmp = compare_fixture("fig4")
    assert cmp.equal, cmp
    cs = build_coxeter_subsets(group("A", 2), (1, 1))
    Q = cs.poset("KAdm0")
    assert Q.n == 13
    rep = verify_NCM(Q, 3)
    assert not rep.passed
    return "13-element poset equals the fixture; 3-Cohen-Macaulay check FAILS as expected"


def criterion_5() -> str:
    cmp = compare_fixture("fig3")
    assert cmp.equal, cmp
    cs = build_coxeter_subsets(group("A", 4), (1, 1, 1, 1), K=[1, 2, 3, 4])
    assert len(cs.KCox) == 11 and cs.coxeter_type
    return "11 elements and 13 covers equal the fixture; Coxeter-type predicate true"


def criterion_6() -> str:
    covers = 0
    for cfg in MATRIX_MU:
        if cfg[1] > 2:
            continue
        p = poset(cfg, None)
        G = p.G
        for w in p.elements:
            brute = G.covers_bruteforce(w)
            for pres in G.acute_presentations(w):
                got = G.covers_schremmer(w, pres)
                elts = [c.elt for c in got]
                assert len(elts) == len(set(elts)), (G.format(w), "a cover matched two cases")
                assert set(elts) == set(brute), (G.format(w), pres)
                covers += len(elts)
    return f"{covers} (element, presentation, cover) triples agree, each in exactly one case"


def criterion_7() -> str:
    checked = 0
    for t in RANK_LE_3:
        rd = group(*t).rd
        W, g = rd.weyl, group(*t).qbg
        S = range(g.size)
        for u, v in itertools.product(S, S):
            assert g.shortest_path_weights(u, v) == {g.wt(u, v)}, (t, u, v)
            assert (g.wt(u, v) == g.zero) == W.leq(u, v), (t, u, v)
            if u != v:
                for shape, first in (("down-up", QUANTUM), ("up-down", BRUHAT)):
                    path = g.downup_witness(u, v, shape)
                    kinds = [e.kind for e in path]
                    assert kinds == sorted(kinds, key=lambda k: k != first)
        for u, v, w in itertools.product(S, S, S):
            assert vec_leq(g.wt(u, w), vec_add(g.wt(u, v), g.wt(v, w))), (t, u, v, w)
        assert g.dual_edge_map() is not None, t
        top = [2 * c for c in rd.roots[rd.highest_roots[0]].coroot]
        for gamma in itertools.product(*(range(c + 1) for c in top)):
            for v in S:
                g.min_weight_bounded(v, gamma, "to")  # raises NotUnique
                g.min_weight_bounded(v, gamma, "from")
                checked += 1
    return f"rank <= 3 ({len(RANK_LE_3)} types): all QBG properties hold; {checked} extremal-element cases"


def criterion_8() -> str:
    n = 0
    for cfg in MATRIX_MU:
        n += len(top_two(poset(cfg, None)))
    return f"{n} (element, acute presentation) records at height <mu,2rho> - 1 match the description"


def criterion_9() -> str:
    n = 0
    for cfg, v in matrix():
        n += check_witness_agreement(poset(cfg, v), el_report(cfg, v))
    return f"{n} predicted chains equal the verifier's witnesses"


def dyer_run(seed: int = 2024) -> tuple[int, list]:
    total, failures = 0, []
    for family, count in (("A", 67), ("B", 67), ("G", 66)):
        G = group(family, 2)
        rng = random.Random(f"{seed}:{family}")
        intervals = sample_bruhat_intervals(G, rng, count)
        assert all(G.length(hi) - G.length(lo) <= 4 for lo, hi in intervals)
        orders = [ReflectionOrder.standard(G.rd)] + [ReflectionOrder.random(G.rd, rng) for _ in range(5)]
        passed, fails = dyer_spot_check(G, intervals, orders)
        total += passed + len(fails)
        failures += fails
    return total, failures


def criterion_10() -> str:
    total, failures = dyer_run()
    assert total == 1200 and not failures, failures[:2]
    return "200 intervals x 6 reflection orders: 1200 of 1200 dual EL"


DETERMINISM_COMMANDS = [
    ["verify", "--type", "A", "--rank", "2", "--mu", "theta", "--v", "s1", "--check", "all", "--check", "witness"],
    ["verify", "--type", "G", "--rank", "2", "--mu", "theta", "--check", "top_two", "--check", "negative"],
    ["verify", "--fixture", "fig4", "--check", "ncm", "--n", "3"],
    ["export", "hasse", "--fixture", "fig3", "--format", "json"],
    ["export", "qbg", "--type", "B", "--rank", "3", "--format", "json"],
    ["export", "labels", "--type", "C", "--rank", "2", "--lattice", "ad", "--mu", "omega1+omega2"],
]


def criterion_11() -> str:
    with tempfile.TemporaryDirectory() as tmp:
        for k, cmd in enumerate(DETERMINISM_COMMANDS):
            outs = []
            for run in range(2):
                out = Path(tmp) / f"{k}-{run}.out"
                subprocess.run([sys.executable, "-m", "admshell.cli", *cmd, "--out", str(out)],
                               capture_output=True, check=False)
                outs.append(out.read_bytes())
            assert outs[0] == outs[1] and outs[0], cmd
    a, b = dyer_run(7), dyer_run(7)
    assert a == b
    cfg = ("B", 2, "ad", "omega1+omega2")
    P, keys, text = poset(cfg, None).augmented()
    assert json.dumps(verify_dual_EL(P, keys, text=text, jobs=4).to_json()) == json.dumps(el_report(cfg, None).to_json())
    return f"{len(DETERMINISM_COMMANDS)} CLI reports byte-identical across runs; sampling and sharding deterministic"


CRITERIA = {
    1: ("dual EL on the configuration matrix", criterion_1),
    2: ("GL_n minuscule, n <= 6", criterion_2),
    3: ("implication chain", criterion_3),
    4: ("fig4 fixture negative control", criterion_4),
    5: ("fig3 fixture reproduction", criterion_5),
    6: ("cover-oracle equivalence", criterion_6),
    7: ("QBG properties", criterion_7),
    8: ("top-two structure", criterion_8),
    9: ("witness agreement", criterion_9),
    10: ("Dyer spot-check", criterion_10),
    11: ("determinism", criterion_11),
}

RESULTS: dict[int, str] = {}


def line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n:2d} [{CRITERIA[n][0]}]: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    try:
        detail = CRITERIA[n][1]()
    except Exception as exc:
        RESULTS[n] = line(n, False, f"{type(exc).__name__}: {exc}"[:300])
        raise
    RESULTS[n] = line(n, True, detail)
    print(RESULTS[n])


@pytest.mark.skipif(not os.environ.get("ADMSHELL_LONG"), reason="long run; set ADMSHELL_LONG=1")
def test_gl7_long():
    print(criterion_2(7))


if __name__ == "__main__":
    failed = 0
    for n, (_, fn) in sorted(CRITERIA.items()):
        try:
            print(line(n, True, fn()), flush=True)
        except Exception as exc:
            failed += 1
            print(line(n, False, f"{type(exc).__name__}: {exc}"[:300]), flush=True)
    sys.exit(1 if failed else 0)
