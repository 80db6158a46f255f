import functools
import itertools

import pytest
from hypothesis import settings

from admshell import AffineWeylGroup, build_adm, build_root_datum
from admshell.config import parse_coweight
from admshell.rootdatum import CartanSpec

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def group(family: str, rank: int, lattice: str = "sc") -> AffineWeylGroup:
    return AffineWeylGroup(build_root_datum(CartanSpec.simple(family, rank, lattice)))


@functools.lru_cache(maxsize=None)
def adm(family: str, rank: int, lattice: str, mu: str, v=None):
    G = group(family, rank, lattice)
    return build_adm(G, parse_coweight(G.rd, mu), v)


def subword_downset(G, u):
    """Bruhat down-set of u by the subword property: independent of cover search."""
    word, tau = G.reduced_word(u)
    refl = [G.simple_reflection(i) for i in word]
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        w = G.one
        for keep, s in zip(mask, refl):
            if keep:
                w = G.mul(w, s)
        out.add(G.mul(w, tau))
    return out


@pytest.fixture
def a1():
    return adm("A", 1, "sc", "theta")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
