"""Checked-in fixture posets and their regeneration from root data."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .admissible import CoxeterSubsets, build_coxeter_subsets
from .affine import AffineWeylGroup
from .errors import ConfigError
from .poset import GradedPoset
from .rootdatum import build_root_datum

FIXTURES = ("fig3", "fig4")


def load_fixture(name: str) -> dict:
    if name not in FIXTURES:
        raise ConfigError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    text = resources.files("admshell").joinpath("fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def fixture_poset(name: str) -> GradedPoset:
    return GradedPoset.from_json(load_fixture(name))


def generate_fixture(name: str) -> tuple[CoxeterSubsets, GradedPoset]:
    """Recompute the subset a fixture records, from its datum, mu and K."""
    data = load_fixture(name)
    rd = build_root_datum(data["datum"])
    G = AffineWeylGroup(rd)
    sigma = {int(k): v for k, v in data["sigma"].items()} if data.get("sigma") else None
    cs = build_coxeter_subsets(G, data["mu"], sigma, data["K"])
    return cs, cs.poset(data["subset"])


@dataclass
class FixtureComparison:
    name: str
    equal: bool
    missing: list[str]  # in the fixture, not generated
    extra: list[str]  # generated, not in the fixture
    cover_mismatches: list[tuple[str, str]]


def compare_fixture(name: str) -> FixtureComparison:
    """Compare elements and covers as group elements, not as words."""
    data = load_fixture(name)
    cs, gen = generate_fixture(name)
    G = cs.adm.G
    to_elt = {w: G.parse_affine_word(w, cs.tau) for w in data["elements"]}
    gen_elts = {G.parse_affine_word(w, cs.tau): w for w in gen.names}
    fixed = {e: w for w, e in to_elt.items()}
    missing = sorted(w for w, e in to_elt.items() if e not in gen_elts)
    extra = sorted(w for e, w in gen_elts.items() if e not in fixed)
    fix_cov = {(to_elt[a], to_elt[b]) for a, b in data["covers"]}
    gen_cov = {(G.parse_affine_word(a, cs.tau), G.parse_affine_word(b, cs.tau)) for a, b in gen.cover_pairs()}
    bad = sorted(
        (fixed.get(a) or gen_elts.get(a), fixed.get(b) or gen_elts.get(b)) for a, b in fix_cov ^ gen_cov
    )
    return FixtureComparison(name, not (missing or extra or bad), missing, extra, bad)
