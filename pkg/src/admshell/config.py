"""Run configuration and text formats for coweights and Weyl elements."""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field

from .affine import parse_word
from .errors import ConfigError
from .rootdatum import RootDatum, Vec

CHECKS = ("dual_el", "coatom", "ncm", "top_two", "witness", "negative")
SCOPES = ("all-intervals", "top-intervals")


@dataclass
class RunConfig:
    datum: dict = field(default_factory=lambda: {"type": "A", "rank": 1, "lattice": "sc"})
    mu: str | None = None
    v: str | None = None
    checks: list[str] = field(default_factory=lambda: ["dual_el"])
    scope: str = "all-intervals"
    n: int | None = None
    fixture: str | None = None
    dominate: bool = False
    seed: int = 0
    jobs: int = 1
    timing: bool = False
    out: str | None = None

    def validate(self) -> "RunConfig":
        bad = [c for c in self.checks if c not in CHECKS]
        if bad:
            raise ConfigError(f"unknown check(s) {bad}; choose from {', '.join(CHECKS)}")
        if self.scope not in SCOPES:
            raise ConfigError(f"unknown scope {self.scope!r}")
        if self.fixture is None and self.mu is None:
            raise ConfigError("either a coweight (--mu) or a fixture is required")
        if self.jobs < 1:
            raise ConfigError("--jobs must be positive")
        return self

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "RunConfig":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)}")
        return cls(**data).validate()

    @classmethod
    def loads(cls, text: str) -> "RunConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
        return cls.from_json(data)


_OMEGA = re.compile(r"(?:(\d+)\*)?omega(\d+)")


def parse_coweight(rd: RootDatum, text: str) -> Vec:
    """Coordinates in the X_* basis ("1,0,1"), or "theta", "rho" or sums
    of fundamental coweights such as "omega1+omega4" / "2*omega2"."""
    text = text.strip().replace(" ", "")
    if re.fullmatch(r"-?\d+(,-?\d+)*", text):
        lam = tuple(int(x) for x in text.split(","))
        if len(lam) != rd.dim:
            raise ConfigError(f"coweight needs {rd.dim} coordinates, got {len(lam)}")
        return lam
    if text == "theta":
        if rd.ncomponents != 1:
            raise ConfigError("theta is ambiguous for reducible root data")
        return rd.roots[rd.highest_roots[0]].coroot_lat
    pairings = [0] * rd.rank
    if text == "rho":
        pairings = [1] * rd.rank
    else:
        for part in text.split("+"):
            m = _OMEGA.fullmatch(part)
            if not m:
                raise ConfigError(f"cannot parse coweight {text!r}")
            i = int(m.group(2))
            if not 1 <= i <= rd.rank:
                raise ConfigError(f"no fundamental coweight omega{i}")
            pairings[i - 1] += int(m.group(1) or 1)
    lam = rd.coweight(pairings)
    if lam is None:
        raise ConfigError(f"{text} is not in the cocharacter lattice of {rd!r}; try --lattice ad")
    return lam


def parse_weyl(rd: RootDatum, text: str) -> int:
    """A W0 element from "w0", "1" or a word like "s1s2"."""
    W = rd.weyl
    text = text.strip()
    if text == "w0":
        return W.longest
    if text in ("", "1", "e"):
        return 0
    word = parse_word(text)
    if any(not 1 <= i <= rd.rank for i in word):
        raise ConfigError(f"{text!r} uses a letter outside s1..s{rd.rank}")
    return W.from_word([i - 1 for i in word])
