"""Hyperoctahedral orbits, weighted layers, and design configurations.

The orbit of e1+...+ek under all coordinate permutations and sign flips
is the set of vectors with exactly k entries equal to +-1.  Points are
kept unscaled; a layer carries the squared radius r^2 so that the scaled
point is (r/sqrt(k)) * point.  Every quantity the library sums involves
even exponent totals, so the scale only ever appears as the rational
r^2/k and no irrational number is materialized.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numeric import as_rational, binomial, format_rational

DEFAULT_POINT_CAP = 10**6


class OrbitSizeError(ValueError):
    """Raised when an orbit enumeration would exceed the configured cap."""


def orbit_size(n: int, k: int) -> int:
    """Number of vectors with exactly k nonzero entries, each +-1."""
    return 2**k * binomial(n, k)


@lru_cache(maxsize=256)
def orbit_tuples(n: int, k: int, cap: int = DEFAULT_POINT_CAP) -> tuple[tuple[int, ...], ...]:
    """All orbit points as coordinate tuples, deterministic order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    size = orbit_size(n, k)
    if size > cap:
        raise OrbitSizeError(f"orbit has {size} points, cap is {cap}")
    points = []
    for support in itertools.combinations(range(n), k):
        for signs in itertools.product((1, -1), repeat=k):
            coords = [0] * n
            for idx, sign in zip(support, signs):
                coords[idx] = sign
            points.append(tuple(coords))
    return tuple(points)


@dataclass(frozen=True)
class OrbitPoint:
    """One unscaled orbit point; coordinates lie in {-1, 0, 1}."""

    coords: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        """1-indexed coordinates that are nonzero."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c)

    @property
    def signs(self) -> dict[int, int]:
        return {i + 1: c for i, c in enumerate(self.coords) if c}


def enumerate_orbit(n: int, k: int, cap: int = DEFAULT_POINT_CAP) -> list[OrbitPoint]:
    return [OrbitPoint(coords) for coords in orbit_tuples(n, k, cap)]


def orbit_union_size(n: int, J) -> int:
    J = set(J)
    if not J <= set(range(1, n + 1)):
        raise ValueError(f"J={sorted(J)} is not a subset of 1..{n}")
    return sum(orbit_size(n, k) for k in J)


def partition_check(n: int) -> bool:
    """Whether the origin plus all n orbits tile {-1,0,1}^n exactly."""
    if not 1 <= n <= 12:
        raise ValueError("partition check supported for 1 <= n <= 12")
    seen: set[tuple[int, ...]] = {(0,) * n}
    for k in range(1, n + 1):
        for coords in orbit_tuples(n, k):
            if coords in seen:
                return False
            seen.add(coords)
    return len(seen) == 3**n


@dataclass(frozen=True)
class Layer:
    """One scaled orbit: the points (r/sqrt(k)) * I^n_k with one weight."""

    k: int
    r_squared: Fraction
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r_squared", as_rational(self.r_squared))
        object.__setattr__(self, "weight", as_rational(self.weight))
        if self.k < 1:
            raise ValueError("layer index k must be positive")
        if self.r_squared <= 0:
            raise ValueError("squared radius must be positive")
        if self.weight <= 0:
            raise ValueError("weight must be positive")


@dataclass(frozen=True)
class DesignConfig:
    """A union of weighted scaled orbits in dimension n."""

    n: int
    layers: tuple[Layer, ...]

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(sorted(self.layers, key=lambda l: l.k)))
        if self.n < 3:
            raise ValueError("configurations require n >= 3")
        ks = [layer.k for layer in self.layers]
        if len(set(ks)) != len(ks):
            raise ValueError("layer indices k must be distinct")
        if ks and max(ks) > self.n:
            raise ValueError("layer index k exceeds the dimension")
        if not ks:
            raise ValueError("a configuration needs at least one layer")

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(layer.k for layer in self.layers)

    @property
    def norm_spectrum(self) -> frozenset[Fraction]:
        """Distinct squared radii."""
        return frozenset(layer.r_squared for layer in self.layers)

    @property
    def p(self) -> int:
        return len(self.norm_spectrum)

    @property
    def size(self) -> int:
        return sum(orbit_size(self.n, layer.k) for layer in self.layers)

    # -- JSON wire format --------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "layers": [
                {
                    "k": layer.k,
                    "r_squared": format_rational(layer.r_squared),
                    "weight": format_rational(layer.weight),
                }
                for layer in self.layers
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DesignConfig":
        layers = tuple(
            Layer(
                k=int(entry["k"]),
                r_squared=as_rational(entry["r_squared"]),
                weight=as_rational(entry["weight"]),
            )
            for entry in data["layers"]
        )
        return cls(n=int(data["n"]), layers=layers)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "DesignConfig":
        return cls.from_json_dict(json.loads(text))


def make_config(n: int, layers: list[tuple[int, object, object]]) -> DesignConfig:
    """Build a config from (k, r_squared, weight) triples."""
    return DesignConfig(
        n=n,
        layers=tuple(Layer(k=k, r_squared=as_rational(r2), weight=as_rational(w)) for k, r2, w in layers),
    )
