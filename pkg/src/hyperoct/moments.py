"""Ground-truth verification of the design property from first principles.

Sphere averages of monomials have an exact rational closed form, and
weighted sums over orbit layers are computed by enumerating the actual
points.  Checking every monomial of total degree <= t is equivalent to
the defining property of a Euclidean t-design because monomials span the
polynomial space.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .numeric import double_factorial
from .orbit import DEFAULT_POINT_CAP, DesignConfig, orbit_size, orbit_tuples
from .poly import Polynomial

_ZERO = Fraction(0)


def sphere_monomial_average(n: int, exponents: Sequence[int], r_squared) -> Fraction:
    """Average of x^alpha over the sphere of squared radius r_squared.

    Zero if any exponent is odd; otherwise
    (r^2)^(|alpha|/2) * prod (a_i - 1)!! / prod_{j<|alpha|/2} (n + 2j).
    """
    if n < 2:
        raise ValueError("sphere averages need n >= 2")
    r_squared = Fraction(r_squared)
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be non-negative")
    if any(e % 2 for e in exponents):
        return _ZERO
    total = sum(exponents)
    half = total // 2
    numerator = 1
    for e in exponents:
        numerator *= double_factorial(e - 1)
    denominator = 1
    for j in range(half):
        denominator *= n + 2 * j
    return r_squared**half * Fraction(numerator, denominator)


@lru_cache(maxsize=200_000)
def _orbit_monomial_sum(n: int, k: int, exponents: tuple[int, ...], cap: int) -> int:
    """Sum of x^alpha over the unscaled orbit points, by enumeration."""
    items = [(i, e) for i, e in enumerate(exponents) if e]
    total = 0
    for coords in orbit_tuples(n, k, cap):
        value = 1
        for i, e in items:
            c = coords[i]
            if c == 0:
                value = 0
                break
            if e % 2:
                value *= c
        total += value
    return total


def monomial_residual(cfg: DesignConfig, exponents: Sequence[int], cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """Weighted design sum minus sphere-average side for one monomial.

    Odd total degree is exactly zero on both sides (the configuration is
    antipodal and odd monomials average to zero), so enumeration is
    skipped in that case.
    """
    exponents = tuple(exponents)
    if len(exponents) != cfg.n:
        raise ValueError("monomial has wrong number of variables")
    degree = sum(exponents)
    if degree % 2:
        return _ZERO
    half = degree // 2
    left = _ZERO
    for layer in cfg.layers:
        scale = (layer.r_squared / layer.k) ** half
        left += layer.weight * scale * _orbit_monomial_sum(cfg.n, layer.k, exponents, cap)
    right = _ZERO
    for r2 in cfg.norm_spectrum:
        w_total = sum(
            (layer.weight * orbit_size(cfg.n, layer.k) for layer in cfg.layers if layer.r_squared == r2),
            _ZERO,
        )
        right += w_total * sphere_monomial_average(cfg.n, exponents, r2)
    return left - right


def design_residual(cfg: DesignConfig, f: Polynomial, cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """Residual of the defining equation for an arbitrary polynomial."""
    if f.nvars != cfg.n:
        raise ValueError(f"polynomial has {f.nvars} variables, configuration has n={cfg.n}")
    total = _ZERO
    for mono, coeff in f.terms.items():
        exponents = [0] * cfg.n
        for v, e in mono:
            exponents[v - 1] = e
        total += coeff * monomial_residual(cfg, tuple(exponents), cap)
    return total


def monomials_of_degree(n: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples on n variables with the given total degree."""
    for combo in itertools.combinations_with_replacement(range(n), degree):
        exponents = [0] * n
        for idx in combo:
            exponents[idx] += 1
        yield tuple(exponents)


class OracleFailure(NamedTuple):
    degree: int
    exponents: tuple[int, ...]
    residual: Fraction


def first_failure(cfg: DesignConfig, t_max: int, cap: int = DEFAULT_POINT_CAP) -> OracleFailure | None:
    """First monomial of degree <= t_max whose residual is nonzero.

    Degrees are scanned in increasing order; odd degrees cannot fail for
    antipodal configurations and are skipped.
    """
    for degree in range(2, t_max + 1, 2):
        for exponents in monomials_of_degree(cfg.n, degree):
            residual = monomial_residual(cfg, exponents, cap)
            if residual != 0:
                return OracleFailure(degree, exponents, residual)
    return None


def verify_strength(cfg: DesignConfig, t: int, cap: int = DEFAULT_POINT_CAP) -> bool:
    """Definition-level check that cfg is a Euclidean t-design."""
    return first_failure(cfg, t, cap) is None


def max_strength_oracle(cfg: DesignConfig, t_max: int = 11, cap: int = DEFAULT_POINT_CAP) -> int:
    """Largest t <= t_max passing verify_strength; t_max means 'at least'."""
    failure = first_failure(cfg, t_max, cap)
    if failure is None:
        return t_max
    return failure.degree - 1


def residual_rational_points(
    n: int,
    weighted_points: Sequence[tuple[Sequence, object]],
    f: Polynomial,
) -> Fraction:
    """Residual of the defining equation for an explicit rational point set.

    Independent of the orbit machinery; usable whenever every coordinate
    is rational (for orbit layers that means r^2/k a perfect square).
    """
    if f.nvars != n:
        raise ValueError("polynomial variable count mismatch")
    points = [([Fraction(c) for c in coords], Fraction(w)) for coords, w in weighted_points]
    left = _ZERO
    groups: dict[Fraction, Fraction] = {}
    for coords, weight in points:
        left += weight * f.evaluate(coords)
        r2 = sum((c * c for c in coords), _ZERO)
        if r2 == 0:
            raise ValueError("points must avoid the origin")
        groups[r2] = groups.get(r2, _ZERO) + weight
    right = _ZERO
    for r2, w_total in groups.items():
        avg = _ZERO
        for mono, coeff in f.terms.items():
            exponents = [0] * n
            for v, e in mono:
                exponents[v - 1] = e
            avg += coeff * sphere_monomial_average(n, exponents, r2)
        right += w_total * avg
    return left - right
