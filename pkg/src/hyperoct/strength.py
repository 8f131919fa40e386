"""Fast exact strength classification of orbit-union configurations.

A fully symmetric configuration is always a 3-design.  Strength 5 and 7
are decided by a handful of exact linear conditions built from closed
forms for the orbit sums of the criterion polynomials, and strength 9 is
impossible because the degree-8 two-variable criterion sum is strictly
positive on every orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import binomial, format_rational
from .orbit import DesignConfig

_ZERO = Fraction(0)

# residual identifiers in canonical order; f84 is dropped when n = 3
EQ_IDS_T5 = ("f42_s0",)
EQ_IDS_T7 = ("f42_s0", "f42_s1", "f63_s0")
EQ_IDS_T9 = ("f42_s0", "f42_s1", "f42_s2", "f63_s0", "f63_s1", "f82", "f84")


def g_function(n: int, k1: int, k2: int) -> int:
    """The quadratic form whose zeros govern two-orbit 7-designs."""
    if not (1 <= k1 <= n and 1 <= k2 <= n):
        raise ValueError("need 1 <= k1, k2 <= n")
    return (n + 2 - 3 * k1) * (n + 2 - 3 * k2) + 6 * (k1 - 1) * (k2 - 1) + 2 * (n - 1)


def property_g(n: int) -> tuple[int, int] | None:
    """A witness pair (k1, k2) with G = 0, or None if none exists."""
    if n < 1:
        raise ValueError("need n >= 1")
    for k1 in range(1, n + 1):
        for k2 in range(k1, n + 1):
            if g_function(n, k1, k2) == 0:
                return (k1, k2)
    return None


def p_value(n: int, k: int) -> Fraction:
    """k * (1 - 3(k-1)/(n-1)); sign tells which side of (n+2)/3 k lies on."""
    return k * (1 - Fraction(3 * (k - 1), n - 1))


def q_value(n: int, k: int) -> Fraction:
    return 3 * (
        1
        - Fraction(15 * (k - 1), n - 1)
        + Fraction(30 * (k - 1) * (k - 2), (n - 1) * (n - 2))
    )


# -- orbit sums of the criterion polynomials -------------------------


def layer_sum_f42(n: int, k: int) -> int:
    """Sum of x1^4 - 6 x1^2 x2^2 + x2^4 over the unscaled orbit."""
    _check_layer(n, k)
    return 2**k * (2 * binomial(n - 1, k - 1) - 6 * binomial(n - 2, k - 2))


def layer_sum_f63(n: int, k: int) -> int:
    _check_layer(n, k)
    return 2**k * (
        6 * binomial(n - 1, k - 1)
        - 90 * binomial(n - 2, k - 2)
        + 180 * binomial(n - 3, k - 3)
    )


def layer_sum_f82(n: int, k: int) -> int:
    """Orbit sum of the degree-8 pair criterion; strictly positive for all k.

    The cross terms -28, +70, -28 each see the same count of points with
    both coordinates nonzero, so they collapse to a single +14 multiple
    of C(n-2, k-2).
    """
    _check_layer(n, k)
    return 2**k * (2 * binomial(n - 1, k - 1) + 14 * binomial(n - 2, k - 2))


def layer_sum_f84(n: int, k: int) -> int:
    """Orbit sum of the degree-8 four-variable criterion.

    Coefficients were fitted from exact enumeration on small orbits and
    re-verified against enumeration for every n <= 8 (see tests).
    """
    _check_layer(n, k)
    if n < 4:
        raise ValueError("the four-variable criterion needs n >= 4")
    return 2**k * (
        12 * binomial(n - 1, k - 1)
        - 336 * binomial(n - 2, k - 2)
        + 2520 * binomial(n - 3, k - 3)
        - 3780 * binomial(n - 4, k - 4)
    )


def _check_layer(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")


@dataclass(frozen=True)
class StrengthReport:
    """Classification verdict with every defining residual, for debugging."""

    strength: int
    residuals: dict[str, Fraction]
    method: str = "closed-form"
    nine_design_obstruction: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "strength": self.strength,
            "method": self.method,
            "residuals": {k: format_rational(v) for k, v in self.residuals.items()},
            "nine_design_obstruction": self.nine_design_obstruction,
        }


def classify(cfg: DesignConfig) -> StrengthReport:
    """Exact strength (3, 5, or 7) of an orbit-union configuration.

    Evaluates every defining equation: the degree-4 criterion with radius
    powers 0..2, the degree-6 criterion with powers 0..1, and the two
    degree-8 criteria.  The four-variable degree-8 equation is vacuous
    for n = 3 and is omitted there.
    """
    n = cfg.n
    residuals: dict[str, Fraction] = {}
    for s1 in range(3):
        total = _ZERO
        for layer in cfg.layers:
            total += (
                layer.weight
                * layer.r_squared**s1
                * (layer.r_squared / layer.k) ** 2
                * layer_sum_f42(n, layer.k)
            )
        residuals[f"f42_s{s1}"] = total
    for s2 in range(2):
        total = _ZERO
        for layer in cfg.layers:
            total += (
                layer.weight
                * layer.r_squared**s2
                * (layer.r_squared / layer.k) ** 3
                * layer_sum_f63(n, layer.k)
            )
        residuals[f"f63_s{s2}"] = total
    total = _ZERO
    for layer in cfg.layers:
        total += (
            layer.weight * (layer.r_squared / layer.k) ** 4 * layer_sum_f82(n, layer.k)
        )
    residuals["f82"] = total
    if n >= 4:
        total = _ZERO
        for layer in cfg.layers:
            total += (
                layer.weight * (layer.r_squared / layer.k) ** 4 * layer_sum_f84(n, layer.k)
            )
        residuals["f84"] = total

    if all(residuals[eq] == 0 for eq in EQ_IDS_T7):
        strength = 7
    elif residuals["f42_s0"] == 0:
        strength = 5
    else:
        strength = 3
    obstruction = next(
        (eq for eq in EQ_IDS_T9 if eq in residuals and residuals[eq] != 0),
        None,
    )
    return StrengthReport(
        strength=strength,
        residuals=residuals,
        method="closed-form",
        nine_design_obstruction=obstruction,
    )
