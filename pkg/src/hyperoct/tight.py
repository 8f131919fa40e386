"""Fisher-type size bounds and the three tight design families.

The lower bound counts homogeneous polynomial dimensions per sphere; a
design meeting it exactly is tight.  Constructors return the weighted
orbit unions that achieve the bound in dimensions 3 and 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .moments import max_strength_oracle
from .numeric import as_rational, binomial
from .orbit import DesignConfig, Layer
from .strength import classify

_ONE = Fraction(1)


def hom_dimension(n: int, s: int) -> int:
    """dim of homogeneous degree-s polynomials; 0 for negative s."""
    if s < 0:
        return 0
    return binomial(s + n - 1, n - 1)


@dataclass(frozen=True)
class FisherBound:
    n: int
    p: int
    t: int
    value: int
    per_k: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "t": self.t, "value": self.value, "per_k": list(self.per_k)}


def fisher_bound(n: int, p: int, t: int) -> FisherBound:
    """Minimum size of an antipodal t-design on p concentric spheres."""
    if n < 2 or p < 1 or t < 0:
        raise ValueError("need n >= 2, p >= 1, t >= 0")
    per_k = []
    for k in range(1, p + 1):
        per_k.append(
            hom_dimension(n, t // 2 + 2 - 2 * k) + hom_dimension(n, (t - 1) // 2 + 2 - 2 * k)
        )
    return FisherBound(n=n, p=p, t=t, value=sum(per_k), per_k=tuple(per_k))


# -- the three constructors ------------------------------------------


def tight_5_3d(r_squared, rho_squared, weight=1) -> DesignConfig:
    """Octahedron plus cube in R^3; tight 14-point 5-design when the radii differ."""
    r2, rho2, w = as_rational(r_squared), as_rational(rho_squared), as_rational(weight)
    return DesignConfig(
        n=3,
        layers=(
            Layer(k=1, r_squared=r2, weight=w),
            Layer(k=3, r_squared=rho2, weight=Fraction(9, 8) * r2**2 / rho2**2 * w),
        ),
    )


def tight_7_3d(r_squared, rho_squared, weight=1) -> DesignConfig:
    """Octahedron, cuboctahedron, and cube in R^3; tight 26-point 7-design
    when the two parameters differ (the three radii are then distinct)."""
    r2, rho2, w = as_rational(r_squared), as_rational(rho_squared), as_rational(weight)
    t = 3 * r2 + 2 * rho2
    return DesignConfig(
        n=3,
        layers=(
            Layer(k=1, r_squared=r2, weight=w),
            Layer(k=2, r_squared=t / 5 * r2 / rho2, weight=100 * rho2**3 / t**3 * w),
            Layer(k=3, r_squared=t / 5, weight=Fraction(675, 8) * r2**3 / t**3 * w),
        ),
    )


def tight_7_4d(r_squared, rho_squared, weight=1) -> DesignConfig:
    """Minimal vectors of the checkerboard lattice and of its dual in R^4;
    tight 48-point 7-design when the radii differ."""
    r2, rho2, w = as_rational(r_squared), as_rational(rho_squared), as_rational(weight)
    return DesignConfig(
        n=4,
        layers=(
            Layer(k=1, r_squared=r2, weight=w),
            Layer(k=2, r_squared=rho2, weight=r2**3 / rho2**3 * w),
            Layer(k=4, r_squared=r2, weight=w),
        ),
    )


# -- tightness verdicts ----------------------------------------------


def is_tight(cfg: DesignConfig, t: int | None = None, confirm_with_oracle: bool = True) -> bool:
    """Whether the configuration meets the size bound at its strength.

    Strength comes from the closed-form classifier (cross-checked against
    the definition-level oracle for n <= 6 unless disabled); p is the
    number of distinct squared radii.  Only antipodal configurations are
    certified, which orbit unions always are.
    """
    if t is None:
        t = classify(cfg).strength
        if confirm_with_oracle and cfg.n <= 6:
            oracle_t = max_strength_oracle(cfg, t_max=9)
            if oracle_t != t:
                raise AssertionError(
                    f"classifier strength {t} disagrees with oracle {oracle_t}"
                )
    return cfg.size == fisher_bound(cfg.n, cfg.p, t).value


def tightness_certificate(cfg: DesignConfig, confirm_with_oracle: bool = True) -> dict:
    """Machine-checkable certificate: config, strength report, bound, verdict."""
    report = classify(cfg)
    if confirm_with_oracle and cfg.n <= 6:
        oracle_t = max_strength_oracle(cfg, t_max=9)
        if oracle_t != report.strength:
            raise AssertionError(
                f"classifier strength {report.strength} disagrees with oracle {oracle_t}"
            )
    bound = fisher_bound(cfg.n, cfg.p, report.strength)
    return {
        "config": cfg.to_json_dict(),
        "strength_report": report.to_json_dict(),
        "size": cfg.size,
        "distinct_radii": cfg.p,
        "fisher_bound": bound.to_json_dict(),
        "antipodal": True,
        "tight": cfg.size == bound.value,
    }
