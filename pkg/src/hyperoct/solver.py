"""Feasibility decisions and explicit weight/radius solutions.

Given a dimension, a set of orbit indices, and squared radii, decides
whether positive layer weights exist making the union a 5- or 7-design,
and returns a normalized solution when they do.  Everything is decided
by exact sign tests and exact linear algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .numeric import as_rational, binomial
from .orbit import DesignConfig, Layer
from .strength import g_function, layer_sum_f42, p_value

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DegenerateRadiusSystem(ValueError):
    """The radius identity cannot determine the requested unknown."""


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    reason: str
    solution: DesignConfig | None = None

    def to_json_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "reason": self.reason,
            "solution": self.solution.to_json_dict() if self.solution else None,
        }


def _radius_map(J: Sequence[int], r_squared) -> dict[int, Fraction]:
    J = sorted(set(J))
    given = {int(k): as_rational(v) for k, v in (r_squared or {}).items()}
    unknown = set(given) - set(J)
    if unknown:
        raise ValueError(f"radius given for k not in J: {sorted(unknown)}")
    full = {k: given.get(k, _ONE) for k in J}
    if any(v <= 0 for v in full.values()):
        raise ValueError("squared radii must be positive")
    return full


def _validate(n: int, J: Sequence[int]) -> list[int]:
    if n < 3:
        raise ValueError("need n >= 3")
    ks = sorted(set(J))
    if not ks:
        raise ValueError("J must be nonempty")
    if ks[0] < 1 or ks[-1] > n:
        raise ValueError(f"J={ks} is not a subset of 1..{n}")
    return ks


def _u_to_weight(n: int, k: int, u: Fraction) -> Fraction:
    """Invert u_k = w_k * 2^(k+1) * C(n-1, k-1) / k^3."""
    return u * k**3 / (2 ** (k + 1) * binomial(n - 1, k - 1))


def _weight_from_normalized_u(n: int, ks: list[int], us: list[Fraction], r2: dict[int, Fraction]) -> DesignConfig:
    """Scale the u-vector so the smallest-k weight is 1 and build the config."""
    w0 = _u_to_weight(n, ks[0], us[0])
    layers = tuple(
        Layer(k=k, r_squared=r2[k], weight=_u_to_weight(n, k, u) / w0)
        for k, u in zip(ks, us)
    )
    return DesignConfig(n=n, layers=layers)


# -- 5-designs --------------------------------------------------------


def solve_t5(n: int, J, r_squared: Mapping | None = None) -> FeasibilityResult:
    """Weight family making the union a 5-design, for one or two orbits.

    A single orbit works exactly when its index sits at the balance point
    (n+2)/3; a pair works exactly when the indices straddle it, in which
    case the unique weight ratio is returned normalized to w = 1 on the
    smaller index.
    """
    ks = _validate(n, J)
    if len(ks) > 2:
        raise ValueError("closed-form 5-design solving covers |J| <= 2")
    r2 = _radius_map(ks, r_squared)
    if len(ks) == 1:
        k = ks[0]
        if p_value(n, k) == 0:
            cfg = DesignConfig(n=n, layers=(Layer(k=k, r_squared=r2[k], weight=_ONE),))
            return FeasibilityResult(True, "t5:single-orbit-balanced", cfg)
        return FeasibilityResult(False, "t5:single-orbit-off-balance")
    k1, k2 = ks
    b1 = (r2[k1] / k1) ** 2 * layer_sum_f42(n, k1)
    b2 = (r2[k2] / k2) ** 2 * layer_sum_f42(n, k2)
    if b1 > 0 > b2:
        w2 = -b1 / b2
        cfg = DesignConfig(
            n=n,
            layers=(
                Layer(k=k1, r_squared=r2[k1], weight=_ONE),
                Layer(k=k2, r_squared=r2[k2], weight=w2),
            ),
        )
        return FeasibilityResult(True, "t5:pair-straddles-balance", cfg)
    return FeasibilityResult(False, "t5:pair-no-straddle")


def five_design_possible(n: int, J) -> bool:
    """Whether some positive weights make the union a 5-design (any radii).

    The single defining equation has one coefficient per layer whose sign
    is independent of radii and weights, so solvability means either every
    coefficient vanishes (single balanced orbit) or mixed signs occur.
    """
    ks = _validate(n, J)
    ps = [p_value(n, k) for k in ks]
    if len(ks) == 1:
        return ps[0] == 0
    return any(p > 0 for p in ps) and any(p < 0 for p in ps)


# -- 7-designs --------------------------------------------------------


def _q_coefficients(n: int, ks: Sequence[int]) -> list[int]:
    """Cyclic coefficients of the 1/r^2 radius identity for a sorted triple."""
    k = list(ks)
    coeffs = []
    for i in range(3):
        k_next, k_prev = k[(i + 1) % 3], k[(i + 2) % 3]
        coeffs.append(
            k[i] * (n + 2 - 3 * k[i]) * (k_next - k_prev) * g_function(n, k_next, k_prev)
        )
    return coeffs


def solve_radius_Q(n: int, ks, known: Mapping) -> Fraction | None:
    """Third squared radius making the radius identity hold, if positive.

    `known` maps two of the three sorted indices to their squared radii.
    Returns None when the forced value is not positive; raises
    DegenerateRadiusSystem when the unknown's coefficient vanishes.
    """
    ks = sorted(set(ks))
    if len(ks) != 3 or ks[0] < 1 or ks[-1] > n:
        raise ValueError("ks must be three distinct indices in 1..n")
    known = {int(k): as_rational(v) for k, v in known.items()}
    missing = [k for k in ks if k not in known]
    if len(missing) != 1 or set(known) - set(ks):
        raise ValueError("exactly two of the three indices must have known radii")
    m = ks.index(missing[0])
    coeffs = _q_coefficients(n, ks)
    if coeffs[m] == 0:
        raise DegenerateRadiusSystem(
            f"coefficient of 1/r^2 for k={missing[0]} vanishes; the identity cannot determine it"
        )
    rhs = _ZERO
    for i, k in enumerate(ks):
        if i != m:
            rhs += Fraction(coeffs[i]) / known[k]
    y = -rhs / coeffs[m]
    if y <= 0:
        return None
    return 1 / y


def _triple_weights(
    n: int, ks: list[int], r2: dict[int, Fraction]
) -> DesignConfig:
    """Weights for a feasible sorted triple via the exact ratio formulas."""
    k1, k2, k3 = ks
    g12 = g_function(n, k1, k2)
    g13 = g_function(n, k1, k3)
    g23 = g_function(n, k2, k3)
    u1 = _ONE
    u2 = Fraction(k1 - k3, k3 - k2) * Fraction(g13, g23) * (r2[k1] / r2[k2]) ** 3 * u1
    u3 = Fraction(k2 - k1, k3 - k2) * Fraction(g12, g23) * (r2[k1] / r2[k3]) ** 3 * u1
    return _weight_from_normalized_u(n, ks, [u1, u2, u3], r2)


def solve_t7(n: int, J, r_squared: Mapping | None = None) -> FeasibilityResult:
    """Weight family making the union a 7-design, for up to three orbits.

    Radii must be supplied for every index in J (default: all 1).  A pair
    needs equal radii and a vanishing G value; a triple needs the G sign
    pattern plus, depending on how many distinct radii appear, either
    nothing more, a balanced middle index with matching outer radii, or
    the exact 1/r^2 radius identity.
    """
    ks = _validate(n, J)
    if len(ks) > 3:
        raise ValueError("closed-form 7-design solving covers |J| <= 3")
    r2 = _radius_map(ks, r_squared)
    if len(ks) == 1:
        return FeasibilityResult(False, "t7:single-orbit")
    if len(ks) == 2:
        k1, k2 = ks
        if r2[k1] != r2[k2]:
            return FeasibilityResult(False, "t7:pair-radii-differ")
        if g_function(n, k1, k2) != 0:
            return FeasibilityResult(False, "t7:pair-nonzero-g")
        u1 = _ONE
        u2 = -u1 * p_value(n, k1) / p_value(n, k2)
        cfg = _weight_from_normalized_u(n, ks, [u1, u2], r2)
        return FeasibilityResult(True, "t7:pair-equal-radius-zero-g", cfg)

    k1, k2, k3 = ks
    g12 = g_function(n, k1, k2)
    g13 = g_function(n, k1, k3)
    g23 = g_function(n, k2, k3)
    signs_ok = g12 > 0 and g23 > 0 and g13 < 0
    distinct = len({r2[k] for k in ks})
    if distinct == 1:
        if signs_ok:
            return FeasibilityResult(
                True, "t7:triple-common-radius", _triple_weights(n, ks, r2)
            )
        return FeasibilityResult(False, "t7:triple-sign-pattern-fails")
    if distinct == 2:
        if r2[k1] != r2[k3]:
            return FeasibilityResult(False, "t7:triple-two-radii-wrong-pairing")
        if n % 3 != 1 or 3 * k2 != n + 2:
            return FeasibilityResult(False, "t7:triple-two-radii-middle-not-balanced")
        if g13 >= 0:
            return FeasibilityResult(False, "t7:triple-sign-pattern-fails")
        return FeasibilityResult(
            True, "t7:triple-two-radii-balanced-middle", _triple_weights(n, ks, r2)
        )
    if not signs_ok:
        return FeasibilityResult(False, "t7:triple-sign-pattern-fails")
    coeffs = _q_coefficients(n, ks)
    q_residual = sum(Fraction(c) / r2[k] for c, k in zip(coeffs, ks))
    if q_residual != 0:
        return FeasibilityResult(False, "t7:triple-radius-identity-fails")
    return FeasibilityResult(
        True, "t7:triple-three-radii", _triple_weights(n, ks, r2)
    )


def seven_design_possible(n: int, J, p: int) -> bool:
    """Whether some radii with exactly p distinct values and positive weights
    make the union a 7-design.

    For a triple with the G sign pattern, three distinct radii exist iff
    the middle index is off the balance point: at the balance point the
    radius identity forces the outer radii to coincide (the cyclic
    coefficients sum to zero), collapsing the spectrum to two values.
    """
    ks = _validate(n, J)
    j = len(ks)
    if not 1 <= p <= j:
        raise ValueError("need 1 <= p <= |J|")
    if j == 1:
        return False
    if j == 2:
        return p == 1 and g_function(n, ks[0], ks[1]) == 0
    if j == 3:
        k1, k2, k3 = ks
        signs_ok = (
            g_function(n, k1, k2) > 0
            and g_function(n, k2, k3) > 0
            and g_function(n, k1, k3) < 0
        )
        if p == 1:
            return signs_ok
        if p == 2:
            return n % 3 == 1 and 3 * k2 == n + 2 and g_function(n, k1, k3) < 0
        return signs_ok and 3 * k2 != n + 2
    raise ValueError("no closed-form criterion for |J| >= 4")


# -- maximum strength over all index sets ------------------------------


def tau(n: int, p: int, j: int) -> int:
    """Maximum strength over all unions of j orbits on p concentric spheres."""
    if n < 3:
        raise ValueError("need n >= 3")
    if not 1 <= p <= j <= 3:
        raise ValueError("need 1 <= p <= j <= 3")
    if j > n:
        raise ValueError("cannot pick j distinct orbit indices in 1..n")
    subsets = list(itertools.combinations(range(1, n + 1), j))
    if any(seven_design_possible(n, J, p) for J in subsets):
        return 7
    if any(five_design_possible(n, J) for J in subsets):
        return 5
    return 3


def tau_table(n: int) -> dict[tuple[int, int], int]:
    """All tau(p, j) values for 1 <= p <= j <= min(3, n)."""
    table = {}
    for j in range(1, min(3, n) + 1):
        for p in range(1, j + 1):
            table[(p, j)] = tau(n, p, j)
    return table


# -- exact positive solutions of homogeneous systems -------------------


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace over the rationals."""
    matrix = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                f = matrix[i][c]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    basis = []
    for free_col in (c for c in range(ncols) if c not in pivots):
        vec = [_ZERO] * ncols
        vec[free_col] = _ONE
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = -matrix[row_idx][free_col]
        basis.append(vec)
    return basis


def _fourier_motzkin(constraints: list[tuple[list[Fraction], Fraction]], nvars: int) -> list[Fraction] | None:
    """Witness for a system of linear inequalities sum(c*x) >= b, or None."""
    if nvars == 0:
        return [] if all(b <= 0 for _, b in constraints) else None
    t = nvars - 1
    lowers: list[tuple[list[Fraction], Fraction]] = []
    uppers: list[tuple[list[Fraction], Fraction]] = []
    rest: list[tuple[list[Fraction], Fraction]] = []
    for coeffs, b in constraints:
        a = coeffs[t]
        reduced = [c / a for c in coeffs[:t]] if a else list(coeffs[:t])
        if a == 0:
            rest.append((reduced, b))
        elif a > 0:
            lowers.append((reduced, b / a))
        else:
            uppers.append((reduced, b / a))
    projected = list(rest)
    for lc, lb in lowers:
        for uc, ub in uppers:
            projected.append(([l - u for l, u in zip(lc, uc)], lb - ub))
    sub = _fourier_motzkin(projected, t)
    if sub is None:
        return None
    lower_vals = [lb - sum(c * x for c, x in zip(lc, sub)) for lc, lb in lowers]
    upper_vals = [ub - sum(c * x for c, x in zip(uc, sub)) for uc, ub in uppers]
    if lower_vals and upper_vals:
        value = (max(lower_vals) + min(upper_vals)) / 2
    elif lower_vals:
        value = max(lower_vals)
    elif upper_vals:
        value = min(upper_vals)
    else:
        value = _ZERO
    return sub + [value]


def positive_nullvector(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[Fraction] | None:
    """Strictly positive x with (rows) x = 0, or None if none exists.

    Scaling makes strict positivity equivalent to x >= 1 componentwise,
    which is decided exactly by Fourier-Motzkin elimination on the
    nullspace coordinates.
    """
    rows = [list(row) for row in rows]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required when no rows are given")
        ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    if not basis:
        return None
    constraints = []
    for j in range(ncols):
        constraints.append(([vec[j] for vec in basis], _ONE))
    lam = _fourier_motzkin(constraints, len(basis))
    if lam is None:
        return None
    x = [sum(l * vec[j] for l, vec in zip(lam, basis)) for j in range(ncols)]
    assert all(v > 0 for v in x)
    return x
