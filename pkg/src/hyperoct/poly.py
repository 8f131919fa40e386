"""Sparse multivariate polynomials with exact rational coefficients.

Variables are 1-indexed (x1..xn).  A monomial is stored as a tuple of
(variable, exponent) pairs sorted by variable, zero exponents omitted.
Also provides the one-variable Gegenbauer (ultraspherical) family and the
homogeneous building blocks used to assemble harmonic bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .numeric import binomial

Monomial = tuple[tuple[int, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _mono_from_map(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return _mono_from_map(exps)


class Polynomial:
    """Immutable sparse polynomial over Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            for v, e in mono:
                if not 1 <= v <= nvars:
                    raise ValueError(f"variable x{v} out of range 1..{nvars}")
                if e <= 0:
                    raise ValueError("stored exponents must be positive")
            clean[mono] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "Polynomial":
        return cls(nvars, {(): Fraction(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        return cls(nvars, {((index, 1),): _ONE})

    @classmethod
    def from_exponent_dicts(
        cls, nvars: int, terms: Iterable[tuple[Mapping[int, int], object]]
    ) -> "Polynomial":
        acc: dict[Monomial, Fraction] = {}
        for exps, coeff in terms:
            mono = _mono_from_map(exps)
            acc[mono] = acc.get(mono, _ZERO) + Fraction(coeff)
        return cls(nvars, acc)

    # -- ring operations ---------------------------------------------

    def _check_same_vars(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live on different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        self._check_same_vars(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc[mono] = acc.get(mono, _ZERO) + coeff
        return Polynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return Polynomial(self.nvars, {m: c * scalar for m, c in self.terms.items()})
        self._check_same_vars(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                acc[mono] = acc.get(mono, _ZERO) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("negative powers not supported")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base if power > 1 else base
            power >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {mono_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        values = [Fraction(x) for x in point]
        total = _ZERO
        for mono, coeff in self.terms.items():
            prod = coeff
            for v, e in mono:
                prod *= values[v - 1] ** e
            total += prod
        return total

    def laplacian(self) -> "Polynomial":
        """Sum of second partials over all variables."""
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for v, e in mono:
                if e < 2:
                    continue
                exps = dict(mono)
                exps[v] = e - 2
                new = _mono_from_map(exps)
                acc[new] = acc.get(new, _ZERO) + coeff * e * (e - 1)
        return Polynomial(self.nvars, acc)

    def rename_variables(self, mapping: Mapping[int, int], nvars: int) -> "Polynomial":
        """Relabel variables via an injective map old -> new index."""
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("variable mapping must be injective")
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps = {}
            for v, e in mono:
                if v not in mapping:
                    raise ValueError(f"variable x{v} missing from mapping")
                exps[mapping[v]] = e
            acc[_mono_from_map(exps)] = coeff
        return Polynomial(nvars, acc)

    # -- rendering ---------------------------------------------------

    def canonical_str(self) -> str:
        """Graded-lex rendering (degree descending, then lex on exponents)."""
        if not self.terms:
            return "0"

        def sort_key(mono: Monomial):
            dense = [0] * self.nvars
            for v, e in mono:
                dense[v - 1] = e
            return (-mono_degree(mono), [-e for e in dense])

        pieces = []
        for mono in sorted(self.terms, key=sort_key):
            coeff = self.terms[mono]
            factors = []
            for v, e in mono:
                factors.append(f"x{v}" if e == 1 else f"x{v}^{e}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in pieces[1:]:
            out += f"{sign}{text}"
        return out

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.canonical_str()})"


def squared_radius_polynomial(first_var: int, nvars: int) -> Polynomial:
    """x_first^2 + ... + x_nvars^2."""
    return Polynomial(
        nvars, {((v, 2),): _ONE for v in range(first_var, nvars + 1)}
    )


# -- Gegenbauer (ultraspherical) polynomials -------------------------


@dataclass(frozen=True)
class GegenbauerPoly:
    """One-variable Gegenbauer polynomial in the monomial basis.

    coefficients[i] is the coefficient of x^i; parity forces every other
    entry to vanish.
    """

    degree: int
    alpha: Fraction
    coefficients: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**i for i, c in enumerate(self.coefficients)), _ZERO)


@lru_cache(maxsize=None)
def gegenbauer(s: int, alpha: Fraction) -> GegenbauerPoly:
    """Degree-s Gegenbauer polynomial via the Rodrigues formula.

    The s-th derivative of (1-x^2)^(alpha+s-1/2) is carried out
    symbolically on terms c * x^a * (1-x^2)^(beta0-j); dividing by
    (1-x^2)^(alpha-1/2) then leaves the exact polynomial
    (-1)^s / (2^s s!) * sum of c * x^a * (1-x^2)^(s-j).
    """
    alpha = Fraction(alpha)
    if s < 0:
        raise ValueError("degree must be non-negative")
    if alpha <= -1:
        raise ValueError("Gegenbauer parameter must exceed -1")
    beta0 = alpha + s - Fraction(1, 2)
    terms: dict[tuple[int, int], Fraction] = {(0, 0): _ONE}
    for _ in range(s):
        nxt: dict[tuple[int, int], Fraction] = {}
        for (a, j), c in terms.items():
            if a >= 1:
                key = (a - 1, j)
                nxt[key] = nxt.get(key, _ZERO) + c * a
            beta = beta0 - j
            key = (a + 1, j + 1)
            nxt[key] = nxt.get(key, _ZERO) + c * (-2) * beta
        terms = nxt

    scale = Fraction((-1) ** s, 2**s * math.factorial(s))
    coeffs = [_ZERO] * (s + 1)
    for (a, j), c in terms.items():
        u_power = s - j
        for m in range(u_power + 1):
            coeffs[a + 2 * m] += scale * c * binomial(u_power, m) * (-1) ** m
    for i, c in enumerate(coeffs):
        if c and (i - s) % 2:
            raise AssertionError("Gegenbauer parity violated")
    return GegenbauerPoly(degree=s, alpha=alpha, coefficients=tuple(coeffs))


def building_block_g(k: int, m_k: int, m_k1: int, n: int) -> Polynomial:
    """Homogeneous block r^(m_k-m_k1) * P(x_{k+1}/r) on variables x_{k+1}..x_n.

    Here r^2 = x_{k+1}^2 + ... + x_n^2 and P is the Gegenbauer polynomial
    of degree m_k - m_k1 with parameter m_k1 + (n-k-2)/2.  Parity of the
    Gegenbauer coefficients guarantees only even powers of r^2 occur, so
    the result is a genuine polynomial, homogeneous of degree m_k - m_k1.
    """
    if not 0 <= k <= n - 3:
        raise ValueError(f"index k={k} out of range 0..{n - 3}")
    if not 0 <= m_k1 <= m_k:
        raise ValueError("need 0 <= m_(k+1) <= m_k")
    d = m_k - m_k1
    alpha = Fraction(m_k1) + Fraction(n - k - 2, 2)
    geg = gegenbauer(d, alpha)
    # the block lives on variables x_{k+1}..x_n (1-indexed)
    r2 = squared_radius_polynomial(k + 1, n)
    result = Polynomial.zero(n)
    for i, c in enumerate(geg.coefficients):
        if c == 0:
            continue
        # x_{k+1}^i * (r^2)^((d-i)/2); parity makes the exponent integral
        part = Polynomial(n, {((k + 1, i),): c}) if i else Polynomial.constant(c, n)
        result = result + part * r2 ** ((d - i) // 2)
    return result


# -- univariate helpers for Sturm root counting ----------------------


def _uni_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _uni_deriv(coeffs: Sequence[Fraction]) -> list[Fraction]:
    return _uni_trim([coeffs[i] * i for i in range(1, len(coeffs))])


def _uni_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    total = _ZERO
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _uni_rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and _uni_trim(a):
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a = _uni_trim(a)
        if not a:
            break
    return a


def count_real_roots(coeffs: Sequence, lo, hi) -> int:
    """Distinct real roots of the polynomial in the open interval (lo, hi).

    Sturm's theorem over exact rationals; endpoints must not be roots.
    """
    chain = [_uni_trim([Fraction(c) for c in coeffs])]
    if not chain[0]:
        raise ValueError("zero polynomial")
    deriv = _uni_deriv(chain[0])
    if deriv:
        chain.append(deriv)
        while len(chain[-1]) > 1:
            rem = _uni_rem(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])

    def sign_changes(x: Fraction) -> int:
        signs = [v for p in chain if (v := _uni_eval(p, x)) != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))

    lo, hi = Fraction(lo), Fraction(hi)
    if _uni_eval(chain[0], lo) == 0 or _uni_eval(chain[0], hi) == 0:
        raise ValueError("interval endpoint is a root")
    return sign_changes(lo) - sign_changes(hi)
