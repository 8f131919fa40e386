"""Harmonic polynomial bases on R^n.

Builds the full Gegenbauer-product basis of the homogeneous harmonic
polynomials of degree s, its fully even subset (every variable appears
with even exponents only), and the fixed small criterion bases for
degrees 2, 4, 6, 8 whose coordinate embeddings span the fully even
harmonic subspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .numeric import binomial
from .poly import Polynomial, building_block_g

_ONE = Fraction(1)

DEFAULT_MAX_N = 6
DEFAULT_MAX_S = 8


def harm_dimension(n: int, s: int) -> int:
    """dim of homogeneous harmonic polynomials of degree s on n variables."""
    return binomial(n + s - 1, n - 1) - binomial(n + s - 3, n - 1)


def fully_even_dimension(n: int, s: int) -> int:
    """dim of the fully even harmonic subspace (s even)."""
    if s % 2:
        raise ValueError("fully even harmonics exist only for even degree")
    return binomial(n + s // 2 - 2, n - 2)


@dataclass(frozen=True)
class BasisElement:
    """One product-basis element: index (m0, ..., m_{n-2}, mu) and its polynomial."""

    index: tuple[int, ...]
    poly: Polynomial

    @property
    def m_values(self) -> tuple[int, ...]:
        return self.index[:-1]

    @property
    def mu(self) -> int:
        return self.index[-1]


def _real_imag_powers(m: int, mu: int, n: int) -> Polynomial:
    """Re or Im part of (x_{n-1} + i x_n)^m as a polynomial on n variables."""
    terms = {}
    for j in range(m + 1):
        if mu == 1 and j % 2 == 0:
            sign = (-1) ** (j // 2)
        elif mu == 2 and j % 2 == 1:
            sign = (-1) ** ((j - 1) // 2)
        else:
            continue
        exps = {}
        if m - j:
            exps[n - 1] = m - j
        if j:
            exps[n] = j
        mono = tuple(sorted(exps.items()))
        terms[mono] = Fraction(sign * binomial(m, j))
    return Polynomial(n, terms)


def _descending_chains(s: int, length: int) -> Iterator[tuple[int, ...]]:
    """All tuples (m1, ..., m_length) with s >= m1 >= ... >= m_length >= 0."""
    if length == 0:
        yield ()
        return
    for first in range(s, -1, -1):
        for rest in _descending_chains(first, length - 1):
            yield (first, *rest)


def full_basis(
    n: int,
    s: int,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_s: int = DEFAULT_MAX_S,
) -> list[BasisElement]:
    """The Gegenbauer product basis of the degree-s harmonics on n variables.

    Each element is indexed by s = m0 >= m1 >= ... >= m_{n-2} >= 0 and
    mu in {1, 2} with mu <= m_{n-2} + 1; it is the product of the radial
    blocks for consecutive (m_k, m_{k+1}) pairs and the real or imaginary
    part of (x_{n-1} + i x_n)^(m_{n-2}).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if s < 1:
        raise ValueError("need s >= 1")
    if n > max_n or s > max_s:
        raise ValueError(
            f"full basis capped at n <= {max_n}, s <= {max_s}; raise the caps explicitly to override"
        )
    elements = []
    for chain in _descending_chains(s, n - 2):
        ms = (s, *chain)
        tail = ms[-1]
        for mu in range(1, min(2, tail + 1) + 1):
            poly = _real_imag_powers(tail, mu, n)
            for k in range(n - 2):
                poly = poly * building_block_g(k, ms[k], ms[k + 1], n)
            elements.append(BasisElement(index=(*ms, mu), poly=poly))
    return elements


def fully_even_subset(basis: Sequence[BasisElement]) -> list[BasisElement]:
    """Elements with every m_i even and mu = 1; a basis of the fully even part."""
    return [
        element
        for element in basis
        if element.mu == 1 and all(m % 2 == 0 for m in element.m_values)
    ]


def is_fully_even(poly: Polynomial) -> bool:
    return all(all(e % 2 == 0 for _, e in mono) for mono in poly.terms)


def embed(f: Polynomial, g: Sequence[int], n: int) -> Polynomial:
    """Rename variable i of f to g[i-1]; g must be strictly increasing."""
    if len(g) != f.nvars:
        raise ValueError("embedding map must cover every variable of f")
    if any(a >= b for a, b in zip(g, g[1:])):
        raise ValueError("embedding map must be strictly increasing")
    if g and (g[0] < 1 or g[-1] > n):
        raise ValueError(f"embedding map range must lie within 1..{n}")
    return f.rename_variables({i + 1: target for i, target in enumerate(g)}, n)


# -- the fixed criterion polynomials ---------------------------------


def _poly(nvars: int, entries: dict[tuple[tuple[int, int], ...], int]) -> Polynomial:
    return Polynomial(nvars, {mono: Fraction(c) for mono, c in entries.items()})


def criterion_f42() -> Polynomial:
    return _poly(2, {
        ((1, 4),): 1,
        ((1, 2), (2, 2)): -6,
        ((2, 4),): 1,
    })


def criterion_f62() -> Polynomial:
    return _poly(2, {
        ((1, 6),): 1,
        ((1, 4), (2, 2)): -15,
        ((1, 2), (2, 4)): 15,
        ((2, 6),): -1,
    })


def criterion_f63() -> Polynomial:
    terms: dict[tuple[tuple[int, int], ...], int] = {}
    for i in (1, 2, 3):
        terms[((i, 6),)] = 2
    for i, j in itertools.permutations((1, 2, 3), 2):
        mono = tuple(sorted(((i, 4), (j, 2))))
        terms[mono] = -15
    terms[((1, 2), (2, 2), (3, 2))] = 180
    return _poly(3, terms)


def criterion_f82() -> Polynomial:
    return _poly(2, {
        ((1, 8),): 1,
        ((1, 6), (2, 2)): -28,
        ((1, 4), (2, 4)): 70,
        ((1, 2), (2, 6)): -28,
        ((2, 8),): 1,
    })


def criterion_f831() -> Polynomial:
    return _poly(3, {
        ((1, 8),): 1,
        ((2, 8),): -1,
        ((1, 2), (2, 6)): 14,
        ((2, 6), (3, 2)): 14,
        ((1, 6), (2, 2)): -14,
        ((1, 6), (3, 2)): -14,
        ((1, 4), (2, 2), (3, 2)): 210,
        ((1, 2), (2, 4), (3, 2)): -210,
    })


def criterion_f832() -> Polynomial:
    return _poly(3, {
        ((1, 8),): 1,
        ((3, 8),): -1,
        ((1, 2), (3, 6)): 14,
        ((2, 2), (3, 6)): 14,
        ((1, 6), (3, 2)): -14,
        ((1, 6), (2, 2)): -14,
        ((1, 4), (2, 2), (3, 2)): 210,
        ((1, 2), (2, 2), (3, 4)): -210,
    })


def criterion_f84() -> Polynomial:
    terms: dict[tuple[tuple[int, int], ...], int] = {}
    for i in range(1, 5):
        terms[((i, 8),)] = 3
    for i, j in itertools.permutations(range(1, 5), 2):
        mono = tuple(sorted(((i, 6), (j, 2))))
        terms[mono] = -28
    for i in range(1, 5):
        rest = [v for v in range(1, 5) if v != i]
        for j, k in itertools.combinations(rest, 2):
            mono = tuple(sorted(((i, 4), (j, 2), (k, 2))))
            terms[mono] = 210
    terms[((1, 2), (2, 2), (3, 2), (4, 2))] = -3780
    return _poly(4, terms)


# seeds per degree: (number of variables, constructor), in display order
_CRITERION_SEEDS: dict[int, tuple[tuple[int, object], ...]] = {
    4: ((2, criterion_f42),),
    6: ((2, criterion_f62), (3, criterion_f63)),
    8: ((2, criterion_f82), (3, criterion_f831), (3, criterion_f832), (4, criterion_f84)),
}


@dataclass(frozen=True)
class CriterionBasis:
    """Coordinate-embedded copies of the fixed degree-s seed polynomials."""

    n: int
    s: int
    elements: tuple[Polynomial, ...]

    def __len__(self) -> int:
        return len(self.elements)


def criterion_basis(n: int, s: int) -> CriterionBasis:
    """Basis of the fully even harmonics of degree s in {2, 4, 6, 8}.

    Degree 2 is the set x_i^2 - x_n^2; higher degrees embed the fixed
    seed polynomials along every strictly increasing coordinate map.
    For n = 3 the four-variable seed has no embeddings and drops out,
    matching the vanishing C(n, 4) term in the dimension count.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if s == 2:
        elements = tuple(
            Polynomial(n, {((i, 2),): _ONE, ((n, 2),): -_ONE}) for i in range(1, n)
        )
        return CriterionBasis(n=n, s=2, elements=elements)
    if s not in _CRITERION_SEEDS:
        raise ValueError("criterion bases exist for s in {2, 4, 6, 8}")
    elements = []
    for j, builder in _CRITERION_SEEDS[s]:
        seed = builder()
        for g in itertools.combinations(range(1, n + 1), j):
            elements.append(embed(seed, g, n))
    return CriterionBasis(n=n, s=s, elements=tuple(elements))


# -- exact linear independence ---------------------------------------


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    matrix = [list(map(Fraction, row)) for row in rows]
    rank = 0
    ncols = len(matrix[0]) if matrix else 0
    row_idx = 0
    for col in range(ncols):
        pivot = next((r for r in range(row_idx, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[row_idx], matrix[pivot] = matrix[pivot], matrix[row_idx]
        inv = 1 / matrix[row_idx][col]
        matrix[row_idx] = [c * inv for c in matrix[row_idx]]
        for r in range(len(matrix)):
            if r != row_idx and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row_idx])]
        row_idx += 1
        rank += 1
        if row_idx == len(matrix):
            break
    return rank


def rank_of_polynomials(polys: Sequence[Polynomial]) -> int:
    """Rank of the coefficient matrix of a family of polynomials."""
    monomials = sorted({mono for p in polys for mono in p.terms})
    index = {mono: i for i, mono in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monomials)
        for mono, coeff in p.terms.items():
            row[index[mono]] = coeff
        rows.append(row)
    return matrix_rank(rows)
