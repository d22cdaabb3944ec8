"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always reduced,
positive denominator); vectors are plain tuples of Fractions.  There is no
floating point and no tolerance anywhere in this module: orthogonality, rank
and linear independence are decided exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimMismatchError, TooLargeError

Rational = Fraction
RatVector = tuple[Fraction, ...]

#: subset-enumeration guard for general-position checks
GENERAL_POSITION_SUBSET_LIMIT = 10**6


def vector(entries: Iterable) -> RatVector:
    """Coerce an iterable of ints / Fractions / "p/q" strings to a RatVector."""
    return tuple(
        parse_rational(x) if isinstance(x, str) else Fraction(x) for x in entries
    )


def inner(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimMismatchError(f"inner product of dim {len(u)} with dim {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def vec_sub(u: Sequence, v: Sequence) -> RatVector:
    if len(u) != len(v):
        raise DimMismatchError(f"difference of dim {len(u)} and dim {len(v)}")
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> RatVector:
    c = Fraction(c)
    return tuple(c * Fraction(x) for x in v)


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise DimMismatchError("rows of unequal length")
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][col]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                factor = m[i][col] / pivot
                for c in range(col, ncols):
                    m[i][c] -= factor * m[r][c]
        r += 1
        if r == len(m):
            break
    return r


def project_onto_span(basis: Sequence[Sequence], x: Sequence) -> RatVector:
    """Orthogonal projection of x onto span(basis).

    Gram-Schmidt in input order; intermediate vectors that come out exactly
    zero are excluded from the sums.  An empty basis projects to zero.
    """
    x = vector(x)
    dim = len(x)
    ortho: list[RatVector] = []
    for b in basis:
        b = vector(b)
        if len(b) != dim:
            raise DimMismatchError(f"basis vector dim {len(b)}, expected {dim}")
        g = b
        for gm in ortho:
            g = vec_sub(g, vec_scale(inner(gm, b) / inner(gm, gm), gm))
        if not is_zero_vector(g):
            ortho.append(g)
    p = tuple(Fraction(0) for _ in range(dim))
    for gm in ortho:
        p = tuple(
            a + b for a, b in zip(p, vec_scale(inner(gm, x) / inner(gm, gm), gm))
        )
    return p


def is_general_position(vectors: Sequence[Sequence], d: int) -> bool:
    """True iff every subset of size min(d, len(vectors)) is independent.

    Checked exhaustively with exact ranks; guarded to
    C(len(vectors), d) <= 10^6 subsets.
    """
    vecs = [vector(v) for v in vectors]
    for v in vecs:
        if len(v) != d:
            raise DimMismatchError(f"vector dim {len(v)}, expected {d}")
    m = min(d, len(vecs))
    if m == 0:
        return True
    if math.comb(len(vecs), m) > GENERAL_POSITION_SUBSET_LIMIT:
        raise TooLargeError(
            f"C({len(vecs)}, {m}) subsets exceed the "
            f"{GENERAL_POSITION_SUBSET_LIMIT} guard"
        )
    return all(rank(subset) == m for subset in combinations(vecs, m))


def scale_to_integers(v: Sequence) -> tuple[int, ...]:
    """Smallest parallel integer vector pointing the same way.

    Multiplies by the lcm of denominators, then divides out the gcd of the
    entries; the zero vector maps to zero.
    """
    v = vector(v)
    if not v:
        return ()
    m = math.lcm(*(q.denominator for q in v))
    ints = [int(q * m) for q in v]
    g = math.gcd(*ints)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def format_rational(q) -> str:
    """Render p/q, or bare p for integers (JSON certificate convention)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
