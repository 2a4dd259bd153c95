"""Curve chains on smooth surfaces and their determinant-1 matrices.

A chain of curves with self-intersections ``c_1, ..., c_n`` is encoded by the
product of the per-curve matrices ``[[0, -1], [1, -c_i]]``.  Blowing up an
intersection point of two consecutive curves leaves this product unchanged,
which is what makes the matrix a useful invariant of contraction towers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple


class Mat2(NamedTuple):
    """Integer 2x2 matrix ``[[a, b], [c, d]]``."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def inv(self) -> "Mat2":
        """Inverse, only for determinant +-1."""
        det = self.det()
        if det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError(f"matrix {self} is not invertible over the integers")

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inv() ** (-n)
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))


IDENTITY = Mat2(1, 0, 0, 1)
#: Column-swap matrix; conjugation by it realizes chain reversal.
SWAP = Mat2(0, 1, 1, 0)
#: Matrix of a single (-1) curve.
MINUS_ONE = Mat2(0, -1, 1, 1)

CurveChain = tuple[int, ...]


class ChainError(ValueError):
    """Raised when a matrix or index does not describe a valid chain."""


def matrix_of_curve(c: int) -> Mat2:
    """Matrix ``[[0, -1], [1, -c]]`` of a single curve of self-intersection c."""
    return Mat2(0, -1, 1, -c)


def matrix_of_chain(chain: Iterable[int]) -> Mat2:
    """Ordered product of per-curve matrices; the empty chain gives identity."""
    m = IDENTITY
    for c in chain:
        m = m @ matrix_of_curve(c)
    return m


def minus_two_power(k: int) -> Mat2:
    """Closed form ``[[1-k, -k], [k, k+1]]`` for a run of k (-2) curves."""
    if k < 0:
        raise ChainError(f"negative run length {k}")
    return Mat2(1 - k, -k, k, k + 1)


def reverse_matrix(m: Mat2) -> Mat2:
    """Matrix of the reversed chain: ``[[a, -c], [-b, d]]``."""
    return Mat2(m.a, -m.c, -m.b, m.d)


def hj_fraction(chain: Iterable[int]) -> Fraction:
    """Continued fraction ``[-c_1, ..., -c_n] = c - 1/(c' - 1/(...))``.

    Defined for chains whose entries are all <= -2; equals ``d / (-b)`` of the
    chain matrix.
    """
    entries = tuple(chain)
    if not entries:
        raise ChainError("empty chain has no Hirzebruch-Jung fraction")
    if any(c > -2 for c in entries):
        raise ChainError(f"chain {entries} has an entry > -2")
    value = Fraction(-entries[-1])
    for c in reversed(entries[:-1]):
        value = -c - 1 / value
    return value


def chain_from_matrix(m: Mat2) -> CurveChain:
    """Recover the unique chain with entries <= -2 whose matrix is ``m``.

    The identity corresponds to the empty chain.  Raises ChainError when no
    such chain exists (the sign pattern a, b <= 0 <= c < d with |a| < |b| is
    necessary).
    """
    if m == IDENTITY:
        return ()
    if m.det() != 1:
        raise ChainError(f"{m} has determinant {m.det()}, expected 1")
    if not (m.b <= m.a <= 0 <= m.c < m.d and -m.b > -m.a):
        raise ChainError(f"{m} does not match the sign pattern of a <=-2 chain")
    # Hirzebruch-Jung digits of d / (-b): u/v -> ceil(u/v), then invert the tail.
    u, v = m.d, -m.b
    digits: list[int] = []
    while v:
        q = -((-u) // v)  # ceil(u / v)
        digits.append(q)
        u, v = v, q * v - u
    chain = tuple(-q for q in digits)
    if any(c > -2 for c in chain) or matrix_of_chain(chain) != m:
        raise ChainError(f"{m} is not the matrix of a chain with entries <= -2")
    return chain


def blowup_at_intersection(chain: Iterable[int], i: int) -> CurveChain:
    """Blow up the intersection of curves i-1 and i (gap index 1..n-1).

    Both neighbours drop by one and a fresh (-1) curve is inserted between
    them; the chain matrix is unchanged.
    """
    entries = list(chain)
    if not 1 <= i <= len(entries) - 1:
        raise ChainError(f"gap index {i} out of range for chain of length {len(entries)}")
    return tuple(entries[: i - 1] + [entries[i - 1] - 1, -1, entries[i] - 1] + entries[i + 1 :])


def contract_minus_one(chain: Iterable[int], i: int) -> CurveChain:
    """Contract the (-1) curve at position i; neighbours gain one each.

    Inverse of :func:`blowup_at_intersection` for interior i; contracting an
    end curve bumps only the single neighbour.
    """
    entries = list(chain)
    if not 0 <= i < len(entries):
        raise ChainError(f"index {i} out of range")
    if entries[i] != -1:
        raise ChainError(f"entry {entries[i]} at position {i} is not a (-1) curve")
    for j in (i - 1, i + 1):
        if 0 <= j < len(entries):
            entries[j] += 1
    del entries[i]
    return tuple(entries)


def verify_matrix_equation(chain: Iterable[int]) -> bool:
    """Check both toric-boundary conditions: product = identity and sum = 12 - 3n."""
    entries = tuple(chain)
    return matrix_of_chain(entries) == IDENTITY and sum(entries) == 12 - 3 * len(entries)
