"""Linear systems of curves through a fat point, over the rationals.

The dimension of the space of Laurent polynomials supported on a polygon's
lattice points with multiplicity >= m at (1, 1) is computed exactly.  Small
systems go through fraction-free (Bareiss) elimination; large ones use a
certified hybrid: elimination mod p bounds the kernel dimension from above,
and explicitly verified integer kernel vectors bound it from below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .lattice import LatticePolygon, Vec, cross

_PRIMES = (2147483629, 2147483587, 2147483563)
_EXACT_LIMIT = 120  # max rows for the pure Bareiss path


class LinearSystemError(ValueError):
    pass


@dataclass(frozen=True)
class LaurentPoly:
    """Finite support in Z^2 with nonzero rational coefficients."""

    coeffs: tuple[tuple[Vec, Fraction], ...]

    def __init__(self, coeffs: Mapping[Vec, Fraction | int] | Iterable[tuple[Vec, Fraction | int]]):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        cleaned = {}
        for (x, y), c in items:
            c = Fraction(c)
            if c:
                cleaned[(int(x), int(y))] = c
        object.__setattr__(
            self, "coeffs", tuple(sorted(cleaned.items()))
        )

    def support(self) -> list[Vec]:
        return [u for u, _ in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[Vec, Fraction] = {}
        for (x1, y1), c1 in self.coeffs:
            for (x2, y2), c2 in other.coeffs:
                u = (x1 + x2, y1 + y2)
                acc[u] = acc.get(u, Fraction(0)) + c1 * c2
        return LaurentPoly(acc)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self.coeffs)
        for u, c in other.coeffs:
            acc[u] = acc.get(u, Fraction(0)) + c
        return LaurentPoly(acc)

    def scaled(self, k: Fraction | int) -> "LaurentPoly":
        return LaurentPoly({u: c * k for u, c in self.coeffs})

    def primitive(self) -> "LaurentPoly":
        """Integer coefficients with gcd 1; sign fixed by the first monomial."""
        if not self.coeffs:
            return self
        den = math.lcm(*[c.denominator for _, c in self.coeffs])
        nums = [c * den for _, c in self.coeffs]
        g = 0
        for c in nums:
            g = math.gcd(g, abs(int(c)))
        sign = 1 if nums[0] > 0 else -1
        return LaurentPoly({u: Fraction(int(c) * sign, g) for (u, _), c in zip(self.coeffs, nums)})


def lattice_points(p: LatticePolygon) -> list[Vec]:
    """All lattice points of the polygon (boundary and interior), sorted."""
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    n = len(p.vertices)
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            inside = True
            for i in range(n):
                a, b = p.vertices[i], p.vertices[(i + 1) % n]
                if cross((b[0] - a[0], b[1] - a[1]), (x - a[0], y - a[1])) < 0:
                    inside = False
                    break
            if inside:
                pts.append((x, y))
    return pts


def _binomial(n: int, k: int) -> int:
    # Generalized binomial for possibly negative n (Laurent exponents).
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def _condition_matrix(points: Sequence[Vec], m: int) -> list[list[int]]:
    # Row (i, j) with i + j <= m - 1: the (i, j) Taylor coefficient at (1, 1)
    # of sum a_u x^u1 y^u2 is sum a_u C(u1, i) C(u2, j) up to the factor i!j!.
    rows = []
    for i in range(m):
        for j in range(m - i):
            rows.append([_binomial(u[0], i) * _binomial(u[1], j) for u in points])
    return rows


def multiplicity_at(f: LaurentPoly, e: tuple[Fraction | int, Fraction | int], m: int) -> bool:
    """True iff all Taylor coefficients of total order < m vanish at e.

    e must avoid the coordinate axes (Laurent polynomials are only defined on
    the torus).
    """
    e1, e2 = Fraction(e[0]), Fraction(e[1])
    if e1 == 0 or e2 == 0:
        raise LinearSystemError("the base point must avoid the coordinate axes")
    for i in range(m):
        for j in range(m - i):
            total = Fraction(0)
            for (x, y), c in f.coeffs:
                total += c * _binomial(x, i) * _binomial(y, j) * e1 ** (x - i) * e2 ** (y - j)
            if total != 0:
                return False
    return True


# -- exact elimination ---------------------------------------------------------


def _bareiss_rank(matrix: list[list[int]], col_order: Sequence[int]) -> tuple[int, list[list[int]], list[int]]:
    # Fraction-free elimination; returns (rank, echelon, pivot column list).
    m = [row[:] for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    order = list(col_order)
    prev = 1
    rank = 0
    pivots: list[int] = []
    for c in order:
        pivot_row = None
        best = None
        for r in range(rank, rows):
            if m[r][c]:
                # Smallest pivot keeps intermediate entries modest.
                if best is None or abs(m[r][c]) < best:
                    best, pivot_row = abs(m[r][c]), r
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, rows):
            factor = m[r][c]
            row_r, row_p = m[r], m[rank]
            for k in range(cols):
                row_r[k] = (row_r[k] * pv - factor * row_p[k]) // prev
        prev = pv
        rank += 1
        pivots.append(c)
        if rank == rows:
            break
    return rank, m, pivots


def _kernel_from_echelon(
    echelon: list[list[int]], pivots: list[int], cols: int
) -> list[list[Fraction]]:
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        sol = [Fraction(0)] * cols
        sol[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((echelon[r][c] * sol[c] for c in range(cols) if c != pc), Fraction(0))
            sol[pc] = Fraction(-s, echelon[r][pc])
        basis.append(sol)
    return basis


# -- modular elimination --------------------------------------------------------


def _mod_kernel(matrix: list[list[int]], p: int) -> tuple[int, list[list[int]]]:
    """Rank mod p and a kernel basis mod p (numpy, vectorized row ops)."""
    a = np.array([[x % p for x in row] for row in matrix], dtype=np.int64)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        sol = [0] * cols
        sol[fc] = 1
        for i, pc in enumerate(pivots):
            sol[pc] = (-int(a[i, fc])) % p
        basis.append(sol)
    return len(pivots), basis


def _rational_reconstruct(r: int, m: int) -> Fraction | None:
    # Wang's algorithm: find n/d = r mod m with |n|, d <= sqrt(m/2).
    bound = math.isqrt(m // 2)
    r0, r1 = m, r % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0:
        return None
    if math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _verify_kernel_vector(matrix: list[list[int]], vec: Sequence[int]) -> bool:
    return all(sum(a * v for a, v in zip(row, vec)) == 0 for row in matrix)


def _crt_kernel_vector(matrix: list[list[int]], max_primes: int = 60) -> list[int] | None:
    """Exact integer kernel vector via CRT over word-size primes.

    Only valid when the kernel has dimension 1 modulo each prime used; the
    result is verified exactly over the integers before being returned.
    """
    residues: list[list[int]] = []
    moduli: list[int] = []
    prime = 2147483647
    cols = len(matrix[0])
    while len(moduli) < max_primes:
        prime = _prev_prime(prime - 1)
        rank, basis = _mod_kernel(matrix, prime)
        if len(basis) != 1:
            continue
        residues.append(basis[0])
        moduli.append(prime)
        if len(moduli) < 2:
            continue
        # Combine and attempt rational reconstruction.
        m_all = math.prod(moduli)
        combined = []
        ok = True
        for i in range(cols):
            x = 0
            for res, p in zip(residues, moduli):
                mp = m_all // p
                x += res[i] * mp * pow(mp, -1, p)
            combined.append(x % m_all)
        fracs = []
        for x in combined:
            f = _rational_reconstruct(x, m_all)
            if f is None:
                ok = False
                break
            fracs.append(f)
        if not ok:
            continue
        den = math.lcm(*[f.denominator for f in fracs]) if fracs else 1
        ints = [int(f * den) for f in fracs]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        if g:
            ints = [v // g for v in ints]
        if _verify_kernel_vector(matrix, ints):
            return ints
    return None


def _prev_prime(n: int) -> int:
    while True:
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            return n
        n -= 1


# -- public entry points ----------------------------------------------------------


@dataclass(frozen=True)
class LinearSystemResult:
    """Kernel dimension of the multiplicity conditions, with basis if small.

    ``method`` records how the dimension was certified: "bareiss" (exact
    elimination, double-checked with a second column order) or
    "modular+certificate" (dimension <= k mod p and k exact kernel vectors).
    """

    dimension: int
    basis: tuple[LaurentPoly, ...]
    points: tuple[Vec, ...]
    conditions: int
    method: str


def linear_system_dim(
    p: LatticePolygon, m: int, e: tuple[int, int] = (1, 1)
) -> LinearSystemResult:
    """Dimension (and basis, when <= 2) of polynomials supported on the
    polygon with multiplicity >= m at the torus point e = (1, 1).

    The base point is fixed at (1, 1); every torus point is equivalent to it
    under the torus action, so nothing is lost.
    """
    if m < 1:
        raise LinearSystemError("multiplicity must be >= 1")
    if e != (1, 1):
        raise LinearSystemError("the base point is fixed at (1, 1)")
    points = lattice_points(p)
    matrix = _condition_matrix(points, m)
    rows, cols = len(matrix), len(points)

    if rows <= _EXACT_LIMIT:
        rank, echelon, pivots = _bareiss_rank(matrix, range(cols))
        rank2, _, _ = _bareiss_rank(matrix, range(cols - 1, -1, -1))
        if rank != rank2:
            raise LinearSystemError("elimination self-check failed")
        kernel = _kernel_from_echelon(echelon, pivots, cols)
        basis = tuple(
            LaurentPoly(dict(zip(points, vec))).primitive() for vec in kernel
        )
        for b in basis:
            assert multiplicity_at(b, (1, 1), m)
        return LinearSystemResult(cols - rank, basis, tuple(points), rows, "bareiss")

    # Large system: bound the dimension above by a modular rank and below by
    # exactly verified kernel vectors.
    dims = []
    for prime in _PRIMES:
        rank_p, _ = _mod_kernel(matrix, prime)
        dims.append(cols - rank_p)
    dim_upper = min(dims)
    if dim_upper == 0:
        return LinearSystemResult(0, (), tuple(points), rows, "modular+certificate")
    if dim_upper == 1:
        vec = _crt_kernel_vector(matrix)
        if vec is None:
            raise LinearSystemError("could not certify a kernel vector")
        basis = (LaurentPoly(dict(zip(points, map(Fraction, vec)))).primitive(),)
        return LinearSystemResult(1, basis, tuple(points), rows, "modular+certificate")
    raise LinearSystemError(
        f"large system with modular kernel dimension {dim_upper}; "
        "only dimensions 0 and 1 are certified on this path"
    )


def kernel_membership(p: LatticePolygon, m: int, f: LaurentPoly) -> bool:
    """Exact check that f is supported in the polygon and kills all
    multiplicity conditions (an integer certificate usable on any size)."""
    points = lattice_points(p)
    index = {u: i for i, u in enumerate(points)}
    if any(u not in index for u in f.support()):
        return False
    den = math.lcm(*[c.denominator for _, c in f.coeffs]) if f.coeffs else 1
    vec = [0] * len(points)
    for u, c in f.coeffs:
        vec[index[u]] = int(c * den)
    return _verify_kernel_vector(_condition_matrix(points, m), vec)


def newton_polygon(f: LaurentPoly) -> LatticePolygon | tuple[Vec, ...]:
    """Convex hull of the support; degenerate hulls (point or segment) are
    returned as the tuple of their extreme points."""
    if f.is_zero():
        raise LinearSystemError("the zero polynomial has no Newton polygon")
    pts = sorted(set(f.support()))
    if len(pts) == 1:
        return (pts[0],)
    hull = _convex_hull(pts)
    if len(hull) < 3:
        return tuple(hull)
    return LatticePolygon(hull)


def _convex_hull(pts: list[Vec]) -> list[Vec]:
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def half(points: list[Vec]) -> list[Vec]:
        out: list[Vec] = []
        for q in points:
            while len(out) >= 2 and cross(
                (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                (q[0] - out[-1][0], q[1] - out[-1][1]),
            ) <= 0:
                out.pop()
            out.append(q)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class IrreducibilityResult:
    status: str  # "irreducible" | "reducible" | "unknown"
    reason: str
    factors: tuple[LaurentPoly, LaurentPoly] | None = None


class CertificateRejected(ValueError):
    pass


def irreducibility_check(
    f: LaurentPoly,
    certificate: tuple[LaurentPoly, LaurentPoly] | None = None,
) -> IrreducibilityResult:
    """Decide reducibility when a sufficient criterion or certificate applies.

    * If the Newton polygon is Minkowski-indecomposable, f is irreducible
      (units in the Laurent ring are monomials, and the Newton polygon of a
      product is the Minkowski sum of the factors).
    * If a factorization certificate is supplied, it is verified by exact
      multiplication; both factors must be non-monomial.
    * Otherwise the result is honestly "unknown".
    """
    from .lattice import minkowski_indecomposable

    if f.is_zero() or len(f.coeffs) == 1:
        raise LinearSystemError("need a nonzero, non-monomial polynomial")
    if certificate is not None:
        g, h = certificate
        product = g * h
        if not _proportional(product, f):
            raise CertificateRejected("certificate product does not equal f")
        if len(g.coeffs) < 2 or len(h.coeffs) < 2:
            raise CertificateRejected("certificate factor is a unit (monomial)")
        return IrreducibilityResult("reducible", "verified factorization", (g, h))
    np_f = newton_polygon(f)
    if isinstance(np_f, LatticePolygon) and minkowski_indecomposable(np_f):
        return IrreducibilityResult(
            "irreducible", "Newton polygon is Minkowski-indecomposable"
        )
    return IrreducibilityResult("unknown", "no criterion applies")


def _proportional(a: LaurentPoly, b: LaurentPoly) -> bool:
    if a.support() != b.support():
        return False
    if a.is_zero():
        return True
    ratio = None
    for (_, ca), (_, cb) in zip(a.coeffs, b.coeffs):
        r = ca / cb
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True
