"""Quadrilateral families from a full boundary word.

A cyclic list of self-intersection numbers satisfying the two toric-surface
conditions determines a smooth fan up to GL2(Z); the four marked (black)
rays are the normals of the sought quadrilateral and leave a two-parameter
family of side lengths.  Vol = m^2 cuts the family down to a quadratic whose
rational roots are tested for positivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..chains import verify_matrix_equation
from ..lattice import LatticePolygon, Vec, cross, lattice_width

from .candidates import CandidateError


def fan_from_word(word: list[int]) -> list[Vec]:
    """Rays of the smooth fan with the given boundary self-intersections.

    Built from the relation v_{i+1} = -c_i v_i - v_{i-1} starting from the
    standard basis; the word must satisfy the matrix equation so the
    recursion closes up.
    """
    if not verify_matrix_equation(word):
        raise CandidateError("word does not satisfy the toric-surface conditions")
    rays: list[Vec] = [(1, 0), (0, 1)]
    n = len(word)
    for i in range(1, n + 1):
        c = word[i % n]
        prev, cur = rays[i - 1], rays[i]
        rays.append((-c * cur[0] - prev[0], -c * cur[1] - prev[1]))
    if rays[n] != rays[0] or rays[n + 1] != rays[1]:
        raise CandidateError("fan recursion does not close up")
    return rays[:n]


@dataclass(frozen=True)
class FamilyQuadratic:
    """Vol - m^2 over a two-parameter side family, as an integer quadratic.

    Sides at positions ``free`` are the parameters (g, d); the other two are
    ``dependent[i] = (row_g * g + row_d * d)`` exact rationals.  The quadratic
    is A g^2 + B g d + C d^2 = 0.
    """

    normals: tuple[Vec, Vec, Vec, Vec]
    free: tuple[int, int]
    dependent: dict[int, tuple[Fraction, Fraction]]
    coeffs: tuple[int, int, int]

    def sides_for(self, g: Fraction, d: Fraction) -> list[Fraction]:
        out: list[Fraction] = [Fraction(0)] * 4
        out[self.free[0]] = g
        out[self.free[1]] = d
        for i, (cg, cd) in self.dependent.items():
            out[i] = cg * g + cd * d
        return out


def _rot(v: Vec) -> Vec:
    # Inner normal -> ccw edge direction.
    return (v[1], -v[0])


def family_quadratic(word: list[int], black: list[int]) -> FamilyQuadratic:
    """Vol = m^2 quadratic for the quadrilateral with the given black rays."""
    rays = fan_from_word(word)
    if len(black) != 4:
        raise CandidateError("need exactly 4 black positions")
    normals = tuple(rays[i] for i in black)
    edges = [_rot(v) for v in normals]
    # Closure sum(l_i * E_i) = 0; solve two of the l's in terms of the others.
    free = None
    for i in range(4):
        for j in range(i + 1, 4):
            rest = [k for k in range(4) if k not in (i, j)]
            det = cross(edges[rest[0]], edges[rest[1]])
            if det != 0:
                free = (i, j)
                break
        if free:
            break
    if free is None:
        raise CandidateError("degenerate edge directions")
    i, j = free
    rest = [k for k in range(4) if k not in (i, j)]
    e_a, e_b = edges[rest[0]], edges[rest[1]]
    det = cross(e_a, e_b)
    dependent: dict[int, tuple[Fraction, Fraction]] = {}
    # l_a e_a + l_b e_b = -(g e_i + d e_j); Cramer per parameter.
    for param, e_p in ((0, edges[i]), (1, edges[j])):
        la = Fraction(-cross(e_p, e_b), det)
        lb = Fraction(-cross(e_a, e_p), det)
        for idx, val in ((rest[0], la), (rest[1], lb)):
            cur = dependent.get(idx, (Fraction(0), Fraction(0)))
            dependent[idx] = (
                cur[0] + (val if param == 0 else 0),
                cur[1] + (val if param == 1 else 0),
            )
    # Vol and m as quadratics in (g, d): evaluate at three points and fit,
    # all exactly (vol - m^2 is homogeneous of degree 2).
    def vol_m2(g: Fraction, d: Fraction) -> Fraction:
        sides = _fam_sides(free, dependent, g, d)
        vecs = [(sides[k] * edges[k][0], sides[k] * edges[k][1]) for k in range(4)]
        pts = [(Fraction(0), Fraction(0))]
        for vx, vy in vecs[:-1]:
            pts.append((pts[-1][0] + vx, pts[-1][1] + vy))
        vol = sum(
            pts[k][0] * pts[(k + 1) % 4][1] - pts[(k + 1) % 4][0] * pts[k][1]
            for k in range(4)
        )
        m = sum(sides)
        return vol - m * m

    q11 = vol_m2(Fraction(1), Fraction(0))
    q22 = vol_m2(Fraction(0), Fraction(1))
    q12 = vol_m2(Fraction(1), Fraction(1)) - q11 - q22
    den = math.lcm(q11.denominator, q12.denominator, q22.denominator)
    coeffs = (int(q11 * den), int(q12 * den), int(q22 * den))
    g = math.gcd(math.gcd(abs(coeffs[0]), abs(coeffs[1])), abs(coeffs[2]))
    if g:
        coeffs = tuple(c // g for c in coeffs)
    return FamilyQuadratic(normals, free, dependent, coeffs)


def _fam_sides(free, dependent, g, d):
    out = [Fraction(0)] * 4
    out[free[0]] = g
    out[free[1]] = d
    for k, (cg, cd) in dependent.items():
        out[k] = cg * g + cd * d
    return out


@dataclass(frozen=True)
class FamilyVerdict:
    """Outcome of the Vol = m^2 step for a boundary-word family."""

    coeffs: tuple[int, int, int]
    discriminant: int
    status: str  # "no-rational-root" | "rejected" | "admissible"
    roots: tuple[Fraction, ...]
    detail: str


def solve_family(word: list[int], black: list[int]) -> FamilyVerdict:
    """Decide whether the family contains a positive-side lattice polygon
    with Vol = m^2; any all-positive root is further tested for width."""
    fam = family_quadratic(word, black)
    a, b, c = fam.coeffs
    if a == 0 and c == 0 and b == 0:
        raise CandidateError("volume condition degenerates on this family")
    roots: list[Fraction] = []
    if a == 0:
        # b g d + c d^2 = 0: ratio g/d = -c/b (d = 0 gives a degenerate side).
        if b != 0:
            roots.append(Fraction(-c, b))
        disc = b * b
    else:
        disc = b * b - 4 * a * c
        r = math.isqrt(disc) if disc >= 0 else None
        if disc >= 0 and r * r == disc:
            roots.extend([Fraction(-b - r, 2 * a), Fraction(-b + r, 2 * a)])
        else:
            return FamilyVerdict(fam.coeffs, disc, "no-rational-root", (), "discriminant is not a perfect square")
    details = []
    for ratio in roots:
        # All-positive sides force d > 0, so d = 1 loses nothing.
        sides = fam.sides_for(Fraction(ratio), Fraction(1))
        if any(s <= 0 for s in sides):
            details.append(f"g/d={ratio}: nonpositive side")
            continue
        den = math.lcm(*[s.denominator for s in sides])
        int_sides = [int(s * den) for s in sides]
        g0 = 0
        for v in int_sides:
            g0 = math.gcd(g0, v)
        int_sides = [v // g0 for v in int_sides]
        edges = [_rot(v) for v in fam.normals]
        pts = [(0, 0)]
        for k in range(3):
            pts.append((pts[-1][0] + int_sides[k] * edges[k][0], pts[-1][1] + int_sides[k] * edges[k][1]))
        polygon = LatticePolygon(pts)
        width = lattice_width(polygon)
        if width.value < polygon.m:
            details.append(f"g/d={ratio}: width {width.value} < m {polygon.m}")
            continue
        return FamilyVerdict(
            fam.coeffs, disc, "admissible", tuple(roots),
            f"g/d={ratio} gives all-positive sides {int_sides} passing the width test",
        )
    return FamilyVerdict(fam.coeffs, disc, "rejected", tuple(roots), "; ".join(details))
