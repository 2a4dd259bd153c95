"""Exact operations on convex lattice polygons.

All arithmetic is integer (or `Fraction` where ratios appear); there is no
floating point anywhere in this module.  Polygons are canonicalized on
construction to counterclockwise order starting from the lexicographically
smallest vertex, and degenerate input (fewer than 3 vertices, collinear
triples, self-intersection) is rejected rather than repaired.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[int, int]


class InvalidPolygonError(ValueError):
    """Input vertex list does not describe a strictly convex lattice polygon."""


def content(v: Vec) -> int:
    """gcd of the absolute coordinates (0 only for the zero vector)."""
    return gcd(abs(v[0]), abs(v[1]))


def primitive_part(v: Vec) -> Vec:
    """v divided by its content; rejects the zero vector."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return (v[0] // g, v[1] // g)


def cross(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Vec, v: Vec) -> int:
    return u[0] * v[0] + u[1] * v[1]


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon with cached perimeter and volume.

    ``m`` is the number of lattice points on the boundary (the sum over edges
    of the gcd of coordinate differences) and ``vol`` is the normalized
    volume, i.e. twice the Euclidean area.
    """

    vertices: tuple[Vec, ...]
    m: int = field(init=False, compare=False)
    vol: int = field(init=False, compare=False)

    def __init__(self, vertices: Iterable[Sequence[int]]):
        pts = [
            (int(x), int(y))
            for x, y in (tuple(v) for v in vertices)
        ]
        if len(pts) < 3:
            raise InvalidPolygonError("need at least 3 vertices")
        if len(set(pts)) != len(pts):
            raise InvalidPolygonError("repeated vertex")
        n = len(pts)
        turns = [
            cross(
                (pts[(i + 1) % n][0] - pts[i][0], pts[(i + 1) % n][1] - pts[i][1]),
                (pts[(i + 2) % n][0] - pts[(i + 1) % n][0], pts[(i + 2) % n][1] - pts[(i + 1) % n][1]),
            )
            for i in range(n)
        ]
        if any(t == 0 for t in turns):
            raise InvalidPolygonError("three consecutive vertices are collinear")
        if all(t < 0 for t in turns):
            pts.reverse()
        elif not all(t > 0 for t in turns):
            raise InvalidPolygonError("vertices are not in convex position")
        start = min(range(n), key=lambda i: pts[i])
        pts = pts[start:] + pts[:start]
        object.__setattr__(self, "vertices", tuple(pts))
        object.__setattr__(self, "m", sum(content(e) for e in self.edges()))
        area2 = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
        object.__setattr__(self, "vol", area2)

    def edges(self) -> list[Vec]:
        """Counterclockwise edge vectors (they sum to zero)."""
        n = len(self.vertices)
        return [
            (
                self.vertices[(i + 1) % n][0] - self.vertices[i][0],
                self.vertices[(i + 1) % n][1] - self.vertices[i][1],
            )
            for i in range(n)
        ]

    def scale(self, k: int) -> "LatticePolygon":
        if k < 1:
            raise ValueError("scale factor must be a positive integer")
        return LatticePolygon([(k * x, k * y) for x, y in self.vertices])

    def to_json(self) -> str:
        return json.dumps({"vertices": [list(v) for v in self.vertices]})

    @staticmethod
    def from_json(text: str) -> "LatticePolygon":
        data = json.loads(text)
        return LatticePolygon(data["vertices"])


def normalized_volume(p: LatticePolygon) -> int:
    """Shoelace sum = 2 * area; always a nonnegative integer."""
    return p.vol


def lattice_perimeter(p: LatticePolygon) -> int:
    """Number of boundary lattice points."""
    return p.m


def width_along(p: LatticePolygon, v: Vec) -> int:
    """max <u, v> - min <u, v> over vertices u; v must be nonzero."""
    if v == (0, 0):
        raise ValueError("width direction must be nonzero")
    values = [dot(u, v) for u in p.vertices]
    return max(values) - min(values)


@dataclass(frozen=True)
class WidthResult:
    """Lattice width with a witness and the enumeration certificate.

    ``bound`` is the width upper bound used to cut off the search and
    ``box`` the coordinate box such that every primitive direction outside
    it provably has width >= ``bound``.
    """

    value: int
    witness: Vec
    bound: int
    box: tuple[int, int]

    def __iter__(self):
        return iter((self.value, self.witness))


def _direction_box(p: LatticePolygon, upper: int) -> tuple[int, int]:
    # Any direction v with width < upper satisfies |<d, v>| <= upper - 1 for
    # every vertex difference d.  Two independent differences then confine v
    # to a parallelogram; we bound its coordinate box.  Differences are
    # chosen to maximize |det| so the box stays small.
    verts = p.vertices
    diffs = [
        (a[0] - b[0], a[1] - b[1])
        for i, a in enumerate(verts)
        for b in verts[i + 1 :]
    ]
    d1 = max(diffs, key=lambda d: d[0] * d[0] + d[1] * d[1])
    d2 = max(diffs, key=lambda d: abs(cross(d1, d)))
    det = abs(cross(d1, d2))
    if det == 0:  # cannot happen for a 2-dimensional polygon
        raise InvalidPolygonError("degenerate vertex set")
    bp = ((upper - 1) * (abs(d1[1]) + abs(d2[1]))) // det
    bq = ((upper - 1) * (abs(d1[0]) + abs(d2[0]))) // det
    return bp, bq


def lattice_width(p: LatticePolygon) -> WidthResult:
    """Minimum of width_along over all primitive directions, with witness.

    The search is exact: probe directions give an upper bound U, and every
    primitive direction outside the certified box has width >= U, so the
    minimum over the box (plus probes) is the true lattice width.
    """
    probes: list[Vec] = [(1, 0), (0, 1), (1, 1), (1, -1)]
    probes += [primitive_part(e) for e in p.edges()]
    best_v = min(probes, key=lambda v: width_along(p, v))
    upper = width_along(p, best_v)
    bp, bq = _direction_box(p, upper)
    value, witness = upper, best_v
    for q in range(0, bq + 1):
        for pp in range(-bp, bp + 1):
            if q == 0 and pp <= 0:
                continue
            if gcd(abs(pp), q) != 1:
                continue
            w = width_along(p, (pp, q))
            if w < value or (w == value and (pp, q) < witness):
                value, witness = w, (pp, q)
    return WidthResult(value, witness, upper, (bp, bq))


def edge_data(p: LatticePolygon) -> list[tuple[Vec, int]]:
    """Counterclockwise edges factored as (primitive direction, lattice length)."""
    return [(primitive_part(e), content(e)) for e in p.edges()]


def apply_unimodular(p: LatticePolygon, m: Sequence[Sequence[int]]) -> LatticePolygon:
    """Image of p under an integer matrix with determinant +-1.

    The result is re-normalized to counterclockwise order, so perimeter,
    volume and width are all preserved.
    """
    (a, b), (c, d) = m
    if abs(a * d - b * c) != 1:
        raise ValueError("matrix must have determinant +-1")
    return LatticePolygon([(a * x + b * y, c * x + d * y) for x, y in p.vertices])


def _closing_splits(lengths: list[int], dirs: list[Vec]) -> Iterable[tuple[int, ...]]:
    # Depth-first enumeration of edge-multiplicity splits that close up.
    n = len(lengths)
    # Suffix bounds for pruning: max |sum| achievable from the remaining edges.
    suffix = [(0, 0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = (
            suffix[i + 1][0] + lengths[i] * abs(dirs[i][0]),
            suffix[i + 1][1] + lengths[i] * abs(dirs[i][1]),
        )

    def rec(i: int, sx: int, sy: int, chosen: tuple[int, ...]):
        if i == n:
            if sx == 0 and sy == 0:
                yield chosen
            return
        if abs(sx) > suffix[i][0] or abs(sy) > suffix[i][1]:
            return
        for k in range(lengths[i] + 1):
            yield from rec(i + 1, sx + k * dirs[i][0], sy + k * dirs[i][1], chosen + (k,))

    yield from rec(0, 0, 0, ())


def minkowski_indecomposable(p: LatticePolygon) -> bool:
    """True iff p is not a Minkowski sum of two polygons with >= 2 points each.

    A summand is determined by how many lattice steps of each edge it takes;
    a split is valid when the chosen steps close up to a cycle.  Only the
    trivial splits (all or nothing) exist iff p is indecomposable.
    """
    data = edge_data(p)
    dirs = [d for d, _ in data]
    lengths = [l for _, l in data]
    total = tuple(lengths)
    for split in _closing_splits(lengths, dirs):
        if any(split) and split != total:
            return False
    return True


@dataclass(frozen=True)
class EllipticCandidateReport:
    """The two scale-invariant numeric gates for ellipticity."""

    vol_eq_m2: bool
    width_ge_m: bool
    m: int
    vol: int
    width: int


def is_elliptic_candidate(p: LatticePolygon) -> EllipticCandidateReport:
    """Evaluate Vol = m^2 and Width >= m exactly (both scale-invariant)."""
    w = lattice_width(p)
    return EllipticCandidateReport(
        vol_eq_m2=p.vol == p.m * p.m,
        width_ge_m=w.value >= p.m,
        m=p.m,
        vol=p.vol,
        width=w.value,
    )
