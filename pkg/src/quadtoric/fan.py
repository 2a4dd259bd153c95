"""Complete fans in the plane, ray signs, and minimal resolutions.

Angle comparisons use exact cross/dot products.  Self-intersection numbers
are only ever attached to smooth fans (after resolution), via the relation
``v_{i-1} + v_{i+1} = -(D_i^2) v_i``; on singular fans only the sign of a ray
is exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chains import Mat2, hj_fraction
from .lattice import LatticePolygon, Vec, cross, dot, primitive_part


class FanError(ValueError):
    pass


class NotApplicableError(ValueError):
    """The operation's hypotheses are not satisfied by this fan."""


def _angle_key(v: Vec) -> tuple[int, Fraction | int]:
    # Total order on primitive rays by angle from (1, 0), counterclockwise.
    x, y = v
    if y == 0:
        return (0, 0) if x > 0 else (2, 0)
    half = 1 if y > 0 else 3
    return (half, Fraction(-x, y) if y else 0)


@dataclass(frozen=True)
class Fan:
    """Ordered primitive rays of a complete fan, counterclockwise.

    Canonicalized to start at the ray of smallest angle from (1, 0).
    Consecutive rays must span strictly convex cones and wrap all the way
    around.
    """

    rays: tuple[Vec, ...]

    def __init__(self, rays: Sequence[Vec]):
        rs = [primitive_part(tuple(r)) for r in rays]
        if len(rs) < 3:
            raise FanError("a complete fan needs at least 3 rays")
        if len(set(rs)) != len(rs):
            raise FanError("repeated ray")
        start = min(range(len(rs)), key=lambda i: _angle_key(rs[i]))
        rs = rs[start:] + rs[:start]
        keys = [_angle_key(r) for r in rs]
        if sorted(keys) != keys:
            raise FanError("rays are not in counterclockwise order")
        n = len(rs)
        for i in range(n):
            u, w = rs[i], rs[(i + 1) % n]
            if cross(u, w) <= 0:
                raise FanError(f"cone ({u}, {w}) is not strictly convex")
        object.__setattr__(self, "rays", tuple(rs))

    def __len__(self) -> int:
        return len(self.rays)

    def cone(self, i: int) -> tuple[Vec, Vec]:
        """The cone spanned by rays i and i+1 (cyclically)."""
        return self.rays[i], self.rays[(i + 1) % len(self.rays)]


def normal_fan(p: LatticePolygon) -> Fan:
    """Fan of primitive inner normals, one per edge, counterclockwise."""
    normals = [primitive_part((-e[1], e[0])) for e in p.edges()]
    return Fan(normals)


def sign_of_ray(f: Fan, i: int) -> int:
    """Sign (+1/0/-1) of ray i: the sign of the counterclockwise angle
    between its neighbours minus pi."""
    n = len(f.rays)
    u, w = f.rays[(i - 1) % n], f.rays[(i + 1) % n]
    c = cross(u, w)
    if c < 0:
        return 1  # angle(u, w) > pi
    if c > 0:
        return -1
    return 0 if dot(u, w) < 0 else -1  # equal rays cannot occur


def signature(f: Fan) -> tuple[int, int, int, int]:
    """Ordered sign word of a 4-ray fan; requires no zero signs.

    The result is always a cyclic rotation of (+, +, -, -) and opposite rays
    carry opposite signs.
    """
    if len(f.rays) != 4:
        raise NotApplicableError("signature is defined for 4-ray fans")
    signs = tuple(sign_of_ray(f, i) for i in range(4))
    if 0 in signs:
        raise NotApplicableError("fan has a ray of sign zero")
    if signs[0] == signs[2] or signs[1] == signs[3]:
        raise FanError(f"opposite rays with equal signs: {signs}")
    return signs


def _basis_completion(v: Vec) -> Mat2:
    # Unimodular matrix sending primitive v to (0, 1).
    x, y = v
    # Find (s, t) with s*x + t*y = 1 via the extended Euclid relation.
    a, b, g = _ext_gcd(x, y)
    assert g == 1
    # Rows: (y', -x') with det = 1: [[ y, -x], [a, b]] has det y*b + x*a = 1.
    return Mat2(y, -x, a, b)


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


@dataclass(frozen=True)
class ConeResolution:
    """Minimal smooth subdivision of a planar cone.

    ``inserted`` are the new primitive rays between the generators, in order;
    ``self_intersections`` their curve numbers (all <= -2); ``hj`` the
    Hirzebruch-Jung fraction of the chain (1 for a smooth cone).
    """

    cone: tuple[Vec, Vec]
    inserted: tuple[Vec, ...]
    self_intersections: tuple[int, ...]
    hj: Fraction


def _resolve_ccw(v0: Vec, v1: Vec) -> list[Vec]:
    # Minimal smooth subdivision of the ccw cone (v0, v1), full ray list.
    rays = [v0]
    u = v0
    while cross(u, v1) > 1:
        # Closest primitive ray r with det(u, r) = 1 on the v1 side: shift a
        # base solution by multiples of u until det(r, v1) is minimal >= 1.
        s, t, _ = _ext_gcd(u[0], u[1])
        r0 = (-t, s)  # det(u, r0) = u_x*s + u_y*t = 1
        c = cross(r0, v1)
        du = cross(u, v1)
        k = -((c - 1) // du)  # smallest k with c + k*du >= 1
        r = (r0[0] + k * u[0], r0[1] + k * u[1])
        rays.append(r)
        u = r
    rays.append(v1)
    return rays


def resolve_cone(v0: Vec, v1: Vec) -> ConeResolution:
    """Minimal resolution of the convex cone spanned by v0 and v1.

    Either orientation is accepted.  The inserted rays and the chain are
    reported starting from the end adjacent to v1, so reversing the input
    cone reverses the chain.
    """
    v0, v1 = primitive_part(v0), primitive_part(v1)
    d = cross(v0, v1)
    if d == 0:
        raise FanError(f"cone ({v0}, {v1}) is degenerate")
    rays = _resolve_ccw(v0, v1) if d > 0 else _resolve_ccw(v1, v0)
    selfints = [-cross(rays[j - 1], rays[j + 1]) for j in range(1, len(rays) - 1)]
    if any(s > -2 for s in selfints):
        raise FanError(f"resolution of ({v0}, {v1}) is not minimal: {selfints}")
    inserted = rays[1:-1]
    if d > 0:
        # Internal list runs v0 -> v1; report from the v1 end.
        inserted = inserted[::-1]
        selfints = selfints[::-1]
    hj = hj_fraction(selfints) if selfints else Fraction(1)
    return ConeResolution((v0, v1), tuple(inserted), tuple(selfints), hj)


def is_du_val_cone(v0: Vec, v1: Vec) -> int | None:
    """Index n >= 0 when the cone is of type A_n (n = 0 means smooth).

    Equivalent to the minimal resolution consisting of n curves that are all
    (-2); returns None for any other singularity type.
    """
    res = resolve_cone(v0, v1)
    if all(c == -2 for c in res.self_intersections):
        return len(res.inserted)
    return None


@dataclass(frozen=True)
class ResolvedFan:
    """Smooth complete fan with per-ray bookkeeping.

    ``origin[i]`` is the index of the ray in the source fan whose strict
    transform ray i is, or None for an exceptional (inserted) ray.
    """

    fan: Fan
    self_intersections: tuple[int, ...]
    origin: tuple[int | None, ...]

    def exceptional_indices(self) -> tuple[int, ...]:
        return tuple(i for i, o in enumerate(self.origin) if o is None)

    def strict_transform_index(self, source_index: int) -> int:
        return self.origin.index(source_index)


def minimal_resolution(f: Fan) -> ResolvedFan:
    """Insert the minimal resolution of every cone and compute all
    self-intersections on the resulting smooth fan."""
    rays: list[Vec] = []
    origin: list[int | None] = []
    n = len(f.rays)
    for i in range(n):
        v0, v1 = f.cone(i)
        rays.append(v0)
        origin.append(i)
        inserted = _resolve_ccw(v0, v1)[1:-1]
        rays.extend(inserted)
        origin.extend([None] * len(inserted))
    m = len(rays)
    selfints = []
    for i in range(m):
        a = cross(rays[(i - 1) % m], rays[(i + 1) % m])
        b = cross(rays[(i - 1) % m], rays[i])
        assert b == 1 and cross(rays[i], rays[(i + 1) % m]) == 1
        selfints.append(-a)
    # Re-anchor to the Fan canonical starting ray.
    fan = Fan(rays)
    shift = rays.index(fan.rays[0])
    selfints = selfints[shift:] + selfints[:shift]
    origin = origin[shift:] + origin[:shift]
    return ResolvedFan(fan, tuple(selfints), tuple(origin))


def all_rays_negative(resolved: ResolvedFan) -> bool:
    """True iff every boundary curve of the resolved surface is negative."""
    return all(s < 0 for s in resolved.self_intersections)


def count_minus_one_strict_transforms(resolved: ResolvedFan) -> int:
    """Number of non-exceptional rays with self-intersection exactly -1."""
    return sum(
        1
        for s, o in zip(resolved.self_intersections, resolved.origin)
        if o is not None and s == -1
    )


@dataclass(frozen=True)
class SpecialFanForm:
    """Normal form v0 = (w, -z), v1 = (0, 1), v2 = (-n, 1), v3 above the x-axis."""

    fan: Fan
    transform: Mat2
    rays: tuple[Vec, Vec, Vec, Vec]
    w: int
    z: int


def special_fan_normalize(f: Fan, positive_pair_index: int, n: int) -> SpecialFanForm:
    """Normalize a 4-ray fan with consecutive positive rays (v0, v1) and a
    Du Val cone of type A_{n-1} between v1 and v2.

    Returns the transformed fan together with (w, z) read off v0 = (w, -z),
    where w > z > 0.
    """
    if len(f.rays) != 4:
        raise NotApplicableError("normal form is defined for 4-ray fans")
    if n < 1:
        raise NotApplicableError("Du Val index n must be >= 1 (n = 1 is smooth)")
    i = positive_pair_index
    v0, v1, v2, v3 = (f.rays[(i + k) % 4] for k in range(4))
    if sign_of_ray(f, i) != 1 or sign_of_ray(f, (i + 1) % 4) != 1:
        raise NotApplicableError("rays at the given index are not both positive")
    if cross(v1, v2) != n or is_du_val_cone(v1, v2) != n - 1:
        raise NotApplicableError(f"cone (v1, v2) is not of type A_{n-1}")
    u = _basis_completion(v1)  # u * v1 = (0, 1)
    a, b = u.apply(v2)
    assert a == -n
    # Shear fixing (0, 1) so that v2 maps to (-n, 1); needs b = 1 mod n.
    if n > 0 and (b - 1) % n != 0:
        raise NotApplicableError("cone (v1, v2) is not in A-type shear class")
    k = (b - 1) // n if n else 0
    shear = Mat2(1, 0, k, 1)  # (x, y) -> (x, kx + y); fixes (0, 1)
    # We need v2 = (-n, b) -> (-n, 1): k * (-n) + b = 1 ok with k above.
    t = shear @ u
    r0, r1, r2, r3 = (t.apply(v) for v in (v0, v1, v2, v3))
    w, mz = r0
    if not (w > -mz > 0):
        raise NotApplicableError(f"transformed v0 = {r0} is not (w, -z) with w > z > 0")
    if r3[1] <= 0:
        raise NotApplicableError(f"transformed v3 = {r3} is not above the x-axis")
    return SpecialFanForm(Fan([r0, r1, r2, r3]), t, (r0, r1, r2, r3), w, -mz)
