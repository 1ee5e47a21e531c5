"""Exact rational convex polygons, norm balls, and polar duality.

The homology rank in play is two, so all polytopes here are convex polygons
over the rationals.  A polygon carries both representations: the canonical
vertex list (counter-clockwise, starting at the lexicographically smallest
vertex) and the facet halfspaces with integer-normalized data; the two are
cross-validated at construction.

Coordinates throughout are (F, S): the first axis is the class F, the
second the class S.  Norm balls are built from the four norm values
x(F), x(S), x(S+F), x(S-F); their polar duals are the dual-norm balls,
and integral points of dual norm one are classified for realizability as
Euler classes (vertices are realizable; the distinguished edge points
(0, +-(2g-2)) are the known non-realizable candidates).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from math import ceil, floor, gcd
from typing import List, Optional, Sequence, Tuple

Vec2 = Tuple[Fraction, Fraction]
Halfspace = Tuple[Tuple[int, int], int]  # ((a, b), c) meaning a*x + b*y <= c


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise ValueError("floats are not allowed; use Fraction, int, or 'p/q' strings")
    return Fraction(x)


def _point(p) -> Vec2:
    x, y = p
    return (_frac(x), _frac(y))


def _cross(o: Vec2, a: Vec2, b: Vec2) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _convex_hull(points: Sequence[Vec2]) -> List[Vec2]:
    """Andrew monotone chain; strict turns only, so collinear points drop out."""
    pts = sorted(set(points))
    if len(pts) < 3:
        raise ValueError("polygon needs at least three distinct points")
    lower: List[Vec2] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Vec2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("points are collinear; polygon is degenerate")
    return hull


def _edge_halfspace(p: Vec2, q: Vec2) -> Halfspace:
    """Outward halfspace of the edge p -> q of a counter-clockwise polygon."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    a, b = dy, -dx
    c = a * p[0] + b * p[1]
    denom = a.denominator * b.denominator * c.denominator
    ai = int(a * denom)
    bi = int(b * denom)
    ci = int(c * denom)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci))
    if g:
        ai, bi, ci = ai // g, bi // g, ci // g
    return ((ai, bi), ci)


class RatPolytope:
    """Convex polygon with exact rational vertices and integer facet data."""

    __slots__ = ("vertices", "halfspaces")

    def __init__(self, points: Sequence):
        hull = _convex_hull([_point(p) for p in points])
        start = min(range(len(hull)), key=lambda i: hull[i])
        vertices = tuple(hull[start:] + hull[:start])
        halfspaces = tuple(
            _edge_halfspace(vertices[i], vertices[(i + 1) % len(vertices)])
            for i in range(len(vertices))
        )
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "halfspaces", halfspaces)
        self._cross_validate()

    def __setattr__(self, name, value):
        raise AttributeError("RatPolytope is immutable")

    def _cross_validate(self):
        # every vertex satisfies every halfspace, with equality on exactly two
        for v in self.vertices:
            tight = 0
            for (a, b), c in self.halfspaces:
                val = a * v[0] + b * v[1]
                if val > c:
                    raise AssertionError("vertex violates a facet halfspace")
                if val == c:
                    tight += 1
            if tight != 2:
                raise AssertionError("vertex/halfspace representations disagree")

    def __eq__(self, other):
        return isinstance(other, RatPolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"RatPolytope({[tuple(map(str, v)) for v in self.vertices]})"

    def contains(self, p) -> bool:
        x, y = _point(p)
        return all(a * x + b * y <= c for (a, b), c in self.halfspaces)

    def on_boundary(self, p) -> bool:
        x, y = _point(p)
        tight = False
        for (a, b), c in self.halfspaces:
            val = a * x + b * y
            if val > c:
                return False
            if val == c:
                tight = True
        return tight

    def is_vertex(self, p) -> bool:
        return _point(p) in self.vertices

    @property
    def origin_interior(self) -> bool:
        return all(c > 0 for _, c in self.halfspaces)

    @property
    def centrally_symmetric(self) -> bool:
        return set(self.vertices) == {(-x, -y) for x, y in self.vertices}

    def gauge(self, p) -> Fraction:
        """Minkowski gauge: least t >= 0 with p in t * polytope (origin interior)."""
        if not self.origin_interior:
            raise ValueError("gauge requires the origin in the interior")
        x, y = _point(p)
        return max(Fraction(a * x + b * y, c) for (a, b), c in self.halfspaces)

    def bounding_box(self) -> Tuple[int, int, int, int]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (floor(min(xs)), ceil(max(xs)), floor(min(ys)), ceil(max(ys)))


def polar_dual(p: RatPolytope) -> RatPolytope:
    """Polar polygon {u : <u, v> <= 1 for all v in p}.

    Facets of p become vertices of the dual and vice versa; applying it
    twice returns the original polygon.  Requires the origin strictly
    inside p.
    """
    if not p.origin_interior:
        raise ValueError("polar dual requires the origin in the interior")
    return RatPolytope([(Fraction(a, c), Fraction(b, c)) for (a, b), c in p.halfspaces])


# -- norm balls ---------------------------------------------------------------


@dataclass(frozen=True)
class NormSpec:
    """Norm data on the rank-two lattice spanned by F and S.

    Values are the norms of F, S, S+F and S-F; chi records the Euler
    characteristics (chi(F), chi(S)) used by the parity filter.
    """

    x_f: Fraction
    x_s: Fraction
    x_sum: Fraction
    x_diff: Fraction
    chi: Tuple[int, int]

    def __post_init__(self):
        values = {}
        for name in ("x_f", "x_s", "x_sum", "x_diff"):
            v = _frac(getattr(self, name))
            object.__setattr__(self, name, v)
            values[name] = v
            if v <= 0:
                raise ValueError(f"{name} must be positive")
        if self.x_sum > self.x_s + self.x_f or self.x_diff > self.x_s + self.x_f:
            raise ValueError("triangle inequality violated: x(S±F) <= x(S) + x(F)")
        cf, cs = self.chi
        if isinstance(cf, bool) or isinstance(cs, bool) or not isinstance(cf, int) or not isinstance(cs, int):
            raise ValueError("chi entries must be integers")

    @classmethod
    def surgery_family(cls, genus: int) -> "NormSpec":
        """Norm values (2, 2g-2, 2g, 2g) of the genus-g surgered fibrations,
        with chi = (-2, 2-2g)."""
        if not isinstance(genus, int) or genus < 2:
            raise ValueError("genus must be an integer >= 2")
        return cls(
            x_f=Fraction(2),
            x_s=Fraction(2 * genus - 2),
            x_sum=Fraction(2 * genus),
            x_diff=Fraction(2 * genus),
            chi=(-2, 2 - 2 * genus),
        )


def norm_ball_from_values(spec: NormSpec) -> RatPolytope:
    """Unit ball of the norm matching the four values of the spec.

    The ball is the convex hull of the scaled directions
    +-(1,0)/x(F), +-(0,1)/x(S), +-(1,1)/x(S+F), +-(-1,1)/x(S-F).  Each of
    the eight points must land on the boundary of that hull, otherwise the
    values are not the values of any norm and a ValueError is raised.
    When x(S+F) and x(S-F) are exactly x(S) + x(F) the diagonal points are
    edge midpoints and the ball is the diamond with vertices
    (+-1/x(F), 0), (0, +-1/x(S)).
    """
    directions = [
        ((Fraction(1), Fraction(0)), spec.x_f),
        ((Fraction(0), Fraction(1)), spec.x_s),
        ((Fraction(1), Fraction(1)), spec.x_sum),
        ((Fraction(-1), Fraction(1)), spec.x_diff),
    ]
    pts = []
    for (dx, dy), value in directions:
        pts.append((dx / value, dy / value))
        pts.append((-dx / value, -dy / value))
    ball = RatPolytope(pts)
    for pt in pts:
        if ball.gauge(pt) != 1:
            raise ValueError("norm values are inconsistent (some value is too large)")
    return ball


def dual_norm_value(ball: RatPolytope, u) -> Fraction:
    """Dual norm x*(u) = max over vertices v of the ball of <u, v>."""
    x, y = _point(u)
    return max(x * vx + y * vy for vx, vy in ball.vertices)


# -- integral points and realizability ----------------------------------------


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY_VERTEX = "boundary-vertex"
    BOUNDARY_NONVERTEX = "boundary-nonvertex"
    EXTERIOR = "exterior"


class Realizability(enum.Enum):
    REALIZABLE_VERTEX = "realizable-vertex"
    CANDIDATE = "candidate"
    INTERIOR_UNKNOWN = "interior-unknown"
    EXCLUDED = "excluded"


@dataclass(frozen=True)
class CandidatePoint:
    """An integral cohomology point moving through the classification flow."""

    coords: Tuple[int, int]
    location: Location
    parity_ok: Optional[bool] = None
    realizability: Optional[Realizability] = None
    counterexample: bool = False


def locate(dual_ball: RatPolytope, coords: Tuple[int, int]) -> CandidatePoint:
    """Classify an integer point against the dual ball."""
    x, y = coords
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise ValueError("coords must be integers")
    if not dual_ball.contains(coords):
        loc = Location.EXTERIOR
    elif dual_ball.is_vertex(coords):
        loc = Location.BOUNDARY_VERTEX
    elif dual_ball.on_boundary(coords):
        loc = Location.BOUNDARY_NONVERTEX
    else:
        loc = Location.INTERIOR
    return CandidatePoint((x, y), loc)


def integral_boundary_points(dual_ball: RatPolytope) -> List[CandidatePoint]:
    """All integer points of dual norm exactly one, i.e. on the boundary.

    Enumerated by an exact scan of the integer bounding box.
    """
    x0, x1, y0, y1 = dual_ball.bounding_box()
    out = []
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            pt = locate(dual_ball, (x, y))
            if pt.location in (Location.BOUNDARY_VERTEX, Location.BOUNDARY_NONVERTEX):
                out.append(pt)
    return out


def parity_filter(points: Sequence[CandidatePoint], chi: Tuple[int, int]) -> List[CandidatePoint]:
    """Keep the points whose coordinates match (chi(F), chi(S)) mod 2.

    chi entries must be even (closed orientable surfaces have even Euler
    characteristic).
    """
    cf, cs = chi
    if cf % 2 != 0 or cs % 2 != 0:
        raise ValueError("chi entries must be even")
    kept = []
    for p in points:
        ok = (p.coords[0] - cf) % 2 == 0 and (p.coords[1] - cs) % 2 == 0
        if ok:
            kept.append(replace(p, parity_ok=True))
    return kept


def classify_realizability(p: CandidatePoint, genus: int) -> CandidatePoint:
    """Attach the realizability verdict to a located, parity-checked point.

    Vertices of the dual ball that pass parity are realizable as Euler
    classes of taut foliations.  Parity-passing boundary points that are
    not vertices remain candidates; among them (0, +-(2g-2)) is flagged,
    being the point that no taut foliation realizes on the surgered
    manifolds.
    """
    if not isinstance(genus, int) or genus < 2:
        raise ValueError("genus must be an integer >= 2")
    if p.location == Location.EXTERIOR:
        raise ValueError("point is outside the dual ball")
    if p.parity_ok is None and p.location != Location.INTERIOR:
        raise ValueError("run the parity filter before classifying boundary points")
    if p.location == Location.INTERIOR:
        return replace(p, realizability=Realizability.INTERIOR_UNKNOWN)
    if not p.parity_ok:
        return replace(p, realizability=Realizability.EXCLUDED)
    if p.location == Location.BOUNDARY_VERTEX:
        return replace(p, realizability=Realizability.REALIZABLE_VERTEX)
    tip = 2 * genus - 2
    flagged = p.coords in ((0, tip), (0, -tip))
    return replace(p, realizability=Realizability.CANDIDATE, counterexample=flagged)


def covering_pullback(x_val, degree: int) -> Fraction:
    """Norm of the pullback class under a degree-d covering: d times the norm."""
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise ValueError("degree must be a positive integer")
    return _frac(x_val) * degree


def candidate_points(spec: NormSpec, genus: int) -> Tuple[RatPolytope, RatPolytope, List[CandidatePoint]]:
    """Full pipeline: ball, dual ball, and classified parity-passing
    integral boundary points of the dual ball."""
    ball = norm_ball_from_values(spec)
    dual = polar_dual(ball)
    points = parity_filter(integral_boundary_points(dual), spec.chi)
    classified = [classify_realizability(p, genus) for p in points]
    return ball, dual, classified
