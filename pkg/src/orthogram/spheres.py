"""The classical dictionary between spheres in n-space and projective points.

A sphere  sum (x_i - a_i)^2 = R^2  lifts to the point
alpha = (1, a_1, ..., a_n, (R^2 - sum a_i^2)/2)  in an (n+2)-dimensional
space carrying the pairing

    <alpha, beta> = alpha_0 beta_{n+1} + alpha_{n+1} beta_0 + sum_{i=1}^n alpha_i beta_i.

Under this pairing <alpha, alpha> recovers R^2 (for alpha_0 = 1),
conjugacy is orthogonal intersection, a vanishing 2x2 pairing determinant
is tangency, and a vanishing (n+1)x(n+1) pairing determinant is a common
point.  Everything here is exact rational; no trigonometry is evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .linalg import (
    Matrix,
    PointConfiguration,
    SymmetricMatrix,
    Vector,
    bilinear,
    gram_matrix,
    is_zero_vector,
    parse_scalar,
    scalar_to_str,
    to_scalar,
    vec_add,
    vec_sub,
    vector,
)


@dataclass(frozen=True)
class Sphere:
    """Center plus squared radius; R^2 may be zero or negative (complex spheres)."""

    center: Vector
    radius_sq: Fraction

    @classmethod
    def of(cls, center, radius_sq) -> "Sphere":
        return cls(vector(center), to_scalar(radius_sq))

    @property
    def ambient_dim(self) -> int:
        return len(self.center)

    def to_json(self) -> dict:
        return {
            "n": self.ambient_dim,
            "center": [scalar_to_str(c) for c in self.center],
            "radius_sq": scalar_to_str(self.radius_sq),
        }

    @classmethod
    def from_json(cls, data) -> "Sphere":
        center = [parse_scalar(c) for c in data["center"]]
        if len(center) != int(data["n"]):
            raise ValueError("center length disagrees with n")
        return cls.of(center, parse_scalar(data["radius_sq"]))


@dataclass(frozen=True)
class LiftedPoint:
    """Projective point representing a sphere; compare up to scaling."""

    coords: Vector

    def __post_init__(self):
        if len(self.coords) < 3:
            raise ValueError("lifted points live in dimension n+2 with n >= 1")
        if is_zero_vector(self.coords):
            raise ValueError("lifted point must be a nonzero vector")

    @classmethod
    def of(cls, coords) -> "LiftedPoint":
        return cls(vector(coords))

    @property
    def n(self) -> int:
        return len(self.coords) - 2

    def proportional_to(self, other: "LiftedPoint") -> bool:
        """Projective equality: some nonzero scalar maps one to the other."""
        u, v = self.coords, other.coords
        if len(u) != len(v):
            return False
        pivot = next(i for i, x in enumerate(u) if x != 0)
        if v[pivot] == 0:
            return False
        t = v[pivot] / u[pivot]
        return all(t * a == b for a, b in zip(u, v))

    def to_json(self) -> dict:
        return {"coords": [scalar_to_str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data) -> "LiftedPoint":
        return cls.of([parse_scalar(c) for c in data["coords"]])


class AtInfinity:
    """Degenerate outcome: the quadric contains the hyperplane at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AtInfinity()"


AT_INFINITY = AtInfinity()


def fundamental_form(n: int) -> SymmetricMatrix:
    """Matrix of the lifted pairing on (n+2)-dimensional space.

    Antidiagonal 1s couple the first and last coordinates; the middle
    block is the identity.  The matrix squares to the identity.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    size = n + 2
    upper = {(0, size - 1): Fraction(1)}
    for i in range(1, size - 1):
        upper[(i, i)] = Fraction(1)
    return SymmetricMatrix.from_upper(size, upper)


def pairing(p: LiftedPoint, q: LiftedPoint) -> Fraction:
    """<p, q> under the fundamental form, computed directly."""
    u, v = p.coords, q.coords
    if len(u) != len(v):
        raise ValueError("lifted points live in different dimensions")
    last = len(u) - 1
    return u[0] * v[last] + u[last] * v[0] + sum(u[i] * v[i] for i in range(1, last))


def quadric_value(p: LiftedPoint) -> Fraction:
    return pairing(p, p)


def lift(sphere: Sphere) -> LiftedPoint:
    """Canonical lift with first coordinate 1; its self-pairing equals R^2."""
    sumsq = sum(c * c for c in sphere.center)
    tail = (sphere.radius_sq - sumsq) / 2
    return LiftedPoint.of((Fraction(1),) + sphere.center + (tail,))


def unlift(p: LiftedPoint) -> Sphere | AtInfinity:
    """Invert :func:`lift` (scaling-invariant).

    A vanishing first coordinate is not an error: the quadric degenerates
    to one containing the hyperplane at infinity, reported as
    :data:`AT_INFINITY`.
    """
    a0 = p.coords[0]
    if a0 == 0:
        return AT_INFINITY
    center = tuple(c / a0 for c in p.coords[1:-1])
    return Sphere(center, quadric_value(p) / (a0 * a0))


class SingularityCheck(NamedTuple):
    singular: bool
    discriminant: Fraction


def is_singular(p: LiftedPoint) -> SingularityCheck:
    """Singular quadric test: first coordinate times self-pairing vanishes.

    Also returns the discriminant alpha_0^(n-1) * <alpha, alpha> of the
    associated quadratic form.
    """
    a0 = p.coords[0]
    q = quadric_value(p)
    return SingularityCheck(a0 * q == 0, a0 ** (p.n - 1) * q)


def are_orthogonal(p: LiftedPoint, q: LiftedPoint) -> bool:
    """Conjugate points, i.e. the spheres meet at right angles."""
    return pairing(p, q) == 0


def are_tangent(p: LiftedPoint, q: LiftedPoint) -> bool:
    """Tangency: the restricted pairing degenerates on the spanned pencil."""
    return pairing(p, p) * pairing(q, q) - pairing(p, q) ** 2 == 0


class CommonPointCheck(NamedTuple):
    concurrent: bool
    hyperplanes_dependent: bool


def common_point(points: Sequence[LiftedPoint]) -> CommonPointCheck:
    """Do n+1 spheres in n-space share a point?

    Computes the pairing determinant twice: once through the polar
    hyperplane coordinates h_i = F v_i and once directly on the lifted
    vectors.  The two must agree (the form squares to the identity); the
    assertion guards the convention.  When the polar hyperplanes are
    linearly dependent the determinant vanishes for trivial reasons, which
    the second flag reports.
    """
    points = list(points)
    if not points:
        raise ValueError("need n+1 lifted points")
    n = points[0].n
    if any(p.n != n for p in points):
        raise ValueError("lifted points live in different dimensions")
    if len(points) != n + 1:
        raise ValueError("need exactly n+1 lifted points for spheres in n-space")
    form = fundamental_form(n)
    polars = [form.apply(p.coords) for p in points]
    via_polars = Matrix(
        [[bilinear(form, h1, h2) for h2 in polars] for h1 in polars]
    ).det()
    direct = Matrix(
        [[pairing(p1, p2) for p2 in points] for p1 in points]
    ).det()
    assert via_polars == direct, "polar and direct pairing determinants disagree"
    dependent = Matrix(polars).rank() < n + 1
    return CommonPointCheck(direct == 0, dependent)


def cyclic_cosine_invariant(config: PointConfiguration, cycle: Sequence[int]) -> Fraction:
    """Cyclic product of pairings over diagonal pairings.

    For a cycle (a_1 .. a_k) this is
    prod <v_{a_i}, v_{a_{i+1}}> / prod <v_{a_i}, v_{a_i}>  (indices cyclic).
    Squares of these ratios are invariant under rescaling each vector, and
    for real configurations they are products of cosines of the vertex
    angles, which determine the orbit of an independent configuration.
    """
    cycle = list(cycle)
    if not cycle:
        raise ValueError("cycle must be nonempty")
    if any(not 0 <= a < config.m for a in cycle):
        raise ValueError("cycle index out of range")
    gram = gram_matrix(config)
    for a in cycle:
        if gram[a, a] == 0:
            raise ValueError("zero diagonal pairing at index %d" % a)
    num = Fraction(1)
    den = Fraction(1)
    k = len(cycle)
    for t in range(k):
        num *= gram[cycle[t], cycle[(t + 1) % k]]
        den *= gram[cycle[t], cycle[t]]
    return num / den


# -- isometry recovery -------------------------------------------------------


def reflection(form: SymmetricMatrix, v: Sequence) -> Matrix:
    """Reflection in the hyperplane orthogonal to v:  w -> w - 2<w,v>/<v,v> v."""
    v = vector(v)
    norm = bilinear(form, v, v)
    if norm == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    fv = form.apply(v)
    size = form.size
    rows = [
        [
            (Fraction(1) if i == j else Fraction(0)) - 2 * v[i] * fv[j] / norm
            for j in range(size)
        ]
        for i in range(size)
    ]
    return Matrix(rows)


def recover_isometry(
    x: PointConfiguration, y: PointConfiguration
) -> Matrix | None:
    """The isometry sending each x_i to y_i, if one exists.

    Requires both configurations to share the form and x's vectors to be
    linearly independent.  Returns None when the Gram matrices differ (no
    isometry can match the chosen representatives).  Otherwise builds the
    map as a product of at most m reflections, so the result satisfies
    A^T F A = F exactly and agrees with any other solution on the span of
    x.  For an indefinite form the construction can hit an isotropic
    reflection axis, which is reported as an error; positive-definite
    forms never do.
    """
    if x.form != y.form:
        raise ValueError("configurations must share the bilinear form")
    if x.m != y.m:
        raise ValueError("configurations must have the same number of vectors")
    if Matrix(x.vectors).rank() != x.m:
        raise ValueError("the source vectors must be linearly independent")
    if gram_matrix(x) != gram_matrix(y):
        return None
    form = x.form
    size = form.size
    result = Matrix(
        [[Fraction(1) if i == j else Fraction(0) for j in range(size)] for i in range(size)]
    )
    for xi, yi in zip(x.vectors, y.vectors):
        moved = result.apply(xi)
        if moved == yi:
            continue
        diff = vec_sub(moved, yi)
        if bilinear(form, diff, diff) != 0:
            result = reflection(form, diff) @ result
            continue
        # isotropic difference: send moved -> -y_i -> y_i via two reflections
        through = vec_add(moved, yi)
        if bilinear(form, through, through) == 0 or bilinear(form, yi, yi) == 0:
            raise ValueError(
                "isotropic reflection axes; recovery supported only for "
                "anisotropic (e.g. positive-definite) forms here"
            )
        result = reflection(form, yi) @ reflection(form, through) @ result
    assert result.transpose() @ Matrix(form.rows) @ result == Matrix(form.rows)
    for xi, yi in zip(x.vectors, y.vectors):
        assert result.apply(xi) == yi
    return result


# -- hyperplane pairs in hyperbolic space ------------------------------------


class NormalizationError(ValueError):
    """Unit normalization impossible over the rationals; carries the pairing."""

    def __init__(self, self_pairing: Fraction):
        super().__init__(
            "self-pairing %s is not the square of a rational; rescale the input"
            % scalar_to_str(self_pairing)
        )
        self.self_pairing = self_pairing


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    p, q = value.numerator, value.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


INTERSECTING = "intersecting"
PARALLEL_OR_TANGENT = "parallel_or_tangent"
DIVERGENT = "divergent"


class HyperbolicPairing(NamedTuple):
    value: Fraction  # minus the normalized pairing; cos of the angle when |.| < 1
    kind: str


def hyperbolic_pair(v: LiftedPoint, w: LiftedPoint) -> HyperbolicPairing:
    """Classify the pair of hyperplanes orthogonal to two unit vectors.

    Inputs are rescaled so each self-pairing is 1; that needs the
    self-pairings to be positive rational squares, otherwise
    :class:`NormalizationError` reports the exact value so the caller can
    rescale.  The result carries t = -<v, w> exactly: |t| < 1 means the
    hyperplanes intersect at angle arccos t, |t| = 1 parallel or tangent
    spheres, |t| > 1 divergent (|t| is then the hyperbolic cosine of the
    distance).  No transcendental function is evaluated here.
    """
    scaled = []
    for p in (v, w):
        norm = quadric_value(p)
        if norm <= 0:
            raise NormalizationError(norm)
        root = _rational_sqrt(norm)
        if root is None:
            raise NormalizationError(norm)
        scaled.append(LiftedPoint.of(tuple(c / root for c in p.coords)))
    t = -pairing(scaled[0], scaled[1])
    if t * t < 1:
        kind = INTERSECTING
    elif t * t == 1:
        kind = PARALLEL_OR_TANGENT
    else:
        kind = DIVERGENT
    return HyperbolicPairing(t, kind)
