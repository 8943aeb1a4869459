"""Convex bodies, section directions, regimes and threshold constants.

Three bodies are supported:

* the regular simplex ``conv{e_1, ..., e_{n+1}}`` embedded in the affine
  hyperplane ``sum x_i = 1`` of R^{n+1},
* the cross-polytope (unit l1 ball) in R^n,
* the unit cube ``[-1/2, 1/2]^n``.

A *direction* is a unit vector ``a`` (for the simplex additionally with
``sum a_i = 0`` so that hyperplanes stay inside the affine hull), and the
section hyperplane at depth ``t`` is ``H_t(a) = {x : <a, x> = t}``.  Depths
are measured from the centroid of the body.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Optional

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionOutOfRange,
    Unsupported,
    ZeroVector,
)

#: absolute tolerance used for boundary ties ``<a, v> = t``
TIE_EPS = 1e-12

#: largest dimension for which exact (vertex-enumerating) routines are offered
MAX_EXACT_N = 12


class Kind(str, Enum):
    SIMPLEX = "simplex"
    CROSSPOLYTOPE = "crosspolytope"
    CUBE = "cube"


class Canonical(str, Enum):
    """Named canonical directions."""

    APEX = "apex"                    # simplex vertex direction / cross-polytope e_1
    MAIN_DIAGONAL = "main_diagonal"  # cube (1, ..., 1)/sqrt(n)
    TWO_COORDINATE = "two_coordinate"
    ALTERNATING = "alternating"      # simplex (1, -1, 1, -1, ...)/sqrt(n+1), n odd


class RegimeTag(str, Enum):
    VERTEX_SEPARATING = "vertex_separating"
    GENERAL = "general"
    EMPTY = "empty"


class Functional(str, Enum):
    VOLUME = "volume"
    PERIMETER = "perimeter"


@dataclass(frozen=True)
class Body:
    """A convex body identified by its kind and dimension ``n``."""

    kind: Kind
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionOutOfRange(f"n must be >= 2, got {self.n}")

    @property
    def ambient_dim(self) -> int:
        return self.n + 1 if self.kind is Kind.SIMPLEX else self.n

    @property
    def num_vertices(self) -> int:
        if self.kind is Kind.SIMPLEX:
            return self.n + 1
        if self.kind is Kind.CROSSPOLYTOPE:
            return 2 * self.n
        return 2 ** self.n

    def vertices(self) -> np.ndarray:
        """Vertex coordinates, one per row (cube restricted to n <= 16)."""
        return _vertices(self.kind, self.n)

    def edges(self) -> np.ndarray:
        """Index pairs (into :meth:`vertices`) of the body's edges."""
        return _edges(self.kind, self.n)

    def centroid(self) -> np.ndarray:
        if self.kind is Kind.SIMPLEX:
            return np.full(self.n + 1, 1.0 / (self.n + 1))
        return np.zeros(self.n)

    def volume(self) -> float:
        """Intrinsic n-volume of the body."""
        n = self.n
        if self.kind is Kind.SIMPLEX:
            return math.sqrt(n + 1) / math.factorial(n)
        if self.kind is Kind.CROSSPOLYTOPE:
            return 2.0 ** n / math.factorial(n)
        return 1.0

    def edge_midpoint_depth(self) -> float:
        """Distance d(n) from the centroid to the midpoint of an edge.

        Separating a single vertex is guaranteed for ``t > d(n)`` whenever the
        hyperplane still meets the body.
        """
        n = self.n
        if self.kind is Kind.SIMPLEX:
            return math.sqrt((n - 1) / (2.0 * (n + 1)))
        if self.kind is Kind.CROSSPOLYTOPE:
            return 1.0 / math.sqrt(2.0)
        return math.sqrt(n - 1) / 2.0

    def vertex_depth(self) -> float:
        """Distance from the centroid to a vertex (largest admissible |t|)."""
        n = self.n
        if self.kind is Kind.SIMPLEX:
            return math.sqrt(n / (n + 1.0))
        if self.kind is Kind.CROSSPOLYTOPE:
            return 1.0
        return math.sqrt(n) / 2.0

    def support(self, a: np.ndarray) -> float:
        """Support function max_{x in K} <a, x> for a zero-sum/unit ``a``."""
        if self.kind is Kind.SIMPLEX:
            return float(np.max(a))
        if self.kind is Kind.CROSSPOLYTOPE:
            return float(np.max(np.abs(a)))
        return 0.5 * float(np.sum(np.abs(a)))


@lru_cache(maxsize=None)
def _vertices(kind: Kind, n: int) -> np.ndarray:
    if kind is Kind.SIMPLEX:
        v = np.eye(n + 1)
    elif kind is Kind.CROSSPOLYTOPE:
        v = np.vstack([np.eye(n), -np.eye(n)])
    else:
        if n > 16:
            raise Unsupported(f"cube vertex enumeration limited to n <= 16, got {n}")
        v = 0.5 * np.array(list(product((-1.0, 1.0), repeat=n)))
    v.setflags(write=False)
    return v


def cube_vertex_index(signs: tuple) -> int:
    """Row index of the cube vertex with the given +-1 sign pattern."""
    idx = 0
    for s in signs:
        idx = 2 * idx + (1 if s > 0 else 0)
    return idx


@lru_cache(maxsize=None)
def _edges(kind: Kind, n: int) -> np.ndarray:
    if kind is Kind.SIMPLEX:
        e = np.array(list(combinations(range(n + 1), 2)))
    elif kind is Kind.CROSSPOLYTOPE:
        pairs = []
        for i, j in combinations(range(n), 2):
            for si in (0, n):
                for sj in (0, n):
                    pairs.append((i + si, j + sj))
        e = np.array(pairs)
    else:
        pairs = []
        for v in range(2 ** n):
            for b in range(n):
                w = v ^ (1 << (n - 1 - b))
                if w > v:
                    pairs.append((v, w))
        e = np.array(pairs)
    e.setflags(write=False)
    return e


@dataclass(frozen=True)
class Direction:
    """A unit direction adapted to a body (zero-sum for the simplex)."""

    body: Body
    coords: np.ndarray

    def __post_init__(self) -> None:
        self.coords.setflags(write=False)

    def __iter__(self):
        return iter(self.coords)


def make_direction(body: Body, coords) -> Direction:
    """Project and normalize raw coordinates into a valid direction.

    For the simplex the mean is subtracted first (hyperplane directions live
    in the zero-sum subspace).  Raises :class:`ZeroVector` if the projected
    vector is numerically zero and :class:`DimensionMismatch` on bad length.
    """
    a = np.asarray(coords, dtype=float).copy()
    if a.ndim != 1 or a.shape[0] != body.ambient_dim:
        raise DimensionMismatch(
            f"expected {body.ambient_dim} coordinates, got shape {a.shape}"
        )
    if body.kind is Kind.SIMPLEX:
        a -= a.mean()
    nrm = float(np.linalg.norm(a))
    if nrm < 1e-14:
        raise ZeroVector("direction has zero norm after projection")
    return Direction(body, a / nrm)


def canonical_direction(body: Body, which: Canonical) -> Direction:
    """Construct one of the named canonical directions."""
    n = body.n
    if which is Canonical.APEX:
        if body.kind is Kind.SIMPLEX:
            a = np.full(n + 1, -1.0 / math.sqrt(n * (n + 1.0)))
            a[0] = math.sqrt(n / (n + 1.0))
            return Direction(body, a)
        if body.kind is Kind.CROSSPOLYTOPE:
            a = np.zeros(n)
            a[0] = 1.0
            return Direction(body, a)
        raise Unsupported("apex direction is not canonical for the cube")
    if which is Canonical.MAIN_DIAGONAL:
        if body.kind is Kind.CUBE:
            return Direction(body, np.full(n, 1.0 / math.sqrt(n)))
        raise Unsupported("main diagonal only applies to the cube")
    if which is Canonical.TWO_COORDINATE:
        a = np.zeros(body.ambient_dim)
        if body.kind is Kind.SIMPLEX:
            a[0], a[1] = 1.0, -1.0
        else:
            a[0], a[1] = 1.0, 1.0
        return Direction(body, a / math.sqrt(2.0))
    if which is Canonical.ALTERNATING:
        if body.kind is not Kind.SIMPLEX or n % 2 == 0:
            raise Unsupported("alternating direction needs the simplex with odd n")
        a = np.array([1.0 if i % 2 == 0 else -1.0 for i in range(n + 1)])
        return Direction(body, a / math.sqrt(n + 1.0))
    raise Unsupported(f"unknown canonical direction {which}")


@dataclass(frozen=True)
class SectionQuery:
    """A body, a direction and a depth at which to slice."""

    body: Body
    a: Direction
    t: float


@dataclass(frozen=True)
class Regime:
    """Classification of a query relative to the vertex-separating regime.

    ``normalized`` holds the direction coordinates in the formula frame:
    apex coordinate first and remaining coordinates sorted in decreasing
    order (cube/cross-polytope coordinates are made non-negative by sign
    flips).  ``perm`` and ``signs`` record the normalization so that
    ``normalized = (signs * a)[perm]``.
    """

    tag: RegimeTag
    apex_vertex: Optional[np.ndarray] = None
    normalized: Optional[np.ndarray] = None
    perm: Optional[tuple] = None
    signs: Optional[tuple] = None


def _normalize_frame(kind: Kind, a: np.ndarray, apex: Optional[int]):
    """Apex-first, descending-coordinate frame for closed-form evaluation."""
    if kind is Kind.SIMPLEX:
        signs = np.ones_like(a)
        work = a
    else:
        signs = np.where(a < 0.0, -1.0, 1.0)
        work = signs * a
    idx = np.arange(a.shape[0])
    if apex is not None:
        rest = np.delete(idx, apex)
        rest = rest[np.argsort(-work[rest], kind="stable")]
        perm = np.concatenate([[apex], rest])
    else:
        perm = idx[np.argsort(-work, kind="stable")]
    return work[perm], tuple(int(p) for p in perm), tuple(float(s) for s in signs)


def regime_check(q: SectionQuery) -> Regime:
    """Classify a query as vertex-separating, general, or empty.

    The hyperplane is *vertex-separating* with apex ``v`` if
    ``<a, v> > t > <a, w>`` for every vertex ``w`` adjacent to ``v`` (which,
    for these bodies, implies strict separation from every other vertex).
    Boundary ties within :data:`TIE_EPS` are classified as *not* separating.
    A query is *empty* when the hyperplane misses the body entirely
    (``t`` above the support value or below its negative counterpart).
    """
    body, t = q.body, q.t
    a = q.a.coords
    kind = body.kind
    if kind is Kind.CUBE:
        # avoid enumerating 2^n vertices: extremes are +-(1/2) sum |a_i|
        s = 0.5 * float(np.sum(np.abs(a)))
        lo, hi = -s, s
    else:
        dots = body.vertices() @ a
        hi = float(np.max(dots))
        lo = float(np.min(dots))
    if t > hi - TIE_EPS or t < lo + TIE_EPS:
        return Regime(RegimeTag.EMPTY)

    if kind is Kind.CUBE:
        abs_a = np.abs(a)
        second = s - float(np.min(abs_a))
        if s > t + TIE_EPS and second < t - TIE_EPS:
            apex = 0.5 * np.where(a < 0.0, -1.0, 1.0)
            normalized, perm, signs = _normalize_frame(kind, a, apex=None)
            return Regime(RegimeTag.VERTEX_SEPARATING, apex, normalized, perm, signs)
        return Regime(RegimeTag.GENERAL)

    order = np.argsort(-dots)
    top, second = int(order[0]), int(order[1])
    if dots[top] > t + TIE_EPS and dots[second] < t - TIE_EPS:
        if kind is Kind.SIMPLEX:
            apex_idx = top
        else:
            # cross-polytope: vertex row top is +-e_j; apex coordinate index j
            apex_idx = top % body.n
        normalized, perm, signs = _normalize_frame(kind, a, apex_idx)
        apex = body.vertices()[top].copy()
        return Regime(RegimeTag.VERTEX_SEPARATING, apex, normalized, perm, signs)
    return Regime(RegimeTag.GENERAL)


@dataclass(frozen=True)
class ConstantsTable:
    """Analytic constants attached to a (body, n) pair.

    ``volume_threshold`` / ``perimeter_threshold`` are the depths at which
    the canonical direction switches between a local minimum and a local
    maximum of the respective section functional (cube perimeter: the
    second-order coefficient zero; the full perimeter flip for n = 3 is
    stored separately in ``cube_n3_perimeter_flip``).
    """

    kind: Kind
    n: int
    edge_midpoint_depth: float
    vertex_depth: float
    volume_threshold: float
    perimeter_threshold: Optional[float] = None
    crosspoly_corollary_lower: Optional[float] = None
    crosspoly_min_ratio: Optional[float] = None
    cube_regime_floor: Optional[float] = None
    cube_n3_t0: Optional[float] = None
    cube_n3_t1: Optional[float] = None
    cube_n3_perimeter_flip: Optional[float] = None


def thresholds(body: Body) -> ConstantsTable:
    """Analytic threshold constants for the body."""
    n = body.n
    d = body.edge_midpoint_depth()
    tv = body.vertex_depth()
    if body.kind is Kind.SIMPLEX:
        alpha = math.sqrt(n / (n + 1.0))
        return ConstantsTable(
            kind=body.kind,
            n=n,
            edge_midpoint_depth=d,
            vertex_depth=tv,
            volume_threshold=(2 * n + 1) / (n * (n + 2.0)) * alpha,
            perimeter_threshold=(3 * n + 2) / (n * (n + 2.0)) * alpha,
        )
    if body.kind is Kind.CROSSPOLYTOPE:
        if n == 3:
            m_ratio = 1.0 / math.sqrt(3.0)
        elif n == 4:
            m_ratio = 5.0 * math.sqrt(10.0) / 32.0
        elif n == 5:
            m_ratio = 7.0 * math.sqrt(21.0) / 75.0
        else:
            m_ratio = 3.0 / (n + 2.0)
        return ConstantsTable(
            kind=body.kind,
            n=n,
            edge_midpoint_depth=d,
            vertex_depth=tv,
            volume_threshold=3.0 / (n + 2.0),
            crosspoly_corollary_lower=4.0 / n,
            crosspoly_min_ratio=m_ratio,
        )
    extra = {}
    if n == 3:
        s3 = math.sqrt(3.0)
        extra = {
            "cube_n3_t0": (s3 + 8.0 * math.sqrt(2.0)) / 18.0,
            "cube_n3_t1": (math.sqrt(18.0 + 10.0 * s3) - math.sqrt(6.0 - 2.0 * s3)) / 6.0,
            "cube_n3_perimeter_flip": 11.0 * s3 / 30.0,
        }
    return ConstantsTable(
        kind=body.kind,
        n=n,
        edge_midpoint_depth=d,
        vertex_depth=tv,
        volume_threshold=(n + 1) / (4.0 * math.sqrt(n)),
        perimeter_threshold=(n + 2) / (4.0 * math.sqrt(n)),
        cube_regime_floor=(n - 2) / (2.0 * math.sqrt(n)),
        **extra,
    )


@dataclass(frozen=True)
class FaceDescriptor:
    """A face of the body's boundary complex.

    ``key`` identifies the face combinatorially:

    * simplex: tuple of vertex indices,
    * cross-polytope: tuple of (coordinate index, sign) pairs,
    * cube: length-n tuple over {-1, 0, +1} with 0 marking free coordinates.
    """

    body: Body
    dim: int
    key: tuple
    vertex_indices: tuple

    def children(self) -> list:
        """The (dim-1)-faces contained in this face."""
        if self.dim == 0:
            return []
        body = self.body
        kind = body.kind
        out = []
        if kind is Kind.CUBE:
            free = [i for i, s in enumerate(self.key) if s == 0]
            for i in free:
                for s in (-1, 1):
                    k = list(self.key)
                    k[i] = s
                    out.append(_cube_face(body, tuple(k)))
        else:
            for drop in range(len(self.key)):
                k = self.key[:drop] + self.key[drop + 1:]
                out.append(_simplicial_face(body, k))
        return out

    def intrinsic_volume(self) -> float:
        """Full dim-volume of the face itself."""
        k = self.dim
        if self.body.kind is Kind.CUBE:
            return 1.0
        # regular simplex on k+1 pairwise-orthogonal unit vectors, side sqrt(2)
        return math.sqrt(k + 1.0) / math.factorial(k)


def _simplicial_face(body: Body, key: tuple) -> FaceDescriptor:
    if body.kind is Kind.SIMPLEX:
        vidx = key
    else:
        vidx = tuple(j if s > 0 else j + body.n for j, s in key)
    return FaceDescriptor(body, len(key) - 1, key, vidx)


def _cube_face(body: Body, key: tuple) -> FaceDescriptor:
    free = [i for i, s in enumerate(key) if s == 0]
    vidx = []
    for fill in product((-1, 1), repeat=len(free)):
        signs = list(key)
        for i, s in zip(free, fill):
            signs[i] = s
        vidx.append(cube_vertex_index(tuple(signs)))
    return FaceDescriptor(body, len(free), key, tuple(vidx))


def face_lattice(body: Body, dim: int) -> list:
    """All faces of the given dimension (0 <= dim <= n-1)."""
    n = body.n
    if dim < 0 or dim > n - 1:
        raise DimensionOutOfRange(f"face dimension {dim} out of range for n={n}")
    if body.kind is Kind.SIMPLEX:
        return [
            _simplicial_face(body, key)
            for key in combinations(range(n + 1), dim + 1)
        ]
    if body.kind is Kind.CROSSPOLYTOPE:
        faces = []
        for supp in combinations(range(n), dim + 1):
            for sgn in product((1, -1), repeat=dim + 1):
                faces.append(_simplicial_face(body, tuple(zip(supp, sgn))))
        return faces
    if n > MAX_EXACT_N:
        raise Unsupported(f"cube face lattice limited to n <= {MAX_EXACT_N}")
    faces = []
    for fixed in combinations(range(n), n - dim):
        for sgn in product((-1, 1), repeat=n - dim):
            key = [0] * n
            for i, s in zip(fixed, sgn):
                key[i] = s
            faces.append(_cube_face(body, tuple(key)))
    return faces


def sample_direction(body: Body, rng: np.random.Generator) -> Direction:
    """Draw a uniformly distributed direction (Gaussian projection)."""
    while True:
        g = rng.standard_normal(body.ambient_dim)
        try:
            return make_direction(body, g)
        except ZeroVector:  # pragma: no cover - essentially impossible
            continue
