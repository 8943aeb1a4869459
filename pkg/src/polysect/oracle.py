"""Ground-truth evaluators for hyperplane sections of the three bodies.

The exact routines slice the body's face lattice recursively: the section of
a k-face is a (k-1)-polytope whose boundary pieces come either from
transversally cut (k-1)-faces or from (k-2)-faces lying entirely inside the
hyperplane.  Volumes follow from the pyramid decomposition

    vol_k(P) = (1/k) * sum_F dist(c, aff F) * vol_{k-1}(F)

with ``c`` any interior point of ``P``.  This makes no use of the closed
section formulas and serves as the independent oracle for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

import numpy as np
from scipy.special import sici

from .bodies import (
    Body,
    Kind,
    RegimeTag,
    SectionQuery,
    TIE_EPS,
    face_lattice,
    regime_check,
)
from .errors import (
    DimensionOutOfRange,
    InsufficientHits,
    NotIntegrable,
    QuadratureFailure,
)

_TRANSVERSAL = 0
_CONTAINED = 1
_ONE_SIDED = 2


class _Lattice:
    """Integer-indexed face lattice of a body, cached per (kind, n).

    Face ids enumerate all proper faces (dims 0 .. n-1) plus a root id for
    the body itself.  For each face we precompute its vertex indices, its
    children ((dim-1)-faces), its (dim-2)-subfaces, and the local geometry
    needed for signed pyramid decompositions: an orthonormal basis of the
    face's direction space, the face centroid, and for every child the
    outward unit normal (in face-local coordinates) of its affine hull.
    """

    def __init__(self, body: Body):
        self.body = body
        self.verts = body.vertices()
        self.edges = body.edges()
        self.edge_length = 1.0 if body.kind is Kind.CUBE else math.sqrt(2.0)

        key_to_id: dict = {}
        descs = []
        for dim in range(body.n):
            for f in face_lattice(body, dim):
                key_to_id[f.key] = len(descs)
                descs.append(f)
        self.root = len(descs)

        nfaces = len(descs) + 1
        self.dim = [0] * nfaces
        self.vidx = [None] * nfaces
        self.children = [()] * nfaces
        self.sub2 = [()] * nfaces
        self.full_vol = [0.0] * nfaces
        self.basis = [None] * nfaces      # (k, d) orthonormal rows
        self.p0 = [None] * nfaces         # origin of the local frame
        self.zloc = [None] * nfaces       # face centroid, local coordinates
        self.child_geom = [()] * nfaces   # per child: (g, beta, margin)
        self.sub2_geom = [()] * nfaces    # per sub2 face: (U2, p_local)

        for fid, f in enumerate(descs):
            self._fill(fid, f.dim, f.vertex_indices,
                       [key_to_id[c.key] for c in f.children()])
            self.full_vol[fid] = f.intrinsic_volume()
        facets = [key_to_id[f.key] for f in face_lattice(body, body.n - 1)]
        self._fill(self.root, body.n, tuple(range(len(self.verts))), facets)
        self.full_vol[self.root] = body.volume()

        for fid in range(nfaces):
            self._fill_geometry(fid)

    def _fill(self, fid, dim, vidx, children):
        self.dim[fid] = dim
        self.vidx[fid] = np.array(vidx, dtype=int)
        self.children[fid] = tuple(children)
        sub2 = set()
        for c in children:
            sub2.update(self.children[c])
        self.sub2[fid] = tuple(sorted(sub2))

    def _fill_geometry(self, fid):
        """Local frame and closed-form child/subface normals.

        Cube faces are axis boxes, so the frame is an axis selector and the
        child normals are signed axis vectors.  Every other face here is a
        regular simplex with unit vertices, where the inward altitude of the
        facet omitting vertex v points from v to the facet centroid.  The
        cross-polytope root gets its facet normals from the sign vectors.
        """
        k = self.dim[fid]
        pts = self.verts[self.vidx[fid]]
        self.p0[fid] = pts[0]
        d = pts.shape[1]
        if k == 0:
            self.basis[fid] = np.empty((0, d))
            self.zloc[fid] = np.empty(0)
            return
        cube = self.body.kind is Kind.CUBE
        if cube:
            free = np.nonzero(np.ptp(pts, axis=0) > 0.0)[0]
            basis = np.zeros((k, d))
            basis[np.arange(k), free] = 1.0
        elif k == d:
            basis = np.eye(d)
        else:
            qmat, _ = np.linalg.qr((pts[1:] - pts[0]).T)
            basis = np.ascontiguousarray(qmat[:, :k].T)
        self.basis[fid] = basis
        zloc = basis @ (pts.mean(axis=0) - pts[0])
        self.zloc[fid] = zloc
        if k < 2:
            return

        xpoly_root = (
            self.body.kind is Kind.CROSSPOLYTOPE and fid == self.root
        )
        my_set = set(map(int, self.vidx[fid]))
        gees, betas = [], []
        for cid in self.children[fid]:
            cpts = self.verts[self.vidx[cid]]
            if cube:
                pos = int(np.nonzero(np.ptp(cpts, axis=0)[free] == 0.0)[0][0])
                g = np.zeros(k)
                g[pos] = 1.0
            elif xpoly_root:
                g = cpts.sum(axis=0) / math.sqrt(k)
            else:
                omitted = (my_set - set(map(int, self.vidx[cid]))).pop()
                g = basis @ (cpts.mean(axis=0) - self.verts[omitted])
                g /= np.linalg.norm(g)
            beta = float(g @ (basis @ (cpts[0] - pts[0])))
            if beta - float(g @ zloc) < 0.0:
                g, beta = -g, -beta
            gees.append(g)
            betas.append(beta)
        gmat = np.array(gees)
        betas = np.array(betas)
        self.child_geom[fid] = (gmat, betas, betas - gmat @ zloc)

        u2s, plocs = [], []
        for sid in self.sub2[fid]:
            spts = self.verts[self.vidx[sid]]
            if cube:
                fixed = np.nonzero(np.ptp(spts, axis=0)[free] == 0.0)[0]
                u2 = np.zeros((k, 2))
                u2[fixed[0], 0] = 1.0
                u2[fixed[1], 1] = 1.0
            elif xpoly_root:
                support = {int(np.argmax(np.abs(v))) for v in spts}
                missing = (set(range(d)) - support).pop()
                x1 = np.zeros(d)
                x1[missing] = 1.0
                x2 = spts.sum(axis=0) / math.sqrt(len(spts))
                u2 = np.stack([x1, x2], axis=1)
            else:
                ce = spts.mean(axis=0)
                pair = sorted(my_set - set(map(int, self.vidx[sid])))
                x1 = basis @ (self.verts[pair[0]] - ce)
                x2 = basis @ (self.verts[pair[1]] - ce)
                x1 /= np.linalg.norm(x1)
                x2 -= float(x1 @ x2) * x1
                x2 /= np.linalg.norm(x2)
                u2 = np.stack([x1, x2], axis=1)
            u2s.append(u2)
            plocs.append(basis @ (spts[0] - pts[0]))
        self.sub2_geom[fid] = (u2s, plocs)


@lru_cache(maxsize=None)
def _lattice(kind: Kind, n: int) -> _Lattice:
    return _Lattice(Body(kind, n))


class _SectionContext:
    """Per-query state for the recursive section-volume computation.

    All distances are signed against precomputed outward normals in each
    face's local frame, so the pyramid apex may be any point of the cutting
    plane and no convex-hull points are ever materialised.
    """

    def __init__(self, lat: _Lattice, a: np.ndarray, t: float):
        self.lat = lat
        self.a = a
        self.t = t
        self.s = lat.verts @ a - t
        scale = max(1.0, abs(t), float(np.max(np.abs(self.s))) + abs(t))
        self.eps = TIE_EPS * scale
        self._has_on = bool(np.any(np.abs(self.s) <= self.eps))
        self._cls: dict = {}
        self._cross: dict = {}
        self._vol: dict = {}

    def cls(self, fid: int) -> int:
        out = self._cls.get(fid)
        if out is None:
            sv = self.s[self.lat.vidx[fid]]
            has_pos = bool(np.any(sv > self.eps))
            has_neg = bool(np.any(sv < -self.eps))
            if has_pos and has_neg:
                out = _TRANSVERSAL
            elif has_pos or has_neg:
                out = _ONE_SIDED
            else:
                out = _CONTAINED
            self._cls[fid] = out
        return out

    def crossing(self, eid: int) -> np.ndarray:
        pt = self._cross.get(eid)
        if pt is None:
            u, v = self.lat.edges[eid]
            su, sv = self.s[u], self.s[v]
            w = su / (su - sv)
            pt = (1.0 - w) * self.lat.verts[u] + w * self.lat.verts[v]
            self._cross[eid] = pt
        return pt

    def hyper_frame(self, fid: int):
        """Unit normal of the cutting plane in the face's local frame, its
        offset, and an apex point on the section (all local coordinates).

        The apex is the crossing of the segment joining the extreme
        vertices, which keeps the pyramid heights on the scale of the
        section itself and avoids cancellation for slivers near a vertex.
        """
        lat = self.lat
        aloc = lat.basis[fid] @ self.a
        alen = float(np.linalg.norm(aloc))
        if alen <= self.eps:
            return None
        hhat = aloc / alen
        tau = (self.t - float(lat.p0[fid] @ self.a)) / alen
        vidx = lat.vidx[fid]
        sv = self.s[vidx]
        ihi = int(np.argmax(sv))
        ilo = int(np.argmin(sv))
        shi, slo = float(sv[ihi]), float(sv[ilo])
        w = shi / (shi - slo)
        x = (1.0 - w) * lat.verts[vidx[ihi]] + w * lat.verts[vidx[ilo]]
        c = lat.basis[fid] @ (x - lat.p0[fid])
        return hhat, tau, c

    def vol(self, fid: int) -> float:
        """(k-1)-volume of the hyperplane cut through the k-face ``fid``."""
        v = self._vol.get(fid)
        if v is None:
            lat = self.lat
            k = lat.dim[fid]
            if k == 1:
                v = 1.0  # a transversally cut edge contributes a single point
            else:
                frame = self.hyper_frame(fid)
                if frame is None:
                    v = 0.0
                else:
                    hhat, _, c = frame
                    total = 0.0
                    gmat, betas, _ = lat.child_geom[fid]
                    gh = gmat @ hhat
                    height = betas - gmat @ c
                    for i, child in enumerate(lat.children[fid]):
                        if self.cls(child) != _TRANSVERSAL:
                            continue
                        pv = self.vol(child)
                        if pv == 0.0:
                            continue
                        sin2 = max(1.0 - gh[i] * gh[i], 1e-30)
                        total += pv * height[i] / math.sqrt(sin2)
                    if self._has_on:
                        u2s, plocs = lat.sub2_geom[fid]
                        for i, sub in enumerate(lat.sub2[fid]):
                            if self.cls(sub) != _CONTAINED:
                                continue
                            u2, p = u2s[i], plocs[i]
                            # in-plane unit normal of the contained subface
                            w = float(u2[:, 1] @ hhat) * u2[:, 0] - float(
                                u2[:, 0] @ hhat) * u2[:, 1]
                            wn = float(np.linalg.norm(w))
                            if wn <= 1e-12:
                                continue
                            w = w / wn
                            if float(w @ (lat.zloc[fid] - p)) > 0.0:
                                w = -w
                            total += lat.full_vol[sub] * float(w @ (p - c))
                    v = total / (k - 1)
            self._vol[fid] = v
        return v


@dataclass(frozen=True)
class SectionPolytope:
    """Vertex description of a section H_t(a) \\cap K."""

    query: SectionQuery
    vertices: np.ndarray

    @property
    def is_empty(self) -> bool:
        return self.vertices.shape[0] == 0


def _context(q: SectionQuery) -> _SectionContext:
    lat = _lattice(q.body.kind, q.body.n)
    return _SectionContext(lat, q.a.coords, q.t)


def section_vertices(q: SectionQuery) -> SectionPolytope:
    """All vertices of the section polytope (body vertices on the hyperplane
    plus crossing points of transversally cut edges)."""
    ctx = _context(q)
    lat = ctx.lat
    rows = [lat.verts[np.abs(ctx.s) <= ctx.eps]]
    for eid in range(len(lat.edges)):
        u, v = lat.edges[eid]
        if (ctx.s[u] > ctx.eps) != (ctx.s[v] > ctx.eps) and (
            abs(ctx.s[u]) > ctx.eps and abs(ctx.s[v]) > ctx.eps
        ):
            rows.append(ctx.crossing(eid)[None, :])
    pts = np.vstack(rows)
    return SectionPolytope(q, pts)


def section_volume_exact(q: SectionQuery) -> float:
    """(n-1)-volume of the section, by recursive face-lattice slicing."""
    ctx = _context(q)
    if ctx.cls(ctx.lat.root) != _TRANSVERSAL:
        return 0.0
    return ctx.vol(ctx.lat.root)


def perimeter_exact(q: SectionQuery) -> float:
    """(n-2)-volume of the section's relative boundary H \\cap bd K."""
    if q.body.n < 3:
        raise DimensionOutOfRange("perimeter needs n >= 3")
    ctx = _context(q)
    lat = ctx.lat
    if ctx.cls(lat.root) != _TRANSVERSAL:
        return 0.0
    total = 0.0
    for child in lat.children[lat.root]:
        if ctx.cls(child) == _TRANSVERSAL:
            total += ctx.vol(child)
    for sub in lat.sub2[lat.root]:
        if ctx.cls(sub) == _CONTAINED:
            total += lat.full_vol[sub]
    return total


class _CapContext(_SectionContext):
    """Adds the recursive volume of the cap ``{x in K : <a, x> >= t}``."""

    def __init__(self, lat, a, t):
        super().__init__(lat, a, t)
        self._cap: dict = {}

    def cap(self, fid: int) -> float:
        v = self._cap.get(fid)
        if v is not None:
            return v
        lat = self.lat
        sv = self.s[lat.vidx[fid]]
        if not np.any(sv < -self.eps):
            v = lat.full_vol[fid]
        elif not np.any(sv > self.eps):
            v = 0.0
        else:
            k = lat.dim[fid]
            if k == 1:
                top, bot = float(np.max(sv)), float(np.min(sv))
                v = lat.edge_length * top / (top - bot)
            else:
                # pyramid apex at the topmost vertex: every height is
                # nonnegative, so tiny caps do not suffer cancellation
                vidx = lat.vidx[fid]
                ihi = int(np.argmax(sv))
                vloc = lat.basis[fid] @ (lat.verts[vidx[ihi]] - lat.p0[fid])
                gmat, betas, _ = lat.child_geom[fid]
                heights = betas - gmat @ vloc
                total = 0.0
                for i, child in enumerate(lat.children[fid]):
                    if self.cls(child) == _CONTAINED:
                        continue  # lies in the lid plane, counted below
                    cv = self.cap(child)
                    if cv > 0.0:
                        total += cv * heights[i]
                lid = self.vol(fid)
                if lid > 0.0:
                    aloc = lat.basis[fid] @ self.a
                    total += lid * float(sv[ihi]) / float(np.linalg.norm(aloc))
                v = total / k
        self._cap[fid] = v
        return v


def cap_volume(q: SectionQuery) -> float:
    """n-volume of the part of the body above the hyperplane.

    Uses the closed pyramid formula in the vertex-separating regime and the
    recursive decomposition over the cap's vertex set otherwise.
    """
    body, t = q.body, q.t
    n = body.n
    hi = body.support(q.a.coords)
    lo = -body.support(-q.a.coords)
    if t >= hi - TIE_EPS:
        return 0.0
    if t <= lo + TIE_EPS:
        return body.volume()
    reg = regime_check(q)
    if reg.tag is RegimeTag.VERTEX_SEPARATING:
        b = reg.normalized
        if body.kind is Kind.SIMPLEX:
            h = b[0] - t
            return math.sqrt(n + 1.0) / math.factorial(n) * h ** n / np.prod(b[0] - b[1:])
        if body.kind is Kind.CROSSPOLYTOPE:
            h = b[0] - t
            return (
                2.0 ** (n - 1) / math.factorial(n)
                * b[0] ** (n - 2) * h ** n / np.prod(b[0] ** 2 - b[1:] ** 2)
            )
        h = 0.5 * float(np.sum(b)) - t
        return h ** n / (math.factorial(n) * float(np.prod(b)))
    lat = _lattice(body.kind, n)
    ctx = _CapContext(lat, q.a.coords, t)
    return ctx.cap(lat.root)


@dataclass(frozen=True)
class Estimate:
    """A Monte Carlo estimate with its standard error."""

    value: float
    stderr: float
    hits: int
    samples: int


def _body_diameter(body: Body) -> float:
    if body.kind is Kind.SIMPLEX:
        return math.sqrt(2.0)
    if body.kind is Kind.CROSSPOLYTOPE:
        return 2.0
    return math.sqrt(body.n)


def section_volume_mc(
    q: SectionQuery,
    samples: int,
    slab_eps: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
    min_hits: int = 100,
) -> Estimate:
    """Monte Carlo slab estimator for the section volume.

    Estimates ``vol_n({x in K : |<a,x> - t| <= eps}) / (2 eps)``.  The
    simplex is sampled exactly uniformly (flat Dirichlet), the cube
    directly, and the cross-polytope by rejection from its bounding box.
    """
    if rng is None:
        rng = np.random.default_rng(42)
    body, t = q.body, q.t
    n = body.n
    eps = slab_eps if slab_eps is not None else 1e-3 * _body_diameter(body)
    a = q.a.coords
    hits = 0
    chunk = 1 << 19
    done = 0
    if body.kind is Kind.SIMPLEX:
        box_vol = body.volume()
    elif body.kind is Kind.CUBE:
        box_vol = 1.0
    else:
        box_vol = 2.0 ** n
    while done < samples:
        m = min(chunk, samples - done)
        if body.kind is Kind.SIMPLEX:
            x = rng.dirichlet(np.ones(n + 1), size=m)
        elif body.kind is Kind.CUBE:
            x = rng.random((m, n)) - 0.5
        else:
            x = rng.uniform(-1.0, 1.0, size=(m, n))
        in_slab = np.abs(x @ a - t) <= eps
        if body.kind is Kind.CROSSPOLYTOPE:
            in_slab &= np.sum(np.abs(x), axis=1) <= 1.0
        hits += int(np.count_nonzero(in_slab))
        done += m
    if hits < min_hits:
        raise InsufficientHits(
            f"only {hits} slab hits out of {samples} samples (need {min_hits})"
        )
    p = hits / samples
    value = p * box_vol / (2.0 * eps)
    stderr = box_vol / (2.0 * eps) * math.sqrt(p * (1.0 - p) / samples)
    return Estimate(value, stderr, hits, samples)


# ---------------------------------------------------------------------------
# improper integral evaluators
# ---------------------------------------------------------------------------

def _residue_sum(c: np.ndarray) -> float:
    m = c.shape[0]
    total = 0.0
    for k in range(m):
        ck = c[k]
        if ck <= 0.0:
            continue
        denom = 1.0
        for j in range(m):
            if j != k:
                denom *= ck - c[j]
        total += ck ** (m - 2) / denom
    return total


def rational_product_integral(coeffs: Sequence[float]) -> float:
    """Evaluate ``(1/2 pi) Int_R prod_k 1/(1 + i c_k s) ds`` by residues.

    Zero coefficients are dropped (their factor is 1); at least two nonzero
    coefficients are required for absolute convergence.  Closing the contour
    in the upper half plane picks up the poles ``s = i/c_k`` with
    ``c_k > 0``.  Coefficients closer than ``1e-9 * max|c|`` are split by a
    symmetric perturbation ``+-delta`` and the two evaluations averaged.
    """
    c = np.asarray(coeffs, dtype=float)
    c = c[c != 0.0]
    m = c.shape[0]
    if m < 2:
        raise NotIntegrable("need at least two nonzero coefficients")
    scale = float(np.max(np.abs(c)))
    gaps = np.abs(c[:, None] - c[None, :])[np.triu_indices(m, 1)]
    if gaps.size and float(np.min(gaps)) < 1e-9 * scale:
        delta = 1e-7 * scale
        spread = (np.argsort(np.argsort(c, kind="stable"), kind="stable")
                  - (m - 1) / 2.0)
        val = 0.5 * (_residue_sum(c + delta * spread)
                     + _residue_sum(c - delta * spread))
    else:
        val = _residue_sum(c)
    if -1e-12 < val < 0.0:
        val = 0.0
    return val


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)


def _tail_exp_integral(omega: float, p: int, big_s: float) -> complex:
    """``Int_S^inf exp(i omega s) s^{-p} ds`` (p >= 1; p == 1 needs omega != 0)."""
    if abs(omega) < 1e-13:
        if p == 1:
            # only reached with a purely imaginary prefactor; real part drops out
            return 0.0 + 0.0j
        return big_s ** (1 - p) / (p - 1) + 0.0j
    si, ci = sici(abs(omega) * big_s)
    val = complex(-ci, math.copysign(1.0, omega) * (0.5 * math.pi - si))
    for q in range(2, p + 1):
        val = (np.exp(1j * omega * big_s) * big_s ** (1 - q)
               + 1j * omega * val) / (q - 1)
    return val


def _osc_tail(sin_w: np.ndarray, cos_w: np.ndarray, big_s: float) -> float:
    """Exact tail ``(2/pi) Int_S^inf prod sinc(a s) prod cos(b s) ds``.

    Expands the trigonometric product into complex exponentials; each term
    reduces to an incomplete exponential integral handled by
    :func:`_tail_exp_integral`.
    """
    m = sin_w.shape[0]
    kk = cos_w.shape[0]
    pref = (2.0 / math.pi) / float(np.prod(sin_w)) \
        * (1.0 / (2.0j)) ** m * 0.5 ** kk
    total = 0.0 + 0.0j
    for eps in product((1.0, -1.0), repeat=m):
        sgn = float(np.prod(eps))
        base = float(np.dot(eps, sin_w))
        for sig in product((1.0, -1.0), repeat=kk):
            omega = base + float(np.dot(sig, cos_w))
            total += sgn * _tail_exp_integral(omega, m, big_s)
    return float((pref * total).real)


def _osc_quadrature(sin_w, cos_w, big_s: float) -> float:
    omega_max = float(np.sum(sin_w) + np.sum(cos_w))
    width = math.pi / (4.0 * max(omega_max, 1e-6))
    npanels = max(8, int(math.ceil(big_s / width)))
    edges = np.linspace(0.0, big_s, npanels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    s = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    f = np.ones_like(s)
    for aj in sin_w:
        f *= np.sinc(aj * s / math.pi)
    for bk in cos_w:
        f *= np.cos(bk * s)
    return (2.0 / math.pi) * float(np.dot(w, f))


def _osc_integral(sin_w, cos_w, tol: float) -> float:
    """``(2/pi) Int_0^inf prod_j sinc(a_j s) prod_k cos(b_k s) ds``.

    Gauss-Legendre panels on ``[0, S]`` (at least eight panels per period of
    the fastest oscillation) plus the exact trigonometric tail; ``S`` is
    doubled until two successive evaluations agree within ``tol``.
    """
    sin_w = np.asarray(sin_w, dtype=float)
    cos_w = np.asarray(cos_w, dtype=float)
    big_s = 50.0
    prev = _osc_quadrature(sin_w, cos_w, big_s) + _osc_tail(sin_w, cos_w, big_s)
    for _ in range(6):
        big_s *= 2.0
        cur = _osc_quadrature(sin_w, cos_w, big_s) + _osc_tail(sin_w, cos_w, big_s)
        if abs(cur - prev) <= tol:
            return 0.5 * (cur + prev)
        prev = cur
    raise QuadratureFailure(
        f"sinc-product quadrature did not stabilize within tol={tol}"
    )


def sinc_product_integral(weights: Sequence[float], t: float,
                          tol: float = 1e-10) -> float:
    """Evaluate ``(2/pi) Int_0^inf prod_j sinc(w_j s) cos(2 t s) ds``.

    Weights equal to zero contribute a factor 1 and are dropped.  With a
    single nonzero weight the integral is the sharp indicator
    ``1/|w| * 1{2|t| < |w|}`` (value ``1/(2|w|)`` at equality) and is
    returned in closed form.
    """
    w = np.abs(np.asarray(weights, dtype=float))
    w = w[w > 1e-13]
    if w.shape[0] == 0:
        raise NotIntegrable("all weights are zero")
    if w.shape[0] == 1:
        c = float(w[0])
        gap = c - 2.0 * abs(t)
        if abs(gap) <= TIE_EPS:
            return 0.5 / c
        return 1.0 / c if gap > 0.0 else 0.0
    return _osc_integral(w, np.array([2.0 * abs(t)]), tol)


def sinc_cos_product_integral(sin_weights, cos_weights, t,
                              tol: float = 1e-10) -> float:
    """Like :func:`sinc_product_integral` with extra plain cosine factors."""
    w = np.abs(np.asarray(sin_weights, dtype=float))
    w = w[w > 1e-13]
    if w.shape[0] < 2:
        raise NotIntegrable("need at least two nonzero sinc weights")
    cos_w = np.abs(np.asarray(cos_weights, dtype=float))
    cos_w = np.append(cos_w, 2.0 * abs(t))
    return _osc_integral(w, cos_w, tol)
