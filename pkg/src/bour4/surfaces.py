"""Family-agnostic curvature machinery for spacelike surfaces in Minkowski 4-space.

Everything here is derived only from the ambient inner product and the
standard definitions of the fundamental forms, so it serves as the oracle
against which closed-form family formulas are checked:

    g11 = <Xu,Xu>   g12 = <Xu,Xv>   g22 = <Xv,Xv>     W = det g
    b^i_jk = <X_jk, N_i>
    H_i = (b^i_11 g22 - 2 b^i_12 g12 + b^i_22 g11) / (2W)
    H   = eps1 H1 N1 + eps2 H2 N2
    K   = (eps1 (b^1_11 b^1_22 - b^1_12^2) + eps2 (b^2_11 b^2_22 - b^2_12^2)) / W
    nu  = (Xu ^ Xv) / sqrt(W)

The surface is required to be spacelike (W > 0) wherever frames, curvatures,
or the Gauss map are requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Callable, NamedTuple, Sequence

from .errors import DegenerateSurfaceError, FrameFailureError, NotSpacelikeError
from .lorentz import (E1, E2, E3, E4, Bivector6, CausalClass, Vec4,
                      minkowski_dot, wedge)


class SurfaceJet(NamedTuple):
    """Position and derivatives through second order at one parameter point."""

    X: Vec4
    Xu: Vec4
    Xv: Vec4
    Xuu: Vec4
    Xuv: Vec4
    Xvv: Vec4


class FirstForm(NamedTuple):
    g11: float
    g12: float
    g22: float
    W: float


@dataclass(frozen=True)
class Frame:
    """Orthonormal tangent pair e1, e2 and normal pair N1 (spacelike), N2 (timelike)."""

    e1: Vec4
    e2: Vec4
    N1: Vec4
    N2: Vec4
    eps1: int = 1
    eps2: int = -1


class SecondForm(NamedTuple):
    b11: float
    b12: float
    b22: float


@dataclass(frozen=True)
class CurvatureReport:
    first: FirstForm
    b1: SecondForm
    b2: SecondForm
    H1: float
    H2: float
    Hvec: Vec4
    K: float
    Hclass: CausalClass
    minimal: bool

    @property
    def marginally_trapped(self) -> bool:
        return (not self.minimal) and self.Hclass is CausalClass.LIGHTLIKE

    @property
    def H_sup(self) -> float:
        return max(abs(c) for c in self.Hvec)


# ---------------------------------------------------------------------------
# finite-difference jets (the numeric oracle for closed-form parametrizations)

def numeric_jet(surface: Callable[[float, float], Vec4], u: float, v: float,
                h: float | None = None) -> SurfaceJet:
    """Second-order central differences on a 5x5 stencil, Richardson-extrapolated once.

    The default step is 1e-3 * max(1, |u|, |v|); the result has O(h^4) error
    on smooth surfaces.
    """
    if h is None:
        h = 1e-3 * max(1.0, abs(u), abs(v))
    s = 0.5 * h
    # stencil indexed by offsets in units of s = h/2
    pts = {}
    for i in (-2, -1, 0, 1, 2):
        for j in (-2, -1, 0, 1, 2):
            pts[(i, j)] = surface(u + i * s, v + j * s)

    def rich(coarse: Vec4, fine: Vec4) -> Vec4:
        return (fine * 4.0 - coarse) * (1.0 / 3.0)

    def d1(axis):
        if axis == 0:
            coarse = (pts[(2, 0)] - pts[(-2, 0)]) * (1.0 / (2.0 * h))
            fine = (pts[(1, 0)] - pts[(-1, 0)]) * (1.0 / h)
        else:
            coarse = (pts[(0, 2)] - pts[(0, -2)]) * (1.0 / (2.0 * h))
            fine = (pts[(0, 1)] - pts[(0, -1)]) * (1.0 / h)
        return rich(coarse, fine)

    def d2(axis):
        c = pts[(0, 0)] * 2.0
        if axis == 0:
            coarse = (pts[(2, 0)] + pts[(-2, 0)] - c) * (1.0 / (h * h))
            fine = (pts[(1, 0)] + pts[(-1, 0)] - c) * (4.0 / (h * h))
        else:
            coarse = (pts[(0, 2)] + pts[(0, -2)] - c) * (1.0 / (h * h))
            fine = (pts[(0, 1)] + pts[(0, -1)] - c) * (4.0 / (h * h))
        return rich(coarse, fine)

    def dmix():
        coarse = (pts[(2, 2)] - pts[(2, -2)] - pts[(-2, 2)] + pts[(-2, -2)]) * (1.0 / (4.0 * h * h))
        fine = (pts[(1, 1)] - pts[(1, -1)] - pts[(-1, 1)] + pts[(-1, -1)]) * (1.0 / (h * h))
        return rich(coarse, fine)

    return SurfaceJet(pts[(0, 0)], d1(0), d1(1), d2(0), dmix(), d2(1))


# ---------------------------------------------------------------------------
# fundamental forms and frames

DEGENERACY_TOL = 1e-12


def first_form(j: SurfaceJet, require_spacelike: bool = False,
               tol: float = DEGENERACY_TOL) -> FirstForm:
    g11 = minkowski_dot(j.Xu, j.Xu)
    g12 = minkowski_dot(j.Xu, j.Xv)
    g22 = minkowski_dot(j.Xv, j.Xv)
    return finalize_first_form(g11, g12, g22, None, require_spacelike, tol)


def finalize_first_form(g11, g12, g22, W=None, require_spacelike=False,
                        tol=DEGENERACY_TOL) -> FirstForm:
    """Shared validation: degenerate surfaces are excluded, W < 0 optionally too."""
    if W is None:
        W = g11 * g22 - g12 * g12
    scale = abs(g11 * g22) + g12 * g12
    if abs(W) <= tol * scale or scale == 0.0:
        raise DegenerateSurfaceError(
            f"first fundamental form degenerate: W = {W!r}")
    if require_spacelike and W < 0.0:
        raise NotSpacelikeError(f"W = {W!r} < 0: surface is timelike here")
    return FirstForm(g11, g12, g22, W)


DEFAULT_SEEDS: tuple[Vec4, ...] = (E3, E4, E1, E2)


def orthonormal_frame(j: SurfaceJet, seeds: Sequence[Vec4] = DEFAULT_SEEDS,
                      align_to: Frame | None = None) -> Frame:
    """Tangent frame from the standard formulas plus a seeded Gram-Schmidt normal pair.

    e1 = Xu/sqrt(g11), e2 = (g11 Xv - g12 Xu)/sqrt(W g11).  Candidate seeds are
    projected onto the normal plane in turn; the first two projections with
    non-negligible causal norm give the normal pair, relabeled so N1 is
    spacelike and N2 timelike.  Pass ``align_to`` to fix both normal signs
    against a reference frame (normal planes must agree).
    """
    ff = first_form(j, require_spacelike=True)
    if ff.g11 <= 0.0:
        raise FrameFailureError(f"g11 = {ff.g11!r} <= 0 on a spacelike surface")
    e1 = j.Xu * (1.0 / sqrt(ff.g11))
    e2 = (j.Xv * ff.g11 - j.Xu * ff.g12) * (1.0 / sqrt(ff.W * ff.g11))

    normals = []
    for seed in seeds:
        n = seed - e1 * minkowski_dot(seed, e1) - e2 * minkowski_dot(seed, e2)
        for prev, eps_prev in normals:
            n = n - prev * (eps_prev * minkowski_dot(n, prev))
        q = minkowski_dot(n, n)
        if abs(q) > 1e-10 * (1.0 + n.euclid_sq()):
            eps = 1 if q > 0.0 else -1
            normals.append((n * (1.0 / sqrt(abs(q))), eps))
            if len(normals) == 2:
                break
    if len(normals) < 2:
        raise FrameFailureError("no usable normal seeds: normal plane is numerically null")
    (na, ea), (nb, eb) = normals
    if ea + eb != 0:
        raise FrameFailureError("normal plane does not have signature (+,-)")
    N1, N2 = (na, nb) if ea > 0 else (nb, na)
    if align_to is not None:
        if minkowski_dot(N1, align_to.N1) < 0.0:
            N1 = -N1
        if minkowski_dot(N2, align_to.N2) > 0.0:  # timelike pair: aligned means dot < 0
            N2 = -N2
    return Frame(e1, e2, N1, N2)


# ---------------------------------------------------------------------------
# curvature

def classify_mean_curvature(Hvec: Vec4, H1: float, H2: float,
                            band: float = 1e-8) -> tuple[bool, CausalClass]:
    """Minimal / causal classification with explicit tolerance bands."""
    scale = max(1.0, abs(H1), abs(H2))
    sup = max(abs(c) for c in Hvec)
    if sup < band * scale:
        return True, CausalClass.SPACELIKE  # zero vector convention
    hsq = minkowski_dot(Hvec, Hvec)
    if abs(hsq) < band * scale * scale:
        return False, CausalClass.LIGHTLIKE
    return False, CausalClass.SPACELIKE if hsq > 0 else CausalClass.TIMELIKE


def assemble_report(ff: FirstForm, frame: Frame, b1: SecondForm,
                    b2: SecondForm) -> CurvatureReport:
    """Mean/Gauss curvature from fundamental-form data (shared with closed forms)."""
    H1 = (b1.b11 * ff.g22 - 2.0 * b1.b12 * ff.g12 + b1.b22 * ff.g11) / (2.0 * ff.W)
    H2 = (b2.b11 * ff.g22 - 2.0 * b2.b12 * ff.g12 + b2.b22 * ff.g11) / (2.0 * ff.W)
    Hvec = frame.N1 * (frame.eps1 * H1) + frame.N2 * (frame.eps2 * H2)
    K = (frame.eps1 * (b1.b11 * b1.b22 - b1.b12 ** 2)
         + frame.eps2 * (b2.b11 * b2.b22 - b2.b12 ** 2)) / ff.W
    minimal, hclass = classify_mean_curvature(Hvec, H1, H2)
    return CurvatureReport(ff, b1, b2, H1, H2, Hvec, K, hclass, minimal)


def curvature_report(j: SurfaceJet, frame: Frame | None = None) -> CurvatureReport:
    if frame is None:
        frame = orthonormal_frame(j)
    ff = first_form(j, require_spacelike=True)
    b1 = SecondForm(minkowski_dot(j.Xuu, frame.N1),
                    minkowski_dot(j.Xuv, frame.N1),
                    minkowski_dot(j.Xvv, frame.N1))
    b2 = SecondForm(minkowski_dot(j.Xuu, frame.N2),
                    minkowski_dot(j.Xuv, frame.N2),
                    minkowski_dot(j.Xvv, frame.N2))
    return assemble_report(ff, frame, b1, b2)


def gauss_map(j: SurfaceJet) -> Bivector6:
    """Unit 2-vector (Xu ^ Xv)/sqrt(W) representing the oriented tangent plane."""
    ff = first_form(j, require_spacelike=True)
    return wedge(j.Xu, j.Xv) * (1.0 / sqrt(ff.W))


def normal_plane_residual(f1: Frame, f2: Frame) -> float:
    """How far apart two frames' normal planes are (0 when they coincide).

    Each normal of f1 is projected onto the normal plane of f2; the residual
    is the largest euclidean norm of what is left over.
    """
    worst = 0.0
    for n in (f1.N1, f1.N2):
        proj = (f2.N1 * minkowski_dot(n, f2.N1) * f2.eps1
                + f2.N2 * minkowski_dot(n, f2.N2) * f2.eps2)
        worst = max(worst, sqrt((n - proj).euclid_sq()))
    return worst
