"""Contour zero counting, boundary certificates, and zero localization.

The counting tool is the argument principle with adaptive phase tracking.
Certificates compare the two crossing terms Q_M + Q_{M+1} against the exact
head and a certified tail bound along cell boundaries; everything is carried
normalized by the positive real Q_M(sigma), which leaves winding numbers and
sign decisions untouched.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .geometry import CellRect, ComplexPoint, cell, dominant_index
from .scaled import ScaledComplex
from .series import (eval_deriv, head, log_term_mag, tail_ratio_upper)

HALF_PI = math.pi / 2.0
TWO_PI = 2.0 * math.pi
# a contour sample below this fraction of its neighbours' modulus is treated
# as a zero sitting (numerically) on the contour
REL_ZERO_FLOOR = math.log(1e-8)
MAX_SUBDIV_DEPTH = 48
INIT_SAMPLES_PER_EDGE = 64

Evaluator = Callable[[complex], ScaledComplex]


class ZeroOnContourError(Exception):
    """The contour passes too close to a zero for a reliable count."""

    def __init__(self, point: complex, message: str | None = None):
        self.point = point
        super().__init__(message or
                         f"evaluator vanishes (numerically) at contour point "
                         f"{point.real:.6f}+{point.imag:.6f}i")


class LocateError(Exception):
    """Newton and its quadrisection fallback both failed to converge."""

    def __init__(self, best: complex, message: str):
        self.best = best
        super().__init__(message)


@dataclass(frozen=True)
class Rect:
    sigma_lo: float
    sigma_hi: float
    t_lo: float
    t_hi: float

    def corners(self) -> list[complex]:
        return [complex(self.sigma_lo, self.t_lo),
                complex(self.sigma_hi, self.t_lo),
                complex(self.sigma_hi, self.t_hi),
                complex(self.sigma_lo, self.t_hi)]


@dataclass(frozen=True)
class WindingResult:
    count: int
    min_modulus_on_contour: float  # relative to the contour maximum
    samples: int
    refined: bool


@dataclass(frozen=True)
class ZeroRecord:
    location: ComplexPoint
    M: int
    k: int
    j: int
    residual: float
    simplicity_margin: float
    newton_iters: int
    predicted: ComplexPoint


@dataclass(frozen=True)
class RoucheCertificate:
    cell: CellRect
    min_gap: float
    samples_per_edge: int
    holds: bool
    failure_point: Optional[ComplexPoint] = None


def _wrap(phase: float) -> float:
    return (phase + math.pi) % TWO_PI - math.pi


class _PhaseWalker:
    """Accumulates the argument change of an evaluator along segments."""

    def __init__(self, evaluator: Evaluator):
        self.f = evaluator
        self.samples = 0
        self.refined = False
        self.min_log = math.inf
        self.max_log = -math.inf

    def probe(self, z: complex) -> ScaledComplex:
        v = self.f(z)
        self.samples += 1
        if v.is_zero():
            raise ZeroOnContourError(z)
        la = v.log_abs()
        self.min_log = min(self.min_log, la)
        self.max_log = max(self.max_log, la)
        return v

    def walk(self, za: complex, va: ScaledComplex, zb: complex,
             vb: ScaledComplex, depth: int = MAX_SUBDIV_DEPTH) -> float:
        d = _wrap(vb.arg() - va.arg())
        if abs(d) < HALF_PI:
            return d
        if depth == 0:
            raise ZeroOnContourError(
                0.5 * (za + zb),
                f"phase jump stays >= pi/2 after {MAX_SUBDIV_DEPTH} "
                f"subdivisions near {0.5 * (za + zb)}")
        self.refined = True
        zm = 0.5 * (za + zb)
        vm = self.probe(zm)
        if vm.log_abs() < max(va.log_abs(), vb.log_abs()) + REL_ZERO_FLOOR:
            raise ZeroOnContourError(zm)
        return (self.walk(za, va, zm, vm, depth - 1)
                + self.walk(zm, vm, zb, vb, depth - 1))


def winding_number(rect: Rect, evaluator: Evaluator,
                   samples_per_edge: int = INIT_SAMPLES_PER_EDGE,
                   sample_density: float = 0.0) -> WindingResult:
    """Zeros of the evaluator inside rect, by accumulated boundary phase.

    Segments whose endpoint phases differ by >= pi/2 are bisected until the
    jump resolves; failure to resolve, or a sample falling 10^-8 below its
    neighbours, raises ZeroOnContourError.  The bisection cannot detect a
    full phase turn hidden between two adjacent samples, so contours with
    rapid argument variation should raise ``sample_density`` (samples per
    unit of boundary length).
    """
    walker = _PhaseWalker(evaluator)
    corners = rect.corners()
    total = 0.0
    first_val: ScaledComplex | None = None
    prev_z: complex | None = None
    prev_v: ScaledComplex | None = None
    for edge in range(4):
        za, zb = corners[edge], corners[(edge + 1) % 4]
        n_edge = max(samples_per_edge,
                     math.ceil(abs(zb - za) * sample_density))
        for i in range(n_edge):
            z = za + (zb - za) * (i / n_edge)
            v = walker.probe(z)
            if first_val is None:
                first_val = v
            else:
                total += walker.walk(prev_z, prev_v, z, v)
            prev_z, prev_v = z, v
    total += walker.walk(prev_z, prev_v, corners[0], first_val)
    count = round(total / TWO_PI)
    if abs(total - TWO_PI * count) > 1e-6:
        raise ZeroOnContourError(
            corners[0], f"boundary phase {total:.3e} did not close to a "
            f"multiple of 2*pi")
    if count < 0:
        raise ValueError(f"negative winding count {count}: the evaluator is "
                         "not analytic inside the rectangle")
    return WindingResult(
        count=count,
        min_modulus_on_contour=math.exp(walker.min_log - walker.max_log),
        samples=walker.samples,
        refined=walker.refined,
    )


def series_evaluator(k: int, M_ref: int | None = None,
                     eps_rel: float = 1e-12) -> Evaluator:
    """Dirichlet-series evaluator normalized by a positive real scale.

    With M_ref fixed the scale is Q_{M_ref}(sigma); otherwise the dominant
    term at each sample's sigma.  Positive real rescaling leaves arguments,
    and hence winding numbers, unchanged.
    """

    def f(z: complex) -> ScaledComplex:
        res = eval_deriv(ComplexPoint(z.real, z.imag), k, eps_rel)
        n_ref = M_ref if M_ref is not None else dominant_index(z.real, k)
        scale = ScaledComplex.from_polar(log_term_mag(n_ref, k, z.real), 0.0)
        return res.value / scale

    return f


def cell_winding(M: int, k: int, j: int) -> WindingResult:
    """Winding number of the k-th derivative around cell(M, k, j)."""
    c = cell(M, k, j)
    rect = Rect(c.sigma_range[0], c.sigma_range[1],
                c.t_range[0], c.t_range[1])
    return winding_number(rect, series_evaluator(k, M_ref=M))


# ---------------------------------------------------------------------------
# boundary certificates


def _ratio_log(M: int, k: int, sigma: float) -> float:
    """log of Q_{M+1}(sigma) / Q_M(sigma)."""
    return log_term_mag(M + 1, k, sigma) - log_term_mag(M, k, sigma)


def _head_norm(M: int, k: int, sigma: float) -> float:
    """H_M(sigma) / Q_M(sigma), an exact positive sum."""
    if M == 2:
        return 0.0
    h = head(M, k, ComplexPoint(sigma, 0.0))
    return math.exp(h.log_abs() - log_term_mag(M, k, sigma))


def _tail_norm(M: int, k: int, sigma: float) -> float:
    """Certified bound on T_{M+1}(sigma) / Q_M(sigma), tail from M+2 on."""
    return tail_ratio_upper(M + 2, k, sigma, log_term_mag(M, k, sigma))


def _gap_at(M: int, k: int, sigma: float, t_delta: float) -> float:
    """Pointwise |Q_M+Q_{M+1}| - H - tail, normalized, at phase t*delta."""
    r = math.exp(_ratio_log(M, k, sigma))
    comparator = math.sqrt(1.0 + r * r + 2.0 * r * math.cos(t_delta))
    return comparator - _head_norm(M, k, sigma) - _tail_norm(M, k, sigma)


def _interval_lb(M: int, k: int, a: float, b: float) -> float:
    """Certified lower bound of the horizontal-edge gap on sigma in [a, b].

    In sigma, r and the tail bound decrease while the head increases, so
    (1 + r(b)) - head(b) - tail(a) bounds the gap from below on the whole
    subinterval -- no Lipschitz constant needed.
    """
    r = math.exp(_ratio_log(M, k, b))
    return 1.0 + r - _head_norm(M, k, b) - _tail_norm(M, k, a)


def rouche_certificate(M: int, k: int, j: int,
                       samples_per_edge: int = 256) -> RoucheCertificate:
    """Certify |zeta^(k) - (Q_M + Q_{M+1})| < |Q_M + Q_{M+1}| on the cell
    boundary, which pins the interior zero count to that of Q_M + Q_{M+1}.

    Vertical edges minimize the comparator in closed form (|1 - r| over a
    full period of the phase); horizontal edges are covered by monotone
    interval bounds with bisection refinement.
    """
    c = cell(M, k, j)
    s_lo, s_hi = c.sigma_range
    t_lo, t_hi = c.t_range
    delta = c.strip.delta
    min_gap = math.inf
    failure: Optional[ComplexPoint] = None

    # vertical edges: sigma fixed, phase sweeps a full period
    for sigma in (s_lo, s_hi):
        r = math.exp(_ratio_log(M, k, sigma))
        gap = (abs(1.0 - r) - _head_norm(M, k, sigma)
               - _tail_norm(M, k, sigma))
        min_gap = min(min_gap, gap)
        if gap <= 0.0 and failure is None:
            failure = ComplexPoint(sigma, 0.5 * (t_lo + t_hi))

    # horizontal edges: cos(t*delta) = 1 exactly on both cell lines
    for t in (t_lo, t_hi):
        td = t * delta
        for i in range(samples_per_edge):
            sigma = s_lo + (s_hi - s_lo) * (i + 0.5) / samples_per_edge
            gap = _gap_at(M, k, sigma, td)
            min_gap = min(min_gap, gap)
            if gap <= 0.0 and failure is None:
                failure = ComplexPoint(sigma, t)
        if failure is None:
            stack = [(s_lo + (s_hi - s_lo) * i / samples_per_edge,
                      s_lo + (s_hi - s_lo) * (i + 1) / samples_per_edge, 0)
                     for i in range(samples_per_edge)]
            while stack:
                a, b, depth = stack.pop()
                if _interval_lb(M, k, a, b) > 0.0:
                    continue
                if depth >= 12:
                    failure = ComplexPoint(0.5 * (a + b), t)
                    break
                m = 0.5 * (a + b)
                stack.append((a, m, depth + 1))
                stack.append((m, b, depth + 1))

    return RoucheCertificate(cell=c, min_gap=min_gap,
                             samples_per_edge=samples_per_edge,
                             holds=failure is None and min_gap > 0.0,
                             failure_point=failure)


def hline_margin(M: int, k: int, j: int, samples: int = 512) -> float:
    """Minimum over the cell line t = 2*pi*j/delta of the certified
    lower bound (1/sqrt 2)(Q_M + Q_{M+1}) - H_M - tail, normalized by Q_M.

    A positive value certifies the k-th derivative has no zero on that
    horizontal segment; a negative one is a finding to report, not an error.
    """
    c = cell(M, k, max(j, 0))
    s_lo, s_hi = c.sigma_range
    inv_sqrt2 = 1.0 / math.sqrt(2.0)

    def g(sigma: float) -> float:
        r = math.exp(_ratio_log(M, k, sigma))
        return (inv_sqrt2 * (1.0 + r) - _head_norm(M, k, sigma)
                - _tail_norm(M, k, sigma))

    xs = [s_lo + (s_hi - s_lo) * i / (samples - 1) for i in range(samples)]
    vals = [g(x) for x in xs]
    i_min = min(range(samples), key=vals.__getitem__)
    best = vals[i_min]
    # local ternary refinement around the sampled minimum
    a = xs[max(i_min - 1, 0)]
    b = xs[min(i_min + 1, samples - 1)]
    for _ in range(40):
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        v1, v2 = g(m1), g(m2)
        best = min(best, v1, v2)
        if v1 < v2:
            b = m2
        else:
            a = m1
    return best


# ---------------------------------------------------------------------------
# localization


def _normalized_residual(s: ComplexPoint, k: int) -> float:
    res = eval_deriv(s, k)
    ref = log_term_mag(dominant_index(s.sigma, k), k, s.sigma)
    return math.exp(res.value.log_abs() - ref)


def _newton_from(start: complex, k: int, tol: float, c: CellRect,
                 max_iters: int = 60) -> tuple[complex, int] | None:
    """Newton on the k-th derivative; None if the iterate escapes the cell
    twice or fails to converge."""
    z = start
    escapes = 0
    for it in range(1, max_iters + 1):
        f = eval_deriv(ComplexPoint(z.real, z.imag), k).value
        fp = eval_deriv(ComplexPoint(z.real, z.imag), k + 1).value
        if fp.is_zero():
            return None
        step = -(f / fp).to_complex()
        z = z + step
        if not c.contains(z.real, z.imag):
            escapes += 1
            if escapes >= 2:
                return None
            z = complex(
                min(max(z.real, c.sigma_range[0] + 1e-9),
                    c.sigma_range[1] - 1e-9),
                min(max(z.imag, c.t_range[0] + 1e-9), c.t_range[1] - 1e-9))
        if abs(step) < tol:
            return z, it
    return None


def _quadrants(rect: Rect) -> list[Rect]:
    sm = 0.5 * (rect.sigma_lo + rect.sigma_hi)
    tm = 0.5 * (rect.t_lo + rect.t_hi)
    return [Rect(rect.sigma_lo, sm, rect.t_lo, tm),
            Rect(sm, rect.sigma_hi, rect.t_lo, tm),
            Rect(rect.sigma_lo, sm, tm, rect.t_hi),
            Rect(sm, rect.sigma_hi, tm, rect.t_hi)]


def locate_zero(M: int, k: int, j: int, tol: float = 1e-12) -> ZeroRecord:
    """Refine the predicted cell zero by Newton; quadrisect by winding and
    restart if Newton wanders out of the cell."""
    c = cell(M, k, j)
    start = c.predicted_zero.to_complex()
    result = _newton_from(start, k, tol, c)
    if result is None:
        evaluator = series_evaluator(k, M_ref=M)
        rect = Rect(c.sigma_range[0], c.sigma_range[1],
                    c.t_range[0], c.t_range[1])
        for _ in range(6):
            sub = None
            for quad in _quadrants(rect):
                if winding_number(quad, evaluator).count == 1:
                    sub = quad
                    break
            if sub is None:
                break
            rect = sub
            center = complex(0.5 * (rect.sigma_lo + rect.sigma_hi),
                             0.5 * (rect.t_lo + rect.t_hi))
            result = _newton_from(center, k, tol, c)
            if result is not None:
                break
    if result is None:
        raise LocateError(
            start, f"no convergence in cell (M={M}, k={k}, j={j})")
    z, iters = result
    loc = ComplexPoint(z.real, z.imag)
    fp = eval_deriv(loc, k + 1)
    margin = math.exp(fp.value.log_abs()
                      - log_term_mag(dominant_index(z.real, k + 1), k + 1,
                                     z.real))
    return ZeroRecord(
        location=loc, M=M, k=k, j=j,
        residual=_normalized_residual(loc, k),
        simplicity_margin=margin,
        newton_iters=iters,
        predicted=c.predicted_zero,
    )


def enumerate_zeros(M: int, k: int, T: float,
                    tol: float = 1e-12) -> tuple[list[ZeroRecord], int]:
    """All strip-S_M zeros of the k-th derivative with 0 < t <= T, plus the
    count N at height T."""
    if T <= 0.0:
        raise ValueError(f"enumerate_zeros needs T > 0, got {T}")
    c0 = cell(M, k, 0)
    delta = c0.strip.delta
    j_max = math.ceil(T * delta / TWO_PI)
    records = []
    for j in range(j_max):
        rec = locate_zero(M, k, j, tol)
        if rec.location.t <= T:
            records.append(rec)
    return records, len(records)
