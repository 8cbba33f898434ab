import math
import random

import pytest

from zetaderiv.geometry import ComplexPoint, cell, q_value, strip, wedge
from zetaderiv.scaled import ScaledComplex
from zetaderiv.zeros import (Rect, ZeroOnContourError, cell_winding,
                             enumerate_zeros, hline_margin, locate_zero,
                             rouche_certificate, series_evaluator,
                             winding_number)


def _poly_evaluator(root: complex, power: int = 1):
    def f(z: complex) -> ScaledComplex:
        return ScaledComplex.from_complex((z - root) ** power)
    return f


def test_winding_simple_zero():
    res = winding_number(Rect(0.0, 2.0, 0.0, 2.0), _poly_evaluator(1 + 1j))
    assert res.count == 1


def test_winding_double_zero():
    res = winding_number(Rect(0.0, 2.0, 0.0, 2.0),
                         _poly_evaluator(1 + 1j, power=2))
    assert res.count == 2


def test_winding_no_zero():
    res = winding_number(Rect(2.0, 3.0, 2.0, 3.0), _poly_evaluator(0j))
    assert res.count == 0
    assert res.min_modulus_on_contour > 0.0


def test_winding_zero_on_contour_detected():
    with pytest.raises(ZeroOnContourError):
        winding_number(Rect(0.0, 2.0, 0.0, 2.0), _poly_evaluator(1 + 0j))


def test_winding_scaling_invariance():
    # multiplying by any positive real function of sigma keeps the count
    base = series_evaluator(38, M_ref=2)
    c = cell(2, 38, 0)
    rect = Rect(c.sigma_range[0], c.sigma_range[1],
                c.t_range[0], c.t_range[1])
    want = winding_number(rect, base).count
    scalings = [lambda s: 1e6, lambda s: math.exp(3.0 * s),
                lambda s: 1.0 / (1.0 + s * s)]
    for g in scalings:
        def scaled(z, g=g):
            return base(z) * g(z.real)
        assert winding_number(rect, scaled).count == want


def test_cell_winding_counts_one():
    assert cell_winding(2, 38, 0).count == 1
    assert cell_winding(3, 100, 2).count == 1


def test_wedge_interior_winding_zero():
    w = wedge(2)
    k = 38
    lo = w.sigma_left(k) + 0.5
    res = winding_number(Rect(lo, lo + 5.0, 1.0, 9.0), series_evaluator(k))
    assert res.count == 0


def test_rouche_certificate_examples():
    for (M, k, j) in [(2, 38, 0), (3, 100, 0), (2, 100, 4)]:
        c = rouche_certificate(M, k, j)
        assert c.holds
        assert c.min_gap > 0.0
        assert c.failure_point is None
        assert c.samples_per_edge == 256


def test_rouche_consistency_with_winding():
    rng = random.Random(7)
    for _ in range(4):
        M, k = rng.choice([(2, 38), (2, 100), (3, 100)])
        j = rng.randrange(0, 6)
        if rouche_certificate(M, k, j).holds:
            assert cell_winding(M, k, j).count == 1


def test_hline_margin_positive():
    assert hline_margin(2, 38, 1) > 0.0
    assert hline_margin(3, 100, 2) > 0.0
    assert hline_margin(2, 800, 0) > 0.0


def test_locate_zero_k38():
    rec = locate_zero(2, 38, 0, 1e-12)
    assert abs(rec.location.sigma - 43.16) < 0.3
    assert abs(rec.location.t - 7.7475) < 0.2
    assert rec.residual < 1e-10
    assert rec.simplicity_margin > 1e-6
    assert rec.newton_iters <= 60
    c = cell(2, 38, 0)
    assert c.contains(rec.location.sigma, rec.location.t)


def test_locate_zero_convergence_to_line():
    r38 = locate_zero(2, 38, 0)
    r200 = locate_zero(2, 200, 0)
    q2 = q_value(2)
    assert abs(r200.location.sigma - q2 * 200) < abs(
        r38.location.sigma - q2 * 38)


def test_locate_zero_m3():
    rec = locate_zero(3, 100, 0, 1e-12)
    c = cell(3, 100, 0)
    assert c.contains(rec.location.sigma, rec.location.t)
    assert rec.simplicity_margin > 0.0


def test_enumerate_zeros_sanctioned_heights():
    sp = strip(2, 38)
    for j in (1, 3, 5):
        records, n = enumerate_zeros(2, 38, j * sp.period)
        assert n == j
        assert [r.j for r in records] == list(range(j))


def test_enumerate_zeros_rejects_bad_T():
    with pytest.raises(ValueError):
        enumerate_zeros(2, 38, -1.0)


def test_zero_ordinates_periodic():
    sp = strip(2, 38)
    records, _ = enumerate_zeros(2, 38, 3 * sp.period)
    for r in records:
        want = (2 * r.j + 1) * math.pi / sp.delta
        assert abs(r.location.t - want) < 0.1 * sp.period
