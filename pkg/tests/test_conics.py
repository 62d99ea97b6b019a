import math

import pytest

from ckgeom import conics as cn
from ckgeom import errors
from ckgeom import projective as pj
from ckgeom.projective import (
    Quadrangle,
    affine_point,
    cross_ratio_points,
    hline,
    hpoint,
    join_points,
    meet_lines,
    points_equal,
)
from conftest import interior_point


@pytest.fixture(scope="module")
def circle():
    return cn.unit_circle()


def circle_pt(t):
    return hpoint(math.cos(t), math.sin(t), 1.0)


def test_polar_examples(circle):
    assert pj.lines_equal(cn.polar(circle, affine_point(0, 0)), hline(0, 0, 1))
    assert pj.lines_equal(cn.polar(circle, affine_point(1, 0)), hline(1, 0, -1))


def test_pole_examples(circle):
    assert points_equal(cn.pole(circle, hline(0, 1, 0)), hpoint(0, 1, 0))
    assert points_equal(cn.pole(circle, hline(0, 0, 1)), affine_point(0, 0))
    # pole of a tangent line is its contact point
    t = 1.234
    tang = cn.tangent_line(circle, circle_pt(t))
    assert points_equal(cn.pole(circle, tang), circle_pt(t))


def test_pole_polar_roundtrip(circle, rng):
    for _ in range(30):
        p = affine_point(rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert points_equal(cn.pole(circle, cn.polar(circle, p)), p)


def test_polarity_preserves_incidence(circle, rng):
    # P on q  <=>  pole(q) on polar(P); polars of collinear points concur
    for _ in range(20):
        p1 = affine_point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        p2 = affine_point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        p3mid = hpoint(p1[0] + p2[0], p1[1] + p2[1], p1[2] + p2[2])
        lines = [cn.polar(circle, p) for p in (p1, p2, p3mid)]
        assert pj.concurrency_residual(*lines) < 1e-12


def test_degenerate_conic_rejected():
    pair = cn.Conic(0, 0, 0, 0.5, 0, 0)  # xy = 0, a line pair
    assert pair.is_degenerate()
    with pytest.raises(errors.DegenerateConic):
        cn.polar(pair, affine_point(1, 1))


def test_line_conic_meet_cases(circle):
    m = cn.line_conic_meet(circle, hline(0, 1, 0))
    assert m.status == cn.SECANT
    xs = sorted((p[0] / p[2]).real for p in m.points)
    assert abs(xs[0] + 1) < 1e-12 and abs(xs[1] - 1) < 1e-12
    m2 = cn.line_conic_meet(circle, hline(1, 0, -2))  # x = 2
    assert m2.status == cn.EXTERIOR
    ys = sorted((p[1] / p[0] * 2).imag for p in m2.points)
    assert abs(ys[0] + math.sqrt(3)) < 1e-12 and abs(ys[1] - math.sqrt(3)) < 1e-12
    m3 = cn.line_conic_meet(cn.unit_imaginary_conic(), hline(0, 1, 0))
    assert all(cn.conic_residual(cn.unit_imaginary_conic(), p) < 1e-12
               for p in m3.points)
    assert all(not pj.is_real_triple(p) for p in m3.points)
    m4 = cn.line_conic_meet(circle, hline(0, 1, -1))  # y = 1 tangent
    assert m4.status == cn.TANGENT
    assert points_equal(m4.points[0], affine_point(0, 1))


def test_conjugate_point(circle, rng):
    q = cn.conjugate_point(circle, affine_point(0, 0), hline(0, 1, 0))
    assert points_equal(q, hpoint(1, 0, 0))
    p_on = circle_pt(0.0)
    line = join_points(p_on, affine_point(0.2, 0.3))
    assert points_equal(cn.conjugate_point(circle, p_on, line), p_on)
    # (UV Q Q_p) = -1 and involutivity on a random secant line
    a = affine_point(0.21, -0.33)
    b = affine_point(-0.5, 0.4)
    line = join_points(a, b)
    ap = cn.conjugate_point(circle, a, line)
    assert points_equal(cn.conjugate_point(circle, ap, line), a)
    u, v = cn.line_conic_meet(circle, line).points
    assert abs(cross_ratio_points(u, v, a, ap) + 1.0) < 1e-10
    with pytest.raises(errors.PointNotOnLine):
        cn.conjugate_point(circle, affine_point(5, 5), line)


def test_conjugate_line(circle):
    # center with the x-axis maps to the y-axis
    q = cn.conjugate_line(circle, hline(0, 1, 0), affine_point(0, 0))
    assert pj.lines_equal(q, hline(1, 0, 0))
    # a tangent line through an exterior point is self-conjugate
    tang = cn.tangent_line(circle, circle_pt(0.7))
    ext = meet_lines(tang, hline(1, 0, -2))
    assert pj.lines_equal(cn.conjugate_line(circle, tang, ext), tang, 1e-8)
    # double application returns the line
    p = affine_point(0.3, 0.2)
    q0 = join_points(p, affine_point(-0.5, 0.8))
    q1 = cn.conjugate_line(circle, q0, p)
    q2 = cn.conjugate_line(circle, q1, p)
    assert pj.lines_equal(q2, q0)
    with pytest.raises(errors.PointOnConic):
        cn.conjugate_line(circle, join_points(circle_pt(0.3), affine_point(0, 0)),
                          circle_pt(0.3))


def test_conic_through_five_roundtrip(circle):
    pts = [circle_pt(t) for t in (0.1, 0.9, 2.2, 3.3, 5.1)]
    fit = cn.conic_through_five(pts)
    assert fit.klass == cn.REAL
    sixth = circle_pt(4.2)
    assert cn.conic_residual(fit, sixth) < 1e-12


def test_conic_through_five_collinear_degenerate():
    pts = [affine_point(t, 0) for t in (0, 1, 2)] + \
        [affine_point(0, 1), affine_point(1, 2)]
    fit = cn.conic_through_five(pts)
    assert fit.klass == cn.DEGENERATE


def test_conic_fit_classification():
    assert cn.unit_imaginary_conic().klass == cn.IMAGINARY
    assert cn.unit_circle().klass == cn.REAL


def test_cross_ratio_on_conic(circle):
    a, b = circle_pt(0), circle_pt(math.pi)
    c, d = circle_pt(math.pi / 2), circle_pt(3 * math.pi / 2)
    assert abs(cn.cross_ratio_on_conic(circle, a, b, c, d) + 1.0) < 1e-10
    # swapping the first pair inverts the value (identity 2.2a on the conic)
    pts = [circle_pt(t) for t in (0.3, 1.1, 2.0, 4.4)]
    r = cn.cross_ratio_on_conic(circle, *pts)
    r_swap = cn.cross_ratio_on_conic(circle, pts[1], pts[0], pts[2], pts[3])
    assert abs(r_swap - 1.0 / r) < 1e-9
    with pytest.raises(errors.PointNotOnConic):
        cn.cross_ratio_on_conic(circle, affine_point(0, 0), *pts[1:])


def test_steiner_auxiliary_independence(circle, rng):
    # two explicit auxiliary points give the same value
    pts = [circle_pt(t) for t in (0.2, 1.4, 2.6, 5.0)]
    vals = []
    for t_aux in (3.6, 4.3):
        x = circle_pt(t_aux)
        lines = [join_points(x, p) for p in pts]
        vals.append(pj.cross_ratio_lines(*lines))
    assert abs(vals[0] - vals[1]) < 1e-10


def test_self_polar_diagonal_triangle(circle, rng):
    # diagonal triangle of an inscribed quadrangle is self-polar
    for _ in range(10):
        ts = sorted(rng.uniform(0, 2 * math.pi) for _ in range(4))
        if min((ts[(i + 1) % 4] - ts[i]) % (2 * math.pi) for i in range(4)) < 0.3:
            continue
        q = Quadrangle(*(circle_pt(t) for t in ts))
        diag = q.diagonal_points()
        for i in range(3):
            side = join_points(diag[(i + 1) % 3], diag[(i + 2) % 3])
            assert points_equal(cn.pole(circle, side), diag[i], 1e-8)


def test_quadrangle_polar_drawing_algorithm(circle, rng):
    # the secant-quadrangle construction of the polar of an interior point
    for _ in range(10):
        p = interior_point(rng, 0.8)
        l1 = join_points(p, interior_point(rng, 0.9))
        l2 = join_points(p, interior_point(rng, 0.9))
        if pj.lines_equal(l1, l2):
            continue
        a1, a2 = cn.line_conic_meet(circle, l1).points
        b1, b2 = cn.line_conic_meet(circle, l2).points
        q = Quadrangle(a1, a2, b1, b2)
        diag = [d for d in q.diagonal_points() if not points_equal(d, p, 1e-7)]
        assert len(diag) == 2
        constructed = join_points(diag[0], diag[1])
        assert pj.lines_equal(constructed, cn.polar(circle, p), 1e-7)


def test_polarity_preserves_cross_ratio(circle, rng):
    for _ in range(10):
        base = join_points(interior_point(rng), interior_point(rng))
        i, j = pj.chart_axes(base)
        pts = []
        t = 0.1
        while len(pts) < 4:
            t += rng.uniform(0.3, 1.0)
            k = 3 - i - j
            coords = [0j, 0j, 0j]
            coords[i], coords[j] = 1.0, t
            coords[k] = -(base[i] + base[j] * t) / base[k]
            pts.append(hpoint(*coords))
        r0 = cross_ratio_points(*pts)
        polars = [cn.polar(circle, p) for p in pts]
        r1 = pj.cross_ratio_lines(*polars)
        assert abs(r1 - r0) < 1e-9 * max(1.0, abs(r0))
        # conjugacy on the line also preserves the cross ratio
        conj = [cn.conjugate_point(circle, p, base) for p in pts]
        r2 = cross_ratio_points(*conj)
        assert abs(r2 - r0) < 1e-9 * max(1.0, abs(r0))


def test_eleven_point_conic_members(rng):
    for _ in range(5):
        pts = [interior_point(rng, 1.3) for _ in range(4)]
        try:
            q = Quadrangle(*pts)
            line = join_points(affine_point(4, 1), affine_point(1, 5))
            conic, eleven = cn.eleven_point_conic(q, line)
        except errors.GeometryError:
            continue
        assert max(cn.conic_residual(conic, p) for p in eleven) < 1e-9
        # independent oracle: a conic through five of the members carries
        # the remaining six
        fit = cn.conic_through_five(list(eleven[2:7]))
        assert max(cn.conic_residual(fit, p) for p in eleven) < 1e-8


def test_eleven_point_conic_line_through_vertex(rng):
    pts = [affine_point(0, 0), affine_point(1, 0.2),
           affine_point(0.8, 1.1), affine_point(-0.2, 0.9)]
    q = Quadrangle(*pts)
    with pytest.raises(errors.LineThroughVertex):
        cn.eleven_point_conic(q, join_points(pts[0], affine_point(2, 3)))


def test_eleven_point_is_nine_point_circle():
    # euclidean triangle with its orthocenter against the line at infinity:
    # the eleven-point conic is the classical nine-point circle
    a = affine_point(0.0, 0.0)
    b = affine_point(4.0, 0.0)
    c = affine_point(1.0, 3.0)
    # orthocenter of this triangle: x = 1, y from the altitude at B
    h = affine_point(1.0, 1.0)
    q = Quadrangle(a, b, c, h)
    conic, eleven = cn.eleven_point_conic(q, hline(0, 0, 1))
    # circle: equal diagonal quadratic terms, no cross term
    assert abs(conic.m00 - conic.m11) < 1e-12
    assert abs(conic.m01) < 1e-12
    # passes through the three euclidean side midpoints
    for mid in (affine_point(2, 0), affine_point(2.5, 1.5), affine_point(0.5, 1.5)):
        assert cn.conic_residual(conic, mid) < 1e-12
    # and through the feet of the altitudes (diagonal points of the quadrangle)
    assert cn.conic_residual(conic, affine_point(1, 0)) < 1e-12
