import json
from fractions import Fraction

import pytest

from quasitoric import jsonio
from quasitoric.construction import (NonsimpleTripleError,
                                     Triple, build_charts, build_presentation,
                                     classify, cut_and_present, emit_report,
                                     format_field_elem, torus_classes_equal)
from quasitoric.examples import (cube, dodecahedron, get_example, kite,
                                 kite_axis_cut, octahedron, orbisphere,
                                 quasisphere, sphere, tetrahedron)
from quasitoric.field import FieldElem, KMatrix, KVector, fe, phi
from quasitoric.intlattice import hnf_basis
from quasitoric.polytope import HalfSpace, PolytopeH
from quasitoric.quasilattice import Quasilattice


def kv5(*xs):
    return KVector([x if isinstance(x, FieldElem) else fe(x, 0, 5) for x in xs])


def same_row_space(computed, claimed):
    stack = KMatrix.from_vectors(list(computed) + list(claimed))
    return stack.rank() == len(computed) == len(claimed)


def angle_subgroup_basis(vectors, n):
    """HNF basis of the subgroup of R^n generated by `vectors` and Z^n,
    written in integer coordinates over the (1, sqrt(D)) basis with a fixed
    common denominator scale."""
    from math import lcm
    units = [KVector([fe(1 if i == k else 0, 0, vectors[0].d) for i in range(n)])
             for k in range(n)]
    everything = list(vectors) + units
    den = 1
    for v in everything:
        for x in v:
            den = lcm(den, x.a.denominator, x.b.denominator)
    rows = [[int(x.a * den) for x in v] + [int(x.b * den) for x in v]
            for v in everything]
    return hnf_basis(rows, 2 * n)


# -- quasisphere (worked example fixing all conventions) -----------------------


def test_quasisphere_presentation_exact():
    pres = build_presentation(quasisphere())
    p = phi()
    assert len(pres.level_rows) == 1
    row = pres.level_rows[0]
    assert list(row.coefficients) == [fe(1, 0, 5), p]
    assert row.constant == p
    assert list(pres.cont_gens) == [kv5(1, p)]
    assert pres.component_invariants.is_trivial()
    assert pres.disc_gens == ()


def test_quasisphere_charts():
    charts = build_charts(quasisphere())
    assert len(charts) == 2
    south = charts[0]
    p = phi()
    assert south.active == (0,)
    assert south.group_invariants.free_rank == 1
    assert list(south.group_gens[0]) == [p - 1]
    ineq = south.domain_ineqs[0]
    assert ineq.facet == 1
    assert list(ineq.coefficients) == [p - 1]
    assert ineq.bound == fe(1, 0, 5)
    assert south.slot_exprs[0].facet == 1
    north = charts[1]
    assert north.group_invariants.free_rank == 1


def test_sphere_and_orbisphere_special_cases():
    charts = build_charts(sphere())
    assert all(c.group_invariants.is_trivial() for c in charts)
    charts = build_charts(orbisphere(2, 3))
    orders = sorted(c.group_invariants.order() for c in charts)
    assert orders == [2, 3]
    pres = build_presentation(orbisphere(2, 3))
    assert list(pres.level_rows[0].coefficients) == [fe(1), fe(Fraction(3, 2))]
    assert pres.level_rows[0].constant == fe(3)


# -- kite ---------------------------------------------------------------------


def test_kite_polytope_shape():
    t = kite()
    vs = t.polytope.vertices()
    p = phi()
    points = [list(v.point) for v in vs]
    assert points == [[fe(0, 0, 5), fe(0, 0, 5)], [fe(0, 0, 5), p],
                      [fe(1, 0, 5), fe(1, 0, 5)], [p, fe(0, 0, 5)]]
    actives = {v.active_facets for v in vs}
    assert actives == {(1, 2), (0, 1), (0, 3), (2, 3)}
    assert t.polytope.validate().simple


def test_kite_level_rows_match_printed_span():
    pres = build_presentation(kite())
    p = phi()
    claimed = [kv5(p, 1, p, 0), kv5(0, p, 1, p)]
    assert same_row_space(pres.cont_gens, claimed)
    other = [kv5(-1, 1, 0, p), kv5(p, 0, 1, -1)]
    assert same_row_space(pres.cont_gens, other)
    assert pres.component_invariants.is_trivial()


def test_kite_apex_chart():
    charts = build_charts(kite())
    apex = next(c for c in charts if c.active == (1, 2))
    p = phi()
    assert apex.group_invariants.free_rank == 2
    assert not apex.group_invariants.torsion
    # chart group equals <(phi, 0), (0, phi)> mod Z^2 up to basis change
    ours = angle_subgroup_basis(list(apex.group_gens), 2)
    target = angle_subgroup_basis([kv5(p, 0), kv5(0, p)], 2)
    assert ours == target
    # two domain rows, coefficient multisets {1, phi} after per-row rescaling
    assert len(apex.domain_ineqs) == 2
    rescaled = []
    for ineq in apex.domain_ineqs:
        low = min(ineq.coefficients, key=lambda x: (x - 1).sign())
        scale = low.inverse() if low != 1 else fe(1, 0, 5)
        coeffs = sorted((c * scale for c in ineq.coefficients),
                        key=lambda x: float(x))
        rescaled.append((coeffs, ineq.bound * scale))
    for coeffs, _bound in rescaled:
        assert coeffs == [fe(1, 0, 5), p]
    assert rescaled[0][1] == rescaled[1][1]       # equal bounds


def test_kite_chart_finiteness_matches_rational_angles():
    for c in build_charts(kite()):
        finite = c.group_invariants.is_finite()
        rational_angles = all(x.b == 0 for g in c.group_gens for x in g)
        assert finite == rational_angles


# -- half-kite via cutting -------------------------------------------------------


def test_half_kite_cut_presentation():
    t = kite()
    normal, level = kite_axis_cut()
    t_plus, t_minus, p_plus, p_minus = cut_and_present(t, normal, level)
    p = phi()
    assert list(p_minus.cont_gens) == [kv5(1, p, p)]
    row = p_minus.level_rows[0]
    assert list(row.coefficients) == [fe(1, 0, 5), p, p]
    assert row.constant == p
    assert p_minus.component_invariants.free_rank == 1
    assert not p_minus.component_invariants.torsion
    # the plus half is the mirror image with permuted facets
    assert p_plus.component_invariants.free_rank == 1
    assert same_row_space(p_plus.cont_gens, [kv5(1, p - 1, 1)])


def test_half_kite_discrete_generator_class():
    t = kite()
    normal, level = kite_axis_cut()
    _tp, t_minus, _pp, p_minus = cut_and_present(t, normal, level)
    cand = kv5(0, 0, phi())
    # (0,0,phi) is itself a nonzero class
    zero = kv5(0, 0, 0)
    assert not torus_classes_equal(t_minus, cand, zero)
    # every reported discrete generator is an integer multiple of its class
    assert p_minus.disc_gens
    for g in p_minus.disc_gens:
        assert any(torus_classes_equal(t_minus, g, cand.scale(k))
                   for k in range(-3, 4) if k != 0)


def test_cut_interval_gives_spheres():
    t = sphere()
    tp, tm, pp, pm = cut_and_present(t, KVector([fe(1)]), fe(Fraction(1, 2)))
    for pres in (pp, pm):
        assert len(pres.level_rows) == 1
        assert list(pres.level_rows[0].coefficients) == [fe(1), fe(1)]
        assert pres.component_invariants.is_trivial()


def test_cut_thick_rhombus_smoke():
    t = get_example("thick_rhombus")
    tp, tm, pp, pm = cut_and_present(t, kv5(1, -1), fe(0, 0, 5))
    assert len(tp.polytope.vertices()) == 3
    assert len(tm.polytope.vertices()) == 3
    assert len(pp.level_rows) == 1 and len(pm.level_rows) == 1


# -- classification ---------------------------------------------------------------


def test_classification_table():
    assert classify(cube()).kind == "manifold"
    assert classify(tetrahedron()).kind == "manifold"
    oc = classify(octahedron())
    assert (oc.simple, oc.rational, oc.kind) == (False, True, "stratified-by-manifolds")
    dd = classify(dodecahedron())
    assert (dd.simple, dd.rational, dd.kind) == (True, False, "quasifold")
    assert len(dd.chart_kinds) == 20
    assert all(k == "quasifold" for k in dd.chart_kinds)
    ic = classify(get_example("icosahedron"))
    assert (ic.simple, ic.rational, ic.kind) == (False, False, "stratified-by-quasifolds")


def test_nonsimple_construction_refused():
    with pytest.raises(NonsimpleTripleError) as err:
        build_presentation(octahedron())
    assert err.value.classification.kind == "stratified-by-manifolds"


def test_degenerate_triple_rejected():
    # normals all along one axis cannot span the plane
    with pytest.raises(ValueError):
        lattice = Quasilattice(2, (kv5(1, 0), kv5(0, 1)))
        poly = PolytopeH(2, [HalfSpace(kv5(1, 0), fe(0, 0, 5)),
                             HalfSpace(kv5(-1, 0), fe(-1, 0, 5))])
        Triple.build(poly, lattice).ensure_valid()


# -- structural properties -----------------------------------------------------------


def test_kernel_orthogonality_everywhere():
    for name in ("quasisphere", "kite", "thick_rhombus", "thin_rhombus",
                 "cube", "tetrahedron", "prolate_rhombohedron"):
        t = get_example(name)
        pi = t.projection()
        pres = build_presentation(t)
        for g in pres.cont_gens:
            assert pi.matvec(g).is_zero()
        for row in pres.level_rows:
            acc = fe(0, 0, row.constant.d)
            for c, lam in zip(row.coefficients, t.levels):
                acc = acc + c * lam
            assert (acc + row.constant).is_zero()


def test_vertex_count_equals_chart_count():
    for name in ("quasisphere", "kite", "cube", "dodecahedron"):
        t = get_example(name)
        assert len(build_charts(t)) == len(t.polytope.vertices())


def test_chart_bounds_positive():
    for name in ("kite", "thin_rhombus", "dodecahedron"):
        for c in build_charts(get_example(name)):
            for ineq in c.domain_ineqs:
                assert ineq.bound.sign() > 0


def test_scale_equivariance():
    t = kite()
    c = phi() * phi()             # positive scalar
    scaled_poly = PolytopeH(2, [HalfSpace(h.normal, h.level * c)
                                for h in t.polytope.halfspaces])
    ts = Triple(scaled_poly, t.lattice, t.certificates)
    p0, p1 = build_presentation(t), build_presentation(ts)
    assert p0.cont_gens == p1.cont_gens
    assert p0.disc_gens == p1.disc_gens
    for r0, r1 in zip(p0.level_rows, p1.level_rows):
        assert r0.coefficients == r1.coefficients
        assert r1.constant == r0.constant * c
    ch0, ch1 = build_charts(t), build_charts(ts)
    for a, b in zip(ch0, ch1):
        assert a.group_gens == b.group_gens
        for i0, i1 in zip(a.domain_ineqs, b.domain_ineqs):
            assert i0.coefficients == i1.coefficients
            assert i1.bound == i0.bound * c


def test_slot_expressions_satisfy_level_rows():
    # substituting |z_j|^2 = bound_j - sum c|z|^2 into each level row is exact
    t = quasisphere()
    pres = build_presentation(t)
    chart = build_charts(t)[0]
    smoke = [fe(Fraction(1, 3), 0, 5)]          # a point of the chart domain
    modsq = {chart.active[k]: smoke[k] for k in range(len(chart.active))}
    for ineq in chart.domain_ineqs:
        val = ineq.bound
        for ck, zk in zip(ineq.coefficients, smoke):
            val = val - ck * zk
        assert val.sign() > 0
        modsq[ineq.facet] = val
    for row in pres.level_rows:
        acc = fe(0, 0, 5)
        for j, c in enumerate(row.coefficients):
            acc = acc + c * modsq[j]
        assert acc == row.constant


# -- reports --------------------------------------------------------------------------


def test_text_report_quasisphere():
    text = emit_report(build_presentation(quasisphere()), None, "text")
    assert "|z1|^2 + φ|z2|^2 = φ" in text


def test_text_report_kite_style():
    t = kite()
    text = emit_report(build_presentation(t), build_charts(t), "text")
    assert "level set:" in text and "chart group" in text


def test_format_field_elem():
    p = phi()
    assert format_field_elem(p) == "φ"
    assert format_field_elem(p - 1) == "φ - 1"
    assert format_field_elem(2 - p) == "2 - φ"
    assert format_field_elem(fe(2, 0, 5) * p) == "2φ"
    assert format_field_elem(fe(Fraction(3, 2))) == "3/2"


def test_json_report_roundtrip():
    t = kite()
    pres = build_presentation(t)
    doc = json.loads(emit_report(pres, None, "json"))
    again = jsonio.parse_presentation(doc)
    assert again == pres


def test_empty_chart_list_report():
    text = emit_report(build_presentation(sphere()), [], "text")
    assert "chart" not in text.split("component group")[1]
