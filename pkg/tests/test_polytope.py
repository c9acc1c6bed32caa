import pytest

from quasitoric.field import KVector, fe, phi
from quasitoric.polytope import (DegenerateCutError, HalfSpace, PolytopeH,
                                 cut, cut_with_maps)


def kv(*xs, d=0):
    return KVector([fe(x, 0, d) for x in xs])


def unit_interval_quasi():
    p = phi()
    return PolytopeH(1, [HalfSpace(KVector([p]), fe(0, 0, 5)),
                         HalfSpace(KVector([fe(-1, 0, 5)]), fe(-1, 0, 5))])


def unit_square():
    return PolytopeH(2, [HalfSpace(kv(1, 0), fe(0)), HalfSpace(kv(0, 1), fe(0)),
                         HalfSpace(kv(-1, 0), fe(-1)), HalfSpace(kv(0, -1), fe(-1))])


def unit_cube():
    hs = [HalfSpace(kv(*(1 if j == i else 0 for j in range(3))), fe(0)) for i in range(3)]
    hs += [HalfSpace(kv(*(-1 if j == i else 0 for j in range(3))), fe(-1)) for i in range(3)]
    return PolytopeH(3, hs)


def octahedron():
    hs = [HalfSpace(kv(s1, s2, s3), fe(-1))
          for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)]
    return PolytopeH(3, hs)


def test_interval_vertices():
    p = unit_interval_quasi()
    vs = p.vertices()
    assert [list(v.point) for v in vs] == [[fe(0, 0, 5)], [fe(1, 0, 5)]]
    assert [v.active_facets for v in vs] == [(0,), (1,)]
    rep = p.validate()
    assert rep.bounded and rep.full_dim and rep.simple and rep.irredundant_facets


def test_cube_vertices():
    c = unit_cube()
    vs = c.vertices()
    assert len(vs) == 8
    assert all(len(v.active_facets) == 3 for v in vs)
    assert c.validate().simple


def test_octahedron_not_simple():
    o = octahedron()
    vs = o.vertices()
    assert len(vs) == 6
    assert all(len(v.active_facets) == 4 for v in vs)
    rep = o.validate()
    assert rep.bounded and rep.full_dim and rep.irredundant_facets
    assert not rep.simple


def test_single_halfspace_unbounded():
    p = PolytopeH(2, [HalfSpace(kv(1, 0), fe(0))])
    assert not p.validate().bounded


def test_missing_direction_unbounded():
    p = PolytopeH(2, [HalfSpace(kv(1, 0), fe(0)), HalfSpace(kv(0, 1), fe(0)),
                      HalfSpace(kv(-1, -1), fe(-5))])
    # a triangle: bounded
    assert p.validate().bounded
    q = PolytopeH(2, [HalfSpace(kv(1, 0), fe(0)), HalfSpace(kv(0, 1), fe(0))])
    assert not q.validate().bounded


def test_every_vertex_satisfies_all_inequalities():
    for poly in (unit_square(), unit_cube(), octahedron()):
        for v in poly.vertices():
            for h in poly.halfspaces:
                assert h.slack(v.point).sign() >= 0


def test_facet_contact_dimension():
    c = unit_cube()
    for j in range(c.d):
        assert c._facet_contact_dim(j) == 2


def test_redundant_facet_detected():
    # the plane x <= 2 misses the unit square's facets entirely
    hs = list(unit_square().halfspaces) + [HalfSpace(kv(-1, 0), fe(-2))]
    p = PolytopeH(2, hs)
    rep = p.validate()
    assert not rep.irredundant_facets
    trimmed, keep = p.drop_redundant()
    assert keep == [0, 1, 2, 3]


def test_cut_interval_at_half():
    from fractions import Fraction
    p = PolytopeH(1, [HalfSpace(kv(1), fe(0)), HalfSpace(kv(-1), fe(-1))])
    plus, minus = cut(p, kv(1), fe(Fraction(1, 2)))
    ppts = sorted(float(v.point[0]) for v in plus.vertices())
    mpts = sorted(float(v.point[0]) for v in minus.vertices())
    assert ppts == [0.5, 1.0]
    assert mpts == [0.0, 0.5]


def test_cut_square_diagonal():
    plus, minus = cut(unit_square(), kv(1, 1), fe(1))
    for half in (plus, minus):
        assert half.d == 3
        assert len(half.vertices()) == 3
        assert half.validate().simple
    # oracle: direct vertex check
    plus_pts = {tuple(float(x) for x in v.point) for v in plus.vertices()}
    assert plus_pts == {(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)}


def test_cut_preserves_facet_order():
    plus, map_p, minus, map_m = cut_with_maps(unit_square(), kv(1, 1), fe(1))
    assert map_p[-1] == -1 and map_m[-1] == -1
    assert map_p[:-1] == sorted(map_p[:-1])
    assert map_m[:-1] == sorted(map_m[:-1])


def test_cut_vertex_inclusion_property():
    p = unit_square()
    plus, minus = cut(p, kv(1, 1), fe(1))
    original = {v.point for v in p.vertices()}
    combined = {v.point for v in plus.vertices()} | {v.point for v in minus.vertices()}
    assert original <= combined
    for v in p.vertices():
        side = (kv(1, 1).dot(v.point) - fe(1)).sign()
        if side > 0:
            assert v.point in {w.point for w in plus.vertices()}
            assert v.point not in {w.point for w in minus.vertices()}


def test_degenerate_cut_rejected():
    with pytest.raises(DegenerateCutError):
        cut(unit_square(), kv(1, 0), fe(0))      # supporting hyperplane
    with pytest.raises(DegenerateCutError):
        cut(unit_square(), kv(1, 0), fe(5))      # misses entirely


def test_cut_through_vertices_allowed():
    # diagonal through two opposite corners of the square
    plus, minus = cut(unit_square(), kv(1, -1), fe(0))
    assert len(plus.vertices()) == 3 and len(minus.vertices()) == 3
    shared = {v.point for v in plus.vertices()} & {v.point for v in minus.vertices()}
    assert len(shared) == 2
