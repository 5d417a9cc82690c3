from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import NAMED, graphs
from tensorcc import closed_forms as cf
from tensorcc import generators as gen
from tensorcc.errors import CapacityError, DomainError, GraphInputError
from tensorcc.product import encode, tensor_product
from tensorcc.triangles import cc_report, global_cc, local_cc, neighbor_sets, oracle_triangles

K3, K4, P3 = NAMED["K3"], NAMED["K4"], NAMED["P3"]
PET, P13 = NAMED["petersen"], NAMED["paley13"]


def test_product_triangles():
    assert cf.product_triangles(1, 1) == 2
    assert cf.product_triangles(0, 7) == 0
    assert cf.product_triangles(3, 3) == 18
    p = tensor_product(K4, K4)
    sets = neighbor_sets(p)
    assert {oracle_triangles(p, v, sets) for v in range(p.n)} == {18}


def test_coupling_factor():
    assert cf.coupling_factor(2, 2) == pytest.approx(1 / 3)
    assert cf.coupling_factor(3, 3) == 0.5
    assert cf.coupling_factor(2, 5, exact=True) == Fraction(4, 9)
    with pytest.raises(DomainError):
        cf.coupling_factor(1, 5)


def test_coupling_factor_open_interval():
    for a in range(2, 30):
        for b in range(2, 30):
            assert 0 < cf.coupling_factor(a, b, exact=True) < 1


def test_product_local_cc():
    assert cf.product_local_cc(K3, K3, 0, 2, exact=True) == Fraction(1, 3)
    assert cf.product_local_cc(K4, K4, 1, 1) == 0.5
    # pendant end of P3 has no triangles, whatever H is
    assert cf.product_local_cc(P3, K4, 0, 3) == 0.0
    assert cf.product_local_cc(NAMED["K2"], K3, 0, 0) == 0.0


def test_product_global_cc():
    assert cf.product_global_cc(K3, K3, exact=True) == Fraction(1, 3)
    assert cf.product_global_cc(NAMED["C5"], K4) == 0.0
    assert cf.product_global_cc(K4, K4) == 0.5
    with pytest.raises(GraphInputError):
        cf.product_global_cc(gen.edgeless(0), K3)


def test_upper_bound_check():
    c = cf.cc_upper_bound_check(K3, K3)
    assert (c.applicable, c.bound, c.holds, c.strict_expected, c.relation) == (True, 1.0, True, True, "strict")
    c = cf.cc_upper_bound_check(PET, K4)
    assert (c.bound, c.holds, c.strict_expected, c.relation) == (0.0, True, False, "equality")
    c = cf.cc_upper_bound_check(K4, K4)
    assert (c.bound, c.relation, c.implicit_exact) == (1.0, "strict", Fraction(1, 2))
    c = cf.cc_upper_bound_check(P3, K3)
    assert c.status == "not-applicable"


def test_lower_bound():
    assert cf.cc_lower_bound(K4, K4, exact=True) == Fraction(1, 2)
    assert cf.cc_lower_bound(PET, P13) == 0.0
    assert cf.cc_lower_bound(K3, K3, exact=True) == Fraction(1, 3)
    assert cf.cc_lower_bound(P3, K3) is None


def test_regular_product_cc():
    assert cf.regular_product_cc(K4, K4, exact=True) == Fraction(1, 2)
    assert cf.regular_product_cc(NAMED["C6"], gen.cycle(8)) == 0.0
    value = cf.regular_product_cc(P13, K3, exact=True)
    assert value == Fraction(2, 11)
    assert global_cc(tensor_product(P13, K3), exact=True) == Fraction(2, 11)
    with pytest.raises(DomainError):
        cf.regular_product_cc(P3, K3)
    with pytest.raises(DomainError):
        cf.regular_product_cc(NAMED["K2"], K3)


def test_srg_detect():
    assert cf.srg_detect(PET).as_tuple() == (10, 3, 0, 1)
    assert cf.srg_detect(NAMED["K5"]).as_tuple() == (5, 4, 3, None)
    assert cf.srg_detect(P3) is None
    assert cf.srg_detect(NAMED["K1"]) is None
    # regular but not strongly regular: prism
    prism = gen.Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert cf.srg_detect(prism) is None
    with pytest.raises(CapacityError):
        cf.srg_detect(PET, max_order=9)


def test_srg_detect_blocks():
    # more vertices than one detection block
    g = gen.paley(601)
    assert cf.srg_detect(g).as_tuple() == (601, 300, 149, 150)


def test_srg_params_validation():
    with pytest.raises(DomainError):
        cf.SrgParams(5, 2, 2, 1)
    with pytest.raises(DomainError):
        cf.SrgParams(5, 2, 0, 3)


def test_srg_cc():
    assert cf.srg_cc(cf.SrgParams(10, 3, 0, 1)) == 0.0
    assert cf.srg_cc(cf.SrgParams(13, 6, 2, 3), exact=True) == Fraction(2, 5) == global_cc(P13, exact=True)
    assert cf.srg_cc(cf.SrgParams(4, 3, 2)) == 1.0
    with pytest.raises(DomainError):
        cf.srg_cc(cf.SrgParams(2, 1, 0))


def test_srg_product_cc():
    k4p = cf.srg_detect(K4)
    assert cf.srg_product_cc(k4p, k4p, exact=True) == Fraction(1, 2)
    assert cf.srg_product_cc(cf.srg_detect(PET), cf.srg_detect(P13)) == 0.0
    p13 = cf.srg_detect(P13)
    assert cf.srg_product_cc(p13, p13, exact=True) == Fraction(4, 35)
    with pytest.raises(DomainError):
        cf.srg_product_cc(cf.SrgParams(2, 1, 0), p13)


def test_product_cc_report_modes():
    r = cf.product_cc_report(K4, K4, mode="both", exact=True)
    assert (r.implicit_global_cc, r.explicit_global_cc, r.lower_bound, r.upper_bound) == (0.5, 0.5, 0.5, 1.0)
    assert r.abs_diff == 0.0 and r.upper_ok and r.lower_ok
    assert r.implicit_exact == r.explicit_exact == r.lower_bound_exact == Fraction(1, 2)
    r = cf.product_cc_report(NAMED["C5"], K4)
    assert r.explicit_global_cc is None and r.implicit_global_cc == 0.0
    r = cf.product_cc_report(P3, K3, mode="explicit")
    assert r.lower_bound is None and r.lower_ok is None and r.abs_diff is None
    with pytest.raises(CapacityError):
        cf.product_cc_report(K4, K4, mode="explicit", budget=10)
    with pytest.raises(ValueError):
        cf.product_cc_report(K4, K4, mode="lazy")


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_implicit_matches_materialized(g, h):
    p = tensor_product(g, h)
    rp = cc_report(p, exact=True)
    rg, rh = cc_report(g), cc_report(h)
    all_local = cf.product_local_cc_all(g, h)
    for u in range(g.n):
        for v in range(h.n):
            i = encode(u, v, h.n)
            assert rp.triangles[i] == cf.product_triangles(rg.triangles[u], rh.triangles[v])
            assert cf.product_local_cc(g, h, u, v, exact=True) == rp.local_cc_exact[i]
            assert abs(all_local[i] - rp.local_cc[i]) <= 1e-12
    assert cf.product_global_cc(g, h, exact=True) == rp.global_cc_exact
    assert abs(cf.product_global_cc(g, h) - rp.global_cc) <= 1e-12


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=8), graphs(min_n=3, max_n=8))
def test_bounds_hold(g, h):
    implicit = cf.product_global_cc(g, h, exact=True)
    c = cf.cc_upper_bound_check(g, h)
    assert c.holds and implicit <= c.bound_exact
    if g.min_degree() >= 2 and h.min_degree() >= 2:
        assert (c.relation == "strict") == c.strict_expected
        assert implicit >= cf.cc_lower_bound(g, h, exact=True)
