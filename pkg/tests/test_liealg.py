from __future__ import annotations

from fractions import Fraction as F

import pytest

from leechgdh import liealg
from leechgdh.liealg import AffineStructure, SimpleType

P = AffineStructure.parse


def test_221_solutions():
    sols = liealg.trace_identity_solutions()
    assert len(sols) == 221
    names = {str(s) for s in sols}
    for s in ("D_{24,1}", "A_{1,2}^16", "C_{4,10}", "A_{1,1}^24", "E_{8,1}^3", "B_{12,2}"):
        assert str(P(s)) in names


def test_dual_coxeter_and_dims():
    assert SimpleType("E", 8).dual_coxeter == 30 and SimpleType("E", 8).dim == 248
    assert SimpleType("B", 12).dual_coxeter == 23
    assert SimpleType("C", 4).dual_coxeter == 5 and SimpleType("C", 4).dim == 36
    assert SimpleType("G", 2).lacing == 3
    with pytest.raises(ValueError):
        SimpleType("D", 3)


def test_parse_roundtrip():
    s = P("A_{3,1}^2D_{5,2}^2")
    assert str(s) == "A_{3,1}^2 D_{5,2}^2"
    assert P(str(s)) == s
    with pytest.raises(ValueError):
        P("A_{3,1} junk")


def test_trace_identity_and_printed_typo():
    assert P("A_{5,1} E_{7,3}").satisfies_trace_identity()
    assert not P("A_{5,1} E_{7,1}").satisfies_trace_identity()  # mixed h/k


def test_orbifold_order_and_inverse_diagram():
    assert liealg.orbifold_order(P("D_{24,1}")) == 46
    assert liealg.orbifold_order(P("B_{12,2}")) == 46
    assert liealg.invtype_diagram(P("B_{12,2}")).canonical_name == "A_1"
    assert liealg.invtype_diagram(P("C_{4,10}")).canonical_name == "A_3"
    assert liealg.invtype_diagram(P("D_{24,1}")).canonical_name == "D̃_24"
    assert liealg.level_lcm(P("C_{4,10}")) == 20


def test_ratio():
    assert P("A_{1,2}^16").ratio == F(1)
    with pytest.raises(ValueError):
        P("A_{1,1} A_{1,2}").ratio
