from __future__ import annotations

from fractions import Fraction as F

import pytest

from leechgdh import orbnum
from leechgdh.classify import shape_catalog
from leechgdh.orbnum import CycleShape, ShapeClassInfo

S = CycleShape.parse


def test_parse_and_print():
    s = S("1^2 2 4 8^2")
    assert str(s) == "1^2 2 4 8^2" and s.order == 8 and s.rank == 6
    assert CycleShape.parse_tex("1^82^8") == S("1^8 2^8")
    assert CycleShape.parse_tex("2^{12}") == S("2^12")
    with pytest.raises(ValueError):
        S("2^11")
    with pytest.raises(ValueError):
        CycleShape.parse_tex("1^x")


def test_eisenstein_examples():
    assert orbnum.eisenstein_coeffs(1) == {1: 1}
    assert orbnum.eisenstein_coeffs(2) == {1: 3, 2: -1}
    assert orbnum.eisenstein_coeffs(46) == {1: 72, 2: -24, 23: -3, 46: 1}


@pytest.mark.parametrize("n", range(1, 121))
def test_residuals_vanish(n):
    assert all(r == 0 for r in orbnum.residuals(n).values())


def test_vacuum_anomaly():
    assert orbnum.vacuum_anomaly(S("1^24")) == 0
    assert orbnum.vacuum_anomaly(S("2^12")) == F(3, 4)
    assert orbnum.vacuum_anomaly(S("6^4")) == F(35, 36)


def test_power_shape_and_fixdim():
    assert orbnum.power_shape(S("2^12"), 2) == S("1^24")
    assert orbnum.power_shape(S("2^3 6^3"), 3) == S("2^12")
    assert orbnum.fixdim_power(S("1^8 2^8"), 1) == 16
    assert orbnum.fixdim_power(S("2^12"), 3) == 12


def test_power_shape_composes():
    for info in shape_catalog():
        for a in range(1, 13):
            for b in range(1, 13):
                s = info.shape
                assert orbnum.power_shape(orbnum.power_shape(s, a), b) == orbnum.power_shape(s, a * b)


def test_catalog_properties():
    for info in shape_catalog():
        s = info.shape
        assert orbnum.fixdim_power(s, s.order) == 24
        for d in orbnum.divisors(s.order):
            assert orbnum.fixdim_power(s, d) <= 24
            assert orbnum.vacuum_anomaly(orbnum.power_shape(s, d)) <= orbnum.vacuum_anomaly(s)


def test_dim_bound():
    assert orbnum.dim_bound(S("1^24"), 46) == 1128
    assert orbnum.dim_bound(S("2^12"), 46) == 300
    assert orbnum.dim_bound(S("1^8 2^8"), 30) == 384
    assert orbnum.dim_bound(S("1^24"), 1) == 24
    with pytest.raises(ValueError):
        orbnum.dim_bound(S("2^12"), 3)


def test_twisted_weight_trivial(half_k):
    from leechgdh.exactlat import Coset

    assert orbnum.twisted_weight(0, Coset(half_k, (0,) * 12)) == 0
    glue = Coset(half_k, (0,) * 11 + (F(1, 2),))
    assert orbnum.twisted_weight(F(3, 4), glue) == 1


def test_shape_class_info_validation():
    ShapeClassInfo(S("2^12"), 4, True)
    with pytest.raises(ValueError):
        ShapeClassInfo(S("2^12"), 3, False)
    with pytest.raises(ValueError):
        ShapeClassInfo(S("2^12"), 2, True)
