from __future__ import annotations

import json
from fractions import Fraction as F

import pytest

from leechgdh import exactlat
from leechgdh.exactlat import Coset, ExactLattice


def test_d12plus_is_even_with_det_4096():
    k = exactlat.d12plus_scaled()
    assert k.rank == 12 and k.determinant == 2**12 and k.is_even()
    assert exactlat.is_lll_reduced(k.gram)


def test_dual_of_k_is_half_k():
    k = exactlat.d12plus_scaled()
    assert exactlat.same_lattice(exactlat.dual_lattice(k), exactlat.dual_scale_half(k))


def test_in_d12plus():
    assert exactlat.in_d12plus([F(1, 2)] * 12)
    assert exactlat.in_d12plus([1, 1] + [0] * 10)
    assert not exactlat.in_d12plus([1] + [0] * 11)
    assert not exactlat.in_d12plus([F(1, 2)] * 11 + [F(-1, 2)])


def test_lll_keeps_lattice_and_reduces():
    lat = ExactLattice(((1, 0, 0), (7, 1, 0), (13, 5, 1)))
    red = exactlat.lll_reduce(lat)
    assert exactlat.same_lattice(lat, red)
    assert exactlat.is_lll_reduced(red.gram)
    assert not exactlat.is_lll_reduced(lat.gram)


def test_lattice_from_dependent_generators():
    lat = exactlat.lattice_from_generators([[2, 0], [0, 2], [1, 1], [3, 3]])
    assert lat.rank == 2 and lat.determinant == 4


def test_rejects_degenerate_basis():
    with pytest.raises(ValueError):
        ExactLattice(((1, 2), (2, 4)))


def test_coset_membership_and_equality():
    z2 = ExactLattice(((1, 0), (0, 1)))
    c = Coset(z2, (F(1, 2), 0))
    assert (F(3, 2), 5) in c
    assert (0, 0) not in c
    assert c == Coset(z2, (F(-1, 2), 7))


def test_json_roundtrip(tmp_path):
    k = exactlat.d12plus_scaled()
    path = tmp_path / "k.json"
    exactlat.write_lattice(k, path)
    again = exactlat.read_lattice(path)
    assert again == k and again.scale == 2


@pytest.mark.parametrize("payload", [
    {"rank": 1, "ambient": 1},
    {"rank": 2, "ambient": 1, "basis": [[[1, 1]]]},
    {"rank": 1, "ambient": 1, "basis": [[[1, 0]]]},
    {"rank": 1, "ambient": 1, "basis": [["1/2"]]},
])
def test_bad_lattice_files(tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(ValueError):
        exactlat.read_lattice(path)


def test_bundled_leech(leech):
    assert leech.rank == 24 and leech.determinant == 1 and leech.is_even()
    assert leech.scale == F(1, 8)


def test_data_dir_override(monkeypatch, tmp_path):
    monkeypatch.setenv(exactlat.DATA_ENV, str(tmp_path))
    assert exactlat.data_dir() == tmp_path
