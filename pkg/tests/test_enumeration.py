from __future__ import annotations

from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from _oracles import brute_force, random_lattice
from leechgdh import enumeration as en
from leechgdh.enumeration import Mode, SphereQuery
from leechgdh.exactlat import Coset, ExactLattice, d12plus_scaled


def _coeff_set(rows) -> set[tuple[int, ...]]:
    return {tuple(int(x) for x in r) for r in rows}


@settings(max_examples=50, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])
@given(seed=st.integers(0, 2**32 - 1), mode=st.sampled_from([Mode.EXACT_SHELL, Mode.BALL]))
def test_matches_brute_force(seed, mode):
    lat, target, radius = random_lattice(np.random.default_rng(seed))
    got = en.lattice_points(lat, target, radius, mode)
    assert _coeff_set(got) == brute_force(lat, target, radius, mode)


@settings(max_examples=20, deadline=None, derandomize=True)
@given(seed=st.integers(0, 2**32 - 1), bump=st.fractions(0, 3, max_denominator=5))
def test_ball_radius_not_attained(seed, bump):
    """Radii that are not distances still give the right ball (and usually an empty shell)."""
    lat, target, radius = random_lattice(np.random.default_rng(seed))
    r = radius + bump
    for mode in Mode:
        assert _coeff_set(en.lattice_points(lat, target, r, mode)) == brute_force(lat, target, r, mode)


@pytest.mark.skipif("compiled" not in en.KERNELS, reason="extension not built")
def test_kernels_agree():
    rng = np.random.default_rng(3)
    for _ in range(20):
        lat, target, radius = random_lattice(rng)
        a = en.lattice_points(lat, target, radius, kernel="python")
        b = en.lattice_points(lat, target, radius, kernel="compiled")
        assert _coeff_set(a) == _coeff_set(b)


def test_k_norm4_shell_and_jobs_determinism():
    k = d12plus_scaled()
    q = SphereQuery(k, (0,) * 12, 4, Mode.EXACT_SHELL)
    one = en.close_vectors(q)
    assert len(one) == 264  # 2 * 12 * 11 roots of D12
    two = en.close_vectors(q, jobs=2)
    assert one == two
    assert np.array_equal(one.coeffs, two.coeffs)


def test_vector_set_is_sorted_and_exact():
    z2 = ExactLattice(((1, 0), (0, 1)))
    vs = en.close_vectors(SphereQuery(z2, (F(1, 2), F(1, 2)), F(1, 2), Mode.EXACT_SHELL))
    assert vs.vectors == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_query_validation():
    z2 = ExactLattice(((1, 0), (0, 1)))
    with pytest.raises(ValueError):
        SphereQuery(z2, (0, 0), -1)
    with pytest.raises(ValueError):
        SphereQuery(z2, (0, 0, 0), 1)


def test_cap_raises():
    z3 = ExactLattice(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(en.EnumerationLimitError):
        en.lattice_points(z3, (0, 0, 0), 100, cap=50)


def test_closest_vectors_and_coset_minimum():
    a2 = ExactLattice(((1, -1, 0), (0, 1, -1)))
    best, vs = en.closest_vectors(a2, (F(2, 3), F(-1, 3), F(-1, 3)))  # deep hole of A2
    assert best == F(2, 3)
    assert vs.vectors == ((0, 0, 0), (1, -1, 0), (1, 0, -1))
    z2 = ExactLattice(((1, 0), (0, 1)))
    assert en.min_norm_in_coset(Coset(z2, (F(1, 2), F(1, 2)))) == (F(1, 2), 4)
    assert en.min_norm_in_coset(Coset(z2, (0, 0))) == (0, 1)


def test_shortest_nonzero():
    assert en.shortest_nonzero_norm(d12plus_scaled()) == 4
    assert en.shortest_nonzero_norm(ExactLattice(((3, 0), (0, 5)))) == 9


def test_half_k_around_glue_point(half_k):
    vs = en.close_vectors(SphereQuery(half_k, (0,) * 11 + (F(1, 2),), F(1, 2), Mode.EXACT_SHELL))
    assert len(vs) == 24
    assert len(en.close_vectors(SphereQuery(half_k, (0,) * 11 + (F(1, 2),), 1, Mode.EXACT_SHELL))) == 0
