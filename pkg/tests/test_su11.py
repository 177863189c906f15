import cmath
import math

import pytest

from liechar import (
    DIAM_K,
    GroupElementSU11,
    InputError,
    NotConverged,
    NotDiscreteSeries,
    QuadratureGrid,
    SingularElement,
    fgoi_envelope_check,
    formal_degree,
    kak_radial,
    matrix_coefficient,
    matrix_coefficient_quadrature,
    orbital_integral_character,
)
from liechar.su11 import DEFAULT_GRID, ELLIPTIC_DISC_R_MAX

# coarse but honest grid for the cheap tests; the full radial truncation
# is kept since it is the node counts that carry the cost
FAST = QuadratureGrid(radial_nodes=160, angular_nodes=32, t_max=14.0, disc_r_max=0.9999)


def test_element_validation():
    GroupElementSU11(1.0, 0.0)
    GroupElementSU11(math.cosh(2), math.sinh(2))
    with pytest.raises(InputError):
        GroupElementSU11(1.0, 1.0)
    with pytest.raises(InputError):
        GroupElementSU11(0.5, 0.0)
    with pytest.raises(InputError):
        GroupElementSU11.from_disc_point(1.0 + 0j)


def test_group_operations_close():
    g = GroupElementSU11.rotation(0.4).mul(GroupElementSU11.boost(1.3))
    h = g.mul(g.inverse())
    assert abs(h.a - 1.0) < 1e-12 and abs(h.b) < 1e-12
    mat = g.matrix()
    assert mat[0][0] == g.a and mat[1][1] == g.a.conjugate()


def test_kak_radial_coordinates():
    assert abs(kak_radial(GroupElementSU11.boost(1.7)) - 1.7) < 1e-12
    assert kak_radial(GroupElementSU11.rotation(2.0)) == 0.0
    w = 0.3 + 0.2j
    x = GroupElementSU11.from_disc_point(w)
    assert abs(kak_radial(x) - math.atanh(abs(w))) < 1e-12


def test_coefficient_trivial_values():
    assert matrix_coefficient(2, GroupElementSU11(1.0, 0.0)) == 1.0
    for theta in (0.3, 1.1, 2.9):
        val = matrix_coefficient(3, GroupElementSU11.rotation(theta))
        assert abs(abs(val) - 1.0) < 1e-12


def test_coefficient_closed_form_on_boosts():
    g = GroupElementSU11.boost(1.0)
    val = matrix_coefficient(2, g)
    assert val.imag == 0.0
    assert 0.0 < val.real < 1.0
    assert abs(val - math.cosh(1.0) ** (-3)) < 1e-15


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize(
    "g",
    [
        GroupElementSU11.boost(1.0),
        GroupElementSU11.rotation(0.8).mul(GroupElementSU11.boost(0.6)),
        GroupElementSU11.rotation(1.7)
        .mul(GroupElementSU11.boost(0.8))
        .mul(GroupElementSU11.rotation(2.1)),
    ],
)
def test_coefficient_matches_disc_quadrature(n, g):
    closed = matrix_coefficient(n, g)
    oracle = matrix_coefficient_quadrature(n, g)
    assert abs(closed - oracle) < 1e-6


def test_coefficient_bounded_by_one(rng):
    for _ in range(25):
        g = (
            GroupElementSU11.rotation(rng.uniform(0, 2 * math.pi))
            .mul(GroupElementSU11.boost(rng.uniform(0, 3)))
            .mul(GroupElementSU11.rotation(rng.uniform(0, 2 * math.pi)))
        )
        m = abs(matrix_coefficient(2, g))
        assert m <= 1.0 + 1e-12
        if kak_radial(g) > 1e-6:
            assert m < 1.0


def test_coefficient_rejects_small_labels():
    g = GroupElementSU11.boost(0.5)
    for n in (1, 0, -2):
        with pytest.raises(NotDiscreteSeries):
            matrix_coefficient(n, g)
    with pytest.raises(NotDiscreteSeries):
        formal_degree(1, FAST)


def test_conjugation_invariance_over_torus_cosets(rng):
    theta = 1.1
    k = GroupElementSU11.rotation(theta)
    for _ in range(10):
        w = rng.uniform(0, 0.95) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        x = GroupElementSU11.from_disc_point(w)
        y = GroupElementSU11.rotation(rng.uniform(0, 2 * math.pi))
        lhs = matrix_coefficient(3, x.mul(k).mul(x.inverse()))
        xy = x.mul(y)
        rhs = matrix_coefficient(3, xy.mul(k).mul(xy.inverse()))
        assert abs(lhs - rhs) < 1e-12


def test_formal_degree_values_and_monotonicity():
    degrees = [formal_degree(n, FAST) for n in (2, 3, 4, 5)]
    assert all(d > 0 for d in degrees)
    assert all(b > a for a, b in zip(degrees, degrees[1:]))
    assert abs(degrees[0] - 2.0 / (8.0 * math.pi**2)) < 1e-8


def test_formal_degree_scales_against_haar():
    d1 = formal_degree(2, FAST, haar_scale=1.0)
    d2 = formal_degree(2, FAST, haar_scale=2.0)
    assert abs(d2 - d1 / 2.0) < 1e-14


def test_formal_degree_flags_short_truncation():
    with pytest.raises(NotConverged):
        formal_degree(2, QuadratureGrid(radial_nodes=64, angular_nodes=16, t_max=1.0))


def test_grid_validation_and_halving():
    with pytest.raises(InputError):
        QuadratureGrid(radial_nodes=1)
    with pytest.raises(InputError):
        QuadratureGrid(t_max=-3.0)
    with pytest.raises(InputError):
        QuadratureGrid(disc_r_max=1.5)
    half = DEFAULT_GRID.halved()
    assert half.radial_nodes == DEFAULT_GRID.radial_nodes // 2
    assert half.t_max == DEFAULT_GRID.t_max


def test_orbital_frozen_value():
    value = orbital_integral_character(3, math.pi / 3, FAST)
    assert abs(value - (-1j / math.sqrt(3.0))) < 1e-9


def test_orbital_closes_on_character_values():
    for n in (2, 4):
        for theta in (math.pi / 3, math.pi / 2):
            value = orbital_integral_character(n, theta, FAST)
            exact = -cmath.exp(1j * n * theta) / (2j * math.sin(theta))
            assert abs(value - exact) < 1e-3


def test_orbital_normalization_independence():
    a = orbital_integral_character(3, math.pi / 3, FAST, haar_scale=1.0)
    b = orbital_integral_character(3, math.pi / 3, FAST, haar_scale=2.5)
    assert abs(a - b) <= 1e-9


def test_orbital_rejects_singular_rotations():
    for theta in (0.0, math.pi, 2.0 * math.pi):
        with pytest.raises(SingularElement):
            orbital_integral_character(2, theta, FAST)


def test_fgoi_gaussian_report():
    rep = fgoi_envelope_check("gaussian_l1", grid=FAST)
    assert rep.mode == "gaussian_l1" and rep.theta is None
    assert rep.diam_k == DIAM_K == math.pi
    assert all(b >= a for a, b in zip(rep.partial_sums, rep.partial_sums[1:]))
    assert all(b < a for a, b in zip(rep.tail_bounds, rep.tail_bounds[1:]))
    assert rep.converged and rep.tail_bounds[-1] < 1e-6
    assert rep.value == rep.partial_sums[-1] > 0


def test_fgoi_elliptic_report():
    rep = fgoi_envelope_check("elliptic_fgoi", theta=math.pi / 2)
    assert rep.grid.disc_r_max == ELLIPTIC_DISC_R_MAX
    assert all(b >= a for a, b in zip(rep.partial_sums, rep.partial_sums[1:]))
    assert all(b < a for a, b in zip(rep.tail_bounds, rep.tail_bounds[1:]))
    assert rep.converged and rep.tail_bounds[-1] < 1e-6


def test_fgoi_argument_validation():
    with pytest.raises(InputError):
        fgoi_envelope_check("nonsense")
    with pytest.raises(InputError):
        fgoi_envelope_check("gaussian_l1", theta=1.0)
    with pytest.raises(InputError):
        fgoi_envelope_check("elliptic_fgoi")
    with pytest.raises(SingularElement):
        fgoi_envelope_check("elliptic_fgoi", theta=0.0)
    with pytest.raises(InputError):
        fgoi_envelope_check("gaussian_l1", haar_scale=-1.0)
