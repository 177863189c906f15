from fractions import Fraction

import pytest

from liechar import (
    InputError,
    InvalidNoncompactSet,
    NotFiniteType,
    RankMismatch,
    Weight,
    build_root_datum,
    catalog_datum,
    datum_from_text,
    dominant_representative,
    is_dominant,
    longest_element,
    pair_coroot,
    pairing,
    weyl_act,
    weyl_group,
)

FROZEN = {
    # name: (|W|, |W_c|, rho_c doubled, rho_n doubled, q, positive root count)
    "sl2R": (2, 1, (0,), (2,), 1, 1),
    "su21": (6, 2, (2, -1), (0, 3), 2, 3),
    "sp4R": (8, 2, (2, -1), (0, 3), 3, 4),
    "su2": (2, 2, (2,), (0,), 0, 1),
    "su3": (6, 6, (2, 2), (0, 0), 0, 3),
    "so5": (8, 8, (2, 2), (0, 0), 0, 4),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_catalog_frozen_structure(name):
    datum = catalog_datum(name)
    order, corder, rho_c, rho_n, q, nroots = FROZEN[name]
    assert len(weyl_group(datum, "full")) == order
    assert len(weyl_group(datum, "compact")) == corder
    assert datum.rho_c.coords2 == rho_c
    assert datum.rho_n.coords2 == rho_n
    assert datum.q == q
    assert len(datum.positive_roots) == nroots
    assert datum.rho.coords2 == (2,) * datum.rank
    assert datum.rho == datum.rho_c + datum.rho_n


def test_positive_roots_sum_to_twice_rho():
    for name in FROZEN:
        datum = catalog_datum(name)
        total = Weight.zero(datum.rank)
        for r in datum.positive_roots:
            total = total + r
        assert total == datum.rho + datum.rho


def test_su3_invariant_form():
    datum = catalog_datum("su3")
    w1 = Weight.fundamental(2, 1)
    w2 = Weight.fundamental(2, 2)
    assert pairing(datum, w1, w1) == Fraction(2, 3)
    assert pairing(datum, w1, w2) == Fraction(1, 3)
    a1 = datum.simple_root(1)
    assert pairing(datum, a1, a1) == 2
    assert pair_coroot(datum, w1, a1) == 1


def test_so5_symmetrizer_and_form():
    datum = catalog_datum("so5")
    assert datum.symmetrizer in ((1, 2), (2, 1))
    for i in (1, 2):
        alpha = datum.simple_root(i)
        assert pair_coroot(datum, alpha, alpha) == 2


def test_simple_reflection_moves_rho_by_root():
    for name in ("su3", "sp4R"):
        datum = catalog_datum(name)
        for w in weyl_group(datum, "full"):
            if len(w.word) == 1:
                i = w.word[0]
                assert weyl_act(w, datum.rho) == datum.rho - datum.simple_root(i)


def test_longest_element_negates_dominant_cone():
    for name in ("su2", "su3", "so5"):
        datum = catalog_datum(name)
        w0 = longest_element(datum)
        assert len(w0.word) == len(datum.positive_roots)
        image = weyl_act(w0, datum.rho)
        assert image == -datum.rho or is_dominant(datum, -image)


def test_weyl_group_is_closed_and_signs_multiply():
    from liechar.roots import mat_mul

    datum = catalog_datum("so5")
    group = weyl_group(datum, "full")
    signs = {w.matrix: w.sign for w in group}
    for u in group:
        for v in group:
            prod = mat_mul(u.matrix, v.matrix)
            assert signs[prod] == u.sign * v.sign


def test_dominant_representative_is_orbit_invariant(rng):
    datum = catalog_datum("sp4R")
    for _ in range(20):
        mu = Weight((rng.randrange(-8, 9), rng.randrange(-8, 9)))
        rep = dominant_representative(datum, mu)
        assert is_dominant(datum, rep)
        for w in weyl_group(datum, "full"):
            assert dominant_representative(datum, weyl_act(w, mu)) == rep


def test_root_membership_and_coefficients():
    datum = catalog_datum("su21")
    a1, a2 = datum.simple_root(1), datum.simple_root(2)
    assert datum.is_root(a1 + a2)
    assert not datum.is_root(a1 + a1)
    assert datum.coeffs_of(a1 + a2) == (1, 1)
    assert datum.epsilon_of(a1) == 0
    assert datum.epsilon_of(a2) == 1
    assert datum.epsilon_of(a1 + a2) == 1


def test_datum_from_text_roundtrip():
    datum = datum_from_text("cartan:2,-1;-2,2 noncompact:2")
    assert datum.rank == 2
    assert datum.q == catalog_datum("sp4R").q
    assert datum_from_text("su21").rank == 2


def test_input_validation_errors():
    with pytest.raises(NotFiniteType):
        build_root_datum(((2, -2), (-2, 2)))  # affine, not positive definite
    with pytest.raises(NotFiniteType):
        build_root_datum(((2, 1), (1, 2)))  # positive off-diagonal
    with pytest.raises(NotFiniteType):
        build_root_datum(((2, -1), (0, 2)))  # broken symmetry pattern
    with pytest.raises(InvalidNoncompactSet):
        build_root_datum(((2, -1), (-1, 2)), noncompact=(3,))
    with pytest.raises(InputError):
        datum_from_text("no such datum")
    with pytest.raises(InputError):
        catalog_datum("sl3R")


def test_weight_arithmetic_guards():
    with pytest.raises(RankMismatch):
        Weight((2, 0)) + Weight((2,))
    with pytest.raises(ValueError):
        Weight((1, 2)).half()
    assert Weight((2, 4)).half() == Weight((1, 2))
    assert Weight((2, 4)).is_integral()
    assert not Weight((1, 2)).is_integral()
    assert (-Weight((2, -4))).coords2 == (-2, 4)
    assert Weight((2,)).scaled(3).coords2 == (6,)
