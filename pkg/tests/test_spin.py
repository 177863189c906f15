import pytest
from helpers import random_valid_parameter

from liechar import (
    Weight,
    catalog_datum,
    dirac_induction_ktype_check,
    exterior_p,
    lowest_k_type,
    make_hc_parameter,
    spin_alternating_identity_holds,
    spin_module,
    verify_spin_exterior_lemma,
)

PAIRS = ("sl2R", "su21", "sp4R")


def test_su21_spin_module_frozen():
    datum = catalog_datum("su21")
    hcp = make_hc_parameter(datum, datum.rho)
    spin = spin_module(hcp)
    assert spin.even == {Weight((0, 3)): 1, Weight((0, -3)): 1}
    assert spin.odd == {Weight((2, -1)): 1, Weight((-2, 1)): 1}
    assert spin.total_dimension == 4


def test_su21_exterior_frozen():
    datum = catalog_datum("su21")
    hcp = make_hc_parameter(datum, datum.rho)
    ext = exterior_p(hcp)
    assert ext.even == {Weight((0, 0)): 1, Weight((0, 6)): 1}
    assert ext.odd == {Weight((-2, 4)): 1, Weight((2, 2)): 1}


@pytest.mark.parametrize("name", PAIRS)
def test_spin_dimension_is_two_to_q(name):
    datum = catalog_datum(name)
    hcp = make_hc_parameter(datum, datum.rho)
    assert spin_module(hcp).total_dimension == 2**datum.q
    assert exterior_p(hcp).total_dimension == 2**datum.q


@pytest.mark.parametrize("name", PAIRS)
def test_spin_exterior_lemma(name):
    datum = catalog_datum(name)
    hcp = make_hc_parameter(datum, datum.rho)
    report = verify_spin_exterior_lemma(hcp)
    assert report.passed
    assert report.orientation == ("straight" if datum.q % 2 == 0 else "reversed")
    assert spin_alternating_identity_holds(hcp)


def test_lemma_on_compact_pairs_is_trivially_straight():
    # a compact datum has an empty noncompact set, one-dimensional spin
    datum = catalog_datum("su3")
    hcp = make_hc_parameter(datum, datum.rho)
    report = verify_spin_exterior_lemma(hcp)
    assert report.passed and report.orientation == "straight"
    assert spin_module(hcp).total_dimension == 1


def test_sl2_induction_frozen():
    datum = catalog_datum("sl2R")
    hcp = make_hc_parameter(datum, Weight((4,)))
    rep = dirac_induction_ktype_check(hcp)
    assert rep.passed
    assert list(rep.plus_constituents) == [(Weight((6,)), 1)]
    assert list(rep.minus_constituents) == [(Weight((2,)), 1)]
    assert rep.top == lowest_k_type(hcp)


def test_su21_induction_frozen():
    datum = catalog_datum("su21")
    hcp = make_hc_parameter(datum, datum.rho)
    rep = dirac_induction_ktype_check(hcp)
    assert rep.passed
    assert sorted((w.coords2, m) for w, m in rep.plus_constituents) == [
        ((0, 0), 1),
        ((0, 6), 1),
    ]
    assert sorted((w.coords2, m) for w, m in rep.minus_constituents) == [((2, 2), 1)]


@pytest.mark.parametrize("name", PAIRS)
def test_induction_multiplicity_one_random(name, rng):
    datum = catalog_datum(name)
    for _ in range(4):
        hcp = make_hc_parameter(datum, random_valid_parameter(datum, rng))
        rep = dirac_induction_ktype_check(hcp)
        assert rep.passed, rep.offending
        assert rep.top_multiplicity_plus == 1
        assert rep.top_multiplicity_minus == 0
        assert rep.top == lowest_k_type(hcp)
