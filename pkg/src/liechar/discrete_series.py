"""Harish-Chandra parameters and discrete series character values on the
compact torus.

The character of the series attached to a strictly dominant parameter
lambda is evaluated, at a regular torus element, as

    (-1)^q * sum over w in W_c of sign(w) e^{w lambda}(t)
    -----------------------------------------------------
          (e^rho * prod over alpha > 0 of (1 - e^{-alpha}))(t)

with q the number of noncompact positive roots.  When every root is
compact, W_c is all of W and this reduces to the Weyl character formula
for the highest weight lambda - rho.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import TorusElement, evaluate, exp_at, weyl_character
from .errors import NotIntegral, NotRegular, SingularElement
from .roots import RootDatum, Weight, pairing, weyl_act, weyl_group

SINGULAR_TOL = 1e-9


@dataclass(frozen=True)
class HCParameter:
    """Validated discrete series parameter: strictly dominant, rho-shifted
    integral.  q and sign are copied off the datum for convenience."""

    datum: RootDatum
    lam: Weight
    q: int
    sign: int


def make_hc_parameter(datum: RootDatum, lam: Weight) -> HCParameter:
    """Validate lambda as a parameter in the fixed dominant chamber.

    Any parameter regular for some positive system has exactly one Weyl
    translate in this chamber, so insisting on positive pairings loses no
    generality and keeps rho, rho_c and W_c coherent with the datum.
    """
    if not (lam + datum.rho).is_integral():
        raise NotIntegral(
            f"{lam.coords2} shifted by the Weyl vector is not integral"
        )
    for alpha in datum.positive_roots:
        if pairing(datum, lam, alpha) <= 0:
            raise NotRegular(
                f"{lam.coords2} has nonpositive pairing with root {alpha.coords2}"
            )
    return HCParameter(datum=datum, lam=lam, q=datum.q, sign=(-1) ** datum.q)


def denominator_value(datum: RootDatum, t: TorusElement) -> complex:
    """(e^rho * prod (1 - e^{-alpha}))(t), the evaluated denominator."""
    val = exp_at(datum.rho, t)
    for alpha in datum.positive_roots:
        val *= 1.0 - exp_at(-alpha, t)
    return val


def ds_character_value(hcp: HCParameter, t: TorusElement) -> complex:
    datum = hcp.datum
    den = denominator_value(datum, t)
    if abs(den) < SINGULAR_TOL:
        raise SingularElement(
            f"denominator modulus {abs(den):.3e} at angles {t.angles}"
        )
    num = 0j
    for w in weyl_group(datum, "compact"):
        num += w.sign * exp_at(weyl_act(w, hcp.lam), t)
    return hcp.sign * num / den


def lowest_k_type(hcp: HCParameter) -> Weight:
    """Highest weight of the minimal K-constituent: lambda + rho - 2 rho_c."""
    datum = hcp.datum
    return hcp.lam + datum.rho - datum.rho_c.scaled(2)


def compact_reduction_value(hcp: HCParameter, t: TorusElement) -> complex:
    """For a datum with no noncompact roots: the finite-dimensional
    character value the series degenerates to."""
    return evaluate(weyl_character(hcp.datum, hcp.lam - hcp.datum.rho), t)
