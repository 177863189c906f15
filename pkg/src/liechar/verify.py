"""Self-contained verification suites over the built-in catalog.

The basic suite exercises exact structural facts that every datum must
satisfy: antisymmetry and product expansion of the Weyl denominator,
multiplicativity of the sign character, additivity of the compactness
grading across root addition, the splitting of the half-sum into its
compact and noncompact parts, and invariance of the discrete series
character under the compact Weyl group at random regular torus points.

The full suite layers the cross-module identities on top: character
oracle agreement, spin and induction lemmas, the fixed point identity,
and the SU(1,1) quadrature closures.  Randomness is seeded so repeated
runs produce identical reports.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from . import su11
from .characters import (
    TorusElement,
    alternating_sum,
    char_act,
    char_scale,
    decompose,
    denominator_product,
    evaluate,
    freudenthal_character,
    is_regular,
    torus_act,
    weyl_character,
    weyl_denominator,
)
from .discrete_series import ds_character_value, make_hc_parameter
from .fixed_point import (
    cleared_term_identity_holds,
    compact_assembly_check,
    index_identity_deviation,
)
from .roots import CATALOG, Weight, catalog_datum, mat_mul, weyl_group
from .spin import (
    dirac_induction_ktype_check,
    spin_alternating_identity_holds,
    verify_spin_exterior_lemma,
)

SEED = 20260819
VALUE_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def random_regular_torus(datum, rng: random.Random) -> TorusElement:
    while True:
        t = TorusElement(
            tuple(rng.uniform(0.2, 2.0 * math.pi - 0.2) for _ in range(datum.rank))
        )
        if is_regular(datum, t):
            return t


def _denominator_checks(name: str, datum) -> list[CheckResult]:
    out = []
    den = weyl_denominator(datum)
    prod = denominator_product(datum)
    out.append(
        _result(
            f"{name}/denominator-product-expansion",
            den == prod,
            "alternating sum over W of the half-sum orbit equals the expanded product",
        )
    )
    anti = all(
        char_act(w, den) == char_scale(den, w.sign) for w in weyl_group(datum, "full")
    )
    out.append(
        _result(
            f"{name}/denominator-antisymmetry",
            anti,
            "w acts on the denominator by its sign, exactly, for every w",
        )
    )
    return out


def _sign_checks(name: str, datum) -> list[CheckResult]:
    full = weyl_group(datum, "full")
    by_matrix = {w.matrix: w.sign for w in full}
    ok = all(
        by_matrix[mat_mul(u.matrix, v.matrix)] == u.sign * v.sign
        for u in full
        for v in full
    )
    return [
        _result(
            f"{name}/sign-multiplicativity",
            ok,
            f"checked all {len(full) ** 2} products",
        )
    ]


def _epsilon_checks(name: str, datum) -> list[CheckResult]:
    roots = datum.positive_roots
    ok = True
    tried = 0
    for a in roots:
        for b in roots:
            s = a + b
            if s in set(roots):
                tried += 1
                if (datum.epsilon_of(a) + datum.epsilon_of(b)) % 2 != datum.epsilon_of(s):
                    ok = False
    for i in range(1, datum.rank + 1):
        want = 1 if i in datum.noncompact else 0
        if datum.epsilon_of(datum.simple_root(i)) != want:
            ok = False
    return [
        _result(
            f"{name}/grading-additivity",
            ok,
            f"parity adds over {tried} root sums and matches the painted set",
        )
    ]


def _rho_checks(name: str, datum) -> list[CheckResult]:
    half = Weight.zero(datum.rank)
    half_c = Weight.zero(datum.rank)
    half_n = Weight.zero(datum.rank)
    for r in datum.positive_roots:
        half = half + r
        if datum.epsilon_of(r) == 0:
            half_c = half_c + r
        else:
            half_n = half_n + r
    ok = (
        datum.rho == half.half()
        and datum.rho_c == half_c.half()
        and datum.rho_n == half_n.half()
        and datum.rho == datum.rho_c + datum.rho_n
        and datum.q == len(datum.noncompact_positive_roots)
    )
    return [
        _result(
            f"{name}/half-sum-splitting",
            ok,
            "rho, rho_c, rho_n are the three half-sums and rho = rho_c + rho_n",
        )
    ]


def _invariance_checks(name: str, datum, rng: random.Random) -> list[CheckResult]:
    hcp = make_hc_parameter(datum, datum.rho)
    compact = weyl_group(datum, "compact")
    worst = 0.0
    for _ in range(3):
        t = random_regular_torus(datum, rng)
        base = ds_character_value(hcp, t)
        for w in compact:
            dev = abs(ds_character_value(hcp, torus_act(w, t)) - base)
            worst = max(worst, dev)
    return [
        _result(
            f"{name}/character-compact-weyl-invariance",
            worst <= VALUE_TOL,
            f"max deviation {worst:.3e} over {len(compact)} elements x 3 points",
        )
    ]


def _structural_suite(rng: random.Random) -> list[CheckResult]:
    out: list[CheckResult] = []
    for name in CATALOG:
        datum = catalog_datum(name)
        out.extend(_denominator_checks(name, datum))
        out.extend(_sign_checks(name, datum))
        out.extend(_epsilon_checks(name, datum))
        out.extend(_rho_checks(name, datum))
        out.extend(_invariance_checks(name, datum, rng))
    return out


def _full_suite(rng: random.Random) -> list[CheckResult]:
    out: list[CheckResult] = []

    for name in ("su2", "su3", "so5"):
        datum = catalog_datum(name)
        lam = datum.rho + datum.rho
        chi = weyl_character(datum, lam)
        ok = freudenthal_character(datum, lam) == chi
        parts = decompose(datum, chi)
        ok = ok and parts == [(lam, 1)]
        out.append(
            _result(
                f"{name}/oracle-agreement",
                ok,
                "recursion matches the quotient character and it decomposes as itself",
            )
        )

    for name in ("sl2R", "su21", "sp4R"):
        datum = catalog_datum(name)
        hcp = make_hc_parameter(datum, datum.rho)
        rep = verify_spin_exterior_lemma(hcp)
        out.append(
            _result(
                f"{name}/spin-exterior-lemma",
                rep.passed and spin_alternating_identity_holds(hcp),
                f"orientation {rep.orientation}",
            )
        )
        di = dirac_induction_ktype_check(hcp)
        out.append(
            _result(
                f"{name}/induction-multiplicity-one",
                di.passed,
                f"top type {list(di.top.coords2)}",
            )
        )
        t = random_regular_torus(datum, rng)
        dev = index_identity_deviation(hcp, t)
        cleared = all(
            cleared_term_identity_holds(hcp, w) for w in weyl_group(datum, "compact")
        )
        out.append(
            _result(
                f"{name}/fixed-point-identity",
                dev <= VALUE_TOL and cleared,
                f"deviation {dev:.3e}, cleared per-term identity {cleared}",
            )
        )

    for name, bundle in (("su2", Weight((2,))), ("su3", Weight((2, 2)))):
        datum = catalog_datum(name)
        t = random_regular_torus(datum, rng)
        rep = compact_assembly_check(datum, bundle, t)
        out.append(
            _result(
                f"{name}/compact-assembly",
                rep.passed,
                f"max deviation {rep.max_deviation:.3e}",
            )
        )

    g = su11.GroupElementSU11.boost(1.0)
    closed = su11.matrix_coefficient(2, g)
    oracle = su11.matrix_coefficient_quadrature(2, g)
    out.append(
        _result(
            "sl2/coefficient-oracle",
            abs(closed - oracle) <= 1e-6,
            f"closed form vs disc quadrature differ by {abs(closed - oracle):.3e}",
        )
    )
    degrees = [su11.formal_degree(n) for n in (2, 3, 4, 5)]
    out.append(
        _result(
            "sl2/formal-degree-monotone",
            all(b > a for a, b in zip(degrees, degrees[1:])),
            "strictly increasing in the series label",
        )
    )
    theta = math.pi / 2
    orb = su11.orbital_integral_character(2, theta)
    hcp = make_hc_parameter(catalog_datum("sl2R"), Weight((4,)))
    char = ds_character_value(hcp, TorusElement((theta,)))
    out.append(
        _result(
            "sl2/orbital-closure",
            abs(orb - char) <= 1e-3,
            f"|orbital - character| = {abs(orb - char):.3e}",
        )
    )
    va = su11.orbital_integral_character(3, math.pi / 3, haar_scale=1.0)
    vb = su11.orbital_integral_character(3, math.pi / 3, haar_scale=2.5)
    out.append(
        _result(
            "sl2/normalization-independence",
            abs(va - vb) <= VALUE_TOL,
            f"rescaling the Haar density moved the value by {abs(va - vb):.3e}",
        )
    )
    for mode, th in (("gaussian_l1", None), ("elliptic_fgoi", math.pi / 2)):
        rep = su11.fgoi_envelope_check(mode, theta=th)
        out.append(
            _result(
                f"sl2/{mode}-convergence",
                rep.converged,
                f"final tail {rep.tail_bounds[-1]:.3e}",
            )
        )
    return out


def run_catalog_suite(full: bool = False) -> list[CheckResult]:
    rng = random.Random(SEED)
    checks = _structural_suite(rng)
    if full:
        checks.extend(_full_suite(rng))
    return checks
