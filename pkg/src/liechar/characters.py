"""Exact arithmetic with finite integer combinations of weight exponentials.

A character element is a plain ``dict[Weight, int]`` with no zero values;
the empty dict is zero.  All ring arithmetic is exact.  Division and
leading-term extraction use the lexicographic order on simple-root
coordinates, which is compatible with multiplication and puts the highest
weight of an invariant element first.

Torus evaluation is the one deliberately floating-point operation here:
e^mu(t) = exp(i/2 * <coords2(mu), angles>), so an angle vector theta gives
e^{omega_j}(t) = exp(i*theta_j).
"""

from __future__ import annotations

import cmath
import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import (
    NonDominantLeadingTerm,
    NotDivisible,
    NotDominant,
    NotDominantForK,
    NotIntegral,
    NotInvariant,
    RankMismatch,
)
from .roots import (
    RootDatum,
    Weight,
    WeylElement,
    dominant_representative,
    longest_element,
    mat_inverse_int,
    pair_coroot,
    reflection_element,
    root_coords,
    weyl_act,
    weyl_group,
)

Char = dict[Weight, int]

REGULARITY_TOL = 1e-9


def collect(items) -> Char:
    out: Char = {}
    for w, c in items:
        if c:
            acc = out.get(w, 0) + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
    return out


def monomial(mu: Weight, c: int = 1) -> Char:
    return {mu: c} if c else {}


def char_add(a: Char, b: Char) -> Char:
    return collect(itertools.chain(a.items(), b.items()))


def char_sub(a: Char, b: Char) -> Char:
    return collect(itertools.chain(a.items(), ((w, -c) for w, c in b.items())))


def char_neg(a: Char) -> Char:
    return {w: -c for w, c in a.items()}


def char_scale(a: Char, k: int) -> Char:
    if not k:
        return {}
    return {w: k * c for w, c in a.items()}


def char_mul(a: Char, b: Char) -> Char:
    out: Char = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            acc = out.get(w, 0) + ca * cb
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
    return out


def char_act(w: WeylElement, a: Char) -> Char:
    return {weyl_act(w, mu): c for mu, c in a.items()}


def dimension_of(a: Char) -> int:
    """Coefficient sum: the value at the identity torus element, exactly."""
    return sum(a.values())


def alternating_sum(datum: RootDatum, mu: Weight, which: str = "full") -> Char:
    """Signed orbit sum over the chosen reflection group."""
    return collect((weyl_act(w, mu), w.sign) for w in weyl_group(datum, which))


def weyl_denominator(datum: RootDatum, which: str = "full") -> Char:
    rho = datum.rho if which == "full" else datum.rho_c
    return alternating_sum(datum, rho, which)


def denominator_product(datum: RootDatum) -> Char:
    """e^rho * prod over positive roots of (1 - e^{-alpha}), expanded."""
    out = monomial(datum.rho)
    one = Weight.zero(datum.rank)
    for alpha in datum.positive_roots:
        out = char_mul(out, {one: 1, -alpha: -1})
    return out


# ---------------------------------------------------------------------------
# torus elements and evaluation


@dataclass(frozen=True)
class TorusElement:
    """Point of the compact torus, as angle coordinates of e^{omega_j}."""

    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "angles", tuple(float(x) for x in self.angles))

    @property
    def rank(self) -> int:
        return len(self.angles)


def exp_at(mu: Weight, t: TorusElement) -> complex:
    if mu.rank != t.rank:
        raise RankMismatch(f"weight rank {mu.rank} against torus rank {t.rank}")
    return cmath.exp(0.5j * sum(c * th for c, th in zip(mu.coords2, t.angles)))


def evaluate(a: Char, t: TorusElement) -> complex:
    """Sum of coefficient * e^mu(t), in a fixed support order."""
    total = 0j
    for mu in sorted(a, key=lambda w: w.coords2):
        total += a[mu] * exp_at(mu, t)
    return total


def is_regular(datum: RootDatum, t: TorusElement, tol: float = REGULARITY_TOL) -> bool:
    """Whether no root exponential degenerates at t."""
    return all(
        abs(exp_at(alpha, t) - 1.0) > tol for alpha in datum.positive_roots
    )


def torus_act(w: WeylElement, t: TorusElement) -> TorusElement:
    """Angle action dual to the weight action: e^mu(w.t) = e^{w^{-1}mu}(t)."""
    if w.rank != t.rank:
        raise RankMismatch(f"element rank {w.rank} against torus rank {t.rank}")
    inv = mat_inverse_int(w.matrix)
    return TorusElement(
        tuple(sum(inv[j][m] * t.angles[j] for j in range(w.rank)) for m in range(w.rank))
    )


# ---------------------------------------------------------------------------
# term order and exact division


@lru_cache(maxsize=None)
def _order_matrix(datum: RootDatum) -> tuple[tuple[int, ...], ...]:
    # integer rescaling of simple-root coordinates of coords2: rows of
    # inv(C^T) with denominators cleared; lex on the image is the term order
    den = lcm(*(f.denominator for row in datum.inv_cartan_t for f in row))
    return tuple(
        tuple(int(f * den) for f in row) for row in datum.inv_cartan_t
    )


def order_key(datum: RootDatum):
    """Key for the term order: scaled simple-root coordinates, lex."""
    mat = _order_matrix(datum)

    def key(mu: Weight) -> tuple[int, ...]:
        c2 = mu.coords2
        return tuple(sum(r * c for r, c in zip(row, c2)) for row in mat)

    return key


def leading_term(datum: RootDatum, a: Char) -> tuple[Weight, int]:
    if not a:
        raise ValueError("zero element has no leading term")
    mu = max(a, key=order_key(datum))
    return mu, a[mu]


def exact_divide(datum: RootDatum, num: Char, den: Char) -> Char:
    """Quotient num/den in the exponential ring; NotDivisible if inexact.

    Multivariate division against the single leading term of den.  Both
    supports are translated into the nonnegative orthant of simple-root
    coordinates; the componentwise floor of a product is the sum of the
    factors' floors (lowest graded pieces multiply without cancellation in
    an integral domain), so an exact quotient never leaves the orthant and
    the strictly decreasing leading term must exhaust it.  A step that
    walks out of the orthant, or a coefficient that fails to divide,
    certifies a nonzero remainder.
    """
    if not den:
        raise NotDivisible("division by the zero element")
    if not num:
        return {}
    key = order_key(datum)
    lead_den = max(den, key=key)
    lc_den = den[lead_den]
    key_den = key(lead_den)
    floor_num = tuple(min(col) for col in zip(*(key(w) for w in num)))
    floor_den = tuple(min(col) for col in zip(*(key(w) for w in den)))
    gap = tuple(a - b for a, b in zip(floor_num, floor_den))

    rem = dict(num)
    heap = [(tuple(-x for x in key(w)), w.coords2) for w in rem]
    heapq.heapify(heap)
    quot: Char = {}
    while rem:
        while True:
            negkey, c2 = heapq.heappop(heap)
            lead = Weight(c2)
            if lead in rem:
                break
        shift = lead - lead_den
        shift_key = tuple(-n - d for n, d in zip(negkey, key_den))
        if any(s < g for s, g in zip(shift_key, gap)):
            raise NotDivisible("leading monomial leaves the quotient support cone")
        q, r = divmod(rem[lead], lc_den)
        if r:
            raise NotDivisible("leading coefficient is not divisible")
        quot[shift] = q
        for w, cd in den.items():
            tmon = shift + w
            acc = rem.get(tmon, 0) - q * cd
            if acc:
                if tmon not in rem:
                    heapq.heappush(heap, (tuple(-x for x in key(tmon)), tmon.coords2))
                rem[tmon] = acc
            elif tmon in rem:
                del rem[tmon]
    return quot


# ---------------------------------------------------------------------------
# irreducible characters


def _check_highest_weight(datum: RootDatum, lam: Weight, which: str) -> None:
    if which == "full":
        if not lam.is_integral():
            raise NotIntegral(f"{lam.coords2} is not an integral weight")
        if any(c < 0 for c in lam.coords2):
            raise NotDominant(f"{lam.coords2} is not dominant")
        return
    for alpha in datum.compact_positive_roots:
        k = pair_coroot(datum, lam, alpha)
        if k.denominator != 1 or k < 0:
            raise NotDominantForK(
                f"{lam.coords2} pairs with the coroot of compact {alpha.coords2} as {k}"
            )


def weyl_character(datum: RootDatum, lam: Weight, which: str = "full") -> Char:
    """Irreducible character with highest weight lam, as the quotient of
    alternating sums over the chosen reflection group."""
    _check_highest_weight(datum, lam, which)
    rho = datum.rho if which == "full" else datum.rho_c
    num = alternating_sum(datum, lam + rho, which)
    den = alternating_sum(datum, rho, which)
    return exact_divide(datum, num, den)


def _pair_int(datum: RootDatum, a: Weight, b: Weight) -> int:
    """Invariant pairing times 4*gram_den: exact, consistently scaled."""
    acc = 0
    g = datum.gram_int
    ca, cb = a.coords2, b.coords2
    for i in range(datum.rank):
        if ca[i]:
            row = g[i]
            acc += ca[i] * sum(row[j] * cb[j] for j in range(datum.rank))
    return acc


def freudenthal_character(datum: RootDatum, lam: Weight) -> Char:
    """The same character as ``weyl_character``, by the recursive
    multiplicity formula; shares no code path with the division route."""
    _check_highest_weight(datum, lam, "full")
    w0 = longest_element(datum)
    span = lam - weyl_act(w0, lam)
    box = []
    for c in root_coords(datum, span):
        assert c.denominator == 1 and c >= 0
        box.append(int(c))

    simples = [datum.simple_root(i + 1) for i in range(datum.rank)]
    candidates: list[tuple[int, tuple[int, ...], Weight]] = []
    for n in itertools.product(*(range(b + 1) for b in box)):
        mu = lam
        for ni, alpha in zip(n, simples):
            if ni:
                mu = mu - alpha.scaled(ni)
        if all(c >= 0 for c in mu.coords2):
            candidates.append((sum(n), n, mu))
    candidates.sort(key=lambda t: (t[0], t[1]))

    lam_rho = lam + datum.rho
    norm_top = _pair_int(datum, lam_rho, lam_rho)
    dom_mult: dict[Weight, int] = {}
    for height, n, mu in candidates:
        if height == 0:
            dom_mult[mu] = 1
            continue
        total = 0
        for alpha in datum.positive_roots:
            a = datum.coeffs_of(alpha)
            k = 1
            while all(ni - k * ai >= 0 for ni, ai in zip(n, a)):
                nu = mu + alpha.scaled(k)
                m = dom_mult.get(dominant_representative(datum, nu), 0)
                if m:
                    total += m * _pair_int(datum, nu, alpha)
                k += 1
        mu_rho = mu + datum.rho
        gap = norm_top - _pair_int(datum, mu_rho, mu_rho)
        assert gap > 0
        mult, r = divmod(2 * total, gap)
        assert r == 0
        if mult:
            dom_mult[mu] = mult

    full = weyl_group(datum, "full")
    out: Char = {}
    for mu, m in dom_mult.items():
        for nu in {weyl_act(w, mu) for w in full}:
            out[nu] = m
    return out


def dimension(datum: RootDatum, lam: Weight) -> int:
    """Dimension of the highest weight module, by the product formula."""
    _check_highest_weight(datum, lam, "full")
    lam_rho = lam + datum.rho
    val = Fraction(1)
    for alpha in datum.positive_roots:
        val *= Fraction(
            _pair_int(datum, lam_rho, alpha), _pair_int(datum, datum.rho, alpha)
        )
    assert val.denominator == 1
    return int(val)


def _invariance_generators(datum: RootDatum, which: str) -> tuple[WeylElement, ...]:
    if which == "full":
        return tuple(
            w for w in weyl_group(datum, "full") if len(w.word) == 1
        )
    return tuple(
        reflection_element(datum, alpha) for alpha in datum.compact_positive_roots
    )


def decompose(
    datum: RootDatum, a: Char, which: str = "full"
) -> list[tuple[Weight, int]]:
    """Write an invariant element as an integer combination of irreducible
    characters of the chosen subsystem, highest weight with multiplicity,
    leading weight first.  Negative multiplicities are legitimate output
    (virtual characters).

    Invariance is checked on reflection generators up front.  After that,
    leading-term stripping must terminate: each step cancels the current
    order maximum exactly, every new support weight sits strictly below it
    in a fixed translated cone, and the order is a well order there.
    """
    for g in _invariance_generators(datum, which):
        if char_act(g, a) != a:
            raise NotInvariant(
                f"not invariant under the reflection with word {g.word}"
            )
    key = order_key(datum)
    rem = dict(a)
    out: list[tuple[Weight, int]] = []
    while rem:
        mu = max(rem, key=key)
        try:
            _check_highest_weight(datum, mu, which)
        except (NotDominant, NotIntegral, NotDominantForK) as exc:
            raise NonDominantLeadingTerm(str(exc)) from None
        c = rem[mu]
        out.append((mu, c))
        rem = char_sub(rem, char_scale(weyl_character(datum, mu, which), c))
    return out
