"""Numeric verification layer for SU(1,1): holomorphic discrete series
matrix coefficients, formal degrees by Haar quadrature, the orbital
integral that recovers the character at a regular rotation, and Gaussian
envelope convergence certificates.

Group elements are [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
The series labeled by an integer n >= 2 is realized on holomorphic
functions over the unit disc with probability density
(n/pi)(1 - |z|^2)^{n-1}; its lowest torus type has weight n + 1 and its
matrix coefficient at the constant unit vector has the closed form
conj(a)^{-(n+1)}, validated here against direct disc quadrature.

Haar measure is parameterized through rotation-boost-rotation
coordinates as haar_scale * 2*sinh(2t) dphi dt dpsi; every reported
quantity either carries the scale or is scale-free by construction.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .errors import InputError, NotConverged, NotDiscreteSeries, SingularElement

# norm of the boost generator is 1 and of the rotation generator is 1 in
# the inner product (X, Y) = Re trace(X Y*) / 2, so the rotation subgroup
# is a circle of length 2*pi and its diameter is half of that
DIAM_K = math.pi

SINGULAR_TOL = 1e-9
TAIL_TOL = 1e-6
REFINE_TOL = 1e-4
FGOI_SEGMENTS = 8

# hyperbolic truncation radius at which the elliptic envelope tail bound
# clears TAIL_TOL with orders of magnitude to spare
ELLIPTIC_DISC_R_MAX = math.tanh(7.0)


@dataclass(frozen=True)
class GroupElementSU11:
    a: complex
    b: complex

    def __post_init__(self) -> None:
        a, b = complex(self.a), complex(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        scale = abs(a) ** 2 + abs(b) ** 2
        if abs(abs(a) ** 2 - abs(b) ** 2 - 1.0) > 1e-12 * max(1.0, scale):
            raise InputError(
                f"determinant |a|^2-|b|^2 = {abs(a)**2 - abs(b)**2!r} is not 1"
            )

    @staticmethod
    def rotation(theta: float) -> "GroupElementSU11":
        return GroupElementSU11(cmath.exp(1j * theta), 0j)

    @staticmethod
    def boost(t: float) -> "GroupElementSU11":
        return GroupElementSU11(math.cosh(t), math.sinh(t))

    @staticmethod
    def from_disc_point(w: complex) -> "GroupElementSU11":
        """The standard transversal over the disc: maps 0 to w."""
        w = complex(w)
        if abs(w) >= 1.0:
            raise InputError(f"|w| = {abs(w)} is not inside the unit disc")
        s = 1.0 / math.sqrt(1.0 - abs(w) ** 2)
        return GroupElementSU11(s, w * s)

    def mul(self, other: "GroupElementSU11") -> "GroupElementSU11":
        return GroupElementSU11(
            self.a * other.a + self.b * other.b.conjugate(),
            self.a * other.b + self.b * other.a.conjugate(),
        )

    def inverse(self) -> "GroupElementSU11":
        return GroupElementSU11(self.a.conjugate(), -self.b)

    def matrix(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.a, self.b), (self.b.conjugate(), self.a.conjugate()))


def kak_radial(g: GroupElementSU11) -> float:
    """The boost coordinate t >= 0 of g in rotation-boost-rotation form."""
    return math.acosh(max(1.0, abs(g.a)))


@dataclass(frozen=True)
class QuadratureGrid:
    radial_nodes: int = 320
    angular_nodes: int = 64
    t_max: float = 14.0
    disc_r_max: float = 0.9999

    def __post_init__(self) -> None:
        if self.radial_nodes < 2 or self.angular_nodes < 2:
            raise InputError("node counts must be at least 2")
        if not self.t_max > 0:
            raise InputError("t_max must be positive")
        if not 0.0 < self.disc_r_max < 1.0:
            raise InputError("disc_r_max must lie strictly between 0 and 1")

    def halved(self) -> "QuadratureGrid":
        """Same truncations, half the nodes: the refinement partner."""
        return QuadratureGrid(
            radial_nodes=max(2, self.radial_nodes // 2),
            angular_nodes=max(2, self.angular_nodes // 2),
            t_max=self.t_max,
            disc_r_max=self.disc_r_max,
        )


DEFAULT_GRID = QuadratureGrid()


def _require_weight(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise NotDiscreteSeries(
            f"series label must be an integer >= 2, got {n!r}"
        )
    return n


def _require_scale(haar_scale: float) -> float:
    haar_scale = float(haar_scale)
    if not haar_scale > 0:
        raise InputError("haar_scale must be positive")
    return haar_scale


@lru_cache(maxsize=32)
def _gauss(nodes: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    x, w = np.polynomial.legendre.leggauss(nodes)
    return tuple(x), tuple(w)


def _gl(a: float, b: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _gauss(nodes)
    x = np.asarray(x)
    w = np.asarray(w)
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _mul2(a1, b1, a2, b2):
    """(a, b) entries of the product of two [[a,b],[conj b, conj a]]
    matrices; works on scalars and broadcast numpy arrays alike."""
    return (
        a1 * a2 + b1 * np.conjugate(b2),
        a1 * b2 + b1 * np.conjugate(a2),
    )


# ---------------------------------------------------------------------------
# matrix coefficients


def matrix_coefficient(n: int, g: GroupElementSU11) -> complex:
    """Coefficient of the constant unit vector: conj(a)^{-(n+1)}.

    Derivation: the group acts by
    (pi(g) f)(z) = (conj(a) - b z)^{-(n+1)} f((a z - conj(b)) / (conj(a) - b z)),
    and pairing pi(g)1 against 1 kills every positive power of z in the
    binomial expansion of the multiplier.
    """
    n = _require_weight(n)
    return g.a.conjugate() ** (-(n + 1))


def matrix_coefficient_quadrature(
    n: int, g: GroupElementSU11, grid: QuadratureGrid = DEFAULT_GRID
) -> complex:
    """Independent check value: the same coefficient as a literal disc
    integral of (conj(a) - b z)^{-(n+1)} against the weighted area
    density (n/pi)(1-|z|^2)^{n-1}."""
    n = _require_weight(n)
    r, wr = _gl(0.0, grid.disc_r_max, grid.radial_nodes)
    m = grid.angular_nodes
    phi = 2.0 * math.pi * np.arange(m) / m
    z = r[:, None] * np.exp(1j * phi)[None, :]
    vals = (g.a.conjugate() - g.b * z) ** (-(n + 1))
    dens = (n / math.pi) * (1.0 - r[:, None] ** 2) ** (n - 1)
    area = r[:, None] * wr[:, None] * (2.0 * math.pi / m)
    return complex(np.sum(vals * dens * area))


# ---------------------------------------------------------------------------
# formal degree


def _l2_norm_squared(n: int, grid: QuadratureGrid, haar_scale: float) -> float:
    t, wt = _gl(0.0, grid.t_max, grid.radial_nodes)
    m = grid.angular_nodes
    ang = 2.0 * math.pi * np.arange(m) / m
    ka = np.exp(1j * ang)

    a1, b1 = _mul2(
        ka[None, :, None], 0.0, np.cosh(t)[:, None, None], np.sinh(t)[:, None, None]
    )
    ag, _bg = _mul2(a1, b1, ka[None, None, :], 0.0)
    msq = np.abs(np.conjugate(ag) ** (-(n + 1))) ** 2
    jac = 2.0 * np.sinh(2.0 * t)
    w_ang = 2.0 * math.pi / m
    total = np.sum(msq * (jac * wt)[:, None, None]) * w_ang * w_ang
    return haar_scale * float(total)


def formal_degree_report(n: int, grid: QuadratureGrid, haar_scale: float) -> dict:
    n = _require_weight(n)
    haar_scale = _require_scale(haar_scale)
    norm2 = _l2_norm_squared(n, grid, haar_scale)
    tail = haar_scale * 8.0 * math.pi**2 * math.cosh(grid.t_max) ** (-2 * n) / n
    if tail > TAIL_TOL * norm2:
        raise NotConverged(
            f"norm tail bound {tail:.3e} exceeds {TAIL_TOL:.0e} of the value"
        )
    coarse = _l2_norm_squared(n, grid.halved(), haar_scale)
    if abs(norm2 - coarse) > REFINE_TOL * abs(norm2):
        raise NotConverged(
            f"norm changed by {abs(norm2 - coarse) / abs(norm2):.3e} under halving"
        )
    return {
        "value": 1.0 / norm2,
        "norm_squared": norm2,
        "tail_bound": tail,
        "haar_scale": haar_scale,
        "grid": grid,
    }


def formal_degree(
    n: int, grid: QuadratureGrid = DEFAULT_GRID, haar_scale: float = 1.0
) -> float:
    """Reciprocal of the squared L2 norm of the matrix coefficient, by
    quadrature in rotation-boost-rotation coordinates.  Scales like
    1/haar_scale, as a density against the chosen Haar normalization."""
    return formal_degree_report(n, grid, haar_scale)["value"]


# ---------------------------------------------------------------------------
# the disc as G/T


@lru_cache(maxsize=32)
def disc_measure_constant(
    grid: QuadratureGrid = DEFAULT_GRID, haar_scale: float = 1.0
) -> float:
    """Constant C with  integral over G  =  C * integral over the disc of
    the Lebesgue integrand times (1-|w|^2)^{-2},  for functions pulled
    back from G/T, with T given unit mass.

    Fixed numerically once per grid by integrating a bump in the boost
    radius both ways and matching; comes out at 8*pi*haar_scale.
    """
    haar_scale = _require_scale(haar_scale)
    t_c = min(3.0, grid.t_max)

    t, wt = _gl(0.0, t_c, grid.radial_nodes)
    bump = (1.0 - (t / t_c) ** 2) ** 3
    kak_val = haar_scale * (2.0 * math.pi) ** 2 * float(
        np.sum(bump * 2.0 * np.sinh(2.0 * t) * wt)
    )

    r, wr = _gl(0.0, math.tanh(t_c), grid.radial_nodes)
    bump_r = (1.0 - (np.arctanh(r) / t_c) ** 2) ** 3
    disc_val = 2.0 * math.pi * float(
        np.sum(bump_r * (1.0 - r**2) ** (-2) * r * wr)
    )
    return kak_val / disc_val


def _conjugated_a_entries(theta: float, r: np.ndarray) -> np.ndarray:
    """a-entries of x_w k_theta x_w^{-1} for |w| = r (independent of the
    angle of w), by literal matrix products on the transversal."""
    s = 1.0 / np.sqrt(1.0 - r**2)
    ax, bx = s.astype(complex), (r * s).astype(complex)
    ka = cmath.exp(1j * theta)
    a1, b1 = _mul2(ax, bx, ka, 0.0)
    a2, _b2 = _mul2(a1, b1, np.conjugate(ax), -bx)
    return a2


def orbital_report(
    n: int, theta: float, grid: QuadratureGrid, haar_scale: float
) -> dict:
    n = _require_weight(n)
    haar_scale = _require_scale(haar_scale)
    theta = float(theta)
    if abs(cmath.exp(2j * theta) - 1.0) <= SINGULAR_TOL:
        raise SingularElement(f"rotation by {theta} is not regular")

    deg = formal_degree_report(n, grid, haar_scale)
    d = deg["value"]
    c_disc = disc_measure_constant(grid, haar_scale)

    r, wr = _gl(0.0, grid.disc_r_max, grid.radial_nodes)
    a_conj = _conjugated_a_entries(theta, r)
    coeff = np.conjugate(a_conj) ** (-(n + 1))
    u = r**2
    radial = coeff * (1.0 - u) ** (-2) * r * wr
    integral = c_disc * complex(np.sum(radial)) * 2.0 * math.pi

    u_max = grid.disc_r_max**2
    c2t = math.cos(2.0 * theta)
    if u_max <= c2t:
        m_floor = math.sin(2.0 * theta) ** 2
    else:
        m_floor = (u_max - c2t) ** 2 + math.sin(2.0 * theta) ** 2
    tail = d * c_disc * math.pi * (1.0 - u_max) ** n / (n * m_floor ** ((n + 1) / 2))
    if tail > TAIL_TOL:
        raise NotConverged(
            f"orbital tail bound {tail:.3e} exceeds {TAIL_TOL:.0e}"
        )
    return {
        "value": d * integral,
        "tail_bound": tail,
        "formal_degree": d,
        "disc_constant": c_disc,
        "haar_scale": haar_scale,
        "grid": grid,
    }


def orbital_integral_character(
    n: int,
    theta: float,
    grid: QuadratureGrid = DEFAULT_GRID,
    haar_scale: float = 1.0,
) -> complex:
    """Formal degree times the integral of the matrix coefficient over
    the conjugacy orbit of the rotation by theta, the orbit realized as
    the unit disc.  The product is normalization independent and matches
    the character value of the series at that rotation."""
    return orbital_report(n, theta, grid, haar_scale)["value"]


# ---------------------------------------------------------------------------
# Gaussian envelope certificates


@dataclass(frozen=True)
class FgoiReport:
    mode: str
    theta: float | None
    truncations: tuple[float, ...]
    partial_sums: tuple[float, ...]
    tail_bounds: tuple[float, ...]
    value: float
    converged: bool
    grid: QuadratureGrid
    haar_scale: float
    diam_k: float = DIAM_K


def _envelope(t: np.ndarray) -> np.ndarray:
    """exp(-max(0, t - 2*diam_K)^2): the computable upper bound for the
    Gaussian of the distance, evaluated at boost radius t."""
    return np.exp(-np.maximum(0.0, t - 2.0 * DIAM_K) ** 2)


def _gaussian_tail(t_from: float, haar_scale: float) -> float:
    """Closed-form bound for the enveloped integral beyond t_from, using
    2*sinh(2t) <= e^{2t} and completing the square against erfc."""
    two_d = 2.0 * DIAM_K

    def upper(t0: float) -> float:
        return math.exp(2.0 * two_d + 1.0) * 0.5 * math.sqrt(math.pi) * math.erfc(
            t0 - two_d - 1.0
        )

    if t_from < two_d:
        flat = 0.5 * (math.exp(2.0 * two_d) - math.exp(2.0 * t_from))
        core = flat + upper(two_d)
    else:
        core = upper(t_from)
    return haar_scale * 4.0 * math.pi**2 * core


def _elliptic_tail(s_from: float, theta: float, c_disc: float) -> float:
    """Closed-form bound beyond hyperbolic radius s_from: the boost
    radius of the conjugated rotation satisfies t >= 2s - beta, so the
    envelope decays Gaussian in s as well."""
    u0 = math.tanh(s_from) ** 2
    c2t = math.cos(2.0 * theta)
    if u0 <= c2t:
        m_floor = math.sin(2.0 * theta) ** 2
    else:
        m_floor = (u0 - c2t) ** 2 + math.sin(2.0 * theta) ** 2
    beta = 2.0 * math.log(2.0) - 0.5 * math.log(m_floor)
    cap = 2.0 * DIAM_K + beta
    v0 = 2.0 * s_from
    pref = c_disc * math.pi / 4.0

    def upper(v_from: float) -> float:
        return math.exp(cap + 0.25) * 0.5 * math.sqrt(math.pi) * math.erfc(
            v_from - cap - 0.5
        )

    if v0 < cap:
        return pref * ((math.exp(cap) - math.exp(v0)) + upper(cap))
    return pref * upper(v0)


def fgoi_envelope_check(
    mode: str,
    theta: float | None = None,
    grid: QuadratureGrid | None = None,
    haar_scale: float = 1.0,
) -> FgoiReport:
    """Integrate the Gaussian envelope over growing truncations and
    certify convergence: nondecreasing partial sums, decreasing closed
    form tail bounds, final tail below tolerance.

    gaussian_l1 integrates the envelope against the radial Haar factor;
    elliptic_fgoi integrates it along the conjugacy orbit of the rotation
    by theta over growing discs, reduced to the hyperbolic radius by
    rotation invariance of the integrand.
    """
    haar_scale = _require_scale(haar_scale)
    if mode == "gaussian_l1":
        if theta is not None:
            raise InputError("theta applies only to elliptic_fgoi mode")
        grid = grid or DEFAULT_GRID
        edges = [grid.t_max * (k + 1) / FGOI_SEGMENTS for k in range(FGOI_SEGMENTS)]
        partials = []
        tails = []
        acc = 0.0
        lo = 0.0
        for hi in edges:
            t, wt = _gl(lo, hi, grid.radial_nodes)
            acc += haar_scale * 4.0 * math.pi**2 * float(
                np.sum(_envelope(t) * 2.0 * np.sinh(2.0 * t) * wt)
            )
            partials.append(acc)
            tails.append(_gaussian_tail(hi, haar_scale))
            lo = hi
        truncations = tuple(edges)
    elif mode == "elliptic_fgoi":
        if theta is None:
            raise InputError("elliptic_fgoi mode needs theta")
        theta = float(theta)
        if abs(cmath.exp(2j * theta) - 1.0) <= SINGULAR_TOL:
            raise SingularElement(f"rotation by {theta} is not regular")
        grid = grid or replace(DEFAULT_GRID, disc_r_max=ELLIPTIC_DISC_R_MAX)
        c_disc = disc_measure_constant(grid, haar_scale)
        s_max = math.atanh(grid.disc_r_max)
        edges = [s_max * (k + 1) / FGOI_SEGMENTS for k in range(FGOI_SEGMENTS)]
        partials = []
        tails = []
        acc = 0.0
        lo = 0.0
        for hi in edges:
            s, ws = _gl(lo, hi, grid.radial_nodes)
            a_conj = _conjugated_a_entries(theta, np.tanh(s))
            t = np.arccosh(np.maximum(1.0, np.abs(a_conj)))
            acc += c_disc * math.pi * float(
                np.sum(_envelope(t) * np.sinh(2.0 * s) * ws)
            )
            partials.append(acc)
            tails.append(_elliptic_tail(hi, theta, c_disc))
            lo = hi
        truncations = tuple(edges)
    else:
        raise InputError(
            f"mode must be gaussian_l1 or elliptic_fgoi, got {mode!r}"
        )

    for prev, nxt in zip(tails, tails[1:]):
        if nxt > prev:
            raise NotConverged("tail bounds fail to decrease under growth")
    monotone = all(b >= a - 1e-12 for a, b in zip(partials, partials[1:]))
    converged = monotone and tails[-1] < TAIL_TOL
    return FgoiReport(
        mode=mode,
        theta=theta,
        truncations=truncations,
        partial_sums=tuple(partials),
        tail_bounds=tuple(tails),
        value=partials[-1],
        converged=converged,
        grid=grid,
        haar_scale=haar_scale,
    )
