"""Root systems with a compact/noncompact grading, weights, Weyl groups.

Conventions, used everywhere downstream:

* A weight is stored as the doubled coordinate vector in the fundamental
  weight basis.  Doubling keeps every half-integral object that shows up
  (half sums of root subsets, spinor weights, subsystem highest weights)
  an exact integer vector.
* ``cartan[i][j]`` is the pairing of simple root i with simple coroot j,
  so simple root i has doubled coordinates ``2 * cartan[i]``.
* Simple-root indices, including the noncompact index set, are 1-based at
  the API boundary.
* Weyl elements act on doubled coordinates through integer matrices;
  ``sign`` is the determinant, recorded as (-1)**len(word) for the reduced
  word found by breadth-first enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import (
    InputError,
    InvalidNoncompactSet,
    NotFiniteType,
    RankMismatch,
)

IntMatrix = tuple[tuple[int, ...], ...]
FracMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Weight:
    """Point of half the weight lattice, stored as doubled coordinates."""

    coords2: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords2", tuple(int(c) for c in self.coords2))

    @property
    def rank(self) -> int:
        return len(self.coords2)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self.rank, other.rank)
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self.rank, other.rank)
        return Weight(tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords2))

    def scaled(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords2))

    def half(self) -> "Weight":
        if any(c % 2 for c in self.coords2):
            raise ValueError(f"{self.coords2} is not divisible by two")
        return Weight(tuple(c // 2 for c in self.coords2))

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.coords2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords2)

    @staticmethod
    def zero(rank: int) -> "Weight":
        return Weight((0,) * rank)

    @staticmethod
    def fundamental(rank: int, i: int) -> "Weight":
        """The i-th fundamental weight, i 1-based."""
        return Weight(tuple(2 if j == i - 1 else 0 for j in range(rank)))


def _check_rank(a: int, b: int) -> None:
    if a != b:
        raise RankMismatch(f"rank {a} combined with rank {b}")


@dataclass(frozen=True)
class WeylElement:
    """Group element as a reduced word and its action on doubled coordinates."""

    word: tuple[int, ...]
    matrix: IntMatrix
    sign: int

    @property
    def rank(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Finite root system with a parity grading on its positive roots.

    ``positive_roots``, ``pos_coeffs`` and ``epsilon`` are parallel tuples;
    ``pos_coeffs[k]`` gives the simple-root coefficients of root k and
    ``epsilon[k]`` its grading (0 compact, 1 noncompact).  Equality is by
    identity: data are built once and threaded through.
    """

    rank: int
    cartan: IntMatrix
    symmetrizer: tuple[int, ...]
    noncompact: frozenset[int]
    positive_roots: tuple[Weight, ...]
    pos_coeffs: tuple[tuple[int, ...], ...]
    epsilon: tuple[int, ...]
    rho: Weight
    rho_c: Weight
    rho_n: Weight
    q: int
    gram_int: IntMatrix
    gram_den: int
    inv_cartan_t: FracMatrix
    _index: dict = field(repr=False)

    def simple_root(self, i: int) -> Weight:
        """Simple root i, 1-based."""
        return Weight(tuple(2 * c for c in self.cartan[i - 1]))

    def epsilon_of(self, root: Weight) -> int:
        return self.epsilon[self._index[root]]

    def coeffs_of(self, root: Weight) -> tuple[int, ...]:
        return self.pos_coeffs[self._index[root]]

    def is_root(self, w: Weight) -> bool:
        return w in self._index or (-w) in self._index

    @property
    def compact_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r, e in zip(self.positive_roots, self.epsilon) if e == 0)

    @property
    def noncompact_positive_roots(self) -> tuple[Weight, ...]:
        return tuple(r for r, e in zip(self.positive_roots, self.epsilon) if e == 1)


# ---------------------------------------------------------------------------
# exact linear algebra helpers (small ranks, Fractions)


def _frac_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _leading_minors_positive(b: list[list[Fraction]]) -> bool:
    n = len(b)
    for k in range(1, n + 1):
        sub = [row[:k] for row in b[:k]]
        if _frac_det(sub) <= 0:
            return False
    return True


def _frac_det(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv_p = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv_p
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_apply(m: IntMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(r * x for r, x in zip(row, v)) for row in m)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_inverse_int(m: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix that is integer again (Weyl actions)."""
    inv = _frac_inverse([[Fraction(x) for x in row] for row in m])
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix inverse is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


# ---------------------------------------------------------------------------
# construction


def _symmetrizer(cartan: list[list[int]]) -> list[int]:
    """Smallest positive integers d with d_j * C[i][j] == d_i * C[j][i]."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        comp = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                val = d[i] * Fraction(cartan[j][i], cartan[i][j])
                if d[j] is None:
                    d[j] = val
                    comp.append(j)
                    stack.append(j)
                elif d[j] != val:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
        den = lcm(*(x.denominator for x in (d[k] for k in comp)))
        nums = [d[k].numerator * (den // d[k].denominator) for k in comp]
        g = gcd(*nums) if len(nums) > 1 else nums[0]
        for k, v in zip(comp, nums):
            d[k] = Fraction(v // g)
    return [int(x) for x in d]


def _positive_root_coeffs(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """All positive roots as simple-root coefficient vectors, by level."""
    n = len(cartan)
    roots: set[tuple[int, ...]] = set()
    level = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots.update(level)
    out = list(level)
    while level:
        nxt = []
        for gamma in level:
            for i in range(n):
                # root-string condition: gamma + alpha_i is a root iff
                # p - <gamma, alpha_i^vee> >= 1 with p the depth of the string
                pair = sum(gamma[j] * cartan[j][i] for j in range(n))
                p = 0
                probe = list(gamma)
                while True:
                    probe[i] -= 1
                    tp = tuple(probe)
                    if min(probe) < 0 or tp not in roots:
                        break
                    p += 1
                if p - pair >= 1:
                    cand = list(gamma)
                    cand[i] += 1
                    tc = tuple(cand)
                    if tc not in roots:
                        roots.add(tc)
                        nxt.append(tc)
        level = nxt
        out.extend(sorted(nxt))
        if len(roots) > 10_000:
            raise NotFiniteType("positive-root closure did not terminate")
    out = sorted(set(out), key=lambda c: (sum(c), c))
    return out


def build_root_datum(cartan, noncompact=()) -> RootDatum:
    """Build the datum from a Cartan matrix and a painted simple-root set.

    ``cartan`` is a square integer matrix, ``noncompact`` a collection of
    1-based simple-root indices.  Raises NotFiniteType unless the matrix is
    symmetrizable with positive definite symmetrization.
    """
    rows = [list(map(int, row)) for row in cartan]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotFiniteType("Cartan matrix must be square and nonempty")
    for i in range(n):
        if rows[i][i] != 2:
            raise NotFiniteType("Cartan diagonal must be 2")
        for j in range(n):
            if i != j:
                if rows[i][j] > 0:
                    raise NotFiniteType("off-diagonal Cartan entries must be <= 0")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise NotFiniteType("zero pattern must be symmetric")

    nc = frozenset(int(i) for i in noncompact)
    if not nc <= set(range(1, n + 1)):
        raise InvalidNoncompactSet(f"noncompact indices must lie in 1..{n}, got {sorted(nc)}")

    d = _symmetrizer(rows)
    b = [[Fraction(rows[i][j] * d[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if b[i][j] != b[j][i]:
                raise NotFiniteType("symmetrized Cartan matrix is not symmetric")
    if not _leading_minors_positive(b):
        raise NotFiniteType("symmetrized Cartan matrix is not positive definite")

    coeffs = _positive_root_coeffs(rows)
    pos: list[Weight] = []
    eps: list[int] = []
    for c in coeffs:
        c2 = tuple(2 * sum(c[i] * rows[i][j] for i in range(n)) for j in range(n))
        pos.append(Weight(c2))
        eps.append(sum(c[i - 1] for i in nc) % 2)

    total = Weight.zero(n)
    for r in pos:
        total = total + r
    rho = total.half()
    if rho.coords2 != (2,) * n:
        raise NotFiniteType("half sum of positive roots is not the Weyl vector")
    sum_c = Weight.zero(n)
    sum_n = Weight.zero(n)
    for r, e in zip(pos, eps):
        if e == 0:
            sum_c = sum_c + r
        else:
            sum_n = sum_n + r
    rho_c = sum_c.half()
    rho_n = sum_n.half()
    q = sum(eps)

    # Gram matrix of fundamental weights: G = D (C^T)^{-1}, exact
    ct = [[Fraction(rows[j][i]) for j in range(n)] for i in range(n)]
    inv_ct = _frac_inverse(ct)
    gram = [[Fraction(d[i]) * inv_ct[i][j] for j in range(n)] for i in range(n)]
    den = lcm(*(g.denominator for row in gram for g in row)) if n else 1
    gram_int = tuple(
        tuple(int(g * den) for g in row) for row in gram
    )

    datum = RootDatum(
        rank=n,
        cartan=tuple(tuple(r) for r in rows),
        symmetrizer=tuple(d),
        noncompact=nc,
        positive_roots=tuple(pos),
        pos_coeffs=tuple(coeffs),
        epsilon=tuple(eps),
        rho=rho,
        rho_c=rho_c,
        rho_n=rho_n,
        q=q,
        gram_int=gram_int,
        gram_den=den,
        inv_cartan_t=tuple(tuple(row) for row in inv_ct),
        _index={r: k for k, r in enumerate(pos)},
    )
    return datum


CATALOG: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "sl2R": (((2,),), (1,)),
    "su21": (((2, -1), (-1, 2)), (2,)),
    "sp4R": (((2, -1), (-2, 2)), (2,)),
    "su2": (((2,),), ()),
    "su3": (((2, -1), (-1, 2)), ()),
    "so5": (((2, -1), (-2, 2)), ()),
}


@lru_cache(maxsize=None)
def catalog_datum(name: str) -> RootDatum:
    if name not in CATALOG:
        raise InputError(
            f"unknown catalog name {name!r}; known: {', '.join(sorted(CATALOG))}"
        )
    cartan, nc = CATALOG[name]
    return build_root_datum(cartan, nc)


def datum_from_text(text: str) -> RootDatum:
    """Parse a datum record: a catalog name, or key:value fields.

    Record form: ``cartan:2,-1;-1,2 noncompact:2`` with rows separated by
    ';' and entries by ','; ``noncompact`` may be omitted or empty.
    """
    text = text.strip()
    if text in CATALOG:
        return catalog_datum(text)
    fields: dict[str, str] = {}
    for token in text.split():
        if ":" not in token:
            raise InputError(f"cannot parse datum token {token!r}")
        key, _, val = token.partition(":")
        fields[key] = val
    if "cartan" not in fields:
        raise InputError("datum record needs a cartan field or catalog name")
    try:
        cartan = [
            [int(x) for x in row.split(",") if x]
            for row in fields["cartan"].split(";")
        ]
        nc = [int(x) for x in fields.get("noncompact", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"cannot parse datum record: {exc}") from None
    if "rank" in fields and int(fields["rank"]) != len(cartan):
        raise RankMismatch("declared rank does not match the Cartan matrix")
    return build_root_datum(cartan, nc)


# ---------------------------------------------------------------------------
# pairing and reflections


def pairing(datum: RootDatum, a: Weight, b: Weight) -> Fraction:
    """Invariant bilinear form; normalization fixed by the symmetrizer."""
    _check_rank(datum.rank, a.rank)
    _check_rank(datum.rank, b.rank)
    acc = 0
    g = datum.gram_int
    ca, cb = a.coords2, b.coords2
    for i in range(datum.rank):
        if ca[i]:
            row = g[i]
            acc += ca[i] * sum(row[j] * cb[j] for j in range(datum.rank))
    return Fraction(acc, 4 * datum.gram_den)


def pair_coroot(datum: RootDatum, mu: Weight, alpha: Weight) -> Fraction:
    """2 (mu, alpha) / (alpha, alpha)."""
    num = pairing(datum, mu, alpha)
    den = pairing(datum, alpha, alpha)
    return 2 * num / den


def reflection_matrix(datum: RootDatum, alpha: Weight) -> IntMatrix:
    """Reflection in the root alpha, acting on doubled coordinates."""
    n = datum.rank
    a_half = alpha.half().coords2
    ks = []
    for j in range(n):
        k = pair_coroot(datum, Weight.fundamental(n, j + 1), alpha)
        if k.denominator != 1:
            raise ValueError("reflection pairing is not integral")
        ks.append(int(k))
    return tuple(
        tuple(int(m == j) - ks[j] * a_half[m] for j in range(n)) for m in range(n)
    )


def weyl_act(w: WeylElement, mu: Weight) -> Weight:
    _check_rank(w.rank, mu.rank)
    return Weight(mat_apply(w.matrix, mu.coords2))


def root_coords(datum: RootDatum, mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of mu in the simple-root basis, exact."""
    _check_rank(datum.rank, mu.rank)
    omega = [Fraction(c, 2) for c in mu.coords2]
    inv = datum.inv_cartan_t
    return tuple(
        sum(inv[i][j] * omega[j] for j in range(datum.rank)) for i in range(datum.rank)
    )


def in_positive_root_cone(datum: RootDatum, mu: Weight) -> bool:
    """Whether mu is a nonnegative rational combination of positive roots.

    The positive roots and the simple roots generate the same cone, so this
    reduces to componentwise nonnegativity in the simple-root basis.
    """
    return all(c >= 0 for c in root_coords(datum, mu))


def is_dominant(datum: RootDatum, mu: Weight) -> bool:
    _check_rank(datum.rank, mu.rank)
    return all(c >= 0 for c in mu.coords2)


def is_strictly_dominant(datum: RootDatum, mu: Weight) -> bool:
    _check_rank(datum.rank, mu.rank)
    return all(c > 0 for c in mu.coords2)


# ---------------------------------------------------------------------------
# Weyl groups


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum, which: str = "full") -> tuple[WeylElement, ...]:
    """Enumerate a Weyl group, identity first, deterministic order.

    ``which="full"`` closes over the simple reflections; ``which="compact"``
    closes over reflections in every compact positive root (the compact
    simple roots alone need not generate this subgroup).  Words are reduced
    words in full-system simple reflections in both cases.
    """
    if which == "full":
        return _full_weyl_group(datum)
    if which != "compact":
        raise ValueError(f"which must be 'full' or 'compact', got {which!r}")
    full = _full_weyl_group(datum)
    by_matrix = {w.matrix: w for w in full}
    gens = [reflection_matrix(datum, r) for r in datum.compact_positive_roots]
    ident = identity_matrix(datum.rank)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    elements = [by_matrix[m] for m in seen]
    return tuple(sorted(elements, key=lambda w: (len(w.word), w.word)))


def _full_weyl_group(datum: RootDatum) -> tuple[WeylElement, ...]:
    n = datum.rank
    gens = [reflection_matrix(datum, datum.simple_root(i + 1)) for i in range(n)]
    ident = identity_matrix(n)
    found: dict[IntMatrix, tuple[int, ...]] = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in sorted(frontier, key=lambda mm: found[mm]):
            word = found[m]
            for i, g in enumerate(gens):
                prod = mat_mul(m, g)
                if prod not in found:
                    found[prod] = word + (i + 1,)
                    nxt.append(prod)
        frontier = nxt
        if len(found) > 1_000_000:
            raise NotFiniteType("Weyl group enumeration did not terminate")
    elements = [
        WeylElement(word=w, matrix=m, sign=(-1) ** len(w)) for m, w in found.items()
    ]
    return tuple(sorted(elements, key=lambda w: (len(w.word), w.word)))


def longest_element(datum: RootDatum) -> WeylElement:
    return max(weyl_group(datum, "full"), key=lambda w: len(w.word))


def reflection_element(datum: RootDatum, alpha: Weight) -> WeylElement:
    """The reflection in the root alpha as a group element with word data."""
    m = reflection_matrix(datum, alpha)
    for w in weyl_group(datum, "full"):
        if w.matrix == m:
            return w
    raise ValueError(f"{alpha.coords2} does not act as a root reflection")


def dominant_representative(datum: RootDatum, mu: Weight) -> Weight:
    """The dominant Weyl-orbit representative of mu."""
    c = list(mu.coords2)
    cartan = datum.cartan
    n = datum.rank
    while True:
        for i in range(n):
            if c[i] < 0:
                ci = c[i]
                for j in range(n):
                    c[j] -= ci * cartan[i][j]
                break
        else:
            return Weight(tuple(c))
