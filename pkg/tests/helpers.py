"""Shared sampling helpers for the test suite."""

import math
import random

from liechar import TorusElement, Weight, is_regular


def random_regular_torus(datum, rng: random.Random) -> TorusElement:
    """Uniform angles, resampled until every root character stays away
    from 1."""
    while True:
        t = TorusElement(
            tuple(rng.uniform(0.15, 2.0 * math.pi - 0.15) for _ in range(datum.rank))
        )
        if is_regular(datum, t):
            return t


def random_dominant_weight(datum, rng: random.Random, choices=(0, 2, 4, 6)) -> Weight:
    """Dominant integral weight with doubled coordinates drawn from the
    given even set."""
    return Weight(tuple(rng.choice(choices) for _ in range(datum.rank)))


def random_valid_parameter(datum, rng: random.Random, choices=(0, 2, 4)) -> Weight:
    """Strictly dominant parameter with an integral rho-shift: the
    half-sum plus a random dominant integral weight."""
    return datum.rho + random_dominant_weight(datum, rng, choices)
