"""Exception types shared across the package.

``InputError`` groups everything that signals a malformed or out-of-domain
request (the CLI maps it to exit code 2); ``ComputationError`` groups
failures of a numeric procedure itself.
"""


class LieCharError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LieCharError):
    """Bad or out-of-domain input."""


class ComputationError(LieCharError):
    """A computation could not be completed to its stated guarantee."""


class NotFiniteType(InputError):
    """Cartan matrix is not symmetrizable positive definite."""


class InvalidNoncompactSet(InputError):
    """Noncompact index set is not a subset of the simple-root indices."""


class RankMismatch(InputError):
    """Objects from data of different ranks were combined."""


class NotDivisible(ComputationError):
    """Exact Laurent division has no exact quotient."""


class NotDominant(InputError):
    """Weight is outside the closed dominant chamber."""


class NotIntegral(InputError):
    """Weight is not a lattice point."""


class NotRegular(InputError):
    """Weight pairs to zero with some root."""


class NotInvariant(InputError):
    """Character is not Weyl invariant."""


class NonDominantLeadingTerm(ComputationError):
    """Leading term of a decomposition step is not dominant."""


class SingularElement(InputError):
    """Torus element lies on a root hyperplane wall."""


class NotDominantForK(InputError):
    """Weight is not dominant integral for the compact subsystem."""


class NotDiscreteSeries(InputError):
    """Parameter is below the discrete-series threshold."""


class NotConverged(ComputationError):
    """Quadrature failed its tail or stability requirement."""
