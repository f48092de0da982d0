"""Exception hierarchy shared across the package."""


class SplitQuatError(Exception):
    """Base class for all library-specific errors."""


class SingularElement(SplitQuatError):
    """Inversion of an element whose quadratic norm is (numerically) zero."""


class DomainCut(SplitQuatError):
    """Evaluation requested on a branch cut of a Legendre-type function."""


class PoleAtC(SplitQuatError):
    """2F1 called with c a nonpositive integer."""


class Nonconvergent(SplitQuatError):
    """No convergent series/transformation available for the arguments."""


class ParityMismatch(SplitQuatError):
    """Half-integer index triple with inconsistent parity."""


class WrongSeries(SplitQuatError):
    """Operation defined only for a different series family."""


class OutsideDomain(SplitQuatError):
    """Point outside the domain of the requested evaluation."""


class BranchAmbiguity(SplitQuatError):
    """Contour integrand hit a node where its branch is undefined."""


class NotInvertibleSpan(SplitQuatError):
    """Inversion map applied outside its closed span."""


class NoSolution(SplitQuatError):
    """Degree-invariant recursion admits no nonzero harmonic solution."""


class CayleySingular(SplitQuatError):
    """Cayley transform evaluated on (or too near) its singular set."""


class ZeroCoordinate(SplitQuatError):
    """Sign function requested where the relevant coordinate vanishes."""


class Indeterminate(SplitQuatError):
    """Classification undecidable within tolerance."""


class NotInSemigroup(SplitQuatError):
    """Kernel expansion/projector evaluated outside its semigroup domain."""


class WrongOrdering(SplitQuatError):
    """Minkowski expansion called with the time-ordering condition violated."""


class SingularKernel(SplitQuatError):
    """Unregularized kernel evaluated too close to its zero set."""


class TolNotMet(SplitQuatError):
    """Quadrature failed to reach the requested tolerance."""


class NonConvergent(SplitQuatError):
    """Successive epsilon-extrapolants diverge."""


class NonIntegrable(SplitQuatError):
    """Integrand fails the decay criterion for the noncompact domain."""


class SlowOscillation(SplitQuatError):
    """Angular bandwidth of the integrand exceeded the engine's budget."""
