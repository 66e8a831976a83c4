"""Exception types shared across the package."""


class LensCertError(Exception):
    """Base class for all package errors."""


class BadCycleLength(LensCertError):
    """Cycle length n < 3 (C_2 would need parallel edges)."""


class NotCoprime(LensCertError):
    """gcd(n, k) != 1 where coprimality is required."""


class NotSimplicial(LensCertError):
    """A vertex permutation does not map faces to faces."""


class FreenessViolation(LensCertError):
    """A nontrivial power of the action fixes a cell setwise."""


class IdentificationClash(LensCertError):
    """Vertex-orbit quotient would not be a simplicial complex realizing
    the topological quotient; the caller should subdivide again."""


class NonOrientable(LensCertError):
    """Coherent facet orientation does not exist."""


class Disconnected(LensCertError):
    """Operation requires a connected complex."""


class DomainViolation(LensCertError):
    """Arguments outside the domain of the chart map."""


class SupportViolation(LensCertError):
    """Coordinates are not supported on a single facet pair."""


class NotOnSphere(LensCertError):
    """|z|^2 + |w|^2 is too far from 1."""


class WrongTorsion(LensCertError):
    """H_1 of the complex is not Z/n for the requested modulus."""


class NotCocycle(LensCertError):
    """Cochain fails the cocycle condition."""


class NotUnit(LensCertError):
    """Torsion pairing returned a non-unit; implementation or input error."""


class RankMismatch(LensCertError):
    """Divisor classes live in lattices of different rank."""


class BadIndices(LensCertError):
    """Marked-point indices out of range."""


class CycleCheckFailed(LensCertError):
    """CyclePair failed the anticanonical-cycle verification."""
