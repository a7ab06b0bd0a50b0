"""Exceptions raised by pyspecenergy."""


class SpecEnergyError(ValueError):
    """Base class of all computation errors (CLI exit code 1)."""


class NotPrime(SpecEnergyError):
    """Modulus failed the primality check."""


class EvenPrime(SpecEnergyError):
    """The modulus 2 is not an odd prime."""


class ZeroElement(SpecEnergyError):
    """An operation needed a nonzero field element."""


class BadEpsilon(SpecEnergyError):
    """Spectrum threshold outside (0, 1]."""


class EmptySet(SpecEnergyError):
    """Operation undefined for the empty set."""


class ZeroInSet(SpecEnergyError):
    """Multiplicative operation on a set containing 0."""


class TooLargeForBrute(SpecEnergyError):
    """Input exceeds the size guard of a brute-force oracle."""


class OutOfRange(SpecEnergyError):
    """Size or element parameter outside its admissible range."""


class NotADivisor(SpecEnergyError):
    """Subgroup order does not divide p - 1."""


class NotASubgroup(SpecEnergyError):
    """Set is not a multiplicative subgroup of F_p*."""


class MeanZeroViolated(SpecEnergyError):
    """Neither weight family of a scene sums to zero."""


class SizeOrder(SpecEnergyError):
    """|A| > |B| where |A| <= |B| is required."""


class PreconditionError(SpecEnergyError):
    """A stated hypothesis of an operation does not hold."""


class DuplicateElement(SpecEnergyError):
    """Repeated point or surface in an incidence scene."""


class DegenerateSurface(SpecEnergyError):
    """Plane or line with an all-zero normal vector."""


class ConvolutionPrecisionError(SpecEnergyError):
    """FFT convolution output too far from an integer."""


class FormatError(SpecEnergyError):
    """Malformed set or scene file."""

    def __init__(self, message, filename=None, line=None):
        self.filename = filename
        self.line = line
        where = [s for s in (filename and f"file {filename}", line and f"line {line}") if s]
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class ConfigError(FormatError):
    """Malformed sweep configuration."""
