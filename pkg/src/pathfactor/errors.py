"""Exception taxonomy.

User-facing input problems (format, shape, simplicity, generation budget,
oracle size) are distinct from internal defects: an AlgorithmDefectError
means a guaranteed invariant failed at runtime and is always a bug in this
package, never a property of the input.
"""


class PathFactorError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(PathFactorError):
    """Malformed graph or factor file content."""


class NotSimpleError(PathFactorError):
    """The solver was handed a multigraph; it only accepts simple graphs."""


class NotBiregularError(PathFactorError):
    """The input is not a (3,4)-biregular bigraph."""


class GenerationError(PathFactorError):
    """Random instance generation exhausted its repair and retry budget."""


class OracleSizeError(PathFactorError):
    """An exhaustive oracle was invoked beyond its size bound (k <= 2)."""


class AlgorithmDefectError(PathFactorError):
    """An invariant the construction guarantees was observed to fail."""
