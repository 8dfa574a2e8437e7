"""Exception types shared across the package.

Every error carries its witness data as attributes so callers (and the CLI)
can render precise diagnostics without parsing messages.
"""


class FnLabError(Exception):
    """Base class for all fnlab errors."""


class NotReflexive(FnLabError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"relation is not reflexive at element {x}")


class NotAntisymmetric(FnLabError):
    def __init__(self, x: int, y: int):
        self.x, self.y = x, y
        super().__init__(f"relation is not antisymmetric: {x} <= {y} and {y} <= {x}")


class NotTransitive(FnLabError):
    def __init__(self, x: int, y: int, z: int):
        self.x, self.y, self.z = x, y, z
        super().__init__(f"relation is not transitive: {x} <= {y} <= {z} but not {x} <= {z}")


class SizeExceeded(FnLabError):
    """A construction or search would exceed its configured size cap."""


class BudgetExceeded(SizeExceeded):
    """Search node budget ran out before the search space was exhausted.

    Distinct from a ``None`` search result: the question is left undecided.
    A frontier walk that dies this way attaches the boundary points it had
    already confirmed as ``partial``.
    """

    def __init__(self, nodes: int, budget: int, partial=None):
        self.nodes, self.budget = nodes, budget
        self.partial = partial
        super().__init__(f"node budget exhausted ({nodes} nodes, budget {budget})")


class IndexOutOfRange(FnLabError, IndexError):
    pass


class DomainMismatch(FnLabError):
    pass


class NotMonotone(FnLabError):
    def __init__(self, p: int, q: int):
        self.p, self.q = p, q
        super().__init__(f"map is not order-preserving at {p} <= {q}")


class NotPermutation(FnLabError):
    pass


class MapNotTotal(FnLabError):
    pass


class NotComparable(FnLabError):
    pass


class NoWitness(FnLabError):
    """No interpolant exists for a comparable pair; the map pair is invalid."""


class DegenerateCofactor(FnLabError):
    """One-element boolean algebras cannot be coproduct cofactors."""


class ZeroMember(FnLabError):
    pass


class RelationViolation(FnLabError):
    """Internal consistency failure while building an exponential algebra."""


class NotARetraction(FnLabError):
    pass


class InvalidInputPair(FnLabError):
    pass


class EmptySubset(FnLabError):
    pass


class TransportDefect(FnLabError):
    """A transport construction produced an invalid pair.

    This cannot happen for valid inputs; it is surfaced as a distinguished
    internal-error class rather than an ordinary invalid verdict.
    """

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"transport output failed verification: {verdict.violation}")


class ParseError(FnLabError):
    """Malformed input file; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
