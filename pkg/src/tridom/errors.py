"""Exception hierarchy. Every error names the offending element in its message."""


class TridomError(Exception):
    pass


class ValidationError(TridomError, ValueError):
    pass


class IntraClassArc(ValidationError):
    pass


class DuplicateArc(ValidationError):
    pass


class TwoCycle(ValidationError):
    pass


class UnassignedVertex(ValidationError):
    pass


class DuplicateVertex(ValidationError):
    pass


class EmptyClass(ValidationError):
    pass


class VertexOutOfRange(ValidationError, IndexError):
    pass


class ParseError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(TridomError):
    pass


class PreconditionTriangle(PreconditionError):
    def __init__(self, triangle):
        self.triangle = triangle
        super().__init__(f"digraph contains the cyclic triangle {triangle}")


class PreconditionBeta(PreconditionError):
    def __init__(self, beta, allowed, witness=()):
        self.beta = beta
        self.witness = tuple(witness)
        super().__init__(
            f"transversal independence number is {beta}, expected {allowed}; "
            f"witness {self.witness}"
        )


class PreconditionAlpha(PreconditionError):
    def __init__(self, alpha, allowed, witness=()):
        self.alpha = alpha
        self.witness = tuple(witness)
        super().__init__(
            f"independence number is {alpha}, expected {allowed}; witness {self.witness}"
        )


class NotBipartite(PreconditionError):
    pass


class NotAcyclic(PreconditionError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"digraph has the directed cycle {self.cycle}")


class NotAClique(PreconditionError):
    pass


class NotACover(PreconditionError):
    pass


class NotGallai(PreconditionError):
    def __init__(self, triangle):
        self.triangle = triangle
        super().__init__(f"rainbow triangle {triangle}")


class ColorClash(PreconditionError):
    pass


class InternalContradiction(TridomError, AssertionError):
    """A step that the underlying argument proves impossible has happened."""


class BudgetExceeded(TridomError):
    pass


class RetryBudgetExceeded(TridomError):
    pass


class TargetUnreachable(TridomError):
    def __init__(self, message, graph=None, alpha=None):
        self.graph = graph
        self.alpha = alpha
        super().__init__(message)
