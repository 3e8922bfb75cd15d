"""Exception hierarchy shared by every module of the package."""


class KnotQuandleError(Exception):
    """Base class; the CLI maps any subclass to exit status 1."""


# laurent / lmatrix
class ZeroEvaluationPoint(KnotQuandleError, ZeroDivisionError):
    pass


class PolynomialParseError(KnotQuandleError, ValueError):
    pass


class BadMinorSize(KnotQuandleError, ValueError):
    pass


# diagram
class ParseError(KnotQuandleError, ValueError):
    pass


class ValidationError(KnotQuandleError, ValueError):
    pass


class SurgeryError(ValidationError):
    pass


class WrongKind(KnotQuandleError, TypeError):
    pass


class NotAKnot(KnotQuandleError, ValueError):
    pass


# presentation / alexander
class NotSolidTorusPresentation(KnotQuandleError, ValueError):
    pass


class NotPrimary(KnotQuandleError, ValueError):
    pass


class NotColorable(KnotQuandleError, ValueError):
    pass


# finite quandles
class NotAUnit(KnotQuandleError, ValueError):
    pass


class AxiomViolation(KnotQuandleError, ValueError):
    """A Cayley table failed one of the quandle axioms."""


class NotIdempotent(AxiomViolation):
    def __init__(self, i):
        self.witness = (i,)
        super().__init__(f"axiom 1 fails: {i} * {i} != {i}")


class NotBijective(AxiomViolation):
    def __init__(self, j):
        self.witness = (j,)
        super().__init__(f"axiom 2 fails: right translation by {j} is not a bijection")


class NotDistributive(AxiomViolation):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(f"axiom 3 fails: ({i}*{j})*{k} != ({i}*{k})*({j}*{k})")


class GroupTooLarge(KnotQuandleError, RuntimeError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"group closure exceeded {cap} elements")


class NotConnected(KnotQuandleError, ValueError):
    pass


class NotNormal(KnotQuandleError, ValueError):
    pass


class NotWellDefined(KnotQuandleError, ValueError):
    pass
