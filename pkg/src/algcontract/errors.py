"""Exception hierarchy shared by every module of the package."""


class AlgContractError(Exception):
    """Base class for all errors raised by :mod:`algcontract`."""


class ZeroPolynomial(AlgContractError):
    pass


class ZeroSeries(AlgContractError):
    pass


class NoCharacteristicExponent(AlgContractError):
    pass


class NotTangent(AlgContractError):
    """The curve-germ is transversal to the line ``u = 0``."""


class UnsupportedCoefficientField(AlgContractError):
    """A required coefficient is not rational."""


class NotUnibranch(AlgContractError):
    pass


class CurveContainsBranch(AlgContractError):
    pass


class TooManyPairs(AlgContractError):
    pass


class NotPositive(AlgContractError):
    pass


class NotWeierstrass(AlgContractError):
    pass


class NotPolynomialKeyForms(AlgContractError):
    pass


class InvalidPairs(AlgContractError):
    pass


class NotContractibleFamily(AlgContractError):
    pass


class S1Fails(AlgContractError):
    def __init__(self, k):
        super().__init__(f"S1 fails at k={k}")
        self.k = k


class NotCoprime(AlgContractError):
    pass


class NotSymmetric(AlgContractError):
    pass


class InputParse(AlgContractError):
    pass
