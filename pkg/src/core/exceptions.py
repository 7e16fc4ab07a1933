"""
Custom Exceptions for the ellipsum verification engine
"""


class EllipsumError(Exception):
    """Base exception for all ellipsum errors"""
    pass


class SeriesError(EllipsumError):
    """Truncated power series related errors"""
    pass


class ZeroConstantTerm(SeriesError):
    """Series has no multiplicative inverse"""
    pass


class ZeroArgument(SeriesError):
    """Theta function evaluated at zero"""
    pass


class PoleAtArgument(SeriesError):
    """Log-derivative evaluated at a zero of the theta function"""
    pass


class TruncationTooSmall(SeriesError):
    """Requested order cannot be certified by the truncated sums"""
    pass


class MatrixError(EllipsumError):
    """Exact linear algebra errors"""
    pass


class NotSkewSymmetric(MatrixError):
    """Pfaffian input is not skew-symmetric"""
    pass


class DimensionTooLarge(MatrixError):
    """Matrix dimension exceeds the configured bound"""
    pass


class InsufficientMoments(MatrixError):
    """Moment sequence too short for the requested matrix"""
    pass


class SingularHankel(MatrixError):
    """A leading Hankel determinant is not invertible"""
    pass


class PointError(EllipsumError):
    """Invalid evaluation points"""
    pass


class RepeatedPoint(PointError):
    """Two evaluation points coincide"""
    pass


class ZeroPointWithNegativeExponent(PointError):
    """Negative power of a zero point"""
    pass


class AntipodalPoints(PointError):
    """Two evaluation points satisfy x_i = -x_j"""
    pass


class InvalidPoints(PointError):
    """Point vector unusable for the requested identity"""
    pass


class LabelError(EllipsumError):
    """Invalid integer label"""
    pass


class NotStrictlyDecreasing(LabelError):
    """Label entries must be strictly decreasing"""
    pass


class LabelNotStrict(LabelError):
    """Balanced label parts must be strictly decreasing positive integers"""
    pass


class TooManyVariables(LabelError):
    """Variable count beyond the permutation-sum cap"""
    pass


class LabelTooLong(LabelError):
    """Label has more entries than there are variables"""
    pass


class UnknownId(EllipsumError):
    """Unknown moment functional"""
    pass


class RouteUnavailable(EllipsumError):
    """Unknown or inapplicable correlation route"""
    pass


class CatalogError(EllipsumError):
    """Identity catalog lookup and parameter errors"""
    pass


class UnknownIdentity(CatalogError):
    """No catalog row matches the requested tag"""

    def __init__(self, tag: str):
        super().__init__(f"unknown identity: {tag}")
        self.tag = tag


class InvalidParams(CatalogError):
    """Parameters rejected for a catalog row"""

    def __init__(self, message: str, param: str = None):
        super().__init__(message)
        self.param = param


class UnsupportedRange(CatalogError):
    """Parameter outside the supported range"""
    pass


class RangeTooLarge(CatalogError):
    """Enumeration range beyond the brute-force limits"""
    pass


class ConfigurationError(EllipsumError):
    """Configuration related errors"""
    pass
