"""
Exact Truncated Power Series
Dense series in u with q = u**2, plus theta, Pochhammer and Lambert builders
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from .exceptions import (
    PoleAtArgument,
    SeriesError,
    TruncationTooSmall,
    ZeroArgument,
    ZeroConstantTerm,
)

logger = logging.getLogger(__name__)

Rat = Fraction
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class QSeries:
    """Truncated series sum c_e u**e, known modulo u**(order + 1).

    Values are immutable. Binary operations return a series whose order is the
    minimum of the operand orders.
    """

    __slots__ = ('_coeffs', '_order')

    def __init__(self, coeffs: Iterable[Scalar] = (), order: int = 0):
        if order < 0:
            raise TruncationTooSmall(f"series order must be non-negative, got {order}")
        values = [Fraction(c) for c in list(coeffs)[:order + 1]]
        values.extend([_ZERO] * (order + 1 - len(values)))
        self._coeffs: Tuple[Fraction, ...] = tuple(values)
        self._order = order

    @classmethod
    def _raw(cls, coeffs: Sequence, order: int) -> 'QSeries':
        obj = cls.__new__(cls)
        obj._coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        obj._order = order
        return obj

    # Constructors

    @classmethod
    def zero(cls, order: int) -> 'QSeries':
        return cls._raw([_ZERO] * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> 'QSeries':
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> 'QSeries':
        coeffs = [_ZERO] * (order + 1)
        coeffs[0] = Fraction(value)
        return cls._raw(coeffs, order)

    @classmethod
    def monomial(cls, exponent: int, value: Scalar, order: int) -> 'QSeries':
        coeffs = [_ZERO] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = Fraction(value)
        return cls._raw(coeffs, order)

    @classmethod
    def from_dict(cls, terms: Dict[int, Scalar], order: int) -> 'QSeries':
        coeffs = [_ZERO] * (order + 1)
        for exponent, value in terms.items():
            if 0 <= exponent <= order:
                coeffs[exponent] += value
        return cls._raw(coeffs, order)

    @classmethod
    def from_q_coefficients(cls, values: Sequence[Scalar], q_order: Optional[int] = None) -> 'QSeries':
        """Series in q: values[n] is the coefficient of q**n, known up to q**q_order."""
        if q_order is None:
            q_order = len(values) - 1
        order = 2 * q_order + 1
        coeffs = [_ZERO] * (order + 1)
        for n, value in enumerate(values[:q_order + 1]):
            coeffs[2 * n] = Fraction(value)
        return cls._raw(coeffs, order)

    # Accessors

    @property
    def order(self) -> int:
        return self._order

    @property
    def q_order(self) -> int:
        """Largest n such that the coefficient of q**n is known."""
        return self._order // 2

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, exponent: int) -> Fraction:
        if exponent < 0:
            return _ZERO
        if exponent > self._order:
            raise TruncationTooSmall(f"u^{exponent} beyond series order {self._order}")
        return self._coeffs[exponent]

    def q_coefficient(self, n: int) -> Fraction:
        return self[2 * n]

    def q_coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs[0::2][:self.q_order + 1]

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_even(self) -> bool:
        """True when only integral powers of q occur."""
        return not any(self._coeffs[1::2])

    def valuation(self) -> Optional[int]:
        for exponent, value in enumerate(self._coeffs):
            if value:
                return exponent
        return None

    # Arithmetic

    def _coerce(self, other) -> Optional['QSeries']:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries.constant(other, self._order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self._order, other._order)
        return QSeries._raw([a + b for a, b in zip(self._coeffs[:order + 1], other._coeffs)], order)

    __radd__ = __add__

    def __neg__(self) -> 'QSeries':
        return QSeries._raw([-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries._raw([c * other for c in self._coeffs], self._order)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self._order, other._order)
        out = [0] * (order + 1)
        right = [(j, c) for j, c in enumerate(other._coeffs[:order + 1]) if c]
        for i, a in enumerate(self._coeffs[:order + 1]):
            if not a:
                continue
            limit = order - i
            for j, b in right:
                if j > limit:
                    break
                out[i + j] += a * b
        return QSeries._raw(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            inv = Fraction(1) / other
            return QSeries._raw([c * inv for c in self._coeffs], self._order)
        if isinstance(other, QSeries):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> 'QSeries':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QSeries.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> 'QSeries':
        head = self._coeffs[0]
        if head == 0:
            raise ZeroConstantTerm("series with zero constant term has no inverse")
        inv_head = 1 / head
        tail = [(j, c) for j, c in enumerate(self._coeffs) if j and c]
        out = [inv_head]
        for n in range(1, self._order + 1):
            acc = 0
            for j, c in tail:
                if j > n:
                    break
                acc += c * out[n - j]
            out.append(-acc * inv_head)
        return QSeries._raw(out, self._order)

    # Substitutions

    def shift(self, k: int) -> 'QSeries':
        """Multiply by u**k; negative k requires the low coefficients to vanish."""
        if k >= 0:
            return QSeries._raw([_ZERO] * k + list(self._coeffs), self._order + k)
        k = -k
        if any(self._coeffs[:k]):
            raise SeriesError(f"cannot divide by u^{k}: low coefficients are nonzero")
        if self._order - k < 0:
            raise TruncationTooSmall("shift leaves no known coefficients")
        return QSeries._raw(self._coeffs[k:], self._order - k)

    def dilate(self, k: int) -> 'QSeries':
        """Substitute u -> u**k."""
        if k < 1:
            raise SeriesError("dilation factor must be positive")
        order = k * (self._order + 1) - 1
        coeffs = [_ZERO] * (order + 1)
        for e, c in enumerate(self._coeffs):
            coeffs[k * e] = c
        return QSeries._raw(coeffs, order)

    def q_negated(self) -> 'QSeries':
        """Substitute q -> -q; only defined for series in integral powers of q."""
        if not self.is_even():
            raise SeriesError("q -> -q needs a series without half-integral powers")
        return QSeries._raw(
            [c if (e // 2) % 2 == 0 else -c for e, c in enumerate(self._coeffs)], self._order)

    def truncate(self, order: int) -> 'QSeries':
        if order > self._order:
            raise TruncationTooSmall(f"cannot extend order {self._order} to {order}")
        return QSeries._raw(self._coeffs[:order + 1], order)

    # Comparison

    def first_mismatch(self, other: 'QSeries') -> Optional[int]:
        """Lowest exponent where the two series differ, within the common order."""
        order = min(self._order, other._order)
        for e in range(order + 1):
            if self._coeffs[e] != other._coeffs[e]:
                return e
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*u^{e}" for e, c in enumerate(self._coeffs) if c][:8]
        body = ' + '.join(terms) if terms else '0'
        return f"<QSeries {body} + O(u^{self._order + 1})>"


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def series_inverse(f: QSeries) -> QSeries:
    return f.inverse()


@dataclass(frozen=True)
class PochSpec:
    """Product prod_{k>=0} (1 - scalar * u**(offset + k*step))."""

    scalar: Fraction
    offset: int
    step: int

    def __post_init__(self):
        if self.step <= 0:
            raise SeriesError("Pochhammer step must be positive")
        if self.offset < 0:
            raise SeriesError("Pochhammer offset must be non-negative")


def poch_trunc(spec: PochSpec, order: int) -> QSeries:
    if order < 0:
        raise TruncationTooSmall("order must be non-negative")
    a = Fraction(spec.scalar)
    coeffs = [_ZERO] * (order + 1)
    coeffs[0] = _ONE
    if a == 0:
        return QSeries._raw(coeffs, order)
    exponent = spec.offset
    while exponent <= order:
        if exponent == 0:
            coeffs = [c * (1 - a) for c in coeffs]
        else:
            for idx in range(order, exponent - 1, -1):
                if coeffs[idx - exponent]:
                    coeffs[idx] -= a * coeffs[idx - exponent]
        exponent += spec.step
    return QSeries._raw(coeffs, order)


def q_poch(a: Scalar, order: int, base: int = 1, offset: int = 0) -> QSeries:
    """(a q**offset; q**base)_inf with q-exponents, as a u-series."""
    return poch_trunc(PochSpec(Fraction(a), 2 * offset, 2 * base), order)


def theta_trunc(x: Scalar, order: int, shift: int = 0) -> QSeries:
    """theta(x * u**shift; q) = (x u**shift, q / (x u**shift); q)_inf."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("theta(0) is undefined")
    if shift not in (0, 1, 2):
        raise SeriesError(f"theta shift must be 0, 1 or 2, got {shift}")
    return poch_trunc(PochSpec(x, shift, 2), order) * poch_trunc(PochSpec(1 / x, 2 - shift, 2), order)


def theta_logderiv_trunc(x: Scalar, order: int, shift: int = 0) -> QSeries:
    """y theta'(y) / theta(y) at y = x * u**shift, expanded geometrically."""
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("log-derivative of theta at 0 is undefined")
    if shift not in (0, 1):
        raise SeriesError(f"log-derivative shift must be 0 or 1, got {shift}")
    coeffs = [_ZERO] * (order + 1)
    powers = [_ONE]
    inverse_powers = [_ONE]
    for _ in range(order):
        powers.append(powers[-1] * x)
        inverse_powers.append(inverse_powers[-1] / x)

    if shift == 0:
        if x == 1:
            raise PoleAtArgument("theta vanishes at 1")
        coeffs[0] -= x / (1 - x)
        k = 1
    else:
        k = 0
    while True:
        base = shift + 2 * k
        if base > order:
            break
        for r in range(1, order // base + 1):
            coeffs[r * base] -= powers[r]
        k += 1
    k = 0
    while True:
        base = 2 * k + 2 - shift
        if base > order:
            break
        for r in range(1, order // base + 1):
            coeffs[r * base] += inverse_powers[r]
        k += 1
    return QSeries._raw(coeffs, order)


class LambertKind(str, Enum):
    PLUS = 'plus'                # q^k / (1 + (-q)^k)
    MINUS = 'minus'              # q^k / (1 - (-q)^k)
    PLUS_SQUARE = 'plus_square'  # q^k / (1 + q^(2k))
    PLAIN = 'plain'              # q^k / (1 - q^k)
    PLAIN_PLUS = 'plain_plus'    # q^k / (1 + q^k)


class SignTwist(str, Enum):
    NONE = 'none'
    ALT_K = 'alt_k'      # (-1)^k
    ALT_KL = 'alt_kl'    # (-1)^(kl), i.e. q -> -q


def lambert_term_sign(kind: LambertKind, k: int, l: int) -> int:
    """Sign of q^(kl) in the geometric expansion of the k-th term; 0 if absent."""
    if kind is LambertKind.PLUS:
        return -1 if ((k - 1) * (l - 1)) % 2 else 1
    if kind is LambertKind.MINUS:
        return -1 if (k * (l - 1)) % 2 else 1
    if kind is LambertKind.PLUS_SQUARE:
        if l % 2 == 0:
            return 0
        return -1 if ((l - 1) // 2) % 2 else 1
    if kind is LambertKind.PLAIN:
        return 1
    if kind is LambertKind.PLAIN_PLUS:
        return -1 if (l - 1) % 2 else 1
    raise SeriesError(f"unknown Lambert kind {kind}")


def lambert_sum(kind: Union[LambertKind, str], weight: int, twist: Union[SignTwist, str],
                order: int, step: int = 1) -> QSeries:
    """sum_k k**weight * (term of the given kind), with q -> q**step, to u-order `order`."""
    kind = LambertKind(kind)
    twist = SignTwist(twist)
    if weight < 0:
        raise SeriesError("Lambert weight must be non-negative")
    q_limit = order // 2
    coeffs = [_ZERO] * (order + 1)
    k = 1
    while k * step <= q_limit:
        kw = k ** weight
        l = 1
        while k * l * step <= q_limit:
            sign = lambert_term_sign(kind, k, l)
            if sign:
                if twist is SignTwist.ALT_K and k % 2:
                    sign = -sign
                elif twist is SignTwist.ALT_KL and (k * l) % 2:
                    sign = -sign
                coeffs[2 * k * l * step] += sign * kw
            l += 1
        k += 1
    logger.debug(f"lambert_sum {kind.value}/{twist.value} weight {weight} to u^{order}")
    return QSeries._raw(coeffs, order)
