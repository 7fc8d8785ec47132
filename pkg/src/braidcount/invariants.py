"""Two-sided conformal-invariant bounds from syllable decompositions.

For a reduced word with syllable degrees ``d_1, ..., d_m`` the lower
weight is ``sum log(3 d_k)`` and the upper weight is ``sum log(4 d_k)``.
Both are stored exactly as :class:`LogInteger`, the logarithm of the
integer product ``prod 3 d_k`` resp. ``prod 4 d_k``, so comparisons and
thresholds never touch floating point.

The bounds exposed here:

* extremal length of a braid with totally real horizontal boundary
  values lies in ``[lower_weight/(2 pi), 300 * upper_weight]``, and it
  vanishes exactly for (conjugates of) powers of a single generator
  times a half-twist power;
* the topological entropy of a conjugacy class, represented by a
  cyclically syllable reduced word with more than one syllable, lies in
  ``[lower_weight/4, 150 pi * upper_weight]``.

The entropy of a conjugacy class equals pi/2 times its extremal
length; :data:`ENTROPY_PER_EXTREMAL_LENGTH` records the conversion.

Decimal rendering of interval endpoints is rigorous: evaluation uses
interval arithmetic at ``BRAIDCOUNT_PRECISION`` bits (default 128) and
the printed 12-digit decimals are rounded outward, floor on lower
endpoints and ceiling on upper ones.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_CEILING, ROUND_FLOOR
from fractions import Fraction
from functools import total_ordering

import mpmath

from .braid import BraidWord, CosetElement, NormalForm, normal_form, pure_projection
from .words import FreeWord, is_cyclically_syllable_reduced, syllable_decompose

DISPLAY_DIGITS = 12
DEFAULT_PRECISION_BITS = 128


def working_precision() -> int:
    """Interval-arithmetic precision in bits; BRAIDCOUNT_PRECISION overrides."""
    raw = os.environ.get("BRAIDCOUNT_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 8:
        raise ValueError("BRAIDCOUNT_PRECISION must be at least 8 bits")
    return bits


@total_ordering
@dataclass(frozen=True)
class LogInteger:
    """The exact value ``log(argument)`` for an integer argument >= 1."""

    argument: int = 1

    def __post_init__(self):
        if self.argument < 1:
            raise ValueError("argument must be a positive integer")

    def __mul__(self, count: int) -> "LogInteger":
        # scaling: n * log P = log(P**n)
        if count < 0:
            raise ValueError("count must be nonnegative")
        return LogInteger(self.argument**count)

    __rmul__ = __mul__

    def __add__(self, other: "LogInteger") -> "LogInteger":
        # value addition: log P + log Q = log(P*Q)
        return LogInteger(self.argument * other.argument)

    def __lt__(self, other: "LogInteger") -> bool:
        return self.argument < other.argument

    @property
    def is_zero(self) -> bool:
        return self.argument == 1

    def __str__(self) -> str:
        return f"log({self.argument})"


@dataclass(frozen=True)
class Scale:
    """An exact constant ``rational * pi**pi_power`` multiplying a log value."""

    rational: Fraction
    pi_power: int = 0

    def __str__(self) -> str:
        body = str(self.rational)
        if self.pi_power == 0:
            return body
        pi = "pi" if self.pi_power in (1, -1) else f"pi^{abs(self.pi_power)}"
        return f"{body}*{pi}" if self.pi_power > 0 else f"{body}/{pi}"


EXTREMAL_LOWER_SCALE = Scale(Fraction(1, 2), -1)  # 1/(2 pi)
EXTREMAL_UPPER_SCALE = Scale(Fraction(300))
ENTROPY_LOWER_SCALE = Scale(Fraction(1, 4))
ENTROPY_UPPER_SCALE = Scale(Fraction(150), 1)  # 150 pi

#: Entropy of a conjugacy class per unit of its extremal length: pi/2.
ENTROPY_PER_EXTREMAL_LENGTH = Scale(Fraction(1, 2), 1)


def lower_weight(w: FreeWord) -> LogInteger:
    """``log prod(3 d_k)`` over the syllable degrees; identity gives log 1."""
    arg = 1
    for d in syllable_decompose(w).degrees():
        arg *= 3 * d
    return LogInteger(arg)


def upper_weight(w: FreeWord) -> LogInteger:
    """``log prod(4 d_k)`` over the syllable degrees; identity gives log 1."""
    arg = 1
    for d in syllable_decompose(w).degrees():
        arg *= 4 * d
    return LogInteger(arg)


@dataclass(frozen=True)
class BoundInterval:
    """A two-sided enclosure ``[lower_scale*log(P-), upper_scale*log(P+)]``.

    ``exact_zero`` intervals pin the invariant to exactly zero; their log
    arguments are 1 so both endpoints evaluate to 0.
    """

    exact_zero: bool
    lower_log_arg: LogInteger
    upper_log_arg: LogInteger
    lower_scale: Scale
    upper_scale: Scale

    def __post_init__(self):
        if self.exact_zero:
            if not (self.lower_log_arg.is_zero and self.upper_log_arg.is_zero):
                raise ValueError("exact-zero interval must carry trivial logs")

    def lower_decimal(self) -> str:
        if self.exact_zero or self.lower_log_arg.is_zero:
            return "0"
        return scaled_log_decimal(self.lower_scale, self.lower_log_arg, "lower")

    def upper_decimal(self) -> str:
        if self.exact_zero or self.upper_log_arg.is_zero:
            return "0"
        return scaled_log_decimal(self.upper_scale, self.upper_log_arg, "upper")

    def to_json(self) -> dict:
        return {
            "exact_zero": self.exact_zero,
            "lower_log_arg": str(self.lower_log_arg.argument),
            "upper_log_arg": str(self.upper_log_arg.argument),
            "lower_value": self.lower_decimal(),
            "upper_value": self.upper_decimal(),
        }

    def __str__(self) -> str:
        if self.exact_zero:
            return "0 (exact)"
        return f"[{self.lower_decimal()}, {self.upper_decimal()}]"


def _zero_interval(lower_scale: Scale, upper_scale: Scale) -> BoundInterval:
    return BoundInterval(True, LogInteger(1), LogInteger(1), lower_scale, upper_scale)


def _weight_interval(
    w: FreeWord, lower_scale: Scale, upper_scale: Scale
) -> BoundInterval:
    return BoundInterval(False, lower_weight(w), upper_weight(w), lower_scale, upper_scale)


def extremal_length_bounds_word(w: FreeWord) -> BoundInterval:
    """Extremal-length enclosure for a reduced pure word.

    Exactly zero iff the word is the identity or a power of a single
    generator; otherwise ``[log(P-)/(2 pi), 300 log(P+)]``.
    """
    if w.num_terms <= 1:
        return _zero_interval(EXTREMAL_LOWER_SCALE, EXTREMAL_UPPER_SCALE)
    return _weight_interval(w, EXTREMAL_LOWER_SCALE, EXTREMAL_UPPER_SCALE)


def extremal_length_bounds_braid(
    b: BraidWord | CosetElement | NormalForm,
) -> BoundInterval:
    """Extremal-length enclosure for any braid, via its normal form.

    Exactly zero iff the braid is ``sigma_j^k`` times a half-twist power;
    otherwise the word enclosure applied to the even-rounded projection.
    The projection may itself be a single generator power (for instance
    when the leading exponent rounds to zero) and still receive a
    positive lower bound, which is why this does not delegate the zero
    test to the word-level rule.
    """
    form = b if isinstance(b, NormalForm) else normal_form(b)
    if form.is_power_of_delta or form.b1.is_identity:
        return _zero_interval(EXTREMAL_LOWER_SCALE, EXTREMAL_UPPER_SCALE)
    return _weight_interval(
        pure_projection(form), EXTREMAL_LOWER_SCALE, EXTREMAL_UPPER_SCALE
    )


def entropy_bounds(w: FreeWord) -> BoundInterval:
    """Entropy enclosure ``[log(P-)/4, 150 pi log(P+)]`` for a conjugacy class.

    Requires a cyclically syllable reduced representative with more than
    one syllable; anything else raises :class:`ValueError`.
    """
    if not is_cyclically_syllable_reduced(w):
        raise ValueError("word is not cyclically syllable reduced")
    if len(syllable_decompose(w)) <= 1:
        raise ValueError("entropy bounds require more than one syllable")
    return _weight_interval(w, ENTROPY_LOWER_SCALE, ENTROPY_UPPER_SCALE)


# --- rigorous decimal rendering -------------------------------------------


def _endpoint_fraction(raw: tuple) -> Fraction:
    # raw libmp tuple (sign, mantissa, exponent, bitcount): exact binary rational
    sign, man, exp, _ = raw
    value = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -value if sign else value


def directed_fraction_decimal(value: Fraction, direction: str) -> str:
    rounding = ROUND_FLOOR if direction == "lower" else ROUND_CEILING
    ctx = Context(prec=DISPLAY_DIGITS, rounding=rounding)
    return str(ctx.divide(Decimal(value.numerator), Decimal(value.denominator)))


def scaled_log_decimal(scale: Scale, log_arg: LogInteger, direction: str) -> str:
    """Render ``scale * log(argument)`` to 12 digits, rounded outward.

    ``direction`` is ``"lower"`` (round down) or ``"upper"`` (round up);
    the result is a true bound of the exact value in that direction.
    """
    if direction not in ("lower", "upper"):
        raise ValueError("direction must be 'lower' or 'upper'")
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = working_precision()
        value = iv.log(iv.mpf(log_arg.argument))
        value *= iv.mpf(scale.rational.numerator)
        value /= iv.mpf(scale.rational.denominator)
        if scale.pi_power:
            value *= iv.pi ** scale.pi_power
        raw = value._mpi_[0] if direction == "lower" else value._mpi_[1]
    finally:
        iv.prec = old
    return directed_fraction_decimal(_endpoint_fraction(raw), direction)
