"""Positional digit arithmetic in radix 2..36.

All values are Python ints, so arithmetic is exact. ``MAX_BITS`` bounds the
size of constructed values so that an absurd request (say ``copies=10**9``)
fails with :class:`CapacityError` instead of exhausting memory.
"""
from __future__ import annotations

import math
import string
from dataclasses import dataclass

MIN_RADIX = 2
MAX_RADIX = 36
MAX_BITS = 1 << 20

DIGIT_CHARS = string.digits + string.ascii_lowercase


class CapacityError(ArithmeticError):
    """A value would exceed the supported magnitude."""


def check_radix(radix: int) -> None:
    if not isinstance(radix, int) or not MIN_RADIX <= radix <= MAX_RADIX:
        raise ValueError(f"radix must be an integer in [{MIN_RADIX}, {MAX_RADIX}], got {radix!r}")


def check_capacity(value: int, what: str = "value") -> int:
    if abs(value).bit_length() > MAX_BITS:
        raise CapacityError(f"{what} exceeds {MAX_BITS} bits")
    return value


@dataclass(frozen=True)
class DigitString:
    """Digits of a number in ``radix``, most significant first.

    Leading zeros are allowed; they only appear when a caller pads to a width.
    """

    radix: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_radix(self.radix)
        if not self.digits:
            raise ValueError("a DigitString needs at least one digit")
        for d in self.digits:
            if not 0 <= d < self.radix:
                raise ValueError(f"digit {d} out of range for radix {self.radix}")

    @property
    def width(self) -> int:
        return len(self.digits)

    def padded(self, width: int) -> DigitString:
        if width < self.width:
            raise ValueError(f"cannot pad {self.width} digits down to {width}")
        return DigitString(self.radix, (0,) * (width - self.width) + self.digits)

    def reversed(self) -> DigitString:
        return DigitString(self.radix, self.digits[::-1])

    def __str__(self) -> str:
        return "".join(DIGIT_CHARS[d] for d in self.digits)

    def annotated(self) -> str:
        """Render as e.g. ``11202_b3``."""
        return f"{self}_b{self.radix}"

    @classmethod
    def parse(cls, text: str, radix: int) -> DigitString:
        """Inverse of ``str()``; accepts an optional ``_bR`` suffix that must agree with ``radix``."""
        text = text.strip().lower()
        if "_b" in text:
            text, _, suffix = text.partition("_b")
            if int(suffix) != radix:
                raise ValueError(f"radix suffix {suffix} does not match radix {radix}")
        if not text:
            raise ValueError("empty digit string")
        try:
            digits = tuple(DIGIT_CHARS.index(c) for c in text)
        except ValueError:
            raise ValueError(f"invalid digit in {text!r}") from None
        return cls(radix, digits)


def to_digits(value: int, radix: int) -> DigitString:
    check_radix(radix)
    if value < 0:
        raise ValueError("negative values have no digit expansion here")
    if value == 0:
        return DigitString(radix, (0,))
    out = []
    while value:
        value, d = divmod(value, radix)
        out.append(d)
    return DigitString(radix, tuple(reversed(out)))


def from_digits(ds: DigitString) -> int:
    value = 0
    for d in ds.digits:
        value = value * ds.radix + d
    return value


def digit_count(value: int, radix: int) -> int:
    check_radix(radix)
    count = 1
    while value >= radix:
        value //= radix
        count += 1
    return count


def reverse(value: int, radix: int) -> int:
    """Digit reversal. Trailing zeros become leading zeros and vanish: 48000 -> 84."""
    check_radix(radix)
    if value < 0:
        raise ValueError("reverse is defined for non-negative values")
    if radix == 10 and value.bit_length() < 8192:
        return int(str(value)[::-1])
    out = 0
    while value:
        value, d = divmod(value, radix)
        out = out * radix + d
    return out


def is_palindrome(value: int, radix: int) -> bool:
    ds = to_digits(value, radix)
    return ds.digits == ds.digits[::-1]


def iroot(value: int, k: int) -> tuple[int, bool]:
    """Return ``(floor(value ** (1/k)), is_exact)`` using integer arithmetic only."""
    if value < 0:
        raise ValueError("iroot needs a non-negative value")
    if k < 2:
        raise ValueError("root degree must be at least 2")
    if value < 2:
        return value, True
    if k == 2:
        r = math.isqrt(value)
        return r, r * r == value
    # Newton iteration from an overestimate decreases monotonically to the floor root.
    x = 1 << -(-value.bit_length() // k)
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == value


def repeat_concat(value: int, radix: int, block_width: int, copies: int) -> int:
    """Concatenate ``copies`` blocks of ``value`` zero-padded to ``block_width`` digits.

    ``repeat_concat(528, 10, 4, 2) == 5280528``.
    """
    check_radix(radix)
    if value <= 0:
        raise ValueError("repeat_concat needs a positive value")
    if copies < 1:
        raise ValueError("copies must be at least 1")
    if block_width < digit_count(value, radix):
        raise ValueError(f"block width {block_width} is narrower than {value} in radix {radix}")
    if block_width * copies * math.log2(radix) > MAX_BITS:
        raise CapacityError(f"{copies} blocks of width {block_width} exceed {MAX_BITS} bits")
    block = radix**block_width
    return check_capacity(value * ((block**copies - 1) // (block - 1)))
