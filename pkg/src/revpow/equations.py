"""The three equations ``N^p - N*rev(N) = +/- n^q`` and exact classification of candidates."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .digits import MAX_BITS, CapacityError, check_capacity, check_radix, iroot, reverse, to_digits


class Equation(enum.Enum):
    """Exponents ``(p, q)`` of ``N^p - N*rev(N) = +/- n^q``."""

    E1 = (2, 2)
    E2 = (2, 3)
    E3 = (3, 2)

    @property
    def lhs_exp(self) -> int:
        return self.value[0]

    @property
    def rhs_exp(self) -> int:
        return self.value[1]

    @property
    def number(self) -> int:
        return int(self.name[1])

    @classmethod
    def parse(cls, text: str | int | Equation) -> Equation:
        if isinstance(text, Equation):
            return text
        key = str(text).strip().upper()
        if not key.startswith("E"):
            key = "E" + key
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown equation {text!r}; expected 1, 2 or 3") from None


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def word(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Solution:
    n_value: int
    radix: int
    reversed: int
    equation: Equation
    sign: Sign
    root: int

    @property
    def magnitude(self) -> int:
        return self.root**self.equation.rhs_exp

    @property
    def signed_value(self) -> int:
        return self.magnitude if self.sign is Sign.PLUS else -self.magnitude

    def verify(self) -> bool:
        """Recompute everything from ``n_value`` and ``radix``."""
        p = self.equation.lhs_exp
        return (
            self.root >= 1
            and self.reversed == reverse(self.n_value, self.radix)
            and self.n_value**p - self.n_value * self.reversed == self.signed_value
        )

    def render(self) -> str:
        """Table-row identity, e.g. ``528^2-528·825=-396^2``."""
        p, q = self.equation.value
        sign = "-" if self.sign is Sign.MINUS else ""
        return f"{self.n_value}^{p}-{self.n_value}·{self.reversed}={sign}{self.root}^{q}"

    def n_in_radix(self) -> str:
        return str(to_digits(self.n_value, self.radix))


def _check_candidate(n_value: int, eq: Equation) -> None:
    if n_value < 1:
        raise ValueError("N must be positive")
    if n_value.bit_length() * eq.lhs_exp > MAX_BITS + eq.lhs_exp:
        raise CapacityError(f"N^{eq.lhs_exp} for a {n_value.bit_length()}-bit N exceeds {MAX_BITS} bits")


def lhs_value(n_value: int, radix: int, eq: Equation) -> int:
    """``N^p - N*rev(N)``, exactly."""
    _check_candidate(n_value, eq)
    rev = reverse(n_value, radix)
    return check_capacity(n_value * (n_value ** (eq.lhs_exp - 1) - rev), "lhs")


def classify(n_value: int, radix: int, eq: Equation) -> Solution | None:
    """Return the solution record for ``N`` or None.

    A zero left-hand side is not a solution because the root must be positive.
    """
    _check_candidate(n_value, eq)
    check_radix(radix)
    rev = reverse(n_value, radix)
    lhs = check_capacity(n_value * (n_value ** (eq.lhs_exp - 1) - rev), f"lhs for N={n_value}")
    if lhs == 0:
        return None
    root, exact = iroot(abs(lhs), eq.rhs_exp)
    if not exact:
        return None
    return Solution(n_value, radix, rev, eq, Sign.PLUS if lhs > 0 else Sign.MINUS, root)


def reversal_difference_identity(n_value: int, radix: int) -> int:
    """``N - rev(N)`` expanded digit by digit as ``sum d_i (r^(w-1-i) - r^i)``.

    For a three-digit decimal ``abc`` this is ``99 (a - c)``.
    """
    digits = to_digits(n_value, radix).digits
    w = len(digits)
    return sum(d * (radix ** (w - 1 - i) - radix**i) for i, d in enumerate(digits))


def parse_identity(text: str) -> tuple[int, int, int, int, int, int]:
    """Parse ``N^p-N·R=±n^q`` into ``(N, p, R, sign, n, q)``; used to re-check rendered output."""
    left, _, right = text.replace("*", "·").partition("=")
    head, _, rev = left.partition("·")
    n_text, _, p = head.rpartition("-")[0].partition("^")
    sign = -1 if right.startswith("-") else 1
    root, _, q = right.lstrip("+-").partition("^")
    return int(n_text), int(p), int(rev), sign, int(root), int(q)


def identity_holds(text: str) -> bool:
    n, p, rev, sign, root, q = parse_identity(text)
    return n**p - n * rev == sign * root**q


__all__ = [
    "Equation",
    "Sign",
    "Solution",
    "classify",
    "identity_holds",
    "lhs_value",
    "parse_identity",
    "reversal_difference_identity",
]
