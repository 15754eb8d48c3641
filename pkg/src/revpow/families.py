"""Closed-form infinite solution families.

Every generator re-checks its member with :func:`classify`; a failure raises
:class:`FamilyViolation` rather than returning an unverified record.
"""
from __future__ import annotations

from .digits import CapacityError, MAX_BITS, check_radix, digit_count, iroot, is_palindrome, repeat_concat
from .equations import Equation, Sign, Solution, classify

FAMILIES = ("e1-concat", "e2-power", "e3-palindrome-power")


class FamilyViolation(AssertionError):
    """A generated family member failed exact verification."""


def _check_k(radix: int, k: int, exponent: int) -> None:
    check_radix(radix)
    if k < 1:
        raise ValueError("family index k must be at least 1")
    if exponent * k * radix.bit_length() > MAX_BITS:
        raise CapacityError(f"radix^{exponent * k} exceeds {MAX_BITS} bits")


def _verified(n_value: int, radix: int, eq: Equation, family: str) -> Solution:
    sol = classify(n_value, radix, eq)
    if sol is None:
        raise FamilyViolation(f"{family} member {n_value} (radix {radix}) is not a solution of {eq.name}")
    return sol


def e1_concat_member(seed: Solution, block_width: int | None = None, copies: int = 2) -> Solution:
    """Repeat the seed's digit block ``copies`` times, padded to ``block_width`` digits.

    ``block_width`` larger than the seed's width gives the ``a0a0...a`` shapes.
    """
    if seed.equation is not Equation.E1 or not seed.verify():
        raise ValueError(f"seed {seed.n_value} is not a verified E1 solution")
    if block_width is None:
        block_width = digit_count(seed.n_value, seed.radix)
    n_value = repeat_concat(seed.n_value, seed.radix, block_width, copies)
    return _verified(n_value, seed.radix, Equation.E1, "e1-concat")


def e2_power_member(radix: int, k: int) -> Solution:
    """``N = r^(3k) (r^(3k) - 1)``, i.e. 3k copies of the top digit followed by 3k zeros."""
    _check_k(radix, k, 6)
    top = radix ** (3 * k)
    sol = _verified(top * (top - 1), radix, Equation.E2, "e2-power")
    if sol.sign is not Sign.PLUS:
        raise FamilyViolation(f"e2-power member {sol.n_value} has negative sign")
    return sol


def e3_palindrome_power_member(radix: int, k: int) -> Solution:
    """``N = r^(2k) + 1`` with ``N^3 - N^2 = (N r^k)^2``."""
    _check_k(radix, k, 6)
    n_value = radix ** (2 * k) + 1
    sol = _verified(n_value, radix, Equation.E3, "e3-palindrome-power")
    if sol.sign is not Sign.PLUS or sol.root != n_value * radix**k:
        raise FamilyViolation(f"e3-palindrome-power member {n_value} has root {sol.root}")
    return sol


def e3_from_palindrome(m: int, radix: int) -> Solution | None:
    """For a palindrome ``m`` the E3 left side is ``m^2 (m - 1)``, a square iff ``m - 1`` is."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if not is_palindrome(m, radix):
        raise ValueError(f"{m} is not a palindrome in radix {radix}")
    k, exact = iroot(m - 1, 2)
    if not exact:
        return None
    return Solution(m, radix, m, Equation.E3, Sign.PLUS, m * k)
