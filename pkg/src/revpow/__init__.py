"""Exact search for ``N^p - N*rev(N) = +/- n^q`` in radix 2..36."""
from .digits import (
    CapacityError,
    DigitString,
    from_digits,
    iroot,
    is_palindrome,
    repeat_concat,
    reverse,
    to_digits,
)
from .equations import Equation, Sign, Solution, classify, lhs_value, reversal_difference_identity
from .families import (
    FamilyViolation,
    e1_concat_member,
    e2_power_member,
    e3_from_palindrome,
    e3_palindrome_power_member,
)
from .search import (
    DensityReport,
    SearchRange,
    count_solutions,
    enumerate_solutions,
    heuristic_prediction,
    palindrome_density,
)

__version__ = "0.1.0"
