"""Exhaustive enumeration of solutions over a range, and density accounting.

The range is cut into fixed-size chunks. Each chunk is scanned with numpy:
digit reversal is vectorised and the left-hand side is reduced modulo a few
small moduli. A candidate whose residue is not a square (or cube) residue for
some modulus cannot be a perfect power, so it is dropped; every survivor is
decided by the exact big-integer :func:`classify`. The residue test only ever
discards certain non-solutions, so the output is exact.

Chunks may run in a process pool; results are reassembled in chunk order so
the stream is ascending and identical for any worker count.
"""
from __future__ import annotations

import bisect
import math
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from .digits import CapacityError, MAX_BITS, check_radix
from .equations import Equation, Solution, classify

DEFAULT_CHUNK_SIZE = 65536
SIGN_FILTERS = ("plus", "minus", "both")

# Above this bound the int64 digit reversal could overflow; the pure-int path takes over.
VECTOR_LIMIT = 1 << 53

_MODULI = {2: (64, 63, 65, 11), 3: (63, 19, 37, 13)}

ProgressFn = Callable[[int, int], None]


def _residue_table(modulus: int, q: int) -> np.ndarray:
    table = np.zeros(modulus, dtype=bool)
    table[[pow(x, q, modulus) for x in range(modulus)]] = True
    return table


_RESIDUES = {q: [(m, _residue_table(m, q)) for m in mods] for q, mods in _MODULI.items()}


def default_workers() -> int:
    env = os.environ.get("REVPOW_WORKERS")
    if env:
        return max(1, int(env))
    return 1


@dataclass(frozen=True)
class SearchRange:
    radix: int
    equation: Equation
    lo: int
    hi: int
    sign_filter: str = "both"
    chunk_size: int = DEFAULT_CHUNK_SIZE
    sieve: bool = False
    # Single-digit N are their own reversal; the published tables start at two digits.
    min_digits: int = 2

    def __post_init__(self) -> None:
        check_radix(self.radix)
        if self.lo < 1:
            raise ValueError("lo must be at least 1")
        if self.hi <= self.lo:
            raise ValueError(f"empty range [{self.lo}, {self.hi})")
        if self.sign_filter not in SIGN_FILTERS:
            raise ValueError(f"sign_filter must be one of {SIGN_FILTERS}")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be positive")
        if self.min_digits < 1:
            raise ValueError("min_digits must be at least 1")
        if self.sieve and (self.equation is not Equation.E1 or self.radix != 10):
            raise ValueError("the 11-sieve only applies to E1 in base 10")
        if (self.hi - 1).bit_length() * (self.equation.lhs_exp + 1) > MAX_BITS:
            raise CapacityError(
                f"N^{self.equation.lhs_exp} for a {self.hi.bit_length()}-bit bound exceeds {MAX_BITS} bits"
            )

    @property
    def start(self) -> int:
        return max(self.lo, self.radix ** (self.min_digits - 1))

    def chunks(self) -> Iterator[tuple[int, int]]:
        for a in range(self.start, self.hi, self.chunk_size):
            yield a, min(a + self.chunk_size, self.hi)

    def accepts(self, sol: Solution) -> bool:
        return self.sign_filter == "both" or sol.sign.word == self.sign_filter


def _sieved_out(n: int) -> bool:
    # abc^2 - abc*cba = 99 abc (a - c) is a square only if 11 | abc.
    return 100 <= n <= 999 and n % 11 != 0


def _vector_reverse(values: np.ndarray, radix: int) -> np.ndarray:
    x = values.copy()
    out = np.zeros_like(values)
    while True:
        live = x > 0
        if not live.any():
            return out
        out = np.where(live, out * radix + x % radix, out)
        x //= radix


def _candidates(spec: SearchRange, a: int, b: int) -> list[int]:
    """Values in [a, b) whose left-hand side passes every residue test."""
    n = np.arange(a, b, dtype=np.int64)
    rev = _vector_reverse(n, spec.radix)
    if spec.equation.lhs_exp == 2:
        diff = np.abs(n - rev)
        keep = diff != 0
    else:
        diff = None
        keep = np.ones(n.shape, dtype=bool)
    for m, table in _RESIDUES[spec.equation.rhs_exp]:
        nm = n % m
        if diff is not None:
            res = (nm * (diff % m)) % m
        else:
            res = (nm * ((nm * nm - rev % m) % m)) % m
        keep &= table[res]
    if spec.sieve:
        keep &= ~((n >= 100) & (n <= 999) & (n % 11 != 0))
    return n[keep].tolist()


def scan_chunk(spec: SearchRange, a: int, b: int) -> list[Solution]:
    """Every accepted solution with ``a <= N < b``, ascending."""
    if b <= VECTOR_LIMIT:
        candidates: Sequence[int] = _candidates(spec, a, b)
    else:
        candidates = range(a, b)
    out = []
    for n in candidates:
        if spec.sieve and _sieved_out(n):
            continue
        sol = classify(n, spec.radix, spec.equation)
        if sol is not None and spec.accepts(sol):
            out.append(sol)
    return out


def _scan_job(job: tuple[SearchRange, int, int]) -> list[Solution]:
    return scan_chunk(*job)


def enumerate_solutions(
    spec: SearchRange,
    workers: int | None = None,
    progress: ProgressFn | None = None,
) -> Iterator[Solution]:
    """Yield every solution in the range in ascending order of N.

    ``progress`` is called after each chunk with (candidates scanned, solutions found).
    """
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("workers must be at least 1")
    scanned = found = 0
    jobs = ((spec, a, b) for a, b in spec.chunks())

    def emit(job: tuple[SearchRange, int, int], sols: list[Solution]) -> list[Solution]:
        nonlocal scanned, found
        scanned += job[2] - job[1]
        found += len(sols)
        if progress is not None:
            progress(scanned, found)
        return sols

    if workers == 1:
        for job in jobs:
            yield from emit(job, _scan_job(job))
        return

    # Bounded window of in-flight chunks, drained strictly in submission order.
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        for job in jobs:
            pending.append((job, pool.submit(_scan_job, job)))
            if len(pending) >= 2 * workers:
                done_job, fut = pending.popleft()
                yield from emit(done_job, fut.result())
        while pending:
            done_job, fut = pending.popleft()
            yield from emit(done_job, fut.result())


def heuristic_prediction(equation: Equation, bound: float, log_base: float = math.e) -> float:
    """Expected solution count below ``bound`` if the left side were a random integer."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if equation is Equation.E1:
        return 0.5 * math.log(bound, log_base)
    if equation is Equation.E2:
        return 1.0 - bound ** (-1 / 3)
    return 1.0 - bound ** (-1 / 2)


def palindrome_density(radix: int, digit_count: int) -> int:
    """Number of palindromes with exactly ``digit_count`` digits (no leading zero)."""
    check_radix(radix)
    if digit_count < 1:
        raise ValueError("digit_count must be at least 1")
    return (radix - 1) * radix ** ((digit_count + 1) // 2 - 1)


@dataclass(frozen=True)
class Checkpoint:
    bound: int
    observed: int
    predicted: float

    @property
    def ratio(self) -> float:
        return self.observed / self.predicted if self.predicted else math.inf


@dataclass
class DensityReport:
    equation: Equation
    radix: int
    checkpoints: list[Checkpoint] = field(default_factory=list)
    log_note: str = "E1 prediction uses the natural logarithm: 0.5*ln(bound)"
    solutions: list[Solution] = field(default_factory=list, repr=False)


def count_solutions(
    equation: Equation,
    radix: int,
    checkpoints: Sequence[int],
    workers: int | None = None,
    progress: ProgressFn | None = None,
    **range_options,
) -> DensityReport:
    """Count solutions below each checkpoint in one pass up to the largest."""
    bounds = list(checkpoints)
    if not bounds or any(b <= a for a, b in zip(bounds, bounds[1:])):
        raise ValueError("checkpoints must be a non-empty strictly ascending list")
    report = DensityReport(equation, radix)
    if bounds[-1] > 1:
        spec = SearchRange(radix, equation, 1, bounds[-1], **range_options)
        report.solutions = list(enumerate_solutions(spec, workers=workers, progress=progress))
    values = [s.n_value for s in report.solutions]
    for bound in bounds:
        observed = bisect.bisect_left(values, bound)
        report.checkpoints.append(Checkpoint(bound, observed, heuristic_prediction(equation, max(bound, 1))))
    return report


def solutions_below(equation: Equation, radix: int, hi: int, **kwargs) -> list[Solution]:
    """Convenience wrapper: all solutions in ``[1, hi)``."""
    workers = kwargs.pop("workers", None)
    return list(enumerate_solutions(SearchRange(radix, equation, 1, hi, **kwargs), workers=workers))


__all__ = [
    "Checkpoint",
    "DensityReport",
    "SearchRange",
    "count_solutions",
    "enumerate_solutions",
    "heuristic_prediction",
    "palindrome_density",
    "scan_chunk",
    "solutions_below",
]
