"""Exit criteria. Each test records a one-line verdict shown in the terminal summary."""
import io
import math
import time

import numpy as np
import pytest

from revpow.cli import main, write_records
from revpow.digits import DigitString, is_palindrome, to_digits
from revpow.equations import Equation, classify
from revpow.families import (
    e1_concat_member,
    e2_power_member,
    e3_from_palindrome,
    e3_palindrome_power_member,
)
from revpow.search import SearchRange, count_solutions, enumerate_solutions, solutions_below
from revpow.tables import E1_DENSITY_COUNTS, E2_COUNT_BELOW_1E8, TABLES


def _reproduce(table):
    out, err = io.StringIO(), io.StringIO()
    start = time.perf_counter()
    code = main(["reproduce", "--table", table, "--workers", "1"], out, err)
    return code, out.getvalue().splitlines(), time.perf_counter() - start


def _matches(sols, table):
    rows = TABLES[table].rows
    return [(s.n_value, s.reversed, s.sign.value, s.root) for s in sols] == [
        (r.n_value, r.reversed, r.sign, r.root) for r in rows
    ]


def test_c1_e1_table(criterion):
    code, lines, elapsed = _reproduce("e1-530k")
    assert lines[0] == "PASS 528" and lines[36] == "PASS 528528"
    assert code == 0 and lines[-1] == "PASS, 37/37 rows"
    assert elapsed < 10
    criterion(f"E1 below 530000: 37/37 rows exact in {elapsed:.1f}s")


def test_c2_e3_table(criterion):
    start = time.perf_counter()
    sols = solutions_below(Equation.E3, 10, 10**7)
    elapsed = time.perf_counter() - start
    assert [s.n_value for s in sols] == [101, 626, 10001, 1000001, 1040401, 2217122, 5053505]
    assert _matches(sols, "e3-1e7")
    assert elapsed < 60
    criterion(f"E3 base 10 below 10^7: 7/7 rows with roots in {elapsed:.1f}s")


@pytest.mark.parametrize("table, radix, count", [("base3", 3, 16), ("base4", 4, 28)])
def test_c3_radix_tables(criterion, table, radix, count):
    sols = solutions_below(Equation.E3, radix, 10**7)
    assert len(sols) == count
    assert _matches(sols, table)
    assert [s.n_in_radix() for s in sols] == [r.digits for r in TABLES[table].rows]
    assert DigitString.parse("11202_b3", 3) == to_digits(128, 3)
    assert DigitString.parse("203122221302_b4", 4) == to_digits(9284210, 4)
    criterion(f"E3 base {radix} below 10^7: {count}/{count} rows, digit strings match")


def test_c4_density_core(criterion):
    report = count_solutions(Equation.E1, 10, [10**5, 10**6])
    observed = [c.observed for c in report.checkpoints]
    assert observed == [E1_DENSITY_COUNTS[10**5], E1_DENSITY_COUNTS[10**6]] == [9, 54]
    criterion(f"E1 counts below 10^5, 10^6: {observed}")


@pytest.fixture(scope="module")
def e1_to_1e8():
    return count_solutions(Equation.E1, 10, [10**5, 10**6, 10**7, 10**8])


@pytest.mark.slow
def test_c4_extended_1e8(criterion, e1_to_1e8):
    observed = [c.observed for c in e1_to_1e8.checkpoints]
    assert observed[-1] == E1_DENSITY_COUNTS[10**8] == 176
    assert observed == sorted(observed)
    e2 = count_solutions(Equation.E2, 10, [10**8])
    assert e2.checkpoints[0].observed == E2_COUNT_BELOW_1E8 == 16
    assert _matches(e2.solutions, "e2-1e8")
    criterion(f"extended: E1 below 10^8 = 176, E2 below 10^8 = 16 (16/16 rows); E1 chain {observed}")


@pytest.mark.slow
def test_c4_extended_1e7_independent_count(criterion, e1_to_1e8):
    # Straight-from-the-definition count, no residue prefilter and no numpy.
    count = 0
    for n in range(10, 10**7):
        v = abs(n * (n - int(str(n)[::-1])))
        if v and math.isqrt(v) ** 2 == v:
            count += 1
    observed = e1_to_1e8.checkpoints[2].observed
    assert observed == count == 95
    nxt = next(s.n_value for s in e1_to_1e8.solutions if s.n_value >= 10**7)
    assert nxt == 10096793
    criterion(
        f"extended: E1 below 10^7 = {observed} by two independent counts; "
        f"published 96 (next solution {nxt} would make 96) -- see xfail below"
    )


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="published count 96 below 10^7; exhaustive exact count is 95")
def test_c4_extended_1e7_published(criterion, e1_to_1e8):
    criterion("extended: E1 below 10^7 published 96, observed 95 (documented mismatch)")
    assert e1_to_1e8.checkpoints[2].observed == E1_DENSITY_COUNTS[10**7]


def test_c5_family_soundness(criterion):
    checked = 0
    for radix in (3, 4, 10):
        for k in (1, 2, 3):
            for member in (e2_power_member(radix, k), e3_palindrome_power_member(radix, k)):
                assert classify(member.n_value, radix, member.equation) == member
                checked += 1
    seeds = solutions_below(Equation.E1, 10, 10**4)
    assert [s.n_value for s in seeds] == [528, 539, 825, 1296]
    for seed in seeds:
        w = len(str(seed.n_value))
        for copies in (2, 3):
            for width in (w, w + 1):
                member = e1_concat_member(seed, width, copies)
                assert classify(member.n_value, 10, Equation.E1) == member
                checked += 1
    criterion(f"{checked} family members verified by classify")


def _brute_force_roots(lhs: np.ndarray, q: int) -> np.ndarray:
    """Root for each |lhs| found by trying every candidate 1..R; 0 where none."""
    mags = np.abs(lhs)
    top = int(round(float(mags.max()) ** (1 / q))) + 2
    roots = np.zeros(len(mags), dtype=np.int64)
    for start in range(1, top + 1, 1 << 20):
        cand = np.arange(start, min(start + (1 << 20), top + 1), dtype=np.int64)
        powers = cand**q
        pos = np.searchsorted(powers, mags)
        hit = (pos < len(powers)) & (mags > 0)
        hit[hit] &= powers[pos[hit]] == mags[hit]
        roots[hit] = cand[pos[hit]]
    return roots


def test_c6_oracle_equivalence(criterion):
    ns = list(range(1, 10**5 + 1))
    revs = [int(str(n)[::-1]) for n in ns]
    disagreements = 0
    total = 0
    for eq in Equation:
        p, q = eq.value
        lhs = np.array([n**p - n * r for n, r in zip(ns, revs)], dtype=np.int64)
        roots = _brute_force_roots(lhs, q)
        for n, value, root in zip(ns, lhs.tolist(), roots.tolist()):
            sol = classify(n, 10, eq)
            expected = None if root == 0 else ("+" if value > 0 else "-", root)
            got = None if sol is None else (sol.sign.value, sol.root)
            disagreements += got != expected
            total += sol is not None
    assert disagreements == 0
    criterion(f"3 x 10^5 classifications vs brute-force root search: 0 disagreements ({total} solutions)")


def test_c7_palindrome_criterion(criterion):
    disagreements = checked = 0
    for m in range(2, 10**6 + 1):
        if not is_palindrome(m, 10):
            continue
        checked += 1
        disagreements += e3_from_palindrome(m, 10) != classify(m, 10, Equation.E3)
    # 9 + 9 + 90 + 90 + 900 + 900 palindromes below 10^6, less m = 1.
    assert checked == 1997
    assert disagreements == 0
    criterion(f"{checked} palindromes in [2, 10^6]: 0 disagreements")


def test_c8_eleven_divisibility(criterion):
    found = [n for n in range(100, 1000) if classify(n, 10, Equation.E1) is not None]
    assert found == [528, 539, 825]
    assert all(n % 11 == 0 for n in found)
    criterion(f"3-digit E1 solutions {found} all divisible by 11")


def _tsv(spec, workers):
    out = io.StringIO()
    write_records(enumerate_solutions(spec, workers=workers), "tsv", out)
    return out.getvalue().encode()


def test_c9_determinism(criterion):
    for eq in Equation:
        spec = SearchRange(10, eq, 1, 10**6)
        runs = {w: _tsv(spec, w) for w in (1, 2, 8)}
        assert runs[1] == runs[2] == runs[8]
    plain = _tsv(SearchRange(10, Equation.E1, 1, 10**6), 1)
    sieved = _tsv(SearchRange(10, Equation.E1, 1, 10**6, sieve=True), 1)
    assert plain == sieved
    criterion("tsv byte-identical for 1/2/8 workers (E1-E3, [1, 10^6)); 11-sieve identical to unsieved")
