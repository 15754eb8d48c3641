"""Published solution tables, stored row for row as printed.

Decimal rows are ``(N, rev(N), sign, root)``; radix rows prepend N's digit
string. Each table also names the search that regenerates it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .equations import Equation

# Published table: E1 solutions below 530000, base 10.
E1_530K = (
    (528, 825, "-", 396),
    (539, 935, "-", 462),
    (825, 528, "+", 495),
    (1296, 6921, "-", 2700),
    (21296, 69212, "-", 31944),
    (35904, 40953, "-", 13464),
    (39204, 40293, "-", 6534),
    (51483, 38415, "+", 25938),
    (83259, 95238, "-", 31581),
    (100793, 397001, "-", 172788),
    (120213, 312021, "-", 151848),
    (131043, 340131, "-", 165528),
    (184093, 390481, "-", 194922),
    (197516, 615791, "-", 287430),
    (214896, 698412, "-", 322344),
    (240426, 624042, "-", 303696),
    (243675, 576342, "-", 284715),
    (247192, 291742, "-", 104940),
    (251256, 652152, "-", 317376),
    (252486, 684252, "-", 330174),
    (262086, 680262, "-", 331056),
    (297992, 299792, "-", 23160),
    (324723, 327423, "-", 29610),
    (344619, 916443, "-", 443916),
    (348075, 570843, "-", 278460),
    (360639, 936063, "-", 455544),
    (371469, 964173, "-", 469224),
    (380208, 802083, "-", 400500),
    (382299, 992283, "-", 482904),
    (384659, 956483, "-", 468996),
    (395604, 406593, "-", 65934),
    (451737, 737154, "-", 359073),
    (456187, 781654, "-", 385323),
    (522729, 927225, "-", 459828),
    (523908, 809325, "-", 386694),
    (525625, 526525, "-", 21750),
    (528528, 825825, "-", 396396),
)

# Published table: E2 solutions below 10^8, base 10.
E2_1E8 = (
    (48, 84, "-", 12),
    (2744, 4472, "-", 168),
    (4125, 5214, "-", 165),
    (5632, 2365, "+", 264),
    (7128, 8217, "-", 198),
    (48000, 84, "+", 1320),
    (49152, 25194, "+", 1056),
    (148137, 731841, "-", 4422),
    (273273, 372372, "-", 3003),
    (321651, 156123, "+", 3762),
    (456876, 678654, "-", 4662),
    (483153, 351384, "+", 3993),
    (999000, 999, "+", 9990),
    (3652264, 4622563, "-", 15246),
    (5412825, 5282145, "+", 8910),
    (63936000, 63936, "+", 159840),
)

# Published table: E3 solutions below 10^7, base 10.
E3_1E7 = (
    (101, 101, "+", 1010),
    (626, 626, "+", 15650),
    (10001, 10001, "+", 1000100),
    (1000001, 1000001, "+", 1000001000),
    (1040401, 1040401, "+", 1061209020),
    (2217122, 2217122, "+", 3301294658),
    (5053505, 5053505, "+", 11360279240),
)

# Published table: E3 solutions below 10^7, base 3.
BASE3_1E7 = (
    ("101", 10, 10, "+", 30),
    ("222", 26, 26, "+", 130),
    ("10001", 82, 82, "+", 738),
    ("11202", 128, 184, "+", 1440),
    ("1000001", 730, 730, "+", 19710),
    ("2112112", 1850, 1850, "+", 79550),
    ("100000001", 6562, 6562, "+", 531522),
    ("101101101", 7570, 7570, "+", 658590),
    ("222212222", 19601, 19601, "+", 2744140),
    ("10000000001", 59050, 59050, "+", 14349150),
    ("10112121101", 69697, 69697, "+", 18400008),
    ("1000000000001", 531442, 531442, "+", 387421218),
    ("2221000001222", 1555010, 1555010, "+", 1939097470),
    ("100000000000001", 4782970, 4782970, "+", 10460355390),
    ("100011000110001", 4862026, 4862026, "+", 10720767330),
    ("101102202201101", 5546026, 5546026, "+", 13060891230),
)

# Published table: E3 solutions below 10^7, base 4.
BASE4_1E7 = (
    ("11", 5, 5, "+", 10),
    ("22", 10, 10, "+", 30),
    ("101", 17, 17, "+", 68),
    ("1001", 65, 65, "+", 520),
    ("2222", 170, 170, "+", 2210),
    ("10001", 257, 257, "+", 4112),
    ("11011", 325, 325, "+", 5850),
    ("20102", 530, 530, "+", 12190),
    ("100001", 1025, 1025, "+", 32800),
    ("112211", 1445, 1445, "+", 54910),
    ("202202", 2210, 2210, "+", 103870),
    ("223322", 2810, 2810, "+", 148930),
    ("1000001", 4097, 4097, "+", 262208),
    ("10000001", 16385, 16385, "+", 2097280),
    ("10100101", 17425, 17425, "+", 2300100),
    ("100000001", 65537, 65537, "+", 16777472),
    ("101202101", 71825, 71825, "+", 19249100),
    ("110202011", 84101, 84101, "+", 24389290),
    ("1000000001", 262145, 262145, "+", 134218240),
    ("2212332122", 683930, 683930, "+", 565610110),
    ("10000000001", 1048577, 1048577, "+", 1073742848),
    ("10010001001", 1065025, 1065025, "+", 1099105800),
    ("10122222101", 1157777, 1157777, "+", 1245768052),
    ("11002320011", 1322501, 1322501, "+", 1520876150),
    ("100000000001", 4194305, 4194305, "+", 8589936640),
    ("100120021001", 4293185, 4293185, "+", 8895479320),
    ("112120021211", 5866085, 5866085, "+", 14207657870),
    ("203122221302", 9284210, 9284210, "+", 28288987870),
)


@dataclass(frozen=True)
class ExpectedRow:
    n_value: int
    reversed: int
    sign: str
    root: int
    digits: str | None = None


@dataclass(frozen=True)
class Table:
    name: str
    equation: Equation
    radix: int
    bound: int
    rows: tuple[ExpectedRow, ...]
    # Desk-scale bound for ``reproduce --fast``.
    fast_bound: int

    def expected(self, fast: bool = False) -> tuple[ExpectedRow, ...]:
        limit = self.fast_bound if fast else self.bound
        return tuple(r for r in self.rows if r.n_value < limit)


def _decimal(rows) -> tuple[ExpectedRow, ...]:
    return tuple(ExpectedRow(n, rev, sign, root) for n, rev, sign, root in rows)


def _radix(rows) -> tuple[ExpectedRow, ...]:
    return tuple(ExpectedRow(n, rev, sign, root, digits) for digits, n, rev, sign, root in rows)


TABLES = {
    t.name: t
    for t in (
        Table("e1-530k", Equation.E1, 10, 530_000, _decimal(E1_530K), 530_000),
        Table("e2-1e8", Equation.E2, 10, 10**8, _decimal(E2_1E8), 10**6),
        Table("e3-1e7", Equation.E3, 10, 10**7, _decimal(E3_1E7), 10**6),
        Table("base3", Equation.E3, 3, 10**7, _radix(BASE3_1E7), 10**6),
        Table("base4", Equation.E3, 4, 10**7, _radix(BASE4_1E7), 10**6),
    )
}

# Published E1 counts of solutions below each bound (base 10), and the E2 count below 10^8.
E1_DENSITY_COUNTS = {10**5: 9, 10**6: 54, 10**7: 96, 10**8: 176}
E2_COUNT_BELOW_1E8 = 16
