"""Golden-value verification harness.

Recomputes every reference count the library is expected to reproduce --
smooth/nodal/cuspidal tangency tables, their Caporaso-Harris counterparts,
the classical singular-curve counts, the closed-form class coefficients and
the rational-curve numbers -- and reports pass/fail per row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import caporaso_harris as ch
from . import cusp, multisingular, nodal, tangency, wdvv
from .ring import RingElem, SpaceSig, delta


@dataclass(frozen=True)
class VerifyRow:
    table: str
    query: str
    expected: int
    computed: int

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerifyReport:
    rows: list = field(default_factory=list)

    def add(self, table: str, query: str, expected: int, computed: int):
        self.rows.append(VerifyRow(table, query, expected, computed))

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def _mono(d, m, n, **kw):
    return RingElem.monomial(SpaceSig(d, m, n), **kw)


def _smooth(report: VerifyReport):
    for d, want in zip(range(4, 10), (0, 0, 0, 36, 144, 360)):
        c = _mono(d, 0, 3, y1=2, yd=delta(d) - 4)
        got = tangency.eval_T(d, (1, 1, 2), c).unordered_value
        report.add("smooth", f"unordered [T1 T1 T2] * y1^2 * yd^{delta(d)-4} @ d={d}", want, got)
    for d, want in zip(range(7, 10), (12, 36, 72)):
        c = _mono(d, 0, 3, y1=2, yd=delta(d) - 5, a=(1, 0, 0))
        got = tangency.eval_T(d, (1, 1, 2), c).ordered_value
        report.add("smooth", f"[T1 T1 T2] * y1^2 * yd^{delta(d)-5} * a1 @ d={d}", want, got)


def _nodal(report: VerifyReport):
    for d, want in ((7, 3420), (8, 19404)):
        c = _mono(d, 1, 3, y1=2, yd=delta(d) - 5)
        got = nodal.eval_A1F_T(d, (1, 1, 2), c).unordered_value
        report.add("nodal", f"unordered [A1F T1 T1 T2] * y1^2 * yd^{delta(d)-5} @ d={d}", want, got)
    c = _mono(8, 1, 3, y1=2, yd=38, a=(1, 0, 0))
    report.add("nodal", "[A1F T1 T1 T2] * y1^2 * yd^38 * a1 @ d=8", 4912,
               nodal.eval_A1F_T(8, (1, 1, 2), c).ordered_value)
    report.add("nodal", "[A1F T1] * y1^2 * yd^7 @ d=3", 36,
               nodal.eval_A1F_T(3, (1,), _mono(3, 1, 1, y1=2, yd=7)).ordered_value)
    report.add("nodal", "[A1F T1] * y1 * yd^8 @ d=3", 48,
               nodal.eval_A1F_T(3, (1,), _mono(3, 1, 1, y1=1, yd=8)).ordered_value)


def _cusp(report: VerifyReport):
    report.add("cusp", "[A2F T1] * y1^2 * yd^6 @ d=3", 60,
               cusp.eval_A2F_T1s(3, 1, _mono(3, 1, 1, y1=2, yd=6)).ordered_value)


def _ch_oracle(report: VerifyReport):
    for d, want in zip(range(7, 10), (36, 144, 360)):
        key = ch.CHKey(d, 0, (), (d - 7, 2, 1))
        report.add("ch", f"N({d}, 0, (), {key.beta})", want, ch.ch_invariant(key))
    for d, want in zip(range(7, 10), (12, 36, 72)):
        key = ch.CHKey(d, 0, (0, 1), (d - 7, 1, 1))
        report.add("ch", f"N({d}, 0, (0,1), {key.beta})", want, ch.ch_invariant(key))
    for d, want in ((7, 3420), (8, 19404)):
        key = ch.CHKey(d, 1, (), (d - 7, 2, 1))
        report.add("ch", f"N({d}, 1, (), {key.beta})", want, ch.ch_invariant(key))
    key = ch.CHKey(8, 1, (0, 1), (1, 1, 1))
    report.add("ch", "N(8, 1, (0,1), (1,1,1))", 4912, ch.ch_invariant(key))


def _classical(report: VerifyReport):
    for d in range(2, 8):
        c = _mono(d, 1, 0, y1=2, yd=delta(d) - 1)
        got = nodal.eval_A1F_T(d, (), c).ordered_value
        report.add("classical", f"1-nodal Severi degree @ d={d}", 3 * (d - 1) ** 2, got)
        key = ch.CHKey(d, 1, (), (d,))
        report.add("classical", f"N({d}, 1, (), ({d},))", 3 * (d - 1) ** 2,
                   ch.ch_invariant(key))
    for d in range(3, 8):
        c = _mono(d, 1, 0, y1=2, yd=delta(d) - 2)
        got = cusp.eval_A2F_T1s(d, 0, c).ordered_value
        report.add("classical", f"cuspidal count @ d={d}", 12 * (d - 1) * (d - 2), got)
    binodal = multisingular.eval_A1LA1L(4, _mono(4, 2, 0, yd=12))
    report.add("classical", "binodal quartics (ordered/2)", 225, binodal // 2)
    report.add("classical", "N(4, 2, (), (4,))", 225,
               ch.ch_invariant(ch.CHKey(4, 2, (), (4,))))
    tacnodal = multisingular.eval_PA3(4, _mono(4, 1, 0, yd=11))
    report.add("classical", "tacnodal quartics", 200, tacnodal)


def _classes(report: VerifyReport):
    for d in range(4, 8):
        want = (3 * d * d - 6 * d + 3, 3 * d - 3, 1)
        got = nodal.derive_A1F_coeffs(d)
        report.add("classes", f"free-node coefficients @ d={d}", 1, int(got == want))
        table = multisingular.coeff_table_A1FA1F(d)  # raises on mismatch
        report.add("classes", f"binodal coefficient table @ d={d}", 1,
                   int(table == multisingular.closed_form_A1FA1F(d)))
        table = multisingular.coeff_table_A3F(d)
        report.add("classes", f"tacnode coefficient table @ d={d}", 1,
                   int(table == multisingular.closed_form_A3F(d)))


def _wdvv(report: VerifyReport):
    report.add("wdvv", "tangent rational conics", 2, wdvv.nd_T1(2))
    golden = (36, 2184, 335792, 106976160, 61739450304, 58749399019136)
    for d, want in zip(range(3, 9), golden):
        report.add("wdvv", f"tangent rational curves @ d={d}", want, wdvv.nd_T1(d))
    cross = nodal.eval_A1F_T(3, (1,), _mono(3, 1, 1, y1=2, yd=7)).ordered_value
    report.add("wdvv", "rational cubics: divisor route vs nodal route", wdvv.nd_T1(3), cross)


TABLES = {
    "smooth": _smooth,
    "nodal": _nodal,
    "cusp": _cusp,
    "ch": _ch_oracle,
    "classical": _classical,
    "classes": _classes,
    "wdvv": _wdvv,
}


def verify(tables=None) -> VerifyReport:
    """Recompute the selected golden tables (all by default)."""
    report = VerifyReport()
    for name in tables or TABLES:
        if name not in TABLES:
            raise ValueError(f"unknown table {name!r}; choose from {sorted(TABLES)}")
        TABLES[name](report)
    return report
