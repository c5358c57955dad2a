"""Catalog of closed-form determinant evaluations and their checkers.

Each formula id names a sequence spec, a Hankel offset, and a closed form
for the resulting determinant values.  `verify` recomputes the
determinants exactly and compares; `scan` does the same for the
parameterized residue patterns whose status is still conjectural.
Reports serialize to CSV or JSON with one row per compared value and a
final verdict; conjecture mismatches are additionally recorded as
counterexamples instead of being treated as fatal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Polynomial, PowerSeries, RationalFunction, binomial
from .hankel import csv_cell, det_sequence, value_text
from .lattice import dual_sum_closed
from .orthopoly import JacobiData
from .sequences import (
    catalan_convolution,
    catalan_series,
    f_number,
    fibonacci_number,
    fibonacci_poly,
    lucas_number,
    lucas_poly,
    q_integer,
)

__all__ = [
    "FormulaInfo",
    "ReportEntry",
    "Counterexample",
    "VerificationReport",
    "formula_ids",
    "formula_info",
    "closed_form",
    "verify",
    "scan",
    "binomial_sum_identity",
    "binomial_sum_series",
    "h_value",
    "aerated_u_p0",
    "u_family_recurrence",
    "shifted_catalan_recurrence",
    "shifted_narayana_recurrence",
    "type_b_recurrence",
    "double_signed_u_recurrence",
    "double_signed_u_aerated_t",
    "aerated_u_weights",
    "aerated_narayana_recurrence",
    "conv4_recurrence",
    "conv4_poly_recurrence",
]


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


_T2 = Polynomial.monomial("t", 2)


# -- closed forms, one function per formula id -----------------------


def _cf_thm21_d0(n, r):
    return _sign(binomial(n, 2)) * fibonacci_number(n + 1)


def _cf_thm21_d1(n, r):
    return _sign(binomial(n + 1, 2)) * fibonacci_number(2 * ((n + 2) // 2))


def _cf_thm22_d0(n, r):
    return _sign(binomial(n, 2)) * Fraction(2) ** (n - 1) * lucas_number(n)


def _cf_thm22_d1(n, r):
    return _sign(binomial(n + 1, 2)) * Fraction(2) ** n * lucas_number(2 * (n // 2) + 1)


def _cf_thm23_d0(n, r):
    m, j = divmod(n, 4)
    fib = fibonacci_number
    if j == 0:
        return fib(2 * m + 1) * fib(2 * m + 2)
    if j == 1:
        return fib(2 * m + 2) ** 2
    if j == 2:
        return -(fib(2 * m + 2) ** 2)
    return fib(2 * m + 2) * fib(2 * m + 3)


def _cf_thm23_d1(n, r):
    if n % 2:
        return Fraction(0)
    m, j = divmod(n, 4)
    value = fibonacci_number(2 * m + 2) ** 2
    return value if j == 0 else -value


def _cf_thm24_d0(n, r):
    m, j = divmod(n, 4)
    luc = lucas_number
    two = Fraction(2)
    if j == 0:
        return two ** (4 * m - 1) * luc(2 * m) * luc(2 * m + 1)
    if j == 1:
        return two ** (4 * m) * luc(2 * m + 1) ** 2
    if j == 2:
        return -(two ** (4 * m + 1)) * luc(2 * m + 1) ** 2
    return two ** (4 * m + 2) * luc(2 * m + 1) * luc(2 * m + 2)


def _cf_thm24_d1(n, r):
    if n % 2:
        return Fraction(0)
    m, j = divmod(n, 4)
    value = Fraction(2) ** (4 * m) * lucas_number(2 * m + 1) ** 2
    return value if j == 0 else -4 * value


def _cf_eq36(n, r):
    return _sign(binomial(n, 2)) * Fraction(r) ** (n - 1) * f_number(n, r)


def _cf_eq37(n, r):
    odd = 2 * (n // 2) + 1
    return _sign(binomial(n + 1, 2)) * Fraction(r) ** n * f_number(odd, r)


def _cf_eq310(n, r):
    m, j = divmod(n, 4)
    base = Fraction(r)
    if j == 0:
        return base ** (4 * m - 1) * f_number(2 * m, r) * f_number(2 * m + 1, r)
    if j == 1:
        return base ** (4 * m) * f_number(2 * m + 1, r) ** 2
    if j == 2:
        return -(base ** (4 * m + 1)) * f_number(2 * m + 1, r) ** 2
    return base ** (4 * m + 2) * f_number(2 * m + 1, r) * f_number(2 * m + 2, r)


def _cf_eq312(n, r):
    if n % 2:
        return Fraction(0)
    m, j = divmod(n, 4)
    value = Fraction(r) ** (4 * m) * f_number(2 * m + 1, r) ** 2
    return value if j == 0 else -(Fraction(r) ** 2) * value


def _cf_thm41(n, r):
    x = Polynomial((-2, -1), "t")
    s = Polynomial((0, -1), "t")
    lead = Polynomial.monomial("t", binomial(n, 2), _sign(n))
    return lead * fibonacci_poly(n + 1, x, s)


def _cf_cor43(n, r):
    return fibonacci_poly(n + 1, Fraction(1), Fraction(-1))


def _cf_eq410(n, r):
    return Fraction(2) ** (n - 1) * lucas_poly(n, Fraction(1), Fraction(-1))


def _cf_thm51(n, r):
    m, j = divmod(n, 3)
    return Fraction(0) if j == 2 else Fraction(_sign(m))


def _cf_thm52(n, r):
    return dual_sum_closed(n)


def _cf_eq122(n, r):
    return Fraction(1) if n == 0 else Fraction(r) ** (n - 1)


def _cf_eq123(n, r):
    if n % 2:
        return Fraction(0)
    return _sign(n // 2) * Fraction(r) ** n


def _cf_u_d1(n, r):
    return Fraction(r) ** n


def _cf_thm73(n, r):
    m, _ = divmod(n, 2)
    return Fraction(_sign(m) * (m + 1))


def _cf_thm74(n, r):
    m, j = divmod(n, 2)
    exponent = 2 * m * m - 2 * m if j == 0 else 2 * m * m
    lead = Polynomial.monomial("t", exponent, _sign(m))
    return lead * q_integer(m + 1, _T2)


def _cf_d5(n, r):
    m, j = divmod(n, 5)
    if j <= 1:
        return Fraction(1)
    if j == 2:
        return Fraction(-5 * (m + 1))
    if j == 3:
        return Fraction(0)
    return Fraction(5 * (m + 1))


def _cf_d6(n, r):
    m, j = divmod(n, 3)
    if j <= 1:
        return Fraction(_sign(m) * (m + 1) ** 2)
    squares = (m + 1) * (m + 2) * (2 * m + 3) // 6
    return Fraction(_sign(m + 1) * 9 * squares)


def _cf_d7(n, r):
    m, j = divmod(n, 7)
    sgn = _sign(m)
    if j <= 1:
        return Fraction(sgn)
    if j == 2:
        return sgn * (Fraction(343 * m * (m + 1) * (2 * m + 1), 6) - 14 * (m + 1))
    if j == 3:
        return Fraction(-sgn * 49 * (m + 1) ** 2)
    if j == 4:
        return Fraction(0)
    if j == 5:
        return Fraction(sgn * 49 * (m + 1) ** 2)
    return sgn * (Fraction(343 * (m + 1) * (m + 2) * (2 * m + 3), 6) - 14 * (m + 1))


def _cf_d8(n, r):
    m, j = divmod(n, 4)
    if j <= 1:
        return Fraction((m + 1) ** 3)
    if j == 2:
        tail = 64 * m * m + 32 * m - 75
        return Fraction(2, 45) * (m + 1) ** 2 * (m + 2) * (2 * m + 3) * tail
    tail = 64 * m * m + 352 * m + 405
    return Fraction(-2, 45) * (m + 1) * (m + 2) ** 2 * (2 * m + 3) * tail


# -- the id table -----------------------------------------------------


@dataclass(frozen=True)
class FormulaInfo:
    """What a formula id verifies: spec, offset, scale, and proof status."""

    id: str
    spec_template: str | None
    offset: int
    label: str
    r_domain: tuple | None
    default_n_max: int
    summary: str


@dataclass(frozen=True)
class _Record:
    info: FormulaInfo
    fn: object


def _rec(id, spec, offset, label, r_domain, n_max, summary, fn):
    info = FormulaInfo(id, spec, offset, label, r_domain, n_max, summary)
    return id, _Record(info, fn)


_RECORDS = dict(
    [
        _rec("thm2.1-d0", "catalan|double-signed", 0, "THEOREM", None, 7,
             "signed-Catalan determinants give signed Fibonacci numbers",
             _cf_thm21_d0),
        _rec("thm2.1-d1", "catalan|double-signed", 1, "THEOREM", None, 8,
             "shifted signed-Catalan determinants give even-index Fibonacci numbers",
             _cf_thm21_d1),
        _rec("thm2.2-D0", "central-binomial|double-signed", 0, "THEOREM", None, 5,
             "signed central-binomial determinants give scaled Lucas numbers",
             _cf_thm22_d0),
        _rec("thm2.2-D1", "central-binomial|double-signed", 1, "THEOREM", None, 6,
             "shifted signed central-binomial determinants give odd-index Lucas numbers",
             _cf_thm22_d1),
        _rec("thm2.3-d0", "catalan|double-signed|aerate", 0, "THEOREM", None, 10,
             "aerated signed-Catalan determinants give Fibonacci products",
             _cf_thm23_d0),
        _rec("thm2.3-d1", "catalan|double-signed|aerate", 1, "THEOREM", None, 8,
             "shifted aerated signed-Catalan determinants give Fibonacci squares",
             _cf_thm23_d1),
        _rec("thm2.4-D0", "central-binomial|double-signed|aerate", 0, "THEOREM", None, 5,
             "aerated signed central-binomial determinants give scaled Lucas products",
             _cf_thm24_d0),
        _rec("thm2.4-D1", "central-binomial|double-signed|aerate", 1, "THEOREM", None, 6,
             "shifted aerated signed central-binomial determinants give scaled Lucas squares",
             _cf_thm24_d1),
        _rec("eq3.6", "u:r={r}|double-signed", 0, "THEOREM", (1, 2, 3), 10,
             "signed-u determinants give scaled f-numbers",
             _cf_eq36),
        _rec("eq3.7", "u:r={r}|double-signed", 1, "THEOREM", (1, 2, 3), 10,
             "shifted signed-u determinants give odd-index f-numbers",
             _cf_eq37),
        _rec("eq3.10", "u:r={r}|double-signed|aerate", 0, "THEOREM", (1, 2), 9,
             "aerated signed-u determinants give f-number products",
             _cf_eq310),
        _rec("eq3.12", "u:r={r}|double-signed|aerate", 1, "THEOREM", (1, 2), 9,
             "shifted aerated signed-u determinants give f-number squares",
             _cf_eq312),
        _rec("thm4.1", "narayana|shift:1|consecutive-sum", 0, "THEOREM", None, 6,
             "Narayana-sum determinants give signed Fibonacci polynomials",
             _cf_thm41),
        _rec("cor4.3", "catalan|double-signed|abs", 0, "THEOREM", None, 11,
             "period-6 pattern from unsigned rows of the signed-Catalan scheme",
             _cf_cor43),
        _rec("eq4.10", "central-binomial|double-signed|abs", 0, "THEOREM", None, 7,
             "scaled Lucas-polynomial values from unsigned central-binomial rows",
             _cf_eq410),
        _rec("thm5.1", "catconv:r=3", 0, "THEOREM", None, 12,
             "threefold Catalan convolution determinants cycle with period 6",
             _cf_thm51),
        _rec("thm5.2", "convpoly:m=3", 0, "THEOREM", None, 8,
             "threefold convolution polynomial determinants, alternating closed form",
             _cf_thm52),
        _rec("eq1.22", "u:r={r}|aerate", 0, "THEOREM", (1, 2, 3), 8,
             "aerated u-sequence determinants give powers of r",
             _cf_eq122),
        _rec("eq1.23", "u:r={r}|aerate", 1, "THEOREM", (1, 2, 3), 8,
             "shifted aerated u-sequence determinants give signed even powers of r",
             _cf_eq123),
        _rec("u-d0", "u:r={r}", 0, "THEOREM", (1, 2, 3), 8,
             "u-sequence determinants give powers of r",
             _cf_eq122),
        _rec("u-d1", "u:r={r}", 1, "THEOREM", (1, 2, 3), 8,
             "shifted u-sequence determinants give powers of r",
             _cf_u_d1),
        _rec("thm7.3", "catconv:r=4", 0, "THEOREM", None, 8,
             "fourfold Catalan convolution determinants grow linearly with period 2",
             _cf_thm73),
        _rec("thm7.4", "convpoly:m=4", 0, "THEOREM", None, 9,
             "fourfold convolution polynomial determinants give q-integer multiples",
             _cf_thm74),
        _rec("d-n-5", "catconv:r=5", 0, "OBSERVED", None, 9,
             "fivefold Catalan convolution determinants, observed period-5 pattern",
             _cf_d5),
        _rec("d-n-6", "catconv:r=6", 0, "OBSERVED", None, 8,
             "sixfold Catalan convolution determinants, observed period-3 pattern",
             _cf_d6),
        _rec("d-n-7", "catconv:r=7", 0, "OBSERVED", None, 6,
             "sevenfold Catalan convolution determinants, observed period-7 pattern",
             _cf_d7),
        _rec("d-n-8", "catconv:r=8", 0, "OBSERVED", None, 10,
             "eightfold Catalan convolution determinants, observed period-4 pattern",
             _cf_d8),
        _rec("conj7.2", None, 0, "CONJECTURE", None, 0,
             "residue and sum patterns for odd-fold Catalan convolution determinants",
             None),
        _rec("conj7.5", None, 0, "CONJECTURE", None, 0,
             "residue and sum patterns for even-fold Catalan convolution determinants",
             None),
        _rec("conj7.6", None, 0, "CONJECTURE", None, 8,
             "sixfold convolution polynomial determinants, period-3 q-pattern",
             None),
        _rec("conj7.7", None, 0, "CONJECTURE", None, 2,
             "even-fold convolution polynomial determinants, leading q-pattern",
             None),
    ]
)

_CONJECTURES = ("conj7.2", "conj7.5", "conj7.6", "conj7.7")


def formula_ids() -> tuple:
    return tuple(_RECORDS)


def formula_info(id: str) -> FormulaInfo:
    record = _RECORDS.get(id)
    if record is None:
        raise ValueError(f"unknown formula id: {id}")
    return record.info


def closed_form(id: str, n: int, r: int | None = None):
    """Predicted determinant value for one index of a non-conjecture id."""
    record = _RECORDS.get(id)
    if record is None:
        raise ValueError(f"unknown formula id: {id}")
    if record.fn is None:
        raise ValueError(f"{id} is scanned as a pattern, not per index")
    if n < 0:
        raise ValueError("index must be >= 0")
    info = record.info
    if info.r_domain is None:
        if r is not None:
            raise ValueError(f"{id} takes no r parameter")
    elif r is None:
        raise ValueError(f"{id} needs an r parameter")
    elif r < 1:
        raise ValueError("r must be >= 1")
    return record.fn(n, r)


# -- reports -----------------------------------------------------------


@dataclass(frozen=True)
class ReportEntry:
    n: int
    expected: object
    got: object
    status: str
    k: int | None = None
    r: int | None = None
    note: str | None = None
    reason: str | None = None


@dataclass(frozen=True)
class Counterexample:
    id: str
    n: int
    k: int | None
    expected: object
    got: object


@dataclass(frozen=True)
class VerificationReport:
    id: str
    label: str
    params: dict
    entries: tuple
    counterexamples: tuple

    @property
    def verdict(self) -> str:
        bad = any(e.status == "mismatch" for e in self.entries)
        return "mismatch" if bad else "match"

    def json_text(self) -> str:
        def entry_dict(e: ReportEntry) -> dict:
            d = {}
            if e.k is not None:
                d["k"] = e.k
            if e.r is not None:
                d["r"] = e.r
            d["n"] = e.n
            d["expected"] = None if e.expected is None else value_text(e.expected)
            d["got"] = None if e.got is None else value_text(e.got)
            d["status"] = e.status
            if e.note is not None:
                d["note"] = e.note
            if e.reason is not None:
                d["reason"] = e.reason
            return d

        payload = {
            "id": self.id,
            "label": self.label,
            "params": {key: str(val) for key, val in self.params.items()},
            "entries": [entry_dict(e) for e in self.entries],
            "counterexamples": [
                {
                    "id": c.id,
                    "n": c.n,
                    "k": c.k,
                    "expected": value_text(c.expected),
                    "got": value_text(c.got),
                }
                for c in self.counterexamples
            ],
            "verdict": self.verdict,
        }
        return json.dumps(payload, indent=2) + "\n"

    def csv_text(self) -> str:
        use_k = any(e.k is not None for e in self.entries)
        use_r = any(e.r is not None for e in self.entries)
        use_note = any(e.note is not None for e in self.entries)
        use_reason = any(e.reason is not None for e in self.entries)
        header = []
        if use_k:
            header.append("k")
        if use_r:
            header.append("r")
        header += ["n", "expected", "got", "status"]
        if use_note:
            header.append("note")
        if use_reason:
            header.append("reason")
        lines = [",".join(header)]
        for e in self.entries:
            row = []
            if use_k:
                row.append("" if e.k is None else str(e.k))
            if use_r:
                row.append("" if e.r is None else str(e.r))
            row.append(str(e.n))
            row.append("" if e.expected is None else csv_cell(e.expected))
            row.append("" if e.got is None else csv_cell(e.got))
            row.append(e.status)
            if use_note:
                row.append(e.note or "")
            if use_reason:
                row.append(e.reason or "")
            lines.append(",".join(row))
        lines.append(f"verdict,{self.verdict}")
        return "\n".join(lines) + "\n"


def _compared(n, expected, got, k=None, r=None, note=None) -> ReportEntry:
    status = "match" if expected == got else "mismatch"
    return ReportEntry(n=n, expected=expected, got=got, status=status,
                       k=k, r=r, note=note)


def _gather_counterexamples(id: str, entries) -> tuple:
    return tuple(
        Counterexample(id=id, n=e.n, k=e.k, expected=e.expected, got=e.got)
        for e in entries
        if e.status == "mismatch"
    )


def verify(id: str, n_max: int | None = None, r: int | None = None) -> VerificationReport:
    """Compare computed determinants against the id's closed form.

    Covers every index 0..n_max (default from the table).  For ids with
    an r parameter, a given r is checked alone and r=None walks the
    documented domain.  Conjecture ids are forwarded to `scan`.
    """
    record = _RECORDS.get(id)
    if record is None:
        raise ValueError(f"unknown formula id: {id}")
    if id in _CONJECTURES:
        if r is not None:
            raise ValueError(f"{id} takes no r parameter")
        return scan(id, n_max=n_max)
    info = record.info
    top = info.default_n_max if n_max is None else n_max
    if top < 0:
        raise ValueError("n_max must be >= 0")
    if info.r_domain is None:
        if r is not None:
            raise ValueError(f"{id} takes no r parameter")
        r_values: tuple = (None,)
        params = {"n_max": top}
    else:
        if r is None:
            r_values = info.r_domain
        elif r < 1:
            raise ValueError("r must be >= 1")
        else:
            r_values = (r,)
        params = {"n_max": top, "r": ",".join(str(v) for v in r_values)}
    entries = []
    for rv in r_values:
        spec = info.spec_template if rv is None else info.spec_template.format(r=rv)
        dets = det_sequence(spec, top, info.offset)
        for n in range(top + 1):
            entries.append(_compared(n, record.fn(n, rv), dets[n], r=rv))
    counter = () if info.label == "THEOREM" else _gather_counterexamples(id, entries)
    return VerificationReport(id=id, label=info.label, params=params,
                              entries=tuple(entries), counterexamples=counter)


# -- conjecture scans --------------------------------------------------


def _scan_odd_residues(k_max: int) -> list:
    entries = []
    for k in range(1, k_max + 1):
        period = 2 * k + 1
        dets = det_sequence(f"catconv:r={period}", 4 * k + 4)
        for m in (0, 1):
            base = period * m
            grown = Fraction((period * (m + 1)) ** (k - 1))
            lines = [
                (base, Fraction(_sign(k * m))),
                (base + 1, Fraction(_sign(k * m))),
                (base + k, _sign(m * k + binomial(k, 2)) * grown),
                (base + k + 1, Fraction(0)),
                (base + k + 2, _sign(m * k + binomial(k, 2) + 1) * grown),
            ]
            for n, expected in lines:
                entries.append(_compared(n, expected, dets[n], k=k))
        for m in (1, 2):
            low = period * m - 1
            high = period * m + 2
            expected = Fraction(_sign(k * m + 1) * (k - 1) * period)
            entries.append(
                _compared(low, expected, dets[low] + dets[high], k=k,
                          note=f"sum of indices {low} and {high}")
            )
    return entries


def _scan_even_residues(k_max: int) -> list:
    entries = []
    for k in range(1, k_max + 1):
        top = 4 * k + 2 if k >= 2 else 2 * k + 1
        dets = det_sequence(f"catconv:r={2 * k}", top)
        for n in (0, 1, 2):
            expected = _sign(binomial(k, 2) * n) * Fraction((n + 1) ** (k - 1))
            entries.append(_compared(k * n, expected, dets[k * n], k=k))
            entries.append(_compared(k * n + 1, expected, dets[k * n + 1], k=k))
        if k == 1:
            entries.append(ReportEntry(n=1, expected=None, got=None,
                                       status="skipped", k=k,
                                       reason="sum pattern needs k >= 2"))
            continue
        for n in (1, 2):
            low = 2 * k * n - 1
            high = 2 * k * n + 2
            expected = Fraction(-k * (2 * k - 3) * (2 * n + 1) ** (k - 1))
            entries.append(
                _compared(low, expected, dets[low] + dets[high], k=k,
                          note=f"sum of indices {low} and {high}")
            )
    return entries


def _conj76_expected(n: int) -> Polynomial:
    m, j = divmod(n, 3)
    cube = Polynomial.monomial("t", 3)
    if j == 0:
        lead = Polynomial.monomial("t", 9 * binomial(m, 2), _sign(m))
        return lead * q_integer(m + 1, cube) ** 2
    if j == 1:
        lead = Polynomial.monomial("t", 3 * m * (3 * m - 1) // 2, _sign(m))
        return lead * q_integer(m + 1, cube) ** 2
    lead = Polynomial.monomial("t", 3 * m * (3 * m + 1) // 2, 3 * _sign(m + 1))
    ripple = Polynomial.zero()
    for i in range(2 * m + 1):
        coeff = binomial(min(i, 2 * m - i) + 2, 2)
        ripple = ripple + Polynomial.monomial("t", 3 * i, coeff)
    return lead * q_integer(3, Polynomial.variable_poly("t")) * ripple


def _scan_conv6(n_max: int) -> list:
    dets = det_sequence("convpoly:m=6", n_max)
    return [
        _compared(n, _conj76_expected(n), dets[n], k=3)
        for n in range(n_max + 1)
    ]


def _scan_conv_even(k_max: int, n_max: int) -> list:
    entries = []
    for k in range(1, k_max + 1):
        dets = det_sequence(f"convpoly:m={2 * k}", k * n_max + 1)
        qpow = Polynomial.monomial("t", k)
        for n in range(n_max + 1):
            body = q_integer(n + 1, qpow) ** (k - 1)
            lead = Polynomial.monomial(
                "t", k * k * binomial(n, 2), _sign(binomial(k, 2) * n)
            )
            expected = lead * body
            entries.append(_compared(k * n, expected, dets[k * n], k=k))
            shifted = expected * Polynomial.monomial("t", k * n)
            entries.append(_compared(k * n + 1, shifted, dets[k * n + 1], k=k))
    return entries


def scan(id: str, k_max: int | None = None, n_max: int | None = None) -> VerificationReport:
    """Walk a conjectured pattern over its parameter range.

    Mismatches become counterexample records and flip the verdict, but
    never raise.  Non-conjecture ids fall through to `verify` so the
    observed single-sequence patterns can be scanned the same way.
    """
    record = _RECORDS.get(id)
    if record is None:
        raise ValueError(f"unknown formula id: {id}")
    if id not in _CONJECTURES:
        return verify(id, n_max=n_max)
    if k_max is not None and k_max < 1:
        raise ValueError("k_max must be >= 1")
    if n_max is not None and n_max < 0:
        raise ValueError("n_max must be >= 0")
    if id == "conj7.2":
        kk = 3 if k_max is None else k_max
        entries = _scan_odd_residues(kk)
        params = {"k_max": kk, "periods": 2}
    elif id == "conj7.5":
        kk = 4 if k_max is None else k_max
        entries = _scan_even_residues(kk)
        params = {"k_max": kk, "periods": 3}
    elif id == "conj7.6":
        top = 8 if n_max is None else n_max
        entries = _scan_conv6(top)
        params = {"n_max": top}
    else:
        kk = 3 if k_max is None else k_max
        top = 2 if n_max is None else n_max
        entries = _scan_conv_even(kk, top)
        params = {"k_max": kk, "n_max": top}
    return VerificationReport(
        id=id,
        label="CONJECTURE",
        params=params,
        entries=tuple(entries),
        counterexamples=_gather_counterexamples(id, entries),
    )


# -- side identities used by the determinant proofs --------------------


def binomial_sum_identity(k: int, n: int) -> tuple:
    """Alternating binomial sum against convolution numbers, with its
    closed form; returns (lhs, rhs).  The right side is 0 for n <= k."""
    if k < 0 or n < 0:
        raise ValueError("indices must be >= 0")
    lhs = Fraction(0)
    for j in range(k + 1):
        weight = binomial(k + j, 2 * j + 1) + binomial(k + j + 1, 2 * j + 1)
        term = weight * catalan_convolution(n + j, 2 * k + 1)
        lhs += term if (k - j) % 2 == 0 else -term
    if n - k - 1 < 0:
        rhs = Fraction(0)
    else:
        rhs = Fraction(2 * k + 1, n + k) * binomial(2 * n + 2 * k, n - k - 1)
    return lhs, rhs


def binomial_sum_series(k: int, order: int) -> tuple:
    """Generating-series form of the same identity; returns both sides
    truncated at the given order."""
    if k < 0 or order < 0:
        raise ValueError("indices must be >= 0")
    lhs = PowerSeries([binomial_sum_identity(k, n)[0] for n in range(order + 1)])
    rhs = (catalan_series(order) ** (4 * k + 2)).shift_up(k + 1).truncate(order)
    return lhs, rhs


def h_value(n: int, r: int) -> Fraction:
    """Signed constant term of the signed-u orthogonal polynomials."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    if n % 2:
        return Fraction(-r)
    if n == 0:
        return Fraction(1)
    return r * f_number(n + 1, r) / f_number(n, r)


def aerated_u_p0(n: int, r: int) -> Fraction:
    """Value at 0 of the aerated signed-u orthogonal polynomials."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if r < 1:
        raise ValueError("r must be >= 1")
    if n % 2:
        return Fraction(0)
    if n % 4 == 2:
        return Fraction(r)
    half = n // 2
    return r * f_number(half + 1, r) / f_number(half, r)


# -- reference recurrence coefficients ---------------------------------


def u_family_recurrence(r: int, depth: int) -> JacobiData:
    """s = r, 2, 2, ...; t = r, 1, 1, ..."""
    s = (Fraction(r),) + (Fraction(2),) * (depth - 1)
    t = ((Fraction(r),) + (Fraction(1),) * (depth - 2)) if depth > 1 else ()
    return JacobiData(s, t)


def shifted_catalan_recurrence(depth: int) -> JacobiData:
    s = (Fraction(2),) * depth
    return JacobiData(s, (Fraction(1),) * (depth - 1))


def shifted_narayana_recurrence(depth: int) -> JacobiData:
    one_plus_t = Polynomial((1, 1), "t")
    t = Polynomial.variable_poly("t")
    return JacobiData((one_plus_t,) * depth, (t,) * (depth - 1))


def type_b_recurrence(depth: int) -> JacobiData:
    one_plus_t = Polynomial((1, 1), "t")
    t = Polynomial.variable_poly("t")
    two_t = Polynomial((0, 2), "t")
    tail = ((two_t,) + (t,) * (depth - 2)) if depth > 1 else ()
    return JacobiData((one_plus_t,) * depth, tail)


def double_signed_u_recurrence(r: int, depth: int) -> JacobiData:
    """Recurrence data of the double-signed u-sequence moments."""
    s = [Fraction(-r)]
    for k in range(1, depth):
        num = Fraction(r * r + r - 1, 1)
        val = num / (f_number(k, r) * f_number(k + 1, r))
        s.append(val if (k - 1) % 2 == 0 else -val)
    t = [
        -f_number(k, r) * f_number(k + 2, r) / f_number(k + 1, r) ** 2
        for k in range(depth - 1)
    ]
    return JacobiData(tuple(s), tuple(t))


def double_signed_u_aerated_t(r: int, count: int) -> list:
    """Period-4 weight pattern of the aerated double-signed u-moments."""
    out = []
    for i in range(count):
        k, j = divmod(i, 4)
        if j == 0:
            out.append(-f_number(2 * k, r) / f_number(2 * k + 1, r))
        elif j == 1:
            out.append(f_number(2 * k + 2, r) / f_number(2 * k + 1, r))
        elif j == 2:
            out.append(-f_number(2 * k + 3, r) / f_number(2 * k + 2, r))
        else:
            out.append(f_number(2 * k + 1, r) / f_number(2 * k + 2, r))
    return out


def aerated_u_weights(r: int, count: int) -> list:
    return [Fraction(r)] + [Fraction(1)] * (count - 1) if count else []


def aerated_narayana_recurrence(depth: int) -> JacobiData:
    t = Polynomial.variable_poly("t")
    weights = [Fraction(1) if k % 2 == 0 else t for k in range(depth - 1)]
    return JacobiData((Fraction(0),) * depth, tuple(weights))


def conv4_recurrence(depth: int) -> JacobiData:
    """Recurrence data behind the fourfold convolution determinants."""
    s = tuple(Fraction(4) if k % 2 == 0 else Fraction(0) for k in range(depth))
    t = []
    for i in range(depth - 1):
        k, j = divmod(i, 2)
        if j == 0:
            t.append(Fraction(-(k + 2), k + 1))
        else:
            t.append(Fraction(-(k + 1), k + 2))
    return JacobiData(s, tuple(t))


def conv4_poly_recurrence(depth: int) -> JacobiData:
    """Recurrence data behind the fourfold convolution polynomial
    determinants; entries are rational functions in t."""
    two_two = Polynomial((2, 2), "t")
    s = tuple(two_two if k % 2 == 0 else Polynomial.zero() for k in range(depth))
    t = []
    for i in range(depth - 1):
        k, j = divmod(i, 2)
        lower = q_integer(k + 1, _T2)
        upper = q_integer(k + 2, _T2)
        if j == 0:
            t.append(RationalFunction(-upper, lower))
        else:
            t.append(RationalFunction(-(_T2 * lower), upper))
    return JacobiData(s, tuple(t))
