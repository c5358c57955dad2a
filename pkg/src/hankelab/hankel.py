"""Hankel matrices and exact determinants.

The matrix for a sequence a and offset m has entry(i, j) = a(i + j + m).
Determinants are computed fraction-free so every intermediate stays in the
ring the entries come from (integers as `Fraction`, or `Polynomial`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Polynomial, RationalFunction, exact_divide
from .sequences import POLYNOMIAL, SequenceSpec, parse_spec, terms

__all__ = [
    "HankelMatrix",
    "DetSequence",
    "hankel_matrix",
    "det_exact",
    "det_cofactor",
    "det_sequence",
    "value_text",
    "csv_cell",
]


def _as_spec(spec) -> SequenceSpec:
    return parse_spec(spec) if isinstance(spec, str) else spec


def _ring_one(spec: SequenceSpec):
    return Polynomial.one() if spec.kind == POLYNOMIAL else Fraction(1)


def value_text(value) -> str:
    """Canonical text for a determinant or sequence value."""
    return str(value)


def csv_cell(value) -> str:
    """CSV cell for a value; symbolic values are quoted."""
    if isinstance(value, (Polynomial, RationalFunction)):
        return f'"{value}"'
    return str(value)


@dataclass(frozen=True)
class HankelMatrix:
    spec: SequenceSpec
    offset: int
    order: int
    rows: tuple

    def entry(self, i: int, j: int):
        return self.rows[i][j]


@dataclass(frozen=True)
class DetSequence:
    spec: SequenceSpec
    offset: int
    values: tuple

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def csv_text(self) -> str:
        lines = ["n,value"]
        for n, value in enumerate(self.values):
            lines.append(f"{n},{csv_cell(value)}")
        return "\n".join(lines) + "\n"

    def json_text(self) -> str:
        return json.dumps([value_text(v) for v in self.values], indent=2) + "\n"


def hankel_matrix(spec, n: int, offset: int = 0) -> HankelMatrix:
    """n-by-n matrix with entry(i, j) the (i+j+offset)-th sequence term."""
    spec = _as_spec(spec)
    if n < 0:
        raise ValueError("order must be >= 0")
    if offset < 0:
        raise ValueError("offset must be >= 0")
    values = terms(spec, 2 * n - 1 + offset if n else 0)
    rows = tuple(
        tuple(values[i + j + offset] for j in range(n)) for i in range(n)
    )
    return HankelMatrix(spec, offset, n, rows)


def det_exact(matrix, one=None):
    """Exact determinant by fraction-free elimination; empty matrix gives 1.

    Accepts a HankelMatrix or a plain list of rows.  `one` names the ring
    unit used for the empty case; it is inferred from a HankelMatrix.
    """
    if isinstance(matrix, HankelMatrix):
        rows = matrix.rows
        one = _ring_one(matrix.spec)
    else:
        rows = matrix
        if one is None:
            one = Fraction(1)
    n = len(rows)
    if n == 0:
        return one
    work = [list(row) for row in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not work[k][k]:
            for i in range(k + 1, n):
                if work[i][k]:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = work[k][k]
        for i in range(k + 1, n):
            left = work[i][k]
            for j in range(k + 1, n):
                # Divisibility by the previous pivot is a theorem of the
                # elimination scheme; a remainder means a bug, not bad input.
                work[i][j] = exact_divide(
                    pivot * work[i][j] - left * work[k][j], prev
                )
        prev = pivot
    result = work[n - 1][n - 1]
    return result if sign > 0 else -result


def det_cofactor(rows, one=None):
    """Determinant by first-row cofactor expansion; test oracle only."""
    if isinstance(rows, HankelMatrix):
        one = _ring_one(rows.spec)
        rows = rows.rows
    if one is None:
        one = Fraction(1)
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = one * 0
    for j in range(n):
        minor = [
            [rows[i][c] for c in range(n) if c != j] for i in range(1, n)
        ]
        term = rows[0][j] * det_cofactor(minor, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_sequence(spec, n_max: int, offset: int = 0) -> DetSequence:
    """Determinants of all leading orders 0..n_max at one offset."""
    spec = _as_spec(spec)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = terms(spec, 2 * n_max - 1 + offset if n_max else 0)
    one = _ring_one(spec)
    out = [one]
    for n in range(1, n_max + 1):
        rows = [
            [values[i + j + offset] for j in range(n)] for i in range(n)
        ]
        out.append(det_exact(rows, one))
    return DetSequence(spec, offset, tuple(out))
