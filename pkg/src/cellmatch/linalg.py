"""Exact linear algebra over the rationals and the two-element field.

Matrices are plain lists of rows. Rational entries are ``Fraction``;
two-element-field entries are the ints 0 and 1. Everything is exact, and
pivoting is deterministic: columns are scanned left to right and, within a
column, rows top to bottom, so with bases listed in id order the pivot
choice is the leftmost-lowest one.
"""

from __future__ import annotations

from fractions import Fraction


class FieldSpec:
    """Operation bundle for a coefficient field."""

    def __init__(self, name, zero, one, add, neg, mul, inv):
        self.name = name
        self.zero = zero
        self.one = one
        self.add = add
        self.neg = neg
        self.mul = mul
        self.inv = inv

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def __repr__(self):
        return f"FieldSpec({self.name!r})"


RATIONALS = FieldSpec(
    "q",
    Fraction(0),
    Fraction(1),
    lambda a, b: a + b,
    lambda a: -a,
    lambda a, b: a * b,
    lambda a: Fraction(1) / a,
)

GF2 = FieldSpec(
    "f2",
    0,
    1,
    lambda a, b: (a + b) & 1,
    lambda a: a & 1,
    lambda a, b: a & b,
    lambda a: a,
)

FIELDS = {"q": RATIONALS, "f2": GF2}


def field_by_name(name: str) -> FieldSpec:
    try:
        return FIELDS[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; expected 'q' or 'f2'") from None


def zeros(n_rows: int, n_cols: int, field: FieldSpec) -> list[list]:
    return [[field.zero] * n_cols for _ in range(n_rows)]


def row_reduce(rows: list[list], field: FieldSpec) -> tuple[int, list[int]]:
    """Echelonize ``rows`` in place; return (rank, pivot column indices)."""
    if not rows or not rows[0]:
        return 0, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivot_cols: list[int] = []
    piv_r = 0
    for col in range(n_cols):
        hit = None
        for r in range(piv_r, n_rows):
            if rows[r][col] != field.zero:
                hit = r
                break
        if hit is None:
            continue
        if hit != piv_r:
            rows[piv_r], rows[hit] = rows[hit], rows[piv_r]
        inv_p = field.inv(rows[piv_r][col])
        for r in range(piv_r + 1, n_rows):
            entry = rows[r][col]
            if entry == field.zero:
                continue
            factor = field.mul(entry, inv_p)
            src = rows[piv_r]
            dst = rows[r]
            for c in range(col, n_cols):
                dst[c] = field.sub(dst[c], field.mul(factor, src[c]))
        pivot_cols.append(col)
        piv_r += 1
        if piv_r == n_rows:
            break
    return len(pivot_cols), pivot_cols


def matrix_rank(rows: list[list], field: FieldSpec) -> int:
    rank, _ = row_reduce([list(r) for r in rows], field)
    return rank


def mat_mul(a: list[list], b: list[list], field: FieldSpec) -> list[list]:
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m, field)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for j in range(k):
            entry = row[j]
            if entry == field.zero:
                continue
            src = b[j]
            for c in range(m):
                if src[c] != field.zero:
                    acc[c] = field.add(acc[c], field.mul(entry, src[c]))
    return out


def is_zero_matrix(rows: list[list], field: FieldSpec) -> bool:
    return all(entry == field.zero for row in rows for entry in row)


def solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve ``a x = b`` over the rationals.

    Returns the unique solution, or None when the system is inconsistent.
    Raises ValueError when the solution is not unique (rank-deficient
    columns), which callers rule out beforehand.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    aug = [list(a[r]) + [b[r]] for r in range(n_rows)]
    rank, pivots = row_reduce(aug, RATIONALS)
    if n_cols in pivots:
        return None  # pivot in the constant column: inconsistent
    if len(pivots) < n_cols:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * n_cols
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        acc = aug[r][n_cols]
        for c in range(col + 1, n_cols):
            acc -= aug[r][c] * x[c]
        x[col] = acc / aug[r][col]
    return x
