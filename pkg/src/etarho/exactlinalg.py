"""Exact rank computation over Q(zeta_n) by fraction-free-ish Gaussian elimination.

Rows may mix orders; everything is lifted to a common cyclotomic order first.
No pivoting heuristics are needed since the arithmetic is exact.
"""

from __future__ import annotations

from math import lcm

from .cyclotomic import CyclotomicValue


def _lift_matrix(rows):
    order = 1
    lifted = []
    for row in rows:
        conv = [v if isinstance(v, CyclotomicValue) else CyclotomicValue.from_rational(v)
                for v in row]
        lifted.append(conv)
        for v in conv:
            order = lcm(order, v.order)
    return [[v.lift(order) for v in row] for row in lifted]


def exact_rank(rows) -> int:
    """Rank of a matrix with CyclotomicValue (or rational) entries."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    mat = _lift_matrix(rows)
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, n_rows):
            if not mat[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = mat[pivot_row][col].inverse()
        mat[pivot_row] = [v * inv for v in mat[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and not mat[r][col].is_zero():
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot_row])]
        rank += 1
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return rank
