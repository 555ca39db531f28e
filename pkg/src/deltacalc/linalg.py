"""Dense Gaussian elimination over any exact field.

Entries only need ``+ - * /``, equality with 0 and ``is_zero`` semantics
through truthiness, so the same code serves ``Fraction``, ``QTRat`` and
prime-field integers wrapped in ``GF``.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .errors import SingularSystem


def rref(rows: List[list], ncols: int):
    """Reduced row echelon form in place; returns the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c] if not hasattr(rows[r][c], "inverse") else rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_unique(matrix: Sequence[Sequence], rhs: Sequence, zero) -> list:
    """Solve ``matrix @ x = rhs`` when the solution is unique.

    Raises ``SingularSystem`` if the system is inconsistent or has free
    variables.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise SingularSystem("inconsistent linear system")
    if len(pivots) != ncols:
        raise SingularSystem(f"rank {len(pivots)} < {ncols} unknowns")
    sol = [zero] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def inverse(matrix: Sequence[Sequence], zero, one) -> List[list]:
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise SingularSystem("matrix is not invertible")
    return [row[n:] for row in aug]


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    rows = [list(r) for r in matrix]
    return len(rref(rows, len(rows[0])))


def transpose(matrix: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*matrix)]


def vec_mat(v: Sequence, matrix: Sequence[Sequence], zero) -> list:
    """Row vector times matrix."""
    ncols = len(matrix[0]) if matrix else 0
    out = [zero] * ncols
    for a, row in zip(v, matrix):
        if not a:
            continue
        for j, b in enumerate(row):
            if b:
                out[j] = out[j] + a * b
    return out


def first_nonzero(row: Sequence) -> Optional[int]:
    return next((i for i, x in enumerate(row) if x), None)
