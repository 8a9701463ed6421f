"""Small dense linear algebra over GF(q) on integer encodings.

Everything here is deterministic plain Python on lists; matrices are lists
of equal-length rows of encodings.  Sizes are tiny (constant blocks of
generator matrices), so clarity wins over vectorization.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .field import FieldSpec


def rref(field: FieldSpec, mat: Sequence[Sequence[int]]):
    """Reduced row echelon form.

    Returns (rows, pivots): the nonzero rows of the RREF and their pivot
    columns, in ascending pivot order.
    """
    rows = [list(r) for r in mat]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(field: FieldSpec, mat: Sequence[Sequence[int]]) -> int:
    return len(rref(field, mat)[0])


def left_kernel_vector(field: FieldSpec, mat: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """A nonzero v with v*mat = 0, or None if the rows are independent.

    Deterministic: the returned vector is the canonical kernel-basis vector
    for the lowest non-pivot row of the transposed system.
    """
    k = len(mat)
    if k == 0:
        return None
    # Solve over the transpose: rows of mat^T are columns of mat.
    ncols = len(mat[0])
    tr = [[mat[i][c] for i in range(k)] for c in range(ncols)]
    rows, pivots = rref(field, tr)
    if len(pivots) == k:
        return None
    pivset = set(pivots)
    free = next(i for i in range(k) if i not in pivset)
    v = [0] * k
    v[free] = 1
    for rrow, p in zip(rows, pivots):
        v[p] = field.neg(rrow[free])
    return v


def solve_left(field: FieldSpec, mat: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[list[int]]:
    """A particular x with x*mat = target, or None if inconsistent.

    Free variables are set to zero, so the answer is canonical.
    """
    k = len(mat)
    if k == 0:
        return [] if not any(target) else None
    ncols = len(mat[0])
    # Transpose to the column system mat^T * x^T = target^T and eliminate
    # on the augmented matrix.
    aug = [[mat[i][c] for i in range(k)] + [target[c]] for c in range(ncols)]
    rows, pivots = rref(field, aug)
    x = [0] * k
    for rrow, p in zip(rows, pivots):
        if p == k:
            return None  # pivot in the augmented column
        x[p] = rrow[k]
    # Verify (guards against inconsistency hidden past the rank rows).
    for c in range(ncols):
        acc = 0
        for i in range(k):
            if x[i] and mat[i][c]:
                acc = field.add(acc, field.mul(x[i], mat[i][c]))
        if acc != (target[c] if isinstance(target[c], int) else int(target[c])):
            return None
    return x


def matmul(field: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    out = []
    for row in a:
        acc = [0] * len(b[0])
        for i, v in enumerate(row):
            if v:
                brow = b[i]
                for c, w in enumerate(brow):
                    if w:
                        acc[c] = field.add(acc[c], field.mul(v, w))
        out.append(acc)
    return out


def vecmat(field: FieldSpec, v: Sequence[int], mat: Sequence[Sequence[int]]) -> list[int]:
    return matmul(field, [list(v)], mat)[0]
