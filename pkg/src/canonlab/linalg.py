"""Sparse exact Gaussian elimination over a coefficient field.

Rows are dicts mapping column keys to nonzero field elements.  Good enough
for the rank and nullspace problems here (coefficient matrices of graded
pieces, tangent-space constraint systems), which are very sparse.
"""
from __future__ import annotations


def rank(rows, field) -> int:
    """Rank of the row span; consumes the given list of dict rows."""
    rows = [dict(r) for r in rows if r]
    r = 0
    while rows:
        # pick the sparsest row to pivot on, keeps fill-in low
        pi = min(range(len(rows)), key=lambda i: len(rows[i]))
        pivot_row = rows.pop(pi)
        r += 1
        col = min(pivot_row)  # deterministic pivot column
        pc = pivot_row[col]
        reduced = []
        for row in rows:
            if col in row:
                factor = field.div(row[col], pc)
                new = dict(row)
                for c, v in pivot_row.items():
                    acc = field.sub(new.get(c, field.zero), field.mul(factor, v))
                    if field.is_zero(acc):
                        new.pop(c, None)
                    else:
                        new[c] = acc
                if new:
                    reduced.append(new)
            else:
                reduced.append(row)
        rows = reduced
    return r


def nullspace(rows, columns, field):
    """Basis of the right kernel of the matrix with the given column keys.

    Returns a list of dicts mapping column key -> field element.
    """
    columns = list(columns)
    col_index = {c: i for i, c in enumerate(columns)}
    # dense echelon on a copy; these systems are small when we need vectors
    dense = []
    for row in rows:
        if not row:
            continue
        v = [field.zero] * len(columns)
        for c, val in row.items():
            v[col_index[c]] = val
        dense.append(v)
    pivots = []
    r = 0
    for j in range(len(columns)):
        pivot = None
        for i in range(r, len(dense)):
            if not field.is_zero(dense[i][j]):
                pivot = i
                break
        if pivot is None:
            continue
        dense[r], dense[pivot] = dense[pivot], dense[r]
        inv = field.inv(dense[r][j])
        dense[r] = [field.mul(inv, v) for v in dense[r]]
        for i in range(len(dense)):
            if i != r and not field.is_zero(dense[i][j]):
                f = dense[i][j]
                dense[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(dense[i], dense[r])]
        pivots.append(j)
        r += 1
    free = [j for j in range(len(columns)) if j not in pivots]
    basis = []
    for j in free:
        vec = {columns[j]: field.one}
        for ri, pj in enumerate(pivots):
            v = dense[ri][j]
            if not field.is_zero(v):
                vec[columns[pj]] = field.neg(v)
        basis.append(vec)
    return basis
