"""Stacked matrix products, canonical keys and exact row reduction.

A stack is an (N, n, m) field array. Products against a single matrix are
flattened into one 2-D galois matmul; stack-by-stack products loop over the
inner index in chunks.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from chevcheck.algebra.field import Field, FiniteField
from chevcheck.utils.constants import MATMUL_CHUNK


def right_mul(stack: Any, mat: Any) -> Any:
    """stack[i] @ mat for every i."""
    count, rows, inner = stack.shape
    return (stack.reshape(count * rows, inner) @ mat).reshape(count, rows, mat.shape[1])


def left_mul(mat: Any, stack: Any) -> Any:
    """mat @ stack[i] for every i."""
    count, inner, cols = stack.shape
    flat = stack.transpose(0, 2, 1).reshape(count * cols, inner) @ mat.T
    return flat.reshape(count, cols, mat.shape[0]).transpose(0, 2, 1)


def batched_matmul(field: FiniteField, a: Any, b: Any, chunk: int = MATMUL_CHUNK) -> Any:
    """a[i] @ b[i] for every i."""
    count, rows, inner = a.shape
    cols = b.shape[2]
    out = field.zeros((count, rows, cols))
    for start in range(0, count, chunk):
        stop = min(start + chunk, count)
        left, right = a[start:stop], b[start:stop]
        acc = field.zeros((stop - start, rows, cols))
        for k in range(inner):
            acc = acc + left[:, :, k, None] * right[:, None, k, :]
        out[start:stop] = acc
    return out


def batched_matvec(stack: Any, vec: Any) -> Any:
    """stack[i] @ vec, shape (N, n)."""
    count, rows, inner = stack.shape
    return (stack.reshape(count * rows, inner) @ vec).reshape(count, rows)


def batched_left_matvec(mat: Any, vecs: Any) -> Any:
    """mat @ vecs[i], shape (N, n)."""
    return vecs @ mat.T


def stack_keys(stack: Any) -> list[bytes]:
    raw = np.ascontiguousarray(stack.view(np.ndarray)).reshape(stack.shape[0], -1)
    return [row.tobytes() for row in raw]


def rows_equal(a: Any, b: Any) -> np.ndarray:
    """Per-item equality of two stacks along every axis but the first."""
    diff = a.view(np.ndarray) != b.view(np.ndarray)
    return ~diff.reshape(diff.shape[0], -1).any(axis=1)


def _rref_generic(field: Field, rows: Any) -> Any:
    work = rows.copy()
    count, width = work.shape
    lead = 0
    for col in range(width):
        pivot = next((r for r in range(lead, count) if not field.is_zero(work[r, col])), None)
        if pivot is None:
            continue
        if pivot != lead:
            work[[lead, pivot]] = work[[pivot, lead]]
        inv = field.div(field.one().value, work[lead, col])
        work[lead] = [field.mul(inv, v) for v in work[lead]]
        for r in range(count):
            if r != lead and not field.is_zero(work[r, col]):
                factor = work[r, col]
                work[r] = [field.sub(v, field.mul(factor, w)) for v, w in zip(work[r], work[lead])]
        lead += 1
        if lead == count:
            break
    return work[:lead]


def row_reduce(field: Field, rows: Any) -> Any:
    """Reduced echelon form with zero rows dropped; shape (rank, n)."""
    if rows.shape[0] == 0:
        return rows
    if isinstance(field, FiniteField):
        reduced = rows.row_reduce()
        nonzero = reduced.view(np.ndarray).any(axis=1)
        return reduced[nonzero]
    return _rref_generic(field, rows)


def pivot_columns(field: Field, reduced: Any) -> list[int]:
    pivots = []
    for row in reduced:
        pivots.append(next(j for j, v in enumerate(row) if not field.is_zero(v)))
    return pivots


def null_space(field: Field, mat: Any, width: int) -> Any:
    """Row basis of {x : mat @ x = 0} in reduced echelon form."""
    if mat.shape[0] == 0:
        return field.identity(width)
    if isinstance(field, FiniteField):
        if not mat.view(np.ndarray).any():
            return field.identity(width)
        basis = mat.null_space()
        if basis.shape[0] == 0:
            return field.zeros((0, width))
        return row_reduce(field, basis)
    reduced = _rref_generic(field, mat)
    pivots = pivot_columns(field, reduced)
    free = [j for j in range(width) if j not in pivots]
    out = field.zeros((len(free), width))
    minus_one = field.from_int(-1).value
    for r, f in enumerate(free):
        out[r, f] = field.one().value
        for row, p in zip(reduced, pivots):
            out[r, p] = field.mul(minus_one, row[f])
    return row_reduce(field, out) if len(free) else out


def vstack(field: Field, blocks: list[Any], width: int) -> Any:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return field.zeros((0, width))
    if isinstance(field, FiniteField):
        return np.concatenate(blocks, axis=0)
    return np.concatenate(blocks, axis=0).astype(object)
