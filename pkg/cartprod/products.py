"""Matrix constructions and the Kronecker, Hadamard and Cartesian products.

Every function is pure: inputs are never modified and results are new
``Matrix`` values. Results that would exceed the configured capacity raise
``CapacityError`` before any entry is computed.
"""
from functools import reduce
from typing import List, Optional, Sequence

from .errors import DimensionError
from .matrix import Dims, Matrix, ensure_capacity
from .scalar import ONE, ZERO, Mode, Scalar


def _join(A: Matrix, B: Matrix) -> Mode:
    return Mode.join(A.mode, B.mode)


def _build(rows: int, cols: int, entries: List[Scalar], mode: Mode) -> Matrix:
    if mode is Mode.APPROX:
        entries = [e.to_approx() for e in entries]
    return Matrix(rows, cols, tuple(entries), mode)


def _zero(mode: Mode) -> Scalar:
    return ZERO if mode is Mode.EXACT else ZERO.to_approx()


def _same_shape(A: Matrix, B: Matrix, what: str) -> None:
    if A.shape != B.shape:
        raise DimensionError(f"{what} needs equal shapes, got {A.rows}x{A.cols} and {B.rows}x{B.cols}")


# Constructors

def ones(rows: int, cols: Optional[int] = None) -> Matrix:
    """All-ones matrix; square of order ``rows`` when cols is omitted."""
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
    ensure_capacity(rows, cols)
    return Matrix(rows, cols, (ONE,) * (rows * cols))


def zeros(rows: int, cols: Optional[int] = None) -> Matrix:
    cols = rows if cols is None else cols
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
    ensure_capacity(rows, cols)
    return Matrix(rows, cols, (ZERO,) * (rows * cols))


def identity(n: int) -> Matrix:
    if n < 1:
        raise DimensionError(f"identity order must be positive, got {n}")
    ensure_capacity(n, n)
    return Matrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def commutation_matrix(d: Dims) -> Matrix:
    """
    The mn x mn permutation P with P^T (A kron B) P = B kron A for A of order m, B of order n.

    Column p*m + i holds its single 1 in row i*n + p (0-based i < m, p < n).
    """
    m, n = d.m, d.n
    ensure_capacity(m * n, m * n)
    size = m * n
    entries = [ZERO] * (size * size)
    for i in range(m):
        for p in range(n):
            entries[(i * n + p) * size + p * m + i] = ONE
    return Matrix(size, size, tuple(entries))


# Entrywise arithmetic

def add(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B, "add")
    return _build(A.rows, A.cols, [a + b for a, b in zip(A.entries, B.entries)], _join(A, B))


def sub(A: Matrix, B: Matrix) -> Matrix:
    _same_shape(A, B, "sub")
    return _build(A.rows, A.cols, [a - b for a, b in zip(A.entries, B.entries)], _join(A, B))


def neg(A: Matrix) -> Matrix:
    return Matrix(A.rows, A.cols, tuple(-a for a in A.entries), A.mode)


def scale(c, A: Matrix) -> Matrix:
    """Multiply every entry by the scalar c (Scalar, int, float or complex)."""
    c = Scalar.of(c)
    mode = Mode.join(c.mode, A.mode)
    return _build(A.rows, A.cols, [c * a for a in A.entries], mode)


def hadamard(A: Matrix, B: Matrix) -> Matrix:
    """Entrywise product A o B."""
    _same_shape(A, B, "hadamard")
    return _build(A.rows, A.cols, [a * b for a, b in zip(A.entries, B.entries)], _join(A, B))


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.cols, A.rows, tuple(A[i, j] for j in range(A.cols) for i in range(A.rows)), A.mode)


def conj_transpose(A: Matrix) -> Matrix:
    return Matrix(A.cols, A.rows, tuple(A[i, j].conj() for j in range(A.cols) for i in range(A.rows)), A.mode)


# Products

def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A.cols != B.rows:
        raise DimensionError(f"matmul needs cols(A) == rows(B), got {A.rows}x{A.cols} and {B.rows}x{B.cols}")
    ensure_capacity(A.rows, B.cols)
    mode = _join(A, B)
    zero = _zero(mode)
    b_cols = [[B[k, j] for k in range(B.rows)] for j in range(B.cols)]
    entries = []
    for i in range(A.rows):
        a_row = A.row(i)
        for col in b_cols:
            entries.append(sum((a * b for a, b in zip(a_row, col)), zero))
    return _build(A.rows, B.cols, entries, mode)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product: block (i, j) of the result is a_ij * B."""
    rows, cols = A.rows * B.rows, A.cols * B.cols
    ensure_capacity(rows, cols)
    entries = [
        A[i1, j1] * B[i2, j2]
        for i1 in range(A.rows)
        for i2 in range(B.rows)
        for j1 in range(A.cols)
        for j2 in range(B.cols)
    ]
    return _build(rows, cols, entries, _join(A, B))


def cartesian(A: Matrix, B: Matrix) -> Matrix:
    """
    Cartesian product A (/) B = A kron J_n + J_m kron B of square matrices.

    Entry (p, q) of block (i, j) is a_ij + b_pq.
    """
    m, n = A.order(), B.order()
    size = m * n
    ensure_capacity(size, size)
    entries = [
        A[i, j] + B[p, q]
        for i in range(m)
        for p in range(n)
        for j in range(m)
        for q in range(n)
    ]
    return _build(size, size, entries, _join(A, B))


def kron_chain(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise DimensionError("kron_chain needs at least one matrix")
    return reduce(kron, mats)


def cartesian_chain(mats: Sequence[Matrix]) -> Matrix:
    """Left fold of cartesian over one or more square matrices."""
    if not mats:
        raise DimensionError("cartesian_chain needs at least one matrix")
    for M in mats:
        M.order()
    total = 1
    for M in mats:
        total *= M.rows
    ensure_capacity(total, total)
    return reduce(cartesian, mats)


def cartesian_power(A: Matrix, k: int) -> Matrix:
    """A^[k] = A (/) A (/) ... (/) A with k factors."""
    if k < 1:
        raise DimensionError(f"cartesian power needs k >= 1, got {k}")
    return cartesian_chain([A] * k)


# Reductions

def trace(A: Matrix) -> Scalar:
    n = A.order()
    return sum((A[i, i] for i in range(n)), _zero(A.mode))


def entry_sum(A: Matrix) -> Scalar:
    """S_A, the sum of all entries."""
    return sum(A.entries, _zero(A.mode))


def row_sums(A: Matrix) -> List[Scalar]:
    """A_i for every row i."""
    zero = _zero(A.mode)
    return [sum(A.row(i), zero) for i in range(A.rows)]
