"""Closed forms, residual checkers and constructive inverses for the Cartesian product.

Closed forms with 1/n_i factors are evaluated by clearing denominators, so
exact inputs give exact (Gaussian integer) answers. Residual checkers return
``LHS - RHS`` and are expected to be the zero matrix; witness functions
return ``None`` when no witness exists.
"""
from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import List, Optional, Sequence, Tuple

from .errors import DimensionError
from .matrix import Dims, Matrix
from .products import (
    add,
    cartesian,
    cartesian_chain,
    entry_sum,
    hadamard,
    kron,
    kron_chain,
    matmul,
    ones,
    row_sums,
    scale,
    sub,
    trace,
    transpose,
)
from .scalar import ZERO, Mode, Scalar


@dataclass(frozen=True)
class WeightedFactor:
    """One factor k * A of a weighted Cartesian chain."""
    k: Scalar
    A: Matrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", Scalar.of(self.k))
        self.A.order()

    @property
    def order(self) -> int:
        return self.A.rows


@dataclass(frozen=True)
class FactorGrouping:
    """Square matrices partitioned into consecutive non-empty groups."""
    groups: Tuple[Tuple[Matrix, ...], ...]

    def __post_init__(self) -> None:
        groups = tuple(tuple(g) for g in self.groups)
        if not groups:
            raise DimensionError("a grouping needs at least one group")
        for g in groups:
            if not g:
                raise DimensionError("every group must be non-empty")
            for M in g:
                M.order()
        object.__setattr__(self, "groups", groups)

    @property
    def factors(self) -> List[Matrix]:
        return [M for g in self.groups for M in g]


@dataclass(frozen=True)
class ShiftWitness:
    """The constant k relating two equal Cartesian products."""
    k: Scalar


class StructureKind(Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"


def _tol_for(*mats: Matrix) -> float:
    """Zero for exact inputs, 1e-12 * max|entry| once any input is approximate."""
    if all(M.mode is Mode.EXACT for M in mats):
        return 0.0
    return 1e-12 * max(1.0, max(M.max_abs() for M in mats))


def _shift(A: Matrix, k: Scalar) -> Matrix:
    """A + k J."""
    return add(A, scale(k, ones(A.rows)))


# Trace closed forms

def trace_pair_closed_form(A: Matrix, B: Matrix) -> Scalar:
    """tr(A (/) B) = n tr(A) + m tr(B)."""
    m, n = A.order(), B.order()
    return n * trace(A) + m * trace(B)


def trace_cartesian_closed_form(factors: Sequence[WeightedFactor]) -> Scalar:
    """tr(k_1 A_1 (/) ... (/) k_t A_t) = (prod n_i) * sum k_i tr(A_i) / n_i."""
    if not factors:
        raise DimensionError("at least one factor is required")
    total = prod(f.order for f in factors)
    return sum((f.k * trace(f.A) * (total // f.order) for f in factors), ZERO)


def trace_cartesian_power_closed_form(A: Matrix, k: int) -> Scalar:
    """tr(A^[k]) = k n^(k-1) tr(A)."""
    if k < 1:
        raise DimensionError(f"cartesian power needs k >= 1, got {k}")
    n = A.order()
    return (k * n ** (k - 1)) * trace(A)


def trace_plus_minus_closed_form(A: Matrix, B: Matrix) -> Scalar:
    """tr((A + B) (/) (A - B)) = 2n tr(A) for A, B of the same order n."""
    n = A.order()
    if B.order() != n:
        raise DimensionError(f"A and B must share an order, got {n} and {B.rows}")
    return (2 * n) * trace(A)


def trace_kron_closed_form(A: Matrix, B: Matrix) -> Scalar:
    """tr(A kron B) = tr(A) tr(B)."""
    return trace(A) * trace(B)


def trace_kron_with_cartesian_closed_form(A: Matrix, Bs: Sequence[Matrix]) -> Scalar:
    """tr(A kron (B_1 (/) ... (/) B_k)) = n^(k-1) tr(A) sum tr(B_i), all B_i of order n."""
    if not Bs:
        raise DimensionError("at least one B_i is required")
    n = Bs[0].order()
    for B in Bs:
        if B.order() != n:
            raise DimensionError(f"every B_i must have order {n}, got {B.rows}")
    return (n ** (len(Bs) - 1)) * trace(A) * sum((trace(B) for B in Bs), ZERO)


def trace_kron_of_cartesian_groups(g: FactorGrouping) -> Scalar:
    """
    Trace of (A_1 (/) ... (/) A_l) kron (A_l+1 (/) ...) kron ... .

    Equals (prod n_p) * prod over groups of (sum tr(A_i)/n_i). With N_G the
    product of the orders in group G, each group contributes
    sum_i tr(A_i) * (N_G / n_i), and the product of those is the answer.
    """
    result = Scalar.exact(1)
    for group in g.groups:
        group_total = prod(M.rows for M in group)
        result = result * sum((trace(M) * (group_total // M.rows) for M in group), ZERO)
    return result


def trace_cartesian_of_kron_groups(g: FactorGrouping) -> Scalar:
    """
    Trace of (A_1 kron ... kron A_l) (/) (A_l+1 kron ...) (/) ... .

    Equals (prod n_p) * sum over groups of prod tr(A_i)/n_i; each group
    contributes prod tr(A_i) * (N / N_G).
    """
    total = prod(M.rows for M in g.factors)
    result = ZERO
    for group in g.groups:
        group_total = prod(M.rows for M in group)
        group_trace = Scalar.exact(1)
        for M in group:
            group_trace = group_trace * trace(M)
        result = result + group_trace * (total // group_total)
    return result


# Explicit constructions used as oracles for the closed forms

def build_weighted_cartesian(factors: Sequence[WeightedFactor]) -> Matrix:
    return cartesian_chain([scale(f.k, f.A) for f in factors])


def build_kron_of_cartesian_groups(g: FactorGrouping) -> Matrix:
    return kron_chain([cartesian_chain(group) for group in g.groups])


def build_cartesian_of_kron_groups(g: FactorGrouping) -> Matrix:
    return cartesian_chain([kron_chain(group) for group in g.groups])


# Entry sums and row sums

def entry_sum_kron_closed_form(A: Matrix, B: Matrix) -> Scalar:
    """S_(A kron B) = S_A S_B."""
    return entry_sum(A) * entry_sum(B)


def entry_sum_cartesian_closed_form(A: Matrix, B: Matrix) -> Scalar:
    """S_(A (/) B) = n^2 S_A + m^2 S_B."""
    m, n = A.order(), B.order()
    return (n * n) * entry_sum(A) + (m * m) * entry_sum(B)


def cartesian_row_sums_closed_form(A: Matrix, B: Matrix) -> List[Scalar]:
    """Row sums of A (/) B: the row in block-row i, sub-row j sums to n A_i + m B_j."""
    m, n = A.order(), B.order()
    a_sums, b_sums = row_sums(A), row_sums(B)
    return [n * a_i + m * b_j for a_i in a_sums for b_j in b_sums]


# Product identities

def product_identity_residual(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    """
    (A (/) B)(C (/) D) - [n (AC kron J_n) + m (J_m kron BD) + AJ_m kron J_nD + J_mC kron BJ_n].

    A, C have order m and B, D order n. For m = n the bracket is
    n (AC (/) BD) + AJ kron JD + JC kron BJ.
    """
    m, n = _paired_orders(A, B, C, D)
    Jm, Jn = ones(m), ones(n)
    lhs = matmul(cartesian(A, B), cartesian(C, D))
    rhs = add(scale(n, kron(matmul(A, C), Jn)), scale(m, kron(Jm, matmul(B, D))))
    rhs = add(rhs, kron(matmul(A, Jm), matmul(Jn, D)))
    rhs = add(rhs, kron(matmul(Jm, C), matmul(B, Jn)))
    return sub(lhs, rhs)


def product_identity_stated_residual(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    """(A (/) B)(C (/) D) - [AC (/) BD + AJ kron JB + JC kron DJ], all of order n.

    The commonly quoted form of the identity. It is generally non-zero and
    is kept for comparison with product_identity_residual.
    """
    n = A.order()
    for M in (B, C, D):
        if M.order() != n:
            raise DimensionError(f"all four matrices must have order {n}, got {M.rows}")
    J = ones(n)
    lhs = matmul(cartesian(A, B), cartesian(C, D))
    rhs = add(cartesian(matmul(A, C), matmul(B, D)), kron(matmul(A, J), matmul(J, B)))
    rhs = add(rhs, kron(matmul(J, C), matmul(D, J)))
    return sub(lhs, rhs)


def hadamard_identity_residual(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Matrix:
    """(A (/) B) o (C (/) D) - [(A o C) (/) (B o D) + A kron D + C kron B]."""
    _paired_orders(A, B, C, D)
    lhs = hadamard(cartesian(A, B), cartesian(C, D))
    rhs = add(add(cartesian(hadamard(A, C), hadamard(B, D)), kron(A, D)), kron(C, B))
    return sub(lhs, rhs)


def _paired_orders(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Tuple[int, int]:
    m, n = A.order(), B.order()
    if C.order() != m or D.order() != n:
        raise DimensionError(
            f"need A, C of one order and B, D of another, got {A.rows}, {B.rows}, {C.rows}, {D.rows}"
        )
    return m, n


def distributivity_residuals(A: Matrix, B: Matrix, C: Matrix) -> Tuple[Matrix, Matrix]:
    """
    Doubled residuals of the two distributive laws, for A, B of order m and C of order n:

      2 (A + B) (/) C - [A (/) C + B (/) C + (A + B) kron J_n]
      2 C (/) (A + B) - [C (/) A + C (/) B + J_n kron (A + B)]
    """
    m, n = A.order(), C.order()
    if B.order() != m:
        raise DimensionError(f"A and B must share an order, got {m} and {B.rows}")
    total = add(A, B)
    left = sub(
        scale(2, cartesian(total, C)),
        add(add(cartesian(A, C), cartesian(B, C)), kron(total, ones(n))),
    )
    right = sub(
        scale(2, cartesian(C, total)),
        add(add(cartesian(C, A), cartesian(C, B)), kron(ones(n), total)),
    )
    return left, right


def sum_cartesian_residual(terms: Sequence[Sequence[Matrix]]) -> Matrix:
    """
    (sum_i A_i) (/) (sum_i B_i) (/) ... - sum_i (A_i (/) B_i (/) ...).

    Each term is a tuple with one matrix per slot; a pair per term gives the
    two-slot identity.
    """
    if not terms:
        raise DimensionError("at least one term is required")
    width = len(terms[0])
    if width < 1 or any(len(t) != width for t in terms):
        raise DimensionError("every term must have the same positive number of slots")
    slot_orders = [M.order() for M in terms[0]]
    for t in terms:
        if [M.order() for M in t] != slot_orders:
            raise DimensionError(f"slot orders must agree across terms, expected {slot_orders}")
    slot_sums = []
    for s in range(width):
        total = terms[0][s]
        for t in terms[1:]:
            total = add(total, t[s])
        slot_sums.append(total)
    lhs = cartesian_chain(slot_sums)
    rhs = cartesian_chain(terms[0])
    for t in terms[1:]:
        rhs = add(rhs, cartesian_chain(t))
    return sub(lhs, rhs)


# Constructive inverses and witnesses

def cartesian_factorize(M: Matrix, d: Dims) -> Optional[Tuple[Matrix, Matrix]]:
    """
    Split M into (A, B) with M = A (/) B and b_11 = 0, or None if M is no Cartesian product.
    """
    size = M.order()
    if size != d.order:
        raise DimensionError(f"order {size} is not {d.m}*{d.n}")
    m, n = d.m, d.n
    A = Matrix.from_function(m, m, lambda i, j: M[i * n, j * n])
    a11 = A[0, 0]
    B = Matrix.from_function(n, n, lambda p, q: M[p, q] - a11)
    if not cartesian(A, B).equals(M, _tol_for(M)):
        return None
    return A, B


def equality_shift(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> Optional[ShiftWitness]:
    """k with C = A - kJ_m and D = B + kJ_n, which exists iff A (/) B = C (/) D."""
    _paired_orders(A, B, C, D)
    k = A[0, 0] - C[0, 0]
    tol = _tol_for(A, B, C, D)
    if _shift(A, -k).equals(C, tol) and _shift(B, k).equals(D, tol):
        return ShiftWitness(k)
    return None


def commutation_shift(A: Matrix, B: Matrix) -> Optional[ShiftWitness]:
    """k = (S_B - S_A) / n^2 with B = A + kJ_n, which exists iff A (/) B = B (/) A."""
    n = A.order()
    if B.order() != n:
        raise DimensionError(f"A and B must share an order, got {n} and {B.rows}")
    k = (entry_sum(B) - entry_sum(A)).exact_div(n * n)
    if k is None:
        return None
    if _shift(A, k).equals(B, _tol_for(A, B)):
        return ShiftWitness(k)
    return None


def diagonal_witness(A: Matrix, B: Matrix) -> Optional[ShiftWitness]:
    """k with A = kJ_m and B = -kJ_n; then A (/) B is zero.

    For m, n >= 2 the witness exists iff A (/) B is diagonal. A 1x1 factor can
    break the converse: [0] (/) I_2 = I_2 is diagonal without a witness.
    """
    A.order()
    B.order()
    k = A[0, 0]
    tol = _tol_for(A, B)
    if all(a.close_to(k, tol) for a in A.entries) and all(b.close_to(-k, tol) for b in B.entries):
        return ShiftWitness(k)
    return None


def is_diagonal(M: Matrix, tol: float = 0.0) -> bool:
    n = M.order()
    return all(M[i, j].is_zero(tol) for i in range(n) for j in range(n) if i != j)


def is_symmetric(M: Matrix, tol: float = 0.0) -> bool:
    return M.is_square and transpose(M).equals(M, tol)


def is_skew_symmetric(M: Matrix, tol: float = 0.0) -> bool:
    if not M.is_square:
        return False
    T = transpose(M)
    return all((t + e).is_zero(tol) for t, e in zip(T.entries, M.entries))


def structure_check(A: Matrix, B: Matrix, kind: StructureKind) -> Tuple[bool, bool, bool]:
    """(pred(A), pred(B), pred(A (/) B)) for symmetry or skew-symmetry."""
    kind = StructureKind(kind)
    pred = is_symmetric if kind is StructureKind.SYMMETRIC else is_skew_symmetric
    A.order()
    B.order()
    product = cartesian(A, B)
    return pred(A, _tol_for(A)), pred(B, _tol_for(B)), pred(product, _tol_for(product))


def skew_shift_witness(A: Matrix, B: Matrix) -> Optional[ShiftWitness]:
    """
    k = a_11 with A - kJ_m and B + kJ_n both skew-symmetric, which exists iff A (/) B is skew.

    Skew factors give k = 0. A pair like [1] and [-1] is not skew itself but its
    product [0] is, so the shifted pair is the exact criterion.
    """
    A.order()
    B.order()
    k = A[0, 0]
    if is_skew_symmetric(_shift(A, -k), _tol_for(A)) and is_skew_symmetric(_shift(B, k), _tol_for(B)):
        return ShiftWitness(k)
    return None


def constant_row_sum(M: Matrix, tol: float = 0.0) -> Optional[Scalar]:
    """The common row sum of M, or None if rows differ."""
    sums = row_sums(M)
    first = sums[0]
    if all(s.close_to(first, tol) for s in sums):
        return first
    return None


def constant_row_sum_check(A: Matrix, B: Matrix) -> Tuple[Optional[Scalar], Optional[Scalar], Optional[Scalar]]:
    """Constant row sums of A, B and A (/) B (each None if not constant)."""
    A.order()
    B.order()
    product = cartesian(A, B)
    return (
        constant_row_sum(A, _tol_for(A)),
        constant_row_sum(B, _tol_for(B)),
        constant_row_sum(product, _tol_for(product) * product.rows),
    )


def has_all_ones_eigenvector(M: Matrix, tol: float = 0.0) -> bool:
    """True when M 1 = lambda 1 for some lambda (lambda = 0 included)."""
    image = matmul(M, ones(M.order(), 1))
    first = image.entries[0]
    return all(e.close_to(first, tol) for e in image.entries)


def all_ones_eigenvector_check(A: Matrix, B: Matrix) -> Tuple[bool, bool, bool]:
    A.order()
    B.order()
    product = cartesian(A, B)
    return (
        has_all_ones_eigenvector(A, _tol_for(A) * A.rows),
        has_all_ones_eigenvector(B, _tol_for(B) * B.rows),
        has_all_ones_eigenvector(product, _tol_for(product) * product.rows),
    )
