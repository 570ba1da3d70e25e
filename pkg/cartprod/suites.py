"""One randomized trial per verified identity.

Each trial function takes a seeded ``numpy.random.Generator`` and the largest
factor order to draw, builds its inputs, and returns a ``TrialOutcome``. The
iff-theorems draw structured inputs at the configured injection rate so both
sides of each equivalence get exercised.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from .config import get_config
from .generators import (
    constant_matrix,
    random_constant_row_sum,
    random_matrix,
    random_order,
    random_scalar,
    random_skew,
    random_symmetric,
)
from .identities import (
    FactorGrouping,
    StructureKind,
    WeightedFactor,
    all_ones_eigenvector_check,
    build_cartesian_of_kron_groups,
    build_kron_of_cartesian_groups,
    build_weighted_cartesian,
    cartesian_factorize,
    cartesian_row_sums_closed_form,
    commutation_shift,
    constant_row_sum_check,
    diagonal_witness,
    distributivity_residuals,
    entry_sum_cartesian_closed_form,
    entry_sum_kron_closed_form,
    equality_shift,
    hadamard_identity_residual,
    is_diagonal,
    product_identity_residual,
    skew_shift_witness,
    structure_check,
    sum_cartesian_residual,
    trace_cartesian_closed_form,
    trace_cartesian_of_kron_groups,
    trace_cartesian_power_closed_form,
    trace_kron_closed_form,
    trace_kron_of_cartesian_groups,
    trace_kron_with_cartesian_closed_form,
    trace_pair_closed_form,
    trace_plus_minus_closed_form,
)
from .matrix import Dims, Matrix
from .products import (
    add,
    cartesian,
    cartesian_chain,
    cartesian_power,
    commutation_matrix,
    conj_transpose,
    entry_sum,
    identity,
    kron,
    matmul,
    ones,
    row_sums,
    scale,
    sub,
    trace,
    transpose,
)
from .scalar import Scalar


@dataclass
class TrialOutcome:
    passed: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    detail: str = ""


# Longest chains have three factors; capping their order keeps products small.
CHAIN_ORDER = 3


def _chain_order(max_order: int) -> int:
    return min(max_order, CHAIN_ORDER)


def _injected(rng: np.random.Generator) -> bool:
    return bool(rng.random() < get_config().injection_rate)


def _matrices(rng: np.random.Generator, max_order: int, count: int) -> List[Matrix]:
    return [random_matrix(rng, random_order(rng, max_order)) for _ in range(count)]


def _compare(expected, actual, **inputs) -> TrialOutcome:
    if expected == actual:
        return TrialOutcome(True, inputs)
    return TrialOutcome(False, inputs, f"expected {expected}, got {actual}")


def _zero_residual(residual: Matrix, **inputs) -> TrialOutcome:
    if residual.is_zero():
        return TrialOutcome(True, inputs)
    return TrialOutcome(False, inputs, f"non-zero residual {residual}")


def _grouping(rng: np.random.Generator, max_order: int) -> FactorGrouping:
    """One to three factors cut into consecutive non-empty groups."""
    factors = _matrices(rng, _chain_order(max_order), int(rng.integers(1, 4)))
    groups, current = [], [factors[0]]
    for M in factors[1:]:
        if rng.random() < 0.5:
            groups.append(current)
            current = []
        current.append(M)
    groups.append(current)
    return FactorGrouping(tuple(tuple(g) for g in groups))


def _perturb(rng: np.random.Generator, M: Matrix) -> Matrix:
    """M with one entry bumped by a non-zero amount."""
    index = int(rng.integers(0, M.rows * M.cols))
    bump = Scalar.exact(int(rng.integers(1, 4)))
    entries = list(M.entries)
    entries[index] = entries[index] + bump
    return Matrix(M.rows, M.cols, tuple(entries), M.mode)


# Matrix-core invariants

def cartesian_definition_trial(rng, max_order) -> TrialOutcome:
    """A (/) B equals A kron J_n + J_m kron B."""
    A, B = _matrices(rng, max_order, 2)
    expected = add(kron(A, ones(B.rows)), kron(ones(A.rows), B))
    return _compare(expected, cartesian(A, B), A=A, B=B)


def associativity_trial(rng, max_order) -> TrialOutcome:
    """(A (/) B) (/) C equals A (/) (B (/) C)."""
    A, B, C = _matrices(rng, max_order, 3)
    return _compare(cartesian(cartesian(A, B), C), cartesian(A, cartesian(B, C)), A=A, B=B, C=C)


def mixed_product_trial(rng, max_order) -> TrialOutcome:
    """(A kron B)(C kron D) equals AC kron BD."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    A, C = random_matrix(rng, m), random_matrix(rng, m)
    B, D = random_matrix(rng, n), random_matrix(rng, n)
    return _compare(kron(matmul(A, C), matmul(B, D)), matmul(kron(A, B), kron(C, D)), A=A, B=B, C=C, D=D)


def trace_kron_trial(rng, max_order) -> TrialOutcome:
    """tr(A kron B) equals tr(A) tr(B)."""
    A, B = _matrices(rng, max_order, 2)
    return _compare(trace_kron_closed_form(A, B), trace(kron(A, B)), A=A, B=B)


def kron_transpose_trial(rng, max_order) -> TrialOutcome:
    """Transpose and conjugate transpose distribute over kron."""
    A, B = _matrices(rng, max_order, 2)
    ok = transpose(kron(A, B)) == kron(transpose(A), transpose(B))
    ok = ok and conj_transpose(kron(A, B)) == kron(conj_transpose(A), conj_transpose(B))
    return TrialOutcome(ok, {"A": A, "B": B}, "" if ok else "transpose does not distribute")


def scalar_pullout_trial(rng, max_order) -> TrialOutcome:
    """aA kron bB equals ab (A kron B)."""
    A, B = _matrices(rng, max_order, 2)
    a, b = random_scalar(rng), random_scalar(rng)
    return _compare(scale(a * b, kron(A, B)), kron(scale(a, A), scale(b, B)), a=a, b=b, A=A, B=B)


def entry_sum_kron_trial(rng, max_order) -> TrialOutcome:
    """S_(A kron B) equals S_A S_B."""
    A, B = _matrices(rng, max_order, 2)
    return _compare(entry_sum_kron_closed_form(A, B), entry_sum(kron(A, B)), A=A, B=B)


def permutation_similarity_trial(rng, max_order) -> TrialOutcome:
    """P^T (A kron B) P = B kron A and P^T (A (/) B) P = B (/) A for the commutation matrix P."""
    A, B = _matrices(rng, max_order, 2)
    P = commutation_matrix(Dims(A.rows, B.rows))
    Pt = transpose(P)
    if matmul(Pt, P) != identity(P.rows):
        return TrialOutcome(False, {"A": A, "B": B}, "commutation matrix is not orthogonal")
    if matmul(matmul(Pt, kron(A, B)), P) != kron(B, A):
        return TrialOutcome(False, {"A": A, "B": B}, "P does not intertwine kron")
    return _compare(cartesian(B, A), matmul(matmul(Pt, cartesian(A, B)), P), A=A, B=B)


# Trace closed forms

def trace_pair_trial(rng, max_order) -> TrialOutcome:
    """tr(A (/) B) equals n tr(A) + m tr(B)."""
    A, B = _matrices(rng, max_order, 2)
    return _compare(trace_pair_closed_form(A, B), trace(cartesian(A, B)), A=A, B=B)


def trace_cartesian_trial(rng, max_order) -> TrialOutcome:
    """tr(k_1 A_1 (/) ... (/) k_t A_t) equals (prod n_i) sum k_i tr(A_i)/n_i."""
    count = int(rng.integers(1, 4))
    factors = [WeightedFactor(random_scalar(rng), M) for M in _matrices(rng, _chain_order(max_order), count)]
    inputs = {"k": [f.k for f in factors], "A": [f.A for f in factors]}
    return _compare(trace_cartesian_closed_form(factors), trace(build_weighted_cartesian(factors)), **inputs)


def trace_power_trial(rng, max_order) -> TrialOutcome:
    """tr(A^[k]) equals k n^(k-1) tr(A)."""
    A = random_matrix(rng, random_order(rng, _chain_order(max_order)))
    k = int(rng.integers(1, 4))
    return _compare(trace_cartesian_power_closed_form(A, k), trace(cartesian_power(A, k)), A=A, k=k)


def trace_plus_minus_trial(rng, max_order) -> TrialOutcome:
    """tr((A + B) (/) (A - B)) equals 2n tr(A)."""
    n = random_order(rng, max_order)
    A, B = random_matrix(rng, n), random_matrix(rng, n)
    return _compare(trace_plus_minus_closed_form(A, B), trace(cartesian(add(A, B), sub(A, B))), A=A, B=B)


def trace_kron_with_cartesian_trial(rng, max_order) -> TrialOutcome:
    """tr(A kron (B_1 (/) ... (/) B_k)) equals n^(k-1) tr(A) sum tr(B_i)."""
    A = random_matrix(rng, random_order(rng, max_order))
    n = random_order(rng, _chain_order(max_order))
    Bs = [random_matrix(rng, n) for _ in range(int(rng.integers(1, 4)))]
    direct = trace(kron(A, cartesian_chain(Bs)))
    return _compare(trace_kron_with_cartesian_closed_form(A, Bs), direct, A=A, Bs=Bs)


def trace_kron_of_cartesian_groups_trial(rng, max_order) -> TrialOutcome:
    """Trace of a kron of Cartesian groups matches the closed form."""
    g = _grouping(rng, max_order)
    return _compare(trace_kron_of_cartesian_groups(g), trace(build_kron_of_cartesian_groups(g)), groups=g.groups)


def trace_cartesian_of_kron_groups_trial(rng, max_order) -> TrialOutcome:
    """Trace of a Cartesian chain of kron groups matches the closed form."""
    g = _grouping(rng, max_order)
    return _compare(trace_cartesian_of_kron_groups(g), trace(build_cartesian_of_kron_groups(g)), groups=g.groups)


def entry_sum_cartesian_trial(rng, max_order) -> TrialOutcome:
    """S_(A (/) B) equals n^2 S_A + m^2 S_B."""
    A, B = _matrices(rng, max_order, 2)
    return _compare(entry_sum_cartesian_closed_form(A, B), entry_sum(cartesian(A, B)), A=A, B=B)


# Expansion identities

def product_identity_trial(rng, max_order) -> TrialOutcome:
    """(A (/) B)(C (/) D) expands into n(AC kron J) + m(J kron BD) + AJ kron JD + JC kron BJ."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    A, C = random_matrix(rng, m), random_matrix(rng, m)
    B, D = random_matrix(rng, n), random_matrix(rng, n)
    return _zero_residual(product_identity_residual(A, B, C, D), A=A, B=B, C=C, D=D)


def hadamard_identity_trial(rng, max_order) -> TrialOutcome:
    """(A (/) B) o (C (/) D) equals (A o C) (/) (B o D) + A kron D + C kron B."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    A, C = random_matrix(rng, m), random_matrix(rng, m)
    B, D = random_matrix(rng, n), random_matrix(rng, n)
    return _zero_residual(hadamard_identity_residual(A, B, C, D), A=A, B=B, C=C, D=D)


def distributivity_trial(rng, max_order) -> TrialOutcome:
    """Both halved distributive laws for the Cartesian product."""
    m = random_order(rng, max_order)
    A, B = random_matrix(rng, m), random_matrix(rng, m)
    C = random_matrix(rng, random_order(rng, max_order))
    left, right = distributivity_residuals(A, B, C)
    if not left.is_zero():
        return TrialOutcome(False, {"A": A, "B": B, "C": C}, f"(A + B) (/) C residual {left}")
    return _zero_residual(right, A=A, B=B, C=C)


def sum_cartesian_trial(rng, max_order) -> TrialOutcome:
    """(sum A_i) (/) (sum B_i) (/) ... equals sum (A_i (/) B_i (/) ...)."""
    slots = [random_order(rng, _chain_order(max_order)) for _ in range(int(rng.integers(1, 4)))]
    terms = [[random_matrix(rng, n) for n in slots] for _ in range(int(rng.integers(1, 4)))]
    return _zero_residual(sum_cartesian_residual(terms), terms=terms)


def transpose_trial(rng, max_order) -> TrialOutcome:
    """Transpose and conjugate transpose distribute over Cartesian chains."""
    mats = _matrices(rng, _chain_order(max_order), int(rng.integers(1, 4)))
    product = cartesian_chain(mats)
    if transpose(product) != cartesian_chain([transpose(M) for M in mats]):
        return TrialOutcome(False, {"mats": mats}, "transpose does not distribute")
    return _compare(cartesian_chain([conj_transpose(M) for M in mats]), conj_transpose(product), mats=mats)


def scalar_remarks_trial(rng, max_order) -> TrialOutcome:
    """kA (/) kB = k(A (/) B) and [k] (/) A = A + kJ = A (/) [k]."""
    A, B = _matrices(rng, max_order, 2)
    k = random_scalar(rng)
    if cartesian(scale(k, A), scale(k, B)) != scale(k, cartesian(A, B)):
        return TrialOutcome(False, {"k": k, "A": A, "B": B}, "scaling does not pull out")
    K = Matrix(1, 1, (k,))
    shifted = add(A, constant_matrix(k, A.rows))
    ok = cartesian(K, A) == shifted and cartesian(A, K) == shifted
    return TrialOutcome(ok, {"k": k, "A": A}, "" if ok else "1x1 factor is not a shift")


# Iff-theorems

def symmetry_trial(rng, max_order) -> TrialOutcome:
    """A (/) B is symmetric iff A and B are."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    if _injected(rng):
        A, B = random_symmetric(rng, m), random_symmetric(rng, n)
    else:
        A = random_symmetric(rng, m) if rng.random() < 0.5 else random_matrix(rng, m)
        B = random_matrix(rng, n)
    a, b, ab = structure_check(A, B, StructureKind.SYMMETRIC)
    return _compare(a and b, ab, A=A, B=B)


def skew_symmetry_trial(rng, max_order) -> TrialOutcome:
    """A (/) B is skew iff A - a11 J and B + a11 J are; skew A and B give a skew product."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    if _injected(rng):
        A, B = random_skew(rng, m), random_skew(rng, n)
        if rng.random() < 0.5:
            k = random_scalar(rng)
            A, B = add(A, constant_matrix(k, m)), add(B, constant_matrix(-k, n))
    else:
        A = random_skew(rng, m) if rng.random() < 0.5 else random_matrix(rng, m)
        B = random_matrix(rng, n)
    a, b, ab = structure_check(A, B, StructureKind.SKEW)
    inputs = {"A": A, "B": B}
    if a and b and not ab:
        return TrialOutcome(False, inputs, "skew factors gave a non-skew product")
    return _compare(ab, skew_shift_witness(A, B) is not None, **inputs)


def diagonal_trial(rng, max_order) -> TrialOutcome:
    """A (/) B is diagonal iff A = kJ and B = -kJ, and then it is zero (orders of at least 2)."""
    low = min(2, max_order)
    m, n = int(rng.integers(low, max_order + 1)), int(rng.integers(low, max_order + 1))
    if _injected(rng):
        k = random_scalar(rng)
        A, B = constant_matrix(k, m), constant_matrix(-k, n)
    else:
        A, B = random_matrix(rng, m), random_matrix(rng, n)
    product = cartesian(A, B)
    witness = diagonal_witness(A, B)
    inputs = {"A": A, "B": B}
    if witness is not None and not product.is_zero():
        return TrialOutcome(False, inputs, "diagonal product is not zero")
    if m > 1 and n > 1 and (witness is not None) != is_diagonal(product):
        return TrialOutcome(False, inputs, f"witness {witness} disagrees with diagonality")
    return TrialOutcome(True)


def equality_shift_trial(rng, max_order) -> TrialOutcome:
    """A (/) B = C (/) D iff C = A - kJ and D = B + kJ."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    A, B = random_matrix(rng, m), random_matrix(rng, n)
    k = random_scalar(rng)
    C, D = add(A, constant_matrix(-k, m)), add(B, constant_matrix(k, n))
    if not _injected(rng):
        if rng.random() < 0.5:
            C, D = random_matrix(rng, m), random_matrix(rng, n)
        else:
            C = _perturb(rng, C)
    witness = equality_shift(A, B, C, D)
    equal = cartesian(A, B) == cartesian(C, D)
    inputs = {"A": A, "B": B, "C": C, "D": D}
    if (witness is not None) != equal:
        return TrialOutcome(False, inputs, f"witness {witness} but products equal={equal}")
    if witness is not None:
        ok = C == add(A, constant_matrix(-witness.k, m)) and D == add(B, constant_matrix(witness.k, n))
        return TrialOutcome(ok, inputs, "" if ok else "witness does not relate the pairs")
    return TrialOutcome(True)


def commutation_shift_trial(rng, max_order) -> TrialOutcome:
    """A (/) B = B (/) A iff B = A + kJ."""
    n = random_order(rng, max_order)
    A = random_matrix(rng, n)
    if _injected(rng):
        B = add(A, constant_matrix(random_scalar(rng), n))
    elif rng.random() < 0.5:
        B = _perturb(rng, add(A, constant_matrix(random_scalar(rng), n)))
    else:
        B = random_matrix(rng, n)
    witness = commutation_shift(A, B)
    commute = cartesian(A, B) == cartesian(B, A)
    return _compare(commute, witness is not None, A=A, B=B)


def constant_row_sum_trial(rng, max_order) -> TrialOutcome:
    """A (/) B has constant row sum iff A and B do; the sum is n r_A + m r_B."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    if _injected(rng):
        A, B = random_constant_row_sum(rng, m), random_constant_row_sum(rng, n)
    else:
        A = random_constant_row_sum(rng, m) if rng.random() < 0.5 else random_matrix(rng, m)
        B = random_matrix(rng, n)
    inputs = {"A": A, "B": B}
    if row_sums(cartesian(A, B)) != cartesian_row_sums_closed_form(A, B):
        return TrialOutcome(False, inputs, "row sums differ from n A_i + m B_j")
    ra, rb, rab = constant_row_sum_check(A, B)
    if (rab is not None) != (ra is not None and rb is not None):
        return TrialOutcome(False, inputs, f"row sums {ra}, {rb}, {rab} break the equivalence")
    if rab is not None and rab != n * ra + m * rb:
        return TrialOutcome(False, inputs, f"constant row sum {rab} is not n*{ra} + m*{rb}")
    return TrialOutcome(True)


def all_ones_eigenvector_trial(rng, max_order) -> TrialOutcome:
    """The all-ones vector is an eigenvector of A (/) B iff it is one of A and of B."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    if _injected(rng):
        A, B = random_constant_row_sum(rng, m), random_constant_row_sum(rng, n)
    else:
        A = random_constant_row_sum(rng, m) if rng.random() < 0.5 else random_matrix(rng, m)
        B = random_matrix(rng, n)
    a, b, ab = all_ones_eigenvector_check(A, B)
    return _compare(a and b, ab, A=A, B=B)


# Factorization

def _is_cartesian_product(M: Matrix, m: int, n: int) -> bool:
    """M[(i,p),(j,q)] + M[(0,0),(0,0)] == M[(i,0),(j,0)] + M[(0,p),(0,q)] everywhere."""
    corner = M[0, 0]
    for i in range(m):
        for j in range(m):
            for p in range(n):
                for q in range(n):
                    if M[i * n + p, j * n + q] + corner != M[i * n, j * n] + M[p, q]:
                        return False
    return True


def factorization_trial(rng, max_order) -> TrialOutcome:
    """cartesian_factorize recovers (A + b11 J, B - b11 J) and rejects non-products."""
    m, n = random_order(rng, max_order), random_order(rng, max_order)
    A, B = random_matrix(rng, m), random_matrix(rng, n)
    M = cartesian(A, B)
    if _injected(rng):
        M = _perturb(rng, M)
    result = cartesian_factorize(M, Dims(m, n))
    inputs = {"M": M, "m": m, "n": n}
    if (result is not None) != _is_cartesian_product(M, m, n):
        return TrialOutcome(False, inputs, f"factorization returned {result is not None}")
    if result is None:
        return TrialOutcome(True)
    A2, B2 = result
    if cartesian(A2, B2) != M or not B2[0, 0].is_zero():
        return TrialOutcome(False, inputs, "factors do not recompose canonically")
    if M == cartesian(A, B):
        b11 = B[0, 0]
        ok = A2 == add(A, constant_matrix(b11, m)) and B2 == add(B, constant_matrix(-b11, n))
        return TrialOutcome(ok, inputs, "" if ok else "factors are not the b11-shifted pair")
    return TrialOutcome(True)
