import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from cartprod import (
    DimensionError,
    Dims,
    FactorGrouping,
    StructureKind,
    WeightedFactor,
    add,
    all_ones_eigenvector_check,
    cartesian,
    cartesian_chain,
    cartesian_factorize,
    cartesian_row_sums_closed_form,
    commutation_shift,
    constant_row_sum_check,
    diagonal_witness,
    distributivity_residuals,
    entry_sum,
    entry_sum_cartesian_closed_form,
    equality_shift,
    hadamard_identity_residual,
    identity,
    kron,
    product_identity_residual,
    product_identity_stated_residual,
    row_sums,
    skew_shift_witness,
    structure_check,
    sum_cartesian_residual,
    trace,
    trace_cartesian_closed_form,
    trace_cartesian_of_kron_groups,
    trace_cartesian_power_closed_form,
    trace_kron_of_cartesian_groups,
    trace_kron_with_cartesian_closed_form,
    trace_pair_closed_form,
    trace_plus_minus_closed_form,
    transpose,
    zeros,
)
from cartprod.identities import (
    build_cartesian_of_kron_groups,
    build_kron_of_cartesian_groups,
    build_weighted_cartesian,
    is_diagonal,
)
from cartprod.products import cartesian_power, scale, sub

from conftest import J, gaussian, m, matrix_pairs, square_matrices

A2 = m([[1, 2], [3, 4]])
B2 = m([[5, 6], [7, 8]])
SWAP = m([[0, 1], [1, 0]])


# Trace closed forms

def test_trace_cartesian_examples():
    factors = [WeightedFactor(2, m([[1]])), WeightedFactor(3, SWAP)]
    assert build_weighted_cartesian(factors) == m([[2, 5], [5, 2]])
    assert trace_cartesian_closed_form(factors) == 4
    assert trace_cartesian_closed_form([WeightedFactor(3, A2)]) == 15
    assert trace_cartesian_closed_form([WeightedFactor(1, A2), WeightedFactor(1, B2)]) == 36


def test_trace_pair_examples():
    assert trace_pair_closed_form(A2, SWAP) == 10
    assert trace_pair_closed_form(zeros(2), zeros(3)) == 0
    assert trace_pair_closed_form(A2, B2) == 36


def test_trace_plus_minus_examples():
    assert trace_plus_minus_closed_form(A2, J(2, 9)) == 20
    assert trace(cartesian(add(A2, J(2, 9)), sub(A2, J(2, 9)))) == 20
    assert trace_plus_minus_closed_form(zeros(2), B2) == 0
    with pytest.raises(DimensionError):
        trace_plus_minus_closed_form(A2, zeros(3))


def test_trace_kron_with_cartesian_examples():
    assert trace_kron_with_cartesian_closed_form(m([[2]]), [identity(2)]) == 4
    B1, B2_ = m([[1, 5], [5, 0]]), m([[1, 0], [7, 2]])
    assert trace_kron_with_cartesian_closed_form(J(2), [B1, B2_]) == 16
    assert trace(kron(J(2), cartesian(B1, B2_))) == 16
    assert trace_kron_with_cartesian_closed_form(SWAP, [A2, B2]) == 0
    with pytest.raises(DimensionError):
        trace_kron_with_cartesian_closed_form(A2, [A2, identity(3)])


def test_grouped_traces_reduce_to_simpler_forms():
    assert trace_kron_of_cartesian_groups(FactorGrouping([[A2, B2]])) == trace_cartesian_closed_form(
        [WeightedFactor(1, A2), WeightedFactor(1, B2)]
    )
    assert trace_kron_of_cartesian_groups(FactorGrouping([[A2], [B2]])) == trace(A2) * trace(B2)
    assert trace_cartesian_of_kron_groups(FactorGrouping([[A2], [B2]])) == trace_pair_closed_form(A2, B2)
    assert trace_cartesian_of_kron_groups(FactorGrouping([[A2, B2, SWAP]])) == trace(A2) * trace(B2) * trace(SWAP)


def test_grouped_traces_on_eight_by_eight():
    g = FactorGrouping([[A2, B2], [SWAP]])
    assert trace_kron_of_cartesian_groups(g) == trace(kron(cartesian(A2, B2), SWAP))
    assert trace_cartesian_of_kron_groups(g) == trace(cartesian(kron(A2, B2), SWAP))


def test_grouping_rejects_empty_groups():
    with pytest.raises(DimensionError):
        FactorGrouping([])
    with pytest.raises(DimensionError):
        FactorGrouping([[A2], []])


@given(st.lists(st.tuples(gaussian, square_matrices()), min_size=1, max_size=3))
def test_trace_cartesian_matches_construction(pairs):
    factors = [WeightedFactor(k, A) for k, A in pairs]
    assert trace_cartesian_closed_form(factors) == trace(build_weighted_cartesian(factors))


@given(square_matrices(max_order=3), st.integers(1, 3))
def test_trace_power_matches_construction(A, k):
    assert trace_cartesian_power_closed_form(A, k) == trace(cartesian_power(A, k))


@given(st.lists(st.lists(square_matrices(max_order=2), min_size=1, max_size=2), min_size=1, max_size=2))
def test_grouped_traces_match_construction(groups):
    g = FactorGrouping(groups)
    assert trace_kron_of_cartesian_groups(g) == trace(build_kron_of_cartesian_groups(g))
    assert trace_cartesian_of_kron_groups(g) == trace(build_cartesian_of_kron_groups(g))


# Entry sums and row sums

def test_entry_sum_cartesian_examples():
    assert entry_sum_cartesian_closed_form(A2, B2) == 144
    assert entry_sum(cartesian(A2, B2)) == 144
    assert entry_sum_cartesian_closed_form(zeros(2), zeros(2)) == 0
    assert entry_sum_cartesian_closed_form(J(2), J(3)) == 2 * 4 * 9


@given(square_matrices(), square_matrices())
def test_sums_match_construction(A, B):
    assert entry_sum_cartesian_closed_form(A, B) == entry_sum(cartesian(A, B))
    assert cartesian_row_sums_closed_form(A, B) == row_sums(cartesian(A, B))


# Expansion identities

def test_stated_product_identity_fails_at_order_one():
    A, B, C, D = m([[1]]), m([[0]]), m([[0]]), m([[1]])
    assert product_identity_stated_residual(A, B, C, D) == m([[1]])
    assert product_identity_residual(A, B, C, D).is_zero()


@given(matrix_pairs())
def test_product_identity(quad):
    assert product_identity_residual(*quad).is_zero()


@given(matrix_pairs())
def test_hadamard_identity(quad):
    assert hadamard_identity_residual(*quad).is_zero()


def test_hadamard_identity_with_zero_right_factors():
    assert hadamard_identity_residual(A2, zeros(3), B2, zeros(3)).is_zero()
    assert hadamard_identity_residual(J(2), J(2), J(2), J(2)).is_zero()


def test_expansion_identities_reject_mismatched_orders():
    with pytest.raises(DimensionError):
        product_identity_residual(A2, B2, identity(3), B2)
    with pytest.raises(DimensionError):
        hadamard_identity_residual(A2, B2, A2, identity(3))


def test_distributivity_examples():
    left, right = distributivity_residuals(m([[1]]), m([[1]]), SWAP)
    assert left.is_zero() and right.is_zero()
    left, _ = distributivity_residuals(A2, zeros(2), B2)
    assert left.is_zero()


@given(st.data())
def test_distributivity(data):
    mo = data.draw(st.integers(1, 3))
    A, B = data.draw(square_matrices(order=mo)), data.draw(square_matrices(order=mo))
    C = data.draw(square_matrices())
    left, right = distributivity_residuals(A, B, C)
    assert left.is_zero()
    assert right.is_zero()


@given(st.data())
def test_sum_cartesian(data):
    slots = data.draw(st.lists(st.integers(1, 2), min_size=1, max_size=3))
    count = data.draw(st.integers(1, 3))
    terms = [[data.draw(square_matrices(order=n)) for n in slots] for _ in range(count)]
    assert sum_cartesian_residual(terms).is_zero()


def test_sum_cartesian_rejects_ragged_terms():
    with pytest.raises(DimensionError):
        sum_cartesian_residual([[A2, B2], [A2]])
    with pytest.raises(DimensionError):
        sum_cartesian_residual([[A2, B2], [A2, identity(3)]])


@given(st.lists(square_matrices(), min_size=1, max_size=3))
def test_transpose_distributes_over_chains(mats):
    assert transpose(cartesian_chain(mats)) == cartesian_chain([transpose(M) for M in mats])


# Factorization and witnesses

def test_factorize_cartesian_example():
    A, B = cartesian_factorize(cartesian(A2, B2), Dims(2, 2))
    assert A == m([[6, 7], [8, 9]])
    assert B == m([[0, 1], [2, 3]])


def test_factorize_zero_and_identity():
    A, B = cartesian_factorize(zeros(4), Dims(2, 2))
    assert A.is_zero() and B.is_zero()
    assert cartesian_factorize(identity(4), Dims(2, 2)) is None


def test_factorize_dimension_guard():
    with pytest.raises(DimensionError):
        cartesian_factorize(identity(6), Dims(2, 2))


@given(square_matrices(), square_matrices())
def test_factorize_recovers_shifted_pair(A, B):
    A2_, B2_ = cartesian_factorize(cartesian(A, B), Dims(A.rows, B.rows))
    b11 = B[0, 0]
    assert B2_[0, 0] == 0
    assert A2_ == add(A, J(A.rows, b11))
    assert B2_ == add(B, J(B.rows, -b11))


def test_equality_shift_examples():
    assert equality_shift(A2, B2, A2, B2).k == 0
    shift = equality_shift(A2, m([[0, 1], [2, 3]]), sub(A2, J(2, 5)), add(m([[0, 1], [2, 3]]), J(2, 5)))
    assert shift.k == 5
    assert equality_shift(A2, B2, add(A2, J(2)), add(B2, J(2))) is None


@given(square_matrices(), square_matrices(), gaussian)
def test_equality_shift_finds_every_shift(A, B, k):
    C, D = sub(A, J(A.rows, k)), add(B, J(B.rows, k))
    assert cartesian(A, B) == cartesian(C, D)
    assert equality_shift(A, B, C, D).k == k


def test_commutation_shift_examples():
    assert commutation_shift(A2, A2).k == 0
    assert commutation_shift(A2, add(A2, J(2, 3))).k == 3
    assert commutation_shift(A2, m([[4, 3], [2, 1]])) is None
    assert cartesian(A2, m([[4, 3], [2, 1]])) != cartesian(m([[4, 3], [2, 1]]), A2)


@given(square_matrices(), square_matrices())
def test_commutation_shift_iff_products_commute(A, B):
    assume(A.rows == B.rows)
    witness = commutation_shift(A, B)
    assert (witness is not None) == (cartesian(A, B) == cartesian(B, A))


def test_diagonal_witness_examples():
    witness = diagonal_witness(J(2, 3), J(3, -3))
    assert witness.k == 3
    assert cartesian(J(2, 3), J(3, -3)) == zeros(6)
    assert diagonal_witness(zeros(2), zeros(2)).k == 0
    assert diagonal_witness(identity(2), scale(-1, identity(2))) is None
    assert not is_diagonal(cartesian(identity(2), scale(-1, identity(2))))


def test_one_by_one_factor_gives_diagonal_product_without_witness():
    assert cartesian(zeros(1), identity(2)) == identity(2)
    assert is_diagonal(cartesian(zeros(1), identity(2)))
    assert diagonal_witness(zeros(1), identity(2)) is None


@given(square_matrices(), square_matrices())
def test_diagonal_iff_opposite_constants(A, B):
    assume(A.rows > 1 and B.rows > 1)
    witness = diagonal_witness(A, B)
    assert (witness is not None) == is_diagonal(cartesian(A, B))


def test_structure_check_examples():
    S = m([[1, 2], [2, 5]])
    assert structure_check(S, SWAP, StructureKind.SYMMETRIC) == (True, True, True)
    assert structure_check(S, m([[0, 1], [2, 0]]), StructureKind.SYMMETRIC) == (True, False, False)
    assert structure_check(zeros(2), zeros(3), StructureKind.SYMMETRIC) == (True, True, True)
    assert structure_check(zeros(2), zeros(3), StructureKind.SKEW) == (True, True, True)
    K = m([[0, 1], [-1, 0]])
    assert structure_check(K, K, StructureKind.SKEW) == (True, True, True)


def test_skew_product_of_shifted_skew_factors():
    # [1] and [-1] are not skew, but [1] (/) [-1] = [0] is
    assert structure_check(m([[1]]), m([[-1]]), StructureKind.SKEW) == (False, False, True)
    assert skew_shift_witness(m([[1]]), m([[-1]])).k == 1
    K = m([[0, 2], [-2, 0]])
    assert skew_shift_witness(add(K, J(2, 4)), sub(K, J(2, 4))).k == 4
    assert skew_shift_witness(A2, B2) is None


@given(square_matrices(), square_matrices())
def test_symmetry_iff(A, B):
    a, b, ab = structure_check(A, B, StructureKind.SYMMETRIC)
    assert ab == (a and b)
    sym_a, sym_b = add(A, transpose(A)), add(B, transpose(B))
    assert structure_check(sym_a, sym_b, StructureKind.SYMMETRIC) == (True, True, True)


@given(square_matrices(), square_matrices())
def test_skew_iff_shifted(A, B):
    _, _, ab = structure_check(A, B, StructureKind.SKEW)
    assert ab == (skew_shift_witness(A, B) is not None)
    ka, kb = sub(A, transpose(A)), sub(B, transpose(B))
    assert structure_check(ka, kb, StructureKind.SKEW) == (True, True, True)


def test_constant_row_sum_examples():
    assert constant_row_sum_check(J(2), J(3)) == (2, 3, 12)
    assert constant_row_sum_check(SWAP, SWAP) == (1, 1, 4)
    ra, _, rab = constant_row_sum_check(A2, J(2))
    assert ra is None and rab is None


def test_all_ones_eigenvector_examples():
    assert all_ones_eigenvector_check(J(2), J(2)) == (True, True, True)
    assert all_ones_eigenvector_check(A2, J(2)) == (False, True, False)
    assert all_ones_eigenvector_check(zeros(2), zeros(2)) == (True, True, True)


@given(square_matrices(), square_matrices())
def test_constant_row_sum_iff(A, B):
    ra, rb, rab = constant_row_sum_check(A, B)
    assert (rab is not None) == (ra is not None and rb is not None)
    if rab is not None:
        assert rab == B.rows * ra + A.rows * rb
    a, b, ab = all_ones_eigenvector_check(A, B)
    assert ab == (a and b) == (rab is not None)
