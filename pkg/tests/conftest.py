"""Shared fixtures and hypothesis strategies."""
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cartprod import Matrix, Scalar, reset_config
from cartprod.products import scale, ones

settings.register_profile(
    "cartprod",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cartprod")

ENTRY_BOUND = 9


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from default configuration and no capacity override."""
    monkeypatch.delenv("CARTPROD_CAPACITY", raising=False)
    reset_config()
    yield
    reset_config()


def m(rows):
    """Shorthand for an exact matrix from nested lists."""
    return Matrix.from_rows(rows)


def J(order, k=1):
    return scale(k, ones(order))


gaussian = st.builds(
    Scalar.exact,
    st.integers(-ENTRY_BOUND, ENTRY_BOUND),
    st.integers(-ENTRY_BOUND, ENTRY_BOUND),
)


@st.composite
def square_matrices(draw, order=None, max_order=3):
    n = order if order is not None else draw(st.integers(1, max_order))
    entries = draw(st.lists(gaussian, min_size=n * n, max_size=n * n))
    return Matrix(n, n, tuple(entries))


@st.composite
def matrix_pairs(draw, max_order=3):
    """(A, C) of one order and (B, D) of another."""
    m_ = draw(st.integers(1, max_order))
    n_ = draw(st.integers(1, max_order))
    A, C = draw(square_matrices(order=m_)), draw(square_matrices(order=m_))
    B, D = draw(square_matrices(order=n_)), draw(square_matrices(order=n_))
    return A, B, C, D
