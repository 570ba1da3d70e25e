"""Seeded random matrices, trees and connected graphs."""
import zlib
from typing import Optional

import networkx as nx
import numpy as np

from .config import get_config
from .graph import Graph
from .matrix import Matrix
from .products import ones, scale
from .scalar import Scalar


def trial_rng(seed: int, suite: str, trial: int) -> np.random.Generator:
    """Generator whose stream depends only on (seed, suite, trial)."""
    return np.random.default_rng([seed, zlib.crc32(suite.encode("utf-8")), trial])


def random_order(rng: np.random.Generator, max_order: int) -> int:
    return int(rng.integers(1, max_order + 1))


def _bound(bound: Optional[int]) -> int:
    return get_config().entry_bound if bound is None else bound


def random_scalar(rng: np.random.Generator, bound: Optional[int] = None, gaussian: bool = True) -> Scalar:
    b = _bound(bound)
    re = int(rng.integers(-b, b + 1))
    im = int(rng.integers(-b, b + 1)) if gaussian else 0
    return Scalar.exact(re, im)


def random_matrix(rng: np.random.Generator, order: int, bound: Optional[int] = None, gaussian: bool = True) -> Matrix:
    """Square matrix with independent uniform integer components in [-bound, bound]."""
    b = _bound(bound)
    re = rng.integers(-b, b + 1, size=order * order)
    im = rng.integers(-b, b + 1, size=order * order) if gaussian else np.zeros(order * order, dtype=np.int64)
    entries = tuple(Scalar.exact(int(x), int(y)) for x, y in zip(re, im))
    return Matrix(order, order, entries)


def random_symmetric(rng: np.random.Generator, order: int, bound: Optional[int] = None, gaussian: bool = True) -> Matrix:
    upper = random_matrix(rng, order, bound, gaussian)
    return Matrix.from_function(order, order, lambda i, j: upper[min(i, j), max(i, j)])


def random_skew(rng: np.random.Generator, order: int, bound: Optional[int] = None, gaussian: bool = True) -> Matrix:
    upper = random_matrix(rng, order, bound, gaussian)

    def entry(i: int, j: int) -> Scalar:
        if i == j:
            return Scalar.exact(0)
        return upper[i, j] if i < j else -upper[j, i]

    return Matrix.from_function(order, order, entry)


def constant_matrix(k: Scalar, order: int) -> Matrix:
    """k J of the given order."""
    return scale(k, ones(order))


def random_constant_row_sum(rng: np.random.Generator, order: int, bound: Optional[int] = None) -> Matrix:
    """Matrix whose rows share a sum: the last column absorbs each row's difference."""
    base = random_matrix(rng, order, bound)
    target = random_scalar(rng, bound)

    def entry(i: int, j: int) -> Scalar:
        if j < order - 1:
            return base[i, j]
        partial = sum(base.row(i)[:-1], Scalar.exact(0))
        return target - partial

    return Matrix.from_function(order, order, entry)


def random_tree(rng: np.random.Generator, n: int) -> Graph:
    """Uniform random labelled tree on n vertices via a Prüfer sequence."""
    if n <= 2:
        return Graph.from_networkx(nx.path_graph(n))
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_connected_graph(rng: np.random.Generator, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """A random spanning tree plus each remaining pair with probability extra_edge_prob."""
    tree = random_tree(rng, n)
    edges = set(tree.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return Graph(n, edges)
