"""Simple undirected graphs, their distance matrices and Cartesian products.

Vertices are 0-based indices. The Cartesian product G □ H numbers vertex
(u, u') as u * |V(H)| + u', the same G-major order as the blocks of the matrix
product, so D(G □ H) = D(G) (/) D(H) holds entry by entry.
"""
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import ConnectivityError, DimensionError, GraphError
from .identities import constant_row_sum
from .matrix import Matrix
from .products import cartesian, entry_sum, row_sums
from .spectral import InertiaTriple, inertia, jacobi_eigenvalues

Edge = Tuple[int, int]

# Slack for the spectral-radius bounds and tightness
BOUND_SLACK = 1e-9
TIGHTNESS_TOL = 1e-7


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: FrozenSet[Edge]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise GraphError(f"a graph needs at least one vertex, got {self.vertex_count}")
        normalized = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            edge = (min(u, v), max(u, v))
            if edge in normalized:
                raise GraphError(f"duplicate edge {edge}")
            normalized.add(edge)
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.vertex_count:
                raise GraphError(f"expected {self.vertex_count} labels, got {len(labels)}")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge], labels: Optional[Sequence[str]] = None) -> "Graph":
        edge_list = [tuple(e) for e in edges]
        return cls(vertex_count, edge_list, tuple(labels) if labels is not None else None)

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """Relabel the nodes of a networkx graph to 0..n-1 in sorted order."""
        nodes = sorted(G.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in G.edges()], tuple(str(n) for n in nodes))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.vertex_count))
        G.add_edges_from(self.edges)
        return G

    def adjacency(self) -> List[List[int]]:
        neighbors: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        for row in neighbors:
            row.sort()
        return neighbors

    @property
    def last_vertex(self) -> int:
        return self.vertex_count - 1

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


# Named graphs

def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


# Distances

def bfs_distances(G: Graph, source: int) -> List[Optional[int]]:
    """Hop counts from source; None for unreachable vertices."""
    neighbors = G.adjacency()
    dist: List[Optional[int]] = [None] * G.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in neighbors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(G: Graph) -> bool:
    return all(d is not None for d in bfs_distances(G, 0))


def distance_matrix(G: Graph) -> Matrix:
    """D(G), the exact matrix of shortest-path lengths of a connected graph."""
    rows = []
    for source in range(G.vertex_count):
        dist = bfs_distances(G, source)
        if any(d is None for d in dist):
            missing = dist.index(None)
            raise ConnectivityError(f"vertex {missing} is unreachable from vertex {source}")
        rows.append(dist)
    return Matrix.from_rows(rows)


# Constructions

def graph_cartesian_product(G: Graph, H: Graph) -> Graph:
    """G □ H with vertex (u, u') numbered u * |V(H)| + u'."""
    m, n = G.vertex_count, H.vertex_count
    edges = []
    for u in range(m):
        edges.extend((u * n + a, u * n + b) for a, b in H.edges)
    for a, b in G.edges:
        edges.extend((a * n + w, b * n + w) for w in range(n))
    labels = None
    if G.labels is not None and H.labels is not None:
        labels = tuple(f"({g},{h})" for g in G.labels for h in H.labels)
    return Graph(m * n, edges, labels)


def vertex_identification(G: Graph, u: int, H: Graph, v: int) -> Graph:
    """Gu*Hv: glue vertex v of H onto vertex u of G.

    G keeps its numbering; the remaining vertices of H follow in their
    original order.
    """
    if not 0 <= u < G.vertex_count:
        raise DimensionError(f"vertex {u} is not in G (order {G.vertex_count})")
    if not 0 <= v < H.vertex_count:
        raise DimensionError(f"vertex {v} is not in H (order {H.vertex_count})")
    offset = G.vertex_count

    def relabel(w: int) -> int:
        if w == v:
            return u
        return offset + (w if w < v else w - 1)

    edges = list(G.edges) + [(relabel(a), relabel(b)) for a, b in H.edges]
    labels = None
    if G.labels is not None and H.labels is not None:
        labels = G.labels + tuple(label for w, label in enumerate(H.labels) if w != v)
    return Graph(G.vertex_count + H.vertex_count - 1, edges, labels)


# Distance invariants

def wiener_index(G: Graph) -> int:
    """W(G) = S_D(G) / 2."""
    return int(entry_sum(distance_matrix(G))) // 2


def transmissions(G: Graph) -> List[int]:
    return [int(s) for s in row_sums(distance_matrix(G))]


def is_transmission_regular(G: Graph) -> bool:
    return constant_row_sum(distance_matrix(G)) is not None


def distance_spectral_radius(G: Graph) -> float:
    return jacobi_eigenvalues(distance_matrix(G)).largest


def wiener_product_closed_form(G1: Graph, G2: Graph) -> int:
    """W(G1 □ G2) = n^2 W(G1) + m^2 W(G2)."""
    m, n = G1.vertex_count, G2.vertex_count
    return n * n * wiener_index(G1) + m * m * wiener_index(G2)


def spectral_radius_lower_bound(G1: Graph, G2: Graph) -> float:
    """(n/m) W(G1) + (m/n) W(G2)."""
    m, n = G1.vertex_count, G2.vertex_count
    return (n / m) * wiener_index(G1) + (m / n) * wiener_index(G2)


def spectral_radius_row_sum_bound(G1: Graph, G2: Graph) -> float:
    """Average row sum of D(G1 □ G2): 2(n/m) W(G1) + 2(m/n) W(G2)."""
    return 2.0 * spectral_radius_lower_bound(G1, G2)


@dataclass(frozen=True)
class SpectralBoundCheck:
    rho: float
    stated_bound: float
    row_sum_bound: float
    both_regular: bool
    stated_holds: bool
    row_sum_holds: bool
    row_sum_tight: bool

    @property
    def holds(self) -> bool:
        """Both bounds hold, and the row-sum bound is attained whenever both factors are transmission regular."""
        return self.stated_holds and self.row_sum_holds and (self.row_sum_tight or not self.both_regular)

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "stated_bound": self.stated_bound,
            "row_sum_bound": self.row_sum_bound,
            "both_regular": self.both_regular,
            "stated_holds": self.stated_holds,
            "row_sum_holds": self.row_sum_holds,
            "row_sum_tight": self.row_sum_tight,
            "holds": self.holds,
        }


def spectral_radius_bound_check(G1: Graph, G2: Graph) -> SpectralBoundCheck:
    rho = distance_spectral_radius(graph_cartesian_product(G1, G2))
    stated = spectral_radius_lower_bound(G1, G2)
    row_sum = 2.0 * stated
    return SpectralBoundCheck(
        rho=rho,
        stated_bound=stated,
        row_sum_bound=row_sum,
        both_regular=is_transmission_regular(G1) and is_transmission_regular(G2),
        stated_holds=rho >= stated - BOUND_SLACK,
        row_sum_holds=rho >= row_sum - BOUND_SLACK,
        row_sum_tight=abs(rho - row_sum) <= TIGHTNESS_TOL,
    )


# Checks tying graph products to matrix products

def distance_cartesian_check(G1: Graph, G2: Graph) -> bool:
    """True iff D(G1 □ G2) equals D(G1) (/) D(G2) exactly."""
    lhs = distance_matrix(graph_cartesian_product(G1, G2))
    rhs = cartesian(distance_matrix(G1), distance_matrix(G2))
    return lhs.equals(rhs)


def inertia_product_check(
    G: Graph, H: Graph, u: Optional[int] = None, v: Optional[int] = None
) -> Tuple[InertiaTriple, InertiaTriple]:
    """
    Inertia of D(G □ H) and the prediction
    (n+(Gu*Hv), (m-1)(n-1) + n0(Gu*Hv), n-(Gu*Hv)).

    u and v default to the last vertex of each graph.
    """
    u = G.last_vertex if u is None else u
    v = H.last_vertex if v is None else v
    m, n = G.vertex_count, H.vertex_count
    actual = inertia(distance_matrix(graph_cartesian_product(G, H)))
    glued = inertia(distance_matrix(vertex_identification(G, u, H, v)))
    predicted = InertiaTriple(glued.n_plus, (m - 1) * (n - 1) + glued.n_zero, glued.n_minus)
    return actual, predicted


def wiener_monotonicity_check(H: Graph, G1: Graph, G2: Graph) -> bool:
    """
    For G1, G2 of equal order: W(G1) >= W(G2) implies W(H □ G1) >= W(H □ G2),
    with equality exactly when W(G1) = W(G2). Product values come from the
    closed form and are cross-checked against the built products.
    """
    if G1.vertex_count != G2.vertex_count:
        raise DimensionError(f"G1 and G2 must have the same order, got {G1.vertex_count} and {G2.vertex_count}")
    w1, w2 = wiener_index(G1), wiener_index(G2)
    p1, p2 = wiener_product_closed_form(H, G1), wiener_product_closed_form(H, G2)
    if p1 != wiener_index(graph_cartesian_product(H, G1)):
        return False
    if p2 != wiener_index(graph_cartesian_product(H, G2)):
        return False
    if w1 >= w2 and p1 < p2:
        return False
    if w2 >= w1 and p2 < p1:
        return False
    return (p1 == p2) == (w1 == w2)
