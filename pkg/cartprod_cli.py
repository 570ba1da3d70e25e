import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

# Import the library surface from the cartprod package
from cartprod import (
    # Config and errors
    CartprodError,
    Dims,
    init_config,
    # Graph layer
    distance_cartesian_check,
    distance_matrix,
    graph_cartesian_product,
    inertia,
    is_transmission_regular,
    jacobi_eigenvalues,
    transmissions,
    wiener_index,
    # Matrices
    cartesian_factorize,
    # Formats
    format_edge_list,
    load_graph,
    load_matrix,
    matrix_to_json,
    parse_edge_list,
    parse_matrix_text,
    # Verification
    SUITE_REGISTRY,
    run_suites,
)
from cartprod.defaults import MAX_ORDER_LIMIT
from cartprod.display import set_quiet, show_error, show_report_line, show_status
from cartprod.parsing import read_text
from cartprod.registry import ALL_SUITES

STATUS_OK = "ok"
STATUS_VERIFICATION_FAILED = "verification_failed"
STATUS_NOT_A_PRODUCT = "not_a_cartesian_product"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SEED_LIMIT = 2 ** 64


@dataclass
class CommandResult:
    exit_code: int
    payload: Dict[str, Any]

    def __post_init__(self) -> None:
        ok = self.payload.get("status") == STATUS_OK
        if ok != (self.exit_code == EXIT_OK):
            raise ValueError(f"exit code {self.exit_code} does not match status {self.payload.get('status')!r}")


def _ok(**payload) -> CommandResult:
    return CommandResult(EXIT_OK, {"status": STATUS_OK, **payload})


def run_invariants(graph_path: str) -> CommandResult:
    G = load_graph(graph_path)
    D = distance_matrix(G)
    spectrum = jacobi_eigenvalues(D)
    show_status(f"Graph with {G.vertex_count} vertices, {len(G.edges)} edges")
    return _ok(
        vertices=G.vertex_count,
        edges=len(G.edges),
        wiener=wiener_index(G),
        transmissions=transmissions(G),
        transmission_regular=is_transmission_regular(G),
        rho=spectrum.largest,
        inertia=list(inertia(D)),
    )


def run_product(g1_path: str, g2_path: str, emit: str = "both") -> CommandResult:
    G1, G2 = load_graph(g1_path), load_graph(g2_path)
    product = graph_cartesian_product(G1, G2)
    payload: Dict[str, Any] = {"vertices": product.vertex_count, "edges": len(product.edges)}
    if emit in ("graph", "both"):
        payload["graph"] = format_edge_list(product)
    if emit in ("dist", "both"):
        payload["distance_matrix"] = matrix_to_json(distance_matrix(product))
    holds = distance_cartesian_check(G1, G2)
    payload["cartesian_identity_holds"] = holds
    show_status(f"D(G1 x G2) = D(G1) (/) D(G2): {holds}", ok=holds)
    return _ok(**payload)


def run_factorize(matrix_path: str, m: int, n: int) -> CommandResult:
    M = load_matrix(matrix_path)
    result = cartesian_factorize(M, Dims(m, n))
    if result is None:
        show_status(f"Matrix is not a Cartesian product of orders {m} and {n}", ok=False)
        return CommandResult(EXIT_FAILED, {"status": STATUS_NOT_A_PRODUCT, "split": [m, n]})
    A, B = result
    return _ok(split=[m, n], A=matrix_to_json(A), B=matrix_to_json(B))


def run_spectrum(path: str, tol: Optional[float] = None) -> CommandResult:
    """Spectrum of a Matrix JSON file, or of a graph's distance matrix for edge-list input."""
    text = read_text(path)
    if text.lstrip().startswith("{"):
        M, source = parse_matrix_text(text), "matrix"
    else:
        M, source = distance_matrix(parse_edge_list(text)), "graph"
    spectrum = jacobi_eigenvalues(M, tol)
    show_status(f"Converged after {spectrum.sweeps} sweeps")
    return _ok(
        source=source,
        order=M.rows,
        **spectrum.to_dict(),
        inertia=list(inertia(M)),
    )


def run_verify(suite: str = ALL_SUITES, trials: int = 100, seed: int = 0, max_order: int = 3) -> CommandResult:
    reports = run_suites(suite, trials, seed, max_order)
    failures = 0
    for report in reports:
        show_report_line(report.to_dict())
        failures += report.failures
    status = STATUS_OK if failures == 0 else STATUS_VERIFICATION_FAILED
    payload = {
        "status": status,
        "seed": seed,
        "trials": trials,
        "max_order": max_order,
        "failures": failures,
        "reports": [r.to_dict() for r in reports],
    }
    return CommandResult(EXIT_OK if failures == 0 else EXIT_FAILED, payload)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}") from None
    if not 0 <= value < SEED_LIMIT:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {value}")
    return value


def _max_order(text: str) -> int:
    value = _positive_int(text)
    if value > MAX_ORDER_LIMIT:
        raise argparse.ArgumentTypeError(f"max order must be in [1, {MAX_ORDER_LIMIT}], got {value}")
    return value


def _split(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected m,n, got {text!r}")
    return _positive_int(parts[0].strip()), _positive_int(parts[1].strip())


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive tolerance, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartprod",
        description="Cartesian products of matrices and graph distance invariants",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exit codes:
  0  success, every checked identity holds
  1  verification failure, or the matrix is not a Cartesian product
  2  usage or input error (nothing is written to standard output)

Graphs use the edge-list format ("p <n>", then "e <u> <v>" with 1-based
vertices); matrices use Matrix JSON.
        """
    )
    parser.add_argument(
        "--quiet", "-q",
        action="store_true",
        help="Suppress status lines on standard error (errors are still shown)"
    )
    parser.add_argument(
        "--capacity",
        type=_positive_int,
        default=None,
        help="Maximum entry count of any constructed matrix (overrides CARTPROD_CAPACITY)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Wiener index, transmissions, rho and inertia of a graph")
    p.add_argument("graph", help="Edge-list file")

    p = sub.add_parser("product", help="Cartesian product of two graphs")
    p.add_argument("g1", help="Edge-list file of the first factor")
    p.add_argument("g2", help="Edge-list file of the second factor")
    p.add_argument("--emit", choices=["graph", "dist", "both"], default="both",
                   help="Emit the product graph, its distance matrix, or both")

    p = sub.add_parser("factorize", help="Split a matrix into Cartesian factors")
    p.add_argument("matrix", help="Matrix JSON file")
    p.add_argument("--split", type=_split, required=True, help="Factor orders as m,n")

    p = sub.add_parser("spectrum", help="Jacobi eigenvalues of a graph's distance matrix or a matrix")
    p.add_argument("path", help="Edge-list or Matrix JSON file")
    p.add_argument("--tol", type=_positive_float, default=None, help="Jacobi convergence tolerance")

    p = sub.add_parser("verify", help="Seeded randomized verification of every identity")
    p.add_argument("--suite", default=ALL_SUITES,
                   help=f"Suite name or '{ALL_SUITES}' ({', '.join(SUITE_REGISTRY)})")
    p.add_argument("--trials", type=_positive_int, default=100, help="Trials per suite")
    p.add_argument("--seed", type=_seed, default=0, help="64-bit unsigned seed")
    p.add_argument("--max-order", type=_max_order, default=3, help=f"Largest factor order (1..{MAX_ORDER_LIMIT})")
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    if args.command == "invariants":
        return run_invariants(args.graph)
    elif args.command == "product":
        return run_product(args.g1, args.g2, args.emit)
    elif args.command == "factorize":
        m, n = args.split
        return run_factorize(args.matrix, m, n)
    elif args.command == "spectrum":
        return run_spectrum(args.path, args.tol)
    elif args.command == "verify":
        return run_verify(args.suite, args.trials, args.seed, args.max_order)
    raise CartprodError(f"no handler for command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_quiet(args.quiet)
    try:
        init_config(capacity=args.capacity)
        result = dispatch(args)
    except (CartprodError, OSError) as e:
        show_error(str(e))
        return EXIT_USAGE
    print(json.dumps(result.payload, indent=2))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
