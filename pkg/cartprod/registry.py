"""Suite registry and trial execution logic."""
import inspect
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from .config import get_config
from .errors import UnknownSuiteError
from .generators import trial_rng
from .matrix import Matrix
from .parsing import matrix_to_json
from .scalar import Scalar
from .suites import (
    TrialOutcome,
    all_ones_eigenvector_trial,
    associativity_trial,
    cartesian_definition_trial,
    commutation_shift_trial,
    constant_row_sum_trial,
    diagonal_trial,
    distributivity_trial,
    entry_sum_cartesian_trial,
    entry_sum_kron_trial,
    equality_shift_trial,
    factorization_trial,
    hadamard_identity_trial,
    kron_transpose_trial,
    mixed_product_trial,
    permutation_similarity_trial,
    product_identity_trial,
    scalar_pullout_trial,
    scalar_remarks_trial,
    skew_symmetry_trial,
    sum_cartesian_trial,
    symmetry_trial,
    trace_cartesian_of_kron_groups_trial,
    trace_cartesian_trial,
    trace_kron_of_cartesian_groups_trial,
    trace_kron_trial,
    trace_kron_with_cartesian_trial,
    trace_pair_trial,
    trace_plus_minus_trial,
    trace_power_trial,
    transpose_trial,
)

SuiteFn = Callable[[Any, int], TrialOutcome]

ALL_SUITES = "all"

# Registry of all verification suites, in reporting order
SUITE_REGISTRY: Dict[str, SuiteFn] = {
    "cartesian_definition": cartesian_definition_trial,
    "associativity": associativity_trial,
    "mixed_product": mixed_product_trial,
    "trace_kron": trace_kron_trial,
    "kron_transpose": kron_transpose_trial,
    "scalar_pullout": scalar_pullout_trial,
    "entry_sum_kron": entry_sum_kron_trial,
    "permutation_similarity": permutation_similarity_trial,
    "trace_pair": trace_pair_trial,
    "trace_cartesian": trace_cartesian_trial,
    "trace_power": trace_power_trial,
    "trace_plus_minus": trace_plus_minus_trial,
    "trace_kron_with_cartesian": trace_kron_with_cartesian_trial,
    "trace_kron_of_cartesian_groups": trace_kron_of_cartesian_groups_trial,
    "trace_cartesian_of_kron_groups": trace_cartesian_of_kron_groups_trial,
    "entry_sum_cartesian": entry_sum_cartesian_trial,
    "product_identity": product_identity_trial,
    "hadamard_identity": hadamard_identity_trial,
    "distributivity": distributivity_trial,
    "sum_cartesian": sum_cartesian_trial,
    "transpose": transpose_trial,
    "scalar_remarks": scalar_remarks_trial,
    "symmetry": symmetry_trial,
    "skew_symmetry": skew_symmetry_trial,
    "diagonal": diagonal_trial,
    "equality_shift": equality_shift_trial,
    "commutation_shift": commutation_shift_trial,
    "constant_row_sum": constant_row_sum_trial,
    "all_ones_eigenvector": all_ones_eigenvector_trial,
    "factorization": factorization_trial,
}


def get_suite_str_representation(name: str) -> str:
    """One line naming a suite and the identity it checks."""
    suite = SUITE_REGISTRY[name]
    doc = inspect.getdoc(suite) or "No description"
    return f"{name}: {doc.splitlines()[0]}"


def resolve_suites(name: str) -> List[str]:
    if name == ALL_SUITES:
        return list(SUITE_REGISTRY)
    if name not in SUITE_REGISTRY:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose one of {', '.join(SUITE_REGISTRY)} or {ALL_SUITES}")
    return [name]


def serialize_input(value: Any) -> Any:
    """JSON-ready form of a trial input."""
    if isinstance(value, Matrix):
        return matrix_to_json(value)
    if isinstance(value, Scalar):
        return value.to_pair()
    if isinstance(value, (list, tuple)):
        return [serialize_input(v) for v in value]
    return value


@dataclass
class VerifyReport:
    """Outcome of one seeded verification campaign."""
    suite: str
    trials: int
    seed: int
    failures: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)

    def record(self, failure: Dict[str, Any]) -> None:
        self.failures += 1
        self.counterexamples.append(failure)
        self.counterexamples.sort(key=lambda c: c["trial"])
        del self.counterexamples[get_config().counterexample_cap:]

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
            "counterexamples": list(self.counterexamples),
        }


def execute_trial(name: str, seed: int, trial: int, max_order: int) -> Dict[str, Any]:
    """Run one trial; a raised error counts as a failure rather than aborting the campaign."""
    suite = SUITE_REGISTRY[name]
    rng = trial_rng(seed, name, trial)
    try:
        outcome = suite(rng, max_order)
    except Exception as e:
        return {"trial": trial, "passed": False, "detail": f"{type(e).__name__}: {e}", "inputs": {}}
    result: Dict[str, Any] = {"trial": trial, "passed": outcome.passed}
    if not outcome.passed:
        result["detail"] = outcome.detail
        result["inputs"] = {k: serialize_input(v) for k, v in outcome.inputs.items()}
    return result


def run_suite(name: str, trials: int, seed: int, max_order: int) -> VerifyReport:
    if name not in SUITE_REGISTRY:
        raise UnknownSuiteError(f"unknown suite {name!r}")
    report = VerifyReport(suite=name, trials=trials, seed=seed)
    for trial in range(trials):
        result = execute_trial(name, seed, trial, max_order)
        if not result.pop("passed"):
            report.record(result)
    return report


def run_suites(name: str, trials: int, seed: int, max_order: int) -> List[VerifyReport]:
    """Run one named suite, or every registered suite for "all"."""
    return [run_suite(s, trials, seed, max_order) for s in resolve_suites(name)]
