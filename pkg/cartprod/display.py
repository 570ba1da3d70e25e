"""Display utilities: coloured diagnostics on standard error.

Standard output is reserved for JSON payloads, so everything here writes
to stderr.
"""
import sys
from typing import Any, Dict

# ANSI color codes for terminal output
INFO_COLOR = "\033[94m"
WARN_COLOR = "\033[93m"
ERROR_COLOR = "\033[91m"
SUCCESS_COLOR = "\033[92m"
RESET_COLOR = "\033[0m"

_quiet = False


def set_quiet(enabled: bool) -> None:
    """Suppress status lines (errors are always shown)."""
    global _quiet
    _quiet = enabled


def _emit(text: str) -> None:
    print(text, file=sys.stderr, flush=True)


def show_error(message: str) -> None:
    _emit(f"{ERROR_COLOR}✗ Error: {message}{RESET_COLOR}")


def show_status(message: str, ok: bool = True) -> None:
    if _quiet:
        return
    color = SUCCESS_COLOR if ok else WARN_COLOR
    _emit(f"{color}{message}{RESET_COLOR}")


def show_report_line(report: Dict[str, Any]) -> None:
    """
    Print a one-line summary of a verification report.

    Failures are printed even in quiet mode.
    """
    failures = report.get("failures", 0)
    trials = report.get("trials", 0)
    if failures:
        _emit(f"  {ERROR_COLOR}✗ {report['suite']}: {failures}/{trials} failed{RESET_COLOR}")
        for example in report.get("counterexamples", [])[:1]:
            detail = example.get("detail", "")
            _emit(f"    trial {example.get('trial')}: {detail[:200]}")
        return
    if not _quiet:
        _emit(f"  {SUCCESS_COLOR}✓ {report['suite']}: {trials} trials{RESET_COLOR}")
