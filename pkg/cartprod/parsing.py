"""Readers and writers for the Matrix JSON and edge-list formats."""
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Union

from .errors import CartprodError, GraphError, ParseError
from .graph import Graph
from .matrix import Matrix
from .scalar import Mode, Scalar


# Matrix JSON: {"rows": r, "cols": c, "mode": "exact"|"approx", "entries": [[re, im], ...]}

def matrix_to_json(M: Matrix) -> Dict[str, Any]:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "mode": M.mode.value,
        "entries": [e.to_pair() for e in M.entries],
    }


def _component(value: Any, mode: Mode, where: str) -> Union[int, float]:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {value!r}")
    if mode is Mode.APPROX or isinstance(value, float):
        try:
            value = float(value)
        except OverflowError:
            raise ParseError(f"{where}: entry is out of floating-point range") from None
        if not math.isfinite(value):
            raise ParseError(f"{where}: entries must be finite, got {value}")
    if mode is Mode.APPROX:
        return value
    if isinstance(value, float):
        if not value.is_integer():
            raise ParseError(f"{where}: exact entries must be integral, got {value}")
        return int(value)
    return value


def _entry(raw: Any, mode: Mode, index: int) -> Scalar:
    where = f"entry {index}"
    # Accept [re, im], [re] or a bare number
    if isinstance(raw, list):
        if not 1 <= len(raw) <= 2:
            raise ParseError(f"{where}: expected [re, im], got {raw!r}")
        re = _component(raw[0], mode, where)
        im = _component(raw[1], mode, where) if len(raw) == 2 else 0
    else:
        re, im = _component(raw, mode, where), 0
    try:
        return Scalar(re, im, mode)
    except CartprodError as e:
        raise ParseError(f"{where}: {e}") from None


def matrix_from_json(obj: Any) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError("matrix document must be a JSON object")
    missing = [k for k in ("rows", "cols", "entries") if k not in obj]
    if missing:
        raise ParseError(f"matrix document is missing {', '.join(missing)}")
    rows, cols, raw_entries = obj["rows"], obj["cols"], obj["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise ParseError(f"rows and cols must be positive integers, got {rows!r} and {cols!r}")
    try:
        mode = Mode(obj.get("mode", "exact"))
    except ValueError:
        raise ParseError(f"mode must be 'exact' or 'approx', got {obj.get('mode')!r}") from None
    if not isinstance(raw_entries, list) or len(raw_entries) != rows * cols:
        count = len(raw_entries) if isinstance(raw_entries, list) else "no"
        raise ParseError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {count}")
    entries = tuple(_entry(raw, mode, i) for i, raw in enumerate(raw_entries))
    return Matrix(rows, cols, entries, mode)


def parse_matrix_text(text: str) -> Matrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return matrix_from_json(obj)


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not valid UTF-8 text ({e.reason} at byte {e.start})") from None


def load_matrix(path: Union[str, Path]) -> Matrix:
    return parse_matrix_text(read_text(path))


# Edge lists: "p <n>" header, "e <u> <v>" edges (1-based), "c ..." comments

def parse_edge_list(text: str) -> Graph:
    vertex_count = None
    edges: List[tuple] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]

        if tag == "p":
            if vertex_count is not None:
                raise ParseError(f"line {lineno}: second 'p' line")
            # "p <n>" or DIMACS-style "p edge <n> <m>"
            numbers = [p for p in parts[1:] if p.lstrip("-").isdigit()]
            if not numbers:
                raise ParseError(f"line {lineno}: 'p' line needs a vertex count")
            vertex_count = int(numbers[0])
            if vertex_count < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
        elif tag == "e":
            if vertex_count is None:
                raise ParseError(f"line {lineno}: edge before the 'p' line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex indices must be integers") from None
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ParseError(f"line {lineno}: vertex index out of range 1..{vertex_count}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {tag!r}")

    if vertex_count is None:
        raise ParseError("missing 'p <n>' line")
    try:
        return Graph.from_edges(vertex_count, edges)
    except GraphError as e:
        raise ParseError(str(e)) from None


def format_edge_list(G: Graph) -> str:
    lines = [f"p {G.vertex_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path]) -> Graph:
    return parse_edge_list(read_text(path))
