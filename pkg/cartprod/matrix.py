"""Dense row-major matrices over exact or approximate scalars."""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np

from .config import get_config
from .errors import CapacityError, DimensionError, ModeError
from .scalar import Mode, Scalar

Entry = Union[Scalar, int, float, complex]


def ensure_capacity(rows: int, cols: int) -> None:
    """Raise CapacityError if a rows x cols result exceeds the configured cap."""
    count = rows * cols
    config = get_config()
    if not config.allows(count):
        raise CapacityError(
            f"{rows}x{cols} result has {count} entries, above the capacity of {config.capacity}"
        )


@dataclass(frozen=True)
class Dims:
    """Orders (m, n) of the left and right factor of a product of order m*n."""
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise DimensionError(f"factor orders must be positive, got ({self.m}, {self.n})")

    @property
    def order(self) -> int:
        return self.m * self.n


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; every entry shares the matrix mode."""
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]
    mode: Mode = Mode.EXACT

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if any(e.mode is not self.mode for e in self.entries):
            raise ModeError(f"all entries of a {self.mode.value} matrix must be {self.mode.value}")

    # Construction

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[Entry]) -> "Matrix":
        """Build a matrix, promoting to approx mode if any entry is approximate."""
        scalars = [Scalar.of(e) for e in entries]
        mode = Mode.EXACT
        for s in scalars:
            mode = Mode.join(mode, s.mode)
        if mode is Mode.APPROX:
            scalars = [s.to_approx() for s in scalars]
        return cls(rows, cols, tuple(scalars), mode)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "Matrix":
        if not rows or not rows[0]:
            raise DimensionError("rows must be a non-empty 2D list")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DimensionError("all rows must have the same length")
        return cls.from_entries(len(rows), width, [e for r in rows for e in r])

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], Entry]) -> "Matrix":
        """Build a matrix whose (i, j) entry is fn(i, j), 0-based."""
        ensure_capacity(rows, cols)
        return cls.from_entries(rows, cols, [fn(i, j) for i in range(rows) for j in range(cols)])

    # Access

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def order(self) -> int:
        """Order of a square matrix; DimensionError otherwise."""
        if not self.is_square:
            raise DimensionError(f"expected a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    # Comparison and conversion

    def equals(self, other: "Matrix", tol: float = 0.0) -> bool:
        """Entrywise equality; exact unless a positive tolerance is given."""
        if self.shape != other.shape:
            return False
        if tol == 0.0:
            return self.entries == other.entries
        return all(a.close_to(b, tol) for a, b in zip(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.equals(other)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(e.is_zero(tol) for e in self.entries)

    def max_abs(self) -> float:
        return max(e.magnitude() for e in self.entries)

    def to_approx(self) -> "Matrix":
        if self.mode is Mode.APPROX:
            return self
        return Matrix(self.rows, self.cols, tuple(e.to_approx() for e in self.entries), Mode.APPROX)

    def to_numpy(self) -> np.ndarray:
        """Float array if every imaginary part is zero, complex array otherwise."""
        if all(e.im == 0 for e in self.entries):
            data = [float(e.re) for e in self.entries]
            return np.array(data, dtype=np.float64).reshape(self.rows, self.cols)
        data = [e.to_complex() for e in self.entries]
        return np.array(data, dtype=np.complex128).reshape(self.rows, self.cols)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in self.row(i)) + "]" for i in range(self.rows)) + "]"
