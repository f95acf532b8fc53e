"""Exact dense matrix kernel over the integers, specialized to 0/1 matrices.

Everything here is integer arithmetic on small dense matrices: identities,
all-ones blocks, complements, Kronecker products, circulants and block
assembly.  No floating point anywhere; products are overflow-guarded.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TextIO, Union

import numpy as np

# int64 headroom: a product entry is bounded by max|a| * max|b| * inner_dim.
_OVERFLOW_LIMIT = 2**62


class InvalidDimensionError(ValueError):
    """A matrix dimension is zero or otherwise unusable."""


class ShapeMismatchError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class MatrixParseError(ValueError):
    """A matrix file does not conform to the plain-text format."""


def _as_array(entries) -> np.ndarray:
    a = np.array(entries, dtype=np.int64)
    if a.ndim != 2:
        raise InvalidDimensionError(f"expected a 2-d grid, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidDimensionError(f"matrix dimensions must be >= 1, got {a.shape}")
    return a


class IntMatrix:
    """Dense integer matrix with exact (overflow-checked) arithmetic."""

    __slots__ = ("data",)

    def __init__(self, entries):
        a = _as_array(entries)
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}({self.data.tolist()!r})"


class BinaryMatrix(IntMatrix):
    """Dense 0/1 matrix; the incidence-matrix workhorse."""

    __slots__ = ()

    def __init__(self, entries):
        super().__init__(entries)
        bad = (self.data != 0) & (self.data != 1)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise ValueError(
                f"entry ({i},{j}) = {self.data[i, j]} is not 0/1"
            )


Matrix = Union[BinaryMatrix, IntMatrix]


def identity(n: int) -> BinaryMatrix:
    if n < 1:
        raise InvalidDimensionError(f"identity order must be >= 1, got {n}")
    return BinaryMatrix(np.eye(n, dtype=np.int64))


def ones(t: int, u: int) -> BinaryMatrix:
    if t < 1 or u < 1:
        raise InvalidDimensionError(f"ones dimensions must be >= 1, got {t}x{u}")
    return BinaryMatrix(np.ones((t, u), dtype=np.int64))


def zeros(t: int, u: int) -> BinaryMatrix:
    if t < 1 or u < 1:
        raise InvalidDimensionError(f"zeros dimensions must be >= 1, got {t}x{u}")
    return BinaryMatrix(np.zeros((t, u), dtype=np.int64))


def complement(a: BinaryMatrix) -> BinaryMatrix:
    """Entrywise 1 - a  (J - A for the all-ones matrix J)."""
    return BinaryMatrix(1 - a.data)


def transpose(a: Matrix) -> Matrix:
    return type(a)(a.data.T)


def add(a: Matrix, b: Matrix) -> IntMatrix:
    if a.data.shape != b.data.shape:
        raise ShapeMismatchError(f"cannot add {a.data.shape} and {b.data.shape}")
    return IntMatrix(a.data + b.data)


def scale(c: int, a: Matrix) -> IntMatrix:
    return IntMatrix(int(c) * a.data)


def matmul(a: Matrix, b: Matrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ShapeMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    bound = int(np.abs(a.data).max(initial=0)) * int(np.abs(b.data).max(initial=0))
    if bound * a.cols >= _OVERFLOW_LIMIT:
        raise OverflowError("matrix product would exceed exact int64 range")
    return IntMatrix(a.data @ b.data)


def gram(a: Matrix) -> IntMatrix:
    """N N^T, the concurrence matrix of an incidence matrix."""
    return matmul(a, transpose(a))


def kronecker(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(np.kron(a.data, b.data))


def circulant(first_row: Sequence[int]) -> BinaryMatrix:
    """Circulant with each row the first row cyclically right-shifted once more."""
    if len(first_row) == 0:
        raise InvalidDimensionError("circulant first row must be non-empty")
    n = len(first_row)
    row = np.array(first_row, dtype=np.int64)
    return BinaryMatrix(np.stack([np.roll(row, i) for i in range(n)]))


def basic_circulant(n: int) -> BinaryMatrix:
    """circ(0,1,0,...,0): the order-n cyclic shift with alpha^n = I."""
    if n < 1:
        raise InvalidDimensionError(f"order must be >= 1, got {n}")
    first = [0] * n
    if n > 1:
        first[1] = 1
    else:
        first[0] = 1
    return circulant(first)


def block_grid(blocks: Sequence[Sequence[Matrix]]) -> BinaryMatrix:
    """Assemble a grid of blocks into one matrix; blocks must tile cleanly."""
    if not blocks or not blocks[0]:
        raise InvalidDimensionError("block grid must be non-empty")
    ncols = len(blocks[0])
    for gi, grow in enumerate(blocks):
        if len(grow) != ncols:
            raise ShapeMismatchError(f"grid row {gi} has {len(grow)} blocks, expected {ncols}")
        h = grow[0].rows
        if any(blk.rows != h for blk in grow):
            raise ShapeMismatchError(f"blocks in grid row {gi} differ in height")
    for gj in range(ncols):
        w = blocks[0][gj].cols
        if any(grow[gj].cols != w for grow in blocks):
            raise ShapeMismatchError(f"blocks in grid column {gj} differ in width")
    return BinaryMatrix(np.block([[blk.data for blk in grow] for grow in blocks]))


def block_circulant(blocks: Sequence[BinaryMatrix]) -> BinaryMatrix:
    """circ(A_1, ..., A_t): grid row i is the block list cycled left i places."""
    if not blocks:
        raise InvalidDimensionError("block list must be non-empty")
    n = blocks[0].rows
    for blk in blocks:
        if blk.rows != blk.cols or blk.rows != n:
            raise ShapeMismatchError("block_circulant needs square blocks of one order")
    t = len(blocks)
    grid = [[blocks[(i + j) % t] for j in range(t)] for i in range(t)]
    return block_grid(grid)


def row_sums(a: Matrix) -> list[int]:
    return [int(s) for s in a.data.sum(axis=1)]


def col_sums(a: Matrix) -> list[int]:
    return [int(s) for s in a.data.sum(axis=0)]


def permute_rows(a: Matrix, perm: Sequence[int]) -> Matrix:
    """Row i of the result is row perm[i] of the input."""
    if sorted(perm) != list(range(a.rows)):
        raise ShapeMismatchError("perm is not a permutation of the row indices")
    return type(a)(a.data[list(perm), :])


def submatrix_rows(a: Matrix, keep: Sequence[int]) -> Matrix:
    return type(a)(a.data[list(keep), :])


def submatrix_cols(a: Matrix, keep: Sequence[int]) -> Matrix:
    return type(a)(a.data[:, list(keep)])


# -- plain-text format: "<rows> <cols>" then rows of 0/1 characters -----------

def write_matrix(a: BinaryMatrix, fh: TextIO) -> None:
    fh.write(f"{a.rows} {a.cols}\n")
    for i in range(a.rows):
        fh.write("".join(str(int(x)) for x in a.data[i]))
        fh.write("\n")


def read_matrix(fh: TextIO) -> BinaryMatrix:
    header = fh.readline()
    parts = header.split()
    if len(parts) != 2:
        raise MatrixParseError(f"bad matrix header: {header!r}")
    try:
        rows, cols = int(parts[0]), int(parts[1])
    except ValueError:
        raise MatrixParseError(f"bad matrix header: {header!r}") from None
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"bad matrix dimensions {rows}x{cols}")
    grid = []
    for i in range(rows):
        line = fh.readline()
        if not line.endswith("\n"):
            raise MatrixParseError(f"matrix row {i + 1} missing trailing newline")
        line = line[:-1]
        if len(line) != cols:
            raise MatrixParseError(
                f"matrix row {i + 1} has {len(line)} characters, expected {cols}"
            )
        row = []
        for ch in line:
            if ch == "0":
                row.append(0)
            elif ch == "1":
                row.append(1)
            else:
                raise MatrixParseError(f"invalid character {ch!r} in matrix row {i + 1}")
        grid.append(row)
    return BinaryMatrix(grid)
