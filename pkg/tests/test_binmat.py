import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rectdesign import binmat
from rectdesign.binmat import (
    BinaryMatrix,
    IntMatrix,
    InvalidDimensionError,
    MatrixParseError,
    ShapeMismatchError,
)


def small_binary(rows=5, cols=5):
    return st.integers(1, rows).flatmap(
        lambda r: st.integers(1, cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, 1), min_size=c, max_size=c),
                min_size=r, max_size=r,
            )
        )
    ).map(BinaryMatrix)


class TestConstruction:
    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            BinaryMatrix([[0, 2], [1, 0]])

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            BinaryMatrix([[0, 1], [1]])

    def test_identity(self):
        i3 = binmat.identity(3)
        assert (i3.data == np.eye(3, dtype=np.int64)).all()

    def test_identity_rejects_zero(self):
        with pytest.raises(InvalidDimensionError):
            binmat.identity(0)

    def test_equality_and_hash(self):
        a = BinaryMatrix([[1, 0], [0, 1]])
        assert a == binmat.identity(2)
        assert hash(a) == hash(binmat.identity(2))
        assert a != binmat.ones(2, 2)

    def test_immutable(self):
        a = binmat.identity(2)
        with pytest.raises(ValueError):
            a.data[0, 0] = 0


class TestArithmetic:
    def test_add_shapes(self):
        with pytest.raises(ShapeMismatchError):
            binmat.add(binmat.identity(2), binmat.identity(3))

    def test_matmul_counts_incidences(self):
        a = BinaryMatrix([[1, 1, 0], [0, 1, 1]])
        g = binmat.gram(a)
        assert g.data.tolist() == [[2, 1], [1, 2]]

    def test_complement(self):
        a = binmat.identity(2)
        assert binmat.complement(a).data.tolist() == [[0, 1], [1, 0]]

    @given(small_binary())
    @settings(max_examples=50, deadline=None)
    def test_complement_involution(self, a):
        assert binmat.complement(binmat.complement(a)) == a

    @given(small_binary(), small_binary())
    @settings(max_examples=50, deadline=None)
    def test_transpose_of_product(self, a, b):
        """(AB)^T = B^T A^T on arbitrary 0/1 matrices."""
        if a.cols != b.rows:
            b = binmat.transpose(b)
            if a.cols != b.rows:
                return
        left = binmat.transpose(binmat.matmul(a, b))
        right = binmat.matmul(binmat.transpose(b), binmat.transpose(a))
        assert left == right

    def test_kronecker_mixed_product(self):
        a = BinaryMatrix([[1, 0], [1, 1]])
        b = BinaryMatrix([[0, 1], [1, 0]])
        left = binmat.matmul(binmat.kronecker(a, b), binmat.kronecker(a, b))
        right_data = np.kron(
            binmat.matmul(a, a).data, binmat.matmul(b, b).data
        )
        assert (left.data == right_data).all()


class TestCirculants:
    def test_circulant_shifts_right(self):
        c = binmat.circulant([0, 1, 0, 0])
        assert c.data.tolist() == [
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
        ]

    def test_basic_circulant_powers_cycle(self):
        c = binmat.basic_circulant(5)
        acc = binmat.identity(5)
        for _ in range(5):
            acc = BinaryMatrix(binmat.matmul(acc, c).data)
        assert acc == binmat.identity(5)

    def test_block_circulant_layout(self):
        a = binmat.ones(1, 1)
        b = binmat.zeros(1, 1)
        m = binmat.block_circulant([a, b, b])
        assert m.data.tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]

    def test_block_grid_ragged_rejected(self):
        with pytest.raises(ShapeMismatchError):
            binmat.block_grid([[binmat.identity(2), binmat.identity(3)]])


class TestSubsetting:
    def test_permute_rows(self):
        a = BinaryMatrix([[1, 0], [0, 1], [1, 1]])
        p = binmat.permute_rows(a, [2, 0, 1])
        assert p.data.tolist() == [[1, 1], [1, 0], [0, 1]]

    def test_submatrix_rows_cols(self):
        a = BinaryMatrix([[1, 0, 1], [0, 1, 1]])
        assert binmat.submatrix_rows(a, [1]).data.tolist() == [[0, 1, 1]]
        assert binmat.submatrix_cols(a, [0, 2]).data.tolist() == [[1, 1], [0, 1]]

    def test_row_col_sums(self):
        a = BinaryMatrix([[1, 0, 1], [0, 1, 1]])
        assert binmat.row_sums(a) == [2, 2]
        assert binmat.col_sums(a) == [1, 1, 2]


class TestFileFormat:
    def test_round_trip(self):
        a = BinaryMatrix([[1, 0, 1], [0, 1, 1]])
        buf = io.StringIO()
        binmat.write_matrix(a, buf)
        assert binmat.read_matrix(io.StringIO(buf.getvalue())) == a

    def test_format_shape(self):
        buf = io.StringIO()
        binmat.write_matrix(binmat.identity(2), buf)
        assert buf.getvalue() == "2 2\n10\n01\n"

    @pytest.mark.parametrize("text", [
        "",                       # no header
        "2 2\n10\n",              # missing row
        "2 2\n10\n011\n",         # row too long
        "2 2\n10\n0a\n",          # non-binary character
        "x 2\n10\n01\n",          # bad header
    ])
    def test_parse_errors(self, text):
        with pytest.raises(MatrixParseError):
            binmat.read_matrix(io.StringIO(text))

    @given(small_binary())
    @settings(max_examples=30, deadline=None)
    def test_round_trip_arbitrary(self, a):
        buf = io.StringIO()
        binmat.write_matrix(a, buf)
        assert binmat.read_matrix(io.StringIO(buf.getvalue())) == a


def test_overflow_guard():
    """Integer products that would wrap int64 must raise, not corrupt."""
    big = IntMatrix([[2**31]])
    with pytest.raises(OverflowError):
        binmat.matmul(binmat.matmul(big, big), big)
