import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pcm_sparsify.core.errors import (
    DimensionMismatchError,
    RankDeficientInputError,
    SameRowError,
)
from pcm_sparsify.core.matrix import (
    BinaryMatrix,
    RowBasis,
    energy,
    rank,
    require_full_rank,
    row_add,
    same_code,
    transition_delta,
)

from tests.helpers import H15_ROWS, bch63, kernel, random_full_rank


def test_example_energy(h15):
    """Test the 15-column example's ones count and row weights."""
    assert h15.shape == (8, 15)
    assert energy(h15) == 34
    assert h15.row_weights.tolist() == [6, 4, 4, 4, 4, 4, 4, 4]
    assert rank(h15) == 8


def test_row_add_example_move(h15):
    """Test adding row 1 into row 0 gives the 32-ones matrix."""
    assert transition_delta(h15, 1, 0) == -2
    assert h15.energy == 34  # preview does not mutate

    delta = row_add(h15, 1, 0)

    assert delta == -2
    assert h15.energy == 32
    assert "".join(str(b) for b in h15.to_dense()[0]) == "110100010000000"
    assert h15.recount() == 32


def test_row_add_is_involution(h15):
    """Test adding the same row twice restores the matrix."""
    original = h15.copy()
    h15.row_add(3, 5)
    h15.row_add(3, 5)
    assert h15 == original
    assert h15.energy == original.energy


def test_row_pair_errors(h15):
    """Test invalid row pairs."""
    with pytest.raises(SameRowError):
        h15.row_add(2, 2)
    with pytest.raises(SameRowError):
        transition_delta(h15, 4, 4)
    with pytest.raises(IndexError):
        h15.row_add(0, 8)


def test_shape_validation():
    """Test matrices need 1 <= m <= n and clean padding."""
    with pytest.raises(DimensionMismatchError):
        BinaryMatrix.from_dense(np.ones((3, 2), dtype=np.uint8))
    with pytest.raises(DimensionMismatchError):
        BinaryMatrix(np.zeros((2, 2), dtype=np.uint64), 10)
    with pytest.raises(DimensionMismatchError):
        BinaryMatrix(np.array([[1 << 10]], dtype=np.uint64), 10)


def test_dense_and_int_views_agree(rng):
    """Test the dense, int and index views describe the same bits."""
    dense = (rng.random((5, 130)) < 0.3).astype(np.uint8)
    H = BinaryMatrix.from_dense(dense)

    assert np.array_equal(H.to_dense(), dense)
    assert H.energy == int(dense.sum())
    for i in range(5):
        assert H.row_indices(i).tolist() == np.flatnonzero(dense[i]).tolist()
        assert H.row_int(i) == sum(1 << int(j) for j in np.flatnonzero(dense[i]))
    assert BinaryMatrix.from_row_ints(H.row_ints(), 130) == H


def test_copy_is_independent(h15):
    clone = h15.copy()
    clone.row_add(0, 1)
    assert clone != h15
    assert h15.energy == 34


def test_stack(h15):
    top = BinaryMatrix.from_strings(H15_ROWS[:3])
    bottom = BinaryMatrix.from_strings(H15_ROWS[3:])
    assert BinaryMatrix.stack(top, bottom) == h15


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(2, 12), extra=st.integers(0, 60))
def test_energy_cache_tracks_random_additions(seed, m, extra):
    """Test cached energy equals a fresh recount after any sequence of additions."""
    rng = np.random.default_rng(seed)
    H = BinaryMatrix.from_dense((rng.random((m, m + extra)) < 0.5).astype(np.uint8))
    for _ in range(50):
        i, j = rng.choice(m, size=2, replace=False)
        expected = H.energy + H.transition_delta(int(i), int(j))
        H.row_add(int(i), int(j))
        assert H.energy == expected
    assert H.energy == H.recount()
    assert H.row_weights.tolist() == H.to_dense().sum(axis=1).tolist()


def test_row_basis_operations():
    basis = RowBasis(8)
    assert basis.insert(0b1011)
    assert basis.insert(0b0110)
    assert not basis.insert(0b1101)  # 1011 ^ 0110
    assert basis.rank == 2
    assert basis.contains(0b1101)
    assert not basis.contains(0b0001)
    assert basis.reduce(0b1101) == 0


def test_same_code_under_row_operations(rng):
    """Test row additions keep the row space."""
    H = bch63(51)
    G = H.copy()
    for _ in range(200):
        i, j = rng.choice(H.rows, size=2, replace=False)
        G.row_add(int(i), int(j))
    assert same_code(H, G)
    assert rank(G) == H.rows


def test_same_code_detects_different_codes(h15):
    """Test a unit vector outside the cyclic code's dual changes the code."""
    other = BinaryMatrix.from_strings(H15_ROWS[:7] + ["000000000000001"])
    assert same_code(h15, h15.copy())
    assert rank(other) == 8
    assert not same_code(h15, other)
    assert not same_code(h15, BinaryMatrix.from_strings(H15_ROWS[:7]))


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(2, 12), extra=st.integers(0, 4))
def test_row_additions_keep_kernel(seed, m, extra):
    """Test 1000 random row additions leave the brute-force code unchanged."""
    rng = np.random.default_rng(seed)
    n = min(m + extra, 16)
    H = random_full_rank(rng, m, n)
    G = H.copy()
    for _ in range(1000):
        i, j = rng.choice(m, size=2, replace=False)
        G.row_add(int(i), int(j))

    assert np.array_equal(kernel(G), kernel(H))
    assert len(kernel(H)) == 2 ** (n - m)
    assert same_code(H, G)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 12), extra=st.integers(1, 4))
def test_row_outside_span_changes_kernel(seed, m, extra):
    """Test replacing a row by a vector outside the row space changes the code."""
    rng = np.random.default_rng(seed)
    n = min(m + extra, 16)
    H = random_full_rank(rng, m, n)
    basis = RowBasis.from_matrix(H)
    outside = next(v for v in (int(x) for x in rng.integers(1, 1 << n, size=256)) if not basis.contains(v))
    row = int(rng.integers(m))
    rows = H.row_ints()
    rows[row] = outside
    G = BinaryMatrix.from_row_ints(rows, n)

    assert rank(G) == m
    assert not np.array_equal(kernel(G), kernel(H))
    assert not same_code(H, G)


def test_same_code_dimension_mismatch(h15, rng):
    with pytest.raises(DimensionMismatchError):
        same_code(h15, random_full_rank(rng, 3, 16))


def test_require_full_rank_rejects_dependent_rows():
    H = BinaryMatrix.from_strings(["1100", "0110", "1010"])
    with pytest.raises(RankDeficientInputError):
        require_full_rank(H)


def test_bch_fixtures_are_full_rank():
    """Test the cyclic BCH builders give the expected shapes."""
    for k, ones_per_row in ((57, 32), (51, None), (45, None)):
        H = bch63(k)
        assert H.shape == (63 - k, 63)
        assert rank(H) == 63 - k
        if ones_per_row:
            assert set(H.row_weights.tolist()) == {ones_per_row}
