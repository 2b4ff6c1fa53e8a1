import numpy as np
from hypothesis import given, settings, strategies as st

from beibounds.rank_modp import rank_gf2, rank_modp


def test_identity_full_rank():
    assert rank_modp(np.eye(4, dtype=int), 2) == 4
    assert rank_modp(np.eye(4, dtype=int), 3) == 4


def test_repeated_rows_rank_one():
    m = np.array([[1, 1, 0], [1, 1, 0], [2, 2, 0]])
    assert rank_modp(m, 3) == 1
    assert rank_modp(m, 2) == 1


def test_rank_drops_only_in_matching_characteristic():
    m = np.array([[2, 0], [0, 3]])
    assert rank_modp(m, 2) == 1
    assert rank_modp(m, 3) == 1
    assert rank_modp(m, 5) == 2


def test_signs_matter_mod_odd():
    m = np.array([[1, -1], [-1, 1]])
    assert rank_modp(m, 3) == 1


def test_rank_gf2_bitrows():
    # rows 101, 011, 110: third = first xor second
    assert rank_gf2([0b101, 0b011, 0b110]) == 2
    assert rank_gf2([0, 0]) == 0
    assert rank_gf2([1]) == 1


@given(st.integers(0, 2 ** 30 - 1), st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=200, deadline=None)
def test_gf2_paths_agree(bits_seed, rows, cols):
    rng = np.random.default_rng(bits_seed)
    m = rng.integers(0, 2, size=(rows, cols))
    packed = [int("".join(map(str, r)), 2) for r in m]
    assert rank_gf2(packed) == rank_modp(m, 2)


@given(st.integers(0, 2 ** 30 - 1))
@settings(max_examples=100, deadline=None)
def test_rank_invariant_under_transpose(seed):
    rng = np.random.default_rng(seed)
    m = rng.integers(-2, 3, size=(5, 7))
    for p in (2, 3, 5):
        assert rank_modp(m, p) == rank_modp(m.T, p)


@given(st.integers(0, 2 ** 30 - 1))
@settings(max_examples=100, deadline=None)
def test_rank_bounded_by_rational_rank(seed):
    rng = np.random.default_rng(seed)
    m = rng.integers(-1, 2, size=(4, 6))
    q_rank = np.linalg.matrix_rank(m.astype(float))
    for p in (2, 3):
        assert rank_modp(m, p) <= q_rank
