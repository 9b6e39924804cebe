import pytest
from hypothesis import given, strategies as st

from hamming_idx import (
    CodeParams,
    Form,
    ParameterError,
    index_set,
    index_set_floor,
    index_set_s,
    index_set_t,
    index_set_u,
)
from hamming_idx.core import MAX_K, MIN_K

from conftest import TABLE2_MEMBERS
from oracles import bit_set

GENERATORS = [index_set_s, index_set_t, index_set_u, index_set_floor]


@pytest.mark.parametrize("k,j,expected", [
    (4, 0, [1, 3, 5, 7, 9, 11, 13, 15]),
    (4, 2, [4, 5, 6, 7, 12, 13, 14, 15]),
    (2, 1, [2, 3]),
])
def test_s_examples(k, j, expected):
    assert list(index_set_s(CodeParams(k), j)) == expected


@pytest.mark.parametrize("k,j,expected", [
    (4, 1, [2, 3, 6, 7, 10, 11, 14, 15]),
    (7, 4, TABLE2_MEMBERS),
    (3, 2, [4, 5, 6, 7]),
])
def test_t_examples(k, j, expected):
    assert list(index_set_t(CodeParams(k), j)) == expected


def test_u_examples():
    # 2 + 2i - (i mod 2) for i = 0..7, evaluated by hand
    by_hand = [2 + 2 * i - (i % 2) for i in range(8)]
    assert by_hand == [2, 3, 6, 7, 10, 11, 14, 15]
    assert list(index_set_u(CodeParams(4), 1)) == by_hand
    assert list(index_set_u(CodeParams(4), 0)) == list(range(1, 16, 2))
    assert list(index_set_u(CodeParams(2), 0)) == [1, 3]


def test_floor_examples():
    assert 2 * (1 + 2 // 2) + 2 == 6
    assert 6 in index_set_floor(CodeParams(4), 1)
    assert list(index_set_floor(CodeParams(4), 3)) == list(range(8, 16))
    assert list(index_set_floor(CodeParams(2), 1)) == [2, 3]


def test_run_loop_bounds_for_minitel_example():
    s = index_set_t(CodeParams(7), 4)
    assert (s.r, s.s) == (15, 3)
    assert s.J == 16


@pytest.mark.parametrize("gen", GENERATORS)
@pytest.mark.parametrize("j", [-1, 4, 10])
def test_j_out_of_range(gen, j):
    with pytest.raises(ParameterError, match=r"j=.*k=4"):
        gen(CodeParams(4), j)


@pytest.mark.parametrize("k", [0, 1, 17, -3])
def test_k_out_of_range(k):
    with pytest.raises(ParameterError):
        CodeParams(k)


@pytest.mark.parametrize("k", range(2, 11))
def test_all_forms_equal_bit_test_exhaustive(k):
    params = CodeParams(k)
    for j in range(k):
        brute = [u for u in range(1, params.n + 1) if bit_set(u, j)]
        for gen in GENERATORS:
            assert list(gen(params, j).members) == brute, (gen.__name__, k, j)


@pytest.mark.parametrize("k", range(2, 11))
def test_set_shape(k):
    params = CodeParams(k)
    for j in range(k):
        members = index_set_u(params, j).members
        J = 1 << j
        assert len(members) == 1 << (k - 1)
        assert members[0] == J and members[-1] == params.n
        # runs of J consecutive integers, separated by gaps of J
        runs = [members[i:i + J] for i in range(0, len(members), J)]
        for idx, run in enumerate(runs):
            assert list(run) == list(range(run[0], run[0] + J))
            assert run[0] == J + idx * 2 * J


@pytest.mark.parametrize("k", range(2, 11))
def test_check_positions_partition(k):
    params = CodeParams(k)
    sets = [set(index_set_s(params, j)) for j in range(k)]
    for j in range(k):
        owners = [i for i, s in enumerate(sets) if (1 << j) in s]
        assert owners == [j]


@given(k=st.integers(MIN_K, MAX_K), data=st.data())
def test_forms_agree_any_k(k, data):
    j = data.draw(st.integers(0, k - 1))
    params = CodeParams(k)
    ref = index_set(params, j, Form.S).members
    for form in (Form.T, Form.U, Form.FLOOR):
        assert index_set(params, j, form).members == ref
