from itertools import product

import numpy as np
import pytest

from hamming_idx import CodeParams, Codeword, Form, InfoBits, OpCounts, ParameterError, decode, encode
from hamming_idx.channel import flip
from hamming_idx.matrix import (
    Pass,
    build_g,
    build_h,
    matrix_encode,
    matrix_syndrome,
    measure,
    predicted_counts,
)

from conftest import TABLE1_WORD


def test_h_k2_and_k3():
    assert build_h(CodeParams(2)).rows.tolist() == [[1, 0, 1], [0, 1, 1]]
    h3 = build_h(CodeParams(3)).rows
    assert h3[:, 3].tolist() == [0, 0, 1]
    for t in range(1, 8):
        assert sum(int(h3[j, t - 1]) << j for j in range(3)) == t


@pytest.mark.parametrize("k", range(2, 9))
def test_h_columns_are_positions(k):
    h = build_h(CodeParams(k)).rows
    cols = [sum(int(h[j, t]) << j for j in range(k)) for t in range(h.shape[1])]
    assert cols == list(range(1, 2**k))
    for j in range(k):
        unit = np.zeros(k, dtype=np.uint8)
        unit[j] = 1
        assert h[:, (1 << j) - 1].tolist() == unit.tolist()


def test_g_examples():
    assert build_g(CodeParams(2)).rows.tolist() == [[1, 1, 1]]
    # first info position for k=3 is 3; its unit vector sets a_1, a_2, a_3
    assert build_g(CodeParams(3)).rows[0].tolist() == [1, 1, 1, 0, 0, 0, 0]


@pytest.mark.parametrize("k", range(2, 9))
def test_g_invariants(k):
    params = CodeParams(k)
    g = build_g(params).rows.astype(np.int64)
    h = build_h(params).rows.astype(np.int64)
    assert not ((h @ g.T) % 2).any()
    info_cols = np.asarray(params.info_positions) - 1
    assert (g[:, info_cols] == np.eye(params.m, dtype=np.int64)).all()


def test_matrix_syndrome_table1():
    word = Codeword.from_bits(TABLE1_WORD)
    assert matrix_syndrome(word, build_h(word.params)).X == 5


def test_dimension_mismatch():
    with pytest.raises(ParameterError):
        matrix_encode(InfoBits(CodeParams(3), (0,) * 4), build_g(CodeParams(4)))
    with pytest.raises(ParameterError):
        matrix_syndrome(Codeword.from_bits(TABLE1_WORD), build_h(CodeParams(3)))


def test_counts_k4_closed_forms():
    params = CodeParams(4)
    c = OpCounts()
    matrix_encode(InfoBits(params, (1,) * 11), build_g(params), c)
    assert (c.multiplications, c.additions) == (165, 150)
    c = OpCounts()
    matrix_syndrome(Codeword.from_bits(TABLE1_WORD), build_h(params), c)
    assert (c.multiplications, c.additions) == (60, 56)
    c = OpCounts()
    matrix_encode(InfoBits(CodeParams(2), (1,)), build_g(CodeParams(2)), c)
    assert (c.multiplications, c.additions) == (3, 0)


def test_predicted_examples():
    assert predicted_counts(CodeParams(4), Pass.CORE_DECODE) == OpCounts(additions=28)
    assert predicted_counts(CodeParams(4), Pass.MATRIX_SYNDROME) == OpCounts(additions=56, multiplications=60)
    assert predicted_counts(CodeParams(2), Pass.CORE_DECODE) == OpCounts(additions=2)
    assert predicted_counts(CodeParams(4), Pass.CORE_ENCODE) == OpCounts(additions=32)
    assert predicted_counts(CodeParams(4), Pass.CORE_ENCODE, Form.U) == OpCounts(additions=24)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_oracle_equivalence_exhaustive(k):
    params = CodeParams(k)
    g, h = build_g(params), build_h(params)
    for info in product((0, 1), repeat=params.m):
        x = InfoBits(params, info)
        word = encode(x)
        assert matrix_encode(x, g) == word
        for p in range(1, params.n + 1):
            assert matrix_syndrome(flip(word, p), h).X == p
    for bits in product((0, 1), repeat=params.n):
        w = Codeword(params, bits)
        assert matrix_syndrome(w, h).X == decode(w).syndrome.X


@pytest.mark.parametrize("pass_", list(Pass))
@pytest.mark.parametrize("form", [Form.T, Form.U, Form.FLOOR])
def test_measured_equals_predicted(pass_, form, rng):
    for k in range(2, 11):
        params = CodeParams(k)
        g = build_g(params) if pass_ is Pass.MATRIX_ENCODE else None
        for _ in range(3):
            assert measure(params, pass_, rng, form, g=g) == predicted_counts(params, pass_, form)


@pytest.mark.parametrize("k", range(2, 17))
def test_core_cheaper_than_matrix(k):
    params = CodeParams(k)
    core_ = predicted_counts(params, Pass.CORE_DECODE)
    mat = predicted_counts(params, Pass.MATRIX_SYNDROME)
    assert core_.multiplications == 0
    assert core_.additions < mat.additions
