"""Classical matrix form of the Hamming code, kept as a differential oracle.

``H`` is ``k x n`` with column ``t`` equal to the binary digits of ``t``
(row ``j`` holds bit ``j``), so ``H y`` read as a number is the error
position. ``G`` is ``m x n``; row ``i`` is the codeword of the ``i``-th unit
info vector. Products are dense on purpose: the operation counts below are
part of the contract and assume every entry is touched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import core
from .core import CodeParams, Codeword, Form, InfoBits, Syndrome
from .counts import OpCounts
from .errors import ParameterError


class Pass(enum.Enum):
    MATRIX_ENCODE = "matrix-encode"
    MATRIX_SYNDROME = "matrix-syndrome"
    CORE_ENCODE = "core-encode"
    CORE_DECODE = "core-decode"


@dataclass(frozen=True, eq=False)
class ParityCheckMatrix:
    params: CodeParams
    rows: np.ndarray  # (k, n) uint8


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    params: CodeParams
    rows: np.ndarray  # (m, n) uint8


def build_h(params: CodeParams) -> ParityCheckMatrix:
    t = np.arange(1, params.n + 1)
    rows = ((t[None, :] >> np.arange(params.k)[:, None]) & 1).astype(np.uint8)
    rows.setflags(write=False)
    return ParityCheckMatrix(params, rows)


def build_g(params: CodeParams, form: Form = Form.U) -> GeneratorMatrix:
    rows = core.encode_array(np.eye(params.m, dtype=np.uint8), params, form)
    rows.setflags(write=False)
    return GeneratorMatrix(params, rows)


def matrix_encode(info: InfoBits, g: GeneratorMatrix, counter: OpCounts | None = None) -> Codeword:
    """Codeword ``x G`` over GF(2) by a dense vector-matrix product."""
    if info.params != g.params:
        raise ParameterError(f"info word is for k={info.params.k}, G is for k={g.params.k}")
    x = np.asarray(info.bits, dtype=np.uint8)
    products = x[:, None] * g.rows
    column_sums = products.sum(axis=0, dtype=np.int64)
    if counter is not None:
        rows, cols = products.shape
        counter.multiplications += rows * cols
        counter.additions += (rows - 1) * cols
    return Codeword(g.params, tuple((column_sums & 1).tolist()))


def matrix_syndrome(word: Codeword, h: ParityCheckMatrix, counter: OpCounts | None = None) -> Syndrome:
    """Syndrome ``H y`` by a dense matrix-vector product."""
    if word.params != h.params:
        raise ParameterError(f"word is for k={word.params.k}, H is for k={h.params.k}")
    y = np.asarray(word.bits, dtype=np.uint8)
    products = h.rows * y[None, :]
    row_sums = products.sum(axis=1, dtype=np.int64)
    if counter is not None:
        rows, cols = products.shape
        counter.multiplications += rows * cols
        counter.additions += rows * (cols - 1)
    return Syndrome(word.params, tuple((row_sums & 1).tolist()))


def predicted_counts(params: CodeParams, pass_: Pass, form: Form = Form.T) -> OpCounts:
    """Closed-form operation counts for one pass over one block.

    ``form`` only matters for ``CORE_ENCODE``. The run form sums all
    ``2**(k-1)`` covered bits and subtracts the check bit back out; the flat
    forms skip the check bit up front and so save two additions per bit.
    """
    k, n, m = params.k, params.n, params.m
    half = 1 << (k - 1)
    pass_ = Pass(pass_)
    if pass_ is Pass.MATRIX_ENCODE:
        return OpCounts(additions=(m - 1) * n, multiplications=m * n)
    if pass_ is Pass.MATRIX_SYNDROME:
        return OpCounts(additions=k * (n - 1), multiplications=k * n)
    if pass_ is Pass.CORE_ENCODE:
        if Form(form) is Form.T:
            return OpCounts(additions=k * half)
        return OpCounts(additions=k * (half - 2))
    return OpCounts(additions=k * (half - 1))


def measure(params: CodeParams, pass_: Pass, rng: np.random.Generator, form: Form = Form.T,
            h: ParityCheckMatrix | None = None, g: GeneratorMatrix | None = None) -> OpCounts:
    """Run one instrumented pass on a random input and return what it counted."""
    counter = OpCounts()
    pass_ = Pass(pass_)
    if pass_ in (Pass.MATRIX_ENCODE, Pass.CORE_ENCODE):
        info = InfoBits(params, tuple(rng.integers(0, 2, params.m).tolist()))
        if pass_ is Pass.MATRIX_ENCODE:
            matrix_encode(info, g if g is not None else build_g(params), counter)
        else:
            core.encode(info, form, counter)
    else:
        word = Codeword(params, tuple(rng.integers(0, 2, params.n).tolist()))
        if pass_ is Pass.MATRIX_SYNDROME:
            matrix_syndrome(word, h if h is not None else build_h(params), counter)
        else:
            core.decode(word, form, counter)
    return counter
