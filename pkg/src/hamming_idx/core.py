"""Matrix-free Hamming code.

Positions are 1-based everywhere in this module's API: a codeword is
``a_1 ... a_n`` with the check bits at the powers of two ``1, 2, 4, ...``.
Check bit ``2**j`` covers every position whose binary form has bit ``j`` set.
That covering set can be enumerated four ways (see :class:`Form`), and all
parity and syndrome sums can run off any of the three closed forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Iterable, Sequence

import numpy as np

from .counts import OpCounts
from .errors import ParameterError

MIN_K = 2
MAX_K = 16


class Form(enum.Enum):
    """How an index set is enumerated.

    ``S`` tests bit ``j`` of every position directly. ``T`` walks runs
    ``(2*alpha + 1) * 2**j + i``. ``U`` walks ``2**j + 2*i - (i mod 2**j)``
    in one flat loop. ``FLOOR`` walks ``J * (1 + i // J) + i``.
    """

    S = "s"
    T = "t"
    U = "u"
    FLOOR = "floor"


SUM_FORMS = (Form.T, Form.U, Form.FLOOR)


@dataclass(frozen=True)
class CodeParams:
    """One Hamming code: ``k`` check bits, length ``n = 2**k - 1``."""

    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)):
            raise ParameterError(f"k must be an integer, got {self.k!r}")
        if not MIN_K <= self.k <= MAX_K:
            raise ParameterError(f"k={self.k} outside supported range {MIN_K}..{MAX_K}")
        object.__setattr__(self, "k", int(self.k))

    @property
    def n(self) -> int:
        return (1 << self.k) - 1

    @property
    def m(self) -> int:
        return self.n - self.k

    @property
    def check_positions(self) -> tuple[int, ...]:
        return tuple(1 << j for j in range(self.k))

    @property
    def info_positions(self) -> tuple[int, ...]:
        return _info_positions(self.k)

    @classmethod
    def for_length(cls, n: int) -> CodeParams:
        """Parameters whose codeword length is ``n``."""
        k = (n + 1).bit_length() - 1
        if n < 1 or (1 << k) - 1 != n:
            raise ParameterError(f"length {n} is not of the form 2**k - 1")
        return cls(k)


@lru_cache(maxsize=None)
def _info_positions(k: int) -> tuple[int, ...]:
    n = (1 << k) - 1
    return tuple(p for p in range(1, n + 1) if p & (p - 1))


def _as_bits(bits: Iterable[int], expected: int, what: str) -> tuple[int, ...]:
    out = tuple(int(b) for b in bits)
    if len(out) != expected:
        raise ParameterError(f"{what} has {len(out)} bits, expected {expected}")
    if any(b not in (0, 1) for b in out):
        raise ParameterError(f"{what} contains a symbol other than 0/1")
    return out


@dataclass(frozen=True)
class Codeword:
    """``n`` bits ``a_1 .. a_n``; ``bits[0]`` holds ``a_1``."""

    params: CodeParams
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", _as_bits(self.bits, self.params.n, "codeword"))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> Codeword:
        return cls(CodeParams.for_length(len(bits)), tuple(bits))

    def at(self, position: int) -> int:
        """Bit at 1-based ``position``."""
        _check_position(position, self.params)
        return self.bits[position - 1]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class InfoBits:
    params: CodeParams
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", _as_bits(self.bits, self.params.m, "info word"))

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class IndexSet:
    """Positions covered by check bit ``2**j`` in a code with ``k`` check bits."""

    k: int
    j: int
    members: tuple[int, ...]

    @property
    def J(self) -> int:
        return 1 << self.j

    @property
    def r(self) -> int:
        """Largest inner offset ``i`` in the run enumeration."""
        return (1 << self.j) - 1

    @property
    def s(self) -> int:
        """Largest run index ``alpha`` in the run enumeration."""
        return (1 << (self.k - self.j - 1)) - 1

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u) -> bool:
        return u in self.members


@dataclass(frozen=True)
class Syndrome:
    params: CodeParams
    eps: tuple[int, ...]  # eps[j] is the weight-2**j bit

    @property
    def X(self) -> int:
        return sum(e << j for j, e in enumerate(self.eps))

    def msb_first(self) -> str:
        """``eps_{k-1} ... eps_0`` as a string, e.g. ``"0101"``."""
        return "".join(str(e) for e in reversed(self.eps))


@dataclass(frozen=True)
class DecodeOutcome:
    syndrome: Syndrome
    corrected: Codeword
    position: int | None  # None when the word was already clean

    @property
    def clean(self) -> bool:
        return self.position is None


def _check_j(params: CodeParams, j: int) -> None:
    if not 0 <= j < params.k:
        raise ParameterError(f"j={j} outside 0..{params.k - 1} for k={params.k}")


def _check_position(position: int, params: CodeParams) -> None:
    if not 1 <= position <= params.n:
        raise ParameterError(f"position {position} outside 1..{params.n}")


# -- index sets --------------------------------------------------------------


def _enum_s(k: int, j: int) -> list[int]:
    n = (1 << k) - 1
    return [u for u in range(1, n + 1) if (u >> j) & 1]


def _enum_t(k: int, j: int) -> list[int]:
    J = 1 << j
    out = []
    for alpha in range((1 << (k - j - 1))):
        start = (2 * alpha + 1) * J
        for i in range(J):
            out.append(start + i)
    return out


def _enum_u(k: int, j: int) -> list[int]:
    J = 1 << j
    return [J + 2 * i - (i % J) for i in range(1 << (k - 1))]


def _enum_floor(k: int, j: int) -> list[int]:
    J = 1 << j
    return [J * (1 + i // J) + i for i in range(1 << (k - 1))]


_ENUMERATORS = {
    Form.S: _enum_s,
    Form.T: _enum_t,
    Form.U: _enum_u,
    Form.FLOOR: _enum_floor,
}


@lru_cache(maxsize=None)
def _enumerate(k: int, j: int, form: Form) -> tuple[int, ...]:
    # Generation order; every enumerator happens to emit ascending positions
    # with 2**j first, which the parity sums below rely on.
    return tuple(_ENUMERATORS[form](k, j))


def _index_set(params: CodeParams, j: int, form: Form) -> IndexSet:
    _check_j(params, j)
    return IndexSet(params.k, j, tuple(sorted(_enumerate(params.k, j, form))))


def index_set_s(params: CodeParams, j: int) -> IndexSet:
    """Positions in ``1..n`` with bit ``j`` set, by direct bit test."""
    return _index_set(params, j, Form.S)


def index_set_t(params: CodeParams, j: int) -> IndexSet:
    """Positions ``(2*alpha + 1) * 2**j + i`` for every run ``alpha`` and offset ``i``."""
    return _index_set(params, j, Form.T)


def index_set_u(params: CodeParams, j: int) -> IndexSet:
    """Positions ``2**j + 2*i - (i mod 2**j)`` for ``i`` in ``0 .. 2**(k-1) - 1``."""
    return _index_set(params, j, Form.U)


def index_set_floor(params: CodeParams, j: int) -> IndexSet:
    """Positions ``J * (1 + i // J) + i`` with ``J = 2**j``."""
    return _index_set(params, j, Form.FLOOR)


def index_set(params: CodeParams, j: int, form: Form) -> IndexSet:
    return _index_set(params, j, Form(form))


# -- sums --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _getter(k: int, j: int, form: Form, skip_check: bool):
    positions = _enumerate(k, j, form)
    if skip_check:
        positions = positions[1:]
    idx = [p - 1 for p in positions]
    if len(idx) == 1:
        only = idx[0]
        return idx, lambda bits: (bits[only],)
    return idx, itemgetter(*idx)


def _counted_sum(bits: Sequence[int], idx: Sequence[int], counter: OpCounts | None) -> int:
    if not idx:
        return 0
    s = bits[idx[0]]
    for i in idx[1:]:
        s += bits[i]
    counter.additions += len(idx) - 1
    return s


def _sum_terms(bits, k, j, form, skip_check, counter):
    idx, getter = _getter(k, j, form, skip_check)
    if counter is None:
        return sum(getter(bits))
    return _counted_sum(bits, idx, counter)


def _parity(bits: Sequence[int], k: int, j: int, form: Form, counter: OpCounts | None) -> int:
    if form is Form.T:
        # Run form: sum the whole set, then take the check bit back out so
        # whatever is stored there does not matter.
        s = _sum_terms(bits, k, j, form, False, counter)
        s -= bits[(1 << j) - 1]
        if counter is not None:
            counter.additions += 1
        return s % 2
    # Flat forms start at i = 1, which skips position 2**j.
    return _sum_terms(bits, k, j, form, True, counter) % 2


def _sum_form(form) -> Form:
    form = Form(form)
    if form not in SUM_FORMS:
        raise ParameterError(f"form {form.value!r} has no sum formula; use t, u or floor")
    return form


def parity_bit(word: Codeword, j: int, form: Form = Form.U, counter: OpCounts | None = None) -> int:
    """Check bit ``a_{2**j}``: sum of the covered positions other than ``2**j``, mod 2."""
    form = _sum_form(form)
    _check_j(word.params, j)
    return _parity(word.bits, word.params.k, j, form, counter)


def syndrome_bit(word: Codeword, j: int, form: Form = Form.U, counter: OpCounts | None = None) -> int:
    """Bit ``j`` of the error position: sum of every covered position, mod 2."""
    form = _sum_form(form)
    _check_j(word.params, j)
    return _sum_terms(word.bits, word.params.k, j, form, False, counter) % 2


def syndrome(word: Codeword, form: Form = Form.U, counter: OpCounts | None = None) -> Syndrome:
    form = _sum_form(form)
    k = word.params.k
    eps = tuple(_sum_terms(word.bits, k, j, form, False, counter) % 2 for j in range(k))
    return Syndrome(word.params, eps)


# -- encode / decode ---------------------------------------------------------


def recompute_checks(word: Codeword, form: Form = Form.T, counter: OpCounts | None = None) -> Codeword:
    """Overwrite every check position of ``word`` with its parity.

    Whatever the check positions held on input is ignored, so this accepts
    a full-length message with garbage in the check slots.
    """
    form = _sum_form(form)
    k = word.params.k
    bits = list(word.bits)
    for j in range(k):
        bits[(1 << j) - 1] = _parity(bits, k, j, form, counter)
    return Codeword(word.params, tuple(bits))


def encode(info: InfoBits, form: Form = Form.U, counter: OpCounts | None = None) -> Codeword:
    params = info.params
    bits = [0] * params.n
    for p, b in zip(params.info_positions, info.bits):
        bits[p - 1] = b
    return recompute_checks(Codeword(params, tuple(bits)), form, counter)


def decode(word: Codeword, form: Form = Form.U, counter: OpCounts | None = None) -> DecodeOutcome:
    """Locate and fix at most one flipped bit.

    Two or more flips are silently mis-corrected; the basic code cannot
    tell them apart from a single flip elsewhere.
    """
    syn = syndrome(word, form, counter)
    x = syn.X
    if x == 0:
        return DecodeOutcome(syn, word, None)
    bits = list(word.bits)
    bits[x - 1] ^= 1
    return DecodeOutcome(syn, Codeword(word.params, tuple(bits)), x)


def extract_info(word: Codeword) -> InfoBits:
    bits = word.bits
    return InfoBits(word.params, tuple(bits[p - 1] for p in word.params.info_positions))


def is_check_position(position: int, params: CodeParams) -> bool:
    _check_position(position, params)
    return position & (position - 1) == 0


# -- whole-array variants used by the stream codec ----------------------------


@lru_cache(maxsize=None)
def _array_index(k: int, j: int, form: Form, skip_check: bool) -> np.ndarray:
    positions = _enumerate(k, j, form)
    if skip_check:
        positions = positions[1:]
    idx = np.asarray(positions, dtype=np.intp) - 1
    idx.setflags(write=False)
    return idx


def encode_array(info: np.ndarray, params: CodeParams, form: Form = Form.U) -> np.ndarray:
    """Encode a ``(blocks, m)`` 0/1 array into a ``(blocks, n)`` uint8 array."""
    form = _sum_form(form)
    info = np.asarray(info, dtype=np.uint8)
    if info.ndim != 2 or info.shape[1] != params.m:
        raise ParameterError(f"info array shape {info.shape}, expected (blocks, {params.m})")
    words = np.zeros((info.shape[0], params.n), dtype=np.uint8)
    words[:, np.asarray(params.info_positions) - 1] = info
    for j in range(params.k):
        idx = _array_index(params.k, j, form, True)
        words[:, (1 << j) - 1] = words[:, idx].sum(axis=1, dtype=np.int64) & 1
    return words


def syndrome_array(words: np.ndarray, params: CodeParams, form: Form = Form.U) -> np.ndarray:
    """Error positions (0 = clean) for every row of a ``(blocks, n)`` array."""
    form = _sum_form(form)
    words = np.asarray(words, dtype=np.uint8)
    if words.ndim != 2 or words.shape[1] != params.n:
        raise ParameterError(f"word array shape {words.shape}, expected (blocks, {params.n})")
    x = np.zeros(words.shape[0], dtype=np.int64)
    for j in range(params.k):
        idx = _array_index(params.k, j, form, False)
        x |= (words[:, idx].sum(axis=1, dtype=np.int64) & 1) << j
    return x


def decode_array(words: np.ndarray, params: CodeParams, form: Form = Form.U) -> tuple[np.ndarray, np.ndarray]:
    """Correct every row; returns ``(corrected, positions)`` with 0 meaning clean."""
    x = syndrome_array(words, params, form)
    corrected = np.array(words, dtype=np.uint8, copy=True)
    hit = np.nonzero(x)[0]
    corrected[hit, x[hit] - 1] ^= 1
    return corrected, x


def extract_info_array(words: np.ndarray, params: CodeParams) -> np.ndarray:
    return np.asarray(words)[:, np.asarray(params.info_positions) - 1]
