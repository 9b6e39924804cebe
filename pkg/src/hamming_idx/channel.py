"""Single-bit corruption of codeword blocks.

Randomness comes from splitmix64 so a (seed, p) pair reproduces the same
flips in any language. Each block consumes exactly two outputs: the first,
scaled to [0, 1) from its top 53 bits, decides whether to flip; the second
picks the position as ``1 + (draw mod n)``. At most one bit per block ever
flips, which keeps every block inside the code's correction guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import Codeword
from .errors import ParameterError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def splitmix64_block(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start + count - 1`` of the stream seeded with ``seed``."""
    steps = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + steps * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def unit_float(draw) -> float:
    return (int(draw) >> 11) * 2.0**-53


@dataclass(frozen=True)
class FlipExact:
    block: int
    position: int


@dataclass(frozen=True)
class PerBlockBernoulli:
    p: float
    seed: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"flip probability {self.p} outside [0, 1]")
        if not 0 <= self.seed <= MASK64:
            raise ParameterError(f"seed {self.seed} is not a 64-bit unsigned integer")


ChannelSpec = Union[FlipExact, PerBlockBernoulli]


def flip(word: Codeword, position: int) -> Codeword:
    if not 1 <= position <= word.params.n:
        raise ParameterError(f"position {position} outside 1..{word.params.n}")
    bits = list(word.bits)
    bits[position - 1] ^= 1
    return Codeword(word.params, tuple(bits))


def plan_flips(blocks: int, n: int, spec: ChannelSpec) -> list[tuple[int, int]]:
    """``(block, position)`` for every flip ``spec`` applies to ``blocks`` blocks of length ``n``."""
    if isinstance(spec, FlipExact):
        if not 0 <= spec.block < blocks:
            raise ParameterError(f"block {spec.block} outside 0..{blocks - 1}")
        if not 1 <= spec.position <= n:
            raise ParameterError(f"position {spec.position} outside 1..{n}")
        return [(spec.block, spec.position)]
    if blocks == 0 or spec.p == 0.0:
        return []
    draws = splitmix64_block(spec.seed, 2 * blocks).reshape(blocks, 2)
    u = (draws[:, 0] >> np.uint64(11)).astype(np.float64) * 2.0**-53
    fire = np.nonzero(u < spec.p)[0]
    positions = 1 + (draws[fire, 1] % np.uint64(n)).astype(np.int64)
    return list(zip(fire.tolist(), positions.tolist()))


def corrupt_array(words: np.ndarray, spec: ChannelSpec) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Apply ``spec`` to a ``(blocks, n)`` bit array; the input is left untouched."""
    out = np.array(words, dtype=np.uint8, copy=True)
    log = plan_flips(out.shape[0], out.shape[1], spec)
    if log:
        b, p = np.array(log).T
        out[b, p - 1] ^= 1
    return out, log


def corrupt_stream(blocks: Sequence[Codeword], spec: ChannelSpec) -> tuple[list[Codeword], list[tuple[int, int]]]:
    blocks = list(blocks)
    n = blocks[0].params.n if blocks else 1
    log = plan_flips(len(blocks), n, spec)
    out = list(blocks)
    for b, p in log:
        out[b] = flip(out[b], p)
    return out, log


def format_flip_log(log: Sequence[tuple[int, int]]) -> str:
    return "".join(f"block={b} pos={p}\n" for b, p in sorted(log))
