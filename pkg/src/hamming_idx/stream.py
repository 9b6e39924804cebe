"""HAM1 container: a byte payload framed as a run of packed codewords.

Layout::

    "HAM1" | 0x01 | k (1 byte) | payload length in bytes (8, big-endian)
    block 0 | block 1 | ...

Each block is one codeword in ``ceil(n / 8)`` bytes, ``a_1`` in the top bit
of the first byte, pad bits zero. Payload bits are consumed MSB-first and
the last block's spare info bits are zero. The header itself carries no
protection.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from . import core
from .core import CodeParams, Codeword, Form
from .errors import FormatError, ParameterError

MAGIC = b"HAM1"
VERSION = 1
HEADER = struct.Struct(">4sBBQ")
HEADER_SIZE = HEADER.size  # 14


@dataclass(frozen=True)
class FrameHeader:
    k: int
    payload_len: int
    magic: bytes = MAGIC
    version: int = VERSION

    def to_bytes(self) -> bytes:
        return HEADER.pack(self.magic, self.version, self.k, self.payload_len)

    @classmethod
    def parse(cls, data: bytes) -> FrameHeader:
        if len(data) < HEADER_SIZE:
            raise FormatError(f"stream is {len(data)} bytes, shorter than the {HEADER_SIZE}-byte header")
        magic, version, k, payload_len = HEADER.unpack_from(data)
        if magic != MAGIC:
            raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
        if version != VERSION:
            raise FormatError(f"unsupported version {version}")
        if not core.MIN_K <= k <= core.MAX_K:
            raise FormatError(f"k={k} outside {core.MIN_K}..{core.MAX_K}")
        return cls(k, payload_len, magic, version)


def block_bytes(params: CodeParams) -> int:
    return (params.n + 7) // 8


def block_count(payload_len: int, params: CodeParams) -> int:
    return -(-8 * payload_len // params.m)


def framed_size(payload_len: int, params: CodeParams) -> int:
    return HEADER_SIZE + block_count(payload_len, params) * block_bytes(params)


def pack(word: Codeword) -> bytes:
    return np.packbits(np.asarray(word.bits, dtype=np.uint8)).tobytes()


def unpack(data: bytes, params: CodeParams) -> Codeword:
    if len(data) != block_bytes(params):
        raise ParameterError(f"packed block is {len(data)} bytes, expected {block_bytes(params)}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))[: params.n]
    return Codeword(params, tuple(bits.tolist()))


def pack_array(words: np.ndarray) -> bytes:
    return np.packbits(words, axis=1).tobytes()


def unpack_array(body: bytes, params: CodeParams) -> np.ndarray:
    rows = np.frombuffer(body, dtype=np.uint8).reshape(-1, block_bytes(params))
    return np.unpackbits(rows, axis=1)[:, : params.n]


def payload_to_info(payload: bytes, params: CodeParams) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))
    blocks = block_count(len(payload), params)
    padded = np.zeros(blocks * params.m, dtype=np.uint8)
    padded[: bits.size] = bits
    return padded.reshape(blocks, params.m)


def encode_stream(payload: bytes, params: CodeParams, form: Form = Form.U) -> bytes:
    header = FrameHeader(params.k, len(payload)).to_bytes()
    words = core.encode_array(payload_to_info(payload, params), params, form)
    return header + pack_array(words)


def split_stream(framed: bytes) -> tuple[FrameHeader, CodeParams, np.ndarray]:
    """Validate a HAM1 stream and return its header and ``(blocks, n)`` bit array."""
    header = FrameHeader.parse(framed)
    params = CodeParams(header.k)
    expected = block_count(header.payload_len, params) * block_bytes(params)
    actual = len(framed) - HEADER_SIZE
    if actual != expected:
        raise FormatError(f"body is {actual} bytes, expected {expected} for a "
                          f"{header.payload_len}-byte payload at k={params.k}")
    return header, params, unpack_array(framed[HEADER_SIZE:], params)


def join_stream(header: FrameHeader, words: np.ndarray) -> bytes:
    return header.to_bytes() + pack_array(words)


def decode_stream(framed: bytes, form: Form = Form.U) -> tuple[bytes, list[tuple[int, int | None]]]:
    """Recover the payload; the report has ``(block, position or None)`` per block."""
    header, params, words = split_stream(framed)
    corrected, positions = core.decode_array(words, params, form)
    info = core.extract_info_array(corrected, params).reshape(-1)
    payload = np.packbits(info[: 8 * header.payload_len]).tobytes()
    report = [(b, int(x) if x else None) for b, x in enumerate(positions)]
    return payload, report


def format_report(report) -> str:
    lines = []
    for b, pos in report:
        if pos is None:
            lines.append(f"block={b} status=clean pos=0\n")
        else:
            lines.append(f"block={b} status=corrected pos={pos}\n")
    return "".join(lines)
