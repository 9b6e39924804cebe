"""Matrix-free Hamming single-error-correcting codec."""

from .core import (
    CodeParams,
    Codeword,
    DecodeOutcome,
    Form,
    IndexSet,
    InfoBits,
    Syndrome,
    decode,
    encode,
    extract_info,
    index_set,
    index_set_floor,
    index_set_s,
    index_set_t,
    index_set_u,
    is_check_position,
    parity_bit,
    recompute_checks,
    syndrome,
    syndrome_bit,
)
from .counts import OpCounts
from .errors import FormatError, ParameterError

__version__ = "0.1.0"
