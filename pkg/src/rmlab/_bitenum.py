"""numpy-backed bit-parallel enumeration of XOR spans of truth tables.

Truth tables live in Python ints (see bfcore); for bulk work over a whole
linear span or coset we repack columns of tables into uint64 matrices and
let numpy popcount them.  The span of r basis tables is materialized by
doubling: rows [2^j, 2^{j+1}) are rows [0, 2^j) XOR basis j, so row g is
the combination with characteristic vector g in plain binary counting
order.  For spans too large for memory the low part is materialized once
and the high basis vectors are folded in by Gray-code stepping, one XOR
of the whole block per step.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .errors import ParameterError

# rows materialized at once: 2^20 rows of RM(k,5)-sized tables is ~4 MB
_BLOCK_LOG2 = 20


def pack_tt(bits: int, n: int) -> np.ndarray:
    """Packed table int -> uint8 array of n//8 bytes, position 0 in the
    MSB of byte 0 (n >= 8)."""
    if n % 8:
        raise ParameterError(f"table length {n} is not a whole number of bytes")
    return np.frombuffer(bits.to_bytes(n // 8, "big"), dtype=np.uint8).copy()


def unpack_tt(arr: np.ndarray) -> int:
    """Inverse of pack_tt."""
    return int.from_bytes(arr.tobytes(), "big")


def tt_to_positions(bits: int, n: int) -> np.ndarray:
    """Packed table int -> uint8 array of n single-bit values, position order."""
    if n >= 8:
        return np.unpackbits(pack_tt(bits, n), bitorder="big")
    raw = np.frombuffer(bits.to_bytes(1, "big"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="big")[8 - n :]


def positions_to_tt(arr: np.ndarray) -> int:
    """Inverse of tt_to_positions."""
    arr = np.asarray(arr, dtype=np.uint8)
    n = arr.size
    if n % 8:
        arr = np.concatenate([np.zeros(8 - n % 8, dtype=np.uint8), arr])
    return int.from_bytes(np.packbits(arr, bitorder="big").tobytes(), "big")


def _to_words(tables: Sequence[int], n: int) -> np.ndarray:
    """Stack packed tables into a (len, n/64 or 1) uint64 matrix.  Tables
    shorter than 64 bits go into the low bits of a single word."""
    if n >= 64:
        if n % 64:
            raise ParameterError(f"table length {n} is not a whole number of words")
        nbytes = n // 8
        buf = b"".join(t.to_bytes(nbytes, "big") for t in tables)
        return np.frombuffer(buf, dtype=">u8").astype(np.uint64).reshape(len(tables), -1)
    return np.array([[t] for t in tables], dtype=np.uint64)


def _popcount_rows(words: np.ndarray) -> np.ndarray:
    """Hamming weight of each row of a uint64 matrix."""
    return np.bitwise_count(words).sum(axis=1, dtype=np.int64)


def weights_of_tables(tables: Sequence[int], n: int) -> np.ndarray:
    """Hamming weights of a batch of packed tables."""
    if not tables:
        return np.zeros(0, dtype=np.int64)
    return _popcount_rows(_to_words(tables, n))


def _span_block(basis_words: np.ndarray, log2_rows: int) -> np.ndarray:
    """Rows 0..2^log2_rows-1 of the span of the first log2_rows basis rows."""
    nwords = basis_words.shape[1]
    out = np.zeros((1 << log2_rows, nwords), dtype=np.uint64)
    for j in range(log2_rows):
        half = 1 << j
        out[half : 2 * half] = out[:half] ^ basis_words[j]
    return out


def _gray_flip_sequence(hi: int) -> Iterator[int]:
    """Indices of the bit flipped at each step of the hi-bit Gray walk."""
    for step in range(1, 1 << hi):
        yield (step & -step).bit_length() - 1


def span_weight_histogram(
    basis: Sequence[int],
    n: int,
    offset: int = 0,
) -> np.ndarray:
    """Weight histogram (length n+1) of {offset XOR span(basis)}.

    Enumerates all 2^len(basis) combinations.  Low _BLOCK_LOG2 basis
    elements are materialized as one block; remaining elements are folded
    in by Gray-code XOR so each of the 2^hi outer steps costs one
    block-wide XOR plus a popcount pass.
    """
    r = len(basis)
    if r == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[bin(offset).count("1")] += 1
        return hist
    words = _to_words(list(basis), n)
    lo = min(r, _BLOCK_LOG2)
    block = _span_block(words, lo)
    if offset:
        block ^= _to_words([offset], n)[0]
    hist = np.bincount(_popcount_rows(block), minlength=n + 1)
    if r > lo:
        for j in _gray_flip_sequence(r - lo):
            block ^= words[lo + j]
            hist += np.bincount(_popcount_rows(block), minlength=n + 1)
    return hist.astype(np.int64)


def span_balanced_count(basis: Sequence[int], n: int, offset: int = 0) -> int:
    """Number of tables of weight n/2 in {offset XOR span(basis)}."""
    if n % 2:
        raise ParameterError(f"balanced count needs even table length, got {n}")
    r = len(basis)
    if r == 0:
        return int(bin(offset).count("1") == n // 2)
    words = _to_words(list(basis), n)
    lo = min(r, _BLOCK_LOG2)
    block = _span_block(words, lo)
    if offset:
        block ^= _to_words([offset], n)[0]
    half = n // 2
    count = int(np.count_nonzero(_popcount_rows(block) == half))
    if r > lo:
        for j in _gray_flip_sequence(r - lo):
            block ^= words[lo + j]
            count += int(np.count_nonzero(_popcount_rows(block) == half))
    return count


class SpanCounter:
    """A span of at most _BLOCK_LOG2 basis tables, materialized once, for
    repeated weight queries against varying coset offsets."""

    def __init__(self, basis: Sequence[int], n: int):
        if len(basis) > _BLOCK_LOG2:
            raise ParameterError(f"span of {len(basis)} basis tables exceeds one block")
        self.n = n
        if basis:
            self._words = _span_block(_to_words(list(basis), n), len(basis))
        else:
            nwords = n // 64 if n >= 64 else 1
            self._words = np.zeros((1, nwords), dtype=np.uint64)

    def _offset_rows(self, offset: int) -> np.ndarray:
        if not offset:
            return self._words
        return self._words ^ _to_words([offset], self.n)[0]

    def balanced_count(self, offset: int = 0) -> int:
        if self.n % 2:
            raise ParameterError(f"balanced count needs even table length, got {self.n}")
        w = _popcount_rows(self._offset_rows(offset))
        return int(np.count_nonzero(w == self.n // 2))

    def weight_histogram(self, offset: int = 0) -> np.ndarray:
        w = _popcount_rows(self._offset_rows(offset))
        return np.bincount(w, minlength=self.n + 1).astype(np.int64)


def span_orthogonal_histogram(basis: Sequence[int], n: int, mask: int) -> np.ndarray:
    """Weight histogram of the span elements with even intersection with
    mask (i.e. orthogonal to it as F_2 vectors)."""
    r = len(basis)
    if r == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] += 1  # the zero vector is orthogonal to everything
        return hist
    words = _to_words(list(basis), n)
    maskw = _to_words([mask], n)[0]
    lo = min(r, _BLOCK_LOG2)
    block = _span_block(words, lo)

    def tally(b: np.ndarray) -> np.ndarray:
        even = _popcount_rows(b & maskw) % 2 == 0
        return np.bincount(_popcount_rows(b)[even], minlength=n + 1)

    hist = tally(block)
    if r > lo:
        for j in _gray_flip_sequence(r - lo):
            block ^= words[lo + j]
            hist += tally(block)
    return hist.astype(np.int64)


def iter_span(basis: Sequence[int], n: int, offset: int = 0) -> Iterator[int]:
    """Yield every element of {offset XOR span(basis)} as a packed int,
    in Gray order (consecutive elements differ by one basis vector)."""
    cur = offset
    yield cur
    for j in _gray_flip_sequence(len(basis)):
        cur ^= basis[j]
        yield cur
