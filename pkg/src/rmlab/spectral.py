"""Walsh-Hadamard spectra of Boolean functions.

W_f(omega) = sum_x (-1)^(f(x) + x.omega) = 2^m - 2 wt(f + x.omega);
f is balanced iff W_f(0) = 0, and the number of balanced words in the
coset f + RM(1,m) is exactly twice the number of spectral zeros (each
zero omega contributes f + x.omega and its complement).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._bitenum import tt_to_positions
from .bfcore import TruthTable, _check_m
from .errors import ParameterError


@dataclass(frozen=True)
class WalshSpectrum:
    """Spectrum values indexed by omega in the same big-endian point
    encoding as TruthTable positions."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_m(self.m)
        n = 1 << self.m
        if len(self.values) != n:
            raise ParameterError(f"need {n} spectrum values, got {len(self.values)}")
        for v in self.values:
            if abs(v) > n:
                raise ParameterError(f"|W| = {abs(v)} exceeds 2^m = {n}")
            if (v - n) % 2:
                raise ParameterError(f"value {v} has wrong parity for m={self.m}")

    @property
    def n(self) -> int:
        return 1 << self.m

    def to_json_obj(self) -> list[int]:
        return list(self.values)


def _fwht_rows(rows: np.ndarray) -> np.ndarray:
    """In-place radix-2 butterfly along the last axis (length a power of
    two); each row becomes its Hadamard transform."""
    n = rows.shape[-1]
    h = 1
    while h < n:
        v = rows.reshape(-1, n // (2 * h), 2, h)
        top = v[:, :, 0, :].copy()
        v[:, :, 0, :] = top + v[:, :, 1, :]
        v[:, :, 1, :] = top - v[:, :, 1, :]
        h *= 2
    return rows


def wht(f: TruthTable) -> WalshSpectrum:
    """Fast transform of the (-1)^f sequence; O(n log n) additions."""
    signs = 1 - 2 * tt_to_positions(f.bits, f.n).astype(np.int64)
    out = _fwht_rows(signs)
    return WalshSpectrum(f.m, tuple(int(v) for v in out))


def wht_many(tables: Sequence[int], m: int) -> np.ndarray:
    """Spectra of a batch of packed truth tables, one per row (int32;
    values are bounded by 2^m so this is exact for m <= 30)."""
    _check_m(m)
    n = 1 << m
    if not tables:
        return np.zeros((0, n), dtype=np.int32)
    rows = np.stack([tt_to_positions(t, n) for t in tables])
    signs = 1 - 2 * rows.astype(np.int32)
    return _fwht_rows(signs)


def parseval_check(s: WalshSpectrum) -> bool:
    """True iff sum of squared spectrum values equals 2^(2m), exactly."""
    return sum(v * v for v in s.values) == 1 << (2 * s.m)


def is_balanced_spectral(f: TruthTable) -> bool:
    """Balanced iff W_f(0) = 0."""
    return wht(f).values[0] == 0


def rm1_coset_balanced_count(f: TruthTable) -> int:
    """Number of balanced words in the coset f + RM(1,m): twice the
    number of spectral zeros, since wt(f + x.omega) = (n - W_f(omega))/2
    and complementing flips the sign of W."""
    spectrum = wht(f)
    return 2 * sum(1 for v in spectrum.values if v == 0)
