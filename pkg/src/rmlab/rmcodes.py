"""Reed-Muller code parameters, enumeration, weight distributions, duality
and McEliece divisibility.

RM(k,m) is the code of truth tables of m-variable Boolean functions of
algebraic degree <= k: length n = 2^m, dimension K = sum_{j<=k} C(m,j),
dual code RM(m-k-1, m).  Exhaustive enumeration is gated by a dimension
cap (default 26, overridable per call or via the RMLAB_CAP_DIM
environment variable) so nothing silently tries to walk 2^200 codewords.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _bitenum
from .bfcore import MAX_M, TruthTable, _check_m, _mobius_bits, monomial_tt
from .errors import CapExceededError, ParameterError

DEFAULT_DIMENSION_CAP = 26
ENV_CAP_VAR = "RMLAB_CAP_DIM"


def dimension_cap(override: int | None = None) -> int:
    """Effective enumeration cap: explicit override, else RMLAB_CAP_DIM,
    else the default."""
    if override is not None:
        if not isinstance(override, int) or override < 0:
            raise ParameterError(f"cap override must be a nonnegative int, got {override!r}")
        return override
    env = os.environ.get(ENV_CAP_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ParameterError(f"invalid {ENV_CAP_VAR}={env!r}") from exc
        if value < 0:
            raise ParameterError(f"invalid {ENV_CAP_VAR}={env!r}: must be >= 0")
        return value
    return DEFAULT_DIMENSION_CAP


@dataclass(frozen=True)
class RMParams:
    """Parameters of RM(k,m), or the zero code {0} of length 2^m when
    trivial is set (the dual of RM(m,m); k is then None)."""

    k: int | None
    m: int
    trivial: bool = False

    def __post_init__(self) -> None:
        _check_m(self.m)
        if self.trivial:
            if self.k is not None:
                raise ParameterError("trivial code carries no order; use k=None")
        else:
            if not isinstance(self.k, int) or not 0 <= self.k <= self.m:
                raise ParameterError(f"order k must satisfy 0 <= k <= m, got k={self.k!r}, m={self.m}")

    @classmethod
    def zero_code(cls, m: int) -> "RMParams":
        return cls(None, m, trivial=True)

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def dimension(self) -> int:
        if self.trivial:
            return 0
        return sum(comb(self.m, j) for j in range(self.k + 1))

    def __str__(self) -> str:
        return f"{{0}}^{self.n}" if self.trivial else f"RM({self.k},{self.m})"


def rm_dimension(p: RMParams) -> int:
    """K = sum_{j=0..k} C(m,j)."""
    return p.dimension


def dual_params(p: RMParams) -> RMParams:
    """The orthogonal code: RM(m-k-1, m) for k <= m-1; the zero code for
    k = m; RM(m,m) for the zero code."""
    if p.trivial:
        return RMParams(p.m, p.m)
    if p.k == p.m:
        return RMParams.zero_code(p.m)
    return RMParams(p.m - p.k - 1, p.m)


@dataclass(frozen=True)
class WeightDistribution:
    """Sparse weight distribution: pairs (weight, count), sorted by
    weight, zero counts omitted, counts exact arbitrary-precision ints."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"length must be >= 0, got {self.n}")
        prev = -1
        for w, c in self.pairs:
            if not 0 <= w <= self.n:
                raise ParameterError(f"weight {w} out of range 0..{self.n}")
            if w <= prev:
                raise ParameterError("weights must be strictly increasing")
            if c <= 0:
                raise ParameterError(f"count at weight {w} must be positive, got {c}")
            prev = w

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> "WeightDistribution":
        items = counts.items() if isinstance(counts, Mapping) else counts
        acc: dict[int, int] = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        return cls(n, tuple(sorted((w, c) for w, c in acc.items() if c)))

    @classmethod
    def from_dense(cls, counts: Iterable[int]) -> "WeightDistribution":
        dense = [int(c) for c in counts]
        if not dense:
            raise ParameterError("dense counts must have length n+1 >= 1")
        return cls(len(dense) - 1, tuple((w, c) for w, c in enumerate(dense) if c))

    @cached_property
    def _lookup(self) -> dict[int, int]:
        return dict(self.pairs)

    def count(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise ParameterError(f"weight {i} out of range 0..{self.n}")
        return self._lookup.get(i, 0)

    def __getitem__(self, i: int) -> int:
        return self.count(i)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.pairs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.pairs)

    def to_dense(self) -> list[int]:
        dense = [0] * (self.n + 1)
        for w, c in self.pairs:
            dense[w] = c
        return dense

    def to_json_obj(self) -> dict:
        return {"n": self.n, "counts": [str(c) for c in self.to_dense()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "WeightDistribution":
        n = obj["n"]
        counts = [int(s) for s in obj["counts"]]
        if len(counts) != n + 1:
            raise ParameterError(f"counts length {len(counts)} != n+1 = {n + 1}")
        return cls.from_dense(counts)


def monomial_basis(p: RMParams) -> list[TruthTable]:
    """Generator rows of RM(k,m): all monomials of degree <= k in
    graded-lexicographic order (by degree, then variable indices)."""
    if p.trivial:
        return []
    return [
        monomial_tt(p.m, combo)
        for d in range(p.k + 1)
        for combo in itertools.combinations(range(1, p.m + 1), d)
    ]


def _require_cap(dim: int, cap: int | None, what: str) -> None:
    limit = dimension_cap(cap)
    if dim > limit:
        raise CapExceededError(
            f"{what} needs dimension {dim} > enumeration cap {limit} "
            f"(raise the cap explicitly or via {ENV_CAP_VAR})"
        )


def rm_iterate(p: RMParams, cap: int | None = None) -> Iterator[TruthTable]:
    """All 2^K codewords, Gray-ordered: successive words differ by one
    basis monomial (one XOR per step)."""
    _require_cap(p.dimension, cap, f"enumerating {p}")
    basis = [t.bits for t in monomial_basis(p)]
    for bits in _bitenum.iter_span(basis, p.n):
        yield TruthTable(p.m, bits)


def rm_weight_distribution(p: RMParams, cap: int | None = None) -> WeightDistribution:
    """Exact weight distribution by bit-parallel exhaustive enumeration."""
    _require_cap(p.dimension, cap, f"weight distribution of {p}")
    if p.trivial:
        return WeightDistribution.from_counts(p.n, {0: 1})
    basis = [t.bits for t in monomial_basis(p)]
    hist = _bitenum.span_weight_histogram(basis, p.n)
    return WeightDistribution.from_dense(hist.tolist())


def mceliece_exponent(p: RMParams) -> int:
    """floor((m-1)/k), the divisibility exponent; needs k >= 1."""
    if p.trivial or p.k == 0:
        raise ParameterError("McEliece exponent needs order k >= 1")
    return (p.m - 1) // p.k


def mceliece_check(p: RMParams, cap: int | None = None) -> bool:
    """True iff every codeword weight is divisible by 2^mceliece_exponent.
    Exponent 0 is vacuous and returns True without enumerating."""
    e = mceliece_exponent(p)
    if e == 0:
        return True
    dist = rm_weight_distribution(p, cap)
    modulus = 1 << e
    return all(w % modulus == 0 for w in dist.support)


def is_doubly_even(d: WeightDistribution) -> bool:
    """True iff every weight with a nonzero count is divisible by 4."""
    return all(w % 4 == 0 for w in d.support)


@lru_cache(maxsize=None)
def _high_degree_mask(m: int, k: int) -> int:
    """Packed mask of the table positions whose point index has popcount
    > k; an ANF coefficient there means degree > k."""
    n = 1 << m
    if k >= m:
        return 0
    if n < 8:
        mask = 0
        for u in range(n):
            if u.bit_count() > k:
                mask |= 1 << (n - 1 - u)
        return mask
    chunks = []
    step = 1 << 20
    for start in range(0, n, step):
        u = np.arange(start, min(start + step, n), dtype=np.uint32)
        bad = (np.bitwise_count(u) > k).astype(np.uint8)
        chunks.append(np.packbits(bad, bitorder="big").tobytes())
    return int.from_bytes(b"".join(chunks), "big")


def rm_membership(t: TruthTable, p: RMParams) -> bool:
    """True iff t's ANF has degree <= k (the zero function belongs to
    every code, including the trivial one)."""
    if t.m != p.m:
        raise ParameterError(f"table has m={t.m}, code has m={p.m}")
    if p.trivial:
        return t.bits == 0
    if p.k >= p.m:
        return True
    coef = _mobius_bits(t.bits, t.m)
    return coef & _high_degree_mask(p.m, p.k) == 0


def pivot_positions(p: RMParams) -> tuple[int, ...]:
    """Pivot coordinates of the reduced row-echelon form of the monomial
    generator matrix, ascending.  The complementary coordinates index the
    cosets of the code in the full space."""
    rows = [t.bits for t in monomial_basis(p)]
    n = p.n
    pivots = []
    for pos in range(n):
        if not rows:
            break
        colbit = 1 << (n - 1 - pos)
        hit = next((i for i, r in enumerate(rows) if r & colbit), None)
        if hit is None:
            continue
        pivot = rows.pop(hit)
        rows = [r ^ pivot if r & colbit else r for r in rows]
        pivots.append(pos)
    return tuple(pivots)
