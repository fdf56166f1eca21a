"""Verification workflows for the balanced-word claims about Reed-Muller
cosets: censuses of balanced counts over coset families, and verdicts for

  theorem5   - no nontrivial coset of RM(k,m) (k >= ceil((m-1)/2)) has as
               many balanced words as the code itself;
  conjecture - the code beats every other coset inside RM(k+1,m)
               (empirical: checked only at the given parameters);
  rm1        - no nontrivial coset of RM(1,m) reaches 2^(m+1)-2 balanced
               words (spectral count, exhaustive or sampled);
  oddweight  - cosets of RM(m-2,m) with odd-weight representatives have
               no balanced words at all;
  equidist   - all nontrivial cosets of RM(m-2,m) inside RM(m-1,m) share
               one weight distribution.

Censuses shard deterministically across worker processes and can resume
from a JSON checkpoint.
"""

from __future__ import annotations

import enum
import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _bitenum
from .bfcore import TruthTable, monomial_tt
from .errors import CapExceededError, ExactnessError, ParameterError
from .rmcodes import (
    RMParams,
    WeightDistribution,
    dimension_cap,
    dual_params,
    monomial_basis,
    pivot_positions,
    rm_membership,
    rm_weight_distribution,
)
from .spectral import rm1_coset_balanced_count, wht_many
from .transforms import (
    CosetSpec,
    assmus_mattson,
    balanced_gap,
    coset_dual_profile,
    hamming_closed_forms,
    macwilliams,
)


class Scope(enum.Enum):
    FULL_SPACE = "full"
    WITHIN_NEXT_ORDER = "next"


class Method(enum.Enum):
    BRUTE = "brute"
    TRANSFORM = "transform"
    SPECTRAL = "spectral"


class Mode(enum.Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    SAMPLED = "SAMPLED"
    EMPIRICAL = "EMPIRICAL"


DEFAULT_COSET_CAPS = {Scope.FULL_SPACE: 1 << 20, Scope.WITHIN_NEXT_ORDER: 1 << 16}
_CHECKPOINT_CHUNK = 4096


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim verification."""

    claim: str
    params: dict
    mode: Mode
    method: Method
    passed: bool
    code_count: int
    max_other: int | None
    witness: TruthTable | None
    elapsed_ms: int

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ParameterError("failing verdict requires a witness")

    def to_json_obj(self) -> dict:
        return {
            "claim": self.claim,
            "params": dict(self.params),
            "mode": self.mode.value,
            "pass": self.passed,
            "code_count": str(self.code_count),
            "max_other": None if self.max_other is None else str(self.max_other),
            "witness_hex": None if self.witness is None else self.witness.to_hex(),
            "elapsed_ms": self.elapsed_ms,
            "method": self.method.value,
        }


def _verdict(claim, params, mode, method, passed, code_count, max_other, witness, t0) -> Verdict:
    return Verdict(
        claim=claim,
        params=params,
        mode=mode,
        method=method,
        passed=passed,
        code_count=code_count,
        max_other=max_other,
        witness=witness,
        elapsed_ms=int((time.monotonic() - t0) * 1000),
    )


def _rep_basis(code: RMParams, scope: Scope) -> list[int]:
    """Basis tables whose nonzero XOR-combinations are exactly one
    representative per nontrivial coset in scope."""
    if scope is Scope.FULL_SPACE:
        pivots = set(pivot_positions(code))
        n = code.n
        return [1 << (n - 1 - pos) for pos in range(n) if pos not in pivots]
    if code.trivial or code.k >= code.m:
        raise ParameterError(f"{code} has no next order inside RM({code.m},{code.m})")
    return [
        monomial_tt(code.m, combo).bits
        for combo in itertools.combinations(range(1, code.m + 1), code.k + 1)
    ]


def _build_rep(basis: list[int], rep_id: int) -> int:
    bits = 0
    t = 0
    g = rep_id
    while g:
        if g & 1:
            bits ^= basis[t]
        g >>= 1
        t += 1
    return bits


def _require_coset_cap(r: int, scope: Scope, override: int | None) -> None:
    limit = DEFAULT_COSET_CAPS[scope] if override is None else override
    if (1 << r) > limit:
        raise CapExceededError(
            f"{1 << r} cosets in scope {scope.name} exceed the coset cap {limit}"
        )


def coset_representatives(
    code: RMParams, scope: Scope, coset_cap: int | None = None
):
    """One representative per nontrivial coset: nonzero vectors on the
    non-pivot coordinates (FULL_SPACE) or nonzero combinations of the
    degree-(k+1) monomials (WITHIN_NEXT_ORDER), in counting order of the
    combination index."""
    basis = _rep_basis(code, scope)
    _require_coset_cap(len(basis), scope, coset_cap)
    for g in range(1, 1 << len(basis)):
        yield TruthTable(code.m, _build_rep(basis, g))


def _require_dim_cap(code: RMParams, cap: int | None, what: str) -> None:
    limit = dimension_cap(cap)
    if code.dimension > limit:
        raise CapExceededError(
            f"{what} needs dimension {code.dimension} > enumeration cap {limit}"
        )


def balanced_count_of_coset(code: RMParams, rep: TruthTable, cap: int | None = None) -> int:
    """Words of weight n/2 in code + rep, by exhaustive enumeration
    (rep = 0 gives the code's own balanced count)."""
    if rep.m != code.m:
        raise ParameterError(f"rep has m={rep.m}, code has m={code.m}")
    _require_dim_cap(code, cap, f"counting balanced words in a coset of {code}")
    basis = [t.bits for t in monomial_basis(code)]
    return _bitenum.span_balanced_count(basis, code.n, rep.bits)


@dataclass(frozen=True)
class CosetCensus:
    """Balanced-word counts for every nontrivial coset in scope; entry
    ids decode through the same representative basis order."""

    code: RMParams
    scope: Scope
    entries: tuple[tuple[int, int], ...]
    code_balanced_count: int

    def rep_table(self, rep_id: int) -> TruthTable:
        basis = _rep_basis(self.code, self.scope)
        if not 1 <= rep_id < (1 << len(basis)):
            raise ParameterError(f"rep id {rep_id} out of range")
        return TruthTable(self.code.m, _build_rep(basis, rep_id))

    def max_entry(self) -> tuple[int, int]:
        """(first id attaining the max count, that count)."""
        if not self.entries:
            raise ParameterError("census has no nontrivial cosets")
        best_id, best = self.entries[0]
        for rep_id, c in self.entries[1:]:
            if c > best:
                best_id, best = rep_id, c
        return best_id, best

    def to_csv(self, fileobj) -> None:
        basis = _rep_basis(self.code, self.scope)
        m = self.code.m
        fileobj.write("rep_hex,balanced_count\n")
        for rep_id, c in self.entries:
            fileobj.write(f"{TruthTable(m, _build_rep(basis, rep_id)).to_hex()},{c}\n")


def _count_chunk(k: int, m: int, scope_name: str, start: int, stop: int) -> list[int]:
    """Balanced counts for rep ids start..stop-1 (worker entry point)."""
    code = RMParams(k, m)
    scope = Scope[scope_name]
    basis = _rep_basis(code, scope)
    code_bits = [t.bits for t in monomial_basis(code)]
    n = code.n
    if len(code_bits) <= _bitenum._BLOCK_LOG2:
        counter = _bitenum.SpanCounter(code_bits, n)
        return [counter.balanced_count(_build_rep(basis, g)) for g in range(start, stop)]
    return [
        _bitenum.span_balanced_count(code_bits, n, _build_rep(basis, g))
        for g in range(start, stop)
    ]


def _load_checkpoint(path: str, code: RMParams, scope: Scope, total: int) -> list[int]:
    with open(path) as fh:
        data = json.load(fh)
    expect = {"kind": "census", "k": code.k, "m": code.m, "scope": scope.name, "total": total}
    for key, val in expect.items():
        if data.get(key) != val:
            raise ParameterError(f"checkpoint {path} was written for different parameters ({key})")
    counts = [int(c) for c in data["counts"]]
    if len(counts) > total:
        raise ParameterError(f"checkpoint {path} holds {len(counts)} entries for {total} cosets")
    return counts


def _save_checkpoint(path: str, code: RMParams, scope: Scope, total: int, counts: list[int]) -> None:
    data = {
        "kind": "census",
        "k": code.k,
        "m": code.m,
        "scope": scope.name,
        "total": total,
        "counts": counts,
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def census_balanced(
    code: RMParams,
    scope: Scope,
    workers: int = 1,
    cap: int | None = None,
    coset_cap: int | None = None,
    checkpoint: str | None = None,
) -> CosetCensus:
    """Balanced-word count of every nontrivial coset in scope, plus the
    code's own count.  Work is sharded over rep-id ranges; the merge is
    by id order, so the result is identical for any worker count."""
    basis = _rep_basis(code, scope)
    _require_coset_cap(len(basis), scope, coset_cap)
    _require_dim_cap(code, cap, f"balanced census of {code}")
    total = (1 << len(basis)) - 1

    counts: list[int] = []
    if checkpoint and os.path.exists(checkpoint):
        counts = _load_checkpoint(checkpoint, code, scope, total)

    chunks = [
        (start, min(start + _CHECKPOINT_CHUNK, total + 1))
        for start in range(1 + len(counts), total + 1, _CHECKPOINT_CHUNK)
    ]
    if workers > 1 and chunks:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            args = [(code.k, code.m, scope.name, a, b) for a, b in chunks]
            for part in pool.map(_count_chunk, *zip(*args)):
                counts.extend(part)
                if checkpoint:
                    _save_checkpoint(checkpoint, code, scope, total, counts)
    else:
        for a, b in chunks:
            counts.extend(_count_chunk(code.k, code.m, scope.name, a, b))
            if checkpoint:
                _save_checkpoint(checkpoint, code, scope, total, counts)

    code_bits = [t.bits for t in monomial_basis(code)]
    code_count = _bitenum.span_balanced_count(code_bits, code.n, 0)
    entries = tuple(zip(range(1, total + 1), counts))
    return CosetCensus(code=code, scope=scope, entries=entries, code_balanced_count=code_count)


def _check_theorem_hypothesis(k: int, m: int) -> None:
    low = (m - 1 + 1) // 2  # ceil((m-1)/2)
    if not 1 <= k <= m - 1 or k < low:
        raise ParameterError(
            f"theorem hypothesis needs ceil((m-1)/2) <= k <= m-1; "
            f"got k={k}, m={m} (lower bound {max(low, 1)})"
        )


def verify_theorem_basic(
    k: int,
    m: int,
    method: Method = Method.BRUTE,
    workers: int = 1,
    cap: int | None = None,
    coset_cap: int | None = None,
    checkpoint: str | None = None,
) -> Verdict:
    """Strict-maximum check: every nontrivial coset of RM(k,m) in the
    full space has fewer balanced words than the code itself."""
    t0 = time.monotonic()
    _check_theorem_hypothesis(k, m)
    code = RMParams(k, m)
    params = {"k": k, "m": m}

    if method is Method.BRUTE:
        census = census_balanced(code, Scope.FULL_SPACE, workers, cap, coset_cap, checkpoint)
        code_count = census.code_balanced_count
        max_other = max(c for _, c in census.entries)
        witness = None
        if max_other >= code_count:
            bad_id = next(i for i, c in census.entries if c >= code_count)
            witness = census.rep_table(bad_id)
    elif method is Method.TRANSFORM:
        dual = dual_params(code)
        B = rm_weight_distribution(dual, cap)
        K, n = code.dimension, code.n
        code_count = macwilliams(B, K, n)[n // 2]
        max_other = 0
        witness = None
        for rep in coset_representatives(code, Scope.FULL_SPACE, coset_cap):
            profile = coset_dual_profile(CosetSpec(code, rep), cap)
            d_half = assmus_mattson(profile, B, K, n)[n // 2]
            if balanced_gap(B, profile, K, n) != code_count - d_half:
                raise ExactnessError(
                    f"gap formula disagrees with the transform pair at rep {rep.to_hex()}"
                )
            if d_half > max_other:
                max_other = d_half
            if witness is None and d_half >= code_count:
                witness = rep
    else:
        raise ParameterError("theorem verification supports BRUTE or TRANSFORM")

    return _verdict(
        "theorem5", params, Mode.EXHAUSTIVE, method,
        max_other < code_count, code_count, max_other, witness, t0,
    )


def verify_quotient_conjecture(
    k: int,
    m: int,
    workers: int = 1,
    cap: int | None = None,
    coset_cap: int | None = None,
    checkpoint: str | None = None,
) -> Verdict:
    """Does RM(k,m) beat every other coset of itself inside RM(k+1,m)?
    Checked exhaustively at these parameters only, hence EMPIRICAL."""
    t0 = time.monotonic()
    if not isinstance(k, int) or not 1 <= k <= m - 1:
        raise ParameterError(f"quotient check needs 1 <= k <= m-1, got k={k}, m={m}")
    code = RMParams(k, m)
    census = census_balanced(code, Scope.WITHIN_NEXT_ORDER, workers, cap, coset_cap, checkpoint)
    code_count = census.code_balanced_count
    max_other = max(c for _, c in census.entries)
    witness = None
    if max_other >= code_count:
        bad_id = next(i for i, c in census.entries if c >= code_count)
        witness = census.rep_table(bad_id)
    return _verdict(
        "conjecture", {"k": k, "m": m}, Mode.EMPIRICAL, Method.BRUTE,
        max_other < code_count, code_count, max_other, witness, t0,
    )


def verify_rm1_proposition(
    m: int,
    exhaustive: bool | None = None,
    samples: int = 10_000,
    seed: int = 0,
    coset_cap: int | None = None,
) -> Verdict:
    """Every nontrivial coset of RM(1,m) has fewer than 2^(m+1)-2
    balanced words.  Exhaustive over all cosets (m <= 4) or over seeded
    random non-affine representatives (m <= 16); counts are spectral,
    cross-checked against brute enumeration at m <= 3."""
    t0 = time.monotonic()
    if exhaustive is None:
        exhaustive = m <= 4
    bound = (1 << (m + 1)) - 2
    code = RMParams(1, m)

    if exhaustive:
        if m > 4:
            raise ParameterError(f"exhaustive proposition check supports m <= 4, got {m}")
        max_other = 0
        witness = None
        for rep in coset_representatives(code, Scope.FULL_SPACE, coset_cap):
            c = rm1_coset_balanced_count(rep)
            if m <= 3 and c != balanced_count_of_coset(code, rep):
                raise ExactnessError(f"spectral/brute disagreement at rep {rep.to_hex()}")
            if c > max_other:
                max_other = c
            if witness is None and c >= bound:
                witness = rep
        return _verdict(
            "rm1", {"m": m}, Mode.EXHAUSTIVE, Method.SPECTRAL,
            max_other < bound, bound, max_other, witness, t0,
        )

    if not 2 <= m <= 16:
        raise ParameterError(f"sampled proposition check supports 2 <= m <= 16, got {m}")
    if samples < 1:
        raise ParameterError(f"sample count must be positive, got {samples}")
    n = 1 << m
    rng = random.Random(seed)
    drawn: list[int] = []
    while len(drawn) < samples:
        bits = rng.getrandbits(n)
        if not rm_membership(TruthTable(m, bits), code):
            drawn.append(bits)
    max_other = 0
    witness = None
    chunk_rows = max(1, (1 << 22) // n)
    for lo in range(0, samples, chunk_rows):
        batch = drawn[lo : lo + chunk_rows]
        spectra = wht_many(batch, m)
        zero_counts = 2 * np.count_nonzero(spectra == 0, axis=1)
        max_other = max(max_other, int(zero_counts.max()))
        if witness is None:
            bad = np.nonzero(zero_counts >= bound)[0]
            if bad.size:
                witness = TruthTable(m, batch[int(bad[0])])
    return _verdict(
        "rm1", {"m": m, "samples": samples, "seed": seed}, Mode.SAMPLED, Method.SPECTRAL,
        max_other < bound, bound, max_other, witness, t0,
    )


def verify_oddweight_cosets(m: int, cap: int | None = None, coset_cap: int | None = None) -> Verdict:
    """Cosets of RM(m-2,m) with odd-weight representatives (those outside
    RM(m-1,m)) contain no balanced words; in fact every word weight there
    is odd, which the enumeration re-checks."""
    t0 = time.monotonic()
    if not 2 <= m <= 5:
        raise ParameterError(f"odd-weight coset check supports 2 <= m <= 5, got {m}")
    code = RMParams(m - 2, m)
    _require_dim_cap(code, cap, f"odd-weight coset check of {code}")
    code_bits = [t.bits for t in monomial_basis(code)]
    n = code.n
    code_count = int(_bitenum.span_weight_histogram(code_bits, n)[n // 2])
    max_other = 0
    witness = None
    for rep in coset_representatives(code, Scope.FULL_SPACE, coset_cap):
        if rep.bits.bit_count() % 2 == 0:
            continue
        hist = _bitenum.span_weight_histogram(code_bits, n, rep.bits)
        balanced = int(hist[n // 2])
        if balanced > max_other:
            max_other = balanced
        even_words = int(hist[0::2].sum())
        if witness is None and (balanced > 0 or even_words > 0):
            witness = rep
    return _verdict(
        "oddweight", {"m": m}, Mode.EXHAUSTIVE, Method.BRUTE,
        witness is None, code_count, max_other, witness, t0,
    )


def verify_hamming_coset_equidistribution(
    m: int, cap: int | None = None, coset_cap: int | None = None
) -> Verdict:
    """All nontrivial cosets of RM(m-2,m) inside RM(m-1,m) share one full
    weight distribution, whose balanced entry matches the closed form."""
    t0 = time.monotonic()
    if not 3 <= m <= 5:
        raise ParameterError(f"equidistribution check supports 3 <= m <= 5, got {m}")
    code = RMParams(m - 2, m)
    _require_dim_cap(code, cap, f"equidistribution check of {code}")
    code_bits = [t.bits for t in monomial_basis(code)]
    n = code.n
    code_count = int(_bitenum.span_weight_histogram(code_bits, n)[n // 2])

    reference: WeightDistribution | None = None
    max_other = 0
    witness = None
    for rep in coset_representatives(code, Scope.WITHIN_NEXT_ORDER, coset_cap):
        hist = _bitenum.span_weight_histogram(code_bits, n, rep.bits)
        dist = WeightDistribution.from_dense(hist.tolist())
        if reference is None:
            reference = dist
            max_other = dist[n // 2]
        elif dist != reference:
            witness = rep
            break
    closed_b, closed_d = hamming_closed_forms(m)
    if witness is None and (code_count != closed_b or max_other != closed_d):
        raise ExactnessError(
            f"equidistributed cosets disagree with closed forms at m={m}: "
            f"({code_count}, {max_other}) vs ({closed_b}, {closed_d})"
        )
    return _verdict(
        "equidist", {"m": m}, Mode.EXHAUSTIVE, Method.BRUTE,
        witness is None, code_count, max_other, witness, t0,
    )


def coset_weight_distribution(
    code: RMParams, rep: TruthTable, method: Method = Method.TRANSFORM, cap: int | None = None
) -> WeightDistribution:
    """Full weight distribution of code + rep, by enumeration or by the
    dual-side transform; both require rep outside the code."""
    spec = CosetSpec(code, rep)
    if method is Method.BRUTE:
        _require_dim_cap(code, cap, f"coset distribution of {code}")
        basis = [t.bits for t in monomial_basis(code)]
        hist = _bitenum.span_weight_histogram(basis, code.n, rep.bits)
        return WeightDistribution.from_dense(hist.tolist())
    if method is Method.TRANSFORM:
        dual = dual_params(code)
        B = rm_weight_distribution(dual, cap)
        profile = coset_dual_profile(spec, cap)
        return assmus_mattson(profile, B, code.dimension, code.n)
    raise ParameterError("coset distributions support BRUTE or TRANSFORM")
