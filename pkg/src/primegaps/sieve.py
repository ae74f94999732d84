"""Segmented prime sieve, gap stream, and prime-counting lookups.

The sieve works on odd integers only, one cache-sized segment at a
time.  Segments can be produced by a thread pool; consumers always see
them in ascending order, so every downstream accumulation is
deterministic regardless of the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, TextIO

import numpy as np

from .errors import DomainError, RangeLimitError, ResourceLimitError

DEFAULT_SEGMENT_SIZE = 1 << 20
MAX_LIMIT = 2**63
DEFAULT_MEMORY_BUDGET = 6 << 30  # bytes; generous for desk-scale scans

# Primes per block handed to scan folds.  Fixed: block boundaries take
# part in the compensated-summation grouping, so changing this constant
# changes low-order bits of scan outputs.
BLOCK_PRIMES = 1 << 15


@dataclass(frozen=True)
class PrimeGap:
    """One record of the gap stream: the n-th prime and its gap."""

    n: int
    p: int
    g: int


@dataclass(frozen=True)
class SievePlan:
    """Parameters of a sieve run.

    Output is a pure function of ``limit``; ``segment_size`` and
    ``worker_count`` only affect how the work is scheduled.
    """

    limit: int
    segment_size: int = DEFAULT_SEGMENT_SIZE
    worker_count: int = 1
    memory_budget: int = DEFAULT_MEMORY_BUDGET

    def __post_init__(self):
        if self.limit < 2:
            raise DomainError(f"sieve limit must be >= 2, got {self.limit}")
        if self.limit > MAX_LIMIT:
            raise DomainError(
                f"sieve limit {self.limit} exceeds the 64-bit cap 2**63"
            )
        if self.segment_size < 64:
            raise DomainError(
                f"segment_size must be >= 64, got {self.segment_size}"
            )
        if self.worker_count < 1:
            raise DomainError(
                f"worker_count must be >= 1, got {self.worker_count}"
            )


def estimate_prime_bytes(limit: int) -> int:
    """Rough upper bound on the bytes needed to hold all primes <= limit."""
    if limit < 10:
        return 64
    count = int(1.3 * limit / math.log(limit)) + 16
    return 8 * count


def check_budget(limit: int, budget: int) -> None:
    need = estimate_prime_bytes(limit)
    if need > budget:
        raise ResourceLimitError(
            f"sieving to {limit} needs an estimated {need} bytes of prime "
            f"storage, above the configured memory budget of {budget} bytes"
        )


def _base_primes(limit: int) -> np.ndarray:
    """Dense sieve for the sqrt-range base primes."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def _sieve_odd_segment(lo: int, hi: int, odd_bases: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi) for odd lo >= 3, via the precomputed odd base primes."""
    count = (hi - lo + 1) // 2
    if count <= 0:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(count, dtype=bool)
    for p in odd_bases:
        p = int(p)
        if p * p >= hi:
            break
        start = p * p
        if start < lo:
            start = ((lo + p - 1) // p) * p
            if start % 2 == 0:
                start += p
        if start < hi:
            mask[(start - lo) // 2 :: p] = False
    return lo + 2 * np.nonzero(mask)[0].astype(np.int64)


def iter_segments(plan: SievePlan) -> Iterator[np.ndarray]:
    """Yield arrays of primes per segment, in ascending order.

    With ``worker_count > 1`` segments are sieved concurrently but
    released strictly in order, so consumers observe the same stream
    for any worker count.
    """
    check_budget(plan.limit, plan.memory_budget)
    bases = _base_primes(math.isqrt(plan.limit))
    odd_bases = bases[1:] if len(bases) > 0 else bases

    spans = []
    lo = 3
    while lo <= plan.limit:
        hi = min(lo + plan.segment_size, plan.limit + 1)
        spans.append((lo, hi))
        lo = hi

    head = np.array([2], dtype=np.int64) if plan.limit >= 2 else None
    if head is not None:
        yield head

    if plan.worker_count == 1 or len(spans) <= 1:
        for lo, hi in spans:
            yield _sieve_odd_segment(lo, hi, odd_bases)
        return

    window = plan.worker_count + 2
    with ThreadPoolExecutor(max_workers=plan.worker_count) as pool:
        pending = {}
        next_submit = 0
        next_yield = 0
        while next_yield < len(spans):
            while next_submit < len(spans) and next_submit < next_yield + window:
                lo, hi = spans[next_submit]
                pending[next_submit] = pool.submit(
                    _sieve_odd_segment, lo, hi, odd_bases
                )
                next_submit += 1
            yield pending.pop(next_yield).result()
            next_yield += 1


def primes_up_to(
    x: int,
    *,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
    workers: int = 1,
    memory_budget: int = DEFAULT_MEMORY_BUDGET,
) -> np.ndarray:
    """All primes <= x in ascending order (empty array for x < 2)."""
    if x < 0:
        raise DomainError(f"primes_up_to requires x >= 0, got {x}")
    if x < 2:
        return np.empty(0, dtype=np.int64)
    plan = SievePlan(x, segment_size, workers, memory_budget)
    return np.concatenate(list(iter_segments(plan)))


def prime_count(x: int, **kwargs) -> int:
    """pi(x): the number of primes <= x."""
    if x < 0:
        raise DomainError(f"prime_count requires x >= 0, got {x}")
    if x < 2:
        return 0
    return int(len(primes_up_to(x, **kwargs)))


def nth_prime(n: int, **kwargs) -> int:
    """The n-th prime, p_1 = 2."""
    if n < 1:
        raise DomainError(f"nth_prime requires n >= 1, got {n}")
    if n < 6:
        return (2, 3, 5, 7, 11)[n - 1]
    # Rosser's bound: p_n < n (log n + log log n) for n >= 6.
    bound = int(n * (math.log(n) + math.log(math.log(n)))) + 16
    primes = primes_up_to(bound, **kwargs)
    return int(primes[n - 1])


@dataclass(frozen=True)
class PrimeBlock:
    """One slice of the prime stream handed to a scan fold.

    ``n0`` is the 1-based index of the first prime; ``succ`` is the
    prime immediately after the block (None only at the end of data),
    carried so gap- and derivative-style folds can stitch across the
    block boundary.
    """

    index: int
    n0: int
    primes: np.ndarray
    succ: int | None


class PrimeData:
    """Primes up to a limit with index/count lookups and block iteration."""

    def __init__(self, limit: int, primes: np.ndarray):
        self.limit = int(limit)
        self.primes = primes
        self._cumlog = None

    @classmethod
    def build(
        cls,
        limit: int,
        *,
        segment_size: int = DEFAULT_SEGMENT_SIZE,
        workers: int = 1,
        memory_budget: int = DEFAULT_MEMORY_BUDGET,
    ) -> "PrimeData":
        primes = primes_up_to(
            limit,
            segment_size=segment_size,
            workers=workers,
            memory_budget=memory_budget,
        )
        return cls(limit, primes)

    def __len__(self) -> int:
        return len(self.primes)

    def pi(self, x: int) -> int:
        """pi(x) for any 0 <= x <= limit."""
        if x > self.limit:
            raise RangeLimitError(
                f"pi({x}) is beyond the sieved limit {self.limit}; "
                "build a larger plan"
            )
        if x < 2:
            return 0
        return int(np.searchsorted(self.primes, x, side="right"))

    def nth(self, n: int) -> int:
        """The n-th prime of the sieved range."""
        if n < 1:
            raise DomainError(f"prime index must be >= 1, got {n}")
        if n > len(self.primes):
            raise RangeLimitError(
                f"prime index {n} is beyond the sieved range "
                f"(pi({self.limit}) = {len(self.primes)}); build a larger plan"
            )
        return int(self.primes[n - 1])

    def cumlog(self) -> np.ndarray:
        """Prefix sums of log p over the prime list (built lazily)."""
        if self._cumlog is None:
            self._cumlog = np.cumsum(np.log(self.primes.astype(np.float64)))
        return self._cumlog

    def blocks(
        self, *, limit: int | None = None, block_size: int = BLOCK_PRIMES
    ) -> Iterator[PrimeBlock]:
        """Iterate PrimeBlocks over primes <= limit (default: all)."""
        count = len(self.primes) if limit is None else self.pi(limit)
        j = 0
        for start in range(0, count, block_size):
            stop = min(start + block_size, count)
            succ = int(self.primes[stop]) if stop < len(self.primes) else None
            yield PrimeBlock(j, start + 1, self.primes[start:stop], succ)
            j += 1

    def block_count(
        self, *, limit: int | None = None, block_size: int = BLOCK_PRIMES
    ) -> int:
        count = len(self.primes) if limit is None else self.pi(limit)
        return (count + block_size - 1) // block_size


def gap_stream(plan: SievePlan) -> Iterator[PrimeGap]:
    """PrimeGap records for every prime p_n with p_{n+1} <= plan.limit."""
    n = 0
    prev = None
    for segment in iter_segments(plan):
        for p in segment:
            p = int(p)
            if prev is not None:
                n += 1
                yield PrimeGap(n, prev, p - prev)
            prev = p


def write_gap_stream(plan: SievePlan, out: TextIO) -> int:
    """Write the gap stream as ASCII "n,p,g" lines; returns the row count."""
    rows = 0
    for rec in gap_stream(plan):
        out.write(f"{rec.n},{rec.p},{rec.g}\n")
        rows += 1
    return rows
