"""Prime generation, primality testing and factorization services.

Everything downstream works against a PrimeTable: an immutable, sieve-backed
oracle for the primes up to a configured limit.  Queries past the limit fall
back to a Miller-Rabin test with a witness set that is deterministic for all
64-bit integers, and factorization of large cofactors uses Brent's cycle
variant of Pollard rho.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from itertools import compress

from .errors import UsageError

# Segment width (count of odd numbers per segment) used while sieving.
# 2**18 bytes keeps the working set inside L2 on commodity hardware.
DEFAULT_SEGMENT_SIZE = 1 << 18

# Witness set proven deterministic for every n < 2**64
# (see https://miller-rabin.appspot.com/).
_U64_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_U64_BOUND = 1 << 64


@dataclass(frozen=True)
class FactorMultiset:
    """A complete factorization as (prime, exponent) pairs, primes ascending.

    The empty multiset represents 1.
    """

    factors: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> "FactorMultiset":
        return cls(tuple(sorted(exps.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class PrimeTable:
    """Immutable sieve output: primality of every integer up to ``limit``.

    ``odd_bits[i]`` is 1 exactly when ``2*i + 1`` is prime, so the bitmap
    covers the odd numbers only; 2 is special-cased everywhere.
    """

    limit: int
    odd_bits: bytes
    prime_list: tuple[int, ...]


def _small_odd_primes(limit: int) -> list[int]:
    """Odd primes <= limit by a plain (non-segmented) odd-only sieve."""
    if limit < 3:
        return []
    half = (limit + 1) // 2
    bits = bytearray(b"\x01") * half
    bits[0] = 0
    for p in range(3, math.isqrt(limit) + 1, 2):
        if bits[p >> 1]:
            start = (p * p) >> 1
            bits[start::p] = b"\x00" * len(range(start, half, p))
    return list(compress(range(1, limit + 1, 2), bits))


def build_table(limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> PrimeTable:
    """Sieve all primes up to ``limit`` (inclusive), one segment at a time.

    Beyond the output bitmap itself, memory stays bounded by the segment
    width plus the base primes below sqrt(limit).

    >>> build_table(10).prime_list
    (2, 3, 5, 7)
    """
    if limit < 2:
        raise UsageError(f"sieve limit must be >= 2, got {limit}")
    if segment_size < 1:
        raise UsageError(f"segment size must be >= 1, got {segment_size}")

    half = (limit + 1) // 2
    base = _small_odd_primes(math.isqrt(limit))
    bits = bytearray(b"\x01") * half
    bits[0] = 0  # 1 is not prime

    for seg_lo in range(0, half, segment_size):
        seg_hi = min(seg_lo + segment_size, half)
        lo_val = 2 * seg_lo + 1
        hi_val = 2 * (seg_hi - 1) + 1
        for p in base:
            if p * p > hi_val:
                break
            start = max(p * p, p * ((lo_val + p - 1) // p))
            if start % 2 == 0:
                start += p
            idx = start >> 1
            if idx < seg_hi:
                bits[idx:seg_hi:p] = b"\x00" * len(range(idx, seg_hi, p))

    primes = (2,) + tuple(compress(range(1, limit + 1, 2), bits))
    return PrimeTable(limit=limit, odd_bits=bytes(bits), prime_list=primes)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True when ``a`` certifies n composite (n - 1 = d * 2**s, d odd)."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _is_prime_u64(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_mr_witness(n, a, d, s) for a in _U64_WITNESSES)


def is_prime(n: int, table: PrimeTable) -> bool:
    """Primality of any n below 2**64; table lookups up to the sieve limit.

    >>> t = build_table(100)
    >>> is_prime(97, t), is_prime(91, t), is_prime(1, t)
    (True, False, False)
    """
    if n >= _U64_BOUND:
        raise UsageError(f"{n} exceeds the supported 64-bit input range")
    if n < 2:
        return False
    if n == 2:
        return True
    if n % 2 == 0:
        return False
    if n <= table.limit:
        return table.odd_bits[n >> 1] == 1
    return _is_prime_u64(n)


def primes_in(lo: int, hi: int, table: PrimeTable) -> list[int]:
    """Ascending primes p with lo <= p <= hi, sieved in segments.

    Windows beyond the table limit are supported while sqrt(hi) stays within
    the table's base primes (i.e. hi <= limit**2) and hi fits in 64 bits.
    """
    if lo > hi:
        raise UsageError(f"empty window: lo={lo} > hi={hi}")
    if hi < 2:
        return []
    if hi <= table.limit:
        out = [2] if lo <= 2 else []
        first = max(lo, 3) | 1  # round up to odd
        if first <= hi:
            out.extend(
                compress(range(first, hi + 1, 2), _odd_slice(table, first, hi))
            )
        return out
    if hi >= _U64_BOUND or math.isqrt(hi) > table.limit:
        raise UsageError(
            f"window end {hi} exceeds the width supported by a table of limit "
            f"{table.limit}"
        )
    return _sieve_window(lo, hi, table)


def _odd_slice(table: PrimeTable, first: int, hi: int) -> bytes:
    """Bitmap bytes for the odd numbers first, first+2, ..., <= hi."""
    return table.odd_bits[first >> 1 : (hi >> 1) + 1]


def _sieve_window(lo: int, hi: int, table: PrimeTable) -> list[int]:
    out = [2] if lo <= 2 else []
    first = max(lo, 3) | 1
    if first > hi:
        return out
    size = (hi - first) // 2 + 1
    bits = bytearray(b"\x01") * size
    root = math.isqrt(hi)
    for p in table.prime_list[1 : bisect_right(table.prime_list, root)]:
        start = max(p * p, p * ((first + p - 1) // p))
        if start % 2 == 0:
            start += p
        idx = (start - first) >> 1
        if idx < size:
            bits[idx::p] = b"\x00" * len(range(idx, size, p))
    out.extend(compress(range(first, hi + 1, 2), bits))
    return out


def factorize(n: int, table: PrimeTable) -> FactorMultiset:
    """Complete factorization of n >= 1; factorize(1) is the empty multiset.

    Trial division over the table primes handles the bulk; any remaining
    cofactor is resolved by Miller-Rabin plus Pollard rho, so every 64-bit
    input factors completely.

    >>> factorize(12, build_table(100)).as_dict()
    {2: 2, 3: 1}
    """
    if n < 1:
        raise UsageError(f"factorize expects n >= 1, got {n}")
    if n >= _U64_BOUND:
        raise UsageError(f"{n} exceeds the supported 64-bit input range")
    exps: dict[int, int] = {}
    for p in table.prime_list:
        if p * p > n:
            break
        if n % p == 0:
            e = 1
            n //= p
            while n % p == 0:
                e += 1
                n //= p
            exps[p] = e
    if n > 1:
        if table.limit * table.limit >= n:
            # survived trial division by every prime <= sqrt(n)
            exps[n] = exps.get(n, 0) + 1
        else:
            _factor_large(n, exps)
    return FactorMultiset.from_dict(exps)


def _factor_large(n: int, exps: dict[int, int]) -> None:
    """Split n (coprime to all table primes) into primes via Pollard rho."""
    stack = [n]
    while stack:
        m = stack.pop()
        if _is_prime_u64(m):
            exps[m] = exps.get(m, 0) + 1
            continue
        d = _rho_brent(m)
        stack.append(d)
        stack.append(m // d)


def _rho_brent(n: int) -> int:
    """Nontrivial factor of odd composite n, Brent's cycle-finding rho.

    The polynomial increment walks a fixed sequence, so results are
    reproducible run to run.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, ys, x = 1, y, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable for 64-bit


def pi_upto(x: int, table: PrimeTable) -> int:
    """Count of primes <= x, answered from the table (x must be <= limit)."""
    if x > table.limit:
        raise UsageError(f"{x} exceeds table limit {table.limit}")
    if x < 2:
        return 0
    return 1 + table.odd_bits[1 : (x + 1) >> 1].count(1)
