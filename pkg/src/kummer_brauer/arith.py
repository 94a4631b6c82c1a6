"""Exact integer/rational arithmetic: factorization, p-adic valuations,
square classes in Q*/Q*^2, and nullspace computation over F2.

All values are immutable and all operations are deterministic, so everything
here is safe to share between concurrent tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

TRIAL_DIVISION_BOUND = 10**6

_SMALL_PRIMES: list[int] = []
_SIEVED_TO = 0


def _sieve(limit: int) -> list[int]:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return [i for i, f in enumerate(flags) if f]


def primes_up_to(limit: int) -> list[int]:
    """Primes <= limit, cached and extended on demand."""
    global _SMALL_PRIMES, _SIEVED_TO
    if _SIEVED_TO < limit:
        _SIEVED_TO = max(limit, 1000)
        _SMALL_PRIMES = _sieve(_SIEVED_TO)
    # bisect would do; the list is small enough that a scan is fine
    out = []
    for p in _SMALL_PRIMES:
        if p > limit:
            break
        out.append(p)
    return out


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # this witness set is proven deterministic for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n (deterministic restarts)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


@dataclass(frozen=True)
class Factorization:
    """sign * prod(p^e) with strictly increasing primes and e >= 1."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n


def factor(n: int) -> Factorization:
    """Factor a nonzero integer: trial division to 10^6, then Pollard rho
    with a deterministic primality check on the cofactors."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    powers: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    p = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p <= TRIAL_DIVISION_BOUND:
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
        p += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            powers[m] = powers.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(sign, tuple(sorted(powers.items())))


def valuation(x: int | Rational, p: int) -> int:
    """The p-adic valuation of a nonzero rational."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")

    def _val(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _val(x.numerator) - _val(x.denominator)


@dataclass(frozen=True)
class SquareClass:
    """An element of Q*/Q*^2: a sign and the squarefree prime support."""

    sign: int
    support: tuple[int, ...]

    @staticmethod
    def identity() -> "SquareClass":
        return SquareClass(1, ())

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and not self.support

    def representative(self) -> int:
        """The canonical squarefree integer representing this class."""
        n = self.sign
        for p in self.support:
            n *= p
        return n

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return sc_mul(self, other)


def square_class(x: int | Rational) -> SquareClass:
    """The class of a nonzero rational in Q*/Q*^2."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no square class")
    # x and numerator*denominator differ by the square denominator^2
    f = factor(x.numerator * x.denominator)
    support = tuple(p for p, e in f.factors if e % 2 == 1)
    return SquareClass(f.sign, support)


def sc_mul(u: SquareClass, v: SquareClass) -> SquareClass:
    """Group law of Q*/Q*^2: sign product, symmetric difference of supports."""
    support = tuple(sorted(set(u.support) ^ set(v.support)))
    return SquareClass(u.sign * v.sign, support)


def is_rational_square(x: int | Rational) -> bool:
    x = Fraction(x)
    return x != 0 and square_class(x).is_identity


class BitMatrix:
    """A matrix over F2; each row is stored as an int bitmask (bit j = column j)."""

    def __init__(self, rows: list[int], cols: int):
        self.rows = list(rows)
        self.cols = cols
        for r in self.rows:
            if r < 0 or r >> cols:
                raise ValueError("row mask exceeds column count")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def bit(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.cols):
            raise IndexError("bit index out of range")
        return (self.rows[i] >> j) & 1

    def rank(self) -> int:
        return len(_eliminate(self.rows, self.cols)[0])


def _eliminate(rows: list[int], cols: int) -> tuple[list[int], dict[int, int]]:
    """Row-reduce; returns the nonzero reduced rows and {pivot column: row mask}."""
    work = [r for r in rows if r]
    pivots: dict[int, int] = {}
    for col in range(cols):
        mask = 1 << col
        pivot_row = None
        for idx, r in enumerate(work):
            if r & mask:
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        prow = work.pop(pivot_row)
        work = [r ^ prow if r & mask else r for r in work]
        pivots = {c: (r ^ prow if r & mask else r) for c, r in pivots.items()}
        pivots[col] = prow
        work = [r for r in work if r]
    return list(pivots.values()), pivots


def f2_nullspace(matrix: BitMatrix) -> list[int]:
    """Basis of {v : M v = 0} over F2, each vector an int bitmask over columns.

    The count always equals cols - rank.
    """
    _, pivots = _eliminate(matrix.rows, matrix.cols)
    pivot_cols = set(pivots)
    free_cols = [c for c in range(matrix.cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = 1 << fc
        # pivot rows are fully reduced, so each pivot coordinate reads off directly
        for pc, row in pivots.items():
            if (row >> fc) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


def bits_of(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
