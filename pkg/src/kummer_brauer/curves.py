"""Elliptic curve models over Q: invariants, reduction, exhaustive point
counting over F_p, Frobenius trace tables, and complex-multiplication status.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .arith import Rational, factor, is_prime, primes_up_to


class SingularCurveError(ValueError):
    """The supplied coefficients define a singular cubic."""


class NonIntegralModelError(ValueError):
    """The model is not p-integral; the caller must rescale first."""


class BadReductionError(ValueError):
    """Point counting requested at a prime of bad reduction."""


@dataclass(frozen=True)
class CurveRT2:
    """y^2 = x(x-a)(x-b) with distinct nonzero integers a, b.

    All three points of order 2 are rational: (0,0), (a,0), (b,0).
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0 or self.a == self.b:
            raise SingularCurveError(f"x(x-{self.a})(x-{self.b}) is not separable")

    def to_lw(self) -> "CurveLW":
        a, b = self.a, self.b
        return CurveLW(0, -(a + b), 0, a * b, 0)

    def j(self) -> Rational:
        return j_invariant_rt2(self)


@dataclass(frozen=True)
class CurveLW:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Rational
    a2: Rational
    a3: Rational
    a4: Rational
    a6: Rational

    def __init__(self, a1, a2, a3, a4, a6):
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, Fraction(v))
        if self.discriminant() == 0:
            raise SingularCurveError("zero discriminant")

    def b_invariants(self) -> tuple[Rational, Rational, Rational, Rational]:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> Rational:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j(self) -> Rational:
        b2, b4, _, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        return c4**3 / self.discriminant()

    def is_p_integral(self, p: int) -> bool:
        return all(
            c.denominator % p != 0 for c in (self.a1, self.a2, self.a3, self.a4, self.a6)
        )

    def key(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def label(self) -> str:
        return "[" + ",".join(str(c) for c in self.key()) + "]"


def discriminant(curve: CurveLW) -> Rational:
    return curve.discriminant()


def j_invariant_rt2(curve: CurveRT2) -> Rational:
    """j of y^2 = x(x-a)(x-b): 256 (a^2+b^2-ab)^3 / (a^2 b^2 (a-b)^2)."""
    a, b = curve.a, curve.b
    num = 256 * (a * a + b * b - a * b) ** 3
    den = a * a * b * b * (a - b) ** 2
    return Fraction(num, den)


def j_invariant_sw(p: int | Rational, q: int | Rational) -> Rational:
    """j of y^2 = x^3 + px + q: 1728 * 4p^3 / (4p^3 + 27q^2)."""
    p, q = Fraction(p), Fraction(q)
    disc = 4 * p**3 + 27 * q * q
    if disc == 0:
        raise SingularCurveError("4p^3 + 27q^2 = 0")
    return 1728 * 4 * p**3 / disc


def good_reduction_at(curve: CurveLW, p: int) -> bool:
    """Whether p divides the supplied model's discriminant.

    The model is taken as given (no minimalization), so a False here may be an
    artifact of a non-minimal model; callers treating False as "bad" only ever
    weaken certificates.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not curve.is_p_integral(p):
        raise NonIntegralModelError(f"model is not {p}-integral")
    disc = curve.discriminant()
    return disc.numerator % p != 0


def count_points(curve: CurveLW, p: int) -> int:
    """#E(F_p) including the point at infinity, by exhaustive enumeration of x.

    For odd p the quadratic in y is resolved by its discriminant against a
    table of squares mod p; p = 2 is exhausted directly.
    """
    if not curve.is_p_integral(p):
        raise NonIntegralModelError(f"model is not {p}-integral")
    if not good_reduction_at(curve, p):
        raise BadReductionError(f"bad reduction at {p}")

    def red(c: Rational) -> int:
        return c.numerator * pow(c.denominator, -1, p) % p

    a1, a2, a3, a4, a6 = (red(c) for c in (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6))
    if p == 2:
        n = 1
        for x in (0, 1):
            for y in (0, 1):
                if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % 2 == 0:
                    n += 1
        return n
    # number of y with y^2 + (a1 x + a3) y = rhs(x)  is  1 + chi(disc)
    sq = bytearray(p)
    for y in range((p + 1) // 2):
        sq[y * y % p] = 1
    n = 1
    for x in range(p):
        rhs = ((x + a2) * x + a4) * x + a6
        t = a1 * x + a3
        d = (t * t + 4 * rhs) % p
        if d == 0:
            n += 1
        elif sq[d]:
            n += 2
    return n


_AP_CACHE: dict[tuple, dict[int, int]] = {}


def ap(curve: CurveLW, p: int) -> int:
    """Frobenius trace a_p = p + 1 - #E(F_p) at a good prime, cached."""
    cache = _AP_CACHE.setdefault(curve.key(), {})
    if p not in cache:
        cache[p] = p + 1 - count_points(curve, p)
    return cache[p]


def good_primes(curve: CurveLW, bound: int):
    """Good primes p <= bound for the supplied model (non-p-integral skipped)."""
    for p in primes_up_to(bound):
        if curve.is_p_integral(p) and good_reduction_at(curve, p):
            yield p


@dataclass(frozen=True)
class FrobeniusTable:
    """a_p for all good primes p <= bound of one curve model."""

    curve: str
    bound: int
    entries: tuple[tuple[int, int], ...]

    def get(self, p: int) -> int | None:
        return dict(self.entries).get(p)


def frobenius_table(curve: CurveLW, bound: int) -> FrobeniusTable:
    entries = []
    for p in good_primes(curve, bound):
        t = ap(curve, p)
        if t * t > 4 * p:
            raise AssertionError(f"Hasse bound violated at {p}: a_p = {t}")
        entries.append((p, t))
    return FrobeniusTable(curve.label(), bound, tuple(entries))


def _divisors(n: int) -> list[int]:
    """All positive divisors of a nonzero integer."""
    f = factor(abs(n))
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _rational_roots_monic_cubic(c2: Rational, c1: Rational, c0: Rational) -> list[Rational]:
    """All rational roots (distinct) of x^3 + c2 x^2 + c1 x + c0."""
    lcm_den = 1
    for c in (c2, c1, c0):
        lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
    # y = L x turns the cubic monic integral: y^3 + c2 L y^2 + c1 L^2 y + c0 L^3
    L = lcm_den
    d2 = int(c2 * L)
    d1 = int(c1 * L * L)
    d0 = int(c0 * L**3)
    roots: set[Fraction] = set()
    if d0 == 0:
        roots.add(Fraction(0))
        # remaining quadratic y^2 + d2 y + d1
        disc = d2 * d2 - 4 * d1
        if disc >= 0:
            s = isqrt(disc)
            if s * s == disc:
                for sign in (1, -1):
                    num = -d2 + sign * s
                    if num % 2 == 0:
                        roots.add(Fraction(num // 2))
    else:
        for d in _divisors(d0):
            for r in (d, -d):
                if ((r + d2) * r + d1) * r + d0 == 0:
                    roots.add(Fraction(r))
    return sorted(Fraction(r, L) for r in roots)


NO_TWO_TORSION = "no rational 2-torsion"
UNSUPPORTED_MODEL = "unsupported model"


def to_rt2(curve: CurveLW) -> CurveRT2 | str:
    """Translate y^2 = cubic with three rational roots to y^2 = x(x-a)(x-b).

    The smallest root goes to 0 and the remaining roots, sorted ascending,
    give (a, b).  Models with a1 or a3 nonzero are not handled (completing the
    square is left to the caller), and a cubic with fewer than three rational
    roots has no fully rational 2-torsion.
    """
    if curve.a1 != 0 or curve.a3 != 0:
        return UNSUPPORTED_MODEL
    roots = _rational_roots_monic_cubic(curve.a2, curve.a4, curve.a6)
    if len(roots) < 3:
        return NO_TWO_TORSION
    # scaling x by u^2 (u = common denominator) keeps the curve isomorphic
    # over Q and makes the roots integral
    u = 1
    for r in roots:
        u = u * r.denominator // gcd(u, r.denominator)
    scaled = sorted(int(r * u * u) for r in roots)
    r0, r1, r2 = scaled
    return CurveRT2(r1 - r0, r2 - r0)


# The thirteen rational j-invariants of curves with complex multiplication
# (class number one); each entry is validated by the supersingular-frequency
# oracle in the test suite rather than taken on faith.
CM_J_INVARIANTS = (
    0,
    1728,
    -3375,
    8000,
    54000,
    287496,
    -32768,
    16581375,
    -884736,
    -12288000,
    -884736000,
    -147197952000,
    -262537412640768000,
)


@dataclass(frozen=True)
class CMStatus:
    verdict: str  # "cm" | "not_cm"
    j: Rational
    evidence: str
    supersingular_fraction: tuple[int, int]  # (zero-trace primes, good primes)


def supersingular_fraction(curve: CurveLW, bound: int) -> tuple[int, int]:
    """(number of good p <= bound with a_p = 0, number of good p <= bound)."""
    zeros = total = 0
    for p in good_primes(curve, bound):
        total += 1
        if ap(curve, p) == 0:
            zeros += 1
    return zeros, total


def cm_status(curve: CurveLW, bound: int) -> CMStatus:
    """Complex-multiplication verdict by j-membership in the rational CM list,
    with the supersingular frequency attached as corroborating evidence."""
    if bound < 50:
        raise ValueError("bound must be at least 50")
    j = curve.j()
    frac = supersingular_fraction(curve, bound)
    in_list = j.denominator == 1 and j.numerator in CM_J_INVARIANTS
    if in_list:
        return CMStatus(
            "cm", j, f"j = {j} is in the rational CM list; "
            f"a_p = 0 for {frac[0]} of {frac[1]} good p <= {bound}", frac)
    return CMStatus(
        "not_cm", j, f"j = {j} is not in the rational CM list; "
        f"a_p = 0 for {frac[0]} of {frac[1]} good p <= {bound}", frac)


def curve_with_j(j: int | Rational) -> CurveLW:
    """Some elliptic curve over Q with the given j-invariant (integral model)."""
    j = Fraction(j)
    if j == 0:
        return CurveLW(0, 0, 0, 0, 1)
    if j == 1728:
        return CurveLW(0, 0, 0, -1, 0)
    s = j / (1728 - j)
    p, q = 3 * s, 2 * s
    u = p.denominator * q.denominator // gcd(p.denominator, q.denominator)
    return CurveLW(0, 0, 0, p * u**4, q * u**6)


# -- rational points and the chord-tangent group law ------------------------

Point = tuple[Rational, Rational] | None  # None is the point at infinity


def on_curve(curve: CurveLW, pt: Point) -> bool:
    if pt is None:
        return True
    x, y = Fraction(pt[0]), Fraction(pt[1])
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    return y * y + a1 * x * y + a3 * y == ((x + a2) * x + a4) * x + a6


def negate(curve: CurveLW, pt: Point) -> Point:
    if pt is None:
        return None
    x, y = pt
    return (x, -y - curve.a1 * x - curve.a3)


def add_points(curve: CurveLW, P: Point, Q: Point) -> Point:
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y2 == -y1 - a1 * x1 - a3:
        return None
    if x1 != x2:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    else:
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def multiply_point(curve: CurveLW, n: int, P: Point) -> Point:
    if n < 0:
        return multiply_point(curve, -n, negate(curve, P))
    R: Point = None
    Q = P
    while n:
        if n & 1:
            R = add_points(curve, R, Q)
        Q = add_points(curve, Q, Q)
        n >>= 1
    return R


def point_order(curve: CurveLW, P: Point, max_order: int = 12) -> int | None:
    """Exact order of P if it is at most max_order, else None."""
    if not on_curve(curve, P):
        raise ValueError("point is not on the curve")
    R = P
    for n in range(1, max_order + 1):
        if R is None:
            return n
        R = add_points(curve, R, P)
    return None
