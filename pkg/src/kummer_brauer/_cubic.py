"""The 2-division cubic of a Weierstrass model and its Galois group test."""

from __future__ import annotations

from fractions import Fraction

from .arith import is_rational_square
from .curves import CurveLW, _rational_roots_monic_cubic


def two_division_cubic(curve: CurveLW) -> tuple[Fraction, Fraction, Fraction]:
    """Monic integral-shape cubic whose roots generate the 2-division field.

    Completing the square gives 4x^3 + b2 x^2 + 2 b4 x + b6; substituting
    y = 4x makes it monic: y^3 + b2 y^2 + 8 b4 y + 16 b6.
    """
    b2, b4, b6, _ = curve.b_invariants()
    return b2, 8 * b4, 16 * b6


def cubic_discriminant(p: Fraction, q: Fraction, r: Fraction) -> Fraction:
    """Discriminant of y^3 + p y^2 + q y + r."""
    return (18 * p * q * r - 4 * p**3 * r + p * p * q * q - 4 * q**3
            - 27 * r * r)


def two_division_cubic_is_s3(curve: CurveLW) -> tuple[bool, str]:
    """Whether the Galois group of the 2-division cubic is all of S3.

    True iff the cubic is irreducible over Q (no rational root) and its
    discriminant is not a rational square.
    """
    p, q, r = two_division_cubic(curve)
    roots = _rational_roots_monic_cubic(p, q, r)
    if roots:
        return False, f"2-division cubic has a rational root ({roots[0]})"
    disc = cubic_discriminant(p, q, r)
    if is_rational_square(disc):
        return False, "2-division cubic has square discriminant (group inside A3)"
    return True, ("2-division cubic irreducible with non-square discriminant "
                  f"(class of {disc})")
