import random
from fractions import Fraction

import pytest

from kummer_brauer.curves import (
    CM_J_INVARIANTS,
    CurveLW,
    CurveRT2,
    NO_TWO_TORSION,
    UNSUPPORTED_MODEL,
    BadReductionError,
    NonIntegralModelError,
    SingularCurveError,
    cm_status,
    count_points,
    curve_with_j,
    frobenius_table,
    good_reduction_at,
    j_invariant_rt2,
    j_invariant_sw,
    point_order,
    supersingular_fraction,
    to_rt2,
)

E_XCUBE_MINUS_X = CurveLW(0, 0, 0, -1, 0)
E_37 = CurveLW(0, 0, 1, -1, 0)  # y^2 + y = x^3 - x
E_43 = CurveLW(0, 1, 1, 0, 0)  # y^2 + y = x^3 + x^2
E_SEXTIC = CurveLW(0, 0, 0, 0, 1)  # y^2 = x^3 + 1


# -- independent oracles ------------------------------------------------------


def det_fraction(mat):
    """Determinant by fraction-free-ish Gaussian elimination over Q."""
    m = [[Fraction(v) for v in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def cubic_disc_by_resultant(c2, c1, c0):
    """disc(x^3 + c2 x^2 + c1 x + c0) = -Res(f, f') via a Sylvester matrix."""
    f = [1, c2, c1, c0]
    fp = [3, 2 * c2, c1]
    syl = [
        f + [0],
        [0] + f,
        fp + [0, 0],
        [0] + fp + [0],
        [0, 0] + fp,
    ]
    return -det_fraction(syl)


def double_loop_count(curve, p):
    """Exhaustive (x, y) in F_p^2 point count, plus the point at infinity."""
    def red(c):
        return c.numerator * pow(c.denominator, -1, p) % p

    a1, a2, a3, a4, a6 = (red(c) for c in
                          (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6))
    n = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y
                    - (x**3 + a2 * x * x + a4 * x + a6)) % p == 0:
                n += 1
    return n


def random_lw(rng):
    while True:
        try:
            return CurveLW(rng.randint(0, 1), rng.randint(-5, 5),
                           rng.randint(0, 1), rng.randint(-20, 20),
                           rng.randint(-20, 20))
        except SingularCurveError:
            continue


def random_rt2(rng, lo=-40, hi=40):
    while True:
        a, b = rng.randint(lo, hi), rng.randint(lo, hi)
        if a and b and a != b:
            return CurveRT2(a, b)


# -- invariants ----------------------------------------------------------------


def test_j_rt2_examples():
    assert j_invariant_rt2(CurveRT2(1, 2)) == 1728
    assert j_invariant_sw(-1, 0) == 1728  # the translated model y^2 = x^3 - x
    assert j_invariant_rt2(CurveRT2(5, 7)) == Fraction(3796416, 1225)
    assert j_invariant_rt2(CurveRT2(7, 5)) == j_invariant_rt2(CurveRT2(5, 7))


def test_j_sw_examples():
    assert j_invariant_sw(-1, 0) == 1728
    assert j_invariant_sw(0, 1) == 0
    assert j_invariant_sw(6, -2) == 1536
    with pytest.raises(SingularCurveError):
        j_invariant_sw(-3, 2)  # 4*(-27) + 27*4 = 0


def test_j_formulas_agree_after_depression():
    rng = random.Random(17)
    for _ in range(100):
        c = random_rt2(rng)
        a, b = Fraction(c.a), Fraction(c.b)
        s = (a + b) / 3
        p = a * b - (a + b) ** 2 / 3
        q = s**3 - (a + b) * s * s + a * b * s
        assert j_invariant_sw(p, q) == j_invariant_rt2(c)


def test_discriminant_examples():
    assert E_XCUBE_MINUS_X.discriminant() == 64
    assert CurveLW(0, 0, 0, 0, 1).discriminant() == -432
    c = CurveRT2(1, 2).to_lw()
    assert c.discriminant() == 64
    assert c.discriminant() == 16 * 1 * 4 * 1  # 16 a^2 b^2 (a-b)^2


def test_discriminant_against_resultant_oracle():
    rng = random.Random(23)
    for _ in range(100):
        a2, a4, a6 = rng.randint(-10, 10), rng.randint(-10, 10), rng.randint(-10, 10)
        try:
            c = CurveLW(0, a2, 0, a4, a6)
        except SingularCurveError:
            continue
        assert c.discriminant() == 16 * cubic_disc_by_resultant(a2, a4, a6)


def test_rt2_discriminant_formula():
    rng = random.Random(29)
    for _ in range(50):
        c = random_rt2(rng)
        a, b = c.a, c.b
        assert c.to_lw().discriminant() == 16 * a * a * b * b * (a - b) ** 2


def test_good_reduction():
    c = CurveRT2(1, 2).to_lw()  # disc 64
    assert good_reduction_at(c, 5)
    assert not good_reduction_at(c, 2)
    assert good_reduction_at(E_XCUBE_MINUS_X, 3)
    with pytest.raises(NonIntegralModelError):
        good_reduction_at(CurveLW(0, 0, 0, Fraction(1, 5), 1), 5)


def test_count_points_examples():
    assert count_points(E_XCUBE_MINUS_X, 5) == 8  # a_5 = -2
    assert count_points(E_XCUBE_MINUS_X, 7) == 8  # a_7 = 0
    assert count_points(E_37, 3) == 7  # a_3 = -3
    assert count_points(E_43, 3) == 6  # a_3 = -2
    with pytest.raises(BadReductionError):
        count_points(CurveRT2(1, 2).to_lw(), 2)


def test_count_points_against_double_loop():
    rng = random.Random(41)
    curves = [E_XCUBE_MINUS_X, E_37, E_43, E_SEXTIC] + [random_lw(rng) for _ in range(6)]
    for c in curves:
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            if not (c.is_p_integral(p) and good_reduction_at(c, p)):
                continue
            assert count_points(c, p) == double_loop_count(c, p)


def test_frobenius_table_examples():
    t = frobenius_table(E_XCUBE_MINUS_X, 7)
    assert dict(t.entries) == {3: 0, 5: -2, 7: 0}
    assert frobenius_table(E_XCUBE_MINUS_X, 1).entries == ()
    t = frobenius_table(E_37, 3)
    assert dict(t.entries) == {2: -2, 3: -3}


def test_hasse_bound_random_curves():
    rng = random.Random(53)
    for _ in range(50):
        c = random_lw(rng)
        for p, t in frobenius_table(c, 200).entries:
            assert t * t <= 4 * p


def test_to_rt2_examples():
    # roots {-2, 1, 2}: y^2 = (x-1)(x-2)(x+2) = x^3 - x^2 - 4x + 4
    assert to_rt2(CurveLW(0, -1, 0, -4, 4)) == CurveRT2(3, 4)
    assert to_rt2(CurveLW(0, 0, 0, 6, -2)) == NO_TWO_TORSION
    assert to_rt2(E_37) == UNSUPPORTED_MODEL


def test_to_rt2_rational_roots():
    # roots {0, 1/4, 2}: scaling by 4^2 gives integer roots {0, 4, 32}
    c = CurveLW(0, Fraction(-9, 4), 0, Fraction(1, 2), 0)
    assert to_rt2(c) == CurveRT2(4, 32)


def test_root_choice_independence():
    import itertools
    rng = random.Random(61)
    for _ in range(30):
        c = random_rt2(rng)
        roots = [0, c.a, c.b]
        js = set()
        for k in range(3):
            rest = [roots[i] for i in range(3) if i != k]
            for perm in itertools.permutations(rest):
                js.add(j_invariant_rt2(CurveRT2(perm[0] - roots[k], perm[1] - roots[k])))
        assert len(js) == 1


def test_cm_status_examples():
    assert cm_status(E_XCUBE_MINUS_X, 200).verdict == "cm"  # j = 1728
    assert cm_status(CurveLW(0, 0, 0, 0, -1), 200).verdict == "cm"  # j = 0
    st = cm_status(CurveLW(0, 0, 0, 6, -2), 500)
    assert st.verdict == "not_cm" and st.j == 1536
    with pytest.raises(ValueError):
        cm_status(E_37, 10)


def test_cm_list_validated_by_supersingular_oracle():
    # every hard-coded CM j-invariant must come with a curve whose
    # supersingular frequency is at least 0.35 for p <= 500
    for j in CM_J_INVARIANTS:
        c = curve_with_j(j)
        assert c.j() == j
        zeros, total = supersingular_fraction(c, 500)
        assert total > 50
        assert Fraction(zeros, total) >= Fraction(35, 100), (j, zeros, total)


def test_not_cm_low_supersingular_frequency():
    for c in (CurveLW(0, 0, 0, 6, -2), CurveRT2(3, 4).to_lw()):
        zeros, total = supersingular_fraction(c, 500)
        assert Fraction(zeros, total) < Fraction(15, 100)


def test_cm_verdicts_match_statistic():
    for c in (E_XCUBE_MINUS_X, CurveLW(0, 0, 0, 0, -1)):
        zeros, total = supersingular_fraction(c, 500)
        assert Fraction(zeros, total) > Fraction(35, 100)


def test_point_order():
    assert point_order(E_SEXTIC, (Fraction(2), Fraction(3))) == 6
    assert point_order(E_SEXTIC, (Fraction(0), Fraction(1))) == 3
    assert point_order(E_SEXTIC, (Fraction(-1), Fraction(0))) == 2
    assert point_order(E_SEXTIC, None) == 1
    with pytest.raises(ValueError):
        point_order(E_SEXTIC, (Fraction(5), Fraction(5)))


def test_singular_inputs_rejected():
    with pytest.raises(SingularCurveError):
        CurveRT2(0, 2)
    with pytest.raises(SingularCurveError):
        CurveRT2(3, 3)
    with pytest.raises(SingularCurveError):
        CurveLW(0, 0, 0, 0, 0)
