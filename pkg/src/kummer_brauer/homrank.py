"""Rank of the geometric homomorphism group Hom(E-bar, E'-bar) with
certificates where possible, and the applicability gate for the two-torsion
dimension formula.

Certificates are one-sided: r = 0 is only ever asserted with an explicit
witness, r = 1 and r = 2 only for a pair of equal curves, and everything
else is reported as inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import valuation
from .curves import (
    CM_J_INVARIANTS,
    CurveLW,
    CurveRT2,
    ap,
    cm_status,
    count_points,
    good_reduction_at,
    primes_up_to,
    to_rt2,
)
from .residues import Gate


@dataclass(frozen=True)
class IsogenyEvidence:
    kind: str  # "trace-square-mismatch" | "reduction-type-mismatch" | "same-curve" | "none-found"
    witness: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class RankVerdict:
    r: int | None  # 0, 1, 2, or None when nothing could be decided
    confidence: str  # "certified" | "heuristic" | "inconclusive"
    gate: Gate
    evidence: IsogenyEvidence


def _is_cm_j(curve: CurveLW) -> bool:
    j = curve.j()
    return j.denominator == 1 and j.numerator in CM_J_INVARIANTS


def _naive_count(curve: CurveLW, p: int) -> int:
    """Double-loop point count over F_p^2, used only to re-verify witnesses."""
    def red(c):
        return c.numerator * pow(c.denominator, -1, p) % p

    a1, a2, a3, a4, a6 = (red(c) for c in (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6))
    n = 1
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                n += 1
    return n


def nonisogeny_certificate(e: CurveLW, e2: CurveLW, bound: int) -> IsogenyEvidence:
    """Search good primes p <= bound for a witness that E and E' are not
    isogenous over Q-bar.

    Two sound witness kinds, scanned together with the smallest prime winning:
      - trace-square-mismatch: p good for both with a_p(E)^2 != a_p(E')^2.
        Curves isogenous over Q-bar with at least one of them non-CM are
        quadratic twists of each other, so their traces agree up to sign at
        every common good prime.  The test is skipped when both j-invariants
        are CM (quartic/sextic twists then break the sign argument).
      - reduction-type-mismatch: p with val_p(j) < 0 for one curve (potential
        multiplicative reduction) while the other has good reduction at p.
    """
    if bound < 10:
        raise ValueError("bound must be at least 10")
    traces_usable = not (_is_cm_j(e) and _is_cm_j(e2))
    je, je2 = e.j(), e2.j()
    for p in primes_up_to(bound):
        ok1 = e.is_p_integral(p) and good_reduction_at(e, p)
        ok2 = e2.is_p_integral(p) and good_reduction_at(e2, p)
        if traces_usable and ok1 and ok2:
            t1, t2 = ap(e, p), ap(e2, p)
            if t1 * t1 != t2 * t2:
                # re-verify both counts with the naive oracle before certifying
                assert count_points(e, p) == _naive_count(e, p)
                assert count_points(e2, p) == _naive_count(e2, p)
                return IsogenyEvidence(
                    "trace-square-mismatch", p,
                    f"a_{p} = {t1} vs {t2}; {t1*t1} != {t2*t2}")
        if ok2 and valuation(je, p) < 0:
            return IsogenyEvidence(
                "reduction-type-mismatch", p,
                f"val_{p}(j(E)) = {valuation(je, p)} < 0 but E' has good reduction at {p}")
        if ok1 and valuation(je2, p) < 0:
            return IsogenyEvidence(
                "reduction-type-mismatch", p,
                f"val_{p}(j(E')) = {valuation(je2, p)} < 0 but E has good reduction at {p}")
    return IsogenyEvidence("none-found", None, f"no witness among p <= {bound}")


def same_curve(e: CurveLW, e2: CurveLW) -> bool:
    """Equality as models, or of canonical translations when both have fully
    rational 2-torsion.  Twists with equal j are deliberately not "same"."""
    if e.key() == e2.key():
        return True
    r1, r2 = to_rt2(e), to_rt2(e2)
    if isinstance(r1, CurveRT2) and isinstance(r2, CurveRT2):
        return r1 == r2
    return False


def rank_r(e: CurveLW, e2: CurveLW, bound: int) -> RankVerdict:
    """Decide r = rank Hom(E-bar, E'-bar) where a sound verdict is available.

    r = 0 is certified by a non-isogeny witness; r = 1 (same curve, no CM) is
    heuristic because the CM exclusion rests on the rational CM j-list; for a
    CM curve paired with itself r = 2 but the applicability gate is withheld
    (its cohomological condition is not checked here).  Anything else is
    inconclusive.
    """
    if same_curve(e, e2):
        # 500 gives the supersingular statistic enough primes to be legible
        # without dragging in a large trace table
        status = cm_status(e, 500)
        if status.verdict == "not_cm":
            gate = Gate("same-curve-no-cm", True,
                        f"E = E'; {status.evidence}")
            return RankVerdict(1, "heuristic", gate, IsogenyEvidence("same-curve"))
        gate = Gate(None, False,
                    "E = E' has CM; the third applicability case needs a "
                    "cohomological vanishing this tool does not verify")
        return RankVerdict(2, "inconclusive", gate, IsogenyEvidence("same-curve"))
    evidence = nonisogeny_certificate(e, e2, bound)
    if evidence.kind in ("trace-square-mismatch", "reduction-type-mismatch"):
        gate = Gate("not-isogenous", True, evidence.detail)
        return RankVerdict(0, "certified", gate, evidence)
    gate = Gate(None, False, "no non-isogeny witness found and curves not equal")
    return RankVerdict(None, "inconclusive", gate, evidence)
