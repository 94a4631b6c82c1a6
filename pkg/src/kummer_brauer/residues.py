"""Residues of the four quaternion symbols on Kum(E x E') at the exceptional
lines, the induced F2 kernel dimension d, and the two-torsion dimension
formula dim Br(X)_2/Br(k)_2 = d - r.

The surface is z^2 = x(x-a)(x-b) y(y-a')(y-b') for curves with rational
2-torsion, and the four symbol algebras are
((x-mu)(x-b), (y-nu)(y-b')) with mu in {0, a}, nu in {0, a'}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import BitMatrix, SquareClass, bits_of, f2_nullspace, sc_mul, square_class

ALGEBRA_LABELS = ("A[a,a']", "A[a,0]", "A[0,a']", "A[0,0]")


class DegenerateCurveError(ValueError):
    """One of the two cubics x(x-a)(x-b) is not separable."""


class DimensionContradictionError(RuntimeError):
    """d < r with a passing applicability gate: either r is wrong or a bug."""


@dataclass(frozen=True)
class ResidueMatrix:
    """Square-class residues of the four symbol algebras at exceptional lines.

    Rows are ordered A[a,a'], A[a,0], A[0,a'], A[0,0].  In 4x4 form the
    columns are the lines over the 2-torsion points (0,0), (0,a'), (a,0),
    (a,a'); the extended 4x9 form appends (0,b'), (a,b'), (b,0), (b,a'),
    (b,b').
    """

    pair: tuple[int, int, int, int]  # (a, b, a', b')
    columns: tuple[str, ...]
    entries: tuple[tuple[SquareClass, ...], ...]

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def representative_rows(self) -> list[list[int]]:
        """Entries as canonical squarefree integers (for display)."""
        return [[c.representative() for c in row] for row in self.entries]


def _line_label(i: str, j: str) -> str:
    return f"l[{i},{j}]"


def residue_matrix(a: int, b: int, a2: int, b2: int) -> ResidueMatrix:
    """The 4x4 residue matrix of the curve pair (a, b, a', b').

    Row by row (columns l[0,0], l[0,a'], l[a,0], l[a,a']):
      A[a,a']: 1,      ab,          a'b',        -aa'
      A[a,0]:  ab,     1,           aa',         a'(a'-b')
      A[0,a']: a'b',   aa',         1,           a(a-b)
      A[0,0]:  -aa',   a'(a'-b'),   a(a-b),      1
    """
    ap, bp = a2, b2
    if a == 0 or b == 0 or a == b or ap == 0 or bp == 0 or ap == bp:
        raise DegenerateCurveError("curve data must have a != b, a' != b', all nonzero")
    one = SquareClass.identity()
    sc = square_class
    rows = (
        (one, sc(a * b), sc(ap * bp), sc(-a * ap)),
        (sc(a * b), one, sc(a * ap), sc(ap * (ap - bp))),
        (sc(ap * bp), sc(a * ap), one, sc(a * (a - b))),
        (sc(-a * ap), sc(ap * (ap - bp)), sc(a * (a - b)), one),
    )
    cols = (_line_label("0", "0"), _line_label("0", "a'"),
            _line_label("a", "0"), _line_label("a", "a'"))
    return ResidueMatrix((a, b, ap, bp), cols, rows)


def extend_residue_matrix(m: ResidueMatrix) -> ResidueMatrix:
    """Extend the 4x4 matrix to all nine lines over nonzero 2-torsion pairs.

    Along any fixed first index i in {0, a, b} or fixed second index j in
    {0, a', b'} the three residues of each algebra multiply to the identity,
    which determines every missing column from the four computed ones.
    """
    if m.ncols != 4:
        raise ValueError("expected a 4x4 residue matrix")
    e = {("0", "0"): 0, ("0", "a'"): 1, ("a", "0"): 2, ("a", "a'"): 3}

    def entry(row: tuple[SquareClass, ...], i: str, j: str) -> SquareClass:
        if (i, j) in e:
            return row[e[(i, j)]]
        if i == "b" and j == "b'":
            return sc_mul(
                sc_mul(row[0], row[1]), sc_mul(row[2], row[3])
            )
        if i == "b":
            return sc_mul(entry(row, "0", j), entry(row, "a", j))
        # j == "b'"
        return sc_mul(entry(row, i, "0"), entry(row, i, "a'"))

    order = [("0", "0"), ("0", "a'"), ("a", "0"), ("a", "a'"),
             ("0", "b'"), ("a", "b'"), ("b", "0"), ("b", "a'"), ("b", "b'")]
    cols = tuple(_line_label(i, j) for i, j in order)
    rows = tuple(tuple(entry(row, i, j) for i, j in order) for row in m.entries)
    return ResidueMatrix(m.pair, cols, rows)


def _f2_encoding(m: ResidueMatrix) -> BitMatrix:
    """One F2 row per (line, basis element) pair; columns are the 4 algebras.

    The basis of the residue target is the class of -1 together with every
    prime in any entry's support.
    """
    primes = sorted({p for row in m.entries for c in row for p in c.support})
    rows = []
    for col in range(m.ncols):
        for basis_index in range(1 + len(primes)):
            mask = 0
            for alg in range(m.nrows):
                c = m.entries[alg][col]
                if basis_index == 0:
                    bit = c.sign == -1
                else:
                    bit = primes[basis_index - 1] in c.support
                if bit:
                    mask |= 1 << alg
            rows.append(mask)
    return BitMatrix(rows, m.nrows)


def kernel_dimension(m: ResidueMatrix) -> tuple[int, list[tuple[str, ...]]]:
    """d = dimension of the subgroup of symbol algebras with trivial residues.

    Returns d together with a basis: each basis element is the subset of
    ALGEBRA_LABELS whose entrywise product is the identity class in every
    column of m.
    """
    basis_vectors = f2_nullspace(_f2_encoding(m))
    basis = [tuple(ALGEBRA_LABELS[i] for i in bits_of(v)) for v in basis_vectors]
    return len(basis_vectors), basis


def subset_residue_product(m: ResidueMatrix, subset: set[int] | list[int]) -> list[SquareClass]:
    """Entrywise product over the given algebra rows, one class per column."""
    out = []
    for col in range(m.ncols):
        acc = SquareClass.identity()
        for i in subset:
            acc = sc_mul(acc, m.entries[i][col])
        out.append(acc)
    return out


@dataclass(frozen=True)
class Gate:
    """Which applicability case (if any) makes the dimension formula usable."""

    case: str | None  # "not-isogenous" | "same-curve-no-cm" | None
    passes: bool
    detail: str


@dataclass(frozen=True)
class Brauer2Result:
    d: int
    r: int | None
    dim2: int | None  # None encodes "not determined"
    gate: Gate
    kernel_basis: tuple[tuple[str, ...], ...]


def two_torsion_dimension(
    d: int, r: int | None, gate: Gate,
    kernel_basis: tuple[tuple[str, ...], ...] = (),
) -> Brauer2Result:
    """dim Br(X)_2/Br(k)_2 = d - r, guarded by the applicability gate."""
    if not gate.passes or r is None:
        return Brauer2Result(d, r, None, gate, kernel_basis)
    if d < r:
        raise DimensionContradictionError(
            f"d = {d} < r = {r} with a passing gate; r or the matrix is wrong")
    return Brauer2Result(d, r, d - r, gate, kernel_basis)


def _root_factor(var: str, root: int) -> str:
    if root == 0:
        return var
    if root > 0:
        return f"({var}-{root})"
    return f"({var}+{-root})"


def surface_equation(a: int, b: int, a2: int, b2: int) -> str:
    """The affine equation z^2 = x(x-a)(x-b) y(y-a')(y-b') as text."""
    fx = "".join(_root_factor("x", r) for r in (0, a, b))
    gy = "".join(_root_factor("y", r) for r in (0, a2, b2))
    return f"z^2 = {fx}{gy}"


def parse_surface_roots(text: str) -> tuple[list[int], list[int]]:
    """Recover the two root multisets from a surface_equation string."""
    rhs = text.split("=", 1)[1].strip()
    roots: dict[str, list[int]] = {"x": [], "y": []}
    i = 0
    while i < len(rhs):
        ch = rhs[i]
        if ch in "xy":
            roots[ch].append(0)
            i += 1
        elif ch == "(":
            j = rhs.index(")", i)
            inner = rhs[i + 1 : j]
            var = inner[0]
            rest = inner[1:]
            roots[var].append(-int(rest) if rest else 0)
            i = j + 1
        else:
            i += 1
    return sorted(roots["x"]), sorted(roots["y"])
