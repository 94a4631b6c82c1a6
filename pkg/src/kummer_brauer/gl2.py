"""Exhaustive subgroup enumeration of GL(2, F_ell) for small ell, used as a
soundness oracle for the trace/determinant surjectivity criterion.

Subgroups are represented as bitmasks over the element list.  Every subgroup
is reachable by repeatedly joining with cyclic subgroups of prime-power
order (any element decomposes into commuting prime-power parts), so a
breadth-first closure over such joins enumerates the full subgroup lattice.
A join <H, g> is computed by a coset walk: right cosets of H are permuted by
right multiplication, so the cost is linear in the size of the result, and
any intermediate size above |G|/2 already forces the join to be all of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GL2:
    """GL(2, F_ell) with a dense multiplication table."""

    def __init__(self, ell: int):
        self.ell = ell
        elements = []
        for a in range(ell):
            for b in range(ell):
                for c in range(ell):
                    for d in range(ell):
                        if (a * d - b * c) % ell:
                            elements.append((a, b, c, d))
        self.elements = elements
        self.index = {m: i for i, m in enumerate(elements)}
        n = len(elements)
        expected = (ell * ell - 1) * (ell * ell - ell)
        if n != expected:
            raise RuntimeError(f"enumeration failure: {n} != {expected}")
        self.order = n
        self.identity = self.index[(1, 0, 0, 1)]
        mult = []
        for (a, b, c, d) in elements:
            row = [0] * n
            for j, (e, f_, g, h) in enumerate(elements):
                row[j] = self.index[(
                    (a * e + b * g) % ell, (a * f_ + b * h) % ell,
                    (c * e + d * g) % ell, (c * f_ + d * h) % ell)]
            mult.append(row)
        self.mult = mult
        self.trace = [(m[0] + m[3]) % ell for m in elements]
        self.det = [(m[0] * m[3] - m[1] * m[2]) % ell for m in elements]

    def element_order(self, i: int) -> int:
        n = 1
        x = i
        while x != self.identity:
            x = self.mult[x][i]
            n += 1
        return n

    def cyclic_prime_power_subgroups(self) -> list[tuple[int, int]]:
        """(mask, generator) for each distinct cyclic subgroup of prime-power
        order > 1."""
        seen: dict[int, int] = {}
        for i in range(self.order):
            n = self.element_order(i)
            if n == 1 or not _is_prime_power(n):
                continue
            mask = 0
            x = self.identity
            while True:
                mask |= 1 << x
                x = self.mult[x][i]
                if x == self.identity:
                    break
            if mask not in seen:
                seen[mask] = i
        return [(mask, g) for mask, g in seen.items()]

    def join(self, h_elems: list[int], h_mask: int, gens: list[int], g: int,
             limit: int) -> int | None:
        """Mask of <H, g>, or None if its size exceeds limit (hence = G)."""
        mult = self.mult
        k_mask = h_mask
        reps = [self.identity]
        max_cosets = limit // len(h_elems)
        walk_gens = gens + [g]
        i = 0
        while i < len(reps):
            x = reps[i]
            i += 1
            for s in walk_gens:
                y = mult[x][s]
                if not (k_mask >> y) & 1:
                    if len(reps) >= max_cosets:
                        return None
                    coset = 0
                    for h in h_elems:
                        coset |= 1 << mult[h][y]
                    k_mask |= coset
                    reps.append(y)
        return k_mask


def _is_prime_power(n: int) -> bool:
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True  # n itself prime for the orders arising here


def _mask_elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SubgroupWitnesses:
    order: int
    has_nonsplit: bool  # trace != 0, t^2 - 4d a nonsquare
    has_split: bool  # trace != 0, t^2 - 4d a nonzero square
    has_generic: bool  # u = t^2/d outside {0,1,2,4} and u^2 - 3u + 1 != 0

    @property
    def all_three(self) -> bool:
        return self.has_nonsplit and self.has_split and self.has_generic


@dataclass(frozen=True)
class CriterionValidation:
    """Result of checking the witness criterion against the full lattice."""

    ell: int
    group_order: int
    subgroup_count: int
    offending_proper_subgroups: tuple[int, ...]  # orders, should be empty
    full_group: SubgroupWitnesses
    passed: bool
    notes: tuple[str, ...] = field(default_factory=tuple)


def witness_classes(ell: int) -> tuple[set, set, set]:
    """The (t, d) pairs in F_ell satisfying each of the three witness
    conditions.  Any empty class means that witness can never be sampled."""
    squares = {x * x % ell for x in range(ell)}
    nonsplit, split, generic = set(), set(), set()
    bad_u = {0 % ell, 1 % ell, 2 % ell, 4 % ell}
    for t in range(ell):
        for d in range(1, ell):
            disc = (t * t - 4 * d) % ell
            if t != 0 and disc not in squares:
                nonsplit.add((t, d))
            if t != 0 and disc != 0 and disc in squares:
                split.add((t, d))
            u = t * t * pow(d, -1, ell) % ell
            if u not in bad_u and (u * u - 3 * u + 1) % ell != 0:
                generic.add((t, d))
    return nonsplit, split, generic


def enumerate_subgroups(group: GL2) -> list[int]:
    """Masks of all subgroups of the group, the full group excluded."""
    half = group.order // 2
    cyclics = group.cyclic_prime_power_subgroups()
    trivial = 1 << group.identity
    gens_of: dict[int, list[int]] = {trivial: []}
    found = {trivial}
    queue = [trivial]
    while queue:
        h_mask = queue.pop()
        h_elems = _mask_elements(h_mask)
        h_gens = gens_of[h_mask]
        for c_mask, g in cyclics:
            if c_mask & h_mask == c_mask:
                continue  # already inside H
            k_mask = group.join(h_elems, h_mask, h_gens, g, half)
            if k_mask is None or k_mask in found:
                continue
            found.add(k_mask)
            gens_of[k_mask] = h_gens + [g]
            queue.append(k_mask)
    return sorted(found)


def validate_surjectivity_criterion(ell: int) -> CriterionValidation:
    """Check that no proper subgroup of GL(2, F_ell) exhibits all three
    trace/determinant witnesses within its full (trace, det) multiset.

    Only ell in {3, 5} is supported (group orders 48 and 480); larger ell is
    covered by the classical subgroup classification, not by this oracle.
    """
    if ell not in (3, 5):
        raise ValueError("the exhaustive oracle is built for ell in {3, 5}")
    group = GL2(ell)
    w1, w2, w3 = witness_classes(ell)

    def witnesses(elems: list[int]) -> SubgroupWitnesses:
        td = {(group.trace[i], group.det[i]) for i in elems}
        return SubgroupWitnesses(
            len(elems),
            any(p in w1 for p in td),
            any(p in w2 for p in td),
            any(p in w3 for p in td),
        )

    masks = enumerate_subgroups(group)
    offending = []
    for mask in masks:
        elems = _mask_elements(mask)
        if group.order % len(elems):
            raise RuntimeError("enumeration failure: Lagrange violated")
        if witnesses(elems).all_three:
            offending.append(len(elems))
    full = witnesses(list(range(group.order)))
    notes = []
    for name, cls in (("nonsplit", w1), ("split", w2), ("generic", w3)):
        if not cls:
            notes.append(f"witness class '{name}' is empty mod {ell}: "
                         "the criterion can never fire at this ell")
    return CriterionValidation(
        ell=ell,
        group_order=group.order,
        subgroup_count=len(masks) + 1,  # + the full group
        offending_proper_subgroups=tuple(sorted(offending)),
        full_group=full,
        passed=not offending,
        notes=tuple(notes),
    )
