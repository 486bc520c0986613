"""Pareto products of profiles and order-theoretic predicates on quotients.

The product models the disjoint union of two theories: vertices are pairs,
ordered coordinatewise, and each product class combines the factor classes'
sizes and limit counts.  ``oracle_product`` recomputes the limit counts by
brute-force token enumeration and exists purely as an independent cross-check
of the closed per-class formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    DecompositionReport,
    Preorder,
    ProfileError,
    QuotientPoset,
    RkProfile,
    _bits,
    _require_admissible,
    counts,
    is_isomorphic,
    quotient,
)

__all__ = [
    "EmptyFactorList",
    "FactorMismatch",
    "NotALattice",
    "ProductDecomposition",
    "decomposition",
    "is_boolean_lattice",
    "is_lattice",
    "monotonicity",
    "oracle_product",
    "pareto_product",
    "product_many",
]


class EmptyFactorList(ProfileError):
    """product_many was given no factors."""


class FactorMismatch(ProfileError):
    """The factors' product is not isomorphic to the given profile."""


class NotALattice(ProfileError):
    """A lattice-only predicate was applied to a non-lattice quotient."""


def pareto_product(a: RkProfile, b: RkProfile) -> RkProfile:
    """Coordinatewise product; class (X, Y) gets limit count Xl*|Y| + |X|*Yl + Xl*Yl."""
    _require_admissible(a)
    _require_admissible(b)
    vertices = frozenset(f"{x}*{y}" for x in a.order.vertices for y in b.order.vertices)
    if len(vertices) != len(a.order.vertices) * len(b.order.vertices):
        raise ValueError("vertex name collision in product; rename factor vertices")
    leq = frozenset(
        (f"{x1}*{y1}", f"{x2}*{y2}")
        for (x1, x2) in a.order.leq
        for (y1, y2) in b.order.leq
    )
    il = {}
    for xcls, xl in a.il.items():
        for ycls, yl in b.il.items():
            zcls = frozenset(f"{x}*{y}" for x in xcls for y in ycls)
            il[zcls] = xl * len(ycls) + len(xcls) * yl + xl * yl
    return RkProfile(Preorder(vertices, leq), il)


def product_many(factors: Sequence[RkProfile]) -> RkProfile:
    """Left fold of pareto_product; the result is independent of fold order up to isomorphism."""
    factors = list(factors)
    if not factors:
        raise EmptyFactorList("at least one factor is required")
    result = factors[0]
    _require_admissible(result)
    for f in factors[1:]:
        result = pareto_product(result, f)
    return result


def oracle_product(a: RkProfile, b: RkProfile) -> RkProfile:
    """Product with limit counts found by enumerating explicit model tokens.

    Per factor class, |X| prime tokens and Xl limit tokens are materialized;
    a token pair is prime iff both components are prime, and the class limit
    count is the number of pairs with at least one limit component, counted
    one pair at a time.  No closed formula is used.
    """
    _require_admissible(a)
    _require_admissible(b)
    vertices = set()
    leq = set()
    for x in a.order.vertices:
        for y in b.order.vertices:
            vertices.add(f"{x}*{y}")
    for x1 in a.order.vertices:
        for x2 in a.order.vertices:
            if not a.order.holds(x1, x2):
                continue
            for y1 in b.order.vertices:
                for y2 in b.order.vertices:
                    if b.order.holds(y1, y2):
                        leq.add((f"{x1}*{y1}", f"{x2}*{y2}"))
    il = {}
    for xcls, xl in a.il.items():
        xtokens = [("prime", v) for v in sorted(xcls)] + [("limit", i) for i in range(xl)]
        for ycls, yl in b.il.items():
            ytokens = [("prime", v) for v in sorted(ycls)] + [("limit", i) for i in range(yl)]
            limit_pairs = 0
            for tx in xtokens:
                for ty in ytokens:
                    if tx[0] == "limit" or ty[0] == "limit":
                        limit_pairs += 1
            il[frozenset(f"{x}*{y}" for x in xcls for y in ycls)] = limit_pairs
    return RkProfile(Preorder(frozenset(vertices), frozenset(leq)), il)


@dataclass(frozen=True)
class ProductDecomposition:
    """Factor reports, the product report, and the per-class term table.

    Each term row is (factor class representatives, product class size,
    product class limit count), sorted lexicographically by the
    representative tuple.
    """

    factor_reports: tuple[DecompositionReport, ...]
    product_report: DecompositionReport
    term_table: tuple[tuple[tuple[str, ...], int, int], ...]


def decomposition(
    profile: RkProfile, factors: Iterable[RkProfile] | None = None
) -> ProductDecomposition:
    """Full decomposition term table; with factors given, they must multiply to the profile."""
    _require_admissible(profile)
    if factors is None:
        flist = [profile]
        product = profile
    else:
        flist = list(factors)
        product = product_many(flist)
        if not is_isomorphic(product, profile):
            raise FactorMismatch("the factors' product is not isomorphic to the profile")
    factor_reports = tuple(counts(f) for f in flist)
    factor_classes = [quotient(f).classes for f in flist]
    table = []
    for combo in itertools.product(*factor_classes):
        reps = tuple(c.representative for c in combo)
        size, lim = combo[0].size, combo[0].limit_count
        for c in combo[1:]:
            lim = lim * c.size + size * c.limit_count + lim * c.limit_count
            size = size * c.size
        table.append((reps, size, lim))
    table.sort(key=lambda row: row[0])
    product_report = counts(product)
    total = 1
    for r in factor_reports:
        total *= r.total
    assert product_report.prime_count == sum(row[1] for row in table)
    assert product_report.limit_count == sum(row[2] for row in table)
    assert product_report.total == total
    return ProductDecomposition(factor_reports, product_report, tuple(table))


def _bound_masks(q: QuotientPoset) -> tuple[list[str], list[int], list[int]]:
    reps = [c.representative for c in q.classes]
    pos = {r: i for i, r in enumerate(reps)}
    up = [1 << i for i in range(len(reps))]
    down = [1 << i for i in range(len(reps))]
    for a, b in q.below:
        up[pos[a]] |= 1 << pos[b]
        down[pos[b]] |= 1 << pos[a]
    return reps, up, down


def _unique_bound(x: int, y: int, vecs: list[int]) -> int | None:
    """Index of the least upper (or greatest lower) bound of x, y along vecs, if any."""
    common = vecs[x] & vecs[y]
    for t in _bits(common):
        if not common & ~vecs[t]:
            return t
    return None


def is_lattice(q: QuotientPoset) -> bool:
    """True iff every pair of classes has a unique join and a unique meet."""
    _, up, down = _bound_masks(q)
    k = len(up)
    return all(
        _unique_bound(i, j, up) is not None and _unique_bound(i, j, down) is not None
        for i in range(k)
        for j in range(i + 1, k)
    )


def is_boolean_lattice(q: QuotientPoset) -> bool:
    """True iff the lattice is distributive and complemented; raises on non-lattices."""
    if not is_lattice(q):
        raise NotALattice("quotient is not a lattice")
    _, up, down = _bound_masks(q)
    k = len(up)
    full = (1 << k) - 1
    join = [[_unique_bound(i, j, up) for j in range(k)] for i in range(k)]
    meet = [[_unique_bound(i, j, down) for j in range(k)] for i in range(k)]
    bottom = next(i for i in range(k) if up[i] == full)
    top = next(i for i in range(k) if down[i] == full)
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False
    return all(
        any(meet[x][y] == bottom and join[x][y] == top for y in range(k)) for x in range(k)
    )


def monotonicity(profile: RkProfile) -> tuple[str, str]:
    """(size flag, limit flag), each "strict", "weak" or "none".

    A flag is strict when the quantity strictly increases along every strictly
    comparable pair of classes, weak when it never decreases, none otherwise;
    incomparable classes impose no constraint.
    """
    _require_admissible(profile)
    q = quotient(profile)
    summary = {c.representative: c for c in q.classes}
    size_strict = size_weak = limit_strict = limit_weak = True
    for a, b in q.below:
        ca, cb = summary[a], summary[b]
        size_strict = size_strict and ca.size < cb.size
        size_weak = size_weak and ca.size <= cb.size
        limit_strict = limit_strict and ca.limit_count < cb.limit_count
        limit_weak = limit_weak and ca.limit_count <= cb.limit_count

    def flag(strict: bool, weak: bool) -> str:
        return "strict" if strict else "weak" if weak else "none"

    return flag(size_strict, size_weak), flag(limit_strict, limit_weak)
