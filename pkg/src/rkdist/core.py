"""Profiles of countable-model distributions over finite Rudin-Keisler preorders.

A profile is a finite preorder of prime-model isomorphism types together with
a limit-model count attached to every domination-equivalence class.  This
module defines the value types, the quotient poset, the admissibility
conditions V1-V5 (plus the informational V6), the decomposition counts
(total = prime + limit), and a canonical form used for isomorphism testing.

Everything is an immutable value and every operation is a pure function, so
the whole module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from . import _format

__all__ = [
    "CanonicalProfile",
    "ClassSummary",
    "ConditionReport",
    "DecompositionReport",
    "InvalidProfile",
    "Preorder",
    "ProfileError",
    "QuotientPoset",
    "RkProfile",
    "UnknownVertex",
    "ValidationReport",
    "canonical_form",
    "close_preorder",
    "counts",
    "is_isomorphic",
    "make_profile",
    "mutual_classes",
    "quotient",
    "validate_profile",
]

# "*" appears only in vertex names generated by products of profiles.
NAME_RE = re.compile(r"[A-Za-z0-9_*]+\Z")


class ProfileError(Exception):
    """Base class for errors raised by this package."""


class UnknownVertex(ProfileError):
    """A relation pair or label references an undeclared vertex."""


class InvalidProfile(ProfileError):
    """An operation required admissibility (V1-V5) and the profile fails it."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _relation_masks(
    vertices: Iterable[str], pairs: Iterable[tuple[str, str]]
) -> tuple[list[str], dict[str, int], list[int]]:
    """Index the vertices and encode the relation as per-vertex successor bitmasks."""
    names = sorted(vertices)
    for v in names:
        if not isinstance(v, str) or not NAME_RE.match(v):
            raise ValueError(f"bad vertex name {v!r}")
    index = {v: i for i, v in enumerate(names)}
    succ = [0] * len(names)
    for a, b in pairs:
        ia = index.get(a)
        ib = index.get(b)
        if ia is None or ib is None:
            missing = a if ia is None else b
            raise UnknownVertex(f"relation references undeclared vertex {missing!r}")
        succ[ia] |= 1 << ib
    return names, index, succ


@dataclass(frozen=True)
class Preorder:
    """A finite reflexive transitive relation; ``(a, b) in leq`` reads "a is dominated by b"."""

    vertices: frozenset[str]
    leq: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "leq", frozenset(self.leq))
        names, _, succ = _relation_masks(self.vertices, self.leq)
        for i, v in enumerate(names):
            if not succ[i] >> i & 1:
                raise ValueError(f"preorder is not reflexive at {v!r}")
        for i in range(len(names)):
            reach = 0
            for j in _bits(succ[i]):
                reach |= succ[j]
            if reach & ~succ[i]:
                raise ValueError("preorder is not transitively closed")

    def holds(self, a: str, b: str) -> bool:
        return (a, b) in self.leq


def close_preorder(
    vertices: Iterable[str], generating_pairs: Iterable[tuple[str, str]]
) -> Preorder:
    """Least reflexive-transitive relation on the vertices containing the pairs."""
    names, _, succ = _relation_masks(set(vertices), generating_pairs)
    n = len(names)
    for i in range(n):
        succ[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        row = succ[k]
        for i in range(n):
            if succ[i] & bit:
                succ[i] |= row
    leq = frozenset(
        (names[i], names[j]) for i in range(n) for j in _bits(succ[i])
    )
    return Preorder(frozenset(names), leq)


def mutual_classes(order: Preorder) -> tuple[frozenset[str], ...]:
    """Domination-equivalence classes (a ~ b iff a leq b and b leq a), sorted by least member."""
    names, _, succ = _relation_masks(order.vertices, order.leq)
    n = len(names)
    pred = [0] * n
    for i in range(n):
        for j in _bits(succ[i]):
            pred[j] |= 1 << i
    masks: list[int] = []
    seen: set[int] = set()
    for i in range(n):
        m = succ[i] & pred[i]
        if m not in seen:
            seen.add(m)
            masks.append(m)
    masks.sort(key=lambda m: m & -m)
    return tuple(frozenset(names[j] for j in _bits(m)) for m in masks)


@dataclass(frozen=True)
class RkProfile:
    """A preorder of isomorphism types plus the limit count of every domination class.

    ``il`` is keyed by the class member sets; :func:`make_profile` and the
    ``io`` parser offer friendlier construction paths.
    """

    order: Preorder
    il: Mapping[frozenset[str], int]

    def __post_init__(self) -> None:
        il = {frozenset(k): v for k, v in dict(self.il).items()}
        classes = set(mutual_classes(self.order))
        if set(il) != classes:
            raise ValueError("limit counts must cover every domination class exactly once")
        for cls, v in il.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(
                    f"limit count for class of {min(cls)!r} must be a nonnegative integer"
                )
        object.__setattr__(self, "il", il)

    def il_of(self, vertex: str) -> int:
        for cls, v in self.il.items():
            if vertex in cls:
                return v
        raise UnknownVertex(f"no such vertex {vertex!r}")


def make_profile(
    vertices: Iterable[str],
    generating_pairs: Iterable[tuple[str, str]],
    il_by_vertex: Mapping[str, int],
) -> RkProfile:
    """Close the relation and attach limit counts, each class named exactly once."""
    order = close_preorder(vertices, generating_pairs)
    cls_of = {v: cls for cls in mutual_classes(order) for v in cls}
    il: dict[frozenset[str], int] = {}
    for name, count in il_by_vertex.items():
        cls = cls_of.get(name)
        if cls is None:
            raise UnknownVertex(f"limit count references undeclared vertex {name!r}")
        if cls in il:
            raise ValueError(f"class of {name!r} was given two limit counts")
        il[cls] = count
    missing = [cls for cls in mutual_classes(order) if cls not in il]
    if missing:
        raise ValueError(f"class of {min(missing[0])!r} has no limit count")
    return RkProfile(order, il)


@dataclass(frozen=True)
class ClassSummary:
    representative: str
    size: int
    limit_count: int


@dataclass(frozen=True)
class QuotientPoset:
    """The strict partial order of domination classes, with per-class size and limit count."""

    classes: tuple[ClassSummary, ...]
    below: frozenset[tuple[str, str]]
    members: Mapping[str, frozenset[str]]

    def summary(self, representative: str) -> ClassSummary:
        for c in self.classes:
            if c.representative == representative:
                return c
        raise KeyError(representative)

    def le(self, x: str, y: str) -> bool:
        return x == y or (x, y) in self.below

    def least(self) -> str | None:
        reps = [c.representative for c in self.classes]
        for r in reps:
            if all(s == r or (r, s) in self.below for s in reps):
                return r
        return None

    def greatest(self) -> str | None:
        reps = [c.representative for c in self.classes]
        for r in reps:
            if all(s == r or (s, r) in self.below for s in reps):
                return r
        return None

    def covers(self) -> tuple[tuple[str, str], ...]:
        """Hasse cover pairs: (a, b) with a strictly below b and nothing in between."""
        reps = [c.representative for c in self.classes]
        out = [
            (a, b)
            for a, b in self.below
            if not any((a, t) in self.below and (t, b) in self.below for t in reps)
        ]
        return tuple(sorted(out))


def quotient(profile: RkProfile) -> QuotientPoset:
    """Collapse mutual domination; class X sits below Y iff its members are dominated by Y's."""
    order = profile.order
    summaries = []
    members: dict[str, frozenset[str]] = {}
    for cls in mutual_classes(order):
        rep = min(cls)
        members[rep] = cls
        summaries.append(ClassSummary(rep, len(cls), profile.il[cls]))
    below = frozenset(
        (a.representative, b.representative)
        for a in summaries
        for b in summaries
        if a is not b and order.holds(a.representative, b.representative)
    )
    return QuotientPoset(tuple(summaries), below, members)


@dataclass(frozen=True)
class ConditionReport:
    code: str
    passed: bool
    detail: str
    informational: bool = False


@dataclass(frozen=True)
class ValidationReport:
    conditions: tuple[ConditionReport, ...]

    @property
    def admissible(self) -> bool:
        """True when every non-informational condition (V1-V5) passes."""
        return all(c.passed for c in self.conditions if not c.informational)

    def condition(self, code: str) -> ConditionReport:
        for c in self.conditions:
            if c.code == code:
                return c
        raise KeyError(code)


def validate_profile(profile: RkProfile) -> ValidationReport:
    """Check the admissibility conditions V1-V5 and the informational V6.

    V1 unique least class; V2 the least class is a singleton with limit count
    0; V3 unique greatest class; V4 with more than one vertex the greatest
    class has a positive limit count; V5 every multi-member class has a
    positive limit count; V6 (informational) the total model count is at
    least 2.
    """
    q = quotient(profile)
    reps = [c.representative for c in q.classes]
    nverts = len(profile.order.vertices)
    total = nverts + sum(c.limit_count for c in q.classes)
    least = q.least()
    greatest = q.greatest()
    conds: list[ConditionReport] = []

    if least is None:
        minimal = sorted(r for r in reps if not any((s, r) in q.below for s in reps))
        conds.append(
            ConditionReport("V1", False, f"no unique least class (minimal: {', '.join(minimal)})")
        )
    else:
        conds.append(ConditionReport("V1", True, f"least class {least}"))

    if least is None:
        conds.append(ConditionReport("V2", False, "no unique least class"))
    else:
        c = q.summary(least)
        if c.size != 1:
            conds.append(ConditionReport("V2", False, f"least class {least} has size {c.size}"))
        elif c.limit_count != 0:
            conds.append(
                ConditionReport(
                    "V2", False, f"least class {least} has limit count {c.limit_count}"
                )
            )
        else:
            conds.append(
                ConditionReport(
                    "V2", True, f"least class {least} is a singleton with limit count 0"
                )
            )

    if greatest is None:
        maximal = sorted(r for r in reps if not any((r, s) in q.below for s in reps))
        conds.append(
            ConditionReport("V3", False, f"no unique greatest class (maximal: {', '.join(maximal)})")
        )
    else:
        conds.append(ConditionReport("V3", True, f"greatest class {greatest}"))

    if nverts <= 1:
        conds.append(ConditionReport("V4", True, "single vertex, nothing required"))
    elif greatest is None:
        conds.append(ConditionReport("V4", False, "no unique greatest class"))
    else:
        lc = q.summary(greatest).limit_count
        conds.append(
            ConditionReport(
                "V4", lc >= 1, f"greatest class {greatest} has limit count {lc}"
            )
        )

    bad = [c for c in q.classes if c.size > 1 and c.limit_count < 1]
    if bad:
        conds.append(
            ConditionReport(
                "V5",
                False,
                f"class {bad[0].representative} has size {bad[0].size} but limit count 0",
            )
        )
    else:
        conds.append(
            ConditionReport("V5", True, "every multi-member class has a positive limit count")
        )

    conds.append(
        ConditionReport(
            "V6",
            total >= 2,
            f"total {total} is {'in' if total >= 2 else 'below'} the Ehrenfeucht range",
            informational=True,
        )
    )
    return ValidationReport(tuple(conds))


def _require_admissible(profile: RkProfile) -> ValidationReport:
    report = validate_profile(profile)
    if not report.admissible:
        failing = [c.code for c in report.conditions if not c.passed and not c.informational]
        raise InvalidProfile("profile fails " + ", ".join(failing))
    return report


@dataclass(frozen=True)
class DecompositionReport:
    """Totals of the decomposition (total = prime + limit) with per-class terms."""

    prime_count: int
    limit_count: int
    total: int
    class_terms: tuple[tuple[int, int], ...]
    classes: tuple[ClassSummary, ...] = field(default=())


def counts(profile: RkProfile) -> DecompositionReport:
    """Prime, limit and total model counts; class terms in topological order."""
    _require_admissible(profile)
    q = quotient(profile)
    summaries = {c.representative: c for c in q.classes}
    preds = {
        r: {a for (a, b) in q.below if b == r} for r in summaries
    }
    done: list[str] = []
    done_set: set[str] = set()
    while len(done) < len(summaries):
        ready = sorted(r for r in summaries if r not in done_set and preds[r] <= done_set)
        done.append(ready[0])
        done_set.add(ready[0])
    ordered = tuple(summaries[r] for r in done)
    prime = sum(c.size for c in ordered)
    limit = sum(c.limit_count for c in ordered)
    return DecompositionReport(
        prime,
        limit,
        prime + limit,
        tuple((c.size, c.limit_count) for c in ordered),
        ordered,
    )


@dataclass(frozen=True)
class CanonicalProfile:
    """Serialized normal form; equal bytes iff the profiles are isomorphic."""

    canonical_text: bytes


def _class_structure(profile: RkProfile):
    q = quotient(profile)
    k = len(q.classes)
    pos = {c.representative: i for i, c in enumerate(q.classes)}
    sizes = [c.size for c in q.classes]
    ils = [c.limit_count for c in q.classes]
    down = [0] * k
    up = [0] * k
    for a, b in q.below:
        down[pos[b]] |= 1 << pos[a]
        up[pos[a]] |= 1 << pos[b]
    covers = [
        (a, b)
        for b in range(k)
        for a in _bits(down[b])
        if not down[b] & up[a]
    ]
    members = [sorted(q.members[c.representative]) for c in q.classes]
    return sizes, ils, down, up, covers, members


def _refine(cells: list[list[int]], down: list[int], up: list[int]) -> list[list[int]]:
    """Equitable refinement: split cells by how many members of each cell lie below/above."""
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for e in c:
                m |= 1 << e
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[tuple[int, int], ...], list[int]] = {}
            for e in c:
                sig = tuple(
                    ((down[e] & m).bit_count(), (up[e] & m).bit_count()) for m in masks
                )
                groups.setdefault(sig, []).append(e)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _discrete_orders(
    sizes: list[int], ils: list[int], down: list[int], up: list[int]
) -> Iterator[list[int]]:
    """All class orderings reachable by individualization-refinement.

    The search is exhaustive over the members of the first non-singleton cell
    at every node, so the set of leaves is invariant under isomorphism; cost
    grows with the automorphism count of the quotient structure.
    """
    initial: dict[tuple[int, int, int, int], list[int]] = {}
    for e in range(len(sizes)):
        key = (sizes[e], ils[e], down[e].bit_count(), up[e].bit_count())
        initial.setdefault(key, []).append(e)
    cells = [initial[key] for key in sorted(initial)]

    def search(cells: list[list[int]]) -> Iterator[list[int]]:
        cells = _refine(cells, down, up)
        for ci, c in enumerate(cells):
            if len(c) > 1:
                for e in sorted(c):
                    rest = [x for x in c if x != e]
                    yield from search(cells[:ci] + [[e], rest] + cells[ci + 1 :])
                return
        yield [c[0] for c in cells]

    yield from search(cells)


def canonical_form(profile: RkProfile) -> CanonicalProfile:
    """Relabel by a canonical class ordering and serialize; minimum over candidates."""
    _require_admissible(profile)
    sizes, ils, down, up, covers, _ = _class_structure(profile)
    k = len(sizes)
    cw = max(2, len(str(k - 1)))
    mw = max(2, len(str(max(sizes) - 1)))
    best: bytes | None = None
    for order in _discrete_orders(sizes, ils, down, up):
        pos = {orig: p for p, orig in enumerate(order)}
        members = []
        for p, orig in enumerate(order):
            if sizes[orig] == 1:
                members.append([f"n{p:0{cw}d}"])
            else:
                members.append([f"n{p:0{cw}d}_{j:0{mw}d}" for j in range(sizes[orig])])
        text = _format.document_bytes(
            *_format.compose_lines(
                members,
                [ils[orig] for orig in order],
                [(pos[a], pos[b]) for a, b in covers],
            )
        )
        if best is None or text < best:
            best = text
    assert best is not None
    return CanonicalProfile(best)


def is_isomorphic(a: RkProfile, b: RkProfile) -> bool:
    """True iff the profiles are isomorphic as IL-labeled preorders."""
    return canonical_form(a).canonical_text == canonical_form(b).canonical_text
