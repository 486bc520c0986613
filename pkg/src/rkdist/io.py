"""Textual profile format ("rkp 1") and Hasse-diagram renderers.

Document grammar, line based, "#" starting a comment, blank lines ignored:

    rkp 1
    vertex NAME
    le NAME NAME          # left is dominated by right; closure is taken
    il NAME COUNT         # limit count of the class containing NAME

Statements may come in any order after the header.  Every domination class
must receive exactly one il declaration.  Identifiers match [A-Za-z0-9_]+;
"*" additionally appears in names generated by products so that their
serializations round-trip.  Serialized output is deterministic: sorted vertex
lines, one directed cycle per multi-member class, Hasse cover edges between
representatives, il lines on representatives, LF endings, trailing newline.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _format
from .core import (
    NAME_RE,
    ProfileError,
    RkProfile,
    UnknownVertex,
    _require_admissible,
    close_preorder,
    mutual_classes,
    quotient,
)

__all__ = [
    "BadHeader",
    "DuplicateIl",
    "DuplicateVertex",
    "MalformedLine",
    "MissingIl",
    "ParseError",
    "ProfileDocument",
    "parse",
    "render_ascii",
    "render_dot",
    "serialize",
]


class ParseError(ProfileError):
    """A document could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BadHeader(ParseError):
    pass


class DuplicateVertex(ParseError):
    pass


class DuplicateIl(ParseError):
    pass


class MissingIl(ParseError):
    pass


class MalformedLine(ParseError):
    pass


def parse(text: bytes | str) -> RkProfile:
    """Parse a document into a profile.  Admissibility is not checked here."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedLine("document is not valid UTF-8") from exc
    statements: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            statements.append((lineno, line.split()))
    if not statements:
        raise BadHeader('expected "rkp 1" header in empty document')
    first_line, first = statements[0]
    if first != ["rkp", "1"]:
        raise BadHeader(f'expected "rkp 1", got {" ".join(first)!r}', line=first_line)

    vertices: dict[str, int] = {}
    les: list[tuple[str, str, int]] = []
    ils: list[tuple[str, int, int]] = []
    for lineno, toks in statements[1:]:
        kw = toks[0]
        if kw == "vertex":
            if len(toks) != 2 or not NAME_RE.match(toks[1]):
                raise MalformedLine("expected: vertex NAME", line=lineno)
            if toks[1] in vertices:
                raise DuplicateVertex(
                    f"vertex {toks[1]!r} already declared on line {vertices[toks[1]]}",
                    line=lineno,
                )
            vertices[toks[1]] = lineno
        elif kw == "le":
            if len(toks) != 3 or not all(NAME_RE.match(t) for t in toks[1:]):
                raise MalformedLine("expected: le NAME NAME", line=lineno)
            les.append((toks[1], toks[2], lineno))
        elif kw == "il":
            if len(toks) != 3 or not NAME_RE.match(toks[1]) or not toks[2].isdigit():
                raise MalformedLine("expected: il NAME COUNT", line=lineno)
            ils.append((toks[1], int(toks[2]), lineno))
        else:
            raise MalformedLine(f"unknown statement {kw!r}", line=lineno)

    for a, b, lineno in les:
        for name in (a, b):
            if name not in vertices:
                raise UnknownVertex(f"line {lineno}: undeclared vertex {name!r}")
    for name, _, lineno in ils:
        if name not in vertices:
            raise UnknownVertex(f"line {lineno}: undeclared vertex {name!r}")

    order = close_preorder(vertices, [(a, b) for a, b, _ in les])
    cls_of = {v: cls for cls in mutual_classes(order) for v in cls}
    il: dict[frozenset[str], int] = {}
    claimed: dict[frozenset[str], int] = {}
    for name, count, lineno in ils:
        cls = cls_of[name]
        if cls in il:
            raise DuplicateIl(
                f"class of {name!r} already has a limit count (line {claimed[cls]})",
                line=lineno,
            )
        il[cls] = count
        claimed[cls] = lineno
    missing = [cls for cls in mutual_classes(order) if cls not in il]
    if missing:
        raise MissingIl(f"no il declaration for the class of {min(missing[0])!r}")
    return RkProfile(order, il)


@dataclass(frozen=True)
class ProfileDocument:
    """The canonical line groups of a serialized profile."""

    vertex_lines: tuple[str, ...]
    le_lines: tuple[str, ...]
    il_lines: tuple[str, ...]
    header: str = _format.HEADER

    @classmethod
    def from_profile(cls, profile: RkProfile) -> "ProfileDocument":
        _require_admissible(profile)
        q = quotient(profile)
        reps = [c.representative for c in q.classes]
        pos = {r: i for i, r in enumerate(reps)}
        members = [sorted(q.members[r]) for r in reps]
        ils = [c.limit_count for c in q.classes]
        covers = [(pos[a], pos[b]) for a, b in q.covers()]
        return cls(*_format.compose_lines(members, ils, covers))

    def text(self) -> str:
        return self.encode().decode("utf-8")

    def encode(self) -> bytes:
        return _format.document_bytes(self.vertex_lines, self.le_lines, self.il_lines)


def serialize(profile: RkProfile) -> bytes:
    """Deterministic canonical document for a valid profile."""
    return ProfileDocument.from_profile(profile).encode()


def render_dot(profile: RkProfile) -> bytes:
    """Directed-graph document: one node per class, one edge per Hasse cover, bottom to top."""
    _require_admissible(profile)
    q = quotient(profile)
    lines = ["digraph rk {", "  rankdir=BT;"]
    for c in q.classes:
        lines.append(
            f'  "{c.representative}" '
            f'[label="{c.representative} | size={c.size} | IL={c.limit_count}"];'
        )
    for a, b in q.covers():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_ascii(profile: RkProfile) -> bytes:
    """Leveled drawing by longest-chain depth from the least class, bottom line last."""
    _require_admissible(profile)
    q = quotient(profile)
    covers = q.covers()
    preds: dict[str, list[str]] = {c.representative: [] for c in q.classes}
    for a, b in covers:
        preds[b].append(a)
    depth: dict[str, int] = {}
    while len(depth) < len(preds):
        for r, ps in preds.items():
            if r not in depth and all(p in depth for p in ps):
                depth[r] = max((depth[p] + 1 for p in ps), default=0)
    levels: dict[int, list[str]] = {}
    for c in q.classes:
        levels.setdefault(depth[c.representative], []).append(c.representative)
    summary = {c.representative: c for c in q.classes}
    lines = []
    for d in sorted(levels, reverse=True):
        lines.append(
            " ".join(
                f"{r}({summary[r].size},{summary[r].limit_count})" for r in sorted(levels[d])
            )
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
