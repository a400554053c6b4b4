"""Signed Gauss codes for oriented virtual knots and links.

Text form: comma-separated tokens, one per crossing passage, '#' starting a
comment.  A token is a Gaussian integer: the real part's sign says over
(positive) or under (negative), a nonzero imaginary part (written +I / -I)
marks a negative crossing, a bare integer a positive one.  A '0' token ends
a component; a component with no passages is a zero-crossing unknot.

Example: the trefoil is  -1,2,-3,1,-2,3,0  and a two-component link may be
written  -1-I,2,-3,1+I,-4-I,5,-6,4+I,0,3,-2,6,-5,0.

Semi-arcs (the edges between consecutive passages) are numbered 1..N in
traversal order across components; semi-arc k terminates at passage k and
its successor wraps cyclically within the component.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .core import ParseError


class Role(Enum):
    OVER = "over"
    UNDER = "under"


@dataclass(frozen=True)
class GaussEntry:
    """One crossing passage: renumbered crossing id, role, crossing sign."""

    crossing: int
    role: Role
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Crossing:
    """A crossing with its four incident semi-arcs (global numbers)."""

    index: int
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int


@dataclass(frozen=True)
class GaussCode:
    """Validated, renumbered code: components of passages plus the renaming
    that maps original input ids to 1..n (first-occurrence order)."""

    components: tuple[tuple[GaussEntry, ...], ...]
    renaming: tuple[tuple[int, int], ...]

    @property
    def n_crossings(self) -> int:
        return len(self.renaming)

    @property
    def n_semi_arcs(self) -> int:
        return sum(max(len(c), 1) for c in self.components)

    def component_spans(self) -> list[tuple[int, int]]:
        """(first semi-arc, count) per component; empty components count 1."""
        spans = []
        start = 1
        for comp in self.components:
            size = max(len(comp), 1)
            spans.append((start, size))
            start += size
        return spans


_TOKEN_RE = re.compile(r"^([+-]?\d+)(?:([+-])[iI])?$")


def _scan_tokens(text: str) -> list[tuple[str, int, int]]:
    """Split into (token, line, column) triples; commas separate tokens."""
    tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 1
        for piece in line.split(","):
            stripped = piece.strip()
            if stripped:
                offset = col + len(piece) - len(piece.lstrip())
                tokens.append((stripped, lineno, offset))
            col += len(piece) + 1
    return tokens


def parse_gauss_code(text: str) -> GaussCode:
    """Parse and validate a signed Gauss code.

    Every crossing id must occur exactly twice, once over and once under,
    with the same crossing sign both times.  Ids are renumbered to 1..n in
    first-occurrence order.  A missing final 0 is tolerated.
    """
    tokens = _scan_tokens(text)
    if not tokens:
        raise ParseError("empty Gauss code")

    components: list[list[tuple[int, Role, int]]] = []
    current: list[tuple[int, Role, int]] = []
    closed = False
    for tok, line, col in tokens:
        m = _TOKEN_RE.match(tok.replace(" ", ""))
        if not m:
            raise ParseError(f"bad token {tok!r}", line, col)
        real = int(m.group(1))
        imag = m.group(2)
        if real == 0:
            if imag or m.group(1) != "0":
                raise ParseError(f"bad token {tok!r}: zero real part", line, col)
            components.append(current)
            current = []
            closed = True
            continue
        closed = False
        role = Role.OVER if real > 0 else Role.UNDER
        sign = -1 if imag else 1
        current.append((abs(real), role, sign))
    if current or not closed and not components:
        components.append(current)

    seen: dict[int, list[tuple[Role, int]]] = {}
    order: list[int] = []
    for comp in components:
        for cid, role, sign in comp:
            if cid not in seen:
                seen[cid] = []
                order.append(cid)
            seen[cid].append((role, sign))

    for cid in order:
        uses = seen[cid]
        if len(uses) == 1:
            raise ParseError(f"crossing {cid} appears only once")
        if len(uses) > 2:
            raise ParseError(f"crossing {cid} appears {len(uses)} times; expected twice")
        (r1, s1), (r2, s2) = uses
        if r1 == r2:
            raise ParseError(f"crossing {cid} appears twice as {r1.value}")
        if s1 != s2:
            raise ParseError(f"crossing {cid} has mismatched signs")

    renaming = {cid: i + 1 for i, cid in enumerate(order)}
    new_components = tuple(
        tuple(GaussEntry(renaming[cid], role, sign) for cid, role, sign in comp)
        for comp in components
    )
    return GaussCode(new_components, tuple(sorted(renaming.items())))


def _token_of(e: GaussEntry) -> str:
    if e.role is Role.OVER:
        return f"{e.crossing}+I" if e.sign < 0 else f"{e.crossing}"
    return f"-{e.crossing}-I" if e.sign < 0 else f"-{e.crossing}"


def serialize_gauss_code(code: GaussCode) -> str:
    """Canonical text: renumbered ids, each component ending in its 0."""
    parts = []
    for comp in code.components:
        parts.extend(_token_of(e) for e in comp)
        parts.append("0")
    return ",".join(parts)


def crossings_of(code: GaussCode) -> list[Crossing]:
    """Crossing structure with global semi-arc numbers, sorted by index.

    Semi-arc k ends at passage k; its successor is k+1 wrapping at the
    component boundary.
    """
    passages: dict[int, dict[Role, tuple[int, int]]] = {}
    pos = 1
    for comp in code.components:
        size = len(comp)
        for i, e in enumerate(comp):
            arc_in = pos + i
            arc_out = pos + (i + 1) % size
            passages.setdefault(e.crossing, {})[e.role] = (arc_in, arc_out)
        pos += max(size, 1)

    out = []
    for cid in sorted(passages):
        sign = next(e.sign for comp in code.components for e in comp if e.crossing == cid)
        u_in, u_out = passages[cid][Role.UNDER]
        o_in, o_out = passages[cid][Role.OVER]
        out.append(Crossing(cid, sign, u_in, o_in, u_out, o_out))
    return out


def insert_r_move(code: GaussCode, move: str, site, *, under_first: bool = False) -> GaussCode:
    """Insert a Reidemeister move, returning a new valid code.

    move "R1+" or "R1-": site is (component, position); a kink with a fresh
    crossing of that sign is inserted there, both passages adjacent, over
    passage first unless under_first.

    move "R2": site is ((comp_over, pos_over), (comp_under, pos_under));
    a cancelling pair is inserted, the first new crossing positive and the
    second negative, the moving strand passing over at both.  The two sites
    must be distinct positions.

    Positions are 0-based insertion points, 0..len(component).
    """
    comps = [list(c) for c in code.components]
    fresh = code.n_crossings + 1

    def check_site(ci, pos):
        if not 0 <= ci < len(comps):
            raise ValueError(f"no component {ci}")
        if not 0 <= pos <= len(comps[ci]):
            raise ValueError(f"position {pos} outside component {ci}")

    if move in ("R1+", "R1-"):
        ci, pos = site
        check_site(ci, pos)
        sign = 1 if move == "R1+" else -1
        pair = [GaussEntry(fresh, Role.OVER, sign), GaussEntry(fresh, Role.UNDER, sign)]
        if under_first:
            pair.reverse()
        comps[ci][pos:pos] = pair
    elif move == "R2":
        (c1, p1), (c2, p2) = site
        check_site(c1, p1)
        check_site(c2, p2)
        if c1 == c2 and p1 == p2:
            raise ValueError("R2 sites must be distinct")
        over_pair = [GaussEntry(fresh, Role.OVER, 1), GaussEntry(fresh + 1, Role.OVER, -1)]
        under_pair = [GaussEntry(fresh, Role.UNDER, 1), GaussEntry(fresh + 1, Role.UNDER, -1)]
        if c1 == c2:
            first, second = ((p1, over_pair), (p2, under_pair))
            if p2 > p1:
                first, second = ((p2, under_pair), (p1, over_pair))
            comps[c1][first[0]:first[0]] = first[1]
            comps[c1][second[0]:second[0]] = second[1]
        else:
            comps[c1][p1:p1] = over_pair
            comps[c2][p2:p2] = under_pair
    else:
        raise ValueError(f"unknown move {move!r}; expected R1+, R1- or R2")

    rebuilt = GaussCode(tuple(tuple(c) for c in comps),
                        tuple((i + 1, i + 1) for i in range(fresh + (move == "R2"))))
    return parse_gauss_code(serialize_gauss_code(rebuilt))
