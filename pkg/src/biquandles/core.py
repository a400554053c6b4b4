"""Finite biquandles as explicit operation tables.

A biquandle on {1, ..., n} carries four binary operations, written here as

    UP       a ^ b        (a passes under b, positive sense)
    DOWN     a _ b        (a passes over b, positive sense)
    UPBAR    a ^ bbar     (a passes under b, reversed sense)
    DOWNBAR  a _ bbar     (a passes over b, reversed sense)

subject to the biquandle axioms (numbered 1-4 below, with roman parts).
The switch map S(a,b) = (b_a, a^b) is then an invertible solution of the
set-theoretic Yang-Baxter equation; its inverse is
S^-1(a,b) = (b^abar, a_bbar).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property


class OpKind(IntEnum):
    """Canonical operation order; used wherever a deterministic order matters."""

    UP = 0
    DOWN = 1
    UPBAR = 2
    DOWNBAR = 3


class BlockConvention(IntEnum):
    """Layout of the four n x n blocks inside a 2n x 2n biquandle matrix.

    DEFINITION reads [[B1, B2], [B3, B4]] as B1=UPBAR, B2=UP, B3=DOWNBAR,
    B4=DOWN.  LISTING reads B1=UP, B2=DOWN, B3=UPBAR, B4=DOWNBAR.
    """

    DEFINITION = 0
    LISTING = 1

    @staticmethod
    def from_name(name: str) -> "BlockConvention":
        try:
            return BlockConvention[name.upper()]
        except KeyError:
            raise ValueError(f"unknown block convention {name!r}") from None


# Block position (quadrant index 0..3, reading order) of each OpKind.
_BLOCK_OF_OP = {
    BlockConvention.DEFINITION: {
        OpKind.UPBAR: 0, OpKind.UP: 1, OpKind.DOWNBAR: 2, OpKind.DOWN: 3,
    },
    BlockConvention.LISTING: {
        OpKind.UP: 0, OpKind.DOWN: 1, OpKind.UPBAR: 2, OpKind.DOWNBAR: 3,
    },
}


class ParseError(ValueError):
    """Input text rejected; carries 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_biquandle: ok iff no axiom instance failed.

    failures holds (axiom id, witness tuple) pairs, sorted, capped at 100.
    """

    ok: bool
    failures: tuple[tuple[str, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Biquandle:
    """Operation tables over {1..n}; tables[k][a-1][b-1] = a op_k b.

    Immutable after construction.  Construction checks only shape and
    entry range; axiom validity is checked by validate_biquandle and
    cached on first use.
    """

    tables: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.tables) != 4:
            raise ValueError("expected four operation tables")
        n = len(self.tables[0])
        for t in self.tables:
            if len(t) != n or any(len(row) != n for row in t):
                raise ValueError("operation tables must all be n x n")
            for row in t:
                for v in row:
                    if not isinstance(v, int) or not 1 <= v <= n:
                        raise ValueError(f"table entry {v!r} outside 1..{n}")

    @staticmethod
    def from_tables(up, down, upbar, downbar) -> "Biquandle":
        as_tuple = lambda t: tuple(tuple(row) for row in t)
        return Biquandle((as_tuple(up), as_tuple(down), as_tuple(upbar), as_tuple(downbar)))

    @property
    def n(self) -> int:
        return len(self.tables[0])

    def op(self, kind: OpKind, a: int, b: int) -> int:
        return self.tables[kind][a - 1][b - 1]

    def up(self, a: int, b: int) -> int:
        return self.tables[0][a - 1][b - 1]

    def down(self, a: int, b: int) -> int:
        return self.tables[1][a - 1][b - 1]

    def upbar(self, a: int, b: int) -> int:
        return self.tables[2][a - 1][b - 1]

    def downbar(self, a: int, b: int) -> int:
        return self.tables[3][a - 1][b - 1]

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_biquandle(self)

    @property
    def is_valid(self) -> bool:
        return self.validation.ok


def apply_op(T: Biquandle, kind: OpKind, a: int, b: int) -> int:
    """Look up a op b in the given table; arguments are 1-based elements."""
    if not (1 <= a <= T.n and 1 <= b <= T.n):
        raise ValueError(f"elements ({a},{b}) outside 1..{T.n}")
    return T.tables[kind][a - 1][b - 1]


def switch(T: Biquandle, a: int, b: int) -> tuple[int, int]:
    """S(a,b) = (b_a, a^b)."""
    return T.down(b, a), T.up(a, b)


def switch_inv(T: Biquandle, a: int, b: int) -> tuple[int, int]:
    """S^-1(a,b) = (b^abar, a_bbar); axiom 1 makes this invert switch."""
    return T.upbar(b, a), T.downbar(a, b)


# ---------------------------------------------------------------------------
# Axiom equations as expression trees.
#
# An expression is either a variable index (int: 0=a, 1=b, 2=c) or a tuple
# (OpKind, left, right).  The same trees drive full validation here and
# blank-cell propagation in the search module.

Expr = "int | tuple"

_U, _D, _UB, _DB = OpKind.UP, OpKind.DOWN, OpKind.UPBAR, OpKind.DOWNBAR
_a, _b, _c = 0, 1, 2

# Axiom 1, over all pairs (a, b): composing a crossing with its reverse
# restores both colors.
AXIOM_PAIR_EQS: tuple[tuple[str, "Expr", "Expr"], ...] = (
    ("1.i", (_UB, (_U, _a, _b), (_D, _b, _a)), _a),
    ("1.ii", (_DB, (_D, _b, _a), (_U, _a, _b)), _b),
    ("1.iii", (_U, (_UB, _a, _b), (_DB, _b, _a)), _a),
    ("1.iv", (_D, (_DB, _b, _a), (_UB, _a, _b)), _b),
)

# Axiom 3, over all triples (a, b, c): the two sides of the third
# Reidemeister move, direct (i-iii) and reversed (iv-vi).
AXIOM_TRIPLE_EQS: tuple[tuple[str, "Expr", "Expr"], ...] = (
    ("3.i", (_U, (_U, _a, _b), _c), (_U, (_U, _a, (_D, _c, _b)), (_U, _b, _c))),
    ("3.ii", (_D, (_D, _c, _b), _a), (_D, (_D, _c, (_U, _a, _b)), (_D, _b, _a))),
    ("3.iii",
     (_U, (_D, _b, _a), (_D, _c, (_U, _a, _b))),
     (_D, (_U, _b, _c), (_U, _a, (_D, _c, _b)))),
    ("3.iv", (_UB, (_UB, _a, _b), _c), (_UB, (_UB, _a, (_DB, _c, _b)), (_UB, _b, _c))),
    ("3.v", (_DB, (_DB, _c, _b), _a), (_DB, (_DB, _c, (_UB, _a, _b)), (_DB, _b, _a))),
    ("3.vi",
     (_UB, (_DB, _b, _a), (_DB, _c, (_UB, _a, _b))),
     (_DB, (_UB, _b, _c), (_UB, _a, (_DB, _c, _b)))),
)


def eval_axiom_expr(tables, expr, vals) -> int:
    """Evaluate an axiom expression tree on complete tables.

    tables is Biquandle.tables; vals assigns elements to variable slots.
    """
    if isinstance(expr, int):
        return vals[expr]
    kind, left, right = expr
    u = eval_axiom_expr(tables, left, vals)
    v = eval_axiom_expr(tables, right, vals)
    return tables[kind][u - 1][v - 1]


def _axiom2_witnesses(T: Biquandle, a: int, b: int) -> tuple[list[int], list[int]]:
    """Solutions (x, y) of the axiom 2 systems at the pair (a, b)."""
    xs = []
    ys = []
    for x in range(1, T.n + 1):
        bx = T.downbar(b, x)
        if T.up(a, bx) == x and T.upbar(x, b) == a and T.down(bx, a) == b:
            xs.append(x)
    for y in range(1, T.n + 1):
        by = T.down(b, y)
        if T.upbar(a, by) == y and T.up(y, b) == a and T.downbar(by, a) == b:
            ys.append(y)
    return xs, ys


def kink_witnesses(T: Biquandle) -> dict[int, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Axiom 4 witnesses for every element a.

    Returns a -> (xs, ys) with xs = all x satisfying x = a_x and a = x^a,
    ys = all y satisfying y = a^ybar and a = y_abar.  These are exactly the
    colors sitting on a kink next to an arc colored a, hence the name; the
    Reidemeister-I reduction of cohomology constrains cocycles at them.
    """
    out = {}
    n = T.n
    for a in range(1, n + 1):
        xs = tuple(x for x in range(1, n + 1) if T.down(a, x) == x and T.up(x, a) == a)
        ys = tuple(y for y in range(1, n + 1) if T.upbar(a, y) == y and T.downbar(y, a) == a)
        out[a] = (xs, ys)
    return out


def validate_biquandle(T: Biquandle) -> ValidationReport:
    """Check every axiom instance exhaustively.

    Also cross-checks the set-theoretic Yang-Baxter equation for the switch
    map on all triples and invertibility of the switch on all pairs; these
    are consequences of axioms 1 and 3 and must agree with them.
    Failures are reported as (axiom id, witness), sorted, first 100 only.
    """
    n = T.n
    tables = T.tables
    failures: list[tuple[str, tuple[int, ...]]] = []

    for a in range(1, n + 1):
        for b in range(1, n + 1):
            vals = (a, b)
            for eq_id, lhs, rhs in AXIOM_PAIR_EQS:
                if eval_axiom_expr(tables, lhs, vals) != eval_axiom_expr(tables, rhs, vals):
                    failures.append((eq_id, vals))
            xs, ys = _axiom2_witnesses(T, a, b)
            if not xs:
                failures.append(("2.i-iii", vals))
            if not ys:
                failures.append(("2.iv-vi", vals))

    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                vals = (a, b, c)
                for eq_id, lhs, rhs in AXIOM_TRIPLE_EQS:
                    if eval_axiom_expr(tables, lhs, vals) != eval_axiom_expr(tables, rhs, vals):
                        failures.append((eq_id, vals))

    for a, (xs, ys) in kink_witnesses(T).items():
        if not xs:
            failures.append(("4.i-ii", (a,)))
        if not ys:
            failures.append(("4.iii-iv", (a,)))

    # Yang-Baxter equation: (SxId)(IdxS)(SxId) = (IdxS)(SxId)(IdxS).
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                p, q = switch(T, a, b)
                q2, r2 = switch(T, q, c)
                p3, q3 = switch(T, p, q2)
                left = (p3, q3, r2)
                q4, r4 = switch(T, b, c)
                p5, q5 = switch(T, a, q4)
                q6, r6 = switch(T, q5, r4)
                right = (p5, q6, r6)
                if left != right:
                    failures.append(("yang-baxter", (a, b, c)))

    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if switch_inv(T, *switch(T, a, b)) != (a, b) or \
                    switch(T, *switch_inv(T, a, b)) != (a, b):
                failures.append(("switch-inverse", (a, b)))

    failures.sort()
    return ValidationReport(ok=not failures, failures=tuple(failures[:100]))


def alexander_biquandle(n: int, s: int, t: int) -> Biquandle:
    """Linear biquandle on {1..n}: with 0-based x, y,

        x ^ y    = t*x + (1 - s*t)*y      x _ y    = s*x
        x ^ ybar = t'*x + (1 - s'*t')*y   x _ ybar = s'*x      (mod n)

    where s', t' are the inverses of s, t mod n.  Requires gcd(s, n) =
    gcd(t, n) = 1.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if math.gcd(s, n) != 1:
        raise ValueError(f"s = {s} is not invertible modulo {n}")
    if math.gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not invertible modulo {n}")
    si = pow(s, -1, n)
    ti = pow(t, -1, n)
    rng = range(n)
    up = [[(t * x + (1 - s * t) * y) % n + 1 for y in rng] for x in rng]
    down = [[(s * x) % n + 1 for _y in rng] for x in rng]
    upbar = [[(ti * x + (1 - si * ti) * y) % n + 1 for y in rng] for x in rng]
    downbar = [[(si * x) % n + 1 for _y in rng] for x in rng]
    return Biquandle.from_tables(up, down, upbar, downbar)


# ---------------------------------------------------------------------------
# File format: '#' starts a comment, then 2n rows of 2n whitespace-separated
# integers forming the block matrix [[B1, B2], [B3, B4]].


def read_biquandle(text: str, convention: BlockConvention = BlockConvention.DEFINITION) -> Biquandle:
    """Parse a 2n x 2n block matrix into a Biquandle.

    Rejects non-square input, odd dimension, and out-of-range entries,
    reporting 1-based line/column positions.
    """
    rows: list[list[int]] = []
    row_pos: list[list[int]] = []  # column of each entry, for error reports
    row_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        vals, cols = [], []
        col = 1
        for piece in line.split():
            start = line.index(piece, col - 1) + 1
            col = start + len(piece)
            try:
                vals.append(int(piece))
            except ValueError:
                raise ParseError(f"expected integer, got {piece!r}", lineno, start) from None
            cols.append(start)
        rows.append(vals)
        row_pos.append(cols)
        row_lines.append(lineno)

    if not rows:
        raise ParseError("empty biquandle matrix")
    size = len(rows)
    for i, r in enumerate(rows):
        if len(r) != size:
            raise ParseError(f"matrix is not square: row has {len(r)} entries, expected {size}",
                             row_lines[i])
    if size % 2 != 0:
        raise ParseError(f"matrix dimension {size} is odd; expected 2n x 2n", row_lines[0])
    n = size // 2
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if not 1 <= v <= n:
                raise ParseError(f"entry {v} outside 1..{n}", row_lines[i], row_pos[i][j])

    blocks = [
        [rows[i][:n] for i in range(n)],
        [rows[i][n:] for i in range(n)],
        [rows[i][:n] for i in range(n, size)],
        [rows[i][n:] for i in range(n, size)],
    ]
    placement = _BLOCK_OF_OP[convention]
    tables = tuple(tuple(tuple(row) for row in blocks[placement[kind]]) for kind in OpKind)
    return Biquandle(tables)


def write_biquandle(T: Biquandle, convention: BlockConvention = BlockConvention.DEFINITION) -> str:
    """Serialize to the canonical block-matrix text (no comments)."""
    n = T.n
    placement = _BLOCK_OF_OP[convention]
    quadrant = {pos: T.tables[kind] for kind, pos in placement.items()}
    lines = []
    for i in range(n):
        lines.append(" ".join(str(v) for v in quadrant[0][i] + quadrant[1][i]))
    for i in range(n):
        lines.append(" ".join(str(v) for v in quadrant[2][i] + quadrant[3][i]))
    return "\n".join(lines) + "\n"
