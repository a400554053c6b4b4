"""Exhaustive enumeration of finite biquandles by constraint propagation.

Tables are filled cell by cell; the equational axioms (1 and 3) propagate
forced values and detect contradictions early, while the existential axioms
(2 and 4) are checked only on completed tables.  Blank cells are rated by
how many incomplete axiom instances could read them under some completion;
search branches on a highest-rated cell, so the most constrained parts of
the table are decided first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (AXIOM_PAIR_EQS, AXIOM_TRIPLE_EQS, Biquandle, OpKind,
                   validate_biquandle, write_biquandle)

Cell = tuple[OpKind, int, int]  # (table, row element, column element), 1-based


@dataclass
class PartialBiquandle:
    """Four n x n tables with 0 marking a blank cell."""

    tables: list[list[list[int]]]

    @staticmethod
    def blank(n: int) -> "PartialBiquandle":
        return PartialBiquandle([[[0] * n for _ in range(n)] for _ in range(4)])

    @staticmethod
    def from_biquandle(T: Biquandle) -> "PartialBiquandle":
        return PartialBiquandle([[list(row) for row in t] for t in T.tables])

    @property
    def n(self) -> int:
        return len(self.tables[0])

    def copy(self) -> "PartialBiquandle":
        return PartialBiquandle([[row[:] for row in t] for t in self.tables])

    def get(self, cell: Cell) -> int:
        k, a, b = cell
        return self.tables[k][a - 1][b - 1]

    def set(self, cell: Cell, value: int) -> None:
        k, a, b = cell
        self.tables[k][a - 1][b - 1] = value

    def blanks(self) -> list[Cell]:
        n = self.n
        return [(OpKind(k), a, b)
                for k in range(4)
                for a in range(1, n + 1)
                for b in range(1, n + 1)
                if self.tables[k][a - 1][b - 1] == 0]

    def is_complete(self) -> bool:
        return all(v for t in self.tables for row in t for v in row)

    def to_biquandle(self) -> Biquandle:
        return Biquandle(tuple(tuple(tuple(row) for row in t) for t in self.tables))


def axiom_instances(n: int):
    """Every equational axiom instance: (axiom id, lhs, rhs, variable values)."""
    out = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for eq_id, lhs, rhs in AXIOM_PAIR_EQS:
                out.append((eq_id, lhs, rhs, (a, b)))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                for eq_id, lhs, rhs in AXIOM_TRIPLE_EQS:
                    out.append((eq_id, lhs, rhs, (a, b, c)))
    return out


def _eval_partial(P: PartialBiquandle, expr, vals):
    """Evaluate bottom-up; returns ('val', v), ('blank', cell) when only the
    outermost cell is blank, or ('deep', None) when an inner read blocked."""
    if isinstance(expr, int):
        return "val", vals[expr]
    kind, left, right = expr
    lk, lv = _eval_partial(P, left, vals)
    rk, rv = _eval_partial(P, right, vals)
    if lk != "val" or rk != "val":
        return "deep", None
    v = P.tables[kind][lv - 1][rv - 1]
    if v == 0:
        return "blank", (OpKind(kind), lv, rv)
    return "val", v


def _possible_reads(P: PartialBiquandle, expr, vals) -> tuple[set, set]:
    """(possible values, blank cells possibly read) under any completion."""
    if isinstance(expr, int):
        return {vals[expr]}, set()
    kind, left, right = expr
    lvals, lblanks = _possible_reads(P, left, vals)
    rvals, rblanks = _possible_reads(P, right, vals)
    blanks = lblanks | rblanks
    values = set()
    hit_blank = False
    for u in lvals:
        for v in rvals:
            w = P.tables[kind][u - 1][v - 1]
            if w == 0:
                blanks.add((OpKind(kind), u, v))
                hit_blank = True
            else:
                values.add(w)
    if hit_blank:
        values.update(range(1, P.n + 1))
    return values, blanks


CONTRADICTION = "CONTRADICTION"


def propagate(P: PartialBiquandle):
    """Fixpoint of forced fills from axioms 1 and 3.

    An instance with one side fully evaluated and the other blocked exactly
    at its outermost blank cell forces that cell.  Returns the propagated
    copy, or CONTRADICTION when a fully determined instance fails.
    """
    P = P.copy()
    instances = axiom_instances(P.n)
    changed = True
    while changed:
        changed = False
        for _eq_id, lhs, rhs, vals in instances:
            lk, lv = _eval_partial(P, lhs, vals)
            rk, rv = _eval_partial(P, rhs, vals)
            if lk == "val" and rk == "val":
                if lv != rv:
                    return CONTRADICTION
            elif lk == "val" and rk == "blank":
                P.set(rv, lv)
                changed = True
            elif lk == "blank" and rk == "val":
                P.set(lv, rv)
                changed = True
    return P


def rate_zero(P: PartialBiquandle, cell: Cell) -> int:
    """Number of incomplete axiom instances that might read this blank cell.

    Monotone non-increasing as other cells get filled: completions only
    shrink each instance's set of possibly-read blanks.
    """
    if P.get(cell) != 0:
        raise ValueError(f"cell {cell} is not blank")
    count = 0
    for _eq_id, lhs, rhs, vals in axiom_instances(P.n):
        _lv, lb = _possible_reads(P, lhs, vals)
        _rv, rb = _possible_reads(P, rhs, vals)
        if cell in lb or cell in rb:
            count += 1
    return count


def _ratings(P: PartialBiquandle) -> dict[Cell, int]:
    counts: dict[Cell, int] = {c: 0 for c in P.blanks()}
    for _eq_id, lhs, rhs, vals in axiom_instances(P.n):
        _lv, lb = _possible_reads(P, lhs, vals)
        _rv, rb = _possible_reads(P, rhs, vals)
        for c in lb | rb:
            counts[c] += 1
    return counts


def complete_partial(P: PartialBiquandle) -> list[Biquandle]:
    """All valid biquandles extending P, sorted by serialized matrix."""
    found: list[Biquandle] = []

    def descend(state: PartialBiquandle):
        state = propagate(state)
        if state is CONTRADICTION:
            return
        if state.is_complete():
            T = state.to_biquandle()
            if validate_biquandle(T).ok:
                found.append(T)
            return
        ratings = _ratings(state)
        cell = max(ratings, key=lambda c: (ratings[c], [-x for x in c]))
        for v in range(1, state.n + 1):
            trial = state.copy()
            trial.set(cell, v)
            descend(trial)

    descend(P)
    found.sort(key=write_biquandle)
    return found


ENUMERATION_LIMIT = 4


def enumerate_biquandles(n: int, limit: int = ENUMERATION_LIMIT) -> list[Biquandle]:
    """Every biquandle on {1..n}, sorted by serialized matrix."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise ValueError(f"n = {n} exceeds the enumeration limit {limit}")
    return complete_partial(PartialBiquandle.blank(n))
