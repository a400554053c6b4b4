"""Colorings of a Gauss code by a finite biquandle.

Two independent enumeration strategies, kept deliberately separate so each
can check the other:

  enumerate_colorings        reduce the presentation, brute-force the
                             surviving generators, then rebuild eliminated
                             generators by replaying the reduction trace
                             backwards;
  enumerate_colorings_oracle depth-first fill-and-propagate directly on the
                             unreduced presentation.

Both return colorings as tuples indexed by semi-arc (entry k-1 is the color
of semi-arc k), sorted lexicographically.
"""

from __future__ import annotations

import multiprocessing

from .core import Biquandle
from .gauss import GaussCode
from .presentation import (Presentation, eval_word, knot_presentation,
                           reduce_with_trace, word_generators)

CANDIDATE_LIMIT = 10 ** 8
_PARALLEL_THRESHOLD = 2048


class SearchLimitError(RuntimeError):
    pass


Coloring = tuple  # color of semi-arc k at index k-1


def _decode(index: int, n: int, k: int) -> tuple[int, ...]:
    # odometer order: last generator varies fastest
    digits = []
    for _ in range(k):
        digits.append(index % n + 1)
        index //= n
    return tuple(reversed(digits))

def _scan_chunk(T: Biquandle, reduced: Presentation, trace, n_semi_arcs: int,
                start: int, stop: int) -> list[tuple[int, ...]]:
    n = T.n
    survivors = reduced.generators
    k = len(survivors)
    found = []
    for index in range(start, stop):
        values = _decode(index, n, k)
        asg = dict(zip(survivors, values))
        if all(eval_word(r.lhs, T, asg) == asg[r.rhs] for r in reduced.relations):
            for g, w in reversed(trace):
                asg[g] = eval_word(w, T, asg)
            found.append(tuple(asg[a] for a in range(1, n_semi_arcs + 1)))
    return found


def _scan_chunk_star(args):
    return _scan_chunk(*args)


def enumerate_colorings(code: GaussCode, T: Biquandle, jobs: int = 1) -> list[tuple[int, ...]]:
    """All colorings, via reduction plus brute force over the survivors."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    reduced, trace = reduce_with_trace(knot_presentation(code))
    n, k = T.n, len(reduced.generators)
    total = n ** k
    if total > CANDIDATE_LIMIT:
        raise SearchLimitError(
            f"search too large: {n}^{k} = {total} candidate assignments")

    arcs = code.n_semi_arcs
    if jobs == 1 or total < _PARALLEL_THRESHOLD:
        found = _scan_chunk(T, reduced, trace, arcs, 0, total)
    else:
        step = -(-total // jobs)
        tasks = [(T, reduced, trace, arcs, lo, min(lo + step, total))
                 for lo in range(0, total, step)]
        with multiprocessing.Pool(jobs) as pool:
            found = [c for chunk in pool.map(_scan_chunk_star, tasks) for c in chunk]
    found.sort()
    return found


def enumerate_colorings_oracle(code: GaussCode, T: Biquandle) -> list[tuple[int, ...]]:
    """All colorings, via fill-and-propagate on the unreduced presentation.

    Branches on the lowest unassigned semi-arc; a relation whose left side
    is fully assigned either forces its isolated generator or, if that is
    already assigned, must check out.
    """
    pres = knot_presentation(code)
    relations = [(r.lhs, sorted(word_generators(r.lhs)), r.rhs) for r in pres.relations]
    n = T.n
    arcs = pres.generators
    found: list[tuple[int, ...]] = []

    def propagate(asg: dict[int, int]) -> bool:
        changed = True
        while changed:
            changed = False
            for lhs, lhs_gens, rhs in relations:
                if all(g in asg for g in lhs_gens):
                    v = eval_word(lhs, T, asg)
                    if rhs in asg:
                        if asg[rhs] != v:
                            return False
                    else:
                        asg[rhs] = v
                        changed = True
        return True

    def descend(asg: dict[int, int]):
        free = next((a for a in arcs if a not in asg), None)
        if free is None:
            found.append(tuple(asg[a] for a in arcs))
            return
        for v in range(1, n + 1):
            trial = dict(asg)
            trial[free] = v
            if propagate(trial):
                descend(trial)

    root: dict[int, int] = {}
    if propagate(root):
        descend(root)
    found.sort()
    return found


def counting_invariant(code: GaussCode, T: Biquandle, jobs: int = 1) -> int:
    """Number of colorings of the code by T."""
    return len(enumerate_colorings(code, T, jobs=jobs))
