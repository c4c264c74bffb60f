# Bitmask depth-first searches shared by the packs and solvers modules.
#
# Columns are visited in index order. Taking the "exclude" branch first visits
# leaves in lexicographic order of the incidence vector (x_1 most significant).
from __future__ import annotations

from typing import Iterator, Sequence

from .core import Instance, InstanceTooLarge, MAX_N


def guard(inst: Instance, limit: int = MAX_N):
    if inst.n > limit:
        raise InstanceTooLarge(f"n = {inst.n} exceeds the enumeration limit {limit}")


def iter_masks(inst: Instance) -> Iterator[tuple[int, int, int]]:
    """Yield ``(mask, c.x + alpha, d.x + beta)`` for every feasible pack, lex order."""
    n, c, d, conflicts = inst.n, inst.c, inst.d, inst.conflicts
    stack = [(0, 0, inst.alpha, inst.beta)]
    while stack:
        i, mask, num, den = stack.pop()
        if i == n:
            yield mask, num, den
            continue
        if not conflicts[i] & mask:
            stack.append((i + 1, mask | 1 << i, num + c[i], den + d[i]))
        stack.append((i + 1, mask, num, den))


def max_linear(inst: Instance, weights: Sequence[int]) -> tuple[int, int, int]:
    """Maximize ``weights.x`` over feasible packs by branch-and-bound.

    Branches on the lowest-index undecided column, "include" first. The bound
    at a node is the current sum plus every positive weight among the
    undecided columns that do not conflict with the current selection; a node
    is pruned when its bound does not beat the incumbent.

    Returns ``(best value, best mask, nodes explored)``.
    """
    n, conflicts = inst.n, inst.conflicts
    pos = [max(w, 0) for w in weights]
    best_value, best_mask = 0, 0
    nodes = 0
    stack = [(0, 0, 0)]
    while stack:
        i, mask, value = stack.pop()
        nodes += 1
        if value > best_value:
            best_value, best_mask = value, mask
        bound = value
        for j in range(i, n):
            if pos[j] and not conflicts[j] & mask:
                bound += pos[j]
        if bound <= best_value:
            continue
        if i == n:
            continue
        stack.append((i + 1, mask, value))
        if not conflicts[i] & mask:
            stack.append((i + 1, mask | 1 << i, value + weights[i]))
    return best_value, best_mask, nodes


def lex_first_at_least(inst: Instance, weights: Sequence[int], target: int) -> int | None:
    """Lexicographically smallest feasible pack with ``weights.x >= target``.

    Returns its mask, or ``None`` if no pack reaches the target.
    """
    n, conflicts = inst.n, inst.conflicts
    pos = [max(w, 0) for w in weights]
    stack = [(0, 0, 0)]
    while stack:
        i, mask, value = stack.pop()
        if value >= target:
            # excluding every remaining column is the smallest completion
            return mask
        reach = value
        for j in range(i, n):
            if pos[j] and not conflicts[j] & mask:
                reach += pos[j]
        if reach < target or i == n:
            continue
        if not conflicts[i] & mask:
            stack.append((i + 1, mask | 1 << i, value + weights[i]))
        stack.append((i + 1, mask, value))
    return None
