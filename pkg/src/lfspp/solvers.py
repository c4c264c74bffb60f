"""Exact solvers for fractional and linear set packing.

Three independent methods compute the same optimum:

* :func:`solve_oracle` enumerates every feasible pack;
* :func:`solve_bnb` is a depth-first branch-and-bound on the ratio itself;
* :func:`solve_dinkelbach` runs the parametric method, each step solving a
  linear set packing problem (:func:`solve_lspp`) with integer weights.

All comparisons are exact. Every report's witness is the lexicographically
smallest optimal pack, so the methods agree pack-for-pack as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _search
from .core import Instance, LengthMismatch, NonPositiveDenominator, Pack, _as_int, sums

__all__ = [
    "SolveReport", "solve_oracle", "solve_lspp", "solve_bnb", "solve_dinkelbach",
    "is_admissible", "min_denominator", "SOLVERS", "solve",
]


@dataclass(frozen=True)
class SolveReport:
    optimal_value: Fraction
    witness: Pack
    all_optima: tuple[Pack, ...] | None = None
    nodes_explored: int = 0
    iterations: int = 0
    lambdas: tuple[Fraction, ...] = field(default=(), repr=False)
    algorithm: str = ""


def _canonical(inst: Instance, value: Fraction) -> Pack:
    # Smallest pack with (c.x + alpha) q - p (d.x + beta) >= 0 for value = p/q.
    p, q = value.numerator, value.denominator
    weights = [cj * q - p * dj for cj, dj in zip(inst.c, inst.d)]
    mask = _search.lex_first_at_least(inst, weights, p * inst.beta - inst.alpha * q)
    assert mask is not None, "optimal value is not attained"
    _, den = sums(inst, mask)
    if den <= 0:
        raise NonPositiveDenominator(Pack(inst.n, mask), den)
    return Pack(inst.n, mask)


def solve_oracle(inst: Instance, collect_all: bool = False) -> SolveReport:
    """Exhaustive maximum of the ratio over every feasible pack.

    Raises :class:`NonPositiveDenominator` on the first pack (lex order) with
    ``d.x + beta <= 0``.
    """
    _search.guard(inst)
    n = inst.n
    best_num, best_den, best_mask = None, 1, 0
    optima: list[int] = []
    count = 0
    for mask, num, den in _search.iter_masks(inst):
        count += 1
        if den <= 0:
            raise NonPositiveDenominator(Pack(n, mask), den)
        if best_num is None:
            cmp = 1
        else:
            cmp = num * best_den - best_num * den
        if cmp > 0:
            best_num, best_den, best_mask = num, den, mask
            optima = [mask]
        elif cmp == 0 and collect_all:
            optima.append(mask)
    return SolveReport(
        optimal_value=Fraction(best_num, best_den),
        witness=Pack(n, best_mask),
        all_optima=tuple(Pack(n, m) for m in optima) if collect_all else None,
        nodes_explored=count,
        algorithm="oracle",
    )


def solve_lspp(inst: Instance, weights: Sequence[int] | None = None) -> SolveReport:
    """Maximize ``weights.x`` (default ``c``) over feasible packs."""
    _search.guard(inst)
    weights = list(inst.c) if weights is None else [_as_int(w, "weight") for w in weights]
    if len(weights) != inst.n:
        raise LengthMismatch(f"weights has length {len(weights)}, instance has n={inst.n}")
    best, _, nodes = _search.max_linear(inst, weights)
    mask = _search.lex_first_at_least(inst, weights, best)
    return SolveReport(Fraction(best), Pack(inst.n, mask), nodes_explored=nodes,
                       algorithm="lspp")


def min_denominator(inst: Instance) -> int:
    """Smallest ``d.x + beta`` over all feasible packs."""
    worst, _, _ = _search.max_linear(inst, [-dj for dj in inst.d])
    return inst.beta - worst


def is_admissible(inst: Instance) -> bool:
    """True iff every feasible pack has a positive denominator."""
    return min_denominator(inst) > 0


def _bound_exceeds(num: int, dmin: int, dmax: int, best_num: int, best_den: int) -> bool:
    # Is the subtree bound strictly above the incumbent best_num / best_den?
    if dmin <= 0:
        return True
    # For a negative numerator the ratio is largest at the largest denominator.
    den = dmin if num >= 0 else dmax
    return num * best_den > best_num * den


def solve_bnb(inst: Instance, check_bounds: bool = False) -> SolveReport:
    """Depth-first branch-and-bound on the fractional objective.

    Branches on the lowest-index free column, "include" before "exclude". A
    node with fixed sums ``(N0, D0)`` is bounded using the free columns that do
    not conflict with the current selection: ``Nmax = N0 + sum of positive
    c_j``, ``Dmin = D0 + sum of negative d_j`` (``Dmax`` analogously). The
    bound is ``Nmax / Dmin`` (``Nmax / Dmax`` when ``Nmax < 0``) and is infinite
    when ``Dmin <= 0``. Nodes whose bound does not beat the incumbent are
    pruned.

    With ``check_bounds`` every explored node's bound is checked against an
    exhaustive scan of its subtree (slow; for tests).
    """
    _search.guard(inst)
    n, c, d, conflicts = inst.n, inst.c, inst.d, inst.conflicts
    best_num, best_den = inst.alpha, inst.beta
    nodes = 0
    all_packs = list(_search.iter_masks(inst)) if check_bounds else None
    stack = [(0, 0, inst.alpha, inst.beta)]
    while stack:
        i, mask, num, den = stack.pop()
        nodes += 1
        if den <= 0:
            raise NonPositiveDenominator(Pack(n, mask), den)
        if num * best_den > best_num * den:
            best_num, best_den = num, den
        if i == n:
            continue
        nmax, dmin, dmax = num, den, den
        for j in range(i, n):
            if not conflicts[j] & mask:
                if c[j] > 0:
                    nmax += c[j]
                if d[j] < 0:
                    dmin += d[j]
                else:
                    dmax += d[j]
        if check_bounds:
            _assert_bound(inst, all_packs, i, mask, nmax, dmin, dmax)
        if not _bound_exceeds(nmax, dmin, dmax, best_num, best_den):
            continue
        stack.append((i + 1, mask, num, den))
        if not conflicts[i] & mask:
            stack.append((i + 1, mask | 1 << i, num + c[i], den + d[i]))
    value = Fraction(best_num, best_den)
    return SolveReport(value, _canonical(inst, value), nodes_explored=nodes,
                       algorithm="bnb")


def _assert_bound(inst, all_packs, i, mask, nmax, dmin, dmax):
    if dmin <= 0:
        return
    fixed = (1 << i) - 1
    subtree = [Fraction(num, den) for m, num, den in all_packs if m & fixed == mask]
    bound = Fraction(nmax, dmin if nmax >= 0 else dmax)
    best = max(subtree)
    if bound < best:
        raise AssertionError(
            f"bound {bound} below subtree optimum {best} at node {Pack(inst.n, mask)}, depth {i}")


def solve_dinkelbach(inst: Instance) -> SolveReport:
    """Dinkelbach's parametric method with exact rational parameter.

    Starting from the empty pack's value ``lambda = alpha / beta``, each step
    with ``lambda = p / q`` maximizes the integer-weighted linear objective
    ``sum (c_j q - p d_j) x_j + (alpha q - p beta)`` and moves ``lambda`` to
    the ratio of the maximizer. It stops when that maximum is exactly zero.
    """
    _search.guard(inst)
    n = inst.n
    lam = Fraction(inst.alpha, inst.beta)
    lambdas = [lam]
    iterations = nodes = 0
    while True:
        p, q = lam.numerator, lam.denominator
        weights = [cj * q - p * dj for cj, dj in zip(inst.c, inst.d)]
        best, mask, explored = _search.max_linear(inst, weights)
        iterations += 1
        nodes += explored
        gap = best + inst.alpha * q - p * inst.beta
        assert gap >= 0, "parametric maximum fell below the incumbent"
        if gap == 0:
            break
        num = inst.alpha + sum(inst.c[j] for j in range(n) if mask >> j & 1)
        den = inst.beta + sum(inst.d[j] for j in range(n) if mask >> j & 1)
        if den <= 0:
            raise NonPositiveDenominator(Pack(n, mask), den)
        lam = Fraction(num, den)
        lambdas.append(lam)
    return SolveReport(lam, _canonical(inst, lam), nodes_explored=nodes,
                       iterations=iterations, lambdas=tuple(lambdas),
                       algorithm="dinkelbach")


SOLVERS = {
    "oracle": solve_oracle,
    "bnb": solve_bnb,
    "dinkelbach": solve_dinkelbach,
}


def solve(inst: Instance, algo: str = "oracle", **kwargs) -> SolveReport:
    try:
        solver = SOLVERS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {sorted(SOLVERS)}") from None
    return solver(inst, **kwargs)
