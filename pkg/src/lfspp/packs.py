"""Pack taxonomy: redundant columns, prime/redundant classification,
completion to a prime pack and cardinality extremes.

A column ``j`` is redundant for a pack ``H`` when ``H + {j}`` is still a
pack. A pack with no redundant column is prime, i.e. inclusion-maximal.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence, Union

from . import _search
from .core import Instance, Pack, _require_feasible

__all__ = [
    "Kind", "PackClass", "redundant_columns", "classify", "complete_to_prime",
    "enumerate_packs", "max_cardinality_pack",
    "RULES",
]


class Kind(str, enum.Enum):
    PRIME = "prime"
    REDUNDANT = "redundant"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PackClass:
    kind: Kind
    redundant_columns: tuple[int, ...] = ()

    def __post_init__(self):
        if (self.kind is Kind.PRIME) != (not self.redundant_columns):
            raise ValueError("a pack is prime exactly when it has no redundant column")

    @property
    def is_prime(self) -> bool:
        return self.kind is Kind.PRIME


def _redundant(inst: Instance, mask: int) -> list[int]:
    conflicts = inst.conflicts
    return [j for j in range(inst.n) if not mask >> j & 1 and not conflicts[j] & mask]


def redundant_columns(inst: Instance, pack: Pack) -> tuple[int, ...]:
    """Columns ``j`` outside the pack such that adding ``j`` keeps it feasible.

    Returned sorted ascending, 0-based.
    """
    _require_feasible(inst, pack)
    return tuple(_redundant(inst, pack.mask))


def classify(inst: Instance, pack: Pack) -> PackClass:
    witnesses = redundant_columns(inst, pack)
    return PackClass(Kind.REDUNDANT if witnesses else Kind.PRIME, witnesses)


# A rule picks the next column to add from the (non-empty, ascending) list of
# redundant columns of the current pack.
Rule = Callable[[Instance, int, Sequence[int]], int]


def _lowest_index(inst, mask, candidates):
    return candidates[0]


def _best_ratio(inst, mask, candidates):
    # Largest c_j / d_j among columns with d_j > 0; ties go to the lower index.
    # With no such column we fall back to the lowest index.
    scored = [j for j in candidates if inst.d[j] > 0]
    if not scored:
        return candidates[0]
    return max(scored, key=lambda j: (Fraction(inst.c[j], inst.d[j]), -j))


RULES: dict[str, Rule] = {
    "lowest-index": _lowest_index,
    "best-ratio": _best_ratio,
}


def complete_to_prime(inst: Instance, pack: Pack,
                      rule: Union[str, Rule] = "lowest-index",
                      seed: int | None = None) -> Pack:
    """Add redundant columns one at a time until the pack is prime.

    ``rule`` is ``"lowest-index"`` (default), ``"best-ratio"``, ``"random"``
    (uses ``seed``) or a callable ``rule(inst, mask, candidates) -> column``.
    """
    _require_feasible(inst, pack)
    if rule == "random":
        rng = random.Random(seed)
        choose = lambda inst, mask, cands: rng.choice(cands)  # noqa: E731
    elif isinstance(rule, str):
        try:
            choose = RULES[rule]
        except KeyError:
            raise ValueError(f"unknown completion rule {rule!r}") from None
    else:
        choose = rule
    mask = pack.mask
    while True:
        candidates = _redundant(inst, mask)
        if not candidates:
            return Pack(inst.n, mask)
        j = choose(inst, mask, candidates)
        if j not in candidates:
            raise ValueError(f"rule picked column {j}, which is not redundant")
        mask |= 1 << j


def enumerate_packs(inst: Instance) -> Iterator[Pack]:
    """Every feasible pack, in lexicographic order of the incidence vector.

    Includes the empty pack. Infeasible prefixes are never extended.
    """
    _search.guard(inst)
    n = inst.n
    for mask, _, _ in _search.iter_masks(inst):
        yield Pack(n, mask)


def max_cardinality_pack(inst: Instance) -> Pack:
    """A pack of maximum size; among those, the lexicographically smallest."""
    _search.guard(inst)
    ones = [1] * inst.n
    best, _, _ = _search.max_linear(inst, ones)
    return Pack(inst.n, _search.lex_first_at_least(inst, ones, best))
