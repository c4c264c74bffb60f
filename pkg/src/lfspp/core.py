"""Instance model, feasibility and exact objective evaluation.

An instance is the tuple ``(A, c, d, alpha, beta)`` of a linear fractional
set packing problem::

    maximize   (c.x + alpha) / (d.x + beta)
    subject to A x <= 1,  x in {0, 1}^n

Columns are 0-based internally. Everything printed for humans (``str`` of a
:class:`Pack`, the CLI) uses 1-based column numbers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "Rational", "Instance", "Pack",
    "LfsppError", "ValidationError", "NonBinaryMatrix", "NonPositiveBeta",
    "DimensionMismatch", "MagnitudeOverflow", "ParseError", "LengthMismatch",
    "NonPositiveDenominator", "InfeasiblePack", "InstanceTooLarge",
    "MAX_COEFF", "MAX_N",
    "validate_instance", "is_feasible", "objective", "linear_objective",
    "parse_instance", "format_instance", "read_instance",
]

# Fraction keeps q > 0, reduces by gcd and compares by cross-multiplication
# on unbounded ints, which is exactly the value type we need.
Rational = Fraction

MAX_COEFF = 2 ** 30
MAX_N = 63


class LfsppError(Exception):
    """Base class of every error raised by this package."""


class ValidationError(LfsppError, ValueError):
    pass


class NonBinaryMatrix(ValidationError):
    pass


class NonPositiveBeta(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class MagnitudeOverflow(ValidationError):
    pass


class ParseError(ValidationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class LengthMismatch(LfsppError, ValueError):
    pass


class InfeasiblePack(LfsppError, ValueError):
    pass


class InstanceTooLarge(LfsppError):
    pass


class NonPositiveDenominator(LfsppError):
    """A feasible pack has ``d.x + beta <= 0``; the instance is inadmissible."""

    def __init__(self, pack: "Pack", denominator: int):
        self.pack = pack
        self.denominator = denominator
        super().__init__(
            f"pack {pack} has non-positive denominator d.x + beta = {denominator}")


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, Fraction)) and value == int(value):
        return int(value)
    raise ValidationError(f"{what} must be an integer, got {value!r}")


@dataclass(frozen=True, eq=False)
class Instance:
    """A validated LFSPP instance. Immutable once built.

    ``A`` is stored as a read-only ``int8`` array; ``c`` and ``d`` as tuples of
    Python ints so sums never leave exact integer arithmetic.
    """

    A: np.ndarray
    c: tuple[int, ...]
    d: tuple[int, ...]
    alpha: int = 0
    beta: int = 1

    def __post_init__(self):
        A = np.array(self.A, dtype=object)
        if A.ndim != 2:
            raise DimensionMismatch(f"A must be 2-dimensional, got shape {A.shape}")
        m, n = A.shape
        if m < 1 or n < 1:
            raise DimensionMismatch(f"need m >= 1 and n >= 1, got m={m}, n={n}")
        if n > MAX_N:
            raise MagnitudeOverflow(f"n = {n} exceeds the limit {MAX_N}")
        entries = [_as_int(v, "matrix entry") for v in A.ravel()]
        bad = [v for v in entries if v not in (0, 1)]
        if bad:
            raise NonBinaryMatrix(f"matrix entries must be 0 or 1, found {bad[0]}")
        c = tuple(_as_int(v, "c_j") for v in self.c)
        d = tuple(_as_int(v, "d_j") for v in self.d)
        if len(c) != n or len(d) != n:
            raise DimensionMismatch(
                f"c and d must have length n={n}, got {len(c)} and {len(d)}")
        alpha = _as_int(self.alpha, "alpha")
        beta = _as_int(self.beta, "beta")
        if beta <= 0:
            raise NonPositiveBeta(f"beta must be positive, got {beta}")
        for v in (*c, *d, alpha, beta):
            if abs(v) > MAX_COEFF:
                raise MagnitudeOverflow(f"coefficient {v} exceeds 2^30 in magnitude")
        A = np.array(entries, dtype=np.int8).reshape(m, n)
        A.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def n(self) -> int:
        return self.A.shape[1]

    @cached_property
    def conflicts(self) -> tuple[int, ...]:
        """Bitmask per column of the other columns sharing a row with it."""
        masks = []
        for j in range(self.n):
            rows = self.A[:, j] == 1
            share = np.flatnonzero(self.A[rows].any(axis=0)) if rows.any() else []
            masks.append(sum(1 << int(k) for k in share if k != j))
        return tuple(masks)

    def mask_feasible(self, mask: int) -> bool:
        conflicts = self.conflicts
        rest = mask
        while rest:
            low = rest & -rest
            if conflicts[low.bit_length() - 1] & mask:
                return False
            rest ^= low
        return True

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.c == other.c and self.d == other.d
                and self.alpha == other.alpha and self.beta == other.beta
                and np.array_equal(self.A, other.A))

    def __hash__(self):
        return hash((self.A.tobytes(), self.A.shape, self.c, self.d,
                     self.alpha, self.beta))

    def __repr__(self):
        return (f"Instance(A={self.A.tolist()}, c={self.c}, d={self.d}, "
                f"alpha={self.alpha}, beta={self.beta})")

    def replace(self, **changes) -> "Instance":
        fields = dict(A=self.A, c=self.c, d=self.d, alpha=self.alpha, beta=self.beta)
        fields.update(changes)
        return Instance(**fields)


@dataclass(frozen=True, order=False)
class Pack:
    """A set of columns, stored as a bitmask (bit ``j`` is column ``j``)."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise LengthMismatch(f"mask {self.mask:b} does not fit {self.n} columns")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "Pack":
        mask = 0
        for j in members:
            if not 0 <= j < n:
                raise LengthMismatch(f"column index {j} out of range for n={n}")
            mask |= 1 << j
        return cls(n, mask)

    @classmethod
    def from_columns(cls, n: int, columns: Iterable[int]) -> "Pack":
        """Build from 1-based column numbers (the human-facing convention)."""
        return cls.from_members(n, (j - 1 for j in columns))

    @classmethod
    def from_x(cls, x: Sequence[int] | str) -> "Pack":
        bits = [int(b) for b in x]
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"incidence vector must be 0/1, got {x!r}")
        return cls.from_members(len(bits), (j for j, b in enumerate(bits) if b))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.mask >> j & 1)

    @property
    def x(self) -> tuple[int, ...]:
        return tuple(self.mask >> j & 1 for j in range(self.n))

    @property
    def bits(self) -> str:
        return "".join(str(b) for b in self.x)

    @property
    def lex_key(self) -> str:
        """Sort key giving lexicographic order of the incidence vector."""
        return self.bits

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, j):
        return isinstance(j, int) and 0 <= j < self.n and bool(self.mask >> j & 1)

    def __str__(self):
        return "{" + ",".join(str(j + 1) for j in self.members) + "}"

    def __repr__(self):
        return f"Pack({self})"

    def union(self, other: "Pack | Iterable[int]") -> "Pack":
        if isinstance(other, Pack):
            return Pack(self.n, self.mask | other.mask)
        return Pack(self.n, self.mask | Pack.from_members(self.n, other).mask)

    def add(self, j: int) -> "Pack":
        return self.union((j,))


def validate_instance(raw: Mapping[str, Any] | Instance) -> Instance:
    """Check raw instance data and return an :class:`Instance`.

    ``raw`` maps ``A``, ``c``, ``d`` and optionally ``alpha`` (default 0),
    ``beta`` (default 1), ``m`` and ``n``. Declared ``m``/``n`` must match the
    matrix. The input is not modified.
    """
    if isinstance(raw, Instance):
        return raw
    try:
        A, c, d = raw["A"], raw["c"], raw["d"]
    except KeyError as exc:
        raise ValidationError(f"missing field {exc.args[0]!r}") from None
    rows = [list(r) for r in A]
    if len({len(r) for r in rows}) > 1:
        raise DimensionMismatch("rows of A have different lengths")
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if "m" in raw and raw["m"] != m:
        raise DimensionMismatch(f"declared m={raw['m']} but A has {m} rows")
    if "n" in raw and rows and raw["n"] != n:
        raise DimensionMismatch(f"declared n={raw['n']} but A has {n} columns")
    return Instance(A=np.array(rows, dtype=object).reshape(m, n) if rows else np.zeros((0, 0)),
                    c=tuple(c), d=tuple(d),
                    alpha=raw.get("alpha", 0), beta=raw.get("beta", 1))


def _check_length(inst: Instance, size: int, what: str):
    if size != inst.n:
        raise LengthMismatch(f"{what} has length {size}, instance has n={inst.n}")


def is_feasible(inst: Instance, x: Sequence[int] | Pack) -> bool:
    """True iff every row of ``A x`` is at most 1."""
    if isinstance(x, Pack):
        x = x.x
    vec = np.asarray(x, dtype=np.int64)
    _check_length(inst, vec.size, "x")
    return bool(np.all(inst.A @ vec <= 1))


def _require_feasible(inst: Instance, pack: Pack):
    _check_length(inst, pack.n, "pack")
    if not inst.mask_feasible(pack.mask):
        raise InfeasiblePack(f"pack {pack} violates A x <= 1")


def sums(inst: Instance, mask: int) -> tuple[int, int]:
    """``(c.x + alpha, d.x + beta)`` for the pack with the given bitmask."""
    num, den = inst.alpha, inst.beta
    for j in range(inst.n):
        if mask >> j & 1:
            num += inst.c[j]
            den += inst.d[j]
    return num, den


def objective(inst: Instance, pack: Pack) -> Fraction:
    """Exact value of ``(c.x + alpha) / (d.x + beta)``.

    Raises :class:`NonPositiveDenominator` if ``d.x + beta <= 0``.
    """
    _require_feasible(inst, pack)
    num, den = sums(inst, pack.mask)
    if den <= 0:
        raise NonPositiveDenominator(pack, den)
    return Fraction(num, den)


def linear_objective(inst: Instance, pack: Pack, weights: Sequence[int]) -> int:
    _require_feasible(inst, pack)
    weights = [_as_int(w, "weight") for w in weights]
    _check_length(inst, len(weights), "weights")
    return sum(weights[j] for j in pack.members)


# -- text format ------------------------------------------------------------

def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            out.append((number, tokens))
    return out


_INT = re.compile(r"[+-]?\d+\Z")


def _ints(tokens: list[str], expected: int, line: int, what: str) -> list[int]:
    if len(tokens) != expected:
        raise ParseError(f"{what}: expected {expected} tokens, got {len(tokens)}", line)
    values = []
    for tok in tokens:
        if not _INT.match(tok):
            raise ParseError(f"{what}: {tok!r} is not an integer", line)
        values.append(int(tok))
    return values


def parse_instance(text: str) -> Instance:
    """Parse the whitespace-separated instance text format.

    Layout (``#`` starts a comment)::

        m n
        alpha beta
        c_1 ... c_n
        d_1 ... d_n
        <m rows of A, n tokens of 0/1 each>
    """
    lines = _logical_lines(text)
    if len(lines) < 4:
        last = lines[-1][0] if lines else 1
        raise ParseError("unexpected end of input: header incomplete", last)
    (l1, t1), (l2, t2), (l3, t3), (l4, t4) = lines[:4]
    m, n = _ints(t1, 2, l1, "dimensions 'm n'")
    if m < 1 or n < 1:
        raise ParseError(f"need m >= 1 and n >= 1, got m={m}, n={n}", l1)
    alpha, beta = _ints(t2, 2, l2, "'alpha beta'")
    c = _ints(t3, n, l3, "cost vector c")
    d = _ints(t4, n, l4, "weight vector d")
    rows = []
    body = lines[4:]
    for i in range(m):
        if i >= len(body):
            last = body[-1][0] if body else l4
            raise ParseError(f"expected {m} matrix rows, got {len(body)}", last)
        number, tokens = body[i]
        row = _ints(tokens, n, number, f"matrix row {i + 1}")
        if any(v not in (0, 1) for v in row):
            raise ParseError(f"matrix row {i + 1}: entries must be 0 or 1", number)
        rows.append(row)
    if len(body) > m:
        raise ParseError("trailing data after the matrix", body[m][0])
    try:
        return Instance(A=np.array(rows, dtype=np.int8), c=c, d=d, alpha=alpha, beta=beta)
    except ValidationError as exc:
        raise ParseError(str(exc), l2 if isinstance(exc, NonPositiveBeta) else None) from exc


def format_instance(inst: Instance) -> str:
    lines = [f"{inst.m} {inst.n}", f"{inst.alpha} {inst.beta}",
             " ".join(map(str, inst.c)), " ".join(map(str, inst.d))]
    lines += [" ".join(str(int(v)) for v in row) for row in inst.A]
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
