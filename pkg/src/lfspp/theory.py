"""Mechanical checks of the structural results on prime packs.

Everything here works by exhaustive enumeration with exact rationals, so it is
meant for desk-scale instances (a dozen columns or so).

* :func:`lemma1_check` / :func:`lemma1_grid` -- the uniform-cost ratio
  inequality ``kc/(kd+b) < (k+l)c/((k+l)d+b)`` for ``c > 0`` (reversed for
  ``c < 0``).
* :func:`check_thm2a_condition`, :func:`check_thm2b_condition` and
  :func:`verify_thm2_conclusion` -- sufficient conditions for a prime optimal
  pack, and the check that the conclusion really follows.
* :func:`paper_counterexample` -- the 2x3 instance whose only optimum is a
  redundant pack.
* :func:`verify_thm3` -- uniform costs: optima have extreme cardinality.
* :func:`fuzz_properties` -- seeded random search for violations, with greedy
  shrinking of the failing instance.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

import numpy as np

from . import _search
from .core import (
    Instance, LfsppError, NonPositiveDenominator, Pack, format_instance,
    objective, parse_instance,
)
from .generate import GenerationFailed, GeneratorConfig, generate
from .packs import Kind, classify, enumerate_packs
from .solvers import (
    is_admissible, solve_bnb, solve_dinkelbach, solve_oracle,
)

__all__ = [
    "HypothesisViolated", "ConditionNotSatisfied", "NotUniform",
    "ConditionReport", "lemma1_check", "lemma1_grid", "Lemma1Sweep",
    "check_thm2a_condition", "check_thm2b_condition", "verify_thm2_conclusion",
    "check_extension_gain", "paper_instance", "paper_counterexample",
    "PaperFixture", "verify_thm3", "FuzzConfig", "FuzzReport", "Violation",
    "PROPERTIES", "THM2_CONDITIONS", "fuzz_properties", "minimize_instance",
    "parse_log_line",
]


class HypothesisViolated(LfsppError, ValueError):
    pass


class ConditionNotSatisfied(LfsppError):
    pass


class NotUniform(LfsppError, ValueError):
    pass


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a hypothesis check or a conclusion check.

    ``witness`` is set whenever ``holds`` is false: an offending column index
    (0-based), an ``(H1, T)`` pair of packs, or a pack, depending on the check.
    """

    condition: str
    holds: bool
    witness: Any = None
    detail: str = ""
    all_optima_prime: bool | None = None
    degenerate: bool = False

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing report needs a witness")


# -- Lemma 1 ----------------------------------------------------------------

def lemma1_check(c: int, d: int, k: int, l: int, beta: int, n: int) -> bool:
    """Exact check of the uniform-cost ratio inequality for one tuple.

    For ``c > 0``: ``kc/(kd+beta) < (kc+lc)/(kd+ld+beta)``; for ``c < 0`` the
    reverse strict inequality; for ``c = 0`` both sides vanish and the
    non-strict reading (equality) is reported as true.

    Raises :class:`HypothesisViolated` unless ``1 <= k``, ``1 <= l``,
    ``k + l <= n``, ``beta > 0`` and ``ld + beta``, ``kd + beta`` and
    ``(k+l)d + beta`` are all positive.
    """
    if k < 1 or l < 1 or k + l > n:
        raise HypothesisViolated(f"need 1 <= k, 1 <= l, k + l <= n (k={k}, l={l}, n={n})")
    if beta <= 0:
        raise HypothesisViolated(f"beta must be positive, got {beta}")
    for label, den in (("l*d + beta", l * d + beta), ("k*d + beta", k * d + beta),
                       ("(k+l)*d + beta", (k + l) * d + beta)):
        if den <= 0:
            raise HypothesisViolated(f"{label} = {den} is not positive")
    left = Fraction(k * c, k * d + beta)
    right = Fraction(k * c + l * c, k * d + l * d + beta)
    if c > 0:
        return left < right
    if c < 0:
        return left > right
    return left == right


@dataclass(frozen=True)
class Lemma1Sweep:
    checked: int
    violations: tuple[tuple[int, int, int, int, int, int], ...]
    degenerate: int  # tuples with c = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def lemma1_grid(cbound: int = 10, dbound: int = 10, max_n: int = 8,
                beta_max: int = 10) -> Lemma1Sweep:
    """Check every ``(c, d, k, l, beta)`` with ``|c| <= cbound``,
    ``|d| <= dbound``, ``k + l <= max_n``, ``1 <= beta <= beta_max`` that
    satisfies the hypotheses (others are skipped)."""
    checked = degenerate = 0
    violations = []
    n = max_n
    for c, d, beta in itertools.product(range(-cbound, cbound + 1),
                                        range(-dbound, dbound + 1),
                                        range(1, beta_max + 1)):
        for k in range(1, n):
            if k * d + beta <= 0:
                continue
            for l in range(1, n - k + 1):
                if l * d + beta <= 0 or (k + l) * d + beta <= 0:
                    continue
                checked += 1
                degenerate += c == 0
                if not lemma1_check(c, d, k, l, beta, n):
                    violations.append((c, d, k, l, beta, n))
    return Lemma1Sweep(checked, tuple(violations), degenerate)


# -- Theorem 2 --------------------------------------------------------------

def check_thm2a_condition(inst: Instance) -> ConditionReport:
    """Every ``c_j > 0`` and every ``d_j < 0``."""
    for j, (cj, dj) in enumerate(zip(inst.c, inst.d)):
        if cj <= 0:
            return ConditionReport("thm2a", False, j, f"c_{j + 1} = {cj} <= 0")
        if dj >= 0:
            return ConditionReport("thm2a", False, j, f"d_{j + 1} = {dj} >= 0" if dj == 0
                                   else f"d_{j + 1} = {dj} > 0")
    return ConditionReport("thm2a", True)


def _pack_sums(inst: Instance) -> dict[int, tuple[int, int]]:
    return {mask: (num, den) for mask, num, den in _search.iter_masks(inst)}


def _proper_submasks(mask: int) -> Iterable[int]:
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _extension_pairs(inst: Instance):
    # (H1, T, sums of H1, sums over T) for feasible H1, non-empty T, H1 | T feasible
    table = _pack_sums(inst)
    for whole in table:
        if not whole:
            continue
        wnum, wden = table[whole]
        for h1 in _proper_submasks(whole):
            num, den = table[h1]
            if den <= 0:
                raise NonPositiveDenominator(Pack(inst.n, h1), den)
            yield h1, whole ^ h1, (num, den), (wnum - num, wden - den)


def check_thm2b_condition(inst: Instance) -> ConditionReport:
    """For every feasible ``H1`` and every non-empty ``T`` disjoint from it with
    ``H1 | T`` feasible: ``sum_T d > 0`` and
    ``sum_T c / sum_T d > Z(H1)``.

    Exhaustive over all such pairs. Witness: ``(H1, T)`` as packs.
    """
    _search.guard(inst)
    n = inst.n
    for h1, t, (num, den), (tc, td) in _extension_pairs(inst):
        if td <= 0:
            return ConditionReport(
                "thm2b", False, (Pack(n, h1), Pack(n, t)),
                f"H1 = {Pack(n, h1)}, T = {Pack(n, t)}: sum of d over T = {td} <= 0")
        if tc * den <= num * td:
            return ConditionReport(
                "thm2b", False, (Pack(n, h1), Pack(n, t)),
                f"H1 = {Pack(n, h1)}, T = {Pack(n, t)}: "
                f"{Fraction(tc, td)} <= {Fraction(num, den)}")
    return ConditionReport("thm2b", True)


def check_extension_gain(inst: Instance, single_columns: bool = False) -> ConditionReport:
    """Does every extension of a pack strictly raise the objective?

    With ``single_columns`` only one-column extensions ``H + {j}`` are tried
    (the step used when completing a pack to a prime one); otherwise every
    ``(H1, T)`` pair. Witness: the ``(H1, T)`` pair with ``Z(H1 | T) <= Z(H1)``.
    """
    _search.guard(inst)
    n = inst.n
    for h1, t, (num, den), (tc, td) in _extension_pairs(inst):
        if single_columns and t & (t - 1):
            continue
        wnum, wden = num + tc, den + td
        if wden <= 0:
            raise NonPositiveDenominator(Pack(n, h1 | t), wden)
        if wnum * den <= num * wden:
            return ConditionReport(
                "extension", False, (Pack(n, h1), Pack(n, t)),
                f"Z({Pack(n, h1 | t)}) = {Fraction(wnum, wden)} <= "
                f"Z({Pack(n, h1)}) = {Fraction(num, den)}")
    return ConditionReport("extension", True)


THM2_CONDITIONS = {"thm2a": check_thm2a_condition, "thm2b": check_thm2b_condition}


def verify_thm2_conclusion(inst: Instance, which: str) -> ConditionReport:
    """Confirm that some optimal pack is prime, given the hypothesis ``which``.

    ``holds`` answers "some optimum is prime"; ``all_optima_prime`` records the
    stronger "every optimum is prime". Raises :class:`ConditionNotSatisfied`
    if the hypothesis does not hold for ``inst``.
    """
    which = which if which.startswith("thm") else f"thm{which}"
    try:
        condition = THM2_CONDITIONS[which](inst)
    except KeyError:
        raise ValueError(f"unknown hypothesis {which!r}") from None
    if not condition.holds:
        raise ConditionNotSatisfied(f"{which} does not hold: {condition.detail}")
    report = solve_oracle(inst, collect_all=True)
    prime = [p for p in report.all_optima if classify(inst, p).is_prime]
    exists, every = bool(prime), len(prime) == len(report.all_optima)
    redundant = next((p for p in report.all_optima if p not in prime), None)
    return ConditionReport(
        f"{which}-conclusion", exists,
        None if exists else report.all_optima[0],
        f"optimum {report.optimal_value}; {len(report.all_optima)} optimal pack(s), "
        f"{len(prime)} prime" + (f"; {redundant} is redundant" if redundant else ""),
        all_optima_prime=every)


# -- the 2x3 counterexample -------------------------------------------------

def paper_instance() -> Instance:
    return Instance(A=[[1, 1, 0], [1, 0, 1]], c=(1, 2, 5), d=(4, 4, 6), alpha=0, beta=2)


# incidence vector, value, class -- in the order the note lists them
_FIXTURE_TABLE = (
    ("001", Fraction(5, 8), Kind.REDUNDANT),
    ("100", Fraction(1, 6), Kind.PRIME),
    ("011", Fraction(7, 12), Kind.PRIME),
    ("000", Fraction(0), Kind.REDUNDANT),
    ("010", Fraction(1, 3), Kind.REDUNDANT),
)


@dataclass(frozen=True)
class FixtureRow:
    pack: Pack
    value: Fraction
    kind: Kind
    witnesses: tuple[int, ...]

    def line(self) -> str:
        cols = ",".join(str(j + 1) for j in self.witnesses)
        return f"x={self.pack.bits} value={self.value} class={self.kind} witnesses={{{cols}}}"


@dataclass(frozen=True)
class PaperFixture:
    instance: Instance
    rows: tuple[FixtureRow, ...]
    optimal_value: Fraction
    optimal_pack: Pack
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def refuted(self) -> bool:
        """No prime pack attains the optimum."""
        return dict(self.checks)["no prime pack attains the optimum"]


def paper_counterexample() -> PaperFixture:
    """Rebuild the counterexample and check each recorded fact about it."""
    inst = paper_instance()
    rows = []
    checks = []
    for bits, value, kind in _FIXTURE_TABLE:
        pack = Pack.from_x(bits)
        got = objective(inst, pack)
        cls = classify(inst, pack)
        rows.append(FixtureRow(pack, got, cls.kind, cls.redundant_columns))
        checks.append((f"f({pack}) = {value}", got == value))
        checks.append((f"{pack} is {kind}", cls.kind is kind))
    report = solve_oracle(inst, collect_all=True)
    packs = list(enumerate_packs(inst))
    checks.append(("exactly five packs, all listed",
                   sorted(p.bits for p in packs) == sorted(b for b, _, _ in _FIXTURE_TABLE)))
    checks.append(("optimum is 5/8", report.optimal_value == Fraction(5, 8)))
    checks.append(("{3} is the unique optimum",
                   report.all_optima == (Pack.from_x("001"),)))
    checks.append(("{3} is redundant via column 2",
                   classify(inst, Pack.from_x("001")).redundant_columns == (1,)))
    checks.append(("no prime pack attains the optimum",
                   all(not classify(inst, p).is_prime for p in report.all_optima)))
    return PaperFixture(inst, tuple(rows), report.optimal_value, report.witness,
                        tuple(checks))


# -- Theorem 3 --------------------------------------------------------------

def verify_thm3(inst: Instance) -> ConditionReport:
    """Uniform costs ``c_j = c`` and weights ``d_j = d`` (with ``alpha = 0``).

    ``c > 0``: the optimal packs are exactly the maximum-cardinality packs.
    ``c < 0``: the empty pack is the unique optimum (flagged ``degenerate``).
    ``c = 0``: every pack is optimal at value 0 (flagged ``degenerate``).
    """
    if len(set(inst.c)) > 1 or len(set(inst.d)) > 1:
        j = next(j for j in range(1, inst.n)
                 if inst.c[j] != inst.c[0] or inst.d[j] != inst.d[0])
        raise NotUniform(f"column {j + 1} has (c, d) = ({inst.c[j]}, {inst.d[j]}), "
                         f"column 1 has ({inst.c[0]}, {inst.d[0]})")
    if inst.alpha != 0:
        raise ConditionNotSatisfied(f"uniform-cost result assumes alpha = 0, got {inst.alpha}")
    _search.guard(inst)
    c = inst.c[0]
    report = solve_oracle(inst, collect_all=True)
    optima = set(report.all_optima)
    packs = list(enumerate_packs(inst))
    if c > 0:
        top = max(len(p) for p in packs)
        expected = {p for p in packs if len(p) == top}
        label, degenerate = f"optima = packs of maximum cardinality {top}", False
    elif c < 0:
        expected = {Pack(inst.n, 0)}
        label, degenerate = "the empty pack is the unique optimum", True
    else:
        expected = set(packs)
        label, degenerate = "every pack is optimal (value 0)", True
    if optima == expected:
        return ConditionReport("uniform", True, detail=label, degenerate=degenerate,
                               all_optima_prime=all(classify(inst, p).is_prime for p in optima))
    stray = sorted(optima ^ expected, key=lambda p: p.lex_key)[0]
    return ConditionReport("uniform", False, stray,
                           f"{label} fails at {stray} (optimum {report.optimal_value})",
                           degenerate=degenerate)


# -- fuzzing ----------------------------------------------------------------

HOLDS, VIOLATED, SKIPPED = "holds", "violated", "skipped"


def _optima_classes(inst):
    report = solve_oracle(inst, collect_all=True)
    return report, [(p, classify(inst, p)) for p in report.all_optima]


def _prop_every_optimum_prime(inst):
    report, classes = _optima_classes(inst)
    for pack, cls in classes:
        if not cls.is_prime:
            cols = ",".join(str(j + 1) for j in cls.redundant_columns)
            return VIOLATED, f"optimum {pack} value={report.optimal_value} is redundant (add {{{cols}}})"
    return HOLDS, ""


def _prop_thm2a(inst):
    if not check_thm2a_condition(inst).holds:
        return SKIPPED, "thm2a hypothesis fails"
    return _prop_every_optimum_prime(inst)


def _prop_thm2b(inst):
    if not check_thm2b_condition(inst).holds:
        return SKIPPED, "thm2b hypothesis fails"
    report, classes = _optima_classes(inst)
    if any(cls.is_prime for _, cls in classes):
        return HOLDS, ""
    return VIOLATED, f"no prime optimum; optimum {report.optimal_value} at {report.witness}"


def _prop_agreement(inst):
    reports = [solve_oracle(inst), solve_bnb(inst), solve_dinkelbach(inst)]
    values = {r.optimal_value for r in reports}
    witnesses = {r.witness for r in reports}
    if len(values) == 1 and len(witnesses) == 1:
        return HOLDS, ""
    got = " ".join(f"{r.algorithm}={r.optimal_value}@{r.witness}" for r in reports)
    return VIOLATED, f"solvers disagree: {got}"


PROPERTIES: dict[str, tuple[str, Callable, bool]] = {
    # name: (description, check, expected to hold)
    "P1": ("every optimal pack is prime", _prop_every_optimum_prime, False),
    "P2": ("under thm2a, every optimal pack is prime", _prop_thm2a, True),
    "P3": ("under thm2b, some optimal pack is prime", _prop_thm2b, True),
    "P4": ("oracle, bnb and dinkelbach agree", _prop_agreement, True),
}


def _evaluate(prop: str, inst: Instance) -> tuple[str, str]:
    if not is_admissible(inst):
        return SKIPPED, "inadmissible"
    return PROPERTIES[prop][1](inst)


def _drop_column(inst: Instance, j: int) -> Instance:
    keep = [k for k in range(inst.n) if k != j]
    return inst.replace(A=inst.A[:, keep], c=[inst.c[k] for k in keep],
                        d=[inst.d[k] for k in keep])


def minimize_instance(inst: Instance, prop: str) -> Instance:
    """Greedily delete columns, then rows, while ``prop`` stays violated."""
    current = inst
    shrunk = True
    while shrunk:
        shrunk = False
        candidates = [lambda j=j: _drop_column(current, j) for j in range(current.n)] \
            if current.n > 1 else []
        if current.m > 1:
            candidates += [lambda i=i: current.replace(A=np.delete(current.A, i, axis=0))
                           for i in range(current.m)]
        for make in candidates:
            smaller = make()
            if _evaluate(prop, smaller)[0] == VIOLATED:
                current, shrunk = smaller, True
                break
    return current


@dataclass(frozen=True)
class FuzzConfig:
    """Generator settings plus which properties to test.

    ``n``, ``m`` and ``beta`` are inclusive ranges drawn per sample.
    ``condition`` is one of ``none``, ``2a``, ``2b``, ``uniform``.
    """

    samples: int = 1000
    seed: int = 0
    properties: tuple[str, ...] = ("P1", "P2", "P3", "P4")
    n: tuple[int, int] = (1, 8)
    m: tuple[int, int] = (1, 6)
    density: float = 0.4
    cmin: int = -20
    cmax: int = 20
    dmin: int = -20
    dmax: int = 20
    alpha: int = 0
    beta: tuple[int, int] = (1, 20)
    condition: str = "none"
    admissible: bool = True
    minimize: bool = True
    max_tries: int = 200

    def __post_init__(self):
        unknown = set(self.properties) - set(PROPERTIES)
        if unknown:
            raise ValueError(f"unknown properties {sorted(unknown)}")
        if self.condition not in ("none", "2a", "2b", "uniform"):
            raise ValueError(f"unknown condition {self.condition!r}")


@dataclass(frozen=True)
class Violation:
    prop: str
    sample: int
    detail: str
    instance: Instance
    original: Instance

    def log_line(self) -> str:
        body = " | ".join(format_instance(self.instance).strip().splitlines())
        return f"{self.prop} sample={self.sample} {self.detail} --- {body}"


@dataclass
class Tally:
    checked: int = 0
    holds: int = 0
    violated: int = 0
    skipped: int = 0


@dataclass
class FuzzReport:
    config: FuzzConfig
    tallies: dict[str, Tally] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    generation_failures: int = 0

    @property
    def unexpected(self) -> list[Violation]:
        """Violations of properties that are supposed to hold."""
        return [v for v in self.violations if PROPERTIES[v.prop][2]]

    def summary(self) -> str:
        lines = []
        for name, t in self.tallies.items():
            desc, _, expected = PROPERTIES[name]
            lines.append(f"{name} checked={t.checked} holds={t.holds} violated={t.violated} "
                         f"skipped={t.skipped} expect={'hold' if expected else 'fail'} ({desc})")
        if self.generation_failures:
            lines.append(f"generation failures: {self.generation_failures}")
        return "\n".join(lines)

    def to_log(self) -> str:
        return "".join(v.log_line() + "\n" for v in self.violations)


def parse_log_line(line: str) -> tuple[str, int, Instance]:
    """Inverse of :meth:`Violation.log_line`: ``(property, sample, instance)``."""
    head, _, body = line.partition(" --- ")
    if not body:
        raise ValueError("log line has no '---' instance section")
    prop, sample = head.split()[:2]
    return prop, int(sample.split("=", 1)[1]), parse_instance(body.replace(" | ", "\n"))


def _sample_instance(config: FuzzConfig, index: int) -> Instance:
    rng = np.random.default_rng([config.seed, index])
    n = int(rng.integers(config.n[0], config.n[1] + 1))
    m = int(rng.integers(config.m[0], config.m[1] + 1))
    beta = int(rng.integers(config.beta[0], config.beta[1] + 1))
    gen = GeneratorConfig(
        n=n, m=m, density=config.density, cmin=config.cmin, cmax=config.cmax,
        dmin=config.dmin, dmax=config.dmax, alpha=config.alpha, beta=beta,
        condition="none" if config.condition == "2b" else config.condition,
        admissible=config.admissible, max_tries=config.max_tries)
    if config.condition != "2b":
        return generate(gen, rng)
    for _ in range(config.max_tries):
        inst = generate(gen, rng)
        if check_thm2b_condition(inst).holds:
            return inst
    raise GenerationFailed(f"thm2b hypothesis not met within {config.max_tries} draws")


def fuzz_properties(config: FuzzConfig) -> FuzzReport:
    """Run every selected property on ``config.samples`` seeded instances.

    Sample ``i`` is drawn from ``default_rng([seed, i])``, so runs are
    reproducible and any single sample can be regenerated on its own.
    """
    report = FuzzReport(config, {p: Tally() for p in config.properties})
    for index in range(config.samples):
        try:
            inst = _sample_instance(config, index)
        except GenerationFailed:
            report.generation_failures += 1
            continue
        for prop in config.properties:
            tally = report.tallies[prop]
            tally.checked += 1
            outcome, detail = _evaluate(prop, inst)
            if outcome == SKIPPED:
                tally.skipped += 1
            elif outcome == HOLDS:
                tally.holds += 1
            else:
                tally.violated += 1
                small = minimize_instance(inst, prop) if config.minimize else inst
                if small is not inst:
                    detail = _evaluate(prop, small)[1]
                report.violations.append(Violation(prop, index, detail, small, inst))
    return report
