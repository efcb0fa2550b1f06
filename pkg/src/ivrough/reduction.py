"""Attribute reduction driven by the transitive degree or the cluster degree.

A subset B of the attributes A is a reduction when

1. ``|M(R_B) - M(R_A)| <= eps``, and
2. every ``a in B`` is needed: ``|M(R_B) - M(R_{B - {a}})| > eps``.

With no attributes the relation is ``U x U``; its transitive degree is 1 and
its cluster degree is taken to be 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .infosystem import InformationSystem
from .interval import SimilarityFamily
from .measures import CDDenominator, cluster_degree, format_value, transitive_degree
from .relations import RelationSpec, lambda_relation

__all__ = [
    "DEFAULT_EPSILON",
    "MeasureKind",
    "MeasureEvaluator",
    "TraceStep",
    "ReductionResult",
    "sig_inner",
    "sig_outer",
    "is_reduction",
    "greedy_reduce",
    "enumerate_reductions",
    "format_reductions",
]

DEFAULT_EPSILON = 1e-9

EMPTY_TD = 1.0
EMPTY_CD = 0.0


@dataclass(frozen=True)
class MeasureKind:
    """Which measure drives a reduction: ``TD`` or ``CD`` with its similarity degree.

    A CD kind with ``sim_for_cd=None`` compares against neighbourhood means
    with the relation's own family.
    """

    tag: str
    sim_for_cd: Optional[SimilarityFamily] = None

    def __post_init__(self):
        tag = self.tag.upper()
        if tag not in ("TD", "CD"):
            raise ValueError(f"unknown measure {self.tag!r}; expected TD or CD")
        object.__setattr__(self, "tag", tag)
        if tag == "TD" and self.sim_for_cd is not None:
            raise ValueError("the transitive degree takes no similarity degree")
        if self.sim_for_cd is not None:
            object.__setattr__(self, "sim_for_cd", SimilarityFamily.coerce(self.sim_for_cd))

    @classmethod
    def td(cls) -> "MeasureKind":
        return cls("TD")

    @classmethod
    def cd(cls, sim=None) -> "MeasureKind":
        return cls("CD", sim)

    @classmethod
    def parse(cls, text: str) -> "MeasureKind":
        """``td``, ``cd`` or ``cd:<family>``."""
        head, _, sim = text.partition(":")
        return cls(head, sim or None)

    def __str__(self):
        if self.tag == "CD" and self.sim_for_cd is not None:
            return f"CD({self.sim_for_cd})"
        return self.tag


class MeasureEvaluator:
    """Memoised ``B -> M(R_B)`` for one system, threshold, family and measure."""

    def __init__(self, system: InformationSystem, lam: float, family, kind: MeasureKind,
                 denominator="neighborhood"):
        self.system = system
        self.lam = float(lam)
        self.family = SimilarityFamily.coerce(family)
        self.kind = kind
        self.denominator = CDDenominator.coerce(denominator)
        self._cache: dict[tuple, float] = {}

    def canonical(self, attrs: Iterable[str]) -> tuple[str, ...]:
        return self.system.canonical_attributes(attrs)

    def __call__(self, attrs: Iterable[str]) -> float:
        key = self.canonical(attrs)
        if key not in self._cache:
            self._cache[key] = self._evaluate(key)
        return self._cache[key]

    def _evaluate(self, attrs: tuple[str, ...]) -> float:
        if self.kind.tag == "TD":
            if not attrs:
                return EMPTY_TD
            spec = RelationSpec(attrs, self.lam, self.family)
            return transitive_degree(lambda_relation(self.system, spec)).aggregate
        if not attrs:
            return EMPTY_CD
        spec = RelationSpec(attrs, self.lam, self.family)
        return cluster_degree(self.system, spec, self.kind.sim_for_cd, self.denominator).aggregate

    def inner(self, attrs: Iterable[str], attr: str) -> float:
        attrs = self.canonical(attrs)
        if attr not in attrs:
            raise ValueError(f"attribute {attr!r} is not in {list(attrs)}")
        return abs(self(attrs) - self(a for a in attrs if a != attr))

    def outer(self, attrs: Iterable[str], attr: str) -> float:
        attrs = self.canonical(attrs)
        self.system.attribute_index(attr)
        if attr in attrs:
            raise ValueError(f"attribute {attr!r} is already in {list(attrs)}")
        return abs(self(attrs + (attr,)) - self(attrs))


def sig_inner(system, attrs, attr, lam, family, kind: MeasureKind, denominator="neighborhood") -> float:
    """``|M(R_B) - M(R_{B - {attr}})|`` for ``attr`` in ``attrs``."""
    return MeasureEvaluator(system, lam, family, kind, denominator).inner(attrs, attr)


def sig_outer(system, attrs, attr, lam, family, kind: MeasureKind, denominator="neighborhood") -> float:
    """``|M(R_{B + {attr}}) - M(R_B)|`` for ``attr`` outside ``attrs``."""
    return MeasureEvaluator(system, lam, family, kind, denominator).outer(attrs, attr)


@dataclass(frozen=True)
class TraceStep:
    action: str  # "add" or "remove"
    attribute: str
    significance: float


@dataclass
class ReductionResult:
    attributes: tuple
    measure_on_b: float
    measure_on_a: float
    inner_significances: dict
    epsilon: float
    kind: MeasureKind
    trace: list = field(default_factory=list)

    @property
    def preserves_measure(self) -> bool:
        return abs(self.measure_on_b - self.measure_on_a) <= self.epsilon

    @property
    def is_minimal(self) -> bool:
        return all(v > self.epsilon for v in self.inner_significances.values())

    def to_text(self) -> str:
        lines = [
            f"reduction: {{{', '.join(self.attributes)}}}",
            f"measure: {self.kind}",
            f"measure_on_B: {format_value(self.measure_on_b)}",
            f"measure_on_A: {format_value(self.measure_on_a)}",
            f"epsilon: {self.epsilon:g}",
            "inner_significance:",
        ]
        lines += [f"  {a}  {format_value(v)}" for a, v in self.inner_significances.items()]
        if self.trace:
            lines.append("trace:")
            lines += [f"  {s.action} {s.attribute}  {format_value(s.significance)}" for s in self.trace]
        return "\n".join(lines) + "\n"


def _check(evaluator: MeasureEvaluator, attrs: tuple, full: float, eps: float) -> bool:
    value = evaluator(attrs)
    if abs(value - full) > eps:
        return False
    return all(abs(value - evaluator(b for b in attrs if b != a)) > eps for a in attrs)


def is_reduction(system: InformationSystem, attrs: Iterable[str], lam: float, family,
                 kind: MeasureKind, epsilon: float = DEFAULT_EPSILON,
                 denominator="neighborhood") -> bool:
    evaluator = MeasureEvaluator(system, lam, family, kind, denominator)
    attrs = evaluator.canonical(attrs)
    return _check(evaluator, attrs, evaluator(system.attributes), epsilon)


def greedy_reduce(system: InformationSystem, lam: float, family, kind: MeasureKind,
                  epsilon: float = DEFAULT_EPSILON, denominator="neighborhood") -> ReductionResult:
    """Forward selection by outer significance, then backward elimination.

    Forward: starting from the empty set, add the attribute with the largest
    outer significance (earliest attribute among those within ``epsilon`` of
    the maximum) until the measure matches the full set's. Backward: sweep the
    selected attributes in canonical order, dropping any whose inner
    significance is at most ``epsilon`` as long as the measure still matches;
    sweeps repeat until one removes nothing. The result is never empty.
    """
    ev = MeasureEvaluator(system, lam, family, kind, denominator)
    full = ev(system.attributes)
    chosen: list[str] = []
    trace: list[TraceStep] = []

    while True:
        current = ev.canonical(chosen)
        remaining = [a for a in system.attributes if a not in current]
        if not remaining:
            break
        scores = [(ev.outer(current, a), a) for a in remaining]
        best = max(s for s, _ in scores)
        pick_score, pick = next((s, a) for s, a in scores if s >= best - epsilon)
        chosen.append(pick)
        trace.append(TraceStep("add", pick, pick_score))
        if abs(ev(chosen) - full) <= epsilon:
            break

    selected = list(ev.canonical(chosen))
    changed = True
    while changed and len(selected) > 1:
        changed = False
        for attr in list(selected):
            if len(selected) == 1:
                break
            rest = [a for a in selected if a != attr]
            significance = ev.inner(selected, attr)
            if significance <= epsilon and abs(ev(rest) - full) <= epsilon:
                selected = rest
                trace.append(TraceStep("remove", attr, significance))
                changed = True

    attrs = tuple(selected)
    inner = {a: ev.inner(attrs, a) for a in attrs}
    return ReductionResult(attrs, ev(attrs), full, inner, epsilon, kind, trace)


def enumerate_reductions(system: InformationSystem, lam: float, family, kind: MeasureKind,
                         max_attrs: int = 20, epsilon: float = DEFAULT_EPSILON,
                         denominator="neighborhood") -> list[tuple[str, ...]]:
    """Every nonempty attribute subset meeting both reduction conditions.

    Subsets come back ordered by size, then by canonical attribute order.
    """
    m = system.n_attributes
    if m > max_attrs:
        raise ValueError(f"{m} attributes exceed the enumeration limit of {max_attrs}")
    ev = MeasureEvaluator(system, lam, family, kind, denominator)
    full = ev(system.attributes)
    found = []
    for size in range(1, m + 1):
        for attrs in itertools.combinations(system.attributes, size):
            if _check(ev, attrs, full, epsilon):
                found.append(attrs)
    return found


def format_reductions(reductions: list, kind: MeasureKind, measure_on_a: float, epsilon: float) -> str:
    lines = [f"measure: {kind}", f"measure_on_A: {format_value(measure_on_a)}",
             f"epsilon: {epsilon:g}", f"reductions: {len(reductions)}"]
    lines += ["{" + ", ".join(r) + "}" for r in reductions]
    return "\n".join(lines) + "\n"
