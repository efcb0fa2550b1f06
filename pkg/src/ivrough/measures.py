"""Rough approximations and the two relation measures.

* transitive degree: mean over objects of ``|R(x)| / |t(R)(x)|``
* cluster degree: mean cohesion of each neighbourhood, i.e. how similar the
  members' values are to the neighbourhood's mean interval, averaged over the
  attributes that induced the relation
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .infosystem import InformationSystem
from .interval import Interval, SimilarityFamily, _KERNELS, mean_interval
from .relations import (BinaryRelation, NotReflexiveError, RelationSpec, lambda_relation,
                        transitive_closure)

__all__ = [
    "ApproximationReport",
    "MeasureReport",
    "CDDenominator",
    "lower_approx",
    "upper_approx",
    "accuracy",
    "roughness",
    "approximate",
    "transitive_degree",
    "cluster_degree",
    "format_value",
]


def format_value(x) -> str:
    """Deterministic 12-significant-digit rendering used by every text output."""
    return format(float(x), ".12g")


# -- approximations ---------------------------------------------------------

def _members(relation: BinaryRelation, subset: Iterable[str]) -> np.ndarray:
    mask = np.zeros(relation.n, dtype=bool)
    for obj in subset:
        mask[relation.index(obj)] = True
    return mask


def _as_set(relation: BinaryRelation, mask: np.ndarray) -> frozenset[str]:
    return frozenset(relation.objects[i] for i in np.flatnonzero(mask))


def lower_approx(relation: BinaryRelation, subset: Iterable[str]) -> frozenset[str]:
    """Objects whose neighbourhood lies inside ``subset``."""
    x = _members(relation, subset)
    return _as_set(relation, ~np.any(relation.matrix & ~x, axis=1))


def upper_approx(relation: BinaryRelation, subset: Iterable[str]) -> frozenset[str]:
    """Objects whose neighbourhood meets ``subset``."""
    x = _members(relation, subset)
    return _as_set(relation, np.any(relation.matrix & x, axis=1))


@dataclass(frozen=True)
class ApproximationReport:
    lower: frozenset
    upper: frozenset
    accuracy: float
    roughness: float


def _require_reflexive(relation: BinaryRelation, what: str):
    if not np.all(np.diagonal(relation.matrix)):
        raise NotReflexiveError(f"{what} is only defined for reflexive relations")


def approximate(relation: BinaryRelation, subset: Iterable[str]) -> ApproximationReport:
    _require_reflexive(relation, "accuracy")
    subset = frozenset(subset)
    if not subset:
        raise ValueError("accuracy needs a nonempty target set")
    lower = lower_approx(relation, subset)
    upper = upper_approx(relation, subset)
    acc = len(lower) / len(upper)
    return ApproximationReport(lower, upper, acc, 1.0 - acc)


def accuracy(relation: BinaryRelation, subset: Iterable[str]) -> float:
    return approximate(relation, subset).accuracy


def roughness(relation: BinaryRelation, subset: Iterable[str]) -> float:
    return approximate(relation, subset).roughness


# -- measure reports --------------------------------------------------------

@dataclass
class MeasureReport:
    """Per-object values of a measure and their mean.

    For cluster degrees ``components`` holds the per-(object, attribute) terms
    and ``centers`` the neighbourhood mean intervals they were measured from.
    """

    kind: str
    per_object: dict
    aggregate: float
    components: dict = field(default_factory=dict)
    centers: dict = field(default_factory=dict)
    exact: Optional[Fraction] = None

    def to_text(self) -> str:
        lines = [f"kind: {self.kind}", f"aggregate: {format_value(self.aggregate)}",
                 f"objects: {len(self.per_object)}", "per_object:"]
        width = max(len(str(o)) for o in self.per_object)
        for obj, value in self.per_object.items():
            lines.append(f"  {str(obj).ljust(width)}  {format_value(value)}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["object,value"]
        rows += [f"{obj},{format_value(v)}" for obj, v in self.per_object.items()]
        rows.append(f"aggregate,{format_value(self.aggregate)}")
        return "\n".join(rows) + "\n"


def transitive_degree(relation: BinaryRelation, exact: bool = False) -> MeasureReport:
    """Transitive degree of a reflexive relation.

    Counts stay integral until the final division; the aggregate is the
    correctly rounded mean of the exact ratios, so a transitive relation
    scores exactly 1. With ``exact=True`` the per-object values are
    ``Fraction`` instances as well.
    """
    _require_reflexive(relation, "the transitive degree")
    closure = transitive_closure(relation)
    sizes = relation.matrix.sum(axis=1)
    closure_sizes = closure.matrix.sum(axis=1)
    ratios = [Fraction(int(a), int(b)) for a, b in zip(sizes, closure_sizes)]
    total = sum(ratios, Fraction(0)) / len(ratios)
    if exact:
        per_object = dict(zip(relation.objects, ratios))
    else:
        per_object = {o: int(a) / int(b) for o, a, b in zip(relation.objects, sizes, closure_sizes)}
    return MeasureReport("transitive_degree", per_object, float(total), exact=total)


class CDDenominator(str, enum.Enum):
    """Which neighbourhood size divides each per-attribute cluster term.

    ``NEIGHBORHOOD`` divides by ``|R_B(x)|``, the size of the set being
    summed over (the default). ``ATTRIBUTE`` divides by ``|R_a(x)|``, the
    neighbourhood induced by the single attribute.
    """

    NEIGHBORHOOD = "neighborhood"
    ATTRIBUTE = "attribute"

    @classmethod
    def coerce(cls, value) -> "CDDenominator":
        if isinstance(value, cls):
            return value
        aliases = {"example3": cls.NEIGHBORHOOD, "definition5": cls.ATTRIBUTE}
        key = str(value).lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


def _neighborhood_mean(system: InformationSystem, attr_index: int, members: np.ndarray) -> Interval:
    cache = system.__dict__.setdefault("_mean_cache", {})
    key = (attr_index, members.tobytes())
    if key not in cache:
        cache[key] = mean_interval(system.cells[i][attr_index] for i in members)
    return cache[key]


def cluster_degree(system: InformationSystem, spec: RelationSpec, sim_for_cd=None,
                   denominator="neighborhood") -> MeasureReport:
    """Cluster degree of the lambda-similarity relation named by ``spec``.

    ``sim_for_cd`` picks the degree that compares members with the
    neighbourhood mean; it defaults to the relation's own family.
    """
    attrs = system.canonical_attributes(spec.attributes)
    if not attrs:
        raise ValueError("cluster degree is undefined for an empty attribute set")
    sim = SimilarityFamily.coerce(sim_for_cd if sim_for_cd is not None else spec.family)
    kernel = _KERNELS[sim]
    mode = CDDenominator.coerce(denominator)
    relation = lambda_relation(system, spec)
    single = {}
    if mode is CDDenominator.ATTRIBUTE:
        single = {a: lambda_relation(system, spec.with_attributes([a])).matrix.sum(axis=1) for a in attrs}

    per_object, components, centers = {}, {}, {}
    for i, obj in enumerate(system.objects):
        members = np.flatnonzero(relation.matrix[i])
        terms = []
        for attr in attrs:
            j = system.attribute_index(attr)
            center = _neighborhood_mean(system, j, members)
            scores = kernel(system.lo[members, j], system.hi[members, j], center.lo, center.hi)
            size = len(members) if mode is CDDenominator.NEIGHBORHOOD else int(single[attr][i])
            term = math.fsum(scores) / size
            components[(obj, attr)] = term
            centers[(obj, attr)] = center
            terms.append(term)
        per_object[obj] = math.fsum(terms) / len(terms)
    aggregate = math.fsum(per_object.values()) / len(per_object)
    return MeasureReport("cluster_degree", per_object, aggregate, components, centers)
