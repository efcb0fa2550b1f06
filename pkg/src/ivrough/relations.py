"""Binary relations over a finite universe and the lambda-similarity relations.

A relation is stored as an n x n boolean adjacency matrix whose rows follow
the owning system's object order: ``matrix[i, j]`` is True iff
``(objects[i], objects[j])`` is in the relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .infosystem import InformationSystem
from .interval import SimilarityFamily, exact_similarity, similarity_matrix

__all__ = [
    "BinaryRelation",
    "RelationSpec",
    "RelationProperties",
    "NotReflexiveError",
    "lambda_relation",
    "attribute_similarity",
    "attribute_threshold",
    "neighborhood",
    "check_properties",
    "find_intransitive_triple",
    "transitive_closure",
]


class NotReflexiveError(ValueError):
    """An operation that needs a reflexive relation received one that is not."""


class BinaryRelation:
    """Immutable boolean adjacency matrix over an ordered universe."""

    __slots__ = ("objects", "matrix", "_index")

    def __init__(self, matrix, objects: Sequence[str]):
        m = np.array(matrix, dtype=bool)
        objects = tuple(objects)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"relation matrix must be square, got shape {m.shape}")
        if m.shape[0] != len(objects):
            raise ValueError(f"{len(objects)} object ids for a {m.shape[0]} x {m.shape[0]} matrix")
        m.setflags(write=False)
        self.matrix = m
        self.objects = objects
        self._index = {o: i for i, o in enumerate(objects)}

    @classmethod
    def from_pairs(cls, objects: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "BinaryRelation":
        objects = tuple(objects)
        index = {o: i for i, o in enumerate(objects)}
        m = np.zeros((len(objects), len(objects)), dtype=bool)
        for x, y in pairs:
            m[index[x], index[y]] = True
        return cls(m, objects)

    @classmethod
    def identity(cls, objects: Sequence[str]) -> "BinaryRelation":
        return cls(np.eye(len(objects), dtype=bool), objects)

    @classmethod
    def complete(cls, objects: Sequence[str]) -> "BinaryRelation":
        return cls(np.ones((len(objects), len(objects)), dtype=bool), objects)

    @property
    def n(self) -> int:
        return len(self.objects)

    def index(self, obj: str) -> int:
        try:
            return self._index[obj]
        except KeyError:
            raise KeyError(f"unknown object {obj!r}") from None

    def neighborhood(self, obj: str) -> frozenset[str]:
        row = self.matrix[self.index(obj)]
        return frozenset(self.objects[j] for j in np.flatnonzero(row))

    def neighborhoods(self) -> dict[str, frozenset[str]]:
        return {o: self.neighborhood(o) for o in self.objects}

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.objects[i], self.objects[j]) for i, j in np.argwhere(self.matrix)]

    def __contains__(self, pair) -> bool:
        x, y = pair
        return bool(self.matrix[self.index(x), self.index(y)])

    def issubset(self, other: "BinaryRelation") -> bool:
        self._check_same_universe(other)
        return not np.any(self.matrix & ~other.matrix)

    __le__ = issubset

    def __or__(self, other: "BinaryRelation") -> "BinaryRelation":
        self._check_same_universe(other)
        return BinaryRelation(self.matrix | other.matrix, self.objects)

    def __eq__(self, other):
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return self.objects == other.objects and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.objects, self.matrix.tobytes()))

    def __repr__(self):
        return f"BinaryRelation(n={self.n}, pairs={int(self.matrix.sum())})"

    def _check_same_universe(self, other):
        if self.objects != other.objects:
            raise ValueError("relations are defined over different universes")

    def to_matrix_text(self) -> str:
        lines = [" ".join(self.objects)]
        lines += [" ".join("1" if b else "0" for b in row) for row in self.matrix]
        return "\n".join(lines) + "\n"

    def to_pairs_text(self) -> str:
        return "".join(f"{x},{y}\n" for x, y in self.pairs())


@dataclass(frozen=True)
class RelationSpec:
    """Names a lambda-similarity relation: attribute subset, threshold, family."""

    attributes: tuple[str, ...]
    lam: float
    family: SimilarityFamily = field(default=SimilarityFamily.SF)

    def __post_init__(self):
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "family", SimilarityFamily.coerce(self.family))
        lam = float(self.lam)
        if not 0.0 <= lam <= 1.0:
            raise ValueError(f"lambda must lie in [0, 1], got {lam}")
        object.__setattr__(self, "lam", lam)

    def with_attributes(self, attributes: Iterable[str]) -> "RelationSpec":
        return RelationSpec(tuple(attributes), self.lam, self.family)


def attribute_similarity(system: InformationSystem, attr: str, family) -> np.ndarray:
    """Cached, read-only n x n similarity matrix of one attribute column."""
    family = SimilarityFamily.coerce(family)
    cache = system.__dict__.setdefault("_similarity_cache", {})
    key = (attr, family)
    if key not in cache:
        j = system.attribute_index(attr)
        sim = similarity_matrix(system.lo[:, j], system.hi[:, j], family)
        sim.setflags(write=False)
        cache[key] = sim
    return cache[key]


# degrees this close to the threshold are re-decided in exact arithmetic
TIE_BAND = 1e-9


def attribute_threshold(system: InformationSystem, attr: str, family, lam: float) -> np.ndarray:
    """Boolean matrix of ``S(f(x, attr), f(y, attr)) >= lam`` for all pairs.

    Degrees are computed in double precision; pairs within ``TIE_BAND`` of
    ``lam`` are decided exactly over the decimal endpoint values, so a degree
    that equals the threshold in exact arithmetic always passes.
    """
    family = SimilarityFamily.coerce(family)
    cache = system.__dict__.setdefault("_threshold_cache", {})
    key = (attr, family, lam)
    if key in cache:
        return cache[key]
    sim = attribute_similarity(system, attr, family)
    passed = sim >= lam
    near = np.argwhere(np.abs(sim - lam) <= TIE_BAND)
    if near.size:
        exact_lam = Fraction(repr(float(lam)))
        column = system.column(attr)
        for i, j in near:
            if i <= j:
                ok = exact_similarity(family, column[i], column[j]) >= exact_lam
                passed[i, j] = passed[j, i] = ok
    passed.setflags(write=False)
    cache[key] = passed
    return passed


def lambda_relation(system: InformationSystem, spec: RelationSpec) -> BinaryRelation:
    """``{(x, y) | S(f(x, a), f(y, a)) >= lam for every a in B}``.

    An empty attribute set gives the complete relation.
    """
    n = system.n_objects
    m = np.ones((n, n), dtype=bool)
    for attr in system.canonical_attributes(spec.attributes):
        m &= attribute_threshold(system, attr, spec.family, spec.lam)
    return BinaryRelation(m, system.objects)


def neighborhood(relation: BinaryRelation, obj: str) -> frozenset[str]:
    """Successor neighbourhood ``{y | (obj, y) in R}``."""
    return relation.neighborhood(obj)


class RelationProperties(NamedTuple):
    reflexive: bool
    symmetric: bool
    transitive: bool


def check_properties(relation: BinaryRelation) -> RelationProperties:
    m = relation.matrix
    composed = np.matmul(m, m)
    return RelationProperties(
        reflexive=bool(np.all(np.diagonal(m))),
        symmetric=bool(np.array_equal(m, m.T)),
        transitive=not bool(np.any(composed & ~m)),
    )


def find_intransitive_triple(relation: BinaryRelation) -> Optional[tuple[str, str, str]]:
    """First ``(x, y, z)`` in index order with xRy, yRz but not xRz, or None."""
    m = relation.matrix
    for i in range(relation.n):
        for j in np.flatnonzero(m[i]):
            missing = np.flatnonzero(m[j] & ~m[i])
            if missing.size:
                o = relation.objects
                return o[i], o[j], o[missing[0]]
    return None


def transitive_closure(relation: BinaryRelation) -> BinaryRelation:
    """Smallest transitive relation containing a reflexive ``relation`` (Warshall)."""
    m = relation.matrix
    if not np.all(np.diagonal(m)):
        raise NotReflexiveError("transitive closure via matrix powers requires a reflexive relation")
    closure = m.copy()
    for k in range(relation.n):
        closure |= closure[:, k, None] & closure[None, k, :]
    return BinaryRelation(closure, relation.objects)
