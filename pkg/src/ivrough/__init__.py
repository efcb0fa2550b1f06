"""Comparing similarity relations induced from interval-valued information systems.

Typical use::

    from ivrough import load_fixture, RelationSpec, lambda_relation, transitive_degree

    system = load_fixture("table1")
    rel = lambda_relation(system, RelationSpec(("a1", "a2", "a3"), 0.6, "ss"))
    transitive_degree(rel).aggregate   # 0.68
"""

from .infosystem import (DatasetError, InformationSystem, load_fixture, parse_dataset, read_dataset,
                         serialize_dataset)
from .interval import (Interval, IntervalError, SimilarityFamily, exact_similarity, hull, intersect, mean_interval,
                       parse_interval, sim_sf, sim_ss, sim_st, similarity, similarity_matrix)
from .measures import (ApproximationReport, CDDenominator, MeasureReport, accuracy, approximate,
                       cluster_degree, lower_approx, roughness, transitive_degree, upper_approx)
from .reduction import (DEFAULT_EPSILON, MeasureKind, ReductionResult, enumerate_reductions,
                        greedy_reduce, is_reduction, sig_inner, sig_outer)
from .relations import (BinaryRelation, NotReflexiveError, RelationSpec, check_properties,
                        lambda_relation, neighborhood, transitive_closure)

__version__ = "0.1.0"

__all__ = [
    "ApproximationReport", "BinaryRelation", "CDDenominator", "DEFAULT_EPSILON", "DatasetError",
    "InformationSystem", "Interval", "IntervalError", "MeasureKind", "MeasureReport",
    "NotReflexiveError", "ReductionResult", "RelationSpec", "SimilarityFamily", "accuracy",
    "approximate", "check_properties", "cluster_degree", "enumerate_reductions", "exact_similarity", "greedy_reduce",
    "hull", "intersect", "is_reduction", "lambda_relation", "load_fixture", "lower_approx",
    "mean_interval", "neighborhood", "parse_dataset", "parse_interval", "read_dataset", "roughness",
    "serialize_dataset", "sig_inner", "sig_outer", "sim_sf", "sim_ss", "sim_st", "similarity",
    "similarity_matrix", "transitive_closure", "transitive_degree", "upper_approx",
]
