"""Command-line interface.

Exit status: 0 success, 1 usage or parse error, 2 validation error,
3 reproduction outside tolerance.
"""

from __future__ import annotations

import argparse
import sys

from .infosystem import DatasetError, read_dataset
from .interval import IntervalError, SimilarityFamily, parse_interval, similarity
from .measures import approximate, cluster_degree, format_value, transitive_degree
from .reduction import (DEFAULT_EPSILON, MeasureEvaluator, MeasureKind, enumerate_reductions,
                        format_reductions, greedy_reduce)
from .relations import RelationSpec, check_properties, lambda_relation, transitive_closure
from .reproduce import ReproTarget, run_target, write_outcome

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_DEVIATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_options() -> argparse.ArgumentParser:
    # shared by the top-level parser and every subcommand; SUPPRESS keeps a
    # value given before the subcommand from being reset by the subparser
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS
    p.add_argument("--out", default=d, help="output file (directory for reproduce)")
    p.add_argument("--format", choices=("text", "csv"), default=d, help="report format")
    p.add_argument("--epsilon", type=float, default=d, help="measure-equality tolerance for reductions")
    p.add_argument("--cd-denominator", default=d,
                   choices=("neighborhood", "attribute", "example3", "definition5"),
                   help="cluster-degree denominator mode (default: neighborhood)")
    return p


def _option(args, name, default):
    return getattr(args, name, default)


def _family(text):
    try:
        return SimilarityFamily.coerce(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _measure(text):
    try:
        return MeasureKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _csv_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(prog="ivrough", parents=[common],
                     description="Similarity relations, transitive and cluster degrees, "
                                 "and attribute reduction for interval-valued data.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def dataset_command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("dataset", help="dataset file, or a bundled fixture name (table1, face27)")
        return p

    def relation_options(p, attrs=True):
        if attrs:
            p.add_argument("--attrs", type=_csv_list, default=None,
                           help="comma-separated attribute subset (default: all)")
        p.add_argument("--lambda", dest="lam", type=float, default=0.6, help="threshold in [0, 1]")
        p.add_argument("--family", type=_family, default=SimilarityFamily.SF, help="sf, ss or st")

    p = sub.add_parser("sim", parents=[common], help="similarity degree of two intervals")
    p.add_argument("--family", type=_family, default=SimilarityFamily.SF)
    p.add_argument("u", help="interval lo:hi")
    p.add_argument("v", help="interval lo:hi")

    p = dataset_command("relation", "build a lambda-similarity relation")
    relation_options(p)
    p.add_argument("--closure", action="store_true", help="emit the transitive closure instead")
    p.add_argument("--as", dest="shape", choices=("matrix", "pairs"), default="matrix")
    p.add_argument("--properties", action="store_true", help="also report reflexive/symmetric/transitive")

    p = dataset_command("measure", "transitive degree or cluster degree of a relation")
    relation_options(p)
    p.add_argument("--measure", type=_measure, default=MeasureKind.td(), help="td, cd or cd:<family>")

    p = dataset_command("approx", "lower/upper approximation and accuracy of an object set")
    relation_options(p)
    p.add_argument("--set", dest="target", type=_csv_list, required=True, help="comma-separated objects")

    p = dataset_command("reduce", "attribute reduction")
    relation_options(p, attrs=False)
    p.add_argument("--measure", type=_measure, default=MeasureKind.td(), help="td, cd or cd:<family>")
    p.add_argument("--method", choices=("greedy", "all"), default="greedy")
    p.add_argument("--max-attrs", type=int, default=20)

    p = sub.add_parser("reproduce", parents=[common], help="recompute a published example, table or figure")
    p.add_argument("target", choices=[t.value for t in ReproTarget] + ["all"])

    dataset_command("validate", "check a dataset file")
    return parser


def _emit(args, text: str):
    out = _option(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spec(system, args) -> RelationSpec:
    attrs = args.attrs if args.attrs is not None else system.attributes
    return RelationSpec(tuple(system.canonical_attributes(attrs)), args.lam, args.family)


def cmd_sim(args) -> int:
    try:
        u, v = parse_interval(args.u), parse_interval(args.v)
    except IntervalError as exc:
        raise UsageError(str(exc))
    print(format_value(similarity(args.family, u, v)))
    return EXIT_OK


def cmd_relation(args) -> int:
    system = read_dataset(args.dataset)
    relation = lambda_relation(system, _spec(system, args))
    if args.closure:
        relation = transitive_closure(relation)
    text = relation.to_matrix_text() if args.shape == "matrix" else relation.to_pairs_text()
    if args.properties:
        props = check_properties(relation)
        text += "".join(f"# {k}: {str(v).lower()}\n" for k, v in props._asdict().items())
    _emit(args, text)
    return EXIT_OK


def cmd_measure(args) -> int:
    system = read_dataset(args.dataset)
    spec = _spec(system, args)
    if args.measure.tag == "TD":
        report = transitive_degree(lambda_relation(system, spec))
    else:
        report = cluster_degree(system, spec, args.measure.sim_for_cd,
                                _option(args, "cd_denominator", "neighborhood"))
    fmt = _option(args, "format", "text")
    _emit(args, report.to_csv() if fmt == "csv" else report.to_text())
    return EXIT_OK


def cmd_approx(args) -> int:
    system = read_dataset(args.dataset)
    relation = lambda_relation(system, _spec(system, args))
    report = approximate(relation, args.target)
    order = {o: i for i, o in enumerate(system.objects)}

    def fmt(s):
        return "{" + ", ".join(sorted(s, key=order.__getitem__)) + "}"

    _emit(args, f"lower: {fmt(report.lower)}\nupper: {fmt(report.upper)}\n"
                f"accuracy: {format_value(report.accuracy)}\nroughness: {format_value(report.roughness)}\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    system = read_dataset(args.dataset)
    eps = _option(args, "epsilon", DEFAULT_EPSILON)
    denominator = _option(args, "cd_denominator", "neighborhood")
    if args.method == "greedy":
        result = greedy_reduce(system, args.lam, args.family, args.measure, eps, denominator)
        _emit(args, result.to_text())
        return EXIT_OK
    found = enumerate_reductions(system, args.lam, args.family, args.measure, args.max_attrs, eps, denominator)
    full = MeasureEvaluator(system, args.lam, args.family, args.measure, denominator)(system.attributes)
    _emit(args, format_reductions(found, args.measure, full, eps))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    out_dir = _option(args, "out", "repro-out")
    denominator = _option(args, "cd_denominator", "neighborhood")
    targets = list(ReproTarget) if args.target == "all" else [ReproTarget(args.target)]
    status = EXIT_OK
    for target in targets:
        outcome = run_target(target, denominator)
        write_outcome(outcome, out_dir)
        print(outcome.summary())
        if not outcome.passed:
            status = EXIT_DEVIATION
    return status


def cmd_validate(args) -> int:
    system = read_dataset(args.dataset)
    print(f"valid: {system.n_objects} objects x {system.n_attributes} attributes")
    return EXIT_OK


COMMANDS = {
    "sim": cmd_sim,
    "relation": cmd_relation,
    "measure": cmd_measure,
    "approx": cmd_approx,
    "reduce": cmd_reduce,
    "reproduce": cmd_reproduce,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ivrough: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DatasetError, IntervalError, KeyError, ValueError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"ivrough: error: {message}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
