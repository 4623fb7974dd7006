"""
Output models of the command line reports.

Each model maps an output key to the field rendering it; reports are
marshalled with ``skip_none=True`` so absent optional keys disappear.
"""
from collections import OrderedDict

from . import fields

__all__ = (
    "ecc_model",
    "aecc_model",
    "oracle_model",
    "step_model",
    "tree_model",
    "transform_model",
    "property_model",
    "check_model",
    "bench_size_model",
    "bench_model",
    "REPORT_MODELS",
)

label_map = fields.Raw()

ecc_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("k", fields.Integer),
        ("vertex", fields.Raw),
        ("ecc", fields.Integer),
        ("segments", fields.List(fields.Integer)),
        ("shortcut", fields.Boolean),
        ("label_map", label_map),
    ]
)

aecc_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("k", fields.Integer),
        ("aecc_num", fields.Fraction(part="numerator", attribute="aecc")),
        ("aecc_den", fields.Fraction(part="denominator", attribute="aecc")),
        ("label_map", label_map),
    ]
)

oracle_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("k", fields.Integer),
        ("vertex", fields.Raw),
        ("ecc", fields.Integer(attribute="value")),
        ("witness_set", fields.List(fields.Raw)),
        ("witness_edges", fields.List(fields.Edge)),
        ("label_map", label_map),
    ]
)

step_model = OrderedDict(
    [
        ("kind", fields.String),
        ("path", fields.List(fields.Integer)),
        ("moved_from", fields.Integer),
        ("moved_to", fields.Integer),
        ("moved_neighbors", fields.List(fields.Integer)),
    ]
)

tree_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("edges", fields.List(fields.Edge)),
        ("degree_sequence", fields.List(fields.Integer)),
        ("label_map", label_map),
    ]
)

transform_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("goal", fields.String),
        ("steps", fields.Integer(attribute=lambda report: len(report["trace"]))),
        ("edges", fields.List(fields.Edge)),
        ("degree_sequence", fields.List(fields.Integer)),
        ("trace", fields.List(fields.Nested(step_model))),
        ("label_map", label_map),
    ]
)

property_model = OrderedDict(
    [
        ("name", fields.String),
        ("passed", fields.Integer),
        ("failed", fields.Integer),
        ("skipped", fields.Integer),
        ("counterexample", fields.String),
    ]
)

check_model = OrderedDict(
    [
        ("trees", fields.Integer),
        ("counterexamples", fields.Integer),
        ("properties", fields.List(fields.Nested(property_model, skip_none=True))),
    ]
)

bench_size_model = OrderedDict(
    [
        ("n", fields.Integer),
        ("median_ns", fields.Integer),
        ("mean_ns", fields.Integer),
    ]
)

bench_model = OrderedDict(
    [
        ("family", fields.String),
        ("k", fields.Integer),
        ("repeat", fields.Integer),
        ("sizes", fields.List(fields.Nested(bench_size_model))),
        ("slope", fields.Raw),
        ("k_doubling_ratio", fields.Raw),
    ]
)

#: Models of the reports validated against the report JSON schema
REPORT_MODELS = {"ecc": ecc_model, "aecc": aecc_model, "oracle": oracle_model}
