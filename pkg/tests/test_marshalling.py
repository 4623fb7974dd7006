from collections import OrderedDict
from fractions import Fraction

from steiner_ecc import fields, marshal
from steiner_ecc.models import aecc_model, check_model, ecc_model, transform_model


class MarshallingTest(object):
    def test_marshal(self):
        model = OrderedDict([("foo", fields.Raw)])
        marshal_dict = OrderedDict([("foo", "bar"), ("bat", "baz")])
        output = marshal(marshal_dict, model)
        assert isinstance(output, dict)
        assert not isinstance(output, OrderedDict)
        assert output == {"foo": "bar"}

    def test_marshal_with_skip_none(self):
        model = OrderedDict([("foo", fields.Raw), ("bat", fields.Raw), ("qux", fields.Raw)])
        marshal_dict = OrderedDict([("foo", "bar"), ("bat", None)])
        output = marshal(marshal_dict, model, skip_none=True)
        assert output == {"foo": "bar"}

    def test_marshal_ordered(self):
        model = OrderedDict([("foo", fields.Raw), ("baz", fields.Raw), ("bar", fields.Raw)])
        marshal_dict = {"foo": 1, "bar": 2, "baz": 3}
        output = marshal(marshal_dict, model, ordered=True)
        assert isinstance(output, OrderedDict)
        assert list(output.keys()) == ["foo", "baz", "bar"]

    def test_marshal_list(self):
        model = OrderedDict([("foo", fields.Raw)])
        output = marshal([{"foo": 1, "x": 0}, {"foo": 2}], model)
        assert output == [{"foo": 1}, {"foo": 2}]

    def test_marshal_nested_dict(self):
        model = OrderedDict([("foo", fields.Raw), ("inner", {"bar": fields.Raw})])
        output = marshal({"foo": 1, "bar": 2}, model)
        assert output == {"foo": 1, "inner": {"bar": 2}}


class ReportModelTest(object):
    def test_ecc(self):
        data = {
            "n": 5,
            "k": 3,
            "vertex": 0,
            "ecc": 2,
            "segments": [1, 1],
            "shortcut": False,
            "label_map": {"0": 0},
        }
        output = marshal(data, ecc_model, skip_none=True, ordered=True)
        assert list(output.keys()) == ["n", "k", "vertex", "ecc", "segments", "shortcut", "label_map"]
        assert output["shortcut"] is False

    def test_aecc_splits_the_fraction(self):
        output = marshal({"n": 5, "k": 3, "aecc": Fraction(14, 5)}, aecc_model, skip_none=True)
        assert output == {"n": 5, "k": 3, "aecc_num": 14, "aecc_den": 5}

    def test_transform_counts_steps(self):
        data = {
            "n": 3,
            "goal": None,
            "edges": [(0, 1), (0, 2)],
            "degree_sequence": [2, 1, 1],
            "trace": [
                {
                    "kind": "pi",
                    "path": [0, 1],
                    "moved_from": 1,
                    "moved_to": 0,
                    "moved_neighbors": [2],
                }
            ],
        }
        output = marshal(data, transform_model, skip_none=True)
        assert "goal" not in output
        assert output["steps"] == 1
        assert output["edges"] == [[0, 1], [0, 2]]
        assert output["trace"][0]["moved_neighbors"] == [2]

    def test_check_drops_missing_counterexamples(self):
        data = {
            "trees": 1,
            "counterexamples": 0,
            "properties": [
                {"name": "bounds", "passed": 1, "failed": 0, "skipped": 0, "counterexample": None}
            ],
        }
        output = marshal(data, check_model, skip_none=True)
        assert output["properties"] == [{"name": "bounds", "passed": 1, "failed": 0, "skipped": 0}]
