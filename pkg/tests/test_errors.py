import pytest

from steiner_ecc import errors


class ErrorsTest(object):
    @pytest.mark.parametrize(
        "error,code",
        [
            (errors.UsageError("bad"), 1),
            (errors.ParseError("bad"), 2),
            (errors.CycleDetected("bad"), 2),
            (errors.Disconnected("bad"), 2),
            (errors.SelfLoop("bad"), 2),
            (errors.DuplicateEdge("bad"), 2),
            (errors.IdOutOfRange("bad"), 2),
            (errors.KTooLarge("bad"), 3),
            (errors.KTooSmall("bad"), 3),
            (errors.PathNotInTree("bad"), 3),
            (errors.InvalidPath("bad"), 3),
            (errors.DegeneratePath("bad"), 3),
            (errors.BadParams("bad"), 3),
            (errors.ChainLengthExceeded("bad"), 3),
            (errors.BudgetExceeded(100, 10), 4),
        ],
    )
    def test_exit_codes(self, error, code):
        assert isinstance(error, errors.SteinerError)
        assert error.exit_code == code

    def test_counterexample_code(self):
        assert errors.EXIT_OK == 0
        assert errors.EXIT_COUNTEREXAMPLE == 5

    def test_message(self):
        assert str(errors.KTooLarge("k=8 exceeds n=7")) == "k=8 exceeds n=7"

    def test_parse_error_line(self):
        error = errors.ParseError("Expected two vertex ids", line=4)
        assert error.line == 4
        assert str(error) == "Expected two vertex ids at line 4"

    def test_parse_error_without_line(self):
        error = errors.ParseError("Empty edge list")
        assert error.line is None
        assert str(error) == "Empty edge list"

    def test_tree_error_context(self):
        error = errors.CycleDetected("Edge (2, 0) closes a cycle", edge=(2, 0), index=2)
        assert error.edge == (2, 0)
        assert error.index == 2
        assert error.line is None
        assert error.at_line(3) is error
        assert error.line == 3
        assert str(error) == "Edge (2, 0) closes a cycle at line 3"

    def test_budget(self):
        error = errors.BudgetExceeded(1200, 1000)
        assert error.work == 1200
        assert error.budget == 1000
        assert str(error) == "Oracle work estimate 1200 exceeds budget 1000"

    def test_hierarchy(self):
        assert issubclass(errors.CycleDetected, errors.TreeError)
        assert issubclass(errors.KTooLarge, errors.ValidationError)
        assert not issubclass(errors.BudgetExceeded, errors.ValidationError)
