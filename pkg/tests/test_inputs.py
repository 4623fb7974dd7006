import pytest

from hypothesis import given

from steiner_ecc import errors, inputs
from steiner_ecc.generators import generate

from .strategies import trees


class ParseEdgeListTest(object):
    def test_simple(self):
        tree = inputs.parse_edge_list("0 1\n1 2\n")
        assert tree.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize(
        "text",
        [
            "0 1\n1 2",
            "0 1\r\n1 2\r\n",
            "# a path\n\n0 1\n   \n1 2\n",
            "  0   1\n1\t2\n",
            b"0 1\n1 2\n",
        ],
    )
    def test_accepted_layouts(self, text):
        assert inputs.parse_edge_list(text).edges == ((0, 1), (1, 2))

    def test_labels_remapped_in_order_of_appearance(self):
        tree = inputs.parse_edge_list("10 20\n20 7\n")
        assert tree.edges == ((0, 1), (1, 2))
        assert tree.labels == (10, 20, 7)
        assert inputs.label_map(tree) == {"10": 0, "20": 1, "7": 2}

    def test_single_vertex(self):
        tree = inputs.parse_edge_list("5\n")
        assert tree.n == 1
        assert tree.label_of(0) == 5

    def test_dense(self):
        tree = inputs.parse_edge_list("2 0\n0 1\n", dense=True)
        assert tree.edges == ((0, 1), (0, 2))
        assert tree.labels is None

    def test_dense_requires_range(self):
        with pytest.raises(errors.ParseError):
            inputs.parse_edge_list("0 5\n", dense=True)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("0 1\n1 x\n", 2),
            ("0 1 2\n", 1),
            ("0 -1\n", 1),
            ("# only\n\n0 1\n\n1 2.5\n", 5),
        ],
    )
    def test_malformed(self, text, line):
        with pytest.raises(errors.ParseError) as excinfo:
            inputs.parse_edge_list(text)
        assert excinfo.value.line == line
        assert excinfo.value.exit_code == 2
        assert "at line {0}".format(line) in str(excinfo.value)

    @pytest.mark.parametrize("text", ["", "\n\n", "# nothing\n"])
    def test_empty(self, text):
        with pytest.raises(errors.ParseError):
            inputs.parse_edge_list(text)

    def test_invalid_utf8(self):
        with pytest.raises(errors.ParseError):
            inputs.parse_edge_list(b"0 1\n\xff\xfe\n")

    @pytest.mark.parametrize(
        "text,error,line",
        [
            ("0 1\n1 2\n2 0\n", errors.CycleDetected, 3),
            ("0 1\n\n1 1\n", errors.SelfLoop, 3),
            ("0 1\n1 0\n", errors.DuplicateEdge, 2),
            ("0 1\n2 3\n", errors.Disconnected, None),
        ],
    )
    def test_not_a_tree(self, text, error, line):
        with pytest.raises(errors.TreeError) as excinfo:
            inputs.parse_edge_list(text)
        assert isinstance(excinfo.value, error)
        assert excinfo.value.line == line

    def test_disconnected(self):
        with pytest.raises(errors.Disconnected):
            inputs.parse_edge_list("0 1\n2\n")

    def test_read(self, edge_file):
        assert inputs.read_edge_list(edge_file("0 1\n0 2\n")).edges == ((0, 1), (0, 2))


class FormatEdgeListTest(object):
    def test_format(self, star5):
        assert inputs.format_edge_list(star5) == "# n=5\n0 1\n0 2\n0 3\n0 4\n"

    def test_without_header(self):
        assert inputs.format_edge_list(generate("path", 3), header=False) == "0 1\n1 2\n"

    def test_single_vertex(self):
        assert inputs.format_edge_list(generate("star", 1)) == "# n=1\n0\n"

    def test_original_labels(self):
        tree = inputs.parse_edge_list("10 20\n20 7\n")
        assert inputs.format_edge_list(tree, header=False) == "10 20\n20 7\n"

    @given(trees())
    def test_dense_round_trip(self, tree):
        assert inputs.parse_edge_list(inputs.format_edge_list(tree), dense=True).edges == tree.edges

    @given(trees())
    def test_round_trip(self, tree):
        assert inputs.parse_edge_list(inputs.format_edge_list(tree)) == tree

    def test_declares_vertices_out_of_order(self):
        tree = generate("random_pruefer", 8, seed=42)
        text = inputs.format_edge_list(tree, header=False)
        assert text.startswith("0\n1\n2\n3\n4\n5\n6\n7\n")
        assert inputs.parse_edge_list(text) == tree

    def test_labeled_round_trip(self):
        tree = inputs.parse_edge_list("7 3\n9 4\n3 9\n")
        again = inputs.parse_edge_list(inputs.format_edge_list(tree))
        assert again == tree
        assert inputs.label_map(again) == inputs.label_map(tree)

