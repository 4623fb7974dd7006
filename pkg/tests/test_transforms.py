import networkx as nx
import pytest

from hypothesis import given, settings

from steiner_ecc import errors
from steiner_ecc.generators import generate
from steiner_ecc.kecc import avg_steiner_k_ecc
from steiner_ecc.transforms import (
    PATH,
    PI,
    PI_INVERSE,
    STAR,
    TransformStep,
    collapse_to_star,
    find_transform_path,
    format_trace,
    parse_trace,
    pi_inverse,
    pi_transform,
    replay,
    split_sides,
    star_sites,
    stretch_to_path,
    wiener_index,
)
from steiner_ecc.tree import PathDescriptor, build_tree

from .strategies import to_networkx, trees


@pytest.fixture
def bridged():
    # 3 - 0 - 1 - 2 - 4
    return build_tree([(0, 1), (1, 2), (0, 3), (2, 4)])


@pytest.fixture
def spider211():
    return generate("spider", 5, {"legs": [2, 1, 1]})


class SitesTest(object):
    def test_extremal_trees_have_no_site(self, star5):
        assert find_transform_path(star5, STAR) is None
        assert find_transform_path(generate("path", 6), PATH) is None

    def test_star_site(self, spider211):
        assert find_transform_path(spider211, STAR) == [0, 1]

    def test_path_site(self, spider211):
        assert find_transform_path(spider211, PATH) == [2, 1, 0]

    def test_unknown_goal(self, star5):
        with pytest.raises(errors.BadParams):
            find_transform_path(star5, "cycle")

    def test_all_star_sites(self, path5):
        assert [site.vertices for site in star_sites(path5)] == [
            [1, 2],
            [1, 2, 3],
            [2, 3],
        ]

    def test_split_sides(self, bridged):
        assert split_sides(bridged, [0, 1, 2]) == ({0, 3}, {2, 4})


class PiTransformTest(object):
    def test_moves_pendant(self, bridged):
        tree, step = pi_transform(bridged, [0, 1, 2])
        assert tree.edges == ((0, 1), (1, 2), (2, 3), (2, 4))
        assert step.kind == PI
        assert step.path == [0, 1, 2]
        assert step.moved_from == 0
        assert step.moved_to == 2
        assert step.moved_neighbors == [3]
        assert step.to_line() == "pi path=0,1,2 from=0 to=2 moved=3"

    def test_reorients(self, spider321):
        tree, step = pi_transform(spider321, [0, 4])
        assert step.path == [4, 0]
        assert step.moved_neighbors == [5]
        assert tree.degree(0) == 4

    def test_keeps_order_and_labels(self):
        tree = build_tree([(0, 1), (1, 2), (0, 3), (2, 4)], labels=[7, 8, 9, 10, 11])
        transformed, _ = pi_transform(tree, [0, 1, 2])
        assert transformed.n == tree.n
        assert transformed.labels == tree.labels

    def test_degenerate(self, bridged):
        with pytest.raises(errors.DegeneratePath):
            pi_transform(bridged, [0])

    def test_internal_degree(self, caterpillar):
        with pytest.raises(errors.InvalidPath):
            pi_transform(caterpillar, [0, 1, 2])

    def test_not_in_tree(self, caterpillar):
        with pytest.raises(errors.PathNotInTree):
            pi_transform(caterpillar, [0, 2])

    def test_input_untouched(self, bridged):
        edges = bridged.edges
        pi_transform(bridged, [0, 1, 2])
        assert bridged.edges == edges


class PiInverseTest(object):
    def test_exact_inverse(self, bridged):
        tree, step = pi_transform(bridged, [0, 1, 2])
        restored, back = pi_inverse(tree, step.path, moved=step.moved_neighbors)
        assert restored == bridged
        assert back.kind == PI_INVERSE
        assert back.moved_from == 2
        assert back.moved_to == 0

    def test_default_keeps_deepest_branch(self, bridged):
        tree, _ = pi_transform(bridged, [0, 1, 2])
        restored, step = pi_inverse(tree, [0, 1, 2])
        assert step.moved_neighbors == [4]
        assert restored.edges == ((0, 1), (0, 4), (1, 2), (2, 3))
        assert nx.is_isomorphic(to_networkx(restored), to_networkx(bridged))

    def test_reversed_site(self, bridged):
        tree, _ = pi_transform(bridged, [0, 1, 2])
        _, step = pi_inverse(tree, [2, 1, 0])
        assert step.path == [0, 1, 2]

    def test_needs_pendant_end(self, spider321):
        with pytest.raises(errors.InvalidPath):
            pi_inverse(spider321, [0, 1])

    def test_moved_must_be_neighbor(self, bridged):
        tree, _ = pi_transform(bridged, [0, 1, 2])
        with pytest.raises(errors.InvalidPath):
            pi_inverse(tree, [0, 1, 2], moved=[1])

    @given(trees(min_n=3, max_n=12))
    @settings(deadline=None)
    def test_round_trip(self, tree):
        for site in star_sites(tree):
            transformed, step = pi_transform(tree, site)
            restored, _ = pi_inverse(transformed, step.path, moved=step.moved_neighbors)
            assert restored == tree


class ChainTest(object):
    def test_path_to_star(self, path5):
        star, steps = collapse_to_star(path5)
        assert len(steps) >= 1
        assert star.degree_sequence() == [4, 1, 1, 1, 1]

    def test_star_is_fixed(self, star5):
        star, steps = collapse_to_star(star5)
        assert steps == []
        assert star == star5

    def test_star_to_path(self, star5):
        path, steps = stretch_to_path(star5)
        assert path.degree_sequence() == [2, 2, 2, 1, 1]
        assert [step.kind for step in steps] == [PI_INVERSE, PI_INVERSE]

    def test_cap(self, path5):
        with pytest.raises(errors.ChainLengthExceeded):
            collapse_to_star(path5, cap=1)

    @given(trees(min_n=1, max_n=12))
    @settings(deadline=None)
    def test_reaches_extremal_trees(self, tree):
        n = tree.n
        star, steps = collapse_to_star(tree)
        assert star.is_star()
        assert len(steps) <= n * n
        path, steps = stretch_to_path(tree)
        assert path.is_path()
        assert len(steps) <= n * n

    @given(trees(min_n=6, max_n=10))
    @settings(max_examples=30, deadline=None)
    def test_average_does_not_increase(self, tree):
        for site in star_sites(tree):
            transformed, _ = pi_transform(tree, site)
            for k in (3, 4, 5):
                assert avg_steiner_k_ecc(transformed, k) <= avg_steiner_k_ecc(tree, k)


class WienerIndexTest(object):
    @pytest.mark.parametrize(
        "kind,n,expected", [("path", 4, 10), ("path", 5, 20), ("star", 5, 16), ("path", 1, 0)]
    )
    def test_known_values(self, kind, n, expected):
        assert wiener_index(generate(kind, n)) == expected

    @given(trees(min_n=1, max_n=30))
    def test_matches_networkx(self, tree):
        assert wiener_index(tree) == int(nx.wiener_index(to_networkx(tree)))


class TraceTest(object):
    def test_round_trip(self, caterpillar):
        final, steps = collapse_to_star(caterpillar)
        text = format_trace(steps)
        assert parse_trace(text) == steps
        assert replay(caterpillar, parse_trace(text)) == final

    def test_inverse_round_trip(self, spider321):
        final, steps = stretch_to_path(spider321)
        assert replay(spider321, parse_trace(format_trace(steps))) == final

    def test_comments_and_blank_lines(self):
        steps = parse_trace("# chain\n\npi path=0,1,2 from=0 to=2 moved=3\n")
        assert steps == [TransformStep(PI, PathDescriptor([0, 1, 2]), 0, 2, [3])]

    def test_empty_moved(self):
        step = TransformStep.from_line("pi-1 path=0,1 from=1 to=0 moved=")
        assert step.moved_neighbors == []

    @pytest.mark.parametrize(
        "line",
        [
            "pi path=0,1 from=0",
            "rotate path=0,1 from=0 to=1 moved=",
            "pi path=0,0 from=0 to=1 moved=",
            "pi path=0,1 from=0 to=x moved=",
            "pi path=0,1 from=0,1 to=1 moved=",
        ],
    )
    def test_malformed(self, line):
        with pytest.raises(errors.ParseError) as excinfo:
            parse_trace("# header\n" + line)
        assert excinfo.value.line == 2
