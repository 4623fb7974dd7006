import pytest

from hypothesis import given, settings

from steiner_ecc import errors
from steiner_ecc.generators import generate, random_trees
from steiner_ecc.oracle import (
    SteinerResult,
    check_containment,
    check_ecc_invariance,
    check_leaf_structure,
    check_y_side_witness,
    ecc_k_bruteforce,
    enumerate_kecc_sets,
    estimate_work,
    steiner_distance,
)
from steiner_ecc.tree import VertexSet, build_tree, distances_from

from .strategies import trees


@pytest.fixture
def path4():
    return generate("path", 4)


@pytest.fixture
def bridged():
    # 3 - 0 - 1 - 2 - 4
    return build_tree([(0, 1), (1, 2), (0, 3), (2, 4)])


class SteinerDistanceTest(object):
    def test_two_ends_of_a_path(self, path4):
        value, edges = steiner_distance(path4, [0, 3])
        assert value == 3
        assert edges == {(0, 1), (1, 2), (2, 3)}

    def test_single_vertex(self, spider321):
        assert steiner_distance(spider321, [4]) == (0, frozenset())

    def test_spider(self, spider321):
        value, edges = steiner_distance(spider321, [0, 3, 5])
        assert value == 5
        assert edges == {(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)}

    def test_invalid_vertex(self, path4):
        with pytest.raises(errors.IdOutOfRange):
            steiner_distance(path4, [0, 9])

    @given(trees(min_n=2))
    def test_pairs_match_bfs(self, tree):
        distances = distances_from(tree, 0)
        for u in range(tree.n):
            assert steiner_distance(tree, [0, u])[0] == distances[u]

    @given(trees(min_n=3, max_n=9))
    def test_monotone(self, tree):
        smaller, _ = steiner_distance(tree, [0, 1])
        larger, _ = steiner_distance(tree, [0, 1, tree.n - 1])
        assert smaller <= larger


class BruteforceTest(object):
    def test_k1(self, spider321):
        result = ecc_k_bruteforce(spider321, 2, 1)
        assert result.value == 0
        assert result.witness_set == VertexSet([2])

    def test_internal_path_vertex(self, path4):
        result = ecc_k_bruteforce(path4, 1, 2)
        assert isinstance(result, SteinerResult)
        assert result.value == 2
        assert result.witness_set == VertexSet([1, 3])
        assert result.witness_edges == {(1, 2), (2, 3)}

    def test_star_leaf(self, star5):
        result = ecc_k_bruteforce(star5, 1, 3)
        assert result.value == 3
        assert result.witness_set == VertexSet([1, 2, 3])

    def test_order_forces_whole_tree(self, spider321):
        for v in range(spider321.n):
            assert ecc_k_bruteforce(spider321, v, spider321.n).value == spider321.n - 1

    @pytest.mark.parametrize("k,error", [(0, errors.KTooSmall), (6, errors.KTooLarge)])
    def test_bad_k(self, star5, k, error):
        with pytest.raises(error):
            ecc_k_bruteforce(star5, 0, k)

    def test_as_dict(self, path4):
        assert ecc_k_bruteforce(path4, 0, 2).as_dict() == {
            "value": 3,
            "witness_set": [0, 3],
            "witness_edges": [[0, 1], [1, 2], [2, 3]],
        }

    @given(trees(min_n=2, max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_leaf_restriction_agrees_with_full_search(self, tree):
        leaf_count = len(tree.leaves)
        for k in range(2, leaf_count + 1):
            for v in range(tree.n):
                restricted = ecc_k_bruteforce(tree, v, k, restrict_to_leaves=True)
                full = ecc_k_bruteforce(tree, v, k, restrict_to_leaves=False)
                assert restricted.value == full.value

    def test_nondecreasing_in_k(self, caterpillar):
        for v in range(caterpillar.n):
            values = [ecc_k_bruteforce(caterpillar, v, k).value for k in range(1, caterpillar.n + 1)]
            assert values == sorted(values)


class BudgetTest(object):
    def test_estimate(self, star5):
        # 4 leaves besides a non-leaf query vertex, pairs of them, 5 vertices per scan
        assert estimate_work(star5, 0, 3) == 6 * 5
        assert estimate_work(star5, 0, 3, restrict_to_leaves=False) == 6 * 5
        assert estimate_work(star5, 1, 3) == 3 * 5

    def test_exceeded(self, star5):
        with pytest.raises(errors.BudgetExceeded) as excinfo:
            ecc_k_bruteforce(star5, 0, 3, budget=10)
        assert excinfo.value.exit_code == 4

    def test_within(self, star5):
        assert ecc_k_bruteforce(star5, 0, 3, budget=30).value == 2


class EnumerateTest(object):
    def test_path_end(self, path4):
        assert enumerate_kecc_sets(path4, 0, 2) == [VertexSet([0, 3])]

    def test_star_center(self, star5):
        assert enumerate_kecc_sets(star5, 0, 2) == [
            VertexSet([0, 1]),
            VertexSet([0, 2]),
            VertexSet([0, 3]),
            VertexSet([0, 4]),
        ]

    def test_path_middle(self, path5):
        assert enumerate_kecc_sets(path5, 2, 3) == [VertexSet([0, 2, 4])]


class StructureCheckersTest(object):
    def test_containment(self, path4, star5):
        assert check_containment(path4, 0, 3)
        assert check_containment(star5, 1, 3)

    def test_containment_needs_k2(self, star5):
        with pytest.raises(errors.KTooSmall):
            check_containment(star5, 0, 1)

    def test_containment_random(self):
        tree = next(random_trees(9, 1, seed=42))
        assert all(check_containment(tree, v, 4) for v in range(tree.n))

    def test_invariance(self, spider321, star5):
        assert all(check_ecc_invariance(spider321, v, 1) for v in range(spider321.n))
        assert check_ecc_invariance(star5, 0, 2)

    def test_leaf_structure(self, spider321, caterpillar):
        for tree in (spider321, caterpillar):
            for v in range(tree.n):
                for k in range(1, tree.n + 1):
                    assert check_leaf_structure(tree, v, k)

    def test_y_side_witness(self, bridged):
        assert check_y_side_witness(bridged, [0, 1, 2], 3)

    def test_y_side_witness_needs_k3(self, bridged):
        with pytest.raises(errors.KTooSmall):
            check_y_side_witness(bridged, [0, 1, 2], 2)

    def test_y_side_witness_without_y(self):
        # the whole path: Y is reduced to v
        assert check_y_side_witness(generate("path", 3), [0, 1, 2], 3)
