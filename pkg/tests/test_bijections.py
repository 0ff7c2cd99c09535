from math import comb

import pytest

from pipedreams.bijections import (
    BinaryTree,
    Bracketing,
    DyckPath,
    MalformedBracketingError,
    MalformedPathError,
    PartitionBoundsError,
    bracketing_of,
    dyck_to_partition,
    flip,
    partition_of,
    partition_to_dyck,
    rcgraph_of,
    reverse_bracketing,
    tree_of,
)
from pipedreams.catalan import (
    Partition,
    catalan,
    enumerate_staircase_partitions,
    fits_staircase,
    staircase,
)
from pipedreams.perm import make_perm, zigzag
from pipedreams.rcgraph import NotZigzagError, RcGraph, bottom_rcgraph, enumerate_rcgraphs

# (crosses, partition, bracketing) for the five fillings of 1,4,3,2
FIGURE_BIJECTIONS = [
    (((2, 1), (2, 2), (3, 1)), (), "(1(2(3 4)))"),
    (((1, 3), (2, 1), (3, 1)), (1,), "(1((2 3)4))"),
    (((1, 2), (1, 3), (3, 1)), (2,), "((1(2 3))4)"),
    (((1, 2), (2, 1), (2, 2)), (1, 1), "((1 2)(3 4))"),
    (((1, 2), (1, 3), (2, 2)), (2, 1), "(((1 2)3)4)"),
]


def path_area_above_diagonal(path):
    """Cells strictly above the diagonal and below the path (oracle)."""
    area = 0
    x = y = 0
    for step in path.steps:
        if step == "U":
            y += 1
        else:
            area += y - x - 1
            x += 1
    return area


class TestPartitionOf:
    def test_bottom_is_empty(self):
        for n in range(1, 7):
            assert partition_of(bottom_rcgraph(n)) == Partition()

    @pytest.mark.parametrize("crosses,parts,_", FIGURE_BIJECTIONS)
    def test_figure_values(self, crosses, parts, _):
        assert partition_of(RcGraph.from_crosses(4, crosses)) == Partition(parts)

    def test_lowest_weight_filling_gives_staircase(self):
        d = RcGraph.from_crosses(4, [(1, 2), (1, 3), (2, 2)])
        assert d.weight() == 1
        assert partition_of(d) == staircase(3)

    def test_weight_law(self):
        for n in range(1, 7):
            for d in enumerate_rcgraphs(zigzag(n)):
                assert d.weight() == comb(n + 1, 3) - partition_of(d).size

    def test_rejects_non_zigzag(self):
        d = enumerate_rcgraphs(make_perm([2, 1, 3]))[0]
        with pytest.raises(NotZigzagError):
            partition_of(d)

    def test_bijective_onto_staircase_set(self):
        for n in range(1, 8):
            images = {partition_of(d) for d in enumerate_rcgraphs(zigzag(n))}
            assert len(images) == catalan(n)
            assert images == set(enumerate_staircase_partitions(n))


class TestRcgraphOf:
    def test_empty_gives_bottom(self):
        for n in range(1, 7):
            assert rcgraph_of(Partition(), n) == bottom_rcgraph(n)

    def test_round_trips_n4(self):
        for p in enumerate_staircase_partitions(4):
            assert partition_of(rcgraph_of(p, 4)) == p

    def test_round_trips_both_ways(self):
        for n in range(1, 7):
            for d in enumerate_rcgraphs(zigzag(n)):
                assert rcgraph_of(partition_of(d), n) == d
            for p in enumerate_staircase_partitions(n):
                assert partition_of(rcgraph_of(p, n)) == p

    def test_out_of_bounds(self):
        with pytest.raises(PartitionBoundsError):
            rcgraph_of(Partition((3, 1)), 3)


class TestDyck:
    def test_empty_partition_n2(self):
        assert partition_to_dyck(Partition(), 2).steps == "UURR"

    def test_staircase_is_sawtooth(self):
        for n in range(1, 7):
            assert partition_to_dyck(staircase(n), n).steps == "UR" * n

    def test_round_trips_n5(self):
        paths = set()
        for p in enumerate_staircase_partitions(5):
            path = partition_to_dyck(p, 5)
            paths.add(path.steps)
            assert dyck_to_partition(path) == p
        assert len(paths) == catalan(5)

    def test_area_transport(self):
        for n in range(1, 7):
            for p in enumerate_staircase_partitions(n):
                path = partition_to_dyck(p, n)
                assert path_area_above_diagonal(path) == comb(n, 2) - p.size

    def test_out_of_bounds(self):
        with pytest.raises(PartitionBoundsError):
            partition_to_dyck(Partition((2,)), 2)

    def test_malformed_paths(self):
        with pytest.raises(MalformedPathError):
            DyckPath("RU")
        with pytest.raises(MalformedPathError):
            DyckPath("UUR")
        with pytest.raises(MalformedPathError):
            DyckPath("UX")


class TestBracketing:
    def test_bottom_is_right_comb(self):
        assert str(bracketing_of(bottom_rcgraph(3))) == "(1(2(3 4)))"
        assert str(bracketing_of(bottom_rcgraph(5))) == "(1(2(3(4(5 6)))))"

    def test_n1(self):
        assert str(bracketing_of(bottom_rcgraph(1))) == "(1 2)"

    @pytest.mark.parametrize("crosses,_,text", FIGURE_BIJECTIONS)
    def test_figure_values(self, crosses, _, text):
        assert str(bracketing_of(RcGraph.from_crosses(4, crosses))) == text

    def test_all_distinct_and_well_formed_n5(self):
        seen = set()
        for d in enumerate_rcgraphs(zigzag(5)):
            b = bracketing_of(d)  # construction validates matching + full parse
            assert len(b.pairs) == 5
            seen.add(str(b))
        assert len(seen) == catalan(5)

    def test_malformed_rejected(self):
        with pytest.raises(MalformedBracketingError):
            Bracketing(3, ((1, 1), (2, 3)))  # ((1) (2 3)) is not a binary product
        with pytest.raises(MalformedBracketingError):
            Bracketing(3, ((1, 2),))  # wrong number of pairs
        with pytest.raises(MalformedBracketingError):
            Bracketing(4, ((1, 2), (2, 3), (1, 4)))  # overlapping pairs

    def test_reversal_is_involution(self):
        for n in range(1, 6):
            for d in enumerate_rcgraphs(zigzag(n)):
                b = bracketing_of(d)
                assert reverse_bracketing(reverse_bracketing(b)) == b

    def test_transpose_is_reversal(self):
        for n in range(1, 7):
            for d in enumerate_rcgraphs(zigzag(n)):
                assert str(bracketing_of(d.transpose())) == str(
                    reverse_bracketing(bracketing_of(d))
                )


class TestTrees:
    def test_parse_and_nested_form(self):
        t = tree_of(bracketing_of(bottom_rcgraph(3)))
        assert t.to_nested() == [1, [2, [3, 4]]]
        assert BinaryTree.from_nested([1, [2, [3, 4]]]) == t

    def test_flip_three_leaves(self):
        right = tree_of(Bracketing(3, ((1, 3), (2, 3))))  # (1(2 3))
        left = tree_of(Bracketing(3, ((1, 2), (1, 3))))  # ((1 2)3)
        assert flip(right) == left

    def test_flip_involution(self):
        for n in range(1, 6):
            for d in enumerate_rcgraphs(zigzag(n)):
                t = tree_of(bracketing_of(d))
                assert flip(flip(t)) == t

    def test_flip_matches_reversal(self):
        for n in range(1, 6):
            for d in enumerate_rcgraphs(zigzag(n)):
                b = bracketing_of(d)
                assert flip(tree_of(b)) == tree_of(reverse_bracketing(b))

    def test_leaves_in_order(self):
        for n in range(1, 6):
            for d in enumerate_rcgraphs(zigzag(n)):
                assert tree_of(bracketing_of(d)).leaves() == list(range(1, n + 2))
