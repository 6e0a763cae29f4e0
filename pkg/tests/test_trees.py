import pytest

from gracelab.transform import Transformation, enumerate_semigroup
from gracelab.trees import centers, distances_from, rooted_code, tree_canonical_code, underlying_tree

# unlabeled trees (A000055) and rooted trees (A000081) on n vertices
FREE_TREES = [1, 1, 1, 2, 3, 6, 11]
ROOTED_TREES = [1, 1, 2, 4, 9, 20, 48]


@pytest.mark.parametrize("n", range(1, 8))
def test_semigroup_covers_every_tree(n):
    members = list(enumerate_semigroup(n))
    unrooted = {tree_canonical_code(underlying_tree(f)) for f in members}
    rooted = {rooted_code(underlying_tree(f), 0) for f in members}
    assert len(unrooted) == FREE_TREES[n - 1]
    assert len(rooted) == ROOTED_TREES[n - 1]


def test_underlying_tree_drops_loop():
    adj = underlying_tree(Transformation.from_literal("0,0,1"))
    assert adj == [[1], [0, 2], [1]]


def test_centers_and_distances():
    path = underlying_tree(Transformation.from_literal("0,0,1,2"))
    assert centers(path) == [1, 2]
    assert distances_from(path, 0) == [0, 1, 2, 3]
    star = underlying_tree(Transformation.from_literal("0,0,0,0"))
    assert centers(star) == [0]


def test_canonical_code_is_label_free():
    # the same path rooted at an end and in the middle
    assert tree_canonical_code(underlying_tree(Transformation.from_literal("0,0,1"))) == \
        tree_canonical_code([[2], [2], [0, 1]])
