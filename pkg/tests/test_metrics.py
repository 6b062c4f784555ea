import json
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import all_perms, oracle_min_distance
from kingposet import (UNBOUNDED, Permutation, breadth, cyclic_breadth, cyclic_distance,
                       cyclic_position_distance, delete_value, inverse, manhattan_distance,
                       parse, rotate_left)


def perms(min_size=0, max_size=10):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation))


@pytest.mark.parametrize("sigma, i, j, d", [
    ("[5371426]", 2, 5, 4),
    ("[5371426]", 1, 4, 7),
    ("[5371426]", 1, 2, 3),
    ("[12]", 1, 2, 2),
])
def test_manhattan_distance(sigma, i, j, d):
    s = parse(sigma)
    assert manhattan_distance(s, i, j) == d
    assert manhattan_distance(s, j, i) == d


@pytest.mark.parametrize("i, j", [(1, 1), (0, 2), (1, 3)])
def test_manhattan_distance_errors(i, j):
    with pytest.raises(ValueError):
        manhattan_distance(parse("[12]"), i, j)


@pytest.mark.parametrize("n, i, j, d", [(8, 2, 7, 3), (9, 1, 9, 1), (2, 1, 2, 1)])
def test_cyclic_position_distance(n, i, j, d):
    assert cyclic_position_distance(n, i, j) == d


@pytest.mark.parametrize("n, i, j", [(5, 3, 3), (5, 4, 2), (5, 0, 2), (5, 1, 6)])
def test_cyclic_position_distance_errors(n, i, j):
    with pytest.raises(ValueError):
        cyclic_position_distance(n, i, j)


@pytest.mark.parametrize("n", range(2, 12))
def test_cyclic_position_distance_bounds(n):
    for i, j in combinations(range(1, n + 1), 2):
        assert 1 <= cyclic_position_distance(n, i, j) <= n // 2


@pytest.mark.parametrize("sigma, i, j, d", [
    ("[724915836]", 1, 2, 6),
    ("[724915836]", 2, 5, 4),
    ("[724915836]", 1, 9, 2),
    ("[26415837]", 2, 7, 6),
    ("[72415836]", 1, 8, 2),
    ("[42735816]", 1, 2, 3),
    ("[351246]", 3, 4, 2),
])
def test_cyclic_distance(sigma, i, j, d):
    s = parse(sigma)
    assert cyclic_distance(s, i, j) == d
    assert cyclic_distance(s, j, i) == d


def test_breadth_examples():
    assert breadth(parse("[5371426]")).value == 3
    assert breadth(parse("[3142]")).value == 3
    assert breadth(parse("[1]")).value == UNBOUNDED and breadth(parse("[1]")).witness is None
    assert breadth(Permutation()).value == UNBOUNDED


def test_cyclic_breadth_examples():
    assert cyclic_breadth(parse("[724915836]")).value == 2
    assert cyclic_breadth(parse("[724915836]")).witness == (1, 9)
    assert cyclic_breadth(parse("[42735816]")).value == 3
    assert cyclic_breadth(parse("[42735816]")).witness == (1, 2)
    assert cyclic_breadth(parse("[72415836]")).value == 2
    assert cyclic_breadth(parse("[72415836]")).witness == (1, 8)
    assert cyclic_breadth(parse("[351246]")).value == 2
    assert cyclic_breadth(parse("[351246]")).witness == (3, 4)
    assert cyclic_breadth(parse("[1]")).value == UNBOUNDED


def test_witness_is_lexicographically_least():
    # [3142]: pairs (1,2) and (1,3) both reach 3
    assert breadth(parse("[3142]")).witness == (1, 2)


def test_metric_json():
    assert breadth(parse("[3142]")).to_json() == {"value": 3, "witness": [1, 2]}
    assert json.dumps(breadth(parse("[1]")).to_json()) == '{"value": null, "witness": null}'


@pytest.mark.parametrize("n", range(0, 8))
def test_breadths_match_pair_scan_oracle(n):
    for sigma in all_perms(n):
        br, cbr = breadth(sigma), cyclic_breadth(sigma)
        if n < 2:
            assert br.value == cbr.value == UNBOUNDED
            continue
        assert br.value == oracle_min_distance(sigma, cyclic=False)
        assert cbr.value == oracle_min_distance(sigma, cyclic=True)
        assert manhattan_distance(sigma, *br.witness) == br.value
        assert cyclic_distance(sigma, *cbr.witness) == cbr.value
        assert br.witness[0] < br.witness[1]


@given(perms(2, 10), st.data())
def test_cyclic_distance_at_most_manhattan(sigma, data):
    i, j = data.draw(st.lists(st.integers(1, len(sigma)), min_size=2, max_size=2, unique=True))
    assert cyclic_distance(sigma, i, j) <= manhattan_distance(sigma, i, j)
    assert cyclic_breadth(sigma).value <= breadth(sigma).value


@given(perms(0, 10))
def test_breadth_inverse_invariant(sigma):
    assert breadth(sigma).value == breadth(inverse(sigma)).value


def test_cyclic_breadth_not_inverse_invariant():
    sigma = parse("[72415836]")
    assert inverse(sigma) == parse("[42735816]")
    assert (cyclic_breadth(sigma).value, cyclic_breadth(inverse(sigma)).value) == (2, 3)


@given(perms(1, 10), st.integers(0, 25))
def test_cyclic_breadth_rotation_invariant(sigma, k):
    assert cyclic_breadth(rotate_left(sigma, k)).value == cyclic_breadth(sigma).value


@given(perms(3, 10), st.data())
def test_single_deletion_drops_breadths_by_at_most_one(sigma, data):
    a = data.draw(st.integers(1, len(sigma)))
    child = delete_value(sigma, a)
    assert cyclic_breadth(child).value >= cyclic_breadth(sigma).value - 1
    assert breadth(child).value >= breadth(sigma).value - 1


def test_deletion_can_increase_cyclic_breadth():
    sigma = parse("[351246]")
    child = delete_value(sigma, 1)
    assert child == parse("[24135]")
    assert cyclic_breadth(sigma).value == 2
    assert cyclic_breadth(child).value == 3
