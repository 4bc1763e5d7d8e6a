import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vpgmis.errors import ContractError
from vpgmis.geometry import intersects
from vpgmis.oracle import build_conflict_graph, exhaustive_mis, verify_independent
from vpgmis.perm_mis import CrossingFamily, crossing_family_mis, crossing_order, lis_indices

from helpers import L, lis_length_exhaustive


def random_family(rng, m, a=10, b=10, ties=True):
    """``m`` L1 shapes crossing x = a and y = b; corners drawn from a small grid."""
    if ties:
        xs = [rng.randrange(a) for _ in range(m)]
        ys = [rng.randrange(b) for _ in range(m)]
    else:
        m = min(m, a, b)
        xs, ys = rng.sample(range(a), m), rng.sample(range(b), m)
    shapes = [L(x, y, a + rng.randint(0, 6), b + rng.randint(0, 6)) for x, y in zip(xs, ys)]
    return CrossingFamily(shapes, a, b)


def test_lis_examples():
    assert lis_indices([1, 2, 3]) == [0, 1, 2]
    assert len(lis_indices([3, 2, 1])) == 1
    # exhaustive enumeration over all 32 subsequences gives length 2
    assert lis_length_exhaustive([2, 5, 1, 4, 3]) == 2
    positions = lis_indices([2, 5, 1, 4, 3])
    assert len(positions) == 2


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 8), max_size=12))
def test_lis_matches_exhaustive(seq):
    positions = lis_indices(seq)
    assert positions == sorted(positions)
    values = [seq[p] for p in positions]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert len(positions) == lis_length_exhaustive(seq)


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(10))))
def test_lis_is_m_minus_min_deletions(perm):
    # deleting everything outside one LIS leaves a sorted sequence, and no
    # smaller deletion does: the complement of the LIS is a minimum deletion set
    m = len(perm)
    keep = lis_indices(perm)
    best_deletions = min(
        k for k in range(m + 1)
        for gone in itertools.combinations(range(m), k)
        if all(a < b for a, b in zip(*(lambda kept: (kept, kept[1:]))([perm[p] for p in range(m) if p not in gone])))
    )
    assert m - len(keep) == best_deletions


def test_crossing_family_examples():
    both = CrossingFamily([L(0, 0, 3, 3), L(1, 1, 3, 3)], Fraction(3, 2), Fraction(3, 2))
    assert crossing_family_mis(both) == [0, 1]
    assert verify_independent(both.shapes, [0, 1])
    one = CrossingFamily([L(0, 1, 3, 3), L(1, 0, 3, 3)], Fraction(3, 2), Fraction(3, 2))
    assert intersects(*one.shapes)
    assert len(crossing_family_mis(one)) == 1
    assert crossing_family_mis(CrossingFamily([], 0, 0)) == []


def test_precondition_violations():
    with pytest.raises(ContractError):
        crossing_family_mis(CrossingFamily([L(0, 0, 1, 3)], 2, 2))  # misses x = 2
    with pytest.raises(ContractError):
        crossing_family_mis(CrossingFamily([L(3, 3, 0, 0)], 2, 2))  # not L1


def test_crossing_order_ties():
    assert crossing_order([1, 0, 1], [0, 5, 2]) == [1, 2, 0]


def test_inversion_criterion_random():
    rng = random.Random(3)
    for _ in range(200):
        fam = random_family(rng, rng.randint(2, 12), ties=rng.random() < 0.5)
        for p, q in itertools.combinations(fam.shapes, 2):
            expected = (p.x_c - q.x_c) * (p.y_c - q.y_c) < 0 or p.x_c == q.x_c or p.y_c == q.y_c
            assert intersects(p, q) == expected


def test_family_mis_exact_and_independent():
    rng = random.Random(4)
    for _ in range(300):
        fam = random_family(rng, rng.randint(0, 12))
        chosen = crossing_family_mis(fam)
        assert verify_independent(fam.shapes, chosen)
        assert len(chosen) == len(exhaustive_mis(build_conflict_graph(fam.shapes)))


def test_family_mis_rational_coordinates():
    shapes = [L(Fraction(1, 3), Fraction(2, 7), 5, 5), L(Fraction(1, 2), Fraction(1, 7), 5, 5),
              L(Fraction(2, 3), Fraction(3, 7), 5, 5)]
    fam = CrossingFamily(shapes, 1, 1)
    # y in x order is 2/7, 1/7, 3/7; the smallest-tail LIS is 1/7, 3/7
    assert crossing_family_mis(fam) == [1, 2]
