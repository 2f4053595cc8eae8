import pytest
from hypothesis import given
from hypothesis import strategies as st

from autpart.group import (GroupAccumulator, OrbitSet, Permutation, chain_order, compose,
                           cycle_form, format_orbits, orbits_of, parse_cycles)


def perms(n):
    return st.permutations(range(1, n + 1)).map(Permutation)


def test_cycle_form_and_parse():
    p = Permutation.from_cycles(8, [(3, 4), (5, 6)])
    assert cycle_form(p) == "(3,4)(5,6)"
    assert cycle_form(Permutation.identity(3)) == "()"
    assert parse_cycles(8, "(1,7)(2,8)(3,5)(4,6)") == Permutation([7, 8, 5, 6, 3, 4, 1, 2])
    assert cycle_form(parse_cycles(5, "(4,2,5)")) == "(2,5,4)"


def test_compose_applies_left_first():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    # 1 -a-> 2 -b-> 3
    assert compose(a, b)(1) == 3
    assert compose(b, a)(1) == 2


@given(perms(6), perms(6))
def test_inverse_and_order(a, b):
    assert compose(a, a.inverse()).is_identity()
    assert compose(compose(a, b), b.inverse()) == a
    q = Permutation.identity(6)
    for _ in range(a.order()):
        q = compose(q, a)
    assert q.is_identity()


def test_orbitset():
    o = OrbitSet(6)
    assert o.union(2, 5) and not o.union(5, 2)
    o.union(5, 6)
    assert o.find(6) == 2 and o.orbit_size(6) == 3
    assert o.orbits() == [[1], [2, 5, 6], [3], [4]]
    c = o.copy()
    c.union(1, 3)
    assert o.orbit_size(1) == 1


def test_format_orbits():
    assert format_orbits([[1, 2, 7, 8], [3, 4, 5, 6]]) == "{1,2,7,8} {3,4,5,6}"


def test_chain_order():
    assert chain_order([4, 2, 2]) == 16
    assert chain_order([]) == 1
    with pytest.raises(ValueError):
        chain_order([3, 0])


@given(st.lists(perms(7), max_size=6))
def test_orbits_only_coarsen(gens):
    acc = GroupAccumulator(7)
    prev = acc.orbit_list()
    for p in gens:
        acc.add_generator(p)
        cur = acc.orbit_list()
        owner = {v: i for i, o in enumerate(cur) for v in o}
        assert all(len({owner[v] for v in o}) == 1 for o in prev)
        prev = cur
    assert acc.orbit_list() == orbits_of(7, gens)


def test_accumulator_keeps_only_merging_generators():
    acc = GroupAccumulator(4, check=lambda p: p(4) == 4)
    assert acc.add_generator(Permutation.from_cycles(4, [(1, 2)]), anchor=1)
    assert not acc.add_generator(Permutation.from_cycles(4, [(1, 2)]))
    assert len(acc.generators) == 1
    assert (acc.log[0].orbit_before, acc.log[0].orbit_after) == (1, 2)
    with pytest.raises(ValueError):
        acc.add_generator(Permutation.from_cycles(4, [(3, 4)]))
    acc.reset()
    assert acc.generators == [] and acc.order == 1
