import pytest
from hypothesis import given, settings

from autpart.graph import cycle_graph, g8, is_automorphism, petersen_graph
from autpart.heuristic import HeurConfig, heuraut, rst_sample
from autpart.oracle import brute_force

from conftest import graphs


def test_g8_estimate_is_exact():
    res = heuraut(g8())
    assert res.order == 16
    assert res.orbits == [[1, 2, 7, 8], [3, 4, 5, 6]]
    assert res.exact is False and res.note == "exact: unverified"
    assert len(res.base) == len(res.table) == len(res.factors)


def test_petersen():
    assert heuraut(petersen_graph()).order == 120


def test_rst_sample_is_evenly_spaced():
    assert rst_sample(tuple(range(1, 11)), 5) == [1, 3, 5, 7, 9]
    assert rst_sample((4, 9), 5) == [4, 9]
    assert rst_sample(tuple(range(1, 8)), 3) == [1, 3, 5]


def test_config_validation():
    with pytest.raises(ValueError):
        HeurConfig(k1=0)
    with pytest.raises(ValueError):
        HeurConfig(nm2=0)


def test_small_parameters_still_sound():
    g = cycle_graph(9)
    res = heuraut(g, cfg=HeurConfig(k1=0.01, nm2=1))
    assert 18 % res.order == 0


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_estimate_divides_true_order(g):
    fg = brute_force(g)
    res = heuraut(g)
    assert fg.order % res.order == 0
    owner = {v: i for i, o in enumerate(fg.orbits) for v in o}
    assert all(len({owner[v] for v in o}) == 1 for o in res.orbits)
    assert all(is_automorphism(g, p) for p in res.perms())
