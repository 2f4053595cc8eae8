import random

import networkx as nx
import pytest
from hypothesis import given, settings
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup

from autpart.corpus import atlas_graphs, random_regular
from autpart.graph import (Graph, complete_graph, cycle_graph, g8, is_automorphism,
                           path_graph, petersen_graph)
from autpart.group import chain_order
from autpart.oracle import brute_force
from autpart.partition import OrderedPartition, refine, unit_partition
from autpart.search import (SearchConfig, UnsupportedDecomposition, run_a1, run_a2, sfm1a,
                            vseparn)

from test_partition import graph_and_partition


def from_nx(h):
    idx = {v: i + 1 for i, v in enumerate(h.nodes())}
    return Graph(h.number_of_nodes(), [(idx[u], idx[v]) for u, v in h.edges()])


def group_order(n, perms):
    if not perms:
        return 1
    return PermutationGroup([SymPerm([p(i + 1) - 1 for i in range(n)]) for p in perms]).order()


def test_g8_group():
    res = vseparn(g8())
    assert res.order == 16
    assert res.orbits == [[1, 2, 7, 8], [3, 4, 5, 6]]
    assert res.factors == [4, 2, 2]
    assert all(is_automorphism(g8(), p) for p in res.perms())


def test_run_a1_and_a2_on_g8():
    tower = run_a1(g8())
    assert tower.base == [1, 7, 5]
    assert str(tower.partitions[-1]) == "|1|7|8|5|6|4|3|2|"
    assert tower.lk == 4
    leaves = run_a2(g8())
    assert len(leaves) == 8 * 2 * 2
    assert all(leaf.is_discrete() for _, leaf in leaves)


def test_sfm1a_rejects_vertex_outside_target_cell():
    g = g8()
    p = refine(g, OrderedPartition.parse("|1|2,3,4,5,6,7,8|"))
    leaf, base = sfm1a(g, p, 8)
    assert base[0] == 8 and leaf.is_discrete()
    with pytest.raises(ValueError):
        sfm1a(g, p, 3)


NAMED = [
    ("cube", nx.hypercube_graph(3), 48),
    ("Q4", nx.hypercube_graph(4), 384),
    ("dodecahedron", nx.dodecahedral_graph(), 120),
    ("Heawood", nx.heawood_graph(), 336),
    ("Desargues", nx.desargues_graph(), 240),
    ("Moebius-Kantor", nx.moebius_kantor_graph(), 96),
    ("Pappus", nx.pappus_graph(), 216),
    ("Tutte 8-cage", nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5), 1440),
    ("torus 6x6", nx.grid_2d_graph(6, 6, periodic=True), 288),
    ("Petersen", nx.petersen_graph(), 120),
]


@pytest.mark.parametrize("name, h, order", NAMED, ids=[t[0] for t in NAMED])
def test_named_graphs(name, h, order):
    g = from_nx(h)
    res = vseparn(g)
    assert res.order == order
    assert group_order(g.n, res.perms()) == order
    assert res.order == chain_order(res.factors)


def test_random_regular_against_sympy():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.choice((10, 12, 14, 16))
        g = random_regular(rng, n, 3)
        res = vseparn(g)
        assert res.order == group_order(n, res.perms())


@pytest.mark.parametrize("rule", ["stabilizer", "group"])
def test_skip_rules_on_atlas(rule):
    cfg = SearchConfig(skip_rule=rule)
    for g in atlas_graphs(5):
        fg = brute_force(g)
        res = vseparn(g, cfg=cfg, gate=False)
        assert (res.order, res.orbits) == (fg.order, fg.orbits)


def test_first_vertex_start_agrees():
    g = petersen_graph()
    assert vseparn(g, cfg=SearchConfig(start="first")).order == 120


@settings(max_examples=80, deadline=None)
@given(graph_and_partition())
def test_coloured_input_matches_oracle(gp):
    g, p = gp
    res = vseparn(g, p, gate=False)
    fg = brute_force(g, cells=p.cells())
    assert (res.order, res.orbits) == (fg.order, fg.orbits)
    assert all(is_automorphism(g, q) for q in res.perms())


# -- gate -------------------------------------------------------------------

def test_disconnected_is_unsupported():
    with pytest.raises(UnsupportedDecomposition):
        vseparn(Graph(4, [(1, 2), (3, 4)]))
    assert vseparn(Graph(4, [(1, 2), (3, 4)]), gate=False).order == 8


def test_dense_graph_searches_complement():
    g = from_nx(nx.complement(nx.petersen_graph()))
    res = vseparn(g)
    assert res.order == 120 and res.note == "searched the complement"


def test_dense_graph_with_disconnected_complement():
    with pytest.raises(UnsupportedDecomposition):
        vseparn(from_nx(nx.complete_bipartite_graph(3, 3)))
    assert vseparn(from_nx(nx.complete_bipartite_graph(3, 3)), gate=False).order == 72


def test_complete_and_empty():
    res = vseparn(complete_graph(4))
    assert res.order == 24 and "complete graph" in res.note
    assert res.orbits == [[1, 2, 3, 4]]
    res = vseparn(Graph(5, []))
    assert res.order == 120 and "empty graph" in res.note
    cells = OrderedPartition.parse("|1,2|3,4,5|")
    assert vseparn(complete_graph(5), cells).order == 12


def test_trivial_and_tiny():
    assert vseparn(Graph(1, [])).order == 1
    assert vseparn(Graph(0, [])).order == 1
    asym = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 6), (5, 1)])
    res = vseparn(asym, gate=False)
    assert res.order == brute_force(asym).order


def test_metrics_and_trace():
    lines = []
    res = vseparn(cycle_graph(7), cfg=SearchConfig(trace=lines.append))
    assert res.order == 14
    assert any(line.startswith("gen ") for line in lines)
    m = res.metrics.as_dict()
    assert set(m["cases"]) == {"CS1", "CS2", "CS3", "CS4"}
    assert m["leaves"] >= 1 and m["max_lk"] >= 2


def test_bouquet_cap_is_enforced():
    from autpart.bouquet import BouquetOverflow

    with pytest.raises(BouquetOverflow):
        vseparn(path_graph(8), cfg=SearchConfig(max_bouquet=0))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(skip_rule="orbit")
    with pytest.raises(ValueError):
        SearchConfig(start="random")


def test_hughes_plane_of_order_nine():
    from itertools import combinations

    from autpart.corpus import hughes_plane_incidence, hughes_plane_points_lines
    from autpart.heuristic import heuraut

    points, lines = hughes_plane_points_lines()
    assert len(points) == len(lines) == 91
    assert all(sum(a in line and b in line for line in lines) == 1
               for a, b in combinations(range(91), 2))
    g = hughes_plane_incidence()
    exact = vseparn(g)
    for res in (exact, heuraut(g)):
        assert res.order == 67392
        assert sorted(map(len, res.orbits)) == [26, 156]
    assert group_order(g.n, exact.perms()) == 67392
    # this graph exercises the new-top-point correction
    assert exact.metrics.cases[3] > 0
