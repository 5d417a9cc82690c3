import pytest

import oracles
from tensorcc import generators as gen
from tensorcc.closed_forms import srg_detect
from tensorcc.errors import GraphInputError
from tensorcc.graph import Graph
from tensorcc.triangles import is_triangle_free


def test_complete():
    assert gen.complete(3).edge_count == 3
    assert gen.complete(4).degrees().tolist() == [3] * 4
    assert gen.complete(1).edge_count == 0
    with pytest.raises(GraphInputError):
        gen.complete(0)


def test_cycle():
    assert srg_detect(gen.cycle(5)).as_tuple() == (5, 2, 0, 1)
    assert gen.cycle(3) == gen.complete(3)
    assert is_triangle_free(gen.cycle(6))
    with pytest.raises(GraphInputError):
        gen.cycle(2)


def test_path():
    assert gen.path(3).min_degree() == 1
    assert gen.path(1).edge_count == 0
    assert gen.path(2) == gen.complete(2)


def test_complete_bipartite():
    assert gen.complete_bipartite(2, 3).edge_count == 6
    k33 = gen.complete_bipartite(3, 3)
    assert k33.regularity() == 3 and is_triangle_free(k33)
    assert gen.complete_bipartite(1, 1) == gen.complete(2)
    with pytest.raises(GraphInputError):
        gen.complete_bipartite(0, 3)


def test_petersen():
    g = gen.petersen()
    assert (g.n, g.edge_count, g.regularity()) == (10, 15, 3)
    assert is_triangle_free(g)
    assert srg_detect(g).as_tuple() == oracles.srg_by_pair_scan(10, oracles.edge_set(g)) == (10, 3, 0, 1)


@pytest.mark.parametrize("q", [5, 13, 17, 29])
def test_paley_parameters(q):
    g = gen.paley(q)
    g.validate()
    assert g.edge_count == q * (q - 1) // 4
    expected = (q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    assert srg_detect(g).as_tuple() == expected == oracles.srg_by_pair_scan(q, oracles.edge_set(g))


def test_paley5_is_c5():
    # with labels 0..4, residues {1, 4} give exactly the cycle 0-1-2-3-4
    assert gen.paley(5) == gen.cycle(5)


@pytest.mark.parametrize("q", [4, 7, 9, 21, 1])
def test_paley_rejects(q):
    with pytest.raises(GraphInputError):
        gen.paley(q)


def test_erdos_renyi_extremes():
    assert gen.erdos_renyi(7, 0.0, 3).edge_count == 0
    assert gen.erdos_renyi(7, 1.0, 3) == gen.complete(7)
    with pytest.raises(GraphInputError):
        gen.erdos_renyi(7, 1.5, 3)


def test_erdos_renyi_golden():
    g = gen.erdos_renyi(10, 0.5, 42)
    assert g.edge_count == 22
    assert g.edges().tolist()[:5] == [[0, 2], [0, 5], [0, 9], [1, 2], [1, 3]]
    assert gen.erdos_renyi(10, 0.5, 42) == g
    assert gen.erdos_renyi(10, 0.5, 43) != g


@pytest.mark.parametrize(
    "spec, n, m",
    [
        ("complete:4", 4, 6),
        ("cycle:5", 5, 5),
        ("path:3", 3, 2),
        ("bipartite:2,3", 5, 6),
        ("petersen", 10, 15),
        ("paley:13", 13, 39),
        ("er:10,0.5,42", 10, 22),
    ],
)
def test_from_spec(spec, n, m):
    g = gen.from_spec(spec)
    assert (g.n, g.edge_count) == (n, m)


def test_from_spec_seed_fallback():
    assert gen.from_spec("er:10,0.5", seed=42) == gen.erdos_renyi(10, 0.5, 42)


@pytest.mark.parametrize("spec", ["wheel:5", "complete", "complete:x", "er:10,0.5", "petersen:3", "bipartite:2"])
def test_from_spec_rejects(spec):
    with pytest.raises(GraphInputError):
        gen.from_spec(spec)


def test_generators_produce_valid_graphs():
    for g in [gen.complete(6), gen.cycle(7), gen.path(5), gen.complete_bipartite(2, 4),
              gen.petersen(), gen.paley(29), gen.erdos_renyi(30, 0.2, 1)]:
        assert isinstance(g, Graph)
        g.validate()
