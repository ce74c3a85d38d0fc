import pytest
from hypothesis import given, settings, strategies as st

from cwham.gen import BadParameters, gen_family, gen_random_expr
from cwham.kexpr import check_irredundant, evaluate, unparse, width


def degrees(g):
    deg = {v: 0 for v in g.labels}
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


@pytest.mark.parametrize("n", [3, 4, 5, 8, 20])
def test_cycle_family(n):
    g = evaluate(gen_family("cycle", n))
    assert len(g.edges) == n and set(degrees(g).values()) == {2} and g.is_connected()


def test_cycle_c5_matches_fixture_shape(c5_expr):
    assert sorted(degrees(evaluate(gen_family("cycle", 5))).values()) == \
        sorted(degrees(evaluate(c5_expr)).values())


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_path_family(n):
    g = evaluate(gen_family("path", n))
    assert len(g.edges) == n - 1 and max(degrees(g).values()) <= 2


def test_complete_family():
    g = evaluate(gen_family("complete", 3))
    assert len(g.edges) == 3
    assert len(evaluate(gen_family("complete", 6)).edges) == 15
    assert width(gen_family("complete", 4)) == 2
    assert len(evaluate(gen_family("complete", 4, "directed")).edges) == 12


def test_complete_bipartite_family():
    g = evaluate(gen_family("complete_bipartite", 7))
    assert len(g.edges) == 12


@pytest.mark.parametrize("kind", ["cycle", "path", "complete", "complete_bipartite"])
@pytest.mark.parametrize("mode", ["undirected", "directed"])
def test_families_are_irredundant(kind, mode):
    e = gen_family(kind, 7, mode)
    assert check_irredundant(e) == []
    assert e.n == 7 and e.directed == (mode == "directed")


def test_directed_cycle_orientation():
    g = evaluate(gen_family("cycle", 4, "directed"))
    assert g.named_edges() == {("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")}


@pytest.mark.parametrize("args", [("cycle", 2), ("path", 0), ("star", 5), ("cycle", 4.0)])
def test_family_bad_parameters(args):
    with pytest.raises(BadParameters):
        gen_family(*args)


@pytest.mark.parametrize("args", [(0, 3, 1), (5, 1, 1), (5, 7, 1)])
def test_random_bad_parameters(args):
    with pytest.raises(BadParameters):
        gen_random_expr(*args)
    with pytest.raises(BadParameters):
        gen_random_expr(5, 3, 1, "sideways")


def test_random_is_deterministic():
    for seed in range(20):
        assert unparse(gen_random_expr(9, 4, seed)) == unparse(gen_random_expr(9, 4, seed))
    assert unparse(gen_random_expr(9, 4, 1)) != unparse(gen_random_expr(9, 4, 2))


def test_random_clean_on_many_seeds():
    for seed in range(1000):
        e = gen_random_expr(1 + seed % 10, 2 + seed % 5, seed, seed % 2 == 0)
        assert check_irredundant(e) == []


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 25), st.integers(2, 6), st.integers(0, 10**9), st.booleans())
def test_random_properties(n, k, seed, directed):
    e = gen_random_expr(n, k, seed, directed)
    assert e.n == n and width(e) <= k
    assert check_irredundant(e) == []
    unary = len(e) - n - (n - 1)
    assert unary <= 3 * n * k * k
    evaluate(e)
