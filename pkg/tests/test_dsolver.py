import pytest
from hypothesis import given, settings, strategies as st

from cwham.cmgraph import ColoredMultigraph, trail_exists
from cwham.oracle import enumerate_trail_exists
from cwham.dsolver import aux_directed, signature_directed, solve_directed
from cwham.gen import gen_family, gen_random_expr
from cwham.kexpr import evaluate, parse
from cwham.oracle import brute_force_hc, verify_cycle
from cwham.solver import PartialSolution, identity_reduce, run_concrete

from conftest import vertex_ids


def arcs(g):
    return sorted((e.u, e.v) for e in g.edges)


def test_aux_directed_examples():
    H = evaluate(parse("(v 1 a)", "directed"))
    assert arcs(aux_directed(H, PartialSolution(), 1)) == [(1, 1)]
    H = evaluate(parse("(arc 1 2 (union (v 1 a) (v 2 b)))", "directed"))
    assert arcs(aux_directed(H, PartialSolution(frozenset({(0, 1)})), 2)) == [(1, 2)]
    H = evaluate(parse(
        "(arc 3 2 (arc 1 3 (union (union (v 1 x) (v 3 y)) (v 2 z))))", "directed"))
    P = PartialSolution(frozenset({(0, 1), (1, 2)}))
    assert arcs(aux_directed(H, P, 3)) == [(1, 2)]
    with pytest.raises(ValueError):
        aux_directed(evaluate(parse("(v 1 a)")), PartialSolution())


def test_signature_directed_examples():
    s = signature_directed(ColoredMultigraph.build(3, red=[(1, 2)], directed=True))
    assert (s.out_degrees, s.in_degrees, s.partition) == ((1, 0, 0), (0, 1, 0), (1, 1, 3))
    s = signature_directed(ColoredMultigraph.build(3, red=[(1, 1)], directed=True))
    assert s.out_degrees[0] == s.in_degrees[0] == 1


def test_split_connectivity_refines_weak_partition():
    a = signature_directed(ColoredMultigraph.build(
        2, red=[(1, 2), (2, 1), (1, 1), (2, 2)], directed=True))
    b = signature_directed(ColoredMultigraph.build(
        2, red=[(1, 2), (1, 2), (2, 1), (2, 1)], directed=True))
    assert (a.out_degrees, a.in_degrees, a.partition) == (b.out_degrees, b.in_degrees, b.partition)
    assert a.split != b.split
    # the same blue completion works for one and not the other
    blue = [(1, 2), (1, 2), (2, 1), (2, 1)]
    for red, ok in (([(1, 2), (2, 1), (1, 1), (2, 2)], True),
                    ([(1, 2), (1, 2), (2, 1), (2, 1)], False)):
        g = ColoredMultigraph.build(2, red=red, blue=blue, directed=True)
        assert enumerate_trail_exists(g) is ok and trail_exists(g) is ok


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), max_size=6))
def test_reversal_swaps_vectors(red):
    g = ColoredMultigraph.build(3, red=red, directed=True)
    s, r = signature_directed(g), signature_directed(g.reversed())
    assert (s.out_degrees, s.in_degrees) == (r.in_degrees, r.out_degrees)
    assert s.partition == r.partition
    assert sum(s.out_degrees) == sum(s.in_degrees) == len(red)


def test_solve_directed_examples():
    r = solve_directed(gen_family("cycle", 5, "directed"), certificate=True)
    assert r.hamiltonian and r.cycle == ["v1", "v2", "v3", "v4", "v5"]
    assert not solve_directed(gen_family("path", 3, "directed")).hamiltonian


BIDIRECTED_C4 = ("(arc 4 1 (arc 1 4 (arc 4 2 (arc 2 4 (union (rho 4 2 (rho 2 3 "
                 "(arc 4 2 (arc 2 4 (union (arc 2 1 (arc 1 2 (union (v 1 a) (v 2 b)))) "
                 "(v 4 c)))))) (v 4 d))))))")


def test_bidirected_c4():
    e = parse(BIDIRECTED_C4, "directed")
    g = evaluate(e)
    assert len(g.edges) == 8
    assert brute_force_hc(g) is not None
    r = solve_directed(e, certificate=True)
    assert r.hamiltonian and verify_cycle(g, vertex_ids(g, r.cycle))


def test_directed_c4_with_one_arc_reversed():
    right = parse("(arc 4 1 (arc 3 4 (arc 2 3 (arc 1 2 (union (union (v 1 a) (v 2 b)) "
                  "(union (v 3 c) (v 4 d)))))))", "directed")
    wrong = parse("(arc 1 4 (arc 3 4 (arc 2 3 (arc 1 2 (union (union (v 1 a) (v 2 b)) "
                  "(union (v 3 c) (v 4 d)))))))", "directed")
    assert brute_force_hc(evaluate(right)) is not None
    assert brute_force_hc(evaluate(wrong)) is None
    assert solve_directed(right).hamiltonian
    assert not solve_directed(wrong).hamiltonian


def test_solve_directed_rejects_undirected(c5_expr):
    with pytest.raises(ValueError):
        solve_directed(c5_expr)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 9), st.integers(2, 4), st.integers(0, 10**6))
def test_directed_matches_oracle(n, k, seed):
    e = gen_random_expr(n, k, seed, "directed")
    G = evaluate(e)
    expected = brute_force_hc(G) is not None
    r = solve_directed(e, certificate=True)
    assert r.hamiltonian == expected
    assert run_concrete(e).hamiltonian == expected
    if n <= 7:
        assert run_concrete(e, identity_reduce).hamiltonian == expected
    if expected:
        assert verify_cycle(G, vertex_ids(G, r.cycle))
