import math
import random
from fractions import Fraction

from expodom.graph import Graph, cycle, path, star
from expodom.enumeration import trees_up_to
from expodom.fixtures import (
    fixture_f1,
    fixture_f2,
    fixture_f2_porous_witness,
)
from expodom.lp import fractional_porous_number
from expodom.solvers import (
    all_minimum_porous_sets,
    domination_number,
    domination_with_forced_vertex,
    exponential_domination_number,
    porous_exponential_domination_number,
    restricted_domination_number,
)
from expodom.weights import (
    is_dominating,
    is_exponential_dominating,
    is_porous_exponential_dominating,
    is_restricted_dominating,
)

from _oracles import (
    brute_all_minimum,
    brute_minimum,
    random_subcubic_graph,
)


def test_gamma_examples():
    assert domination_number(path(3)).value == 1
    assert domination_number(star(3)).value == 1
    assert domination_number(fixture_f1(1)).value == 3


def test_restricted_examples():
    assert restricted_domination_number(Graph(1), ()).value == 0
    assert restricted_domination_number(path(3), range(3)).value == 1
    cert = restricted_domination_number(path(4), [1, 2, 3])
    assert cert.value == 1
    assert cert.witness == (2,)
    assert domination_number(path(4)).value == 2


def test_restricted_matches_gamma_on_full_target():
    for t in trees_up_to(7):
        assert (
            restricted_domination_number(t, range(t.n)).value
            == domination_number(t).value
        )


def test_forced_vertex_examples():
    assert domination_with_forced_vertex(path(3), 1) == 1
    assert domination_with_forced_vertex(path(3), 0) == 2
    assert domination_with_forced_vertex(star(3), 1) == 2


def test_gamma_e_examples():
    assert exponential_domination_number(star(3)).value == 1
    assert exponential_domination_number(path(4)).value == 2
    assert exponential_domination_number(fixture_f1(2)).value == 4


def test_gamma_e_star_examples():
    assert porous_exponential_domination_number(star(3)).value == 1
    assert porous_exponential_domination_number(fixture_f1(1)).value == 3
    assert porous_exponential_domination_number(fixture_f2()).value == 4


def test_all_minimum_porous_examples():
    assert all_minimum_porous_sets(path(2)) == [(0,), (1,)]
    assert (0,) in all_minimum_porous_sets(star(3))
    assert fixture_f2_porous_witness() in all_minimum_porous_sets(fixture_f2())


def test_against_bruteforce_trees():
    for t in trees_up_to(7):
        want_g, wit_g = brute_minimum(t, is_dominating)
        got = domination_number(t)
        assert (got.value, got.witness) == (want_g, wit_g)

        want_e, wit_e = brute_minimum(t, is_exponential_dominating)
        got = exponential_domination_number(t)
        assert (got.value, got.witness) == (want_e, wit_e)

        want_p, wit_p = brute_minimum(t, is_porous_exponential_dominating)
        got = porous_exponential_domination_number(t)
        assert (got.value, got.witness) == (want_p, wit_p)


def test_against_bruteforce_cycles():
    for k in range(3, 11):
        g = cycle(k)
        assert domination_number(g).value == brute_minimum(g, is_dominating)[0]
        assert (
            exponential_domination_number(g).value
            == brute_minimum(g, is_exponential_dominating)[0]
        )
        assert (
            porous_exponential_domination_number(g).value
            == brute_minimum(g, is_porous_exponential_dominating)[0]
        )


def test_against_bruteforce_random_graphs():
    rng = random.Random(424242)
    for _ in range(20):
        g = random_subcubic_graph(rng, n_max=8)
        if g.n == 0:
            continue
        assert domination_number(g).value == brute_minimum(g, is_dominating)[0]
        assert (
            exponential_domination_number(g).value
            == brute_minimum(g, is_exponential_dominating)[0]
        )
        assert (
            porous_exponential_domination_number(g).value
            == brute_minimum(g, is_porous_exponential_dominating)[0]
        )


def test_all_minimum_porous_matches_bruteforce():
    for t in trees_up_to(6):
        _, want = brute_all_minimum(t, is_porous_exponential_dominating)
        assert all_minimum_porous_sets(t) == sorted(want)


def test_disconnected_decomposition():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)])
    assert domination_number(g).value == brute_minimum(g, is_dominating)[0]
    assert (
        exponential_domination_number(g).value
        == brute_minimum(g, is_exponential_dominating)[0]
    )
    sets = all_minimum_porous_sets(g)
    _, want = brute_all_minimum(g, is_porous_exponential_dominating)
    assert sets == sorted(want)


def test_witnesses_pass_their_predicates():
    for t in trees_up_to(8):
        cert = domination_number(t)
        assert is_dominating(t, cert.witness)
        cert = restricted_domination_number(t, range(0, t.n, 2))
        assert is_restricted_dominating(t, cert.witness, range(0, t.n, 2))
        cert = exponential_domination_number(t)
        assert is_exponential_dominating(t, cert.witness)
        assert cert.profile.min_blocked() >= 1
        cert = porous_exponential_domination_number(t)
        assert is_porous_exponential_dominating(t, cert.witness)
        assert cert.profile.min_porous() >= 1


def test_parameter_chain():
    graphs = list(trees_up_to(8)) + [cycle(k) for k in range(3, 9)]
    for g in graphs:
        lp = fractional_porous_number(g)
        ges = porous_exponential_domination_number(g).value
        ge = exponential_domination_number(g).value
        gam = domination_number(g).value
        assert lp <= ges <= ge <= gam


def test_tree_bracket():
    # published bracket: (n+2)/6 <= gamma_e <= (n+2)/3 on subcubic trees
    for t in trees_up_to(9):
        ge = exponential_domination_number(t).value
        assert math.ceil(Fraction(t.n + 2, 6)) <= ge
        assert Fraction(ge) <= Fraction(t.n + 2, 3)


def test_forced_vertex_bounds():
    for t in trees_up_to(6):
        gamma = domination_number(t).value
        for x in range(t.n):
            forced = domination_with_forced_vertex(t, x)
            assert gamma <= forced <= gamma + 1
