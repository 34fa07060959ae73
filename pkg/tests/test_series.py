import itertools
from fractions import Fraction

import pytest

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.rational import RationalFunction
from cubegrowth.core.automaton import build_automaton, weighted_counts
from cubegrowth.core.cubical import diagonals
from cubegrowth.core.series import (
    characteristic_series,
    evaluate_series,
    expand,
    growth_series,
    growth_series_table,
    reciprocal_series,
    specialize,
    star,
    starred_series,
)
from cubegrowth.core.substitution import (
    Substitution,
    build_substitution,
    per_diagonal,
    per_hyperplane,
    single_variable,
)
from cubegrowth.exceptions import (
    NotExpandable,
    SingularSystem,
    SymbolicSizeExceeded,
    UncoveredSymbol,
    UnknownVertex,
)

T = ("t",)
T4 = ("t1", "t2", "t3", "t4")


def univariate(numerator, denominator):
    return RationalFunction(
        LaurentPolynomial(T, {(k,): c for k, c in enumerate(numerator)}),
        LaurentPolynomial(T, {(k,): c for k, c in enumerate(denominator)}),
    )


def v(name):
    return LaurentPolynomial.variable(T4, name)


ONE = LaurentPolynomial.constant(T4)


# Serie del grafo con cappio, quattro variabili

def test_fig1_per_diagonal_series(fig1):
    substitution = per_diagonal(fig1)
    assert substitution.variables == T4
    t1, t2, t3, t4 = v("t1"), v("t2"), v("t3"), v("t4")
    den = (ONE - t3) * (ONE - t4)
    top = ONE - t3 * t4
    assert growth_series(fig1, "x", "y", substitution) == RationalFunction(t1 * top, den)
    assert growth_series(fig1, "y", "x", substitution) == RationalFunction(t2 * top, den)
    assert growth_series(fig1, "y", "y", substitution) == RationalFunction(top, den)
    assert growth_series(fig1, "x", "x", substitution) == RationalFunction(
        den + t1 * t2 * (t3 + t4 - t3 * t4 * 2), den
    )


def test_fig1_single_variable_series(fig1):
    substitution = single_variable(fig1)
    expected = {
        ("x", "x"): (univariate([1, -1, 0, 2], [1, -1]), "(1-t+2t^3)/(1-t)", [1, 0, 0, 2, 2, 2]),
        ("x", "y"): (univariate([0, 1, 1], [1, -1]), "(t+t^2)/(1-t)", [0, 1, 2, 2, 2, 2]),
        ("y", "x"): (univariate([0, 1, 1], [1, -1]), "(t+t^2)/(1-t)", [0, 1, 2, 2, 2, 2]),
        ("y", "y"): (univariate([1, 1], [1, -1]), "(1+t)/(1-t)", [1, 2, 2, 2, 2, 2]),
    }
    for (x, y), (value, text, prefix) in expected.items():
        series = growth_series(fig1, x, y, substitution)
        assert series == value
        assert str(series) == text
        assert expand(series, 5).as_list() == prefix


def test_genus2_single_variable_series(genus2):
    substitution = single_variable(genus2)
    assert len(build_automaton(genus2).states) == 52
    den = [1, 0, -14, 0, 1]
    assert str(growth_series(genus2, "x", "x", substitution)) == "(1-2t^2+t^4)/(1-14t^2+t^4)"
    assert str(growth_series(genus2, "x", "y", substitution)) == "(3t+3t^3)/(1-14t^2+t^4)"
    assert str(growth_series(genus2, "x", "z", substitution)) == "12t^2/(1-14t^2+t^4)"
    assert growth_series(genus2, "x", "z", substitution) == univariate([0, 0, 12], den)
    assert expand(growth_series(genus2, "x", "x", substitution), 6).as_list() == [1, 0, 12, 0, 168, 0, 2340]


def test_genus2_remaining_series_repeat_the_three_printed_ones(genus2):
    table = growth_series_table(genus2, single_variable(genus2))
    printed = [table[("x", "x")], table[("x", "y")], table[("x", "z")]]
    for (x, y), series in table.items():
        assert any(series == candidate for candidate in printed), (x, y)
    assert table[("x", "w")] == table[("x", "y")]
    assert table[("y", "y")] == table[("x", "x")]


def test_table_matches_single_queries(fig1):
    substitution = single_variable(fig1)
    table = growth_series_table(fig1, substitution)
    assert set(table) == set(itertools.product(fig1.vertices, repeat=2))
    for (x, y), series in table.items():
        assert series == growth_series(fig1, x, y, substitution)


# Proprietà trasversali

def test_forward_and_reverse_conventions_agree(npc_examples):
    for complex_ in npc_examples:
        substitution = single_variable(complex_)
        forward = growth_series_table(complex_, substitution, "forward")
        reverse = growth_series_table(complex_, substitution, "reverse")
        assert all(forward[key] == reverse[key] for key in forward), complex_.name


def test_expansion_matches_automaton_counts(npc_examples):
    for complex_ in npc_examples:
        substitution = single_variable(complex_)
        automaton = build_automaton(complex_)
        table = growth_series_table(complex_, substitution)
        for (x, y), series in table.items():
            counted = weighted_counts(automaton, complex_, x, y, substitution, 8)
            assert counted.as_list() == expand(series, 8).as_list(), (complex_.name, x, y)


def test_per_hyperplane_expansion_matches_automaton_counts(fig1, square):
    for complex_ in (fig1, square):
        substitution = per_hyperplane(complex_)
        automaton = build_automaton(complex_)
        for x, y in itertools.product(complex_.vertices, repeat=2):
            series = growth_series(complex_, x, y, substitution)
            assert expand(series, 5) == weighted_counts(automaton, complex_, x, y, substitution, 5)


def test_starred_reverse_matrix_gives_the_same_specialization(fig1, genus2):
    for complex_ in (fig1, genus2):
        substitution = single_variable(complex_)
        reverse = build_automaton(complex_, "reverse")
        for x, y in (("x", "x"), ("x", "y")):
            starred = characteristic_series(reverse, star(reverse.transition_matrix()), x, y, substitution)
            assert starred == growth_series(complex_, x, y, substitution)


def test_starred_series_swaps_letters(fig1):
    substitution = per_diagonal(fig1)
    assert starred_series(fig1, "x", "y", substitution) == growth_series(fig1, "y", "x", substitution)
    single = single_variable(fig1)
    assert starred_series(fig1, "x", "x", single) == growth_series(fig1, "x", "x", single)


# Reciproche

def test_reciprocal_routes(fig1, genus2):
    single = single_variable(fig1)
    expected = -univariate([1, 1], [1, -1])
    for route in ("matrix", "substitution"):
        assert reciprocal_series(fig1, "y", "y", single, route=route) == expected
    g2 = single_variable(genus2)
    assert reciprocal_series(genus2, "x", "x", g2) == growth_series(genus2, "x", "x", g2)
    with pytest.raises(ValueError):
        reciprocal_series(fig1, "y", "y", single, route="sideways")


def test_expand_examples():
    assert expand(univariate([1, 1], [1, -1]), 3).as_list() == [1, 2, 2, 2]
    assert expand(RationalFunction.constant(T), 4).as_list() == [1, 0, 0, 0, 0]
    with pytest.raises(NotExpandable):
        expand(univariate([1], [0, 1]), 2)


def test_expand_multivariate_json(fig1):
    series = growth_series(fig1, "y", "y", per_hyperplane(fig1))
    data = expand(series, 2).to_json()
    assert data["vars"] == ["h1", "h2"]
    assert data["terms"] == {"0,0": "1", "0,1": "2", "0,2": "2"}


def test_evaluate_series_agrees_with_the_rational_function(fig1, genus2):
    for complex_ in (fig1, genus2):
        substitution = single_variable(complex_)
        point = {"t": Fraction(1, 5)}
        for x, y in itertools.product(complex_.vertices[:2], repeat=2):
            value = evaluate_series(complex_, x, y, substitution, point)
            assert value == growth_series(complex_, x, y, substitution).evaluate(point)


# Sostituzioni e specializzazione

def test_specialize_rules(fig1, square):
    q_plus = build_automaton(square).transition_matrix()
    specialized = specialize(q_plus, single_variable(square))
    assert specialized[("xx", "11")] == LaurentPolynomial(T, {(2,): 1})
    hyper = per_hyperplane(fig1)
    assert hyper.exponents("a") == hyper.exponents("a*")
    q_fig1 = build_automaton(fig1).transition_matrix()
    assert specialize(star(q_fig1), hyper) == specialize(q_fig1, hyper)


def test_star_on_words_and_matrices(fig1):
    a, a_star, b = fig1.diagonal("a"), fig1.diagonal("a*"), fig1.diagonal("b")
    assert [d.name for d in star((a, b, a_star))] == ["a*", "b*", "a"]
    assert isinstance(star([a]), list)
    q_plus = build_automaton(fig1).transition_matrix()
    assert star(star(q_plus)) == q_plus
    assert star(q_plus) != q_plus
    with pytest.raises(TypeError):
        star(42)


def test_star_on_substitutions(fig1):
    diagonal = per_diagonal(fig1)
    starred = star(diagonal)
    assert starred.exponents("a") == diagonal.exponents("a*")
    assert not diagonal.is_star_invariant()
    assert star(single_variable(fig1)).mapping == single_variable(fig1).mapping


def test_uncovered_symbol(fig1):
    partial = Substitution.from_mapping(T, {"a": (1,)})
    with pytest.raises(UncoveredSymbol):
        specialize(build_automaton(fig1).transition_matrix(), partial)
    with pytest.raises(UncoveredSymbol):
        growth_series(fig1, "x", "y", partial)


def test_build_substitution_names(fig1):
    assert build_substitution(fig1, "single") == single_variable(fig1)
    assert build_substitution(fig1, "per-hyperplane").variables == ("h1", "h2")
    with pytest.raises(ValueError):
        build_substitution(fig1, "per-cube")


def test_singular_system_is_reported(fig1):
    letters = [d.name for d in diagonals(fig1) if not d.trivial]
    flat = Substitution.from_mapping(T, {name: (0,) for name in letters}, kind="flat")
    with pytest.raises(SingularSystem):
        growth_series(fig1, "y", "y", flat)


def test_multivariate_size_guard(genus2):
    with pytest.raises(SymbolicSizeExceeded):
        growth_series(genus2, "x", "y", per_hyperplane(genus2))


def test_unknown_vertex(fig1):
    with pytest.raises(UnknownVertex):
        growth_series(fig1, "x", "q", single_variable(fig1))
