import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tchordal.chordality import InducedCycle, enumerate_induced_dicycles
from tchordal.errors import (
    ClauseTooLargeError,
    InvalidParameterError,
    NotALongCycleError,
    NotSatisfyingError,
    ParseError,
    TooManyVariablesError,
)
from tchordal.reduction import (
    CnfFormula,
    assignment_to_cycle,
    build_reduction,
    cycle_to_assignment,
    expected_vertex_count,
    parse_dimacs_cnf,
    sat_brute_force,
    verify_reduction,
)

from .oracles import induced_cycles_oracle, sat_oracle_all

XOR2 = CnfFormula(2, ((1, 2), (-1, -2)))
ALL_SIGNS_3 = CnfFormula(
    3, tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3))) for signs in itertools.product((1, -1), repeat=3))
)


@st.composite
def cnfs(draw, max_vars=3, max_clauses=3, max_size=3):
    n = draw(st.integers(1, max_vars))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=max_size), min_size=1, max_size=max_clauses))
    return CnfFormula(n, tuple(map(tuple, clauses)))


# -- parsing and brute force -------------------------------------------------


def test_parse_examples():
    assert parse_dimacs_cnf("p cnf 1 1\n1 0\n") == CnfFormula(1, ((1,),))
    assert parse_dimacs_cnf("c hi\np cnf 2 1\n1 -2 0\n").clauses == ((1, -2),)
    assert parse_dimacs_cnf("p cnf 2 2\n1\n2 0 -1 0\n").clauses == ((1, 2), (-1,))


@pytest.mark.parametrize(
    "text, line",
    [
        ("p cnf 1 1\n2 0\n", 2),
        ("1 0\n", 1),
        ("p cnf 1 2\n1 0\n", None),
        ("p cnf 1 1\n1 x 0\n", 2),
        ("p cnf 1 1\n1\n", 2),
        ("p cnf 1 1\n0\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_dimacs_cnf(text)
    assert info.value.line == line


def test_clause_size_limit():
    text = "p cnf 4 1\n1 2 3 4 0\n"
    with pytest.raises(ClauseTooLargeError):
        parse_dimacs_cnf(text)
    assert parse_dimacs_cnf(text, max_clause_size=None).clauses == ((1, 2, 3, 4),)


def test_dimacs_round_trip():
    assert parse_dimacs_cnf(ALL_SIGNS_3.to_dimacs()) == ALL_SIGNS_3


def test_sat_brute_force_examples():
    assert sat_brute_force(CnfFormula(1, ((1,),))) == {1: True}
    assert sat_brute_force(CnfFormula(1, ((1,), (-1,)))) is None
    # lowest of the satisfying assignments listed by the oracle
    assert sat_oracle_all(XOR2)[0] == {1: False, 2: True}
    assert sat_brute_force(XOR2) == {1: False, 2: True}
    assert sat_brute_force(ALL_SIGNS_3) is None


def test_sat_brute_force_limit():
    with pytest.raises(TooManyVariablesError):
        sat_brute_force(CnfFormula(26, ((1,),)))


def test_formula_invariants():
    with pytest.raises(InvalidParameterError):
        CnfFormula(1, ((2,),))
    with pytest.raises(InvalidParameterError):
        CnfFormula(1, ((),))
    with pytest.raises(InvalidParameterError):
        CnfFormula(1, ())


# -- construction ------------------------------------------------------------


def test_vertex_count_single_clause():
    art = build_reduction(CnfFormula(3, ((1, 2, 3),)), 3)
    assert art.digraph.vertex_count == 23 == expected_vertex_count(art.phi, 3)


def test_all_signs_instance_size():
    assert build_reduction(ALL_SIGNS_3, 3).digraph.vertex_count == 58


def test_negated_literal_chords():
    art = build_reduction(CnfFormula(1, ((-1,),)), 3)
    g = art.map.variables[0]
    (w,) = art.map.clauses[0].w
    d = art.digraph
    assert d.has_arc(w, g.z(1)) and d.has_arc(g.q(1), w)
    assert not d.adjacent(w, g.z(2)) and not d.adjacent(w, g.q(2))


def test_positive_literal_chords():
    art = build_reduction(CnfFormula(1, ((1,),)), 4)
    g = art.map.variables[0]
    (w,) = art.map.clauses[0].w
    assert art.digraph.has_arc(w, g.z(2)) and art.digraph.has_arc(g.q(2), w)
    assert len(g.paths[0]) == len(g.paths[1]) == 5


def test_t_two_rejected():
    with pytest.raises(InvalidParameterError):
        build_reduction(CnfFormula(1, ((1,),)), 2)


def test_gadget_map_format():
    art = build_reduction(CnfFormula(1, ((1,), (-1,))), 3)
    assert art.map.format() == (
        "var 1 v1=1 v2=6 P1=1,2,3,6 P2=1,4,5,6\n"
        "clause 1 u1=7 u2=9 w=8\n"
        "clause 2 u1=10 u2=12 w=11\n"
    )


@settings(max_examples=60, deadline=None)
@given(cnfs(), st.sampled_from((3, 4, 5)))
def test_construction_invariants(phi, t):
    art = build_reduction(phi, t)
    d = art.digraph
    assert d.vertex_count == expected_vertex_count(phi, t)
    for u, v in d.arcs:
        assert (v, u) not in d.arcs
    named = [x for g in art.map.variables for p in g.paths for x in p]
    named += [x for c in art.map.clauses for x in (c.u1, c.u2, *c.w)]
    assert set(named) == set(d.vertices)
    for cyc in art.chord_cycles():
        assert len(cyc) == t
        assert InducedCycle(cyc).is_valid_in(d)


# -- certificates in both directions ------------------------------------------


def test_assignment_to_cycle_unit():
    art = build_reduction(CnfFormula(1, ((1,),)), 3)
    cyc = assignment_to_cycle(art, {1: True})
    assert len(cyc) == 7 and cyc.is_valid_in(art.digraph)
    assert cycle_to_assignment(art, cyc) == {1: True}
    with pytest.raises(NotSatisfyingError):
        assignment_to_cycle(art, {1: False})


def test_assignment_to_cycle_xor():
    art = build_reduction(XOR2, 4)
    a = {1: False, 2: True}
    cyc = assignment_to_cycle(art, a)
    assert len(cyc) == 16 and cyc.is_valid_in(art.digraph)
    on = set(cyc.vertices)
    g1, g2 = art.map.variables
    assert set(g1.paths[1]) <= on and set(g2.paths[0]) <= on
    assert cycle_to_assignment(art, cyc) == a


def test_chord_cycle_is_not_long():
    art = build_reduction(CnfFormula(1, ((1,),)), 3)
    short = [c for c in enumerate_induced_dicycles(art.digraph) if len(c) == 3]
    assert short
    with pytest.raises(NotALongCycleError):
        cycle_to_assignment(art, short[0])


@settings(max_examples=40, deadline=None)
@given(cnfs(max_vars=3, max_clauses=3), st.sampled_from((3, 4)))
def test_every_satisfying_assignment_round_trips(phi, t):
    art = build_reduction(phi, t)
    expected = phi.variable_count * (t + 1) + 3 * len(phi.clauses)
    for a in sat_oracle_all(phi):
        cyc = assignment_to_cycle(art, a)
        assert len(cyc) == expected and cyc.is_valid_in(art.digraph)
        assert cycle_to_assignment(art, cyc) == a


# -- verification -------------------------------------------------------------


def test_verify_examples():
    check = verify_reduction(CnfFormula(1, ((1,), (-1,))), 3)
    assert check.equivalent and not check.satisfiable and check.chordal
    assert str(check) == "Equivalent: Unsat, Chordal"
    check = verify_reduction(CnfFormula(1, ((1,),)), 3)
    assert check.equivalent and check.satisfiable and len(check.witness) == 7
    assert str(check) == "Equivalent: Sat, certificate of length 7"
    assert verify_reduction(ALL_SIGNS_3, 3).equivalent


@settings(max_examples=60, deadline=None)
@given(cnfs(max_vars=3, max_clauses=3), st.sampled_from((3, 4)))
def test_verify_random(phi, t):
    assert verify_reduction(phi, t).equivalent


def test_unit_pair_matches_subset_oracle():
    art = build_reduction(CnfFormula(1, ((1,), (-1,))), 3)
    assert {len(c) for c in induced_cycles_oracle(art.digraph)} == {3}


def test_asymmetric_negation_chord_breaks_equivalence():
    phi = CnfFormula(1, ((1,), (-1,)))
    art = build_reduction(phi, 3, negated_exit_side=2)
    # unsatisfiable, yet the subset oracle finds an induced 5-cycle
    assert sat_oracle_all(phi) == []
    assert 5 in {len(c) for c in induced_cycles_oracle(art.digraph)}
    check = verify_reduction(phi, 3, negated_exit_side=2)
    assert not check.equivalent and len(check.witness) == 5


def test_asymmetric_variant_fails_somewhere_in_small_family():
    failures = 0
    for c1, c2 in itertools.product([(1,), (-1,), (1, -1)], repeat=2):
        if not verify_reduction(CnfFormula(1, (c1, c2)), 3, negated_exit_side=2).equivalent:
            failures += 1
    assert failures > 0
