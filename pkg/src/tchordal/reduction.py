"""3-SAT to non-t-chordality: D(phi, t) is t-chordal iff phi is unsatisfiable.

Layout of D(phi, t):

* per variable i: endpoints v1, v2 and two internally disjoint directed
  paths P1 (true side) and P2 (false side) from v1 to v2, each with t arcs;
  z_j is the successor of v1 on P_j, q_j the predecessor of v2;
* per clause: endpoints u1, u2 and a path u1 -> w -> u2 per literal occurrence;
* chain arcs v2(i) -> v1(i+1), v2(n) -> u1(1), u2(i) -> u1(i+1), u2(m) -> v1(1);
* chords per occurrence w: a positive literal x_i adds w -> z_2 and q_2 -> w,
  a negative literal adds w -> z_1 and q_1 -> w. Every chord closes a cycle
  of length exactly t through the path it touches.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from .chordality import InducedCycle, t_chordality_witness
from .digraph import Digraph
from .errors import (
    BudgetExceededError,
    ClauseTooLargeError,
    InvalidParameterError,
    NotALongCycleError,
    NotSatisfyingError,
    ParseError,
    TooManyVariablesError,
)

log = logging.getLogger(__name__)

MAX_BRUTE_FORCE_VARIABLES = 25


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.variable_count < 1:
            raise InvalidParameterError("a formula needs at least one variable")
        if not self.clauses:
            raise InvalidParameterError("a formula needs at least one clause")
        for i, clause in enumerate(self.clauses, start=1):
            if not clause:
                raise InvalidParameterError(f"clause {i} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise InvalidParameterError(
                        f"clause {i}: literal {lit} outside 1..{self.variable_count}"
                    )

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause) for clause in self.clauses
        )

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str, max_clause_size: int | None = 3) -> CnfFormula:
    """Parse DIMACS CNF. Clauses may span lines; each ends with ``0``."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_start = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <n> <m>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError("non-integer count in problem line", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        for tok in tokens:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                if max_clause_size is not None and len(current) > max_clause_size:
                    raise ClauseTooLargeError(
                        f"clause has {len(current)} literals (max {max_clause_size})",
                        current_start,
                    )
                clauses.append(tuple(current))
                current = []
                current_start = None
                continue
            if abs(lit) > header[0]:
                raise ParseError(f"variable {abs(lit)} outside 1..{header[0]}", lineno)
            if not current:
                current_start = lineno
            current.append(lit)
    if header is None:
        raise ParseError("missing problem line 'p cnf <n> <m>'")
    if current:
        raise ParseError("last clause not terminated by 0", current_start)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfFormula(header[0], tuple(clauses))
    except InvalidParameterError as exc:
        raise ParseError(str(exc)) from exc


def sat_brute_force(phi: CnfFormula) -> dict[int, bool] | None:
    """Lowest satisfying assignment in binary order (x1 most significant, False < True)."""
    n = phi.variable_count
    if n > MAX_BRUTE_FORCE_VARIABLES:
        raise TooManyVariablesError(f"{n} variables exceed brute-force limit {MAX_BRUTE_FORCE_VARIABLES}")
    for values in itertools.product((False, True), repeat=n):
        assignment = dict(enumerate(values, start=1))
        if phi.satisfied_by(assignment):
            return assignment
    return None


@dataclass(frozen=True)
class VariableGadget:
    v1: int
    v2: int
    paths: tuple[tuple[int, ...], tuple[int, ...]]  # P1, P2 incl. both endpoints

    def z(self, j: int) -> int:
        return self.paths[j - 1][1]

    def q(self, j: int) -> int:
        return self.paths[j - 1][-2]


@dataclass(frozen=True)
class ClauseGadget:
    u1: int
    u2: int
    w: tuple[int, ...]  # one per literal occurrence, clause order


@dataclass(frozen=True)
class GadgetMap:
    variables: tuple[VariableGadget, ...]
    clauses: tuple[ClauseGadget, ...]

    def format(self) -> str:
        lines = []
        for i, g in enumerate(self.variables, start=1):
            p1 = ",".join(map(str, g.paths[0]))
            p2 = ",".join(map(str, g.paths[1]))
            lines.append(f"var {i} v1={g.v1} v2={g.v2} P1={p1} P2={p2}")
        for i, g in enumerate(self.clauses, start=1):
            lines.append(f"clause {i} u1={g.u1} u2={g.u2} w={','.join(map(str, g.w))}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReductionArtifact:
    digraph: Digraph
    map: GadgetMap
    t: int
    phi: CnfFormula

    def chord_cycles(self) -> list[tuple[int, ...]]:
        """For every literal occurrence, the cycle w -> z -> ... -> q -> w it closes."""
        cycles = []
        for clause, cg in zip(self.phi.clauses, self.map.clauses):
            for lit, w in zip(clause, cg.w):
                g = self.map.variables[abs(lit) - 1]
                side = chord_side(lit)
                path = g.paths[side - 1]
                cycles.append((w,) + path[1:-1])
        return cycles


def chord_side(lit: int) -> int:
    """Which path P_j the chords of a literal occurrence touch."""
    return 2 if lit > 0 else 1


def expected_vertex_count(phi: CnfFormula, t: int) -> int:
    return phi.variable_count * 2 * t + sum(2 + len(c) for c in phi.clauses)


def build_reduction(phi: CnfFormula, t: int, negated_exit_side: int = 1) -> ReductionArtifact:
    """Construct D(phi, t).

    ``negated_exit_side`` selects which path's last internal vertex feeds
    back into w for a negated literal. The default (1) matches the entry
    chord w -> z_1; passing 2 builds the asymmetric variant q_2 -> w, which
    breaks the equivalence and is kept only for regression tests.
    """
    if t < 3:
        raise InvalidParameterError(f"t must be at least 3, got {t}")
    if negated_exit_side not in (1, 2):
        raise InvalidParameterError("negated_exit_side must be 1 or 2")
    for i, clause in enumerate(phi.clauses, start=1):
        vars_ = [abs(l) for l in clause]
        if len(set(vars_)) != len(vars_):
            log.warning("clause %d repeats a variable: %s", i, clause)

    next_id = itertools.count(1)
    variables = []
    for _ in range(phi.variable_count):
        v1 = next(next_id)
        p1_inner = [next(next_id) for _ in range(t - 1)]
        p2_inner = [next(next_id) for _ in range(t - 1)]
        v2 = next(next_id)
        variables.append(
            VariableGadget(v1, v2, (tuple([v1, *p1_inner, v2]), tuple([v1, *p2_inner, v2])))
        )
    clauses = []
    for clause in phi.clauses:
        u1 = next(next_id)
        w = tuple(next(next_id) for _ in clause)
        u2 = next(next_id)
        clauses.append(ClauseGadget(u1, u2, w))
    n_vertices = next(next_id) - 1

    arcs = []
    for g in variables:
        for path in g.paths:
            arcs.extend(zip(path, path[1:]))
    for cg in clauses:
        for w in cg.w:
            arcs.append((cg.u1, w))
            arcs.append((w, cg.u2))
    for a, b in zip(variables, variables[1:]):
        arcs.append((a.v2, b.v1))
    arcs.append((variables[-1].v2, clauses[0].u1))
    for a, b in zip(clauses, clauses[1:]):
        arcs.append((a.u2, b.u1))
    arcs.append((clauses[-1].u2, variables[0].v1))
    for clause, cg in zip(phi.clauses, clauses):
        for lit, w in zip(clause, cg.w):
            g = variables[abs(lit) - 1]
            if lit > 0:
                arcs.append((w, g.z(2)))
                arcs.append((g.q(2), w))
            else:
                arcs.append((w, g.z(1)))
                arcs.append((g.q(negated_exit_side), w))

    art = ReductionArtifact(
        Digraph(n_vertices, arcs), GadgetMap(tuple(variables), tuple(clauses)), t, phi
    )
    assert n_vertices == expected_vertex_count(phi, t)
    return art


def _encode_assignment(art: ReductionArtifact, assignment: Mapping[int, bool]) -> InducedCycle:
    phi = art.phi
    missing = [i for i in range(1, phi.variable_count + 1) if i not in assignment]
    if missing:
        raise InvalidParameterError(f"assignment misses variables {missing}")
    if not phi.satisfied_by(assignment):
        raise NotSatisfyingError("assignment falsifies some clause")
    seq: list[int] = []
    for i, g in enumerate(art.map.variables, start=1):
        seq.extend(g.paths[0] if assignment[i] else g.paths[1])
    for clause, cg in zip(phi.clauses, art.map.clauses):
        pos = next(p for p, lit in enumerate(clause) if assignment[abs(lit)] == (lit > 0))
        seq.extend((cg.u1, cg.w[pos], cg.u2))
    return InducedCycle(tuple(seq)).canonical()


def assignment_to_cycle(art: ReductionArtifact, assignment: Mapping[int, bool]) -> InducedCycle:
    """The induced long cycle encoding a satisfying assignment.

    Length is n(t + 1) + 3m. In each clause the first true literal is used.
    """
    cycle = _encode_assignment(art, assignment)
    if not cycle.is_valid_in(art.digraph):
        raise AssertionError("encoded cycle is not induced")
    return cycle


def cycle_to_assignment(art: ReductionArtifact, cycle: InducedCycle) -> dict[int, bool]:
    """Read the truth value of x_i off the path the cycle takes through gadget i."""
    if len(cycle) == art.t:
        raise NotALongCycleError(f"cycle has length t = {art.t}")
    if not cycle.is_valid_in(art.digraph):
        raise NotALongCycleError("cycle is not an induced directed cycle of the digraph")
    on_cycle = set(cycle.vertices)
    assignment = {}
    for i, g in enumerate(art.map.variables, start=1):
        p1 = set(g.paths[0][1:-1]) <= on_cycle
        p2 = set(g.paths[1][1:-1]) <= on_cycle
        if not ({g.v1, g.v2} <= on_cycle) or p1 == p2:
            raise NotALongCycleError(f"cycle does not traverse variable gadget {i}")
        assignment[i] = p1
    if not art.phi.satisfied_by(assignment):
        raise NotSatisfyingError("decoded assignment does not satisfy the formula")
    return assignment


@dataclass(frozen=True)
class ReductionCheck:
    """Outcome of comparing the SAT oracle with the chordality search."""

    equivalent: bool
    satisfiable: bool
    chordal: bool
    assignment: dict[int, bool] | None
    witness: InducedCycle | None  # found by the chordality search
    certificate: InducedCycle | None = None  # encoded from the assignment
    detail: str = ""

    def __str__(self):
        verdict = "Equivalent" if self.equivalent else "CounterExample"
        sat = "Sat" if self.satisfiable else "Unsat"
        if self.chordal:
            chord = "Chordal"
        else:
            chord = f"certificate of length {len(self.witness)}"
        text = f"{verdict}: {sat}, {chord}"
        return f"{text} ({self.detail})" if self.detail else text


def verify_reduction(
    phi: CnfFormula, t: int, budget: int = 10**7, negated_exit_side: int = 1
) -> ReductionCheck:
    """Run both oracles and compare: satisfiable iff not t-chordal.

    ``budget`` bounds the size of the brute-force SAT search (2^n).
    """
    if 2 ** phi.variable_count > budget:
        raise BudgetExceededError(f"2^{phi.variable_count} assignments exceed budget {budget}")
    art = build_reduction(phi, t, negated_exit_side=negated_exit_side)
    assignment = sat_brute_force(phi)
    witness = t_chordality_witness(art.digraph, t)
    sat = assignment is not None
    chordal = witness is None
    if sat == chordal:
        return ReductionCheck(False, sat, chordal, assignment, witness, detail="oracles disagree")
    if sat:
        expected = phi.variable_count * (t + 1) + 3 * len(phi.clauses)
        cycle = _encode_assignment(art, assignment)
        if not cycle.is_valid_in(art.digraph):
            return ReductionCheck(False, sat, chordal, assignment, witness, cycle, "encoded cycle not induced")
        if len(cycle) != expected or cycle_to_assignment(art, cycle) != assignment:
            return ReductionCheck(False, sat, chordal, assignment, witness, cycle, "round trip failed")
        try:
            cycle_to_assignment(art, witness)
        except (NotALongCycleError, NotSatisfyingError) as exc:
            return ReductionCheck(False, sat, chordal, assignment, witness, cycle, str(exc))
        return ReductionCheck(True, sat, chordal, assignment, witness, cycle)
    return ReductionCheck(True, sat, chordal, None, None)
