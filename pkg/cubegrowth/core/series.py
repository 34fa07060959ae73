"""
Serie caratteristiche specializzate come funzioni razionali.

λ(x, y) = B(x) (I - Q)^-1 E(y): si risolve (I - Q) X = E con eliminazione
senza frazioni, solo sugli stati raggiungibili da B(x) e co-raggiungibili da y.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, singledispatch
from typing import Dict, List, Mapping, Sequence, Tuple

import networkx as nx  # type: ignore
from sympy.polys.domains import QQ  # type: ignore

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.matrices import LaurentMatrix
from cubegrowth.algebra.rational import RationalFunction
from cubegrowth.algebra.rings import from_fraction, from_ring, polynomial_ring, solve_sparse, to_fraction, to_ring
from cubegrowth.config import MAX_SYMBOLIC_STATES
from cubegrowth.core.automaton import (
    Automaton,
    SeriesTable,
    SymbolicMatrix,
    build_automaton,
)
from cubegrowth.core.cubical import CubicalComplex, Diagonal
from cubegrowth.core.substitution import Substitution
from cubegrowth.exceptions import (
    ReciprocalUndefined,
    SingularSystem,
    SymbolicSizeExceeded,
    UncoveredSymbol,
)
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

ROUTES = ("matrix", "substitution")


def specialize(matrix: SymbolicMatrix, substitution: Substitution) -> LaurentMatrix:
    """
    Sostituisce ogni simbolo con il suo monomio, conservando i segni.

    Raises:
        UncoveredSymbol: se un simbolo non è coperto dalla sostituzione
    """
    variables = substitution.variables
    entries = {}
    for key, entry in matrix.entries.items():
        if entry.symbol is None:
            value = LaurentPolynomial.constant(variables, entry.sign)
        else:
            if not substitution.covers((entry.symbol,)):
                raise UncoveredSymbol(
                    f"il simbolo '{entry.symbol}' alla posizione {key} non è coperto "
                    f"dalla sostituzione '{substitution.kind}'"
                )
            value = substitution.monomial(entry.symbol).scale(entry.sign)
        entries[key] = value
    return LaurentMatrix(matrix.labels, variables, entries)


# Costruzione del sistema lineare

def _unknowns(automaton: Automaton, matrix: LaurentMatrix, sources, targets) -> List[Diagonal]:
    graph = nx.DiGraph()
    graph.add_nodes_from(matrix.labels)
    graph.add_edges_from(matrix.entries)

    start = {s.name for x in sources for s in automaton.initial_states(x) if not s.trivial}
    reach = set(start)
    for name in start:
        reach |= nx.descendants(graph, name)
    coreach = set()
    for y in targets:
        coreach |= nx.ancestors(graph, y)
    return [s for s in automaton.states if not s.trivial and s.name in reach and s.name in coreach]


def _equations(matrix: LaurentMatrix, unknowns: Sequence[Diagonal], targets: Sequence[str], reciprocal: bool):
    """Righe sparse di (I - Q) e dei termini noti, a coefficienti di Laurent."""
    variables = matrix.variables
    position = {s.name: k for k, s in enumerate(unknowns)}
    column = {y: k for k, y in enumerate(targets)}
    by_row: Dict[str, List[Tuple[str, LaurentPolynomial]]] = {}
    for (i, j), value in matrix.entries.items():
        by_row.setdefault(i, []).append((j, value))

    one = LaurentPolynomial.constant(variables)
    rows, rhs = [], []
    for state in unknowns:
        row = {position[state.name]: one}
        right = {}
        for j, value in by_row.get(state.name, ()):
            if reciprocal:
                value = value.invert_variables()
            if j in position:
                k = position[j]
                row[k] = row[k] - value if k in row else -value
            elif j in column:
                right[column[j]] = right.get(column[j], LaurentPolynomial.zero(variables)) + value
        rows.append({k: v for k, v in row.items() if v})
        rhs.append({k: v for k, v in right.items() if v})
    return rows, rhs


def _clear_denominators(rows, rhs):
    """Moltiplica ogni equazione per un monomio che rende tutti gli esponenti non negativi."""
    cleared_rows, cleared_rhs = [], []
    for row, right in zip(rows, rhs):
        polys = list(row.values()) + list(right.values())
        if not polys:
            cleared_rows.append(row)
            cleared_rhs.append(right)
            continue
        lowest = [min(column) for column in zip(*(p.min_exponents() for p in polys))]
        shift = tuple(-e if e < 0 else 0 for e in lowest)
        cleared_rows.append({k: v.shift(shift) for k, v in row.items()})
        cleared_rhs.append({k: v.shift(shift) for k, v in right.items()})
    return cleared_rows, cleared_rhs


def _assemble(automaton: Automaton, unknowns, sources, targets, det, solutions, zero, convert):
    """λ(x, y) = [x = y] + Σ_{i in B(x)} X_i, come coppia (numeratore, det)."""
    position = {s.name: k for k, s in enumerate(unknowns)}
    results = {}
    for x in sources:
        initial = [position[s.name] for s in automaton.initial_states(x) if s.name in position]
        for c, y in enumerate(targets):
            numerator = det if x == y else zero
            for k in initial:
                numerator = numerator + convert(solutions[c][k])
            results[(x, y)] = numerator
    return results


def _solve_symbolic(automaton: Automaton, matrix: SymbolicMatrix, substitution: Substitution,
                    sources: Tuple[str, ...], targets: Tuple[str, ...], reciprocal: bool):
    specialized = specialize(matrix, substitution)
    variables = substitution.variables
    unknowns = _unknowns(automaton, specialized, sources, targets)
    if len(unknowns) > MAX_SYMBOLIC_STATES and len(variables) > 1:
        raise SymbolicSizeExceeded(
            f"{len(unknowns)} incognite in {len(variables)} variabili superano il limite "
            f"MAX_SYMBOLIC_STATES={MAX_SYMBOLIC_STATES}"
        )
    logger.info(
        f"🧮 Sistema {'reciproco ' if reciprocal else ''}su '{automaton.complex.name}': "
        f"{len(unknowns)} incognite, {len(targets)} colonne, {len(variables)} variabili"
    )

    rows, rhs = _clear_denominators(*_equations(specialized, unknowns, targets, reciprocal))
    one = LaurentPolynomial.constant(variables)
    zero = LaurentPolynomial.zero(variables)
    if not unknowns:
        det, solutions = one, []
        convert = lambda value: value  # noqa: E731
    else:
        R = polynomial_ring(variables, [p for row in rows + rhs for p in row.values()])
        try:
            det, solutions = solve_sparse(
                [{k: to_ring(R, v) for k, v in row.items()} for row in rows],
                [{k: to_ring(R, v) for k, v in right.items()} for right in rhs],
                len(targets), R.to_domain(),
            )
        except SingularSystem as e:
            if reciprocal:
                raise ReciprocalUndefined(f"I - Q̄ è singolare su '{automaton.complex.name}': {e}") from e
            raise
        det = from_ring(variables, det)
        convert = lambda value: from_ring(variables, value)  # noqa: E731

    numerators = _assemble(automaton, unknowns, sources, targets, det, solutions, zero, convert)
    return {key: RationalFunction(numerator, det) for key, numerator in numerators.items()}


@lru_cache(maxsize=128)
def _solve_transitions(automaton: Automaton, substitution: Substitution,
                       sources: Tuple[str, ...], targets: Tuple[str, ...], reciprocal: bool):
    return _solve_symbolic(automaton, _transition_matrix(automaton), substitution, sources, targets, reciprocal)


@lru_cache(maxsize=32)
def _transition_matrix(automaton: Automaton) -> SymbolicMatrix:
    return automaton.transition_matrix()


# Operazioni pubbliche

def characteristic_series(automaton: Automaton, matrix: SymbolicMatrix, x: str, y: str,
                          substitution: Substitution, reciprocal: bool = False) -> RationalFunction:
    """
    Specializzazione di B(x) (I - M)^-1 E(y) per una matrice M sugli stati dell'automa.

    Con ``reciprocal`` ogni monomio di M viene invertito prima della soluzione.
    """
    automaton.initial_states(x)
    automaton.accept_state(y)
    return _solve_symbolic(automaton, matrix, substitution, (x,), (y,), reciprocal)[(x, y)]


def growth_series(complex_: CubicalComplex, x: str, y: str, substitution: Substitution,
                  convention: str = "forward") -> RationalFunction:
    """
    Serie di crescita G(x, y) come funzione razionale.

    Raises:
        SingularSystem: se I - Q non è invertibile
        SymbolicSizeExceeded: sistema multivariato oltre il limite configurato
    """
    automaton = build_automaton(complex_, convention)
    automaton.initial_states(x)
    automaton.accept_state(y)
    return _solve_transitions(automaton, substitution, (x,), (y,), False)[(x, y)]


def growth_series_table(complex_: CubicalComplex, substitution: Substitution,
                        convention: str = "forward") -> Dict[Tuple[str, str], RationalFunction]:
    """Tutte le serie G(x, y) con una sola eliminazione."""
    automaton = build_automaton(complex_, convention)
    vertices = complex_.vertices
    return _solve_transitions(automaton, substitution, vertices, vertices, False)


def reciprocal_series(complex_: CubicalComplex, x: str, y: str, substitution: Substitution,
                      convention: str = "forward", route: str = "matrix") -> RationalFunction:
    """
    Serie reciproca λ̄(x, y).

    route="matrix" risolve (I - Q̄) X = E; route="substitution" applica t -> 1/t
    alla serie di crescita.

    Raises:
        ReciprocalUndefined: se I - Q̄ è singolare
    """
    if route not in ROUTES:
        raise ValueError(f"percorso sconosciuto: '{route}'")
    if route == "substitution":
        return growth_series(complex_, x, y, substitution, convention).invert_variables()
    automaton = build_automaton(complex_, convention)
    automaton.initial_states(x)
    automaton.accept_state(y)
    return _solve_transitions(automaton, substitution, (x,), (y,), True)[(x, y)]


def starred_series(complex_: CubicalComplex, x: str, y: str, substitution: Substitution,
                   convention: str = "forward") -> RationalFunction:
    """Specializzazione di λ*(x, y), ottenuta dalla matrice star(Q)."""
    automaton = build_automaton(complex_, convention)
    return characteristic_series(automaton, star(_transition_matrix(automaton)), x, y, substitution)


def evaluate_series(complex_: CubicalComplex, x: str, y: str, substitution: Substitution,
                    point: Mapping[str, Fraction], convention: str = "forward",
                    reciprocal: bool = False) -> Fraction:
    """
    Valore di λ(x, y) (o di λ̄) in un punto razionale, risolvendo il sistema numerico.

    Raises:
        SingularSystem / ReciprocalUndefined: se il sistema valutato è singolare
    """
    automaton = build_automaton(complex_, convention)
    specialized = specialize(_transition_matrix(automaton), substitution)
    unknowns = _unknowns(automaton, specialized, (x,), (y,))
    rows, rhs = _equations(specialized, unknowns, (y,), reciprocal)
    point = {v: Fraction(point[v]) for v in substitution.variables}
    zero = Fraction(0)
    if not unknowns:
        return Fraction(1 if x == y else 0)
    try:
        det, solutions = solve_sparse(
            [{k: from_fraction(v.evaluate(point)) for k, v in row.items()} for row in rows],
            [{k: from_fraction(v.evaluate(point)) for k, v in right.items()} for right in rhs],
            1, QQ,
        )
    except SingularSystem as e:
        if reciprocal:
            raise ReciprocalUndefined(f"I - Q̄ è singolare nel punto {point}: {e}") from e
        raise
    det = to_fraction(det)
    numerators = _assemble(automaton, unknowns, (x,), (y,), det, solutions, zero, to_fraction)
    return numerators[(x, y)] / det


def expand(f: RationalFunction, max_degree: int) -> SeriesTable:
    """
    Coefficienti esatti dello sviluppo in serie fino a max_degree.

    Raises:
        NotExpandable
    """
    return SeriesTable(f.variables, max_degree, f.expand(max_degree))


@singledispatch
def star(obj):
    """Applica d -> d* lettera per lettera o entrata per entrata."""
    raise TypeError(f"star non definita per {type(obj).__name__}")


@star.register(tuple)
@star.register(list)
def _(word):
    return type(word)(letter.reverse() for letter in word)


@star.register(SymbolicMatrix)
def _(matrix):
    return matrix.star()


@star.register(Substitution)
def _(substitution):
    return substitution.starred()
