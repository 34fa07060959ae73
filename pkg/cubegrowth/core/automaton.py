"""
Automa dei cammini cubici normali.

Gli stati sono tutte le diagonali (banali e non banali). Nella convenzione
``forward`` la transizione i -> j ha etichetta i; nella convenzione
``reverse`` ha etichetta i*. Gli stati banali non hanno transizioni uscenti
e fungono da stati di accettazione.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx  # type: ignore

from cubegrowth.core.cubical import CubicalComplex, Diagonal, diagonals
from cubegrowth.core.links import link, validate_npc
from cubegrowth.core.substitution import Substitution
from cubegrowth.exceptions import InvalidComplex, NonPositiveWeight, UnknownLetter, UnknownVertex
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

CONVENTIONS = ("forward", "reverse")

Word = Tuple[Diagonal, ...]
Letter = Union[str, Diagonal]


@dataclass(frozen=True)
class SymbolicEntry:
    """Entrata di una matrice simbolica: segno per simbolo (None = unità)."""
    sign: int = 1
    symbol: Optional[str] = None

    def __str__(self):
        body = self.symbol if self.symbol is not None else "1"
        return f"-{body}" if self.sign < 0 else body


class SymbolicMatrix:
    """Matrice S×S sparsa con entrate ±simbolo o ±1."""

    def __init__(self, labels: Sequence[str], entries: Mapping[Tuple[str, str], SymbolicEntry],
                 involution: Mapping[str, str]):
        self.labels = tuple(labels)
        self.entries: Dict[Tuple[str, str], SymbolicEntry] = dict(entries)
        self.involution = dict(involution)

    def __getitem__(self, key) -> Optional[SymbolicEntry]:
        return self.entries.get(key)

    def symbols(self):
        return {e.symbol for e in self.entries.values() if e.symbol is not None}

    def nonzero_count(self) -> int:
        return len(self.entries)

    def star(self) -> "SymbolicMatrix":
        """(M*)_ij = (M_ij)*."""
        return SymbolicMatrix(
            self.labels,
            {
                key: SymbolicEntry(e.sign, self.involution[e.symbol] if e.symbol is not None else None)
                for key, e in self.entries.items()
            },
            self.involution,
        )

    def permute_by_star(self) -> "SymbolicMatrix":
        """[*] M [*]: (i, j) -> (i*, j*)."""
        return SymbolicMatrix(
            self.labels,
            {(self.involution[i], self.involution[j]): e for (i, j), e in self.entries.items()},
            self.involution,
        )

    def __eq__(self, other):
        if not isinstance(other, SymbolicMatrix):
            return NotImplemented
        return self.labels == other.labels and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def rows(self) -> List[List[str]]:
        return [[str(self.entries[(i, j)]) if (i, j) in self.entries else "0" for j in self.labels]
                for i in self.labels]


@dataclass(frozen=True)
class Transition:
    source: Diagonal
    target: Diagonal
    label: Diagonal


@dataclass(frozen=True, eq=False)
class Automaton:
    """Automa finito sugli stati S = diagonali, con la convenzione indicata."""
    complex: CubicalComplex
    convention: str
    states: Tuple[Diagonal, ...]
    transitions: Tuple[Transition, ...]

    @property
    def state_index(self) -> Dict[Diagonal, int]:
        return {state: position for position, state in enumerate(self.states)}

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(s.name for s in self.states)

    def successors(self, state: Diagonal) -> List[Transition]:
        return self._outgoing.get(state, [])

    @property
    def _outgoing(self) -> Dict[Diagonal, List[Transition]]:
        return _outgoing_table(self)

    def initial_states(self, x: str) -> Tuple[Diagonal, ...]:
        """B_α(x) in avanti, B_ω(x) all'indietro; comprende la diagonale banale x."""
        self._require_vertex(x)
        if self.convention == "forward":
            return tuple(s for s in self.states if s.source == x)
        return tuple(s for s in self.states if s.target == x)

    def accept_state(self, y: str) -> Diagonal:
        self._require_vertex(y)
        return self.complex.diagonal(y)

    def _require_vertex(self, v: str):
        if not self.complex.is_vertex(v):
            raise UnknownVertex(f"vertice sconosciuto: '{v}'")

    def transition_matrix(self) -> SymbolicMatrix:
        """Q₊ (etichetta i) oppure Q₋ (etichetta i*), con righe indicizzate dalla sorgente."""
        entries = {
            (t.source.name, t.target.name): SymbolicEntry(1, t.label.name)
            for t in self.transitions
        }
        return SymbolicMatrix(self.labels, entries, involution_of(self.states))

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.states)
        graph.add_edges_from((t.source, t.target) for t in self.transitions)
        return graph

    def letter(self, letter: Letter) -> Diagonal:
        if isinstance(letter, Diagonal):
            name = letter.name
        else:
            name = str(letter)
        if not self.complex.has_diagonal(name) or self.complex.diagonal(name).trivial:
            raise UnknownLetter(f"lettera sconosciuta: '{name}'")
        return self.complex.diagonal(name)


@lru_cache(maxsize=32)
def _outgoing_table(automaton: Automaton) -> Dict[Diagonal, List[Transition]]:
    table: Dict[Diagonal, List[Transition]] = defaultdict(list)
    for t in automaton.transitions:
        table[t.source].append(t)
    return dict(table)


def involution_of(states: Iterable[Diagonal]) -> Dict[str, str]:
    return {s.name: s.reverse().name for s in states}


def build_automaton(complex_: CubicalComplex, convention: str = "forward") -> Automaton:
    """
    Costruisce l'automata delle forme normali.

    Raises:
        InvalidComplex: se la validazione NPC fallisce
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convenzione sconosciuta: '{convention}'")
    return _build_automaton(complex_, convention)


@lru_cache(maxsize=32)
def _build_automaton(complex_: CubicalComplex, convention: str) -> Automaton:
    report = validate_npc(complex_)
    if not report.passed:
        raise InvalidComplex(
            f"'{complex_.name}' non è a curvatura non positiva: " + "; ".join(report.failures())
        )

    states = diagonals(complex_)
    nontrivial = [s for s in states if not s.trivial]
    by_source: Dict[str, List[Diagonal]] = defaultdict(list)
    by_target: Dict[str, List[Diagonal]] = defaultdict(list)
    for s in nontrivial:
        by_source[s.source].append(s)
        by_target[s.target].append(s)

    transitions = []
    for i in nontrivial:
        if convention == "forward":
            # i -> j se ω(i) = α(j) e star(σ(i*)) ∩ σ(j) = ∅
            lk = link(complex_, i.target)
            for j in by_source[i.target]:
                if lk.star_disjoint(i.opposite_simplex, j.simplex):
                    transitions.append(Transition(i, j, i))
            transitions.append(Transition(i, complex_.diagonal(i.target), i))
        else:
            # i -> j se α(i) = ω(j) e star(σ(i)) ∩ σ(j*) = ∅
            lk = link(complex_, i.source)
            for j in by_target[i.source]:
                if lk.star_disjoint(i.simplex, j.opposite_simplex):
                    transitions.append(Transition(i, j, i.reverse()))
            transitions.append(Transition(i, complex_.diagonal(i.source), i.reverse()))

    index = {state: position for position, state in enumerate(states)}
    transitions.sort(key=lambda t: (index[t.source], index[t.target]))
    logger.info(
        f"🤖 Automa {convention} per '{complex_.name}': "
        f"{len(states)} stati, {len(transitions)} transizioni"
    )
    return Automaton(complex_, convention, states, tuple(transitions))


def is_normal_pair(complex_: CubicalComplex, first: Diagonal, second: Diagonal) -> bool:
    """
    Verifica diretta sui link che first, second sia una coppia normale:
    star(σ(first*)) ∩ σ(second) = ∅, con la stella calcolata dai simplessi.
    """
    if first.trivial or second.trivial or first.target != second.source:
        return False
    lk = link(complex_, first.target)
    return not (lk.closed_star(first.opposite_simplex) & second.simplex)


def accepts(automaton: Automaton, x: str, y: str, word: Sequence[Letter]) -> bool:
    """
    La parola etichetta un cammino da uno stato iniziale per x allo stato banale y.

    Raises:
        UnknownVertex, UnknownLetter
    """
    current = set(automaton.initial_states(x))
    accept = automaton.accept_state(y)
    for letter in (automaton.letter(item) for item in word):
        current = {
            t.target
            for state in current
            for t in automaton.successors(state)
            if t.label == letter
        }
        if not current:
            return False
    return accept in current


def enumerate_words(automaton: Automaton, x: str, y: str, max_len: int) -> List[Word]:
    """Parole accettate con al più max_len lettere, in ordine (lunghezza, lessicografico)."""
    if max_len < 0:
        raise ValueError("max_len deve essere >= 0")
    index = automaton.state_index
    accept = automaton.accept_state(y)
    words: List[Word] = []
    stack = [(state, ()) for state in automaton.initial_states(x)]
    while stack:
        state, word = stack.pop()
        if state == accept:
            words.append(word)
            continue
        if len(word) >= max_len:
            continue
        for t in automaton.successors(state):
            stack.append((t.target, word + (t.label,)))
    return sorted(words, key=lambda w: (len(w), [index[letter] for letter in w]))


class SeriesTable:
    """Tabella di coefficienti: esponenti -> coefficiente esatto, troncata a max_degree."""

    def __init__(self, variables: Sequence[str], max_degree: int, coefficients: Mapping[Tuple[int, ...], object]):
        self.variables = tuple(variables)
        self.max_degree = max_degree
        self.coefficients: Dict[Tuple[int, ...], Fraction] = {
            tuple(e): Fraction(c) for e, c in coefficients.items() if c and sum(e) <= max_degree
        }

    def as_list(self) -> List[int]:
        """Coefficienti per grado totale [c0, ..., c_max_degree]."""
        totals = [Fraction(0)] * (self.max_degree + 1)
        for exponents, coefficient in self.coefficients.items():
            totals[sum(exponents)] += coefficient
        return [int(c) if c.denominator == 1 else c for c in totals]

    def __eq__(self, other):
        if not isinstance(other, SeriesTable):
            return NotImplemented
        return (self.variables == other.variables and self.max_degree == other.max_degree
                and self.coefficients == other.coefficients)

    __hash__ = None  # type: ignore[assignment]

    def to_json(self):
        if len(self.variables) == 1:
            return [int(c) if isinstance(c, int) or c.denominator == 1 else str(c) for c in self.as_list()]
        return {
            "vars": list(self.variables),
            "terms": {
                ",".join(str(e) for e in exponents): str(coefficient)
                for exponents, coefficient in sorted(self.coefficients.items())
            },
        }

    def __repr__(self):
        return f"SeriesTable({self.variables}, {self.as_list()})"


def weighted_counts(automaton: Automaton, complex_: CubicalComplex, x: str, y: str,
                    substitution: Substitution, max_degree: int) -> SeriesTable:
    """
    Somma dei pesi delle parole accettate, per programmazione dinamica sui cammini.

    Il troncamento è sul grado totale del monomio accumulato.

    Raises:
        NonPositiveWeight: se una lettera ha immagine vuota o esponenti negativi
    """
    weights = {}
    for state in automaton.states:
        if state.trivial:
            continue
        letter = state if automaton.convention == "forward" else state.reverse()
        exponents = substitution.exponents(letter.name)
        if not any(exponents) or any(e < 0 for e in exponents):
            raise NonPositiveWeight(f"la lettera '{letter.name}' ha peso non positivo {exponents}")
        weights[letter] = exponents

    accept = automaton.accept_state(y)
    zero = (0,) * len(substitution.variables)
    totals: Dict[Tuple[int, ...], int] = defaultdict(int)
    frontier: Dict[Tuple[Diagonal, Tuple[int, ...]], int] = defaultdict(int)
    for state in automaton.initial_states(x):
        if state == accept:
            totals[zero] += 1
        elif not state.trivial:
            frontier[(state, zero)] += 1

    while frontier:
        following: Dict[Tuple[Diagonal, Tuple[int, ...]], int] = defaultdict(int)
        for (state, exponents), count in frontier.items():
            for t in automaton.successors(state):
                reached = tuple(a + b for a, b in zip(exponents, weights[t.label]))
                if sum(reached) > max_degree:
                    continue
                if t.target == accept:
                    totals[reached] += count
                elif not t.target.trivial:
                    following[(t.target, reached)] += count
        frontier = following

    return SeriesTable(substitution.variables, max_degree, totals)


def _dot_id(name: str) -> str:
    """Identificativo DOT tra virgolette, con \\ e " protetti."""
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(automaton: Automaton) -> str:
    """Grafo DOT dell'automa: stati banali con doppio cerchio, archi etichettati."""
    lines = [f"digraph {_dot_id(automaton.complex.name)} {{", "  rankdir=LR;"]
    for state in automaton.states:
        shape = "doublecircle" if state.trivial else "circle"
        lines.append(f"  {_dot_id(state.name)} [shape={shape}];")
    for t in automaton.transitions:
        lines.append(f"  {_dot_id(t.source.name)} -> {_dot_id(t.target.name)} [label={_dot_id(t.label.name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
