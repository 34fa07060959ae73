"""
Sostituzioni monomiali delle lettere (diagonali non banali).

Tre sostituzioni predefinite:
- single: d -> t^|d|
- per-hyperplane: d -> prodotto delle variabili delle classi attraversate
- per-diagonal: d -> una variabile nuova per ogni diagonale (t1, t2, ... nell'ordine degli stati)
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Mapping, Sequence, Tuple

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.config import DEFAULT_VARIABLE
from cubegrowth.core.cubical import CubicalComplex, diagonals, star_name
from cubegrowth.core.hyperplanes import hyperplane_classes, weight
from cubegrowth.exceptions import UncoveredSymbol

SUBSTITUTION_KINDS = ("single", "per-hyperplane", "per-diagonal")


@dataclass(frozen=True)
class Substitution:
    """Mappa lettera -> vettore di esponenti sulle variabili dichiarate."""
    kind: str
    variables: Tuple[str, ...]
    images: Tuple[Tuple[str, Tuple[int, ...]], ...]

    @classmethod
    def from_mapping(cls, variables: Sequence[str], mapping: Mapping[str, Sequence[int]], kind: str = "custom"):
        return cls(kind, tuple(variables), tuple(sorted((k, tuple(v)) for k, v in mapping.items())))

    @cached_property
    def mapping(self) -> Dict[str, Tuple[int, ...]]:
        return dict(self.images)

    def exponents(self, letter: str) -> Tuple[int, ...]:
        try:
            return self.mapping[letter]
        except KeyError:
            raise UncoveredSymbol(f"la sostituzione '{self.kind}' non copre il simbolo '{letter}'") from None

    def monomial(self, letter: str) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(self.variables, self.exponents(letter))

    def covers(self, letters) -> bool:
        mapping = self.mapping
        return all(letter in mapping for letter in letters)

    def is_star_invariant(self) -> bool:
        mapping = self.mapping
        return all(mapping.get(star_name(letter)) == image for letter, image in mapping.items())

    def starred(self) -> "Substitution":
        """Sostituzione composta con d -> d*."""
        mapping = self.mapping
        return Substitution.from_mapping(
            self.variables,
            {letter: mapping[star_name(letter)] for letter in mapping if star_name(letter) in mapping},
            kind=f"{self.kind}*",
        )

    def __str__(self):
        return self.kind


def single_variable(complex_: CubicalComplex, variable: str = DEFAULT_VARIABLE) -> Substitution:
    mapping = {d.name: (d.dimension,) for d in diagonals(complex_) if not d.trivial}
    return Substitution.from_mapping((variable,), mapping, kind="single")


def per_hyperplane(complex_: CubicalComplex) -> Substitution:
    partition = hyperplane_classes(complex_)
    labels = partition.labels
    mapping = {}
    for d in diagonals(complex_):
        if d.trivial:
            continue
        counts = weight(complex_, d, partition)
        mapping[d.name] = tuple(counts.get(label, 0) for label in labels)
    return Substitution.from_mapping(labels, mapping, kind="per-hyperplane")


def per_diagonal(complex_: CubicalComplex) -> Substitution:
    letters = [d.name for d in diagonals(complex_) if not d.trivial]
    variables = tuple(f"t{position}" for position in range(1, len(letters) + 1))
    mapping = {
        letter: tuple(1 if k == position else 0 for k in range(len(letters)))
        for position, letter in enumerate(letters)
    }
    return Substitution.from_mapping(variables, mapping, kind="per-diagonal")


def build_substitution(complex_: CubicalComplex, kind: str) -> Substitution:
    """Costruisce una delle sostituzioni predefinite per nome."""
    builders = {"single": single_variable, "per-hyperplane": per_hyperplane, "per-diagonal": per_diagonal}
    if kind not in builders:
        raise ValueError(f"sostituzione sconosciuta: '{kind}' (valori ammessi: {', '.join(SUBSTITUTION_KINDS)})")
    return builders[kind](complex_)
