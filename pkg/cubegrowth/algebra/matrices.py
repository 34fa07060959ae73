"""
Matrici sparse quadrate a entrate LaurentPolynomial, indicizzate da etichette.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from cubegrowth.algebra.laurent import LaurentPolynomial


class LaurentMatrix:
    """Matrice sparsa con righe e colonne indicizzate dalla stessa lista di etichette."""

    def __init__(self, labels: Sequence[str], variables: Sequence[str],
                 entries: Mapping[Tuple[str, str], LaurentPolynomial] | None = None):
        self.labels: Tuple[str, ...] = tuple(labels)
        self.variables: Tuple[str, ...] = tuple(variables)
        self._index = {label: position for position, label in enumerate(self.labels)}
        self.entries: Dict[Tuple[str, str], LaurentPolynomial] = {}
        for (i, j), value in (entries or {}).items():
            if i not in self._index or j not in self._index:
                raise KeyError(f"etichetta sconosciuta in ({i}, {j})")
            if value:
                self.entries[(i, j)] = value

    @classmethod
    def identity(cls, labels, variables):
        return cls.diagonal(labels, variables, {label: LaurentPolynomial.constant(variables) for label in labels})

    @classmethod
    def diagonal(cls, labels, variables, values: Mapping[str, LaurentPolynomial]):
        return cls(labels, variables, {(label, label): value for label, value in values.items()})

    def __getitem__(self, key: Tuple[str, str]) -> LaurentPolynomial:
        return self.entries.get(key, LaurentPolynomial.zero(self.variables))

    def _same_shape(self, other: "LaurentMatrix"):
        if other.labels != self.labels or other.variables != self.variables:
            raise ValueError("matrici con etichette o variabili diverse")

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return LaurentMatrix(self.labels, self.variables, entries)

    def __neg__(self):
        return LaurentMatrix(self.labels, self.variables, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        by_row: Dict[str, List[Tuple[str, LaurentPolynomial]]] = {}
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, []).append((j, value))
        entries: Dict[Tuple[str, str], LaurentPolynomial] = {}
        for (i, k), left in self.entries.items():
            for j, right in by_row.get(k, ()):
                product = left * right
                entries[(i, j)] = entries[(i, j)] + product if (i, j) in entries else product
        return LaurentMatrix(self.labels, self.variables, entries)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.labels == other.labels and self.variables == other.variables
                and self.entries == other.entries)

    __hash__ = None  # type: ignore[assignment]

    def differences(self, other: "LaurentMatrix") -> List[Tuple[str, str]]:
        """Posizioni (in ordine di etichetta) in cui le due matrici differiscono."""
        self._same_shape(other)
        keys = set(self.entries) | set(other.entries)
        return sorted(
            (key for key in keys if self[key] != other[key]),
            key=lambda key: (self._index[key[0]], self._index[key[1]]),
        )

    def column_sums(self) -> Dict[str, LaurentPolynomial]:
        sums = {label: LaurentPolynomial.zero(self.variables) for label in self.labels}
        for (_, j), value in self.entries.items():
            sums[j] = sums[j] + value
        return sums

    def nonzero_count(self) -> int:
        return len(self.entries)

    def rows(self) -> Iterable[List[str]]:
        """Righe in forma testuale, per la visualizzazione."""
        for i in self.labels:
            yield [str(self[(i, j)]) for j in self.labels]
