"""
Classi di iperpiani: partizione degli spigoli generata dai lati opposti dei quadrati.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Tuple

from networkx.utils import UnionFind  # type: ignore

from cubegrowth.core.cubical import CubicalComplex, Diagonal
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class HyperplanePartition:
    """Classi di spigoli con le etichette h1, h2, ... (ordinate per spigolo minimo)."""
    classes: Tuple[Tuple[str, ...], ...]
    labels: Tuple[str, ...]

    @property
    def index(self) -> Dict[str, str]:
        """Mappa spigolo -> etichetta della sua classe."""
        return {edge: label for label, members in zip(self.labels, self.classes) for edge in members}

    def class_of(self, edge: str) -> str:
        return self.index[edge]

    def __len__(self):
        return len(self.classes)


def hyperplane_classes(complex_: CubicalComplex) -> HyperplanePartition:
    """Chiusura transitiva della relazione 'lati opposti di un quadrato'."""
    classes = UnionFind(complex_.edges)
    for square in complex_.squares:
        classes.union(complex_.face(square, 1, 0), complex_.face(square, 1, 1))
        classes.union(complex_.face(square, 2, 0), complex_.face(square, 2, 1))

    groups = sorted(tuple(sorted(group)) for group in classes.to_sets())
    labels = tuple(f"h{position}" for position in range(1, len(groups) + 1))
    logger.info(f"✂️ '{complex_.name}': {len(groups)} classi di iperpiani")
    return HyperplanePartition(tuple(groups), labels)


def weight(complex_: CubicalComplex, d: Diagonal, partition: HyperplanePartition = None) -> Counter:
    """Multinsieme delle classi attraversate da d (vuoto per le diagonali banali)."""
    partition = partition or hyperplane_classes(complex_)
    index = partition.index
    return Counter(
        index[complex_.axis_edge(d.cube, d.corner, i)]
        for i in range(1, d.dimension + 1)
    )
