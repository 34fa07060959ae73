"""
Modello combinatorio dei complessi cubici.

Un complesso è un insieme graduato di cubi con mappe di faccia
∂(i,ε), 1 <= i <= k, ε in {0,1}, che soddisfano l'identità cubica
∂(i,ε)∂(j,δ) = ∂(j-1,δ)∂(i,ε) per i < j.
"""
from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

import networkx as nx  # type: ignore
from pydantic import ValidationError  # type: ignore[import]

from cubegrowth.core.models import ComplexDocument
from cubegrowth.exceptions import (
    CubicalIdentityViolation,
    DanglingFaceReference,
    Disconnected,
    MalformedDocument,
    NotAVertex,
)
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

# Estremo di spigolo: (spigolo, ε) con ∂(1,ε)(spigolo) = vertice del link
LinkVertex = Tuple[str, int]

RESERVED_CHARACTERS = "*[]"


@dataclass(frozen=True, order=True)
class Corner:
    """Vertice di un k-cubo, come vettore di bit di lunghezza k."""
    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"angolo non valido: {self.bits}")

    @classmethod
    def zero(cls, k: int) -> "Corner":
        return cls((0,) * k)

    @property
    def dimension(self) -> int:
        return len(self.bits)

    def complement(self) -> "Corner":
        return Corner(tuple(1 - b for b in self.bits))

    def __str__(self):
        return "".join(str(b) for b in self.bits)


def diagonal_name(cube: str, corner: Corner) -> str:
    """Nome della diagonale: cubo, cubo* o cubo[bit]."""
    if corner.dimension == 0 or not any(corner.bits):
        return cube
    if all(corner.bits):
        return f"{cube}*"
    return f"{cube}[{corner}]"


def star_name(name: str) -> str:
    """Nome della diagonale inversa di una diagonale non banale."""
    if name.endswith("*"):
        return name[:-1]
    if name.endswith("]"):
        cube, bits = name[:-1].split("[")
        complement = "".join("1" if b == "0" else "0" for b in bits)
        if "0" not in complement:
            return f"{cube}*"
        return f"{cube}[{complement}]"
    return f"{name}*"


@dataclass(frozen=True)
class Diagonal:
    """
    Diagonale orientata di un cubo, dall'angolo ``corner`` all'angolo opposto.

    ``simplex`` è σ(d) nel link di ``source``; ``opposite_simplex`` è σ(d*)
    nel link di ``target``.
    """
    cube: str
    corner: Corner
    source: str = field(compare=False)
    target: str = field(compare=False)
    simplex: FrozenSet[LinkVertex] = field(compare=False, repr=False)
    opposite_simplex: FrozenSet[LinkVertex] = field(compare=False, repr=False)

    @property
    def dimension(self) -> int:
        return self.corner.dimension

    @property
    def trivial(self) -> bool:
        return self.dimension == 0

    @property
    def name(self) -> str:
        return diagonal_name(self.cube, self.corner)

    @property
    def sort_key(self):
        return (self.dimension, self.cube, self.corner.bits)

    def reverse(self) -> "Diagonal":
        if self.trivial:
            return self
        return Diagonal(
            self.cube, self.corner.complement(), self.target, self.source,
            self.opposite_simplex, self.simplex,
        )

    def __str__(self):
        return self.name


class CubicalComplex:
    """
    Complesso cubico finito e connesso, validato alla costruzione.

    Args:
        name: nome del complesso
        levels: per ogni dimensione k, gli identificatori dei k-cubi
        faces: per ogni cubo di dimensione k >= 1, la lista delle 2k facce
    """

    def __init__(self, name: str, levels: Mapping[int, Iterable[str]], faces: Mapping[str, Sequence[str]]):
        self.name = name
        self._dimension_of: Dict[str, int] = {}
        for k, ids in levels.items():
            for cube in ids:
                if cube in self._dimension_of:
                    raise MalformedDocument(f"identificatore duplicato: '{cube}'")
                if not cube or any(ch in cube for ch in RESERVED_CHARACTERS):
                    raise MalformedDocument(f"identificatore non valido: '{cube}'")
                self._dimension_of[cube] = int(k)
        self._faces: Dict[str, Tuple[str, ...]] = {c: tuple(f) for c, f in faces.items()}
        self._levels: Dict[int, Tuple[str, ...]] = {
            k: tuple(sorted(c for c, d in self._dimension_of.items() if d == k))
            for k in set(self._dimension_of.values())
        }
        self._validate()
        self._key = (
            self.name,
            tuple(sorted((c, k, self._faces.get(c, ())) for c, k in self._dimension_of.items())),
        )
        logger.debug(
            f"🧊 Complesso '{name}' costruito: "
            + ", ".join(f"{len(self.cubes_of_dim(k))} cubi di dim {k}" for k in range(self.dimension + 1))
        )

    # Validazione

    def _validate(self):
        if not self.vertices:
            raise MalformedDocument("il complesso non ha vertici")
        for cube, k in self._dimension_of.items():
            if k == 0:
                if self._faces.get(cube):
                    raise MalformedDocument(f"il vertice '{cube}' non può avere facce")
                continue
            faces = self._faces.get(cube)
            if faces is None or len(faces) != 2 * k:
                raise MalformedDocument(
                    f"il cubo '{cube}' di dimensione {k} richiede {2 * k} facce"
                )
            for face in faces:
                if self._dimension_of.get(face) != k - 1:
                    raise DanglingFaceReference(
                        f"il cubo '{cube}' fa riferimento alla faccia '{face}', "
                        f"che non è un cubo di dimensione {k - 1}"
                    )
        for cube in self._faces:
            if cube not in self._dimension_of:
                raise DanglingFaceReference(f"facce definite per il cubo inesistente '{cube}'")

        for cube, k in sorted(self._dimension_of.items(), key=lambda item: (item[1], item[0])):
            for i, j in itertools.combinations(range(1, k + 1), 2):
                for epsilon, delta in itertools.product((0, 1), repeat=2):
                    left = self.face(self.face(cube, j, delta), i, epsilon)
                    right = self.face(self.face(cube, i, epsilon), j - 1, delta)
                    if left != right:
                        raise CubicalIdentityViolation(cube, i, j, epsilon, delta, left, right)

        if not nx.is_connected(self.skeleton()):
            components = nx.number_connected_components(self.skeleton())
            raise Disconnected(f"il 1-scheletro di '{self.name}' ha {components} componenti connesse")

    # Accesso ai cubi

    @property
    def dimension(self) -> int:
        return max(self._levels)

    def cubes_of_dim(self, k: int) -> Tuple[str, ...]:
        return self._levels.get(k, ())

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.cubes_of_dim(0)

    @property
    def edges(self) -> Tuple[str, ...]:
        return self.cubes_of_dim(1)

    @property
    def squares(self) -> Tuple[str, ...]:
        return self.cubes_of_dim(2)

    def cubes(self) -> Iterator[str]:
        """Tutti i cubi, per dimensione e identificatore."""
        for k in sorted(self._levels):
            yield from self._levels[k]

    def dim_of(self, cube: str) -> int:
        try:
            return self._dimension_of[cube]
        except KeyError:
            raise KeyError(f"cubo sconosciuto: '{cube}'") from None

    def has_cube(self, cube: str) -> bool:
        return cube in self._dimension_of

    def is_vertex(self, cube: str) -> bool:
        return self._dimension_of.get(cube) == 0

    def require_vertex(self, vertex: str) -> str:
        if not self.is_vertex(vertex):
            raise NotAVertex(f"'{vertex}' non è un vertice di '{self.name}'")
        return vertex

    def faces_of(self, cube: str) -> Tuple[str, ...]:
        return self._faces.get(cube, ())

    def face(self, cube: str, i: int, epsilon: int) -> str:
        """∂(i,ε)(cube)."""
        return self._faces[cube][2 * (i - 1) + epsilon]

    def vertex_at(self, cube: str, corner: Corner) -> str:
        """Vertice del cubo all'angolo dato: ∂(1,ε1) ripetuto."""
        current = cube
        for bit in corner.bits:
            current = self.face(current, 1, bit)
        return current

    def axis_edge(self, cube: str, corner: Corner, i: int) -> str:
        """Spigolo del cubo lungo l'asse i, uscente dall'angolo dato."""
        current = cube
        for j in range(self.dim_of(cube), 0, -1):
            if j != i:
                current = self.face(current, j, corner.bits[j - 1])
        return current

    def corner_simplex(self, cube: str, corner: Corner) -> FrozenSet[LinkVertex]:
        """σ: estremi degli spigoli degli assi all'angolo dato."""
        return frozenset(
            (self.axis_edge(cube, corner, i), corner.bits[i - 1])
            for i in range(1, corner.dimension + 1)
        )

    def corners(self, cube: str) -> Iterator[Corner]:
        for bits in itertools.product((0, 1), repeat=self.dim_of(cube)):
            yield Corner(bits)

    def skeleton(self) -> nx.MultiGraph:
        """1-scheletro come multigrafo (ammette cappi e spigoli multipli)."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(self.face(edge, 1, 0), self.face(edge, 1, 1), key=edge)
        return graph

    def maximal_cubes(self) -> Tuple[str, ...]:
        referenced = {face for faces in self._faces.values() for face in faces}
        return tuple(c for c in self.cubes() if c not in referenced)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(ids) for k, ids in self._levels.items())

    # Diagonali

    @cached_property
    def _diagonals(self) -> Tuple[Diagonal, ...]:
        result = []
        for cube in self.cubes():
            for corner in self.corners(cube):
                opposite = corner.complement()
                result.append(Diagonal(
                    cube, corner,
                    self.vertex_at(cube, corner), self.vertex_at(cube, opposite),
                    self.corner_simplex(cube, corner), self.corner_simplex(cube, opposite),
                ))
        return tuple(sorted(result, key=lambda d: d.sort_key))

    @cached_property
    def _diagonals_by_name(self) -> Dict[str, Diagonal]:
        return {d.name: d for d in self._diagonals}

    def diagonal(self, name: str) -> Diagonal:
        try:
            return self._diagonals_by_name[name]
        except KeyError:
            raise KeyError(f"diagonale sconosciuta: '{name}'") from None

    def has_diagonal(self, name: str) -> bool:
        return name in self._diagonals_by_name

    # Serializzazione e identità

    def to_document(self) -> dict:
        cubes: Dict[str, list] = {"0": list(self.vertices)}
        for k in range(1, self.dimension + 1):
            cubes[str(k)] = [{"id": c, "faces": list(self._faces[c])} for c in self.cubes_of_dim(k)]
        return {"name": self.name, "cubes": cubes}

    def __eq__(self, other):
        if not isinstance(other, CubicalComplex):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        counts = "/".join(str(len(self.cubes_of_dim(k))) for k in range(self.dimension + 1))
        return f"CubicalComplex({self.name!r}, cubes={counts})"


def diagonals(complex_: CubicalComplex) -> Tuple[Diagonal, ...]:
    """Tutte le diagonali orientate, ordinate per (dimensione, cubo, angolo)."""
    return complex_._diagonals


def load_complex(document: Union[dict, str, os.PathLike]) -> CubicalComplex:
    """
    Carica e valida un complesso cubico.

    Args:
        document: dizionario, stringa JSON o percorso di un file JSON

    Returns:
        CubicalComplex: complesso validato

    Raises:
        MalformedDocument, CubicalIdentityViolation, DanglingFaceReference, Disconnected
    """
    data = _read_document(document)
    try:
        parsed = ComplexDocument.model_validate(data)
    except ValidationError as e:
        raise MalformedDocument(f"documento non conforme allo schema: {e}") from e

    if parsed.cubes is not None:
        if parsed.vertices is not None or parsed.edges is not None or parsed.squares is not None:
            raise MalformedDocument("usare la forma graduata oppure quella abbreviata, non entrambe")
        levels, faces = _graded_form(parsed)
    elif parsed.vertices is not None:
        levels, faces = _shorthand_form(parsed)
    else:
        raise MalformedDocument("il documento deve contenere 'cubes' oppure 'vertices'")

    complex_ = CubicalComplex(parsed.name, levels, faces)
    logger.info(f"✅ Complesso '{complex_.name}' caricato (dimensione {complex_.dimension})")
    return complex_


def _read_document(document) -> dict:
    if isinstance(document, dict):
        return document
    text = str(document)
    looks_like_json = text.lstrip().startswith("{")
    if not looks_like_json and not os.path.exists(text):
        raise MalformedDocument(f"file non trovato: '{text}'")
    if not looks_like_json:
        try:
            with open(document, "r", encoding="utf-8") as f:
                text = f.read()
        except (OSError, UnicodeDecodeError) as e:
            raise MalformedDocument(f"impossibile leggere '{document}': {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"JSON non valido: {e}") from e
    if not isinstance(data, dict):
        raise MalformedDocument("il documento deve essere un oggetto JSON")
    return data


def _graded_form(parsed: ComplexDocument):
    levels: Dict[int, List[str]] = {}
    faces: Dict[str, List[str]] = {}
    for key, entries in parsed.cubes.items():
        try:
            k = int(key)
        except ValueError:
            raise MalformedDocument(f"livello non numerico: '{key}'") from None
        if k < 0:
            raise MalformedDocument(f"livello negativo: {k}")
        ids = []
        for entry in entries:
            if k == 0:
                if not isinstance(entry, str):
                    raise MalformedDocument("il livello 0 contiene solo identificatori")
                ids.append(entry)
            else:
                if isinstance(entry, str):
                    raise MalformedDocument(f"il cubo '{entry}' di dimensione {k} non ha facce")
                ids.append(entry.id)
                faces[entry.id] = list(entry.faces)
        levels[k] = ids
    return levels, faces


def _shorthand_form(parsed: ComplexDocument):
    levels = {0: list(parsed.vertices)}
    faces: Dict[str, List[str]] = {}
    if parsed.edges:
        levels[1] = list(parsed.edges)
        for edge, ends in parsed.edges.items():
            if len(ends) != 2:
                raise MalformedDocument(f"lo spigolo '{edge}' deve avere origine e fine")
            faces[edge] = list(ends)
    if parsed.squares:
        levels[2] = list(parsed.squares)
        faces.update({square: list(sides) for square, sides in parsed.squares.items()})
    return levels, faces
