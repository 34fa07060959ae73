"""
Link dei vertici e dei cubi, condizione flag e validazione NPC.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx  # type: ignore

from cubegrowth.core.cubical import Corner, CubicalComplex, LinkVertex
from cubegrowth.core.models import ValidationReport, VertexLinkReport
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

Simplex = FrozenSet[LinkVertex]


def format_link_vertex(vertex: LinkVertex) -> str:
    edge, end = vertex
    return f"{edge}.{end}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Complesso simpliciale astratto: insieme dei simplessi non vuoti."""
    simplices: FrozenSet[Simplex] = frozenset()

    @property
    def dimension(self) -> int:
        """Dimensione; -1 per il complesso vuoto."""
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def euler_characteristic(self) -> int:
        """χ; 0 per il complesso vuoto."""
        return sum((-1) ** k * count for k, count in enumerate(self.f_vector()))

    def reduced_euler_characteristic(self) -> int:
        return self.euler_characteristic() - 1

    def f_vector(self) -> List[int]:
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts


@dataclass(frozen=True, eq=False)
class LinkComplex:
    """
    Link di un vertice: i vertici sono estremi di spigoli, i simplessi
    provengono dalle incidenze (cubo, angolo) sul vertice.
    """
    owner: str
    vertices: Tuple[LinkVertex, ...]
    incidences: Tuple[Tuple[str, Corner, Simplex], ...]
    simplices: FrozenSet[Simplex]
    graph: nx.Graph = field(repr=False)
    issues: Tuple[str, ...] = ()

    @property
    def simplicial(self) -> bool:
        return not self.issues

    def as_simplicial(self) -> SimplicialComplex:
        return SimplicialComplex(self.simplices)

    def adjacent(self, u: LinkVertex, w: LinkVertex) -> bool:
        return self.graph.has_edge(u, w)

    def in_star(self, sigma: Simplex, w: LinkVertex) -> bool:
        """w appartiene alla stella di σ (valido sui link flag)."""
        return w in sigma or all(self.adjacent(w, u) for u in sigma)

    def star_disjoint(self, sigma: Simplex, tau: Simplex) -> bool:
        """star(σ) ∩ τ = ∅."""
        return not any(self.in_star(sigma, w) for w in tau)

    def closed_star(self, sigma: Simplex) -> FrozenSet[LinkVertex]:
        """Vertici della stella chiusa di σ, calcolata dai simplessi."""
        return frozenset(v for s in self.simplices if sigma <= s for v in s)

    def missing_cliques(self) -> List[Tuple[LinkVertex, ...]]:
        """Cricche massimali del grafo che non sono simplessi."""
        missing = []
        for clique in nx.find_cliques(self.graph):
            if len(clique) >= 3 and frozenset(clique) not in self.simplices:
                missing.append(tuple(sorted(clique)))
        return sorted(missing)

    def is_flag(self) -> bool:
        return not self.missing_cliques()


def link(complex_: CubicalComplex, v: str) -> LinkComplex:
    """
    Link del vertice v.

    Raises:
        NotAVertex: se v non è un vertice
    """
    complex_.require_vertex(v)
    return _build_link(complex_, v)


@lru_cache(maxsize=256)
def _build_link(complex_: CubicalComplex, v: str) -> LinkComplex:
    incidences = []
    issues = []
    seen = {}
    for cube in complex_.cubes():
        k = complex_.dim_of(cube)
        if k == 0:
            continue
        for corner in complex_.corners(cube):
            if complex_.vertex_at(cube, corner) != v:
                continue
            simplex = complex_.corner_simplex(cube, corner)
            if len(simplex) != k:
                issues.append(f"il cubo '{cube}' all'angolo {corner} ripete un vertice del link")
            elif simplex in seen:
                other_cube, other_corner = seen[simplex]
                issues.append(
                    f"le incidenze {other_cube}[{other_corner}] e {cube}[{corner}] "
                    "danno lo stesso simplesso"
                )
            seen.setdefault(simplex, (cube, corner))
            incidences.append((cube, corner, simplex))

    simplices = frozenset(s for _, _, s in incidences)
    for simplex in simplices:
        for size in range(1, len(simplex)):
            for face in itertools.combinations(sorted(simplex), size):
                if frozenset(face) not in simplices:
                    issues.append(f"la faccia {_format_simplex(face)} non è un simplesso")

    vertices = tuple(sorted(next(iter(s)) for s in simplices if len(s) == 1))
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(tuple(s) for s in simplices if len(s) == 2)

    return LinkComplex(v, vertices, tuple(incidences), simplices, graph, tuple(issues))


def link_of_cube(complex_: CubicalComplex, cube: str, corner: Optional[Corner] = None) -> SimplicialComplex:
    """
    Link di un cubo, come link di σ(cubo all'angolo) nel link del vertice.

    Il risultato non dipende dall'angolo scelto (di default quello nullo).
    """
    k = complex_.dim_of(cube)
    if k == 0:
        return link(complex_, cube).as_simplicial()
    corner = corner or Corner.zero(k)
    base = link(complex_, complex_.vertex_at(cube, corner))
    sigma = complex_.corner_simplex(cube, corner)
    return SimplicialComplex(frozenset(s - sigma for s in base.simplices if sigma < s))


def validate_npc(complex_: CubicalComplex) -> ValidationReport:
    """Verifica che ogni link sia un complesso simpliciale flag."""
    entries = []
    for v in complex_.vertices:
        lk = link(complex_, v)
        missing = lk.missing_cliques()
        entries.append(VertexLinkReport(
            vertex=v,
            link_vertices=len(lk.vertices),
            simplices=len(lk.simplices),
            simplicial=lk.simplicial,
            flag=not missing,
            issues=list(lk.issues),
            missing_cliques=[[format_link_vertex(w) for w in clique] for clique in missing],
        ))
        if missing:
            logger.warning(f"⚠️ Link di '{v}' non flag: {len(missing)} cricche senza simplesso")

    connected = nx.is_connected(complex_.skeleton())
    passed = connected and all(e.simplicial and e.flag for e in entries)
    logger.info(f"🔍 Validazione NPC di '{complex_.name}': {'superata' if passed else 'fallita'}")
    return ValidationReport(complex_name=complex_.name, connected=connected, vertices=entries, passed=passed)


def _format_simplex(simplex) -> str:
    return "{" + ", ".join(format_link_vertex(w) for w in simplex) + "}"
