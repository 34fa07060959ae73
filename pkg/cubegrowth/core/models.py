"""
Modelli Pydantic della libreria.
Definiscono lo schema dei documenti di input e la forma dei report di verifica.
"""
from typing import Dict, List, Optional, Union
from pydantic import BaseModel, ConfigDict, Field  # type: ignore[import]


class CubeEntry(BaseModel):
    """Cubo di dimensione k >= 1 con le sue 2k facce."""
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., description="Identificatore del cubo")
    faces: List[str] = Field(..., description="Facce ∂(1,0), ∂(1,1), ..., ∂(k,0), ∂(k,1) in quest'ordine")


class ComplexDocument(BaseModel):
    """
    Documento JSON di un complesso cubico.

    Forma graduata: ``cubes`` con chiavi "0", "1", ...; il livello "0" contiene
    solo identificatori. Forma abbreviata (solo dimensione 2): ``vertices``,
    ``edges`` (id -> [origine, fine]) e ``squares`` (id -> 4 spigoli).
    """
    model_config = ConfigDict(extra="forbid")

    name: str = Field("complex", description="Nome del complesso")
    cubes: Optional[Dict[str, List[Union[str, CubeEntry]]]] = Field(None, description="Cubi per dimensione")
    vertices: Optional[List[str]] = Field(None, description="Vertici (forma abbreviata)")
    edges: Optional[Dict[str, List[str]]] = Field(None, description="Spigoli orientati (forma abbreviata)")
    squares: Optional[Dict[str, List[str]]] = Field(None, description="Quadrati (forma abbreviata)")


class VertexLinkReport(BaseModel):
    """Esito delle verifiche sul link di un vertice."""
    vertex: str = Field(..., description="Vertice proprietario del link")
    link_vertices: int = Field(..., description="Numero di vertici del link (estremi di spigoli)")
    simplices: int = Field(..., description="Numero di simplessi non vuoti del link")
    simplicial: bool = Field(..., description="Il link è un complesso simpliciale")
    flag: bool = Field(..., description="Il link è un complesso flag")
    issues: List[str] = Field(default_factory=list, description="Problemi riscontrati")
    missing_cliques: List[List[str]] = Field(default_factory=list, description="Cricche senza simplesso")


class ValidationReport(BaseModel):
    """Report della validazione NPC."""
    complex_name: str
    connected: bool = Field(..., description="Il 1-scheletro è connesso")
    vertices: List[VertexLinkReport] = Field(default_factory=list)
    passed: bool = Field(..., description="Tutte le verifiche superate")

    def failures(self) -> List[str]:
        lines = []
        if not self.connected:
            lines.append("1-scheletro non connesso")
        for entry in self.vertices:
            for issue in entry.issues:
                lines.append(f"vertice {entry.vertex}: {issue}")
            for clique in entry.missing_cliques:
                lines.append(f"vertice {entry.vertex}: cricca {{{', '.join(clique)}}} senza simplesso")
        return lines


class CubeEulerEntry(BaseModel):
    """Condizione euleriana sul link di un cubo."""
    cube: str
    dimension: int
    link_dimension: int
    link_euler_characteristic: int
    required: int = Field(..., description="1 + (-1)^dim Lk")
    ok: bool


class EulerianReport(BaseModel):
    """Report sullo stato euleriano del complesso."""
    complex_name: str
    dimension: int = Field(..., description="Dimensione n del complesso")
    euler_characteristic: int = Field(..., description="Caratteristica di Eulero del complesso")
    pure: bool = Field(..., description="Ogni cubo massimale ha dimensione n")
    non_maximal_dimension: List[str] = Field(default_factory=list, description="Cubi massimali di dimensione < n")
    cubes: List[CubeEulerEntry] = Field(default_factory=list)
    vertex_links_spheres: bool = Field(..., description="χ̄(Lk v) = (-1)^(n-1) per ogni vertice")
    eulerian: bool

    def failures(self) -> List[CubeEulerEntry]:
        return [entry for entry in self.cubes if not entry.ok]


class StructureCheck(BaseModel):
    """Singola identità matriciale verificata."""
    name: str
    passed: bool
    applicable: bool = True
    witnesses: List[str] = Field(default_factory=list, description="Posizioni in cui l'identità fallisce")


class ColumnSum(BaseModel):
    """Somma di colonna di [*]J confrontata con χ̄ del link."""
    state: str
    vertex: str
    actual: int
    expected: int


class StructureReport(BaseModel):
    """Report delle identità strutturali sulle matrici D0, J0, D, J, [*]."""
    complex_name: str
    eulerian: bool
    checks: List[StructureCheck] = Field(default_factory=list)
    column_sums: List[ColumnSum] = Field(default_factory=list)
    passed: bool = Field(..., description="Tutte le verifiche applicabili superate")


class ReciprocityReport(BaseModel):
    """Report della verifica di reciprocità G(1/t) = (-1)^n G(t)."""
    complex_name: str
    source: str
    target: str
    substitution: str
    dimension: int
    eulerian: bool
    mode: str = Field("symbolic", description="symbolic oppure probabilistic")
    series: Optional[str] = Field(None, description="G(t) in forma ridotta")
    series_json: Optional[Dict] = None
    reciprocal_matrix: Optional[str] = Field(None, description="Reciproca calcolata con (I - Q̄)")
    reciprocal_substitution: Optional[str] = Field(None, description="Reciproca calcolata con t -> 1/t")
    points: List[Dict[str, str]] = Field(default_factory=list, description="Punti usati nel controllo probabilistico")
    routes_agree: bool
    sign: int
    holds: bool

    def verdict(self) -> str:
        status = "Eulerian" if self.eulerian else "not Eulerian"
        outcome = "HOLDS" if self.holds else "does not hold"
        return f"{status}, n={self.dimension}; reciprocity {outcome} (sign {self.sign:+d})"


class VerificationReport(BaseModel):
    """Report complessivo: NPC, stato euleriano, identità strutturali e controlli incrociati."""
    complex_name: str
    npc: ValidationReport
    eulerian: Optional[EulerianReport] = Field(None, description="Assente se la validazione NPC fallisce")
    structure: Optional[StructureReport] = None
    cross_checks: List[StructureCheck] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list, description="Osservazioni informative, ad esempio sul numero di iperpiani")
    passed: bool = Field(..., description="Tutte le verifiche applicabili superate")

    def checks(self) -> List[StructureCheck]:
        if self.structure is None:
            return list(self.cross_checks)
        return list(self.structure.checks) + list(self.cross_checks)
