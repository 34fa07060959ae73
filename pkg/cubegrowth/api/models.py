"""
Modelli Pydantic per l'API.
Le risposte riusano i report della libreria dove possibile.
"""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field  # type: ignore[import]

from cubegrowth.config import DEFAULT_MAX_DEGREE
from cubegrowth.core.models import EulerianReport, ValidationReport


class ComplexRequest(BaseModel):
    """Complesso di input: un esempio incluso oppure un documento JSON."""
    example: Optional[str] = Field(None, description="Nome di un esempio incluso (es. genus2)")
    document: Optional[Dict[str, Any]] = Field(None, description="Documento JSON del complesso")


class SeriesRequest(ComplexRequest):
    """Richiesta di una serie di crescita."""
    source: str = Field(..., description="Vertice di partenza x")
    target: str = Field(..., description="Vertice di arrivo y")
    vars: str = Field("single", description="Sostituzione: single, per-hyperplane o per-diagonal")
    convention: str = Field("forward", description="Convenzione dell'automa: forward o reverse")
    max_degree: int = Field(DEFAULT_MAX_DEGREE, ge=0, description="Grado massimo dello sviluppo")


class ReciprocityRequest(ComplexRequest):
    """Richiesta di verifica della reciprocità."""
    source: str = Field(..., description="Vertice di partenza x")
    target: str = Field(..., description="Vertice di arrivo y")
    vars: str = Field("single", description="Sostituzione invariante per *: single o per-hyperplane")
    convention: str = Field("forward", description="Convenzione dell'automa: forward o reverse")


class VerifyRequest(ComplexRequest):
    """Richiesta di verifica completa."""
    max_degree: int = Field(DEFAULT_MAX_DEGREE, ge=0, description="Grado dei controlli incrociati")


class ExamplesResponse(BaseModel):
    examples: List[str] = Field(..., description="Nomi degli esempi inclusi")


class ValidationResponse(BaseModel):
    """Esito della validazione NPC con lo stato euleriano."""
    npc: ValidationReport
    eulerian: Optional[EulerianReport] = Field(None, description="Presente solo se la validazione NPC passa")


class SeriesResponse(BaseModel):
    """Serie di crescita come funzione razionale e suo sviluppo."""
    complex_name: str
    source: str
    target: str
    vars: str
    series: str = Field(..., description="Funzione razionale in forma ridotta")
    rational: Dict[str, Any] = Field(..., description="Forma JSON {num, den, vars}")
    expansion: Any = Field(None, description="Coefficienti fino a max_degree, se sviluppabile")
