"""
Endpoint per il caricamento e la validazione dei complessi.
"""
import traceback
from fastapi import APIRouter, HTTPException  # type: ignore

from cubegrowth.api.models import ComplexRequest, ExamplesResponse, ValidationResponse
from cubegrowth.config import BUNDLED_EXAMPLES
from cubegrowth.core.cubical import CubicalComplex, load_complex
from cubegrowth.core.eulerian import eulerian_status
from cubegrowth.core.examples import load_bundled
from cubegrowth.core.links import validate_npc
from cubegrowth.exceptions import CubeGrowthError
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

# Inizializza il router
router = APIRouter(tags=["complex"])


def load_request_complex(request: ComplexRequest) -> CubicalComplex:
    """
    Carica il complesso indicato dalla richiesta.

    Raises:
        HTTPException: 422 se la richiesta non indica un complesso valido
    """
    if request.example is None and request.document is None:
        raise HTTPException(status_code=422, detail="serve 'example' oppure 'document'")
    try:
        if request.example is not None:
            return load_bundled(request.example)
        return load_complex(request.document)
    except (CubeGrowthError, KeyError) as e:
        logger.warning(f"⚠️ Complesso non valido: {e}")
        raise HTTPException(status_code=422, detail=f"{type(e).__name__}: {e}")


@router.get("/examples", response_model=ExamplesResponse)
def list_examples():
    """Nomi degli esempi inclusi nel pacchetto."""
    return ExamplesResponse(examples=list(BUNDLED_EXAMPLES))


@router.post("/validate", response_model=ValidationResponse)
def validate(request: ComplexRequest):
    """
    Validazione NPC e stato euleriano di un complesso.

    Args:
        request (ComplexRequest): Esempio incluso o documento

    Returns:
        ValidationResponse: Report NPC e, se superato, report euleriano
    """
    complex_ = load_request_complex(request)
    try:
        npc = validate_npc(complex_)
        status = eulerian_status(complex_) if npc.passed else None
        return ValidationResponse(npc=npc, eulerian=status)
    except Exception as e:
        logger.error(f"❌ ERRORE: {traceback.format_exc()}")
        raise HTTPException(status_code=500, detail=f"Errore durante la validazione: {str(e)}")
