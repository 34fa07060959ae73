"""
Endpoint per serie di crescita, reciprocità e verifica completa.
"""
import traceback
from fastapi import APIRouter, HTTPException  # type: ignore

from cubegrowth.api.complex_endpoints import load_request_complex
from cubegrowth.api.models import ReciprocityRequest, SeriesRequest, SeriesResponse, VerifyRequest
from cubegrowth.core.models import ReciprocityReport, VerificationReport
from cubegrowth.core.reciprocity import check_reciprocity
from cubegrowth.core.series import expand, growth_series
from cubegrowth.core.substitution import build_substitution
from cubegrowth.core.verification import verify_complex
from cubegrowth.exceptions import CubeGrowthError, NotExpandable
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

# Inizializza il router
router = APIRouter(tags=["series"])


def _unprocessable(e: Exception) -> HTTPException:
    logger.warning(f"⚠️ Richiesta non elaborabile: {type(e).__name__}: {e}")
    return HTTPException(status_code=422, detail=f"{type(e).__name__}: {e}")


@router.post("/series", response_model=SeriesResponse)
def series(request: SeriesRequest):
    """
    Serie di crescita G(x, y) per la sostituzione richiesta.

    Returns:
        SeriesResponse: Funzione razionale, forma JSON e sviluppo in serie
    """
    complex_ = load_request_complex(request)
    try:
        substitution = build_substitution(complex_, request.vars)
        f = growth_series(complex_, request.source, request.target, substitution, request.convention)
        try:
            expansion = expand(f, request.max_degree).to_json()
        except NotExpandable:
            expansion = None
        logger.info(f"✅ Serie {request.source} -> {request.target} su '{complex_.name}': {f}")
        return SeriesResponse(
            complex_name=complex_.name,
            source=request.source,
            target=request.target,
            vars=request.vars,
            series=str(f),
            rational=f.to_json(),
            expansion=expansion,
        )
    except (CubeGrowthError, ValueError) as e:
        raise _unprocessable(e)
    except Exception as e:
        logger.error(f"❌ ERRORE: {traceback.format_exc()}")
        raise HTTPException(status_code=500, detail=f"Errore nel calcolo della serie: {str(e)}")


@router.post("/reciprocity", response_model=ReciprocityReport)
def reciprocity(request: ReciprocityRequest):
    """Verifica G(1/t) = (-1)^n G(t) per la coppia di vertici richiesta."""
    complex_ = load_request_complex(request)
    try:
        return check_reciprocity(complex_, request.source, request.target, request.vars, request.convention)
    except (CubeGrowthError, ValueError) as e:
        raise _unprocessable(e)
    except Exception as e:
        logger.error(f"❌ ERRORE: {traceback.format_exc()}")
        raise HTTPException(status_code=500, detail=f"Errore nella verifica di reciprocità: {str(e)}")


@router.post("/verify", response_model=VerificationReport)
def verify(request: VerifyRequest):
    """Validazione NPC, stato euleriano, identità strutturali e controlli incrociati."""
    complex_ = load_request_complex(request)
    try:
        return verify_complex(complex_, request.max_degree)
    except (CubeGrowthError, ValueError) as e:
        raise _unprocessable(e)
    except Exception as e:
        logger.error(f"❌ ERRORE: {traceback.format_exc()}")
        raise HTTPException(status_code=500, detail=f"Errore durante la verifica: {str(e)}")
