"""
Inizializzazione del package API.
"""
from fastapi import APIRouter  # type: ignore
from cubegrowth.api.complex_endpoints import router as complex_router
from cubegrowth.api.series_endpoints import router as series_router

# Aggregatore di tutti i router
router = APIRouter()
router.include_router(complex_router)
router.include_router(series_router)
