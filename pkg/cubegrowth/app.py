"""
Punto di ingresso del server HTTP.
Configura e avvia l'applicazione FastAPI.
"""
import uvicorn  # type: ignore
from fastapi import FastAPI  # type: ignore
from fastapi.middleware.cors import CORSMiddleware  # type: ignore
from cubegrowth import __version__
from cubegrowth.api import router
from cubegrowth.config import API_HOST, API_LOG_LEVEL, API_PORT, BUNDLED_EXAMPLES
from cubegrowth.utils.logging import setup_logging

# Inizializza il logger
logger = setup_logging(API_LOG_LEVEL)

# Crea l'app FastAPI
app = FastAPI(
    title="cubegrowth",
    description="API per serie di crescita e reciprocità di complessi cubici",
    version=__version__
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Includi tutti i router
app.include_router(router)


@app.get("/")
def root():
    """
    Ritorna info basilari sull'API.
    """
    return {
        "app": "cubegrowth",
        "version": __version__,
        "examples": list(BUNDLED_EXAMPLES),
        "features": [
            "Validazione NPC dei link dei vertici",
            "Automa dei cammini cubici normali",
            "Serie di crescita come funzioni razionali esatte",
            "Verifica della reciprocità e delle identità strutturali",
        ]
    }


if __name__ == "__main__":
    uvicorn.run(app, host=API_HOST, port=API_PORT)
