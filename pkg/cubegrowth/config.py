"""
Configurazioni globali della libreria.
Centralizza i percorsi, i limiti di calcolo e le impostazioni del server.
"""
import os
from pathlib import Path
from dotenv import load_dotenv  # type: ignore

# Carica variabili d'ambiente
load_dotenv()

# Percorsi base
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(BASE_DIR, "data")

# Logger
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
LOG_FILE = os.getenv("CUBEGROWTH_LOG_FILE", "")
API_LOG_LEVEL = os.getenv("API_LOG_LEVEL", "INFO").upper()

# Configurazioni server
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))

# Limiti per il calcolo simbolico multivariato
MAX_SYMBOLIC_STATES = int(os.getenv("MAX_SYMBOLIC_STATES", "20"))

# Verifica probabilistica: numero di punti razionali e seme del generatore
PROBABILISTIC_POINTS = int(os.getenv("PROBABILISTIC_POINTS", "3"))
RANDOM_SEED = int(os.getenv("RANDOM_SEED", "2014"))

# Valori predefiniti per CLI e API
DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_LEN = 4
DEFAULT_VARIABLE = "t"

# Esempi inclusi nel pacchetto
BUNDLED_EXAMPLES = ("fig1", "square", "cube3", "tree4", "flagfail", "genus2")


def ensure_directories():
    """Crea la directory del file di log, se il log su file è attivo."""
    if LOG_FILE:
        Path(os.path.dirname(os.path.abspath(LOG_FILE))).mkdir(parents=True, exist_ok=True)
