"""
Configurazione del sistema di logging della libreria.
"""
import logging
import sys
from logging.handlers import RotatingFileHandler
from cubegrowth.config import LOG_FILE, LOG_LEVEL, ensure_directories

# Formato predefinito del log
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level=None):
    """
    Configura il sistema di logging con output su console e, se richiesto, su file.

    La console usa stderr: lo standard output è riservato ai risultati.

    Args:
        level (str, optional): Livello di log; se assente usa LOG_LEVEL

    Returns:
        logging.Logger: Logger root configurato
    """
    root_logger = logging.getLogger()
    root_logger.setLevel((level or LOG_LEVEL).upper())

    # Svuota gli handler esistenti
    root_logger.handlers = []

    formatter = logging.Formatter(LOG_FORMAT)

    if LOG_FILE:
        ensure_directories()
        # Handler per file con rotazione (10 file da 5MB ciascuno)
        file_handler = RotatingFileHandler(
            LOG_FILE,
            maxBytes=5 * 1024 * 1024,  # 5MB
            backupCount=10
        )
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    # Silenzia i logger troppo verbosi
    logging.getLogger("httpx").setLevel(logging.WARNING)
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)

    return root_logger


def get_logger(name):
    """
    Ottiene un logger configurato per un modulo specifico.

    Args:
        name (str): Nome del modulo che richiede il logger

    Returns:
        logging.Logger: Logger configurato
    """
    return logging.getLogger(name)
