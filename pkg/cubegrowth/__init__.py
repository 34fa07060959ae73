"""
cubegrowth - serie di crescita di complessi cubici a curvatura non positiva
Versione: 1.0.0
"""
__version__ = "1.0.0"
