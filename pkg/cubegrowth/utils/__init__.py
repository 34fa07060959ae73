"""
Inizializzazione del package utils.
"""
