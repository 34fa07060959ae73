"""
Algebra esatta: polinomi di Laurent, funzioni razionali, eliminazione senza frazioni.
"""
from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.matrices import LaurentMatrix
from cubegrowth.algebra.rational import RationalFunction

__all__ = ["LaurentPolynomial", "LaurentMatrix", "RationalFunction"]
