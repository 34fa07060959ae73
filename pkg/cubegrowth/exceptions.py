"""
Eccezioni della libreria.

Le verifiche che producono un esito (report NPC, report euleriano, identità
strutturali, reciprocità) non sollevano eccezioni: riportano l'esito.
Le eccezioni segnalano input non validi o calcoli impossibili.
"""


class CubeGrowthError(Exception):
    """Classe base per tutti gli errori della libreria."""


# Complessi cubici

class ComplexError(CubeGrowthError):
    """Errore nella definizione o nell'uso di un complesso cubico."""


class MalformedDocument(ComplexError):
    """Documento JSON sintatticamente o strutturalmente non valido."""


class DanglingFaceReference(ComplexError):
    """Una faccia fa riferimento a un cubo inesistente o di dimensione errata."""


class CubicalIdentityViolation(ComplexError):
    """Le mappe di faccia non soddisfano l'identità cubica."""

    def __init__(self, cube, i, j, epsilon, delta, left, right):
        self.cube = cube
        self.i = i
        self.j = j
        self.epsilon = epsilon
        self.delta = delta
        super().__init__(
            f"cubo '{cube}': ∂({i},{epsilon})∂({j},{delta}) = '{left}' "
            f"ma ∂({j - 1},{delta})∂({i},{epsilon}) = '{right}'"
        )


class Disconnected(ComplexError):
    """Il 1-scheletro del complesso non è connesso."""


class NotAVertex(ComplexError):
    """L'identificatore richiesto non è un vertice (0-cubo) del complesso."""


class InvalidComplex(ComplexError):
    """Il complesso non supera la validazione NPC (link non flag o non simpliciali)."""


# Automi

class AutomatonError(CubeGrowthError):
    """Errore nell'uso dell'automa delle forme normali."""


class UnknownVertex(AutomatonError):
    """Vertice sconosciuto."""


class UnknownLetter(AutomatonError):
    """Lettera che non appartiene all'alfabeto delle diagonali non banali."""


class NonPositiveWeight(AutomatonError):
    """Una lettera è mappata sul monomio vuoto o con esponenti negativi."""


# Serie

class SeriesError(CubeGrowthError):
    """Errore nel calcolo delle serie razionali."""


class UncoveredSymbol(SeriesError):
    """La sostituzione non copre un simbolo presente nella matrice."""


class SingularSystem(SeriesError):
    """Il sistema lineare (I - Q) non è invertibile sul campo delle frazioni."""


class ReciprocalUndefined(SeriesError):
    """Il sistema (I - Q̄) è singolare: la serie reciproca non esiste."""


class NotExpandable(SeriesError):
    """La funzione razionale non ammette uno sviluppo in serie di potenze in 0."""


class SymbolicSizeExceeded(SeriesError):
    """Il sistema multivariato supera il limite configurato per il calcolo simbolico."""
