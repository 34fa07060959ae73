"""
Conversioni tra LaurentPolynomial e gli anelli polinomiali sparsi di sympy.

L'aritmetica pesante (prodotti, divisioni esatte, MCD) è delegata a
``sympy.polys.rings``: i polinomi di Laurent vengono prima portati in forma
polinomiale moltiplicando per un monomio. I sistemi lineari si risolvono con
``DomainMatrix.solve_den`` (eliminazione senza frazioni) sullo stesso dominio.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ, ZZ  # type: ignore
from sympy.polys.matrices import DomainMatrix  # type: ignore
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError  # type: ignore
from sympy.polys.rings import ring  # type: ignore

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.exceptions import SingularSystem


def polynomial_ring(variables: Sequence[str], polynomials: Iterable[LaurentPolynomial] = ()):
    """
    Crea l'anello polinomiale adatto a contenere i polinomi dati.

    Il dominio è ZZ se tutti i coefficienti sono interi, altrimenti QQ.

    Returns:
        PolyRing: anello sympy sulle variabili indicate
    """
    integral = all(
        coefficient.denominator == 1
        for polynomial in polynomials
        for coefficient in polynomial.terms.values()
    )
    return ring(list(variables), ZZ if integral else QQ)[0]


def to_ring(R, polynomial: LaurentPolynomial):
    """Converte un polinomio (esponenti non negativi) in un elemento di R."""
    if R.domain == ZZ:
        terms = {e: ZZ(int(c)) for e, c in polynomial.terms.items()}
    else:
        terms = {e: QQ(c.numerator, c.denominator) for e, c in polynomial.terms.items()}
    if any(x < 0 for e in terms for x in e):
        raise ValueError(f"esponenti negativi in {polynomial}: serve prima uno shift")
    return R.from_dict(terms) if terms else R.zero


def from_ring(variables: Sequence[str], element) -> LaurentPolynomial:
    """Converte un elemento di un anello sympy in LaurentPolynomial."""
    return LaurentPolynomial(
        variables,
        {tuple(monom): to_fraction(coefficient) for monom, coefficient in element.terms()},
    )


def to_fraction(coefficient) -> Fraction:
    """Coefficiente di dominio sympy (ZZ o QQ) come Fraction."""
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def solve_sparse(rows: Sequence[Dict[int, object]], rhs: Sequence[Dict[int, object]],
                 columns: int, domain) -> Tuple[object, List[List[object]]]:
    """
    Risolve A·X = B con ``DomainMatrix.solve_den`` in formato sparso.

    Args:
        rows: righe sparse di A (quadrata n×n), elementi di ``domain``
        rhs: righe sparse di B con ``columns`` colonne
        columns: numero di colonne di B
        domain: dominio sympy (ZZ[t, ...], QQ[t, ...] oppure QQ)

    Returns:
        tuple: (den, numeratori) con x[c][i] = numeratori[c][i] / den

    Raises:
        SingularSystem: se A non è invertibile
    """
    n = len(rows)
    if n == 0:
        return None, [[] for _ in range(columns)]
    A = DomainMatrix({i: {j: v for j, v in row.items() if v} for i, row in enumerate(rows)}, (n, n), domain)
    B = DomainMatrix({i: {j: v for j, v in row.items() if v} for i, row in enumerate(rhs)}, (n, columns), domain)
    try:
        xnum, xden = A.solve_den(B)
    except DMNonInvertibleMatrixError as e:
        raise SingularSystem(f"matrice singolare {n}×{n}: {e}") from e

    solutions = [[domain.zero] * n for _ in range(columns)]
    for (i, c), value in xnum.to_dok().items():
        solutions[c][i] = value
    return xden, solutions


def from_fraction(value: Fraction):
    """Fraction come elemento di QQ."""
    return QQ(value.numerator, value.denominator)
