"""
Funzioni razionali su polinomi di Laurent.

L'uguaglianza è verificata per moltiplicazione incrociata, senza MCD
multivariato. Nel caso a una variabile esiste una forma canonica ridotta,
usata per la visualizzazione e per i confronti testuali.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Mapping

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.rings import from_ring, polynomial_ring, to_ring
from cubegrowth.exceptions import NotExpandable


class RationalFunction:
    """Quoziente num/den di polinomi di Laurent sulle stesse variabili."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPolynomial, denominator: LaurentPolynomial | None = None):
        if denominator is None:
            denominator = LaurentPolynomial.constant(numerator.variables)
        if denominator.is_zero():
            raise ZeroDivisionError("denominatore nullo")
        if numerator.variables != denominator.variables:
            raise ValueError("numeratore e denominatore su variabili diverse")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def variables(self):
        return self.numerator.variables

    @classmethod
    def constant(cls, variables, value=1):
        return cls(LaurentPolynomial.constant(variables, value))

    # Aritmetica

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.variables != self.variables:
                raise ValueError(f"variabili diverse: {self.variables} e {other.variables}")
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        return RationalFunction.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def invert_variables(self) -> "RationalFunction":
        """Sostituzione t -> 1/t in tutte le variabili."""
        return RationalFunction(self.numerator.invert_variables(), self.denominator.invert_variables())

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        value = self.denominator.evaluate(point)
        if not value:
            raise ZeroDivisionError(f"denominatore nullo nel punto {dict(point)}")
        return self.numerator.evaluate(point) / value

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    # Uguaglianza per moltiplicazione incrociata

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.variables != self.variables:
            return False
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # type: ignore[assignment]

    # Forma normale

    def normalized(self) -> "RationalFunction":
        """
        Forma normale della funzione razionale.

        Con una sola variabile: fattori monomiali raccolti, MCD eliminato,
        denominatore intero primitivo con termine di grado minimo positivo.
        Con più variabili si raccolgono solo monomi e contenuto.
        """
        variables = self.variables
        num_shift = self.numerator.min_exponents()
        den_shift = self.denominator.min_exponents()
        if self.numerator.is_zero():
            return RationalFunction(LaurentPolynomial.zero(variables), LaurentPolynomial.constant(variables))
        numerator = self.numerator.shift(tuple(-e for e in num_shift))
        denominator = self.denominator.shift(tuple(-e for e in den_shift))
        offset = tuple(a - b for a, b in zip(num_shift, den_shift))

        if len(variables) == 1:
            R = polynomial_ring(variables, (numerator, denominator))
            _, p, q = to_ring(R, numerator).cofactors(to_ring(R, denominator))
            numerator, denominator = from_ring(variables, p), from_ring(variables, q)

        # Sposta il monomio residuo dove ha esponente positivo
        numerator = numerator.shift(tuple(max(e, 0) for e in offset))
        denominator = denominator.shift(tuple(max(-e, 0) for e in offset))

        factor = _primitive_factor(denominator)
        return RationalFunction(numerator.scale(factor), denominator.scale(factor))

    def is_univariate(self) -> bool:
        return len(self.variables) == 1

    # Serie di potenze

    def expand(self, max_degree: int) -> Dict[tuple, Fraction]:
        """
        Coefficienti dello sviluppo in 0 fino al grado totale max_degree.

        Raises:
            NotExpandable: se il denominatore (senza fattori monomiali comuni)
                ha termine costante nullo o restano esponenti negativi
        """
        reduced = self.normalized()
        numerator, denominator = reduced.numerator, reduced.denominator
        d0 = denominator.homogeneous_component(0)
        if d0.is_zero() or not denominator.is_polynomial():
            raise NotExpandable(f"il denominatore {denominator} non è invertibile in 0")
        if not numerator.is_polynomial():
            raise NotExpandable(f"il numeratore {numerator} ha esponenti negativi")

        d_components = [denominator.homogeneous_component(k) for k in range(denominator.total_degree() + 1)]
        inverse_d0 = _invert_constant_part(d0)
        series = []
        for k in range(max_degree + 1):
            component = numerator.homogeneous_component(k)
            for j in range(1, min(k, len(d_components) - 1) + 1):
                if d_components[j]:
                    component = component - d_components[j] * series[k - j]
            series.append(component * inverse_d0)
        result: Dict[tuple, Fraction] = {}
        for component in series:
            result.update(component.terms)
        return result

    def expand_univariate(self, max_degree: int):
        """Lista dei coefficienti [c0, ..., c_max_degree] per una sola variabile."""
        if not self.is_univariate():
            raise ValueError("expand_univariate richiede una sola variabile")
        coefficients = self.expand(max_degree)
        return [coefficients.get((k,), Fraction(0)) for k in range(max_degree + 1)]

    # Rappresentazione

    def __str__(self):
        reduced = self.normalized()
        numerator, denominator = str(reduced.numerator), str(reduced.denominator)
        if reduced.denominator == 1:
            return numerator
        if len(reduced.numerator.terms) > 1:
            numerator = f"({numerator})"
        if len(reduced.denominator.terms) > 1:
            denominator = f"({denominator})"
        return f"{numerator}/{denominator}"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def to_json(self):
        reduced = self.normalized()
        return {
            "num": reduced.numerator.to_json(),
            "den": reduced.denominator.to_json(),
            "vars": list(self.variables),
        }

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        variables = data["vars"]
        return cls(
            LaurentPolynomial.from_json(variables, data["num"]),
            LaurentPolynomial.from_json(variables, data["den"]),
        )


def _primitive_factor(denominator: LaurentPolynomial) -> Fraction:
    """Fattore che rende il denominatore intero, primitivo e con primo termine positivo."""
    coefficients = list(denominator.terms.values())
    common_den = lcm(*(c.denominator for c in coefficients))
    integers = [int(c * common_den) for c in coefficients]
    content = gcd(*integers)
    factor = Fraction(common_den, content)
    _, lowest = denominator.sorted_terms()[0]
    return -factor if lowest < 0 else factor


def _invert_constant_part(d0: LaurentPolynomial) -> Fraction:
    if not d0.is_constant():
        raise NotExpandable(f"termine di grado zero non costante: {d0}")
    return 1 / d0.constant_term()
