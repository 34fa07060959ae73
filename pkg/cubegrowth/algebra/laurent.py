"""
Polinomi di Laurent multivariati a coefficienti razionali esatti.

Rappresentazione sparsa: mappa da vettori di esponenti (interi con segno)
a coefficienti ``Fraction``; i coefficienti nulli non vengono memorizzati.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Exponents = Tuple[int, ...]


def _add_exponents(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPolynomial:
    """Polinomio di Laurent in variabili commutative dichiarate."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponents, object] | None = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        cleaned: Dict[Exponents, Fraction] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(self.variables):
                raise ValueError(
                    f"vettore di esponenti {exponents} incompatibile con le variabili {self.variables}"
                )
            value = Fraction(coefficient)
            if value:
                cleaned[exponents] = cleaned.get(exponents, Fraction(0)) + value
                if not cleaned[exponents]:
                    del cleaned[exponents]
        self.terms: Dict[Exponents, Fraction] = cleaned

    # Costruttori

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, value=1):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables, exponents, coefficient=1):
        return cls(variables, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exponents: 1})

    @classmethod
    def _raw(cls, variables, terms):
        # Costruttore interno: i termini sono già puliti
        polynomial = cls.__new__(cls)
        polynomial.variables = variables
        polynomial.terms = terms
        return polynomial

    # Interrogazioni

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        """Grado totale massimo (0 per il polinomio nullo)."""
        return max((sum(e) for e in self.terms), default=0)

    def min_exponents(self) -> Exponents:
        """Minimo componente per componente degli esponenti (zeri se nullo)."""
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(column) for column in zip(*self.terms))

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exponents in self.terms for e in exponents)

    def homogeneous_component(self, degree: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    # Aritmetica

    def _check(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.variables != self.variables:
                raise ValueError(f"variabili diverse: {self.variables} e {other.variables}")
            return other
        return LaurentPolynomial.constant(self.variables, other)

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            value = terms.get(exponents, 0) + coefficient
            if value:
                terms[exponents] = value
            else:
                terms.pop(exponents, None)
        return LaurentPolynomial._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        terms: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponents = _add_exponents(e1, e2)
                value = terms.get(exponents, 0) + c1 * c2
                if value:
                    terms[exponents] = value
                else:
                    terms.pop(exponents, None)
        return LaurentPolynomial._raw(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("solo i monomi sono invertibili nell'anello di Laurent")
            return self.inverse() ** (-exponent)
        result = LaurentPolynomial.constant(self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor) -> "LaurentPolynomial":
        factor = Fraction(factor)
        if not factor:
            return LaurentPolynomial.zero(self.variables)
        return LaurentPolynomial._raw(self.variables, {e: c * factor for e, c in self.terms.items()})

    def shift(self, exponents: Exponents) -> "LaurentPolynomial":
        """Moltiplica per il monomio con gli esponenti dati."""
        return LaurentPolynomial._raw(
            self.variables, {_add_exponents(e, exponents): c for e, c in self.terms.items()}
        )

    def inverse(self) -> "LaurentPolynomial":
        """Inverso di un monomio."""
        if not self.is_monomial():
            raise ValueError("solo i monomi sono invertibili nell'anello di Laurent")
        (exponents, coefficient), = self.terms.items()
        return LaurentPolynomial._raw(self.variables, {tuple(-e for e in exponents): 1 / coefficient})

    def invert_variables(self) -> "LaurentPolynomial":
        """Applica la sostituzione t -> 1/t a tutte le variabili."""
        return LaurentPolynomial._raw(
            self.variables, {tuple(-e for e in exponents): c for exponents, c in self.terms.items()}
        )

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Valuta il polinomio in un punto razionale (coordinate non nulle)."""
        values = [Fraction(point[v]) for v in self.variables]
        total = Fraction(0)
        for exponents, coefficient in self.terms.items():
            term = coefficient
            for value, e in zip(values, exponents):
                term *= value ** e
            total += term
        return total

    # Confronto e rappresentazione

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(self.variables, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def sorted_terms(self):
        """Termini in ordine di grado totale crescente, poi lessicografico."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exponents, coefficient in self.sorted_terms():
            monomial = format_monomial(self.variables, exponents)
            if not monomial:
                body = _format_fraction(abs(coefficient))
            elif abs(coefficient) == 1:
                body = monomial
            else:
                separator = "*" if len(self.variables) > 1 else ""
                body = f"{_format_fraction(abs(coefficient))}{separator}{monomial}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f"{sign}{body}"
        return text

    def __repr__(self):
        return f"LaurentPolynomial({self.variables!r}, {str(self)!r})"

    def to_json(self):
        """Mappa 'e1,e2,...' -> coefficiente razionale come stringa."""
        return {
            ",".join(str(e) for e in exponents): _format_fraction(coefficient)
            for exponents, coefficient in sorted(self.terms.items())
        }

    @classmethod
    def from_json(cls, variables, data):
        terms = {}
        for key, value in data.items():
            exponents = tuple(int(e) for e in key.split(",")) if key else ()
            terms[exponents] = Fraction(value)
        return cls(variables, terms)


def format_monomial(variables, exponents) -> str:
    """Forma testuale di un monomio (stringa vuota per il monomio 1)."""
    factors = []
    for name, e in zip(variables, exponents):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    separator = "*" if len(variables) > 1 else ""
    return separator.join(factors)


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
