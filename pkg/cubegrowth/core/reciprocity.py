"""
Verifica della reciprocità G(1/t) = (-1)^n G(t).

Il controllo è simbolico finché il sistema resta entro MAX_SYMBOLIC_STATES;
oltre il limite, con più variabili, si valuta in punti razionali casuali
generati con seme fisso.
"""
import random
from fractions import Fraction
from typing import Dict, List

from cubegrowth.config import PROBABILISTIC_POINTS, RANDOM_SEED
from cubegrowth.core.cubical import CubicalComplex
from cubegrowth.core.eulerian import eulerian_status
from cubegrowth.core.models import ReciprocityReport
from cubegrowth.core.series import evaluate_series, growth_series, reciprocal_series
from cubegrowth.core.substitution import Substitution, build_substitution
from cubegrowth.exceptions import ReciprocalUndefined, SingularSystem, SymbolicSizeExceeded
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

RECIPROCITY_SUBSTITUTIONS = ("single", "per-hyperplane")


def check_reciprocity(complex_: CubicalComplex, x: str, y: str, substitution="single",
                      convention: str = "forward") -> ReciprocityReport:
    """
    Confronta la serie reciproca (per matrice e per sostituzione) con (-1)^n G.

    Raises:
        ReciprocalUndefined: se I - Q̄ è singolare
    """
    if isinstance(substitution, str):
        if substitution not in RECIPROCITY_SUBSTITUTIONS:
            raise ValueError(
                f"la reciprocità richiede una sostituzione invariante per *: "
                f"{', '.join(RECIPROCITY_SUBSTITUTIONS)}"
            )
        substitution = build_substitution(complex_, substitution)
    if not substitution.is_star_invariant():
        raise ValueError(f"la sostituzione '{substitution.kind}' non è invariante per *")

    status = eulerian_status(complex_)
    n = status.dimension
    sign = (-1) ** n
    common = dict(
        complex_name=complex_.name, source=x, target=y, substitution=substitution.kind,
        dimension=n, eulerian=status.eulerian, sign=sign,
    )

    try:
        series = growth_series(complex_, x, y, substitution, convention)
        by_matrix = reciprocal_series(complex_, x, y, substitution, convention, route="matrix")
        by_substitution = reciprocal_series(complex_, x, y, substitution, convention, route="substitution")
    except SymbolicSizeExceeded as e:
        logger.warning(f"⚠️ {e}: passo al controllo probabilistico")
        return _probabilistic(complex_, x, y, substitution, convention, common)

    report = ReciprocityReport(
        **common,
        mode="symbolic",
        series=str(series),
        series_json=series.to_json(),
        reciprocal_matrix=str(by_matrix),
        reciprocal_substitution=str(by_substitution),
        routes_agree=by_matrix == by_substitution,
        holds=by_matrix == series * sign,
    )
    logger.info(f"🔁 Reciprocità {x} -> {y} su '{complex_.name}': {report.verdict()}")
    return report


def _random_points(variables, count: int) -> List[Dict[str, Fraction]]:
    generator = random.Random(RANDOM_SEED)
    points = []
    for _ in range(count):
        points.append({
            v: Fraction(generator.randint(2, 97), generator.randint(1, 97)) for v in variables
        })
    return points


def _probabilistic(complex_: CubicalComplex, x: str, y: str, substitution: Substitution,
                   convention: str, common: dict) -> ReciprocityReport:
    sign = common["sign"]
    agree, holds = True, True
    used = []
    for point in _random_points(substitution.variables, 3 * PROBABILISTIC_POINTS):
        if len(used) == PROBABILISTIC_POINTS:
            break
        inverse = {v: 1 / value for v, value in point.items()}
        try:
            value = evaluate_series(complex_, x, y, substitution, point, convention)
            by_matrix = evaluate_series(complex_, x, y, substitution, point, convention, reciprocal=True)
            by_substitution = evaluate_series(complex_, x, y, substitution, inverse, convention)
        except (SingularSystem, ReciprocalUndefined):
            # punto sfortunato: radice del determinante
            continue
        agree = agree and by_matrix == by_substitution
        holds = holds and by_matrix == sign * value
        used.append({v: str(c) for v, c in point.items()})

    report = ReciprocityReport(
        **common,
        mode="probabilistic",
        points=used,
        routes_agree=agree,
        holds=holds and bool(used),
    )
    logger.info(f"🎲 Reciprocità probabilistica {x} -> {y} su {len(used)} punti: {report.verdict()}")
    return report
