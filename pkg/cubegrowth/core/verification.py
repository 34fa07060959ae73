"""
Verifica completa di un complesso in un solo passaggio.

Se la validazione NPC fallisce le altre verifiche non vengono eseguite. Lo
stato euleriano è informativo: decide solo l'applicabilità della reciprocità
e dell'identità J·[*]·J·[*] = I.
"""
from typing import List

from cubegrowth.config import DEFAULT_MAX_DEGREE
from cubegrowth.core.automaton import build_automaton, weighted_counts
from cubegrowth.core.cubical import CubicalComplex
from cubegrowth.core.eulerian import eulerian_status
from cubegrowth.core.examples import hyperplane_notes
from cubegrowth.core.hyperplanes import hyperplane_classes
from cubegrowth.core.links import validate_npc
from cubegrowth.core.models import StructureCheck, VerificationReport
from cubegrowth.core.reciprocity import check_reciprocity
from cubegrowth.core.series import expand, growth_series_table
from cubegrowth.core.structure import verify_structure
from cubegrowth.core.substitution import single_variable
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)


def cross_checks(complex_: CubicalComplex, max_degree: int = DEFAULT_MAX_DEGREE,
                 eulerian: bool = False) -> List[StructureCheck]:
    """Avanti contro indietro, sviluppo contro conteggio sull'automa, reciprocità."""
    substitution = single_variable(complex_)
    forward = build_automaton(complex_, "forward")
    by_forward = growth_series_table(complex_, substitution, "forward")
    by_reverse = growth_series_table(complex_, substitution, "reverse")
    pairs = [(x, y) for x in complex_.vertices for y in complex_.vertices]

    conventions = [f"{x} -> {y}" for x, y in pairs if by_forward[(x, y)] != by_reverse[(x, y)]]
    counts = []
    for x, y in pairs:
        counted = weighted_counts(forward, complex_, x, y, substitution, max_degree).as_list()
        expanded = expand(by_forward[(x, y)], max_degree).as_list()
        if counted != expanded:
            counts.append(f"{x} -> {y}: {counted} ≠ {expanded}")

    reciprocity = []
    if eulerian:
        for x, y in pairs:
            report = check_reciprocity(complex_, x, y, substitution)
            if not (report.holds and report.routes_agree):
                reciprocity.append(f"{x} -> {y}: {report.verdict()}")

    return [
        StructureCheck(name="forward series = reverse series", passed=not conventions,
                       witnesses=conventions[:10]),
        StructureCheck(name=f"automaton counts = series expansion through degree {max_degree}",
                       passed=not counts, witnesses=counts[:10]),
        StructureCheck(name="reciprocity G(1/t) = (-1)^n G(t) for every vertex pair",
                       passed=eulerian and not reciprocity, applicable=eulerian,
                       witnesses=reciprocity[:10]),
    ]


def verify_complex(complex_: CubicalComplex, max_degree: int = DEFAULT_MAX_DEGREE) -> VerificationReport:
    npc = validate_npc(complex_)
    if not npc.passed:
        logger.warning(f"⚠️ '{complex_.name}' non supera la validazione NPC: verifiche successive saltate")
        return VerificationReport(complex_name=complex_.name, npc=npc, passed=False)

    status = eulerian_status(complex_)
    structure = verify_structure(complex_)
    extra = cross_checks(complex_, max_degree, status.eulerian)
    notes = hyperplane_notes(complex_, len(hyperplane_classes(complex_)))
    passed = structure.passed and all(c.passed for c in extra if c.applicable)
    logger.info(f"{'✅' if passed else '❌'} Verifica di '{complex_.name}' {'superata' if passed else 'fallita'}")
    return VerificationReport(
        complex_name=complex_.name,
        npc=npc,
        eulerian=status,
        structure=structure,
        cross_checks=extra,
        notes=notes,
        passed=passed,
    )
