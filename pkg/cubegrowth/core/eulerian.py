"""
Condizione euleriana: ogni cubo massimale ha dimensione n e ogni link di cubo
ha la caratteristica di Eulero di una sfera della sua dimensione.
"""
from cubegrowth.core.cubical import CubicalComplex
from cubegrowth.core.links import link, link_of_cube
from cubegrowth.core.models import CubeEulerEntry, EulerianReport
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)


def eulerian_status(complex_: CubicalComplex) -> EulerianReport:
    """Calcola il report euleriano (χ(∅) = 0 e dim ∅ = -1)."""
    n = complex_.dimension
    lower = [c for c in complex_.maximal_cubes() if complex_.dim_of(c) < n]

    entries = []
    for cube in complex_.cubes():
        lk = link_of_cube(complex_, cube)
        required = 1 + (-1) ** lk.dimension if lk.dimension >= 0 else 0
        chi = lk.euler_characteristic()
        entries.append(CubeEulerEntry(
            cube=cube,
            dimension=complex_.dim_of(cube),
            link_dimension=lk.dimension,
            link_euler_characteristic=chi,
            required=required,
            ok=chi == required,
        ))

    spheres = all(
        link(complex_, v).as_simplicial().reduced_euler_characteristic() == (-1) ** (n - 1)
        for v in complex_.vertices
    ) if n > 0 else False

    eulerian = not lower and all(entry.ok for entry in entries)
    if eulerian:
        logger.info(f"✅ '{complex_.name}' è euleriano di dimensione {n}")
    else:
        failed = [entry.cube for entry in entries if not entry.ok]
        logger.info(f"ℹ️ '{complex_.name}' non è euleriano (cubi: {', '.join(failed[:5]) or '-'})")

    return EulerianReport(
        complex_name=complex_.name,
        dimension=n,
        euler_characteristic=complex_.euler_characteristic(),
        pure=not lower,
        non_maximal_dimension=lower,
        cubes=entries,
        vertex_links_spheres=spheres,
        eulerian=eulerian,
    )
