"""
Complessi di esempio inclusi nel pacchetto.

fig1 e genus2 riproducono i due esempi di riferimento; square, cube3 e tree4
sono semplicemente connessi; flagfail viola la condizione flag.
"""
import itertools
import json
import os
from functools import lru_cache
from typing import Dict, List, Tuple

from cubegrowth.config import BUNDLED_EXAMPLES, DATA_DIR
from cubegrowth.core.cubical import CubicalComplex, load_complex
from cubegrowth.utils.logging import get_logger

logger = get_logger(__name__)

BUNDLED_PREFIX = "bundled:"


def fig1_document() -> dict:
    """Due vertici x, y; spigolo a da x a y; cappio b in y."""
    return {
        "name": "fig1",
        "cubes": {
            "0": ["x", "y"],
            "1": [{"id": "a", "faces": ["x", "y"]}, {"id": "b", "faces": ["y", "y"]}],
        },
    }


def standard_cube_document(k: int, name: str) -> dict:
    """
    Cubo standard [0,1]^k: i cubi sono parole su {0, 1, x}, dove x marca
    una coordinata libera; ∂(i,ε) sostituisce la i-esima x con ε.
    """
    levels: Dict[str, list] = {str(d): [] for d in range(k + 1)}
    for word in itertools.product("01x", repeat=k):
        cube = "".join(word)
        free = [position for position, ch in enumerate(cube) if ch == "x"]
        if not free:
            levels["0"].append(cube)
            continue
        faces = []
        for position in free:
            for epsilon in "01":
                faces.append(cube[:position] + epsilon + cube[position + 1:])
        levels[str(len(free))].append({"id": cube, "faces": faces})
    return {"name": name, "cubes": levels}


def tree_document(length: int = 4) -> dict:
    """Cammino p0 - p1 - ... - p_length con spigoli e1..e_length."""
    return {
        "name": f"tree{length}",
        "vertices": [f"p{i}" for i in range(length + 1)],
        "edges": {f"e{i}": [f"p{i - 1}", f"p{i}"] for i in range(1, length + 1)},
    }


def flagfail_document() -> dict:
    """
    Tre quadrati attorno al vertice v, a due a due incollati lungo e1, e2, e3:
    il link di v è un triangolo vuoto.
    """
    pairs = [(1, 2), (2, 3), (1, 3)]
    vertices = ["v", "v1", "v2", "v3"] + [f"w{i}{j}" for i, j in pairs]
    edges = {f"e{i}": ["v", f"v{i}"] for i in (1, 2, 3)}
    squares = {}
    for i, j in pairs:
        edges[f"f{i}{j}"] = [f"v{i}", f"w{i}{j}"]
        edges[f"g{i}{j}"] = [f"v{j}", f"w{i}{j}"]
        squares[f"s{i}{j}"] = [f"e{j}", f"f{i}{j}", f"e{i}", f"g{i}{j}"]
    return {"name": "flagfail", "vertices": vertices, "edges": edges, "squares": squares}


# Superficie di genere 2: quoziente della tassellazione del piano iperbolico
# con sei quadrati per vertice, per un sottogruppo di indice 4 del gruppo
# generato dalle riflessioni s1..s6.
# I vertici sono Z2 x Z2; la riflessione s_i trasla di (1,0) se i è dispari,
# di (0,1) se i è pari.
GENUS2_VERTICES: Dict[Tuple[int, int], str] = {(0, 0): "x", (1, 0): "y", (1, 1): "z", (0, 1): "w"}


def genus2_document() -> dict:
    """4 vertici, 12 spigoli, 6 quadrati; ogni link è un 6-ciclo."""
    names = GENUS2_VERTICES
    edges: Dict[str, List[str]] = {}
    for i in range(1, 7):
        if i % 2:
            # (0,0) -> (1,0) e (0,1) -> (1,1)
            edges[f"e{i}x"] = [names[(0, 0)], names[(1, 0)]]
            edges[f"e{i}w"] = [names[(0, 1)], names[(1, 1)]]
        else:
            # (0,0) -> (0,1) e (1,0) -> (1,1)
            edges[f"e{i}x"] = [names[(0, 0)], names[(0, 1)]]
            edges[f"e{i}y"] = [names[(1, 0)], names[(1, 1)]]

    squares: Dict[str, List[str]] = {}
    for i in range(1, 7):
        j = i % 6 + 1
        if i % 2:
            squares[f"s{i}{j}"] = [f"e{j}x", f"e{j}y", f"e{i}x", f"e{i}w"]
        else:
            squares[f"s{i}{j}"] = [f"e{j}x", f"e{j}w", f"e{i}x", f"e{i}y"]

    return {
        "name": "genus2",
        "vertices": [names[(0, 0)], names[(1, 0)], names[(1, 1)], names[(0, 1)]],
        "edges": edges,
        "squares": squares,
    }


_BUILDERS = {
    "fig1": fig1_document,
    "square": lambda: standard_cube_document(2, "square"),
    "cube3": lambda: standard_cube_document(3, "cube3"),
    "tree4": lambda: tree_document(4),
    "flagfail": flagfail_document,
    "genus2": genus2_document,
}


def bundled_examples() -> List[Tuple[str, dict]]:
    """Coppie (nome, documento) degli esempi inclusi."""
    return [(name, _BUILDERS[name]()) for name in BUNDLED_EXAMPLES]


def load_bundled(name: str) -> CubicalComplex:
    """Carica un esempio incluso per nome."""
    if name not in _BUILDERS:
        raise KeyError(f"esempio sconosciuto: '{name}' (disponibili: {', '.join(BUNDLED_EXAMPLES)})")
    return load_complex(_BUILDERS[name]())


def shipped_path(filename: str) -> str:
    """Percorso di un file JSON distribuito in cubegrowth/data."""
    return os.path.join(DATA_DIR, filename)


# Numero di classi di iperpiani indicato dalla costruzione di riferimento,
# quando differisce da quello calcolato con union-find.
DOCUMENTED_HYPERPLANE_COUNTS: Dict[str, int] = {"genus2": 12}


@lru_cache(maxsize=None)
def _bundled(name: str) -> CubicalComplex:
    return load_bundled(name)


def hyperplane_notes(complex_: CubicalComplex, count: int) -> List[str]:
    """
    Note sul numero di classi di iperpiani per gli esempi inclusi il cui
    conteggio documentato non coincide con quello calcolato.
    """
    notes = []
    for name, documented in DOCUMENTED_HYPERPLANE_COUNTS.items():
        if documented == count or complex_ != _bundled(name):
            continue
        edges = len(complex_.cubes_of_dim(1))
        notes.append(
            f"hyperplane classes: union-find finds {count}, the reference construction "
            f"of '{name}' lists {documented}"
            + (f" (the number of edges, {edges // count} per class)" if documented == edges and count else "")
        )
        logger.info(f"ℹ️ '{complex_.name}': {count} classi di iperpiani contro {documented} documentate")
    return notes


def load_shipped(filename: str) -> dict:
    with open(shipped_path(filename), "r", encoding="utf-8") as f:
        return json.load(f)


def resolve_input(reference: str) -> CubicalComplex:
    """
    Carica un complesso da 'bundled:<nome>', da un nome di file in
    cubegrowth/data o da un percorso.
    """
    if reference.startswith(BUNDLED_PREFIX):
        return load_bundled(reference[len(BUNDLED_PREFIX):])
    if not os.path.exists(reference) and os.path.exists(shipped_path(reference)):
        logger.debug(f"📂 Uso il file distribuito {shipped_path(reference)}")
        return load_complex(shipped_path(reference))
    return load_complex(reference)
