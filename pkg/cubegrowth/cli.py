"""
Interfaccia a riga di comando.

Sottocomandi: validate, info, automaton, series, expand, enumerate,
reciprocity, verify. I risultati vanno su stdout, la diagnostica e i log su
stderr. Codici di uscita: 0 successo, 1 validazione fallita o errore della
libreria, 2 uso scorretto.
"""
import argparse
import json
import sys
from typing import List, Optional, TextIO

from cubegrowth import __version__
from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.config import DEFAULT_MAX_DEGREE, DEFAULT_MAX_LEN
from cubegrowth.core.automaton import CONVENTIONS, build_automaton, enumerate_words, export_dot
from cubegrowth.core.cubical import CubicalComplex, diagonals
from cubegrowth.core.eulerian import eulerian_status
from cubegrowth.core.examples import hyperplane_notes, resolve_input
from cubegrowth.core.hyperplanes import hyperplane_classes
from cubegrowth.core.links import validate_npc
from cubegrowth.core.reciprocity import RECIPROCITY_SUBSTITUTIONS, check_reciprocity
from cubegrowth.core.series import expand, growth_series
from cubegrowth.core.substitution import SUBSTITUTION_KINDS, build_substitution
from cubegrowth.core.verification import verify_complex
from cubegrowth.exceptions import CubeGrowthError
from cubegrowth.utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

FORMATS = ("text", "json", "dot")
PAIR_COMMANDS = ("series", "expand", "enumerate", "reciprocity")


class UsageError(Exception):
    """Combinazione di opzioni non valida per il sottocomando."""


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True,
                        help="File JSON del complesso, nome di un file distribuito o bundled:<nome>")
    common.add_argument("--from", dest="source", help="Vertice di partenza")
    common.add_argument("--to", dest="target", help="Vertice di arrivo")
    common.add_argument("--vars", choices=SUBSTITUTION_KINDS, default="single",
                        help="Sostituzione: per-hyperplane, per-diagonal o single (default: single)")
    common.add_argument("--convention", choices=CONVENTIONS, default="forward",
                        help="Convenzione dell'automa (default: forward)")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                        help=f"Grado massimo dello sviluppo (default: {DEFAULT_MAX_DEGREE})")
    common.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN,
                        help=f"Lunghezza massima delle parole (default: {DEFAULT_MAX_LEN})")
    common.add_argument("--format", choices=FORMATS, default="text", help="Formato di output (default: text)")
    common.add_argument("--log-level", default=None, help="Livello di log (default: LOG_LEVEL)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubegrowth",
        description="Serie di crescita e reciprocità per complessi cubici a curvatura non positiva",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    subparsers.add_parser("validate", parents=[common], help="Verifica NPC dei link dei vertici")
    subparsers.add_parser("info", parents=[common], help="Riepilogo del complesso")
    subparsers.add_parser("automaton", parents=[common], help="Automa dei cammini cubici normali")
    subparsers.add_parser("series", parents=[common], help="Serie di crescita G(x, y)")
    subparsers.add_parser("expand", parents=[common], help="Sviluppo in serie di G(x, y)")
    subparsers.add_parser("enumerate", parents=[common], help="Parole accettate da x a y")
    subparsers.add_parser("reciprocity", parents=[common], help="Verifica di G(1/t) = (-1)^n G(t)")
    subparsers.add_parser("verify", parents=[common], help="Tutte le verifiche in un passaggio")
    return parser


def _check_options(args: argparse.Namespace):
    if args.command in PAIR_COMMANDS and (args.source is None or args.target is None):
        raise UsageError(f"'{args.command}' richiede --from e --to")
    if args.format == "dot" and args.command != "automaton":
        raise UsageError("--format dot è disponibile solo per 'automaton'")
    if args.command == "reciprocity" and args.vars not in RECIPROCITY_SUBSTITUTIONS:
        raise UsageError(f"'reciprocity' richiede --vars in {{{', '.join(RECIPROCITY_SUBSTITUTIONS)}}}")
    if args.max_degree < 0 or args.max_len < 0:
        raise UsageError("--max-degree e --max-len devono essere >= 0")


def _emit_json(payload, out: TextIO):
    out.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


# Sottocomandi

def cmd_validate(complex_: CubicalComplex, args, out: TextIO) -> int:
    report = validate_npc(complex_)
    if args.format == "json":
        _emit_json(report.model_dump(), out)
    else:
        out.write(f"complex '{complex_.name}': NPC validation {'PASSED' if report.passed else 'FAILED'}\n")
        out.write(f"  1-skeleton connected: {'yes' if report.connected else 'no'}\n")
        for entry in report.vertices:
            flags = f"simplicial={'yes' if entry.simplicial else 'no'} flag={'yes' if entry.flag else 'no'}"
            out.write(f"  vertex {entry.vertex}: {entry.link_vertices} link vertices, "
                      f"{entry.simplices} simplices, {flags}\n")
        for failure in report.failures():
            out.write(f"  ! {failure}\n")
    return 0 if report.passed else 1


def cmd_info(complex_: CubicalComplex, args, out: TextIO) -> int:
    states = diagonals(complex_)
    partition = hyperplane_classes(complex_)
    status = eulerian_status(complex_)
    counts = {str(k): len(complex_.cubes_of_dim(k)) for k in range(complex_.dimension + 1)}
    info = {
        "name": complex_.name,
        "dimension": complex_.dimension,
        "cubes": counts,
        "euler_characteristic": complex_.euler_characteristic(),
        "diagonals": len(states),
        "trivial_diagonals": sum(1 for s in states if s.trivial),
        "hyperplane_classes": {label: list(members) for label, members in zip(partition.labels, partition.classes)},
        "eulerian": status.eulerian,
        "notes": hyperplane_notes(complex_, len(partition)),
    }
    if args.format == "json":
        _emit_json(info, out)
        return 0
    out.write(f"complex '{complex_.name}', dimension {complex_.dimension}\n")
    out.write("  cubes: " + ", ".join(f"{count} of dim {k}" for k, count in counts.items()) + "\n")
    out.write(f"  Euler characteristic: {info['euler_characteristic']}\n")
    out.write(f"  diagonals: {info['diagonals']} ({info['trivial_diagonals']} trivial)\n")
    out.write(f"  hyperplane classes: {len(partition)}\n")
    for label, members in zip(partition.labels, partition.classes):
        out.write(f"    {label}: {' '.join(members)}\n")
    for note in info["notes"]:
        out.write(f"  note: {note}\n")
    out.write(f"  Eulerian: {'yes' if status.eulerian else 'no'}\n")
    return 0


def cmd_automaton(complex_: CubicalComplex, args, out: TextIO) -> int:
    automaton = build_automaton(complex_, args.convention)
    if args.format == "dot":
        out.write(export_dot(automaton))
        return 0
    if args.format == "json":
        _emit_json({
            "complex": complex_.name,
            "convention": automaton.convention,
            "states": list(automaton.labels),
            "transitions": [[t.source.name, t.target.name, t.label.name] for t in automaton.transitions],
        }, out)
        return 0
    matrix = automaton.transition_matrix()
    name = "Q+" if automaton.convention == "forward" else "Q-"
    out.write(f"automaton '{complex_.name}' ({automaton.convention}): "
              f"{len(automaton.states)} states, {len(automaton.transitions)} transitions\n")
    width = max(len(cell) for cell in list(matrix.labels) + [c for row in matrix.rows() for c in row])
    out.write(f"{name}:\n")
    out.write(" " * (width + 2) + " ".join(label.rjust(width) for label in matrix.labels) + "\n")
    for label, row in zip(matrix.labels, matrix.rows()):
        out.write(f"  {label.rjust(width)} " + " ".join(cell.rjust(width) for cell in row) + "\n")
    return 0


def cmd_series(complex_: CubicalComplex, args, out: TextIO) -> int:
    substitution = build_substitution(complex_, args.vars)
    f = growth_series(complex_, args.source, args.target, substitution, args.convention)
    if args.format == "json":
        _emit_json({
            "complex": complex_.name,
            "from": args.source,
            "to": args.target,
            "vars": args.vars,
            "series": str(f),
            "rational": f.to_json(),
        }, out)
    else:
        out.write(f"{f}\n")
    return 0


def cmd_expand(complex_: CubicalComplex, args, out: TextIO) -> int:
    substitution = build_substitution(complex_, args.vars)
    f = growth_series(complex_, args.source, args.target, substitution, args.convention)
    table = expand(f, args.max_degree)
    if args.format == "json":
        _emit_json({"series": str(f), "max_degree": args.max_degree, "coefficients": table.to_json()}, out)
    elif len(table.variables) == 1:
        out.write("[" + ", ".join(str(c) for c in table.as_list()) + "]\n")
    else:
        out.write(f"{LaurentPolynomial(table.variables, table.coefficients)}\n")
    return 0


def cmd_enumerate(complex_: CubicalComplex, args, out: TextIO) -> int:
    automaton = build_automaton(complex_, args.convention)
    words = enumerate_words(automaton, args.source, args.target, args.max_len)
    names = [[letter.name for letter in word] for word in words]
    if args.format == "json":
        _emit_json(names, out)
    else:
        for word in names:
            out.write((" ".join(word) if word else "ε") + "\n")
    return 0


def cmd_reciprocity(complex_: CubicalComplex, args, out: TextIO) -> int:
    report = check_reciprocity(complex_, args.source, args.target, args.vars, args.convention)
    if args.format == "json":
        _emit_json(report.model_dump(), out)
        return 0
    if report.mode == "symbolic":
        out.write(f"G(t)   = {report.series}\n")
        out.write(f"G(1/t) = {report.reciprocal_substitution}\n")
        out.write(f"matrix route {'agrees' if report.routes_agree else 'DISAGREES'}: {report.reciprocal_matrix}\n")
    else:
        out.write(f"probabilistic check at {len(report.points)} points\n")
    out.write(report.verdict() + "\n")
    return 0


def cmd_verify(complex_: CubicalComplex, args, out: TextIO) -> int:
    report = verify_complex(complex_, args.max_degree)
    if args.format == "json":
        _emit_json(report.model_dump(), out)
        return 0 if report.passed else 1

    out.write(f"complex '{complex_.name}'\n")
    if not report.npc.passed:
        out.write("[FAIL] NPC validation\n")
        for failure in report.npc.failures():
            out.write(f"    {failure}\n")
        out.write("verify: FAILED (remaining checks skipped)\n")
        return 1

    status = report.eulerian
    out.write("[PASS] NPC validation\n")
    out.write(f"[{'PASS' if status.eulerian else 'INFO'}] Eulerian: "
              f"{'yes' if status.eulerian else 'no'} (n={status.dimension})\n")
    for note in report.notes:
        out.write(f"[NOTE] {note}\n")
    for check in report.checks():
        if not check.applicable:
            tag = "N/A"
        elif check.passed:
            tag = "PASS"
        else:
            tag = "FAIL"
        out.write(f"[{tag}] {check.name}\n")
        for witness in check.witnesses:
            out.write(f"    {witness}\n")
    out.write(f"verify: {'PASSED' if report.passed else 'FAILED'}\n")
    return 0 if report.passed else 1


COMMANDS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "automaton": cmd_automaton,
    "series": cmd_series,
    "expand": cmd_expand,
    "enumerate": cmd_enumerate,
    "reciprocity": cmd_reciprocity,
    "verify": cmd_verify,
}


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Esegue un sottocomando e restituisce il codice di uscita."""
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level)
    try:
        _check_options(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"cubegrowth: error: {e}\n")
        return 2

    try:
        complex_ = resolve_input(args.input)
        logger.info(f"▶️ {args.command} su '{complex_.name}'")
        return COMMANDS[args.command](complex_, args, out)
    except CubeGrowthError as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return 1
    except (KeyError, ValueError) as e:
        # esempio sconosciuto o sostituzione non ammessa
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
