import pytest

from cubegrowth.config import BUNDLED_EXAMPLES
from cubegrowth.core.cubical import load_complex
from cubegrowth.core.eulerian import eulerian_status
from cubegrowth.core.examples import (
    bundled_examples,
    hyperplane_notes,
    load_bundled,
    load_shipped,
    resolve_input,
    shipped_path,
    standard_cube_document,
)
from cubegrowth.core.hyperplanes import hyperplane_classes
from cubegrowth.core.links import validate_npc
from cubegrowth.exceptions import CubicalIdentityViolation, MalformedDocument


def test_bundled_names():
    assert [name for name, _ in bundled_examples()] == list(BUNDLED_EXAMPLES)


def test_every_bundled_example_loads():
    for name, document in bundled_examples():
        assert load_complex(document).name == name


def test_genus2_counts(genus2):
    assert len(genus2.vertices) == 4
    assert len(genus2.edges) == 12
    assert len(genus2.squares) == 6
    assert genus2.euler_characteristic() == -2
    assert len(hyperplane_classes(genus2)) == 6
    assert validate_npc(genus2).passed


def test_fig1_counts(fig1):
    assert len(fig1.vertices) == 2
    assert len(fig1.edges) == 2


def test_standard_cube_faces():
    document = standard_cube_document(2, "square")
    entries = {entry["id"]: entry["faces"] for entry in document["cubes"]["2"]}
    assert entries == {"xx": ["0x", "1x", "x0", "x1"]}


def test_shipped_files_match_bundled_complexes():
    assert load_complex(shipped_path("genus2.json")) == load_bundled("genus2")
    assert load_complex(shipped_path("fig1.json")) == load_bundled("fig1")
    assert load_complex(load_shipped("fig1.json")) == load_bundled("fig1")


def test_shipped_broken_file():
    with pytest.raises(CubicalIdentityViolation):
        resolve_input("broken.json")


def test_resolve_input(tmp_path, fig1):
    assert resolve_input("bundled:genus2") == load_bundled("genus2")
    assert resolve_input("fig1.json") == fig1
    path = tmp_path / "fig1.json"
    path.write_text(open(shipped_path("fig1.json"), encoding="utf-8").read(), encoding="utf-8")
    assert resolve_input(str(path)) == fig1
    with pytest.raises(KeyError):
        resolve_input("bundled:torus")
    with pytest.raises(MalformedDocument):
        resolve_input(str(tmp_path / "missing.json"))


def test_only_genus2_is_eulerian():
    eulerian = [name for name in BUNDLED_EXAMPLES if eulerian_status(load_bundled(name)).eulerian]
    assert eulerian == ["genus2"]


GENUS2_NOTE = (
    "hyperplane classes: union-find finds 6, the reference construction "
    "of 'genus2' lists 12 (the number of edges, 2 per class)"
)


def test_genus2_hyperplane_count_note(genus2):
    assert hyperplane_notes(genus2, len(hyperplane_classes(genus2))) == [GENUS2_NOTE]


def test_no_note_when_counts_agree_or_complex_differs(genus2, fig1):
    assert hyperplane_notes(genus2, 12) == []
    assert hyperplane_notes(fig1, len(hyperplane_classes(fig1))) == []
    renamed = dict(load_shipped("genus2.json"), name="surface")
    assert hyperplane_notes(load_complex(renamed), 6) == []
