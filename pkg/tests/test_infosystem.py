import numpy as np
import pytest

from conftest import random_system
from ivrough import (DatasetError, InformationSystem, Interval, load_fixture, parse_dataset,
                     read_dataset, serialize_dataset)


def test_table1_fixture(table1):
    assert table1.objects == ("x1", "x2", "x3", "x4", "x5")
    assert table1.attributes == ("a1", "a2", "a3", "a4")
    assert table1.cell("x1", "a1") == Interval(0, 0.5)
    assert table1.cell("x5", "a4") == Interval(0.8, 1)
    assert table1.lo.shape == (5, 4)


def test_face27_fixture(face27):
    assert face27.n_objects == 27
    assert face27.attributes == ("AD", "BC", "AH", "DH", "EH", "GH")
    assert np.all(face27.lo <= face27.hi)


def test_arrays_are_read_only(table1):
    with pytest.raises(ValueError):
        table1.lo[0, 0] = 9.0


def test_unknown_fixture():
    with pytest.raises(KeyError, match="unknown fixture"):
        load_fixture("table9")


@pytest.mark.parametrize("text, message, line, column", [
    ("object,a1\nx1,0.5:0.2\n", "exceeds", 2, 2),
    ("object,a1,a2\nx1,0:1\n", "ragged row", 2, None),
    ("object,a1\nx1,0:1\nx1,0:2\n", "duplicate object", 3, 1),
    ("object,a1,a1\nx1,0:1,0:1\n", "duplicate attribute", 1, 3),
    ("object,a1,a2\nx1,0:1,\n", "missing cell", 2, 3),
    ("object,a1\nx1,zero:1\n", "non-numeric", 2, 2),
    ("object,a1\n,0:1\n", "empty object", 2, 1),
    ("# only a comment\n", "no header", None, None),
    ("object,a1\n", "no objects", None, None),
    ("object\n", "header needs", 1, None),
])
def test_parse_errors_carry_position(text, message, line, column):
    with pytest.raises(DatasetError, match=message) as info:
        parse_dataset(text)
    assert info.value.line == line
    assert info.value.column == column


def test_comments_blank_lines_and_point_cells():
    system = parse_dataset("# header follows\n\nobject,a\n  x, 3 \n# trailing\ny,1:2\n")
    assert system.objects == ("x", "y")
    assert system.cell("x", "a") == Interval(3, 3)


def test_round_trip_fixtures(table1, face27):
    for system in (table1, face27):
        assert parse_dataset(serialize_dataset(system)) == system


def test_round_trip_random(rng):
    for _ in range(20):
        system = random_system(rng, decimals=rng.integers(0, 6))
        assert parse_dataset(serialize_dataset(system)) == system


def test_construction_validation():
    iv = Interval(0, 1)
    with pytest.raises(DatasetError, match="duplicate object"):
        InformationSystem(["x", "x"], ["a"], [[iv], [iv]])
    with pytest.raises(DatasetError, match="cells"):
        InformationSystem(["x"], ["a", "b"], [[iv]])
    with pytest.raises(DatasetError, match="non-interval"):
        InformationSystem(["x"], ["a"], [[(0, 1)]])
    with pytest.raises(DatasetError, match="at least one attribute"):
        InformationSystem(["x"], [], [[]])


def test_from_mapping_keeps_order():
    system = InformationSystem.from_mapping({"q": {"b": (0, 1), "a": Interval(2, 3)}, "p": {"b": (1, 1), "a": (0, 0)}})
    assert system.objects == ("q", "p")
    assert system.attributes == ("b", "a")
    assert system.cell("p", "b") == Interval(1, 1)


def test_canonical_attributes_and_projection(table1):
    assert table1.canonical_attributes(["a3", "a1", "a3"]) == ("a1", "a3")
    with pytest.raises(KeyError, match="unknown attribute"):
        table1.canonical_attributes(["a7"])
    sub = table1.project(["a4", "a2"])
    assert sub.attributes == ("a2", "a4")
    assert sub.column("a4") == table1.column("a4")
    with pytest.raises(ValueError):
        table1.project([])


def test_value_set(table1):
    assert Interval(0.3, 0.6) in table1.value_set("a3")
    assert len(table1.value_set("a1")) == 5


def test_read_dataset_file_and_fixture_name(tmp_path, table1):
    path = tmp_path / "t.csv"
    path.write_text(serialize_dataset(table1))
    assert read_dataset(path) == table1
    assert read_dataset("table1") == table1
    with pytest.raises(OSError):
        read_dataset(tmp_path / "missing.csv")
