import pytest

from blockcore.tables import (
    TableRow,
    alternating_a6_rows,
    exceptional_rows,
    export,
    format_rows,
    lookup,
    parse_rows,
    sporadic_rows,
)

SPORADIC = [
    ("J_1", 2, (76,), 1),
    ("2.J_2", 3, (126, 126), 1),
    ("M_23", 3, (231,), 1),
    ("2.HS", 3, (924, 924), 1),
    ("McL", 2, (3520,), 1),
    ("3.McL", 2, (6336,), 2),
    ("Co_3", 2, (129536,), 1),
    ("Fi_22", 2, (2555904,), 1),
    ("Ly", 3, (18395586,), 1),
    ("Fi_23", 2, (73531392,), 1),
    ("2.Co_1", 3, (59153976,), 1),
    ("J_4", 3, (786127419,), 1),
]


def test_sporadic_rows_verbatim():
    got = [(r.group_label, r.p, r.ibr_degrees, r.multiplicity) for r in sporadic_rows()]
    assert got == SPORADIC


def test_exceptional_rows():
    rows = exceptional_rows()
    assert [(r.group_label, r.p, r.ibr_degrees) for r in rows] == [
        ("2.G_2(4)", 3, (1800, 1800)),
        ("2.G_2(4)", 3, (3744, 3744)),
    ]
    assert all(r.lift_profile == "unique-p-rational" for r in rows)


@pytest.mark.parametrize(
    "label, p, degrees",
    [("J_1", 2, [(76,)]), ("Ly", 3, [(18395586,)]), ("M_11", 2, []), ("12_1.L_3(4)", 5, [])],
)
def test_lookup(label, p, degrees):
    assert [r.ibr_degrees for r in lookup(label, p)] == degrees


def test_lookup_exceptional():
    assert len(lookup("2.G_2(4)", 3)) == 2


def test_row_invariants():
    for r in sporadic_rows() + exceptional_rows() + alternating_a6_rows():
        assert r.defect == 1
        assert len(set(r.ibr_degrees)) == 1
        # p = 3 rows may have one or three lifts, p = 2 rows one or two
        if r.p not in (2, 3):
            assert r.lift_profile == "unique-p-rational"
        if r.lift_profile == "three-lifts-two-conjugate":
            assert r.p == 3
        if r.lift_profile == "two-lifts":
            assert r.p == 2


def test_serialization_round_trip(tmp_path):
    for which, rows in (("sporadic", sporadic_rows()), ("exceptional", exceptional_rows())):
        text = format_rows(rows)
        assert parse_rows(text) == rows
        path = tmp_path / f"{which}.tsv"
        export(which, path)
        assert path.read_text(encoding="utf-8") == text


def test_row_validation():
    with pytest.raises(ValueError):
        TableRow("X", 2, (1,), 1, "three-lifts")
    with pytest.raises(ValueError):
        TableRow.from_line("X\t2\t1\t1")
