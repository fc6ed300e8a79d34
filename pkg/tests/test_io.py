import numpy as np
import pytest
from hypothesis import given, settings

from conftest import incidences, make_context
from fcakit import (
    FormalContext,
    ParseError,
    load_crime_events,
    parse_csv_crosstable,
    parse_cxt,
    read_context,
    write_csv_crosstable,
    write_cxt,
)

DIAGONAL_CXT = "B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X\n"

EVENT_ROWS = {
    "1": "a c d f h j k P1 P4 P5",
    "2": "b P2 P5 P8 P9 P10",
    "3": "a d e g h j k P6 P7 P3",
    "4": "c h P4 P8 P9",
    "5": "b e f h j P1 P5 P6 P3 P10",
    "6": "a h j P1 P4 P10",
    "7": "c d g P5 P7 P8",
    "8": "a f i j P2 P3 P9 P10",
    "9": "b e h P1 P7 P8 P3 P10",
    "10": "P2 P5 P6",
}


def test_diagonal():
    ctx = parse_cxt(DIAGONAL_CXT)
    assert ctx.shape == (2, 2)
    assert ctx.n_incidences == 2
    assert np.array_equal(ctx.incidence, np.eye(2, dtype=bool))


def test_trailing_newline_optional():
    assert parse_cxt(DIAGONAL_CXT.rstrip("\n")) == parse_cxt(DIAGONAL_CXT)


def test_roundtrip_bytes():
    assert write_cxt(parse_cxt(DIAGONAL_CXT)) == DIAGONAL_CXT


@pytest.mark.parametrize(
    "text, message, lineno",
    [
        ("A\n\n1\n1\n\ng\nm\nX\n", "malformed header", 1),
        ("B\n\nx\n1\n\ng\nm\nX\n", "object count", 3),
        ("B\n\n1\n1\nfoo\ng\nm\nX\n", "line 5 must be empty", 5),
        ("B\n\n3\n2\n\ng1\ng2\ng3\nm1\nm2\nX.\n.X\n", "row count mismatch", 13),
        ("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X.\n", "row length", 11),
        ("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.1\n", "invalid incidence character", 11),
        ("B\n\n2\n2\n\ng1\ng1\nm1\nm2\nX.\n.X\n", "duplicate object name", 7),
        ("B\n\n2\n2\n\ng1\ng2\nm1\nm1\nX.\n.X\n", "duplicate attribute name", 9),
        ("B\n\n1\n1\n\ng\nm\nX\nX\n", "row count mismatch", 9),
    ],
)
def test_cxt_errors(text, message, lineno):
    with pytest.raises(ParseError, match=message) as info:
        parse_cxt(text)
    assert info.value.lineno == lineno
    assert f"at line {lineno}" in str(info.value)


def test_row_count_mismatch_message():
    with pytest.raises(ParseError, match=r"row count mismatch.* at line 13"):
        parse_cxt("B\n\n3\n2\n\ng1\ng2\ng3\nm1\nm2\nX.\n.X\n")


def test_crime_fixture_shape(crime):
    assert crime.shape == (10, 21)
    assert crime.object_names == tuple(str(i) for i in range(1, 11))
    assert crime.attribute_names[:11] == tuple("abcdefghijk")
    assert crime.attribute_names[11:] == tuple(f"P{i}" for i in range(1, 11))


def test_crime_fixture_matches_transcription(crime):
    for event, row in EVENT_ROWS.items():
        g = crime.object_index(event)
        assert set(crime.attribute_labels(crime.row(g))) == set(row.split()), event


def test_crime_fixture_event_seven_check(crime):
    got = crime.attribute_labels(crime.row(crime.object_index("7")))
    assert set(got) == {"c", "d", "g", "P5", "P7", "P8"}


def test_csv_single_cell():
    ctx = parse_csv_crosstable(",a,b\n1,X,\n")
    assert ctx.object_names == ("1",) and ctx.attribute_names == ("a", "b")
    assert ctx.incidence.tolist() == [[True, False]]


@pytest.mark.parametrize(
    "text, message",
    [
        (",a,b\n1,X\n", "ragged row"),
        (",a,a\n1,X,\n", "duplicate attribute"),
        (",a\n1,X\n1,\n", "duplicate object"),
        (",a\n1,yes\n", "unrecognized cell token"),
        ("", "missing header"),
    ],
)
def test_csv_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_csv_crosstable(text)


def test_csv_tokens():
    ctx = parse_csv_crosstable(",a,b,c\nr1,X,x,1\nr2,,0,.\n")
    assert ctx.incidence.tolist() == [[True] * 3, [False] * 3]


def test_csv_fixture_equals_cxt_fixture(crime):
    from_csv = load_crime_events("csv")
    # persons are printed P1 P2 P4 ... P3 P9 P10; columns map by header
    assert from_csv.attribute_names != crime.attribute_names
    aligned = from_csv.reindex(attribute_names=crime.attribute_names)
    assert aligned.object_names == crime.object_names
    assert aligned.attribute_names == crime.attribute_names
    assert np.array_equal(aligned.incidence, crime.incidence)


def test_read_context_by_extension(tmp_path, crime):
    p = tmp_path / "ctx.cxt"
    p.write_text(write_cxt(crime))
    assert read_context(p) == crime
    q = tmp_path / "ctx.csv"
    q.write_text(write_csv_crosstable(crime))
    assert read_context(q) == crime
    with pytest.raises(FileNotFoundError):
        read_context(tmp_path / "missing.cxt")


@settings(max_examples=200, deadline=None)
@given(incidences(min_size=0))
def test_roundtrip_property(inc):
    ctx = make_context(inc)
    assert parse_cxt(write_cxt(ctx)) == ctx
    assert write_cxt(parse_cxt(write_cxt(ctx))) == write_cxt(ctx)
    assert parse_csv_crosstable(write_csv_crosstable(ctx)) == ctx


def test_context_name_roundtrip():
    ctx = FormalContext(["g"], ["m"], [[True]], name="my context")
    assert parse_cxt(write_cxt(ctx)).name == "my context"
