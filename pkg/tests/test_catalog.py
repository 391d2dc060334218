import io

import pytest

from twobridge.catalog import (
    ERROR,
    MATCH,
    MISMATCH,
    REFERENCE_ONLY,
    CatalogError,
    KnotRecord,
    default_catalog,
    emit_table,
    load_catalog,
    reproduce_table,
)
from twobridge.rational import Frac


TREFOIL = "3_1\t3\t3/1\t1\t-6\t1\t0\t"


def test_parse_trefoil_line():
    (r,) = load_catalog(TREFOIL.encode())
    assert r == KnotRecord("3_1", 3, Frac(3, 1), True, -6, 1, False, "")


def test_parse_reference_row_and_stream():
    text = "# comment\n8_19\t8\t\t0\t5\t-12\t0\tkauffman-not-sharp\n"
    (r,) = load_catalog(io.BytesIO(text.encode()))
    assert r.fraction is None and not r.two_bridge
    assert (r.tb_paper, r.tb_mirror_paper) == (5, -12)
    assert load_catalog(io.StringIO(text)) == [r]


def test_seven_fields_allowed():
    (r,) = load_catalog("4_1\t4\t5/2\t1\t-3\t-3\t1")
    assert r.amphicheiral and r.notes == ""


@pytest.mark.parametrize("text,match", [
    ("3_1\t3\t\t1\t-6\t1\t0\t", "needs a fraction"),
    ("3_1\t3\t3/1\t0\t-6\t1\t0\t", "only two-bridge"),
    ("4_1\t4\t5/2\t1\t-3\t-2\t1\t", "amphicheiral"),
    ("3_1\t3\t3/1\t1\t-6\t1\n", "line 1"),
    ("3_1\t3\t3/1\tyes\t-6\t1\t0\t", "two_bridge"),
    ("3_1\tthree\t3/1\t1\t-6\t1\t0\t", "line 1"),
    (TREFOIL + "\n" + TREFOIL, "duplicate"),
    ("\t3\t3/1\t1\t-6\t1\t0\t", "empty"),
])
def test_parse_errors(text, match):
    with pytest.raises(CatalogError, match=match):
        load_catalog(text)


def test_error_reports_line_number():
    with pytest.raises(CatalogError, match="line 3"):
        load_catalog("# c\n" + TREFOIL + "\nbad\n")


def test_default_catalog_contents():
    records = default_catalog()
    names = [r.name for r in records]
    assert len(names) == len(set(names))
    assert sum(r.two_bridge for r in records) == 50
    assert {"0_1", "3_1", "4_1", "8_19", "9_42"} <= set(names)


def test_rows_and_statuses():
    records = load_catalog(
        TREFOIL + "\n"
        "4_1\t4\t5/2\t1\t-3\t-3\t1\t\n"
        "5_2\t5\t7/3\t1\t-6\t0\t0\twrong pair on purpose\n"
        "9_42\t9\t\t0\t-3\t-5\t0\tbelieved -5, Kauffman bound -3\n"
        "x\t2\t4/1\t1\t0\t0\t0\ttwo components\n"
    )
    report = reproduce_table(records)
    statuses = [r.status for r in report.rows]
    assert statuses == [MATCH, MATCH, MISMATCH, REFERENCE_ONLY, ERROR]
    assert report.rows[0].computed in ((1, -6), (-6, 1))
    assert report.rows[3].message == "believed -5, Kauffman bound -3"
    assert not report.ok
    assert report.counts() == {MATCH: 2, MISMATCH: 1, REFERENCE_ONLY: 1, ERROR: 1}


def test_parallel_keeps_order():
    records = default_catalog()
    a = reproduce_table(records, workers=1)
    b = reproduce_table(records, workers=4)
    assert [r.record.name for r in b.rows] == [r.name for r in records]
    assert a.rows == b.rows


def test_emit_formats():
    report = reproduce_table(load_catalog(TREFOIL + "\n4_1\t4\t5/2\t1\t-3\t-3\t1\tx|y, \"q\""))
    text = emit_table(report, "text")
    assert text.splitlines()[0].split() == ["K", "fraction", "tb", "tb-mirror", "status"]
    assert text.splitlines()[-1] == "2 match, 0 mismatch, 0 reference-only, 0 error"
    md = emit_table(report, "markdown")
    assert md.startswith("| K | fraction |")
    assert "|---|" in md
    csv_text = emit_table(report, "csv")
    assert csv_text.splitlines()[1] == "3_1,3/1,-6,1,MATCH"
    assert csv_text.splitlines()[2] == "4_1,5/2,-3,amph,MATCH"
    with pytest.raises(ValueError):
        emit_table(report, "html")
