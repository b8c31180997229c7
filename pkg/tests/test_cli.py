import csv
import io
import json
import subprocess
import sys

import pytest

from essdim.catalog import Cyclic, Exceptional, Imprimitive, Symmetric
from essdim.cli import (
    TABLE_COLUMNS,
    build_document,
    expand_range,
    main,
    parse_group,
    parse_json,
    render_json,
    verify,
)
from essdim.errors import GroupParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("C6", Cyclic(6)),
        ("S5", Symmetric(5)),
        ("S5(natural)", Symmetric(5, "natural")),
        ("G(3, 3, 3)", Imprimitive(3, 3, 3)),
        ("ST37", Exceptional(37)),
        ("W(E8)", Exceptional(37)),
        ("W(E6)", Exceptional(35)),
        ("W(F4)", Exceptional(28)),
        ("W(G2)", Imprimitive(6, 6, 2)),
        ("W(B4)", Imprimitive(2, 1, 4)),
        ("W(D5)", Imprimitive(2, 2, 5)),
        ("W(A4)", Symmetric(5)),
        ("G(1,1,4)", Symmetric(4)),
        ("G(6,3,1)", Cyclic(2)),
    ],
)
def test_parse_group(expr, expected):
    assert parse_group(expr)[0] == expected


@pytest.mark.parametrize("expr", ["X5", "G(4,3,2)", "ST3", "W(Q7)", "G(2,2)"])
def test_parse_errors(expr):
    with pytest.raises(GroupParseError):
        parse_group(expr)


def test_report_st37_json(capsys):
    code, out, _ = run(capsys, "report", "ST37", "--format", "json", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert {r["p"]: r["ed_at_p"] for r in doc["per_prime"]} == {2: 8, 3: 4, 5: 2, 7: 1}
    assert doc["degrees"]["value"] == [2, 8, 12, 14, 18, 20, 24, 30]
    assert doc["degrees"]["provenance"] == "table-external"
    for field in ("group", "normalized_group", "degrees", "per_prime", "pmed", "ed_abs", "notes", "provenance"):
        assert field in doc


def test_report_examples(capsys):
    _, out, _ = run(capsys, "report", "G(5,5,2)", "--format", "json")
    doc = json.loads(out)
    assert doc["ed_abs"]["kind"] == "exact" and doc["ed_abs"]["lo"] == 1
    _, out, _ = run(capsys, "report", "S7", "--format", "json")
    doc = json.loads(out)
    assert doc["pmed"]["value"] == 3
    assert (doc["ed_abs"]["kind"], doc["ed_abs"]["lo"]) == ("exact", 4)
    code, out, _ = run(capsys, "report", "W(E6)")
    assert code == 0 and "ed            4" in out


def test_every_number_has_provenance(capsys):
    for expr in ["ST37", "S8", "A8", "G(4,2,3)", "C12"]:
        _, out, _ = run(capsys, "report", expr, "--format", "json", "--no-timestamp")
        doc = json.loads(out)
        for row in doc["per_prime"]:
            assert row["provenance"]
        if doc["degrees"]:
            assert doc["degrees"]["provenance"]
        assert doc["pmed"]["provenance"]
        if doc["ed_abs"]["lo"] is not None:
            assert doc["ed_abs"]["provenance"]
        assert set(doc["provenance"]) >= {row["provenance"] for row in doc["per_prime"]}


def test_json_round_trip():
    for expr in ["ST37", "S8", "A9", "G(2,2,2)"]:
        g, notes = parse_group(expr)
        doc = build_document(expr, g, notes, 10_000, timestamp=True)
        assert parse_json(render_json(doc)) == doc


def test_output_determinism(capsys):
    _, a, _ = run(capsys, "report", "G(4,2,3)", "--format", "json", "--no-timestamp")
    _, b, _ = run(capsys, "report", "G(4,2,3)", "--format", "json", "--no-timestamp")
    assert a == b
    assert json.loads(a)["generated_at"] is None
    _, c, _ = run(capsys, "report", "G(4,2,3)", "--format", "json")
    assert json.loads(c)["generated_at"]


def test_exit_codes(capsys):
    code, _, err = run(capsys, "report", "nonsense")
    assert code == 2
    record = json.loads(err.strip())
    assert record["exit_code"] == 2 and "\n" not in err.strip()
    code, _, err = run(capsys, "report", "S5", "--char", "5")
    assert code == 1 and json.loads(err)["error"] == "CharacteristicError"
    code, _, err = run(capsys, "report", "A12", "--budget", "3")
    assert code == 3 and "enumeration budget" in json.loads(err)["message"]
    with pytest.raises(SystemExit) as exc:
        main(["report"])
    assert exc.value.code == 2


def test_refusal_is_not_a_failure_of_the_report(capsys):
    code, out, _ = run(capsys, "report", "S4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ed_abs"]["kind"] == "undetermined"
    assert any("ed refused" in n for n in doc["notes"])


def test_char_flag(capsys):
    code, out, _ = run(capsys, "report", "S4", "--char", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["char"] == 5
    assert any("characteristic 5" in n for n in doc["notes"])


def test_expand_range():
    assert len(expand_range(["G(m,m,n)", "m=2..5", "n=2..5"])) == 16
    assert len(expand_range(["ST4..ST37"])) == 34
    assert expand_range(["S2..S4"]) == ["S2", "S3", "S4"]
    assert expand_range(["G(m,l,n) m=4 n=2"]) == ["G(4,1,2)", "G(4,2,2)", "G(4,4,2)"]
    with pytest.raises(GroupParseError):
        expand_range(["G(m,m,n)", "m=2..3"])
    with pytest.raises(GroupParseError):
        expand_range(["Q1..Q3"])


def _csv(capsys, *argv):
    code, out, _ = run(capsys, "table", *argv, "--format", "csv")
    assert code == 0
    return list(csv.DictReader(io.StringIO(out)))


def test_table_rows(capsys):
    assert len(_csv(capsys, "G(m,m,n)", "m=2..5", "n=2..5")) == 16
    rows = _csv(capsys, "ST4..ST37")
    assert len(rows) == 34
    assert rows[-1]["degrees"] == "2+8+12+14+18+20+24+30"
    assert list(rows[0])[: len(TABLE_COLUMNS)] == TABLE_COLUMNS


def test_table_primes_match_floor(capsys):
    rows = _csv(capsys, "S2..S12", "--primes")
    assert len(rows) == 11
    for row in rows:
        n = int(row["group"][1:])
        for p in (2, 3, 5, 7, 11):
            assert int(row[f"ed_p{p}"]) == n // p


def test_table_json_and_text(capsys):
    code, out, _ = run(capsys, "table", "C1..C3", "--format", "json")
    assert [json.loads(line)["normalized_group"] for line in out.splitlines()] == ["C1", "C2", "C3"]
    code, out, _ = run(capsys, "table", "A4..A6")
    assert code == 0 and out.splitlines()[0].startswith("group")


def test_verify_examples(capsys):
    res = verify(Imprimitive(3, 3, 3), "molien")
    assert res.status == "pass" and "degrees [3, 3, 6]" in res.notes
    code, out, _ = run(capsys, "verify", "A8", "--oracle", "springer-vs-direct", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "skipped" and doc["notes"]
    code, out, _ = run(capsys, "verify", "G(2,1,3)", "--oracle", "counts", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass" and "48 elements total" in doc["notes"]


def test_verify_budget_is_skip(capsys):
    code, out, _ = run(capsys, "verify", "G(4,1,6)", "--oracle", "counts", "--budget", "5", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "skipped"


def test_verify_alternating_counts():
    res = verify(parse_group("A6")[0], "counts")
    assert res.status == "pass"


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "essdim", "report", "ST35", "--format", "json", "--no-timestamp"],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    assert json.loads(out)["ed_abs"]["lo"] == 4
