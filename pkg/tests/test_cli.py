from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import jsonschema
import pytest

from sdfa.cli import main
from sdfa.dsl import parse_ring
from sdfa.report import ReportDocument, classify_report
from sdfa.errors import InputError

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report-schema.json").read_text())


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ideals_by_name(doc: dict) -> dict:
    return {i["name"]: i for i in doc["ideals"]}


def test_classify_zn12(capsys):
    code, out, _ = run(capsys, "classify", "zn(12)")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    ideals = ideals_by_name(doc)
    assert len(ideals) == 6
    assert ideals["(2)"]["is_prime"] and ideals["(3)"]["is_prime"]
    assert ideals["(6)"]["is_sdf"] and ideals["(6)"]["fast_verdicts"]["comaximal_primes"] is True
    assert not ideals["(4)"]["is_radical"] and not ideals["0"]["is_radical"]
    assert ideals["(4)"]["fast_verdicts"]["comaximal_primes"] is None
    assert doc["ring"]["order"] == 12 and doc["ring"]["characteristic"] == 12


def test_classify_boolean_square(capsys):
    _, out, _ = run(capsys, "classify", "prod(zn(2),zn(2))")
    doc = json.loads(out)
    assert doc["ring"]["boolean"]
    assert all(i["is_sdf"] for i in doc["ideals"] if i["is_proper"])


def test_classify_dual_numbers_over_z3(capsys):
    _, out, _ = run(capsys, "classify", "polyq(3,[0,0,1])")
    assert ideals_by_name(json.loads(out))["0"]["is_sdf"] is True


def test_classify_single_ideal_and_witness_encoding(capsys):
    _, out, _ = run(capsys, "classify", "ideal(prod(zn(3),zn(3),zn(3));gens=[(0,0,1)])")
    doc = json.loads(out)
    (rec,) = doc["ideals"]
    assert rec["witnesses"]["sdf"] == [[1, 1, 0], [1, 2, 0]]
    assert rec["members"] == [[0, 0, 0], [0, 0, 1], [0, 0, 2]]
    assert rec["indices"] == [0, 1, 2]


def test_raw_flag_switches_to_indices(capsys):
    _, out, _ = run(capsys, "classify", "prod(zn(2),zn(3))", "--raw")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    for i in doc["ideals"]:
        assert i["members"] == i["indices"]


def test_round_trip_is_byte_identical(capsys):
    for spec in ["zn(12)", "prod(zn(4),zn(4))", "idealize(zn(4);mod=0)", "amalg(zn(4),zn(4),hom=id,j=[1])"]:
        _, out, _ = run(capsys, "classify", spec)
        assert ReportDocument.from_json(out).to_json() == out


def test_from_json_rejects_garbage():
    with pytest.raises(InputError):
        ReportDocument.from_json("{")
    with pytest.raises(InputError):
        ReportDocument.from_json('{"mode": "classify"}')


def test_formats_agree(capsys, tmp_path):
    spec = "prod(zn(4),zn(6))"
    paths = {fmt: tmp_path / f"r.{fmt}" for fmt in ("json", "csv", "text")}
    for fmt, path in paths.items():
        assert run(capsys, "classify", spec, "--format", fmt, "--out", str(path))[0] == 0
    doc = json.loads(paths["json"].read_text())
    rows = list(csv.DictReader(io.StringIO(paths["csv"].read_text())))
    assert [r["name"] for r in rows] == [i["name"] for i in doc["ideals"]]
    text = paths["text"].read_text()
    for row, rec in zip(rows, doc["ideals"]):
        for key in ("is_prime", "is_sdf", "is_weakly_sdf", "is_weakly_prime"):
            cell = row[key]
            assert cell == ("" if rec[key] is None else str(rec[key]).lower())
        for crit, v in rec["fast_verdicts"].items():
            assert row[f"fast:{crit}"] == ("inapplicable" if v is None else str(v).lower())
        assert rec["name"] in text
    assert "inapplicable" in text


def test_witness_command(capsys):
    code, out, _ = run(capsys, "witness", "prod(zn(3),zn(3),zn(3))", "--gens", "[(0,0,1)]", "--property", "sdf")
    assert code == 0 and out.strip() == "witness a=(1,1,0), b=(1,2,0)"
    code, out, _ = run(capsys, "witness", "prod(zn(3),zn(3),zn(3))", "--gens", "[(0,0,1)]",
                       "--property", "sdf", "--check", "[(2,1,0),(1,1,0)]")
    assert code == 0 and out.startswith("certified a=(2,1,0), b=(1,1,0)")
    code, out, _ = run(capsys, "witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]",
                       "--property", "weakly-prime", "--check", "[(2,2),(0,1)]")
    assert code == 0 and out.startswith("certified")
    code, out, _ = run(capsys, "witness", "prod(zn(4),zn(4))", "--gens", "[(0,2)]", "--property", "weakly-sdf")
    assert out.strip() == "holds"
    code, out, _ = run(capsys, "witness", "gf(2,[1,1,0,1])", "--gens", "[]", "--property", "sdf")
    assert (code, out.strip()) == (0, "holds")


def test_printed_witnesses_reverify(capsys):
    from sdfa.classify import is_sdf_counterexample, is_weakly_prime_counterexample
    from sdfa.dsl import parse_elements
    from sdfa.ideals import ideal_generated

    cases = [("prod(zn(3),zn(3))", "[]", "sdf"), ("zn(16)", "[4]", "sdf"), ("prod(zn(4),zn(4))", "[(0,2)]", "weakly-prime"),
             ("zn(12)", "[4]", "weakly-sdf")]
    for spec, gens, prop in cases:
        _, out, _ = run(capsys, "witness", spec, "--gens", gens, "--property", prop)
        pair = out.strip().removeprefix("witness ").replace("a=", "").replace(" b=", "")
        R = parse_ring(spec)
        I = ideal_generated(R, parse_elements(R, gens))
        a, b = parse_elements(R, f"[{pair}]")
        if prop == "weakly-prime":
            assert is_weakly_prime_counterexample(R, I, a, b)
        else:
            assert is_sdf_counterexample(R, I, a, b, weak=prop == "weakly-sdf")


def test_check_rejects_a_non_witness(capsys):
    code, out, _ = run(capsys, "witness", "zn(12)", "--gens", "[4]", "--property", "sdf", "--check", "[1,1]")
    assert code == 1 and out.startswith("not a witness")


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "zn(12"],
        ["classify", "zz(3)"],
        ["witness", "zn(4)", "--gens", "[(1,1)]", "--property", "sdf"],
        ["witness", "zn(4)", "--gens", "[1]", "--property", "sdf"],
        ["verify", "--only", "no-such-property"],
        ["classify"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_parse_error_reports_position(capsys):
    _, _, err = run(capsys, "classify", "prod(zn(2),zn(3)")
    assert "position 16" in err


def test_malformed_corpus_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert run(capsys, "verify", "--corpus", str(bad))[0] == 2
    bad.write_text('{"zn_max": "lots"}')
    assert run(capsys, "verify", "--corpus", str(bad))[0] == 2


def test_order_cap_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("SDFA_ORDER_CAP", "100")
    code, _, err = run(capsys, "classify", "prod(zn(10),zn(11))")
    assert code == 3 and "order cap" in err


def test_verify_only_and_schema(capsys, tmp_path):
    corpus = tmp_path / "c.json"
    corpus.write_text(json.dumps({"zn_max": 60, "include_products": False}))
    code, out, _ = run(capsys, "verify", "--corpus", str(corpus), "--only", "thm-4.8-zn-zero-ideal")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    (p,) = doc["properties"]
    assert (p["status"], p["checked_instances"]) == ("pass", 59)
    assert doc["corpus"]["spec"]["zn_max"] == 60


def test_verify_small_is_deterministic(capsys, tmp_path):
    corpus = tmp_path / "small.json"
    corpus.write_text(json.dumps({"pair_order_cap": 36, "triple_order_cap": 8}))
    argv = ["verify", "--corpus", str(corpus), "--zn-max", "12", "--seed", "3"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0 and first[1] == second[1]
    doc = json.loads(first[1])
    assert doc["corpus"]["spec"]["seed"] == 3
    assert all(p["status"] != "fail" for p in doc["properties"])


def test_verify_text_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "--zn-max", "8", "--only", "thm-2.2-radical", "thm-4.4-sampled", "--format", "text")
    assert code == 0 and "(sampled)" in out and "0 fail" in out
    _, out, _ = run(capsys, "verify", "--zn-max", "8", "--only", "thm-2.2-radical", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["property_id"] == "thm-2.2-radical" and rows[0]["status"] == "pass"


def test_classify_report_marks_disagreements():
    doc = classify_report(parse_ring("zn(8)"))
    assert doc.disagreements == []
    doc.ideals[0]["disagreements"] = ["linear_system"]
    assert doc.disagreements == ["0"]
