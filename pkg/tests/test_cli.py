import json

from mu2sod.cli import main
from mu2sod.euler import gram_report
from mu2sod.mutations import identity_sequence
from mu2sod.presets import p2_example
from mu2sod.sod import assemble, report_from_dict

P2_DOC = {
    "space": {"kind": "projective", "dim": 2},
    "group_rank": 2,
    "action": [[1, 0, 0], [0, 1, 0]],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_sod_p2_example(capsys):
    code, out = run(capsys, "sod", "--preset", "p2-example", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["total_rank"] == 12
    assert len(doc["components"]) == 7
    assert doc["msodc"]["grouped_labels"] == [
        "P2[0,1,2]",
        "P1[1,2]",
        "pt[0]",
        "P1[0,2]",
        "pt[1]",
        "P1[0,1]",
        "pt[2]",
    ]
    # Gram was available, so every move carries a decided orthogonality flag
    assert [m["orthogonal"] for m in doc["msodc"]["moves"]] == [False, False, False]


def test_sod_round_trip(capsys):
    code, out = run(capsys, "sod", "--preset", "p2-example", "--json")
    doc = json.loads(out)
    doc.pop("msodc")
    assert report_from_dict(doc) == assemble(p2_example())


def test_verify_etale(capsys):
    code, out = run(capsys, "verify", "--preset", "etale", "--n", "4", "--k", "3")
    assert code == 0
    assert "PASS" in out
    assert "etale(n=4, k=3)" in out


def test_verify_battery(capsys):
    code, out = run(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out


def test_verify_named_check(capsys):
    code, out = run(capsys, "verify", "--check", "gram-presets", "--json")
    assert code == 0
    (entry,) = json.loads(out)
    assert entry["status"] == "pass"


def test_verify_unknown_check(capsys):
    code, _ = run(capsys, "verify", "--check", "no-such-check")
    assert code == 2


def test_malformed_spec_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, _ = run(capsys, "sod", str(bad))
    assert code == 2


def test_missing_input(capsys):
    code, _ = run(capsys, "sod")
    assert code == 2


def test_both_inputs_rejected(tmp_path, capsys):
    doc = tmp_path / "spec.json"
    doc.write_text(json.dumps(P2_DOC))
    code, _ = run(capsys, "sod", str(doc), "--preset", "p2-example")
    assert code == 2


def test_spec_file_input(tmp_path, capsys):
    doc = tmp_path / "spec.json"
    doc.write_text(json.dumps(P2_DOC))
    code, out = run(capsys, "analyze", str(doc), "--json")
    assert code == 0
    assert len(json.loads(out)["components"]) == 7


def test_structured_output_deterministic(capsys):
    _, first = run(capsys, "sod", "--preset", "p2-example", "--json")
    _, second = run(capsys, "sod", "--preset", "p2-example", "--json")
    assert first == second


def test_gram_affine_rejected(capsys):
    code, _ = run(capsys, "gram", "--preset", "etale", "--n", "3", "--k", "2")
    assert code == 2


def test_gram_quadric_rejected(capsys):
    code, _ = run(capsys, "gram", "--preset", "quadric", "--q-dim", "2")
    assert code == 2


def test_gram_p2(capsys):
    code, out = run(capsys, "gram", "--preset", "p2-example", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["blocks"] == [3, 2, 2, 2, 1, 1, 1]
    assert doc["triangular"] is True
    assert len(doc["matrix"]) == 12


def test_mutate_command(tmp_path, capsys):
    spec = p2_example()
    report = assemble(spec)
    result = gram_report(spec, report)
    seq = identity_sequence(result.matrix, tuple(c.rank for c in report.components))
    seq_path = tmp_path / "sequence.json"
    seq_path.write_text(json.dumps(seq.to_dict()))
    script_path = tmp_path / "script.json"
    script_path.write_text(
        json.dumps(
            [
                {"block": 4, "direction": "left"},
                {"block": 3, "direction": "left"},
                {"block": 5, "direction": "left"},
            ]
        )
    )
    code, out = run(capsys, "mutate", str(seq_path), "--script", str(script_path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["semiorthogonal"] is True
    assert doc["unimodular"] is True
    assert doc["blocks"] == [3, 2, 1, 2, 1, 2, 1]


def test_mutate_bad_script(tmp_path, capsys):
    seq_path = tmp_path / "sequence.json"
    seq = identity_sequence(((1, 0), (0, 1)))
    seq_path.write_text(json.dumps(seq.to_dict()))
    script_path = tmp_path / "script.json"
    script_path.write_text(json.dumps([{"block": 7, "direction": "left"}]))
    code, _ = run(capsys, "mutate", str(seq_path), "--script", str(script_path))
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run(capsys, "sod", "--preset", "p2-example", "--json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["total_rank"] == 12


def test_analyze_table(capsys):
    code, out = run(capsys, "analyze", "--preset", "p2-example")
    assert code == 0
    assert "P2[0,1,2]" in out
    assert "rank" in out
