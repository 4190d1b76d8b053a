import json
import subprocess
import sys

from degclass.cli import main
from degclass.corpus import parse_corpus
from degclass.report import Report, run_report

S8_STANZA = """\
group S8
degree 8
gen (1,2,3,4,5,6,7,8)
gen (1,2)
end
"""

C6_STANZA = """\
group C6
degree 6
gen (1,2,3,4,5,6)
end
"""


def test_report_deterministic(corpus, builtin_report):
    again = run_report(corpus)
    assert again.text == builtin_report.text
    assert builtin_report.exit_code == 0


def test_report_round_trips_as_json(builtin_report):
    doc = json.loads(builtin_report.text)
    assert json.dumps(doc, indent=2) + "\n" == builtin_report.text
    assert doc["tool"]["name"] == "degclass"


def test_report_summary_counts_are_consistent(builtin_report):
    doc = builtin_report.document
    blocks = doc["groups"]
    summary = doc["summary"]
    verdicts = [v for b in blocks if b["skipped"] is None for v in b["verdicts"]]
    assert int(summary["verdict_count"]) == len(verdicts)
    assert int(summary["agreements"]) == sum(1 for v in verdicts if v["agrees"])
    assert int(summary["disagreements"]) == 0
    assert int(summary["experimental_disagreements"]) == sum(
        1 for v in verdicts if v["experimental"] and not v["agrees"]
    )
    assert int(summary["group_count"]) == len(blocks)
    assert all(isinstance(b["order"], str) for b in blocks)


def test_report_has_witnesses_for_every_equivalence(builtin_report):
    witnesses = builtin_report.document["summary"]["equivalence_witnesses"]
    for crit, entry in witnesses.items():
        assert entry["both_true"], f"{crit} has no both-true witness"
        assert entry["both_false"], f"{crit} has no both-false witness"


def test_oversized_group_is_skipped_not_fatal():
    records = parse_corpus(S8_STANZA + "\n" + C6_STANZA, enumeration_cap=20000)
    report = run_report(records)
    blocks = {b["name"]: b for b in report.document["groups"]}
    assert "exceeds enumeration cap" in blocks["S8"]["skipped"]
    assert blocks["S8"]["order"] == "40320"
    assert blocks["C6"]["skipped"] is None
    assert report.exit_code == 0
    assert report.document["summary"]["skipped"] == "1"


def test_abelian_corpus_all_agree():
    report = run_report(parse_corpus(C6_STANZA))
    assert report.exit_code == 0
    assert report.document["summary"]["disagreements"] == "0"


def test_exit_code_reflects_disagreements():
    report = Report(document={}, disagreements=0, experimental_disagreements=3)
    assert report.exit_code == 0
    report = Report(document={}, disagreements=1, experimental_disagreements=0)
    assert report.exit_code == 1


# --- CLI ----------------------------------------------------------------------


def test_cli_verify_builtin_to_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "--builtin", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["disagreements"] == "0"
    err = capsys.readouterr().err
    assert "disagreements" in err


def test_cli_verify_byte_identical_runs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--builtin", "--out", str(a)]) == 0
    assert main(["verify", "--builtin", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_verify_corpus_file(tmp_path, capsys):
    path = tmp_path / "corpus.txt"
    path.write_text(C6_STANZA)
    code = main(["verify", "--corpus", str(path)])
    assert code == 0
    out = capsys.readouterr().out
    assert json.loads(out)["summary"]["group_count"] == "1"


def test_cli_rejects_both_sources(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text(C6_STANZA)
    assert main(["verify", "--corpus", str(path), "--builtin"]) == 2


def test_cli_input_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("group x\ndegree 2\ngen (1,1)\nend\n")
    assert main(["verify", "--corpus", str(bad)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["verify", "--corpus", str(tmp_path / "missing.txt")]) == 2


def test_cli_empty_corpus_warns_but_succeeds(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    assert main(["verify", "--corpus", str(path)]) == 0
    assert "empty" in capsys.readouterr().err


def test_cli_invariants(capsys):
    code = main(["invariants", "--group", "Hol(C7)"])
    assert code == 0
    out = capsys.readouterr().out
    assert "order 42" in out
    assert "1 x6  6 x1" in out


def test_cli_degrees(capsys):
    code = main(["degrees", "--group", "S4"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "1 x2  2 x1  3 x2"


def test_cli_unknown_group(capsys):
    assert main(["degrees", "--group", "M11"]) == 2
    assert "no group named" in capsys.readouterr().err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "degclass.cli", "degrees", "--group", "Q8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 x4  2 x1"


def test_cli_pi_bound_flag(capsys):
    assert main(["verify", "--builtin", "--pi-bound", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["options"]["pi_bound"] == "1"
    for block in doc["groups"]:
        for v in block["verdicts"]:
            assert len(v["primes"]) <= 1 or v["criterion"] == "nilpotent_residual_index_product"


def test_verify_byte_identical_across_processes(tmp_path):
    # separate interpreter runs get different hash seeds, so this catches any
    # set-iteration order leaking into the report
    outputs = []
    for name in ("x.json", "y.json"):
        out = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "degclass.cli", "verify", "--builtin", "--out", str(out)],
            capture_output=True,
        )
        assert proc.returncode == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
