"""Exit codes, output formats, and the oracle hookup of the command
line. Everything runs in-process through main(argv)."""

import json

import pytest

import ncres.cli as cli
from ncres.resolver import BettiTable


SQUARE = json.dumps({
    "field": "Q", "generators": ["x"],
    "relations": [[{"coeff": "1", "word": ["x", "x"]}]],
    "module": {"shifts": [0],
               "generators": [[{"coeff": "1", "component": 0,
                                "word": ["x"]}]]},
})

KOSZUL = json.dumps({
    "field": "Q", "generators": ["x", "y"],
    "relations": [[{"coeff": "1", "word": ["x", "y"]},
                   {"coeff": "-1", "word": ["y", "x"]}]],
    "module": {"shifts": [0],
               "generators": [[{"coeff": "1", "component": 0, "word": ["x"]}],
                              [{"coeff": "1", "component": 0,
                                "word": ["y"]}]]},
})


def write(tmp_path, text, name="in.json"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_resolve_text_output(tmp_path, capsys):
    path = write(tmp_path, SQUARE)
    rc = cli.main(["resolve", path, "--length", "4"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "status: truncated(4)" in out
    assert "shape: A <- A[-1] <- A[-2] <- A[-3] <- A[-4]" in out
    assert "0:     1    1    1    1    1" in out


def test_resolve_json_output_and_determinism(tmp_path, capsys):
    path = write(tmp_path, KOSZUL)
    args = ["resolve", path, "--degree-bound", "4", "--length", "3",
            "--format", "json"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["status"] == "truncated(4)"
    assert {(b["homological"], b["slanted"]): b["value"]
            for b in doc["betti"]} == {(0, 0): 1, (1, 0): 2, (2, 0): 1}
    assert doc["timings"] is None


def test_resolve_reads_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(cli.sys, "stdin", io.StringIO(SQUARE))
    rc = cli.main(["resolve", "-", "--length", "2"])
    assert rc == 0
    assert "status:" in capsys.readouterr().out


def test_parse_failure_exits_1(tmp_path, capsys):
    path = write(tmp_path, SQUARE.replace('"1"', '"1.5"', 1))
    rc = cli.main(["resolve", path])
    err = capsys.readouterr().err
    assert rc == 1
    assert "1.5" in err


def test_missing_file_exits_1(tmp_path, capsys):
    rc = cli.main(["resolve", str(tmp_path / "nope.json")])
    assert rc == 1
    assert "cannot read" in capsys.readouterr().err


def test_bad_degree_bound_exits_1(tmp_path, capsys):
    path = write(tmp_path, SQUARE)
    rc = cli.main(["resolve", path, "--degree-bound", "0"])
    assert rc == 1
    assert "error" in capsys.readouterr().err


def test_require_certified_truncation_exits_3(tmp_path, capsys):
    path = write(tmp_path, SQUARE)
    rc = cli.main(["resolve", path, "--require-certified", "--length", "3"])
    out = capsys.readouterr().out
    assert rc == 3
    assert "truncated" in out  # the document is still printed


def test_oracle_match_on_monomial_input(tmp_path, capsys):
    path = write(tmp_path, SQUARE)
    rc = cli.main(["resolve", path, "--oracle-compare", "--length", "4",
                   "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["oracle"]["ran"] is True
    assert doc["oracle"]["match"] is True
    assert doc["oracle"]["diff"] == []


def test_oracle_skipped_on_nonmonomial_input(tmp_path, capsys):
    path = write(tmp_path, KOSZUL)
    rc = cli.main(["resolve", path, "--oracle-compare", "--length", "3",
                   "--degree-bound", "4", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert doc["oracle"]["ran"] is False
    assert "not monomial" in doc["oracle"]["reason"]


def test_oracle_mismatch_exits_2(tmp_path, capsys, monkeypatch):
    def wrong_table(ideal, module, length_bound):
        return BettiTable({(0, 0): 1, (1, 0): 99}, truncated=False)

    monkeypatch.setattr(cli, "monomial_resolution", wrong_table)
    path = write(tmp_path, SQUARE)
    rc = cli.main(["resolve", path, "--oracle-compare", "--length", "3",
                   "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert rc == 2
    assert doc["oracle"]["match"] is False
    assert any(row["oracle"] == 99 for row in doc["oracle"]["diff"])


def test_timings_populated_only_on_request(tmp_path, capsys):
    path = write(tmp_path, SQUARE)
    cli.main(["resolve", path, "--length", "2", "--timings",
              "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["timings"]) == {"parse", "resolve", "oracle", "total"}
    assert doc["timings"]["total"] >= doc["timings"]["resolve"]


def test_check_passes_on_clean_input(tmp_path, capsys):
    path = write(tmp_path, KOSZUL)
    rc = cli.main(["check", path])
    out = capsys.readouterr().out
    assert rc == 0
    assert "PASS validation" in out
    assert "PASS dimension-equalities" in out
    assert "PASS round-trips" in out
    assert "PASS encoding-product-law" in out
    assert "PASS presentation-map-commutes" in out


def test_check_reports_validation_failure(tmp_path, capsys):
    bad = json.dumps({
        "field": "Q", "generators": ["x"],
        "relations": [[{"coeff": "1", "word": ["x", "x"]},
                       {"coeff": "1", "word": ["x"]}]],
        "module": {"shifts": [0], "generators": []},
    })
    path = write(tmp_path, bad)
    rc = cli.main(["check", path])
    out = capsys.readouterr().out
    assert rc == 1
    assert "FAIL validation" in out
    assert "PASS" not in out


def test_check_unparseable_exits_1(tmp_path, capsys):
    path = write(tmp_path, "{")
    rc = cli.main(["check", path])
    assert rc == 1
    assert "error" in capsys.readouterr().err
