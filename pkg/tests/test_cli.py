from __future__ import annotations

import io
import json

import pytest

from vicheda.cli import main, parse_tsv_records

from conftest import TABLES_GOLD, WORDS


@pytest.fixture()
def words_file(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("पर\nउपकार\nएक\nगण\nईश\n", encoding="utf-8")
    return str(path)


# ------------------------------------------------------------------ split

def test_split_best(capsys, words_file):
    code = main(["split", "परोपकार", "--lexicon", words_file])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "पर + उपकार [R5]\n"


def test_split_no_candidates(capsys):
    code = main(["split", "कमल"])
    out = capsys.readouterr()
    assert code == 2
    assert out.out == ""
    assert "no split found" in out.err


def test_split_rejects_non_devanagari(capsys):
    code = main(["split", "hello"])
    out = capsys.readouterr()
    assert code == 1
    assert "error" in out.err


def test_split_rejects_single_akshara(capsys):
    assert main(["split", "क"]) == 1


def test_split_all_candidates(capsys, words_file):
    code = main(["split", "एकैक", "--all", "--lexicon", words_file])
    out = capsys.readouterr()
    lines = out.out.splitlines()
    assert code == 0
    assert len(lines) >= 2
    assert lines[0] == "एक + एक [R6] (tier 1)"


def test_split_unreadable_lexicon(capsys, tmp_path):
    code = main(["split", "परोपकार", "--lexicon", str(tmp_path / "none.txt")])
    assert code == 1


def test_split_tsv_round_trip(capsys, words_file):
    code = main(["split", "एकैक", "--all", "--format", "tsv", "--lexicon", words_file])
    out = capsys.readouterr()
    assert code == 0
    records = parse_tsv_records(out.out)
    assert len(records) == 1
    record = records[0]
    assert record.input == "एकैक"
    assert record.best is record.candidates[0]
    assert [(c.left, c.right, c.rule.name, c.tier) for c in record.candidates] == [
        ("एक", "एक", "R6", 1),
        ("एका", "एक", "R6", 2),
        ("एक", "ऐक", "R7", 2),
        ("एका", "ऐक", "R7", 3),
    ]


def test_split_json_schema(capsys, words_file):
    code = main(["split", "गणेश", "--format", "json", "--lexicon", words_file])
    out = capsys.readouterr()
    assert code == 0
    payload = json.loads(out.out)
    assert payload["input"] == "गणेश"
    assert payload["best"] == {"left": "गण", "right": "ईश", "rule": "R4", "tier": 1}
    assert payload["candidates"][0] == payload["best"]


# ------------------------------------------------------------------ batch

def test_batch_gold_compounds(capsys, tmp_path):
    compounds = [
        line.split("\t")[0]
        for line in TABLES_GOLD.read_text(encoding="utf-8").splitlines()
        if line and not line.startswith("#")
    ]
    golds = {
        line.split("\t")[0]: tuple(line.split("\t")[1:3])
        for line in TABLES_GOLD.read_text(encoding="utf-8").splitlines()
        if line and not line.startswith("#")
    }
    infile = tmp_path / "batch.txt"
    infile.write_text("\n".join(compounds) + "\n", encoding="utf-8")
    code = main(["batch", str(infile), "--all", "--format", "json", "--lexicon", str(WORDS)])
    out = capsys.readouterr()
    assert code == 0
    records = [json.loads(line) for line in out.out.splitlines()]
    assert len(records) == len(compounds)
    for record in records:
        gold = golds[record["input"]]
        assert gold in {(c["left"], c["right"]) for c in record["candidates"]}


def test_batch_empty_file(capsys, tmp_path):
    infile = tmp_path / "empty.txt"
    infile.write_text("", encoding="utf-8")
    code = main(["batch", str(infile)])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == ""


def test_batch_reports_bad_line_and_continues(capsys, tmp_path):
    infile = tmp_path / "batch.txt"
    infile.write_text("गणेश\nhello\nपरोपकार\n", encoding="utf-8")
    code = main(["batch", str(infile)])
    out = capsys.readouterr()
    assert code == 1
    assert "line 2" in out.err
    assert out.out.splitlines() == [
        "गणेश\tगण + इश [R3]",
        "परोपकार\tपरोपक + अर [R1]",
    ]


def test_batch_missing_file(capsys, tmp_path):
    assert main(["batch", str(tmp_path / "none.txt")]) == 1


# ------------------------------------------------------------------- eval

def test_eval_tables(capsys, tmp_path, tables_gold):
    lexfile = tmp_path / "parts.txt"
    parts = {w for e in tables_gold for w in (e.left, e.right)}
    lexfile.write_text("\n".join(sorted(parts)) + "\n", encoding="utf-8")
    code = main(["eval", str(TABLES_GOLD), "--lexicon", str(lexfile)])
    out = capsys.readouterr()
    assert code == 0
    lines = out.out.splitlines()
    assert f"total\t{len(tables_gold)}" in lines
    assert "candidate_recall\t1.0000" in lines
    assert any(line.startswith("rule\tR5\t") for line in lines)


def test_eval_missing_files(capsys, tmp_path):
    assert main(["eval", str(tmp_path / "gold.tsv"), "--lexicon", str(WORDS)]) == 1


# ------------------------------------------------------------------ rules

def test_rules_table(capsys):
    code = main(["rules"])
    out = capsys.readouterr()
    lines = [line for line in out.out.splitlines() if line]
    assert code == 0
    assert len(lines) == 10  # header + nine rules
    r8 = next(line for line in lines if line.startswith("R8"))
    assert "च्+छ" in r8
    r9 = next(line for line in lines if line.startswith("R9"))
    assert "ः" in r9


# ------------------------------------------------------------ interactive

def run_interactive(monkeypatch, capsys, text, argv=()):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code = main(["interactive", *argv])
    return code, capsys.readouterr()


def test_interactive_split_then_quit(monkeypatch, capsys, tmp_path):
    lexfile = tmp_path / "words.txt"
    lexfile.write_text("गण\nईश\n", encoding="utf-8")
    code, out = run_interactive(
        monkeypatch, capsys, "गणेश\n:quit\n", ["--lexicon", str(lexfile)]
    )
    assert code == 0
    assert out.out == "गण + ईश [R4]\n"


def test_interactive_rules_command(monkeypatch, capsys):
    code, out = run_interactive(monkeypatch, capsys, ":rules\n:quit\n")
    assert code == 0
    assert any(line.startswith("R9") for line in out.out.splitlines())


def test_interactive_error_keeps_looping(monkeypatch, capsys):
    code, out = run_interactive(monkeypatch, capsys, "hello\nनिश्चल\n")
    assert code == 0
    assert "error" in out.err
    assert "निः + चल [R9]" in out.out


def test_interactive_eof_ends_cleanly(monkeypatch, capsys):
    code, out = run_interactive(monkeypatch, capsys, "")
    assert code == 0
