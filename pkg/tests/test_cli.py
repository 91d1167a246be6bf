import json
from pathlib import Path

import pytest

from conftest import BADSUB, NONCOMP, PATH3, TRIV
from lotcert.cli import main
from lotcert.log_model import serialize_log


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, log in (("path3", PATH3), ("triv", TRIV), ("noncomp", NONCOMP), ("badsub", BADSUB)):
        p = tmp_path / f"{name}.lot"
        p.write_text(serialize_log(log), encoding="utf-8")
        out[name] = str(p)
    bad = tmp_path / "broken.lot"
    bad.write_text("vertices: x\nedge e: x -> q : x\n", encoding="utf-8")
    out["broken"] = str(bad)
    return out


def test_validate_exit_codes(files, capsys):
    assert main(["validate", files["path3"]]) == 0
    assert main(["validate", files["noncomp"]]) == 1
    out = capsys.readouterr().out
    assert "e" in out and "compressed" in out
    assert main(["validate", files["broken"]]) == 2


def test_validate_json(files, capsys):
    assert main(["validate", files["path3"], "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["log_class"] == "LOT"
    assert data["compressed"]["ok"] is True


def test_reduce_command(files, tmp_path, capsys):
    out = tmp_path / "reduced.lot"
    assert main(["reduce", files["noncomp"], "-o", str(out)]) == 0
    assert out.read_text() == "vertices: x\n"
    err = capsys.readouterr().err
    assert "compress" in err


def test_certify_exit_codes(files, tmp_path, capsys):
    assert main(["certify", files["path3"]]) == 0
    capsys.readouterr()
    assert main(["certify", files["badsub"]]) == 3
    out = capsys.readouterr().out
    assert "hypothesis-failed" in out
    assert main(["certify", files["badsub"], "--relative"]) == 0


def test_certify_writes_canonical_json(files, tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["certify", files["path3"], "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema"] == 1 and data["verdicts"]["DR_claim"] is True
    again = tmp_path / "cert2.json"
    main(["certify", files["path3"], "--json", str(again)])
    assert out.read_bytes() == again.read_bytes()


def test_certify_dot_exports(files, tmp_path):
    dotdir = tmp_path / "dots"
    assert main(["certify", files["path3"], "--json", str(tmp_path / "c.json"), "--dot", str(dotdir)]) == 0
    link = (dotdir / "link.dot").read_text()
    assert link.count(" -- ") == 8 and link.count("style=") == 8
    sel = (dotdir / "selection.dot").read_text()
    assert sel.count(" -> ") == 4 and "color=" in sel


def test_export_link(files, capsys):
    assert main(["export", files["path3"], "link"]) == 0
    out = capsys.readouterr().out
    assert out.count(" -- ") == 8
    assert out.count(";") == 6 + 8 + 0  # 6 nodes + 8 corners
    assert main(["export", files["triv"], "link"]) == 0
    out = capsys.readouterr().out
    assert out.count(" -- ") == 0 and out.count(";") == 2


def test_export_selection(files, capsys):
    assert main(["export", files["path3"], "selection"]) == 0
    out = capsys.readouterr().out
    assert out.count(" -> ") == 4 and out.count(";") == 3 + 4


def test_generate_manifest_and_determinism(tmp_path, capsys):
    d1, d2 = tmp_path / "c1", tmp_path / "c2"
    assert main(["generate", "3", "2", "7", str(d1)]) == 0
    assert main(["generate", "3", "2", "7", str(d2)]) == 0
    m1 = json.loads((d1 / "manifest.json").read_text())
    assert m1["count"] == 2 and len(m1["instances"]) == 2
    flags = m1["instances"][0]["flags"]
    assert flags["reduced"] and flags["injective"] and flags["log_class"] == "LOT"
    for f1 in d1.iterdir():
        f2 = d2 / f1.name
        assert f1.read_bytes() == f2.read_bytes()


def test_generate_finds_bad_sub_lots_at_scale(tmp_path):
    # at 8 vertices a modest corpus contains hypothesis-violating instances
    d = tmp_path / "corpus"
    assert main(["generate", "8", "40", "11", str(d)]) == 0
    manifest = json.loads((d / "manifest.json").read_text())
    assert any(
        not inst["flags"]["all_sub_lots_boundary_reduced"]
        for inst in manifest["instances"]
    )


def test_certify_dot_without_witnesses(files, tmp_path):
    # a hypothesis-failed certificate still exports unstyled graphs
    dotdir = tmp_path / "dots"
    assert main(["certify", files["badsub"], "--json", str(tmp_path / "c.json"), "--dot", str(dotdir)]) == 3
    assert "style=" not in (dotdir / "link.dot").read_text()
    assert (dotdir / "selection.dot").exists()


def test_oracle_check(files, capsys):
    assert main(["oracle-check", files["path3"]]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
    assert main(["oracle-check", files["badsub"]]) == 0


def test_missing_file_is_a_parse_error(tmp_path):
    assert main(["validate", str(tmp_path / "nope.lot")]) == 2
