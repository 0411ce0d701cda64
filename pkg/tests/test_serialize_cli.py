import json
from pathlib import Path

import pytest

from knotweights import cli
from knotweights.bcr import wheel_bcr
from knotweights.jacobi import JacobiDiagram, class_of, wheel
from knotweights.serialize import from_json, to_json

FIXTURES = Path(__file__).parent / "fixtures"


def test_jacobi_round_trip():
    w = wheel(2)
    again = from_json(to_json(w))
    assert class_of(again) == class_of(w)
    assert again.univalent_order == w.univalent_order


def test_numbered_round_trip():
    w = wheel(2)
    d = JacobiDiagram(w.nv, w.univalent_order, w.edges, w.orient,
                      numbering={i: i + 1 for i in range(4)})
    again = from_json(to_json(d))
    assert again.numbering == d.numbering


def test_bcr_round_trip():
    b = wheel_bcr(3)
    again = from_json(to_json(b))
    assert again.type_of == b.type_of
    assert again.external == b.external


def test_serialization_is_deterministic():
    a = to_json(wheel(3))
    b = to_json(wheel(3))
    assert a == b
    obj = json.loads(a)
    assert list(obj) == ["kind", "vertices", "edges", "univalent_order"]


def test_golden_bytes_single_chord():
    from knotweights.jacobi import single_chord
    assert to_json(single_chord()) == (
        '{"kind":"jacobi",'
        '"vertices":[{"id":0,"class":"univalent"},'
        '{"id":1,"class":"univalent"}],'
        '"edges":[{"id":0,"from":0,"to":1,"class":"plain"}],'
        '"univalent_order":[0,1]}\n')


def _run(tmp_path, monkeypatch, *argv):
    monkeypatch.setenv("KNOTWEIGHTS_CACHE_DIR", str(tmp_path / "cache"))
    return cli.main(list(argv))


def test_cli_dim(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch, "dim", "--degree", "0") == 0
    out = capsys.readouterr().out
    assert "dim A = 1" in out


def test_cli_verify_prop32_degree_two(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch,
                "verify", "prop32", "--degree", "2") == 0
    assert "0 failures" in capsys.readouterr().out


def test_cli_verify_lemma33(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch,
                "verify", "lemma33", "--degree", "2") == 0
    assert "wbcr(wheel_2) = 2" in capsys.readouterr().out


def test_cli_weight_and_wbcr(tmp_path, monkeypatch, capsys):
    f = tmp_path / "w2.json"
    f.write_text(to_json(wheel(2)))
    assert _run(tmp_path, monkeypatch,
                "weight", "--system", "wc", "--diagram", str(f)) == 0
    assert capsys.readouterr().out.strip() == "-2"
    assert _run(tmp_path, monkeypatch,
                "weight", "--system", "wcp", "--diagram", str(f)) == 0
    assert capsys.readouterr().out.strip() == "-2"
    assert _run(tmp_path, monkeypatch,
                "wbcr", "--diagram", str(f)) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_alexander(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch, "alexander", "--json",
                "--pd", str(FIXTURES / "3_1.pd"),
                "--series", "4", "--zbcr") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["delta"] == "t - 1 + t^-1"
    assert data["zbcr"]["2"] == "-1"
    assert data["zbcr"]["4"] == "5/12"


def test_cli_enumerate_json_stable(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch, "enumerate", "jacobi",
                "--degree", "1", "--json", "--no-cache") == 0
    first = capsys.readouterr().out
    assert _run(tmp_path, monkeypatch, "enumerate", "jacobi",
                "--degree", "1", "--json", "--no-cache") == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["count"] == 2


def test_cli_cache_round_trip(tmp_path, monkeypatch, capsys):
    assert _run(tmp_path, monkeypatch, "dim", "--degree", "1") == 0
    first = capsys.readouterr().out
    cache_files = list((tmp_path / "cache").glob("*.pickle"))
    assert cache_files
    assert _run(tmp_path, monkeypatch, "dim", "--degree", "1") == 0
    assert capsys.readouterr().out == first


def test_cli_usage_error_exits_two(tmp_path, monkeypatch):
    with pytest.raises(SystemExit) as err:
        _run(tmp_path, monkeypatch, "verify", "nonsense", "--degree", "2")
    assert err.value.code == 2


def test_cli_bad_diagram_file_reports_error(tmp_path, monkeypatch, capsys):
    f = tmp_path / "bad.pd"
    f.write_text("X(1,2,3)\n")
    assert _run(tmp_path, monkeypatch, "alexander", "--pd", str(f)) == 2
    assert "error" in capsys.readouterr().err
