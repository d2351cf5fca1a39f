import json

import pytest

from hdecomp.cli import main
from hdecomp.graph import complete_multipartite, named_graph
from hdecomp.graph6 import emit_graph6, write_graph6_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_sigma(capsys):
    code, obj = run_json(capsys, "sigma", "--h", "k222")
    assert code == 0 and obj == {"sigma": 2}


def test_sigma_graph6_literal(capsys):
    code, obj = run_json(capsys, "sigma", "--h", emit_graph6(named_graph("k4")))
    assert code == 0 and obj == {"sigma": 1}


def test_critical(capsys):
    assert run_json(capsys, "critical", "--h", "c5")[1] == \
        {"edge_critical": True}
    assert run_json(capsys, "critical", "--h", "bowtie")[1] == \
        {"edge_critical": False}


def test_family_with_files(capsys, tmp_path):
    out = str(tmp_path / "fam")
    code, obj = run_json(capsys, "family", "--h", "k222", "--out", out)
    assert code == 0
    assert obj["family"]["member_count"] == 1
    assert obj["minimal_subfamily"]["minimal"] is True
    sidecar = json.loads((tmp_path / "fam.minimal.json").read_text())
    assert sidecar["member_count"] == 1
    assert (tmp_path / "fam.family.g6").read_text().strip()


def test_ex_and_biex(capsys, tmp_path):
    fam = tmp_path / "fam.g6"
    write_graph6_file(fam, [named_graph("c4")])
    code, obj = run_json(capsys, "ex", "--n", "6", "--family", str(fam))
    assert code == 0 and obj["value"] == 7 and obj["status"] == "exact"
    code, obj = run_json(capsys, "biex", "--h", "k222", "--n", "6")
    assert code == 0 and obj["value"] == 7


def test_cache_env(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache.jsonl"
    monkeypatch.setenv("HDECOMP_CACHE", str(cache))
    run_json(capsys, "biex", "--h", "bowtie", "--n", "5")
    assert cache.exists() and cache.read_text().strip()


def _host_file(tmp_path):
    g = complete_multipartite([5, 5]).add_edges([(0, 1)])
    path = tmp_path / "g.g6"
    write_graph6_file(path, [g])
    return g, str(path)


def test_pack_phi(capsys, tmp_path):
    _, path = _host_file(tmp_path)
    code, obj = run_json(capsys, "pack", "--g", path, "--h", "k3")
    assert code == 0 and obj["size"] == 1
    code, obj = run_json(capsys, "phi", "--g", path, "--h", "k3")
    assert code == 0 and obj["t"] == 24


def test_phi_n(capsys):
    code, obj = run_json(capsys, "phi-n", "--h", "k3", "--n", "5")
    assert code == 0
    assert obj["value"] == 6 and obj["graphs_scanned"] == 34
    assert obj["witnesses"]


def test_construct(capsys, tmp_path):
    out = str(tmp_path / "lb.g6")
    code, obj = run_json(capsys, "construct", "--h", "bowtie", "--n", "8",
                         "--out", out)
    assert code == 0
    assert obj["certificate"]["h_free"] is True
    assert (tmp_path / "lb.g6").exists()


def test_decompose_verify_round_trip(capsys, tmp_path):
    _, path = _host_file(tmp_path)
    out = str(tmp_path / "run")
    code, raw = run(capsys, "decompose", "--g", path, "--h", "k3",
                    "--out", out)
    assert code == 0
    rep = json.loads(raw)
    assert rep["t"] == 24
    assert json.loads((tmp_path / "run.report.json").read_text()) == rep
    code, obj = run_json(capsys, "verify", "--g", path, "--d", out + ".dec")
    assert code == 0 and obj["valid"] is True


def test_verify_rejects_tampered(capsys, tmp_path):
    _, path = _host_file(tmp_path)
    out = str(tmp_path / "run")
    run(capsys, "decompose", "--g", path, "--h", "k3", "--out", out)
    dec = tmp_path / "run.dec"
    lines = dec.read_text().splitlines()
    dec.write_text("\n".join(ln for ln in lines if not ln.startswith("E"))
                   + "\n")
    code, obj = run_json(capsys, "verify", "--g", path, "--d", str(dec))
    assert code == 1 and obj["valid"] is False and obj["violation"]


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "4")
    assert code == 0 and len(out.strip().splitlines()) == 11


def test_exit_codes(capsys):
    assert main(["sigma", "--h", "nope$$"]) == 1  # unparsable pattern
    assert main(["family", "--h", "c4"]) == 1     # bipartite: domain error
    assert main(["biex", "--h", "k222", "--n", "6", "--budget", "10"]) == 0
    assert main(["enumerate", "--n", "12"]) == 3  # above enumeration cap
    with pytest.raises(SystemExit) as exc:
        main(["bogus-subcommand"])
    assert exc.value.code == 2
    capsys.readouterr()
