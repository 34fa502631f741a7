import json

import pytest

from bruhatcube.cli import run
from bruhatcube.perm import parse_perm
from bruhatcube.tadic import parse_net


def out_of(capsys):
    return capsys.readouterr().out


def test_gen_xy_matches_published(capsys):
    assert run(["gen-xy", "--m", "4"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[0] == "0 8 4 12 2 10 6 14 1 9 5 13 3 11 7 15"
    assert lines[1] == "15 7 11 3 13 5 9 1 14 6 10 2 12 4 8 0"


def test_dinv(capsys):
    assert run(["dinv", "0 2 1 3", "3 1 2 0"]) == 0
    assert out_of(capsys).strip() == "4"


def test_leq_exit_codes(capsys):
    assert run(["leq", "0 1 2", "2 1 0"]) == 0
    assert out_of(capsys).strip() == "true"
    assert run(["leq", "1 0 2", "0 2 1"]) == 1
    assert out_of(capsys).strip() == "false"


def test_len_roundtrip(capsys):
    assert run(["len", "0 8 4 12 2 10 6 14 1 9 5 13 3 11 7 15"]) == 0
    assert out_of(capsys).strip() == "44"


def test_malformed_perm_is_usage_error(capsys):
    assert run(["len", "0 1 zz"]) == 2
    err = capsys.readouterr().err
    assert "zz" in err


def test_unknown_flag_rejected():
    assert run(["len", "--bogus", "0 1"]) == 2


def test_census_csv_and_json(capsys):
    assert run(["census", "--n", "4", "--format", "csv"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[0] == "k,total,hypercubes"
    assert lines[1] == "1,58,58"
    assert run(["census", "--n", "4", "--format", "json"]) == 0
    blob = json.loads(out_of(capsys))
    assert blob["n"] == 4
    assert blob["rows"][0] == {"k": 1, "total": 58, "hypercubes": 58}


def test_census_size_guard_exit(capsys):
    assert run(["census", "--n", "9"]) == 3


def test_maxd_json(capsys):
    assert run(["maxd", "--n", "4", "--format", "json"]) == 0
    blob = json.loads(out_of(capsys))
    assert blob == {"n": 4, "f": 4, "x": "0 2 1 3", "y": "3 1 2 0"}


def test_boolean_negative_exit(capsys):
    assert run(["boolean", "0 1 2", "2 1 0"]) == 1
    assert out_of(capsys).strip() == "not boolean"


def test_rpoly_text(capsys):
    assert run(["rpoly", "0 2 1 3", "3 1 2 0"]) == 0
    assert out_of(capsys).strip() == "q^4 - 4q^3 + 6q^2 - 4q + 1"


def test_interval_json_schema(capsys):
    assert run(["interval", "0 2 1 3", "3 1 2 0", "--format", "json"]) == 0
    blob = json.loads(out_of(capsys))
    assert len(blob["elements"]) == 16
    for z in blob["elements"]:
        parse_perm(z)


def test_phi_roundtrip_via_cli(capsys):
    assert run(["phi-encode", "3 1 2 0"]) == 0
    bits = out_of(capsys).strip()
    assert bits == "1111"
    assert run(["phi-decode", bits]) == 0
    assert out_of(capsys).strip() == "3 1 2 0"


def test_flip_cli(capsys):
    assert run(["flip", "0 2 1 3", "--block", "1,0,0"]) == 0
    assert out_of(capsys).strip() == "2 0 1 3"
    assert run(["flip", "0 2 1 3", "--block", "nope"]) == 2


def test_dwd_exit_codes(capsys):
    assert run(["dwd", "0 2 1 3"]) == 0
    assert run(["dwd", "0 1 2 3"]) == 1


def test_net_export_and_check(tmp_path, capsys):
    assert run(["net-export", "0 2 1 3"]) == 0
    text = out_of(capsys)
    assert text.splitlines()[0] == "# net t=2 m=2"
    path = tmp_path / "net.txt"
    path.write_text(text)
    parse_net(text)
    assert run(["net-check", str(path)]) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("# net t=2 m=2\n0 0\n1 1\n2 2\n3 3\n")
    assert run(["net-check", str(bad)]) == 1


def test_digital_coset_cli(capsys):
    assert run(["digital-coset", "--m", "2", "--format", "json"]) == 0
    blob = json.loads(out_of(capsys))
    assert blob["count"] == 4
    assert run(["digital-coset", "--m", "6"]) == 3


def test_sudoku_cli(tmp_path, capsys):
    from test_tadic import SUDOKU_8
    path = tmp_path / "grid.txt"
    path.write_text(SUDOKU_8.strip() + "\n")
    assert run(["sudoku-check", str(path), "--t", "2", "--m", "3"]) == 0
    assert out_of(capsys).strip() == "valid"


def test_embed_check_cli(capsys):
    assert run(["embed-check", "0 2 1 3", "3 1 2 0"]) == 0
    assert out_of(capsys).strip() == "good"


def test_search_cli_deterministic(capsys):
    assert run(["search", "--n", "5", "--seed", "3", "--budget", "200",
                "--format", "json"]) == 0
    first = out_of(capsys)
    assert run(["search", "--n", "5", "--seed", "3", "--budget", "200",
                "--format", "json"]) == 0
    assert out_of(capsys) == first


def test_verify_theorem_cli(capsys):
    assert run(["verify-theorem", "--m", "2"]) == 0
    assert "PASS" in out_of(capsys)


def test_funsearch_pair_cli_reports_honestly(capsys):
    assert run(["funsearch-pair", "--n", "11", "--format", "json"]) == 0
    blob = json.loads(out_of(capsys))
    assert blob["lx"] == 9 and blob["ly"] == 8
    assert blob["comparable"] is False
    assert blob["d"] is None


def test_baseline_cli(capsys):
    assert run(["baseline"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[2] == "20"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    assert run(["len", "1 0", "--out", str(target)]) == 0
    assert target.read_text() == "1\n"
    assert out_of(capsys) == ""


def test_threads_env_default(monkeypatch, capsys):
    monkeypatch.setenv("BRUHATCUBE_THREADS", "2")
    assert run(["census", "--n", "3", "--format", "csv"]) == 0
    assert out_of(capsys).splitlines()[1] == "1,8,8"


def test_perm_outputs_reparse(capsys):
    for argv in (["gen-xy", "--m", "3"],
                 ["gen-xy-t", "--t", "3", "--m", "2"],
                 ["phi-decode", "101101101101"],
                 ["flip", "0 2 1 3", "--block", "2,0,0"]):
        assert run(argv) == 0
        for line in out_of(capsys).splitlines():
            parse_perm(line)
