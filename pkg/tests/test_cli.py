import json

import pytest

from gsalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def rel_yx(tmp_path):
    f = tmp_path / "rel.txt"
    f.write_text("y*x\n")
    return str(f)


@pytest.fixture
def comm2(tmp_path):
    f = tmp_path / "comm2.txt"
    f.write_text("x*y - y*x\nx*x\ny*y\n")
    return str(f)


@pytest.fixture
def profile_r3(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"d": 2, "degree_counts": {"3": 1}}))
    return str(f)


def test_hilbert_single_relation(capsys, rel_yx):
    code, data = run_json(capsys, "hilbert", "--gens", "2", "--relations", rel_yx,
                          "--max-degree", "12", "--json")
    assert code == 0
    assert data["schema"] == "gsalg/1"
    assert data["command"] == "hilbert"
    assert data["ok"] is True
    rep = data["report"]
    assert rep["series"] == list(range(2, 14))
    assert rep["a0"] == 1
    assert rep["gs"]["ok"] is True
    assert rep["min_series"] == list(range(2, 14))
    assert rep["attains_min"] is True
    assert "config" in data and "seed" in data


def test_hilbert_free_algebra(capsys):
    code, data = run_json(capsys, "hilbert", "--max-degree", "6", "--json")
    assert code == 0
    assert data["report"]["series"] == [2, 4, 8, 16, 32, 64]


def test_certify_profile_witness(capsys, profile_r3):
    code, data = run_json(capsys, "certify", "--profile", profile_r3,
                          "--partial-degree", "3", "--json")
    assert code == 0
    rep = data["report"]
    assert rep["certified"] is True
    assert rep["witness"] == "4/5"
    assert rep["value"] == "-11/125"
    assert rep["points_checked"] == 4


def test_certify_without_witness_exits_one(capsys, tmp_path):
    f = tmp_path / "p2.json"
    f.write_text(json.dumps({"d": 2, "degree_counts": {"2": 1}}))
    code, data = run_json(capsys, "certify", "--profile", str(f), "--json")
    assert code == 1
    assert data["ok"] is False
    assert data["report"]["certified"] is False
    assert "inconclusive" in data["report"]["note"]


def test_certify_from_relation_file(capsys, rel_yx):
    code, data = run_json(capsys, "certify", "--relations", rel_yx, "--json")
    assert code == 1      # one quadratic relation has no witness


def test_quotient_commutative_pair(capsys, comm2):
    code, data = run_json(capsys, "quotient", "--gens", "2", "--relations", comm2,
                          "--precision", "8", "--json")
    assert code == 0
    rep = data["report"]
    assert rep["findim"]["k"] == 3
    assert rep["findim"]["total_dim"] == 4
    assert rep["commutativity"]["commutative_at_precision"] is True
    assert rep["threshold"]["construction_size"] == 3


def test_quotient_infinite_case(capsys, tmp_path):
    f = tmp_path / "one.txt"
    f.write_text("x*y - y*x\n")
    code, data = run_json(capsys, "quotient", "--relations", str(f), "--json")
    assert code == 0
    assert data["report"]["findim"] == {"certified": False}


def test_ladder_report(capsys):
    code, data = run_json(capsys, "ladder", "--top", "3", "--strategy", "lex-greedy",
                          "--e-max-degree", "5", "--witness", "2", "--json")
    assert code == 0
    rep = data["report"]
    assert all(rep["verify"].values())
    degrees = [e["k"] for e in rep["e_pipeline"]]
    assert degrees == [1, 2, 3, 4, 5]
    assert all(e["cover_bound"]["ok"] for e in rep["e_pipeline"])
    assert rep["witness"]["independent"] is True


def test_schedule_from_degrees(capsys):
    code, data = run_json(capsys, "schedule", "--degrees", "300,300,300", "--json")
    assert code == 1      # window 8 cannot carry these counts
    assert data["ok"] is False


def test_schedule_from_profile(capsys, tmp_path):
    prof = {"levels": [{"n": 8, "r": "65536"}]}
    f = tmp_path / "prof.json"
    f.write_text(json.dumps(prof))
    code, data = run_json(capsys, "schedule", "--profile", str(f), "--json")
    assert code == 1      # validation fails (half_level_upper), schedule itself works
    rep = data["report"]
    assert rep["schedule"]["levels"][0]["e"] == 7
    assert rep["validation"]["ok"] is False


def test_bounds_at_degree(capsys, tmp_path):
    prof = {"levels": [{"n": 8, "r": "65536"}]}
    f = tmp_path / "prof.json"
    f.write_text(json.dumps(prof))
    code, data = run_json(capsys, "bounds", "--profile", str(f), "--at", "2^10", "--json")
    assert code == 0
    rep = data["report"]["bounds"]
    assert rep["consistent"] is True
    assert rep["k"] == 8 and rep["j"] == 8


def test_c35_tower(capsys):
    code, data = run_json(capsys, "c35", "--count", "2", "--json")
    assert code == 0
    rep = data["report"]
    assert rep["window_map"] == {"1": 101, "2": 206060201}
    assert rep["class_checks"]["ok"] is True


def test_byte_determinism(capsys, comm2):
    _, out1, _ = run(capsys, "quotient", "--relations", comm2, "--precision", "8", "--json")
    _, out2, _ = run(capsys, "quotient", "--relations", comm2, "--precision", "8", "--json")
    assert out1 == out2


def test_text_mode_mentions_key_facts(capsys, rel_yx):
    code, out, _ = run(capsys, "hilbert", "--relations", rel_yx, "--max-degree", "4",
                       "--text")
    assert code == 0
    assert "series" in out
    assert "schema" in out


def test_parse_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("x*?y\n")
    code, out, err = run(capsys, "hilbert", "--relations", str(f), "--json")
    assert code == 2
    assert out == ""
    assert "parse error" in err
    assert "column" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "hilbert", "--relations", "/nonexistent/nope.txt", "--json")
    assert code == 2 and err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--json"])        # --at is required
    assert exc.value.code == 2
