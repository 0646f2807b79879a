import json

import pytest

from hivecount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_plain(capsys):
    code, out, _ = run(capsys, "count", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")
    assert code == 0
    assert out.strip() == "2"


def test_count_zero_coefficient_exits_zero(capsys):
    code, out, _ = run(capsys, "count", "--lambda", "4,0", "--mu", "1,1", "--nu", "3,3")
    assert code == 0
    assert out.strip() == "0"


def test_count_size_mismatch_is_zero(capsys):
    code, out, _ = run(capsys, "count", "--lambda", "2,1", "--mu", "1,0", "--nu", "9,1")
    assert code == 0
    assert out.strip() == "0"


def test_count_json_envelope(capsys):
    code, out, _ = run(
        capsys, "count", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "count"
    assert doc["method"] == "barvinok"
    assert doc["rank"] == 3
    assert "timings" in doc and "total_s" in doc["timings"]
    assert doc["results"][0]["value"] == 2


def test_count_method_both(capsys):
    code, out, _ = run(
        capsys,
        "count", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
        "--method", "both",
    )
    assert code == 0
    assert out.strip() == "2"


def test_count_bad_weight_exits_two(capsys):
    code, _, err = run(capsys, "count", "--lambda", "1,2", "--mu", "1,0", "--nu", "2,2")
    assert code == 2
    assert err.strip()


def test_count_missing_weight_exits_two(capsys):
    code, _, err = run(capsys, "count", "--lambda", "2,1")
    assert code == 2


def test_count_input_file_batch(tmp_path, capsys):
    batch = tmp_path / "triples.txt"
    batch.write_text(
        "# corpus\n"
        "2,1 2,1 3,2,1\n"
        "1,0 1,0 1,1\n"
        "\n"
    )
    code, out, _ = run(capsys, "count", "--input-file", str(batch))
    assert code == 0
    assert out.split() == ["2", "1"]


def test_count_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "count", "--input-file", "/nonexistent/file.txt")
    assert code == 2


def test_count_naive_cap_exit_four(capsys):
    code, _, err = run(
        capsys,
        "count", "--lambda", "9,7,3,0,0", "--mu", "9,9,3,2,0", "--nu", "10,9,9,8,6",
        "--method", "naive", "--naive-cap", "0",
    )
    assert code == 4


def test_nonzero_output(capsys):
    code, out, _ = run(capsys, "nonzero", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1")
    assert code == 0
    assert out.strip() == "nonzero"
    code, out, _ = run(capsys, "nonzero", "--lambda", "4,0", "--mu", "1,1", "--nu", "3,3")
    assert code == 0
    assert out.strip() == "zero"


def test_kostka_direct_and_hive(capsys):
    for via in ("direct", "hive"):
        code, out, _ = run(
            capsys, "kostka", "--lambda", "2,1", "--mu", "1,1,1", "--via", via
        )
        assert code == 0
        assert out.strip() == "2"


def test_klimyk_term_lines(capsys):
    code, out, _ = run(capsys, "klimyk", "--lambda", "1,0", "--mu", "1,0")
    assert code == 0
    lines = sorted(out.strip().splitlines())
    assert lines == ["1,1 1", "2,0 1"]


def test_stretch_report(capsys):
    code, out, _ = run(
        capsys, "stretch", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--n-max", "6"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["period"] == 1
    assert doc["degree"] >= 1
    assert doc["all_coeffs_nonnegative"] in (True, False)


def test_stretch_json_envelope(capsys):
    code, out, _ = run(
        capsys,
        "stretch", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,1", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "stretch"
    assert doc["report"]["period"] == 1


def test_stretch_insufficient_samples_exit_three(capsys):
    code, _, err = run(
        capsys,
        "stretch", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--n-max", "2",
    )
    assert code == 3


def test_triangulate_rank2(tmp_path, capsys):
    out_file = tmp_path / "r2.txt"
    code, out, _ = run(capsys, "triangulate", "--rank", "2", "--out", str(out_file))
    assert code == 0
    assert out.startswith("PASS rank=2 cells=1")
    assert out_file.exists()


def test_triangulate_json(tmp_path, capsys):
    out_file = tmp_path / "r3.json.txt"
    code, out, _ = run(
        capsys, "triangulate", "--rank", "3", "--out", str(out_file), "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "triangulate"
    assert doc["unimodular"] is True
    assert doc["cells"] == 7


def test_export_stdout_counts(capsys):
    code, out, _ = run(capsys, "export", "--lambda", "0,0", "--mu", "0,0", "--nu", "0,0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "10 7"
    assert lines[-1].startswith("linearity 7 ")


def test_export_round_trip_count(tmp_path, capsys):
    from hivecount import count_barvinok, read_polytope_file

    path = tmp_path / "hive.poly"
    code, out, _ = run(
        capsys,
        "export", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--out", str(path),
    )
    assert code == 0
    poly = read_polytope_file(path)
    assert count_barvinok(poly).value == 2


def test_export_homogenized(tmp_path, capsys):
    path = tmp_path / "ghive.poly"
    code, out, _ = run(
        capsys,
        "export", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,1",
        "--homogenized", "--out", str(path),
    )
    assert code == 0
    text = path.read_text()
    header = text.splitlines()[0].split()
    # rank-2 homogenized system: 10 equalities plus 9 sign rows over 9 columns
    assert header == ["19", "10"]
    assert "linearity 10" in text


def test_unknown_subcommand_raises_system_exit(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
