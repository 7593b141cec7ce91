import pytest

from scsrc.cli import BenchRow, format_bench, run


@pytest.fixture
def reads(tmp_path):
    p = tmp_path / "reads.txt"
    p.write_text("AAC\nCAA\n")
    return str(p)


def test_solve(reads, capsys):
    assert run(["solve", reads]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "# lower_bound 3" in out
    assert out[0] == "CAAC"


def test_solve_trace(reads, capsys):
    assert run(["solve", reads, "--trace"]) == 0
    err = capsys.readouterr().err
    assert "# gadget graph" in err and "# matching" in err and "OV=" in err


def test_exact(reads, capsys):
    assert run(["exact", reads]) == 0
    assert "# length 4" in capsys.readouterr().out


def test_greedy(reads, capsys):
    assert run(["greedy", reads]) == 0
    assert capsys.readouterr().out == "CAAC\n# length 4\n"


def test_gen_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(["gen", "--seed", "1", "--reads", "5", "-o", str(a)]) == 0
    assert run(["gen", "--seed", "1", "--reads", "5", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().startswith("# seed 1\n# genome_length 40\n")


def test_usage_errors(capsys):
    assert run([]) == 1
    assert run(["bogus"]) == 1
    assert run(["solve"]) == 1
    assert run(["bench", "--instances", "0"]) == 1


def test_input_errors(tmp_path, capsys):
    assert run(["solve", str(tmp_path / "nope.txt")]) == 2
    assert "cannot read" in capsys.readouterr().err
    bad = tmp_path / "bad.txt"
    bad.write_text("ACG\nAXG\n")
    assert run(["solve", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    big = tmp_path / "big.txt"
    big.write_text("AAC\nCAA\nGAT\n")
    assert run(["exact", str(big), "--max-strings", "2"]) == 2
    assert run(["gen", "--max-len", "99"]) == 2


def test_encode_scs(tmp_path, capsys):
    p = tmp_path / "plain.txt"
    p.write_text("ab\nba\n")
    assert run(["encode-scs", str(p)]) == 0
    assert capsys.readouterr().out == "#alphabet a:A,b:B\nab\nba\n"


def test_encode_dna(tmp_path, capsys):
    p = tmp_path / "x.txt"
    p.write_text("#alphabet x:y\nxy\n")
    assert run(["encode-dna", str(p)]) == 0
    assert capsys.readouterr().out == "#alphabet A:T,C:G\n# block_length 4\nAAGGCCTT\n"


def test_bench_table(tmp_path, capsys):
    out = tmp_path / "bench.tsv"
    figs = tmp_path / "figs"
    assert run(["bench", "--instances", "6", "--seed", "2", "-o", str(out), "--figures", str(figs)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].split("\t") == ["id", "m", "opt", "greedy", "alg", "lower_bound", "verdict"]
    rows = [l.split("\t") for l in lines[1:7]]
    assert [r[0] for r in rows] == [str(i) for i in range(6)]
    assert all(r[-1] == "ok" for r in rows)
    assert "# violations 0" in lines
    assert (figs / "ratio_hist.png").stat().st_size > 0
    assert (figs / "lengths.png").stat().st_size > 0


def test_bench_without_opt(capsys):
    assert run(["bench", "--instances", "3", "--max-strings", "1", "--reads", "4"]) == 0
    out = capsys.readouterr().out
    assert "n/a" in out


def test_verdicts():
    assert BenchRow(0, 2, 4, 4, 10, 3).verdict == "ok"
    assert BenchRow(0, 2, 4, 4, 11, 3).verdict == "VIOLATION"
    assert BenchRow(0, 2, 4, 4, 5, 5).verdict == "VIOLATION"
    assert BenchRow(0, 9, None, 4, 5, 3).verdict == "n/a"
    assert "# max_ratio 2.5000" in format_bench([BenchRow(0, 2, 4, 4, 10, 3)])
