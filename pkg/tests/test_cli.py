import pytest

from foldcube.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def data_lines(text):
    return [l for l in text.splitlines() if not l.startswith("#")]


@pytest.mark.parametrize("argv,edges", [
    (["--n", "3", "--mode", "folded", "--format", "edgelist"], 16),
    (["--n", "4", "--mode", "folded", "--format", "edgelist"], 40),
    (["--n", "4", "--mode", "hypercube"], 32),
])
def test_graph(capsys, argv, edges):
    code, out, _ = run(capsys, "graph", *argv)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# mode=")
    assert f"edges={edges}" in lines[0]
    assert len(lines) == edges + 1


def test_graph_dot_to_file(tmp_path, capsys):
    path = tmp_path / "fq3.dot"
    code, out, _ = run(capsys, "graph", "--n", "3", "--format", "dot", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().count(" -- ") == 16


def test_graph_limit(capsys):
    code, _, err = run(capsys, "graph", "--n", "25")
    assert code == 1 and "limit" in err


def test_order(capsys):
    assert run(capsys, "order", "--n", "4")[1] == "formula=1920\n"
    code, out, _ = run(capsys, "order", "--n", "4", "--brute")
    assert code == 0 and out == "formula=1920 brute=1920 match=true\n"
    code, out, _ = run(capsys, "order", "--n", "3", "--brute")
    assert code == 0
    assert out.splitlines() == ["formula=1152 brute=1152 match=true", "regime=exceptional:K_4,4"]


def test_order_brute_limit(capsys):
    code, _, err = run(capsys, "order", "--n", "6", "--brute")
    assert code == 1 and "limit" in err


def test_order_hypercube(capsys):
    assert run(capsys, "order", "--n", "3", "--mode", "hypercube", "--brute")[1] == "formula=48 brute=48 match=true\n"


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--n", "4", "--from", "0000,1000", "--to", "0110,0111")
    assert code == 0
    assert out == "from=0000,1000 to=0110,0111\nv=0110 phi=0001,0100,0010,1000\nverified=true\n"
    code, out, _ = run(capsys, "witness", "--n", "4", "--from", "0000,1111", "--to", "0000,1000")
    assert code == 0
    assert "v=0000 phi=1111,0100,0010,0001" in out and "verified=true" in out


def test_witness_non_edge(capsys):
    code, _, err = run(capsys, "witness", "--n", "4", "--from", "0000,1100", "--to", "0000,1000")
    assert code == 2
    assert "not an edge: 0000,1100" in err


@pytest.mark.parametrize("arc", ["000,1000", "0000,10a0", "0000", "0000,1000,0100"])
def test_witness_strict_parsing(capsys, arc):
    code, _, _ = run(capsys, "witness", "--n", "4", "--from", arc, "--to", "0000,1000")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["graph", "--n", "x"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["order"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["check", "bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["order", "--n", "1"])
    assert e.value.code == 2


def test_check_all_n4(capsys):
    code, out, _ = run(capsys, "check", "--n", "4", "all")
    assert code == 0
    assert out.splitlines()[-1] == "overall=pass"
    for name in ("lemma-4cycle", "rigidity", "semidirect", "arc-transitive", "connectivity"):
        assert f"{name} n=4 mode=folded: pass" in out


def test_check_lemma_fq3(capsys):
    code, out, _ = run(capsys, "check", "--n", "3", "lemma-4cycle")
    assert code == 0
    assert "census=3:48" in out and "expected-exception" in out


def test_check_connectivity(capsys):
    code, out, _ = run(capsys, "check", "--n", "4", "connectivity")
    assert code == 0 and "kappa=5 expected=5 pass" in out


def test_check_limit_is_failure(capsys):
    code, out, _ = run(capsys, "check", "--n", "9", "lemma-4cycle")
    assert code == 1 and "limit" in out


def test_check_default_sizes(capsys):
    code, out, _ = run(capsys, "check", "rigidity")
    assert code == 0 and "rigidity: sizes=3,4,5,6" in out


def test_output_deterministic(capsys):
    outs = [data_lines(run(capsys, "check", "--n", "4", "all")[1]) for _ in range(2)]
    assert outs[0] == outs[1]
    graphs = [run(capsys, "graph", "--n", "5")[1] for _ in range(2)]
    assert graphs[0] == graphs[1]
