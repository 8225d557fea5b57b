import json

import pytest

from hikeforge.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return {
        "k3": write("k3.json", {"n": 3, "undirected": True, "edges": [[0, 1], [1, 2], [0, 2]]}),
        "k5": write(
            "k5.json", {"n": 5, "undirected": True, "edges": [[i, j] for i in range(5) for j in range(i + 1, 5)]}
        ),
        "lengths": write("lengths.json", [2, 2, 2, 3, 3]),
        "loopbt": write("lb.json", {"n": 2, "arcs": [[0, 1], [1, 0], [1, 1]]}),
        "tri": write("tri.json", {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}),
        "bad": write("bad.json", {"n": 2, "arcs": [[0, 7]]}),
        "broken": str(tmp_path / "broken.json"),
        "tmp": tmp_path,
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_primes(capsys, files):
    code, out, _ = run(capsys, "primes", "--graph", files["k3"])
    assert code == 0 and "5 primes" in out


def test_hikes_json(capsys, files):
    code, out, _ = run(capsys, "hikes", "--graph", files["k3"], "--max-len", "6", "--json")
    assert code == 0
    assert json.loads(out)["counts"] == [1, 0, 3, 2, 9, 12, 31]


def test_global_json_flag(capsys, files):
    code, out, _ = run(capsys, "--json", "hikes", "--graph", files["k3"], "--max-len", "3")
    assert code == 0 and json.loads(out)["counts"] == [1, 0, 3, 2]


def test_hikes_full(capsys, files):
    code, out, _ = run(capsys, "hikes", "--graph", files["tri"], "--max-len", "6", "--full", "--json")
    assert [h["hike"] for h in json.loads(out)["hikes"]] == ["1", "a", "a|a"]


@pytest.mark.parametrize("fn", ["mobius", "one", "tau", "lambda", "mangoldt"])
def test_series(capsys, files, fn):
    code, out, _ = run(capsys, "series", "--graph", files["k3"], "--fn", fn, "--max-len", "4", "--json")
    assert code == 0 and json.loads(out)["function"] == fn


def test_series_text(capsys, files):
    _, out, _ = run(capsys, "series", "--graph", files["k3"], "--max-len", "4")
    assert out.strip() == "1 - a - b - c - d - e"


def test_mangoldt_oracle(capsys, files):
    code, out, _ = run(capsys, "mangoldt", "--graph", files["k3"], "--max-len", "5", "--oracle", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["oracle_agrees"]
    assert all(r["mangoldt"] == r["contiguity"] for r in doc["values"])


@pytest.mark.parametrize("suite", ["mobius", "liouville", "macmahon", "mangoldt", "orbits", "ihara", "lambert", "all"])
def test_verify(capsys, files, suite):
    code, out, _ = run(capsys, "verify", "--graph", files["k3"], "--suite", suite, "--max-len", "6", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_ihara_needs_bidirected(capsys, files):
    code, _, err = run(capsys, "verify", "--graph", files["tri"], "--suite", "ihara")
    assert code == 2 and "bidirected" in err


def test_orbits(capsys, files):
    code, out, _ = run(capsys, "orbits", "--graph", files["k3"], "--max-len", "6", "--oracle", "--json")
    assert code == 0 and json.loads(out)["counts"][:4] == [0, 0, 3, 2]
    code, out, _ = run(capsys, "orbits", "--graph", files["k3"], "--max-len", "6", "--backtrackless", "--json")
    assert json.loads(out)["counts"][3] == 2


def test_ihara(capsys, files):
    assert run(capsys, "ihara", "--graph", files["k3"])[0] == 0
    assert run(capsys, "ihara", "--graph", files["loopbt"])[0] == 2


def test_nt_check(capsys, files):
    code, out, _ = run(capsys, "nt-check", "--primes", "4", "--max-len", "14", "--json")
    assert code == 0 and json.loads(out)["reports"][0]["details"]["hikes"] >= 200


def test_reconstruct_k5(capsys, files):
    code, out, _ = run(capsys, "reconstruct", "--gamma", files["k5"], "--json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ambiguous"
    assert sorted(g["n"] for g in doc["graphs"]) == [3, 6]


def test_reconstruct_with_lengths(capsys, files):
    code, out, _ = run(capsys, "reconstruct", "--gamma", files["k5"], "--lengths", files["lengths"], "--json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "unique" and doc["graphs"][0]["n"] == 3


def test_reconstruct_failure_exit_code(capsys, files, tmp_path):
    path = tmp_path / "c4.json"
    path.write_text(json.dumps({"n": 4, "undirected": True, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}))
    assert run(capsys, "reconstruct", "--gamma", str(path))[0] == 1


def test_reconstruct_needs_undirected(capsys, files):
    assert run(capsys, "reconstruct", "--gamma", files["tri"])[0] == 2


def test_cospectral_expand(capsys, files):
    code, out, _ = run(
        capsys, "cospectral", "--expand", files["loopbt"], "--cycle1", "1", "--cycle2", "0,1", "--shared", "1"
    )
    assert code == 0 and json.loads(out)["n"] == 4


def test_cospectral_expand_bad_cycle(capsys, files):
    code, _, err = run(
        capsys, "cospectral", "--expand", files["loopbt"], "--cycle1", "0", "--cycle2", "0,1", "--shared", "1"
    )
    assert code == 2 and "cycle" in err


def test_cospectral_pair(capsys, files, tmp_path):
    from hikeforge.fixtures import slide_pair
    from hikeforge.graph import dump_digraph

    left, right = slide_pair()
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(dump_digraph(left))
    b.write_text(dump_digraph(right))
    assert run(capsys, "cospectral", "--pair", str(a), str(b))[0] == 0
    assert run(capsys, "cospectral", "--pair", str(a), str(a))[0] == 1


def test_paper_examples(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0 and out.count("PASS") == 5


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["hikes"],
        ["hikes", "--graph", "/nonexistent.json"],
        ["verify", "--graph", "X", "--suite", "bogus"],
        ["hikes", "--graph", "X", "--max-len", "-1"],
        ["hikes", "--graph", "X", "--frobnicate"],
        ["cospectral", "--expand", "X"],
    ],
)
def test_usage_errors(capsys, files, argv):
    argv = [files["k3"] if a == "X" else a for a in argv]
    assert run(capsys, *argv)[0] == 2


def test_format_errors(capsys, files):
    assert run(capsys, "primes", "--graph", files["bad"])[0] == 2
    with open(files["broken"], "w") as fh:
        fh.write("{not json")
    code, _, err = run(capsys, "primes", "--graph", files["broken"])
    assert code == 2 and "malformed JSON" in err


def test_cap_override(capsys, files, monkeypatch):
    monkeypatch.setenv("HIKE_FORGE_CAP", "4")
    assert run(capsys, "hikes", "--graph", files["k3"], "--max-len", "8")[0] == 2
    monkeypatch.setenv("HIKE_FORGE_CAP", "zero")
    assert run(capsys, "hikes", "--graph", files["k3"], "--max-len", "2")[0] == 2


def test_json_byte_stable(capsys, files):
    first = run(capsys, "verify", "--graph", files["k3"], "--max-len", "5", "--json")[1]
    second = run(capsys, "verify", "--graph", files["k3"], "--max-len", "5", "--json")[1]
    assert first == second


def test_help_lists_subcommands(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    for name in ["primes", "hikes", "series", "mangoldt", "verify", "orbits", "ihara", "nt-check", "reconstruct",
                 "cospectral", "paper-examples"]:
        assert name in out
