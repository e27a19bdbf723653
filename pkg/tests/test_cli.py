import json
import subprocess
import sys

import pytest

from alphastar.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, argv in {
        "moyal": ["preset", "moyal"],
        "wv": ["preset", "wick-voros"],
        "rand": ["preset", "random", "--seed", "3"],
        "f": ["preset", "field", "--seed", "1", "--box", "1/2"],
        "g": ["preset", "field", "--seed", "2", "--box", "1/2"],
    }.items():
        paths[name] = tmp_path / f"{name}.json"
        assert main(argv + ["--out", str(paths[name])]) == 0
    beta = tmp_path / "beta.json"
    beta.write_text(json.dumps({"m": 2, "beta": {"2,0": -0.5, "0,2": -0.5}}))
    paths["beta"] = beta
    one = tmp_path / "one.json"
    one.write_text(json.dumps({"m": 2, "modes": [{"freq": ["0", "0"], "coeff": 1}]}))
    paths["one"] = one
    capsys.readouterr()
    return paths


def test_verify_exit_codes(capsys, files):
    code, report = run(capsys, "verify", files["moyal"])
    assert code == 0 and report["passed"]
    code, report = run(capsys, "verify", files["wv"])
    # a valid cocycle that is not harmonic
    assert code == 3
    failed = {c["name"] for c in report["checks"] if not c["passed"]}
    assert failed and all(name.startswith("alpha(p,q)") for name in failed)


def test_invalid_cocycle_reports_residuals(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 2, "theta": [[0, 1], [1, 0]]}))
    code, payload = run(capsys, "verify", bad)
    assert code == 3
    names = [c["name"] for c in payload["report"]["checks"]]
    assert "theta antisymmetry" in names and "associativity identity" in names


def test_input_errors(capsys, tmp_path):
    assert main(["verify", str(tmp_path / "none.json")]) == 2
    junk = tmp_path / "junk.json"
    junk.write_text("[1, 2")
    assert main(["classify", str(junk)]) == 2
    with pytest.raises(SystemExit) as info:
        main(["preset", "nope"])
    assert info.value.code == 2


def test_range_error(capsys, tmp_path):
    a = tmp_path / "a.json"
    a.write_text(json.dumps({"m": 1, "theta": [[0]], "beta": {"2": 1}}))
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"m": 1, "modes": [{"freq": ["30"], "coeff": 1}]}))
    assert main(["star", str(a), str(f), str(f)]) == 4


def test_star_identity_and_determinism(capsys, files, tmp_path):
    code, out = run(capsys, "star", files["rand"], files["one"], files["f"])
    assert code == 0
    assert out == json.loads(files["f"].read_text())
    first, second = tmp_path / "p1.json", tmp_path / "p2.json"
    main(["star", str(files["wv"]), str(files["f"]), str(files["g"]), "--out", str(first)])
    main(["star", str(files["wv"]), str(files["f"]), str(files["g"]), "--out", str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_equivalence_command(capsys, files):
    fs = [files["f"], files["g"], files["f"]]
    code, report = run(capsys, "equivalence", files["wv"], files["moyal"], files["beta"], *fs)
    assert code == 0, report
    assert [c["name"] for c in report["checks"]][1:] == ["n=1", "n=2", "n=3"]
    code, report = run(capsys, "equivalence", files["moyal"], files["wv"], files["beta"], *fs)
    assert code == 3
    assert "precondition" in report["title"]
    assert main(["equivalence", str(files["wv"]), str(files["moyal"]), str(files["beta"]),
                 *map(str, fs + fs)]) == 2


def test_classify_output(capsys, files):
    code, out = run(capsys, "classify", files["moyal"])
    assert code == 0
    assert out["pure_imaginary"]
    assert out["theta"][0][1] == {"re": 0.0, "im": -1.0}
    assert out["commutator"][0][1] == {"re": 0.0, "im": -2.0}
    assert (out["dim_H2_alpha"], out["dim_H2_alpha_star"]) == (2, 1)


def test_console_script(files):
    proc = subprocess.run([sys.executable, "-m", "alphastar.cli", "verify", str(files["moyal"])],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]
