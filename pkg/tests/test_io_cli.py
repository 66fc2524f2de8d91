import json
import math

import numpy as np
import pytest

from contframes import FrameInputError, WeightedFamily, random_family
from contframes.cli import main
from contframes.io import dumps_family, loads_family, read_family, write_family


def test_round_trip(tmp_path):
    fam = random_family(5, 3, "C", seed=7)
    write_family(fam, tmp_path / "f.fam")
    assert read_family(tmp_path / "f.fam") == fam


def test_round_trip_real_with_meta():
    fam = WeightedFamily([0.1, 1 / 3], [[math.pi, -1e-300], [2.5, 7.0]], "R",
                         label="x", tail_bound=1e-5)
    assert loads_family(dumps_family(fam)) == fam


def _doc(**over):
    doc = {"field": "R", "n": 2, "points": [{"weight": 1.0, "value": [1.0, 0.0]},
                                           {"weight": 1.0, "value": [0.0, 1.0]}]}
    doc.update(over)
    return doc


@pytest.mark.parametrize("doc,needle", [
    (_doc(points=[{"weight": -1.0, "value": [1.0, 0.0]}]), "point 0"),
    (_doc(field="C"), "point 0 entry 0"),
    (_doc(n=3), "point 0"),
    ({"field": "R"}, "missing"),
])
def test_rejections(doc, needle):
    with pytest.raises(FrameInputError, match=needle):
        loads_family(json.dumps(doc))


def test_rejects_nan():
    text = json.dumps(_doc()).replace("0.0]", "NaN]", 1)
    with pytest.raises(FrameInputError, match="non-finite"):
        loads_family(text)


def run(capsys, *argv):
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_generate_bounds(tmp_path, capsys):
    f = tmp_path / "d.fam"
    assert run(capsys, "generate", "dirichlet", "--a", 0.5, "--b", 0, "--terms", 100000, "-o", f)[0] == 0
    code, out, _ = run(capsys, "bounds", f)
    assert code == 0
    A = float(out.split()[0].split("=")[1])
    B = float(out.split()[1].split("=")[1])
    assert abs(A - 0.82245) < 2e-4 and abs(B - 2.46735) < 2e-4


def test_cli_check_parseval(tmp_path, capsys):
    good, bad = tmp_path / "g.fam", tmp_path / "b.fam"
    run(capsys, "generate", "mercedes", "--scale", repr(math.sqrt(2 / 3)), "-o", good)
    run(capsys, "generate", "mercedes", "-o", bad)
    assert run(capsys, "check-parseval", good)[0] == 0
    assert run(capsys, "check-parseval", bad)[0] == 1


def test_cli_quotient(tmp_path, capsys):
    f = tmp_path / "r.fam"
    run(capsys, "generate", "random", "--points", 5, "--dim", 2, "--seed", 1, "-o", f)
    code, _, err = run(capsys, "quotient", f, "--vector", "0,0")
    assert code == 2 and "zero test vector" in err
    code, out, _ = run(capsys, "quotient", f, "--vector", "1,1j", "--format", "structured")
    q = json.loads(out)["quotient"]
    assert code == 0 and q["direct"] == pytest.approx(q["trace"]) == pytest.approx(q["synth"])


def test_cli_malformed_file(tmp_path, capsys):
    f = tmp_path / "x.fam"
    f.write_text('{"field": "R", "n": 1, "points": [{"weight": -1, "value": [1]}]}')
    code, _, err = run(capsys, "analyze", f)
    assert code == 2 and "point 0" in err
    assert run(capsys, "analyze", tmp_path / "missing.fam")[0] == 2
    assert run(capsys, "bounds")[0] == 2


def test_cli_analyze_structured_reports_tolerances(tmp_path, capsys):
    f = tmp_path / "r.fam"
    run(capsys, "generate", "random", "--points", 6, "--dim", 3, "--field", "C", "-o", f)
    code, out, _ = run(capsys, "analyze", f, "--format", "structured")
    rep = json.loads(out)
    assert code == 0
    assert rep["tol_parseval"] == 1e-10 and rep["tol_frame"] > 0
    assert rep["is_frame"] is True


def test_cli_extend_check_and_path(tmp_path, capsys):
    f1, f2 = tmp_path / "1.fam", tmp_path / "2.fam"
    run(capsys, "generate", "random", "--points", 12, "--dim", 2, "--seed", 1, "-o", f1)
    run(capsys, "generate", "random", "--points", 12, "--dim", 2, "--seed", 2, "-o", f2)
    assert run(capsys, "extend-check", f1, "--blocks", 3, "--trials", 10, "--seed", 0)[0] == 0
    code, out, _ = run(capsys, "path", f1, f2, "--mode", "frame", "--samples", 11)
    assert code == 0 and "passed True" in out
    # endpoints are not Parseval: precondition violation
    assert run(capsys, "path", f1, f2, "--mode", "parseval")[0] == 2


def test_cli_path_capacity_error(tmp_path, capsys):
    f1, f2 = tmp_path / "1.fam", tmp_path / "2.fam"
    run(capsys, "generate", "random", "--points", 3, "--dim", 2, "--seed", 1, "-o", f1)
    run(capsys, "generate", "random", "--points", 3, "--dim", 2, "--seed", 2, "-o", f2)
    code, _, err = run(capsys, "path", f1, f2)
    assert code == 3 and "effective dimension" in err


def test_cli_perturb(tmp_path, capsys):
    src, out = tmp_path / "s.fam", tmp_path / "o.fam"
    base = np.arange(1.0, 6.0) / 5
    write_family(WeightedFamily(np.ones(5), np.column_stack([base, base]), "R"), src)
    code, text, _ = run(capsys, "perturb", src, "--eps", 0.01, "--seed", 3, "-o", out)
    assert code == 0
    fam = read_family(out)
    from contframes import is_frame
    assert is_frame(fam)
    code, _, _ = run(capsys, "analyze", out)
    assert code == 0


def test_cli_generate_degenerate_warns(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "dirichlet", "--a", 1, "--b", 0, "--terms", 10,
                       "-o", tmp_path / "d.fam")
    assert code == 0 and "integer" in err
