import io
import json
import logging
from fractions import Fraction

import pytest

from src.api import config, errmsg
from src.api.errors import InvalidInputError, NotSL2
from src.clifford import Sign
from src.cycles import Cycle, CycleContext
from src.eph import jsonio, main, run_command

ELLIPTIC = CycleContext.make(Sign.ELLIPTIC)


def write_document(path, document) -> str:
    path.write_text(json.dumps(document))
    return str(path)


def test_jsonio():
    log = logging.getLogger()
    log.debug('Testing JSON documents')

    document = jsonio.load_document(io.StringIO('{"x": 0.1, "y": "3/4", "z": 2}'))
    assert jsonio.read_scalar(document["x"]) == Fraction(1, 10)
    assert jsonio.read_scalar(document["y"]) == Fraction(3, 4)
    assert jsonio.read_scalar(document["z"], "float") == 2.0
    assert jsonio.read_cycle({"k": 1, "l": 0, "n": 0, "m": -1}) == Cycle(1, 0, 0, -1)
    assert jsonio.write_cycle(Cycle(1, Fraction(1, 2), 0, -1)) == {"k": "1", "l": "1/2", "n": "0", "m": "-1"}

    ctx = jsonio.read_context({"sigma_breve": 1}, ELLIPTIC)
    assert ctx.sigma == Sign.ELLIPTIC and ctx.sigma_breve == Sign.HYPERBOLIC

    with pytest.raises(InvalidInputError):
        jsonio.load_document(io.StringIO("[1, 2]"))
    with pytest.raises(InvalidInputError):
        jsonio.read_point(["1"])
    with pytest.raises(InvalidInputError):
        jsonio.read_scalar(True)
    with pytest.raises(InvalidInputError):
        jsonio.read_context({"tau": 1}, ELLIPTIC)


def test_transform():
    log = logging.getLogger()
    log.debug('Testing the transform command')

    config.init()
    result = run_command("transform", {"g": ["2", "1", "1", "1"], "point": ["0", "1"], "iwasawa": True}, ELLIPTIC)
    assert result["point"] == ["3/2", "1/2"]
    assert result["iwasawa"]["alpha"] == pytest.approx(2 ** 0.5)

    result = run_command("transform", {"subgroup": {"family": "N", "q": "1"}, "point": ["1/2", "3"]}, ELLIPTIC)
    assert result["point"] == ["3/2", "3"]

    result = run_command("transform", {"g": [1, 1, 0, 1], "cycle": [1, 0, 0, -1]}, ELLIPTIC)
    assert result["cycle"] == {"k": "1", "l": "1", "n": "0", "m": "0"}
    assert result["center"] == ["1", "0"]
    assert result["focus"] is None

    with pytest.raises(NotSL2):
        run_command("transform", {"g": [1, 1, 1, 1], "point": [0, 1]}, ELLIPTIC)
    with pytest.raises(InvalidInputError):
        run_command("transform", {"g": [1, 0, 0, 1]}, ELLIPTIC)


def test_relate():
    log = logging.getLogger()
    log.debug('Testing the relate command')

    config.init()
    cycles = [[1, 0, 0, -1], [0, 1, 0, 0]]
    result = run_command("relate", {"relation": "orthogonal", "cycles": cycles}, ELLIPTIC)
    assert result["holds"] is True
    assert result["inner"] == "0"

    result = run_command("relate", {"relation": "intersect", "cycles": cycles}, ELLIPTIC)
    assert sorted(round(p[1]) for p in result["points"]) == [-1, 1]

    result = run_command("relate", {"relation": "ghost", "cycle": [1, 2, 3, 4], "context": {"sigma_breve": 1}}, ELLIPTIC)
    assert result["cycle"] == {"k": "1", "l": "2", "n": "-3", "m": "4"}

    result = run_command("relate", {"relation": "invert", "cycle": [1, 0, 0, -1], "point": [2, 0]}, ELLIPTIC)
    assert result["point"] == ["1/2", "0"]

    with pytest.raises(InvalidInputError):
        run_command("relate", {"relation": "tangent", "cycle": [1, 0, 0, -1]}, ELLIPTIC)


def test_measure():
    log = logging.getLogger()
    log.debug('Testing the measure command')

    config.init()
    points = [["0", "1"], ["3", "5"]]
    result = run_command("measure", {"kind": "distance", "points": points}, ELLIPTIC)
    assert result["value"] == "25"
    assert result["length"] == 5.0

    result = run_command("measure", {"kind": "distance", "points": points, "context": {"sigma": 0}}, ELLIPTIC)
    assert result["value"] == "9"

    parabolic = CycleContext.make(Sign.PARABOLIC)
    result = run_command("measure", {"kind": "from_focus", "points": [[0, 1], [2, 3]]}, parabolic)
    assert result["kind"] == "from_focus(0+)"
    assert result["value"] == "-2"
    assert result["p"] == "1"

    with pytest.raises(InvalidInputError):
        run_command("measure", {"kind": "distance", "points": points[:1]}, ELLIPTIC)


def test_cayley():
    log = logging.getLogger()
    log.debug('Testing the cayley command')

    config.init()
    result = run_command("cayley", {"kind": "Pp", "point": [2, 3]})
    assert result["point"] == ["2", "2"]

    result = run_command("cayley", {"kind": "Pp", "cycle": ["1", "1/2", "1", "-1"]})
    assert result["note"] is not None
    assert jsonio.read_cycle(result["cycle"]) == Cycle(1, Fraction(1, 2), 1, -3)

    with pytest.raises(InvalidInputError):
        run_command("cayley", {"kind": "X", "point": [0, 0]})


def test_main(tmp_path):
    log = logging.getLogger()
    log.debug('Testing the command line')

    source = write_document(tmp_path / "in.json", {"kind": "distance", "points": [[0, 1], [3, 5]]})
    target = tmp_path / "out.json"
    assert main(["measure", source, "-o", str(target)]) == 0
    assert json.loads(target.read_text())["value"] == "25"

    assert main(["--sigma=0", "measure", source, "-o", str(target)]) == 0
    assert json.loads(target.read_text())["value"] == "9"

    assert main(["measure", "--backend", "float", source, "-o", str(target)]) == 0
    assert json.loads(target.read_text())["value"] == pytest.approx(25.0)

    bad = write_document(tmp_path / "bad.json", {"kind": "distance", "points": [[0, 1]]})
    assert main(["measure", bad, "-o", str(target)]) == 2


def test_main_figure(tmp_path):
    log = logging.getLogger()
    log.debug('Testing the figure command')

    target = tmp_path / "orbits.svg"
    assert main(["figure", "k-orbits", "-o", str(target)]) == 0
    assert target.read_bytes().startswith(b"<?xml")
    assert main(["figure", "no-such-figure", "-o", str(target)]) == 2


def test_main_verify(capsys):
    log = logging.getLogger()
    log.debug('Testing the verify command')

    assert main(["verify", "--trials", "1", "--only", "clifford", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is True
    assert report["trials"] == 1
    assert all(r["id"].startswith("clifford") for r in report["results"])


def test_console_streams(capsys):
    log = logging.getLogger()
    log.debug('Testing messages follow the current console')

    config.init()
    assert config.OPTIONS.stderr is None
    errmsg.msg_output("console streams: first")
    assert "console streams: first" in capsys.readouterr().err

    assert main(["verify", "--trials", "0"]) == 0
    capsys.readouterr()
    errmsg.msg_output("console streams: second")
    assert "console streams: second" in capsys.readouterr().err
