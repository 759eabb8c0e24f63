import io
import json

import pytest

from rsinv.cli import dump_json, load_group_spec, run


def call(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


@pytest.fixture
def specs(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return {
        "c4": write("c4.json", {"d": 2, "generators": [[["0", "-1"], ["1", "0"]]]}),
        "minus": write("minus_identity.json", {"d": 2, "generators": [[["-1", "0"], ["0", "-1"]]]}),
        "swap": write("swap.json", {"d": 2, "generators": [[["0", "1"], ["1", "0"]]]}),
        "shear": write("shear.json", {"d": 2, "generators": [[["1", "1"], ["0", "1"]]]}),
        "half": write("half.json", {"d": 2, "generators": [[["1/2", "0"], ["0", "2"]]]}),
        "bad": write("bad.json", "{not json"),
        "badshape": write("badshape.json", {"d": 3, "generators": [[["1", "0"], ["0", "1"]]]}),
        "deriv": write("deriv.json", {"blocks": [2, 1]}),
    }


def test_hilbert_L():
    assert call(["hilbert", "--algebra", "L", "--d", "2", "--degree", "4"]) == (0, "2, 4, 6, 8\n")


def test_hilbert_poly_starts_at_degree_zero():
    assert call(["hilbert", "--algebra", "poly", "--d", "2", "--degree", "3"]) == (0, "1, 2, 3, 4\n")


def test_molien_c4(specs):
    code, out = call(["molien", "--algebra", "poly", "--group", specs["c4"], "--degree", "6"])
    assert code == 0 and out == "1, 0, 1, 0, 3, 0, 3\n"


def test_check_minus_identity(specs):
    code, out = call(["check", "--group", specs["minus"], "--format", "json"])
    obj = json.loads(out)
    assert code == 0
    assert obj["verdict"] == "NotFinitelyGenerated" and obj["rule"] == "finite-group"
    assert obj["witness"]["transcendence_degree"] == 2


def test_check_metabelian_flag(specs):
    code, out = call(["check", "--group", specs["minus"], "--metabelian", "--format", "json"])
    assert code == 0
    assert json.loads(out)["metabelian"]["witness_kind"] == "truncation-evidence"


def test_decompose_text():
    code, out = call(["decompose", "--algebra", "metabelian", "--d", "2", "--degree", "3"])
    assert code == 0 and out.splitlines() == ["1: 1", "1,1: 1", "2,1: 1"]


def test_invariants_and_modgen(specs):
    code, out = call(["invariants", "--algebra", "poly", "--group", specs["swap"], "--degree", "2"])
    assert code == 0 and "degree 2: dim 2" in out
    code, out = call(["modgen", "--group", specs["minus"], "--degree", "6", "--format", "json",
                      "--algebra-report"])
    obj = json.loads(out)
    assert [r["new_generators"] for r in obj["degrees"]] == [4, 0, 8, 0, 12]
    assert obj["algebra_report"]["kind"] == "algebra"


def test_weitzenbock_command(specs):
    code, out = call(["weitzenbock", "--derivation", specs["deriv"], "--degree", "3", "--format", "json"])
    obj = json.loads(out)
    assert code == 0
    assert obj["verdict"]["verdict"] == "InconclusivePerPaper"
    assert all(r["equal"] for r in obj["remark_generation_check"])
    code, out = call(["weitzenbock", "--blocks", "3", "--degree", "2"])
    assert code == 0 and "NotFinitelyGenerated" in out


def test_closure(specs):
    assert call(["closure", "--group", specs["c4"]]) == (0, "order 4\nelements 4\n")


def test_exit_codes(specs):
    assert call(["closure", "--group", specs["bad"]])[0] == 2
    assert call(["closure", "--group", specs["badshape"]])[0] == 2
    assert call(["closure", "--group", specs["shear"], "--cap", "50"])[0] == 3
    assert call(["closure", "--group", specs["half"], "--cap", "50"])[0] == 3
    assert call(["invariants", "--group", specs["c4"], "--degree", "8", "--max-dim", "5"])[0] == 4
    assert call(["weitzenbock"])[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["molien", "--algebra", "L", "--degree", "6"],
    ["modgen", "--degree", "5", "--algebra-report"],
    ["check", "--metabelian"],
    ["invariants", "--algebra", "metabelian", "--degree", "4"],
])
def test_json_round_trip_and_determinism(specs, argv):
    argv = argv + ["--group", specs["swap"], "--format", "json"]
    code, out = call(argv)
    assert code == 0
    assert dump_json(json.loads(out)) + "\n" == out
    assert call(argv) == (code, out)


def test_load_group_spec(specs):
    d, gens = load_group_spec(specs["half"])
    assert d == 2 and gens[0][0][0].denominator == 2
