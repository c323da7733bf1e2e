import io
import json

from cogpoly.cli import run
from conftest import DATA


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_sat_golden():
    code, out, _ = invoke("sat", str(DATA / "g2.cog"))
    assert code == 0
    assert out.strip() == "x^2 + 2*x^2*y + x^3*y + 3*x^2*y^2 + y^3"


def test_sat_methods_agree():
    outputs = {invoke("sat", str(DATA / "g1.cog"), "--method", m)[1]
               for m in ("recursive", "statesum", "cog")}
    assert len(outputs) == 1


def test_sat_dx():
    code, out, _ = invoke("sat", str(DATA / "loop.cog"), "--D", "1")
    assert code == 0 and out.strip() == "x"


def test_yamada_golden():
    code, out, _ = invoke("yamada", str(DATA / "b2cross.cog"), "--value", "Y")
    assert code == 0 and out.strip() == "3"
    code, out, _ = invoke("yamada", str(DATA / "b2flat.cog"),
                          "--value", "R", "--seed", "3")
    assert code == 0
    assert out.strip() == "-A^-2 - 2*A^-1 - 3 - 2*A - A^2"


def test_trans_and_kval():
    code, out, _ = invoke("trans", str(DATA / "loop.cog"))
    assert code == 0
    assert out.strip() == "alpha*t + beta*t + gamma*t + alpha*t^2"
    code, out, _ = invoke("trans", str(DATA / "loop.cog"), "--t", "2", "--kval")
    assert code == 0
    assert out.strip() == "6*alpha + 2*beta + 2*gamma"
    code, _, err = invoke("trans", str(DATA / "loop.cog"), "--kval")
    assert code == 1


def test_genus_and_faces():
    code, out, _ = invoke("genus", str(DATA / "theta.cog"), "--kind", "euler")
    assert code == 0 and out.strip() == "0 1 2"
    code, out, _ = invoke("faces", str(DATA / "theta_planar.srs"))
    assert code == 0 and out.splitlines()[0] == "b: 3"
    code, _, err = invoke("faces", str(DATA / "theta.cog"))
    assert code == 2


def test_iso():
    code, out, _ = invoke("iso", str(DATA / "g1.cog"), str(DATA / "g1.cog"))
    assert code == 0 and out.strip() == "isomorphic"
    code, out, _ = invoke("iso", str(DATA / "g1.cog"), str(DATA / "g2.cog"))
    assert code == 0 and out.strip() == "not isomorphic"


def test_enum():
    code, out, _ = invoke("enum", "--edges", "1", "--connected")
    assert code == 0 and out.split() == ["(1", "1)", "(1)(1)"]


def test_convert_round_trips_every_data_file():
    for path in sorted(DATA.glob("*.cog")) + sorted(DATA.glob("*.srs")):
        code, out, _ = invoke("convert", str(path), "--to", "cog")
        assert code == 0, path
        code2, out2, _ = invoke("convert", str(path), "--to", "gec")
        assert code2 == 0, path
        assert out2.splitlines()[-1].startswith("freeloops:")


def test_json_outputs_parse():
    for argv in (("sat", str(DATA / "g2.cog"), "--json"),
                 ("yamada", str(DATA / "b2flat.cog"), "--json"),
                 ("genus", str(DATA / "theta.cog"), "--kind", "orientable", "--json"),
                 ("faces", str(DATA / "loop_minus.srs"), "--json"),
                 ("enum", "--edges", "2", "--json"),
                 ("iso", str(DATA / "g1.cog"), str(DATA / "g2.cog"), "--json"),
                 ("convert", str(DATA / "theta.cog"), "--to", "gec", "--json")):
        code, out, _ = invoke(*argv)
        assert code == 0
        json.loads(out)


def test_exit_codes():
    code, _, err = invoke("sat")  # missing argument
    assert code == 1 and err
    code, _, err = invoke("sat", str(DATA / "missing.cog"))
    assert code == 2
    code, _, err = invoke("genus", str(DATA / "theta.cog"), "--kind", "flat")
    assert code == 1


def test_parse_error_reports_position(tmp_path):
    bad = tmp_path / "bad.cog"
    bad.write_text("(1 2\n")
    code, _, err = invoke("sat", str(bad))
    assert code == 2 and "line" in err and "column" in err


def test_determinism():
    a = invoke("yamada", str(DATA / "g2.cog"), "--drawings", "3", "--seed", "7")
    b = invoke("yamada", str(DATA / "g2.cog"), "--drawings", "3", "--seed", "7")
    assert a == b


def test_selfcheck():
    code, out, _ = invoke("selfcheck")
    assert code == 0
    assert "selfcheck passed" in out
