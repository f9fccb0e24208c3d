import json
import pathlib
from fractions import Fraction

import pytest

import lietriple as lt

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_affine_bracket_is_exact():
    a = lt.lie_to_lya(lt.affine2())
    assert a.dim == 2
    assert a.bracket([1, 0], [0, 1]) == [1, 0]
    assert a.bracket(["1/2", 0], [0, Fraction(3)]) == [Fraction(3, 2), 0]
    assert all(isinstance(x, Fraction) for x in a.bracket([1, 0], [0, 1]))


def test_floats_are_refused():
    a = lt.lie_to_lya(lt.affine2())
    with pytest.raises(lt.InputError):
        a.bracket([0.5, 0], [0, 1])
    with pytest.raises(ValueError):
        a.bracket([1, 0, 0], [0, 1])


def test_verify_reports():
    rep = lt.verify_ly(lt.omni_lie(1))
    assert rep["passed"]
    assert [c["label"] for c in rep["checks"]] == ["LY1", "LY2", "LY3", "LY4", "LY5", "LY6"]
    broken = lt.load(str(FIXTURES / "a2_broken.json"))
    bad = lt.verify_ly(broken)
    assert not bad["passed"]
    ly1 = next(c for c in bad["checks"] if c["label"] == "LY1")
    assert ly1["witnesses"]


def test_cohomology_dimensions():
    a = lt.lie_to_lya(lt.affine2())
    r = lt.adjoint_rep(a)
    assert lt.h3445_dims(a, r) == (9, 3, 6)
    assert lt.yamaguti_h_dims(2, a, r) == (4, 3, 1)
    assert lt.yamaguti_h_dims(2, lt.abelian(2), lt.zero_rep(2, 1)) == (3, 0, 3)


def test_operators_compose_to_zero():
    a = lt.lie_to_lya(lt.so3())
    r = lt.adjoint_rep(a)
    d2, d3 = lt.delta2(a, r), lt.delta3(a, r)
    assert d3.shape[1] == d2.shape[0]
    assert (d3 @ d2).is_zero()


def test_documents_round_trip():
    text = (FIXTURES / "a2_cocycle.json").read_text()
    q = lt.loads(text)
    assert lt.kind_of(text) == "quadruple"
    assert q.to_json() == text
    a = lt.load(str(FIXTURES / "a2.json"))
    r = lt.load(str(FIXTURES / "a2_adjoint.json"))
    assert lt.is_cocycle_3445(q, a, r)
    t = lt.skeletal_from_data(a, r, q)
    assert t.is_skeletal() and not t.is_strict()
    assert lt.verify_two_term(t)["passed"]


def test_schema_errors_surface_as_input_errors():
    doc = json.loads((FIXTURES / "a2.json").read_text())
    doc["payload"]["typo"] = 1
    with pytest.raises(lt.InputError, match=r"\$\.payload\.typo"):
        lt.loads(json.dumps(doc))


def test_extension_cocycle():
    e = lt.heisenberg_extension()
    assert lt.verify_extension(e)["passed"]
    q = lt.extract_theta(e)
    assert not q.is_zero()
    assert lt.is_cocycle_3445(q, e.t, lt.induced_representation(e))


def test_cli_in_process():
    code, out, err = lt.run(["cohomology", str(FIXTURES / "a2.json"), str(FIXTURES / "a2_adjoint.json"), "--json"])
    assert code == 0, err
    assert json.loads(out)["results"]["dims"] == {"B": 3, "H": 6, "Z": 9}
    code, _, err = lt.run(["verify", "lie", str(FIXTURES / "a2.json")])
    assert code == 2 and err.startswith("error: ")
