import io as stdio
import json
import subprocess
import sys

import pytest

from tropinv import io
from tropinv.cli import run
from tropinv.embed import separating_set
from tropinv.errors import ValidationError
from tropinv.groups import PermGroup
from tropinv.poly import TropPoly
from tropinv.polytope import LatticePolytope
from tropinv.rational import boolean_rational, rat_equals, rewrite_transfer


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def call(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def poly_json(n, terms):
    return {"n": n, "terms": [{"exp": list(e), "coef": str(c)} for e, c in terms]}


F3 = poly_json(1, [((0,), 0), ((1,), 0), ((2,), 0)])
F2 = poly_json(1, [((0,), 0), ((2,), 0)])
S2 = {"n": 2, "generators": ["(1 2)"]}
A3 = {"n": 3, "generators": [[2, 3, 1]]}


# -- JSON formats -------------------------------------------------------------


def test_poly_json_round_trip():
    f = TropPoly(2, {(2, 1): 3, (0, 0): "-1/2"})
    assert io.poly_from_json(io.poly_to_json(f)) == f
    assert io.poly_from_json({"n": 2, "terms": []}).is_zero()


@pytest.mark.parametrize(
    "bad",
    [
        {"n": 1, "terms": [{"exp": [0], "coef": "-inf"}]},
        {"n": 1, "terms": [{"exp": [0], "coef": 3}]},
        {"n": 1, "terms": [{"exp": [0, 1], "coef": "3"}]},
        {"n": 1, "terms": [{"exp": [-1], "coef": "3"}]},
        {"n": 1, "terms": [{"exp": [1], "coef": "1"}, {"exp": [1], "coef": "2"}]},
        {"n": 1, "terms": [{"exp": [1], "coef": "1/0"}]},
        {"terms": []},
    ],
)
def test_poly_json_rejects(bad):
    with pytest.raises(ValidationError):
        io.poly_from_json(bad)


def test_group_json_forms():
    G = io.group_from_json({"n": 4, "generators": [[2, 1, 3, 4], [1, 2, 4, 3]]})
    assert G.order == 4
    H = io.group_from_json({"n": 4, "generators": ["(1 2)", "(3 4)"]})
    assert G.same_elements(H)
    assert io.group_from_json(io.group_to_json(G)).same_elements(G)
    with pytest.raises(ValidationError):
        io.group_from_json({"n": 3, "generators": [[1, 1, 2]]})


def test_polytope_rational_spec_round_trips():
    A = LatticePolytope(3, [(2, 1, 0), (0, 2, 1), (1, 0, 2)])
    assert io.polytope_from_json(io.polytope_to_json(A)) == A
    r = boolean_rational(2, -3)
    assert rat_equals(io.rational_from_json(io.rational_to_json(r)), r)
    spec = separating_set(PermGroup.from_cycles(3, "(1 2 3)"))
    back = io.spec_from_json(json.loads(io.dumps(io.spec_to_json(spec))))
    assert back.polynomials == spec.polynomials and back.group.same_elements(spec.group)
    e = rewrite_transfer(PermGroup.symmetric(2), (13, 2))
    assert io.expr_from_json_checked(json.loads(io.dumps(io.expr_to_json(e)))) == e


def test_expression_schema_rejects():
    with pytest.raises(ValidationError):
        io.expr_from_json_checked({"op": "div", "args": [{"gen": [1]}]})
    with pytest.raises(ValidationError):
        io.expr_from_json_checked({"op": "pow", "m": 0, "arg": {"gen": [1]}})


def test_rational_rejects_zero_denominator():
    with pytest.raises(ValidationError):
        io.rational_from_json({"numerator": poly_json(1, [((0,), 0)]), "denominator": {"n": 1, "terms": []}})


# -- commands ------------------------------------------------------------------


def test_equal_and_witness(tmp_path):
    f, g = write(tmp_path, "f.json", F3), write(tmp_path, "g.json", F2)
    assert call("equal", f, g)[0] == 0
    h = write(tmp_path, "h.json", poly_json(1, [((0,), 0), ((1,), 1), ((2,), 0)]))
    code, out, _ = call("equal", f, h, "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["equal"] is False and data["f"] != data["g"]


def test_canon_round_trip(tmp_path):
    code, out, _ = call("canon", write(tmp_path, "f.json", F3), "--format", "json")
    assert code == 0
    assert io.poly_from_json(json.loads(out)) == io.poly_from_json(F2)
    assert call("canon", write(tmp_path, "f.json", F3))[1].strip() == "0 ⊕ x1^2"


def test_eval_newton_transfer(tmp_path):
    f = write(tmp_path, "f.json", F3)
    assert call("eval", f, "--at", "3")[1].strip() == "6"
    assert call("eval", f, "--at=-1/2")[1].strip() == "0"
    code, out, _ = call("newton", f, "--format", "json")
    assert json.loads(out) == {"n": 1, "vertices": [[0], [2]]}
    g = write(tmp_path, "g.json", S2)
    m = write(tmp_path, "m.json", poly_json(2, [((2, 1), 0)]))
    code, out, _ = call("transfer", "--group", g, m, "--format", "json")
    assert json.loads(out)["terms"] == [{"exp": [1, 2], "coef": "0"}, {"exp": [2, 1], "coef": "0"}]


def test_efun_decompose():
    code, out, _ = call("efun", "--n", 3, "--k", 2, "--format", "json")
    assert code == 0 and len(json.loads(out)["terms"]) == 3
    code, out, _ = call("decompose", "--gamma", "2,1,0", "--format", "json")
    assert json.loads(out) == {"c": [1, 1, 0]}
    assert call("efun", "--n", 3, "--k", 5)[0] == 4


def test_generators_exit_codes(tmp_path):
    code, _, err = call("generators", "--group", write(tmp_path, "a3.json", A3))
    assert code == 4 and "2-cycles" in err
    code, out, _ = call("generators", "--group", write(tmp_path, "s2.json", S2))
    assert code == 0 and out.count("\n") == 2


def test_rewrite_output(tmp_path):
    code, out, _ = call("rewrite", "--group", write(tmp_path, "s2.json", S2), "--beta", "7,0", "--format", "json")
    assert code == 0
    expected = {
        "op": "div",
        "args": [
            {"op": "add", "args": [{"op": "pow", "m": 2, "arg": {"gen": [5, 1]}}, {"op": "pow", "m": 3, "arg": {"gen": [1, 3]}}]},
            {"gen": [3, 2]},
        ],
    }
    assert json.loads(out) == expected


def test_resource_exit(tmp_path):
    g = write(tmp_path, "a3.json", A3)
    assert call("rewrite", "--group", g, "--beta", "100000,0,0", "--max-nodes", 30)[0] == 3


def test_schema_exit(tmp_path):
    bad = write(tmp_path, "bad.json", {"n": 2, "terms": [{"exp": [1], "coef": "0"}]})
    code, _, err = call("canon", bad)
    assert code == 2 and "expected n=2" in err
    assert call("canon", str(tmp_path / "missing.json"))[0] == 2
    assert call("eval", write(tmp_path, "f.json", F3), "--at", "x")[0] == 2
    assert call("no-such-command")[0] == 2


def test_embedding_commands(tmp_path):
    g = write(tmp_path, "a3.json", A3)
    code, out, _ = call("separating", "--group", g, "--format", "json")
    assert code == 0 and json.loads(out)["m"] == 5
    spec = tmp_path / "spec.json"
    spec.write_text(out)
    code, out, _ = call("embed", "--spec", spec, "--at", "3,2,1", "--format", "json")
    assert json.loads(out) == ["3", "5", "6", "8", "7"]
    code, out, _ = call("distance", "--group", g, "--v", "1,2,3", "--w", "3,1,2")
    assert out.strip() == "0"
    runs = [call("distortion", "--spec", spec, "--samples", 60, "--seed", 9, "--format", "json")[1] for _ in range(2)]
    assert runs[0] == runs[1] and json.loads(runs[0])["kind"] == "empirical"


def test_factor_and_census(tmp_path):
    r = write(
        tmp_path,
        "r.json",
        {"numerator": poly_json(1, [((2,), 0), ((5,), 0)]), "denominator": poly_json(1, [((0,), 0)])},
    )
    code, out, _ = call("factor-bx", r, "--format", "json")
    assert json.loads(out) == {"a": 2, "b": 3}
    code, out, _ = call("census", "--group", write(tmp_path, "a3.json", A3), "--bound", 4, "--format", "json")
    assert json.loads(out)[-2:] == [{"B": 3, "count": 3}, {"B": 4, "count": 6}]
    assert call("census", "--group", write(tmp_path, "a3.json", A3), "--bound", 4)[1].startswith("B  count")


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "tropinv", "decompose", "--gamma", "1,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "e3^1"
