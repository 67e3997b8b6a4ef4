import json

from symcoh.cli import hopf_to_json, main
from symcoh.fields import Field
from symcoh.hopf import cyclic_group_table, group_algebra, validate_hopf

GF3 = Field.prime(3)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_sh_kc3_table_mode(capsys):
    code, out = run_cli(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                        "--mode", "SH", "--max-degree", "5")
    assert code == 0
    assert "1    1    1    0    0" in out.replace("\n", " ")


def test_sh_kc3_json(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SH", "--max-degree", "5")
    assert code == 0
    assert report["dims"] == [1, 1, 1, 0, 0]
    assert report["mode"] == "SH"


def test_json_output_is_byte_identical(capsys):
    args = ("--algebra", "Cp:3", "--field", "gf:3", "--mode", "SH",
            "--max-degree", "4", "--format", "json")
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_cp_table_mode(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:5", "--field", "gf:5",
                            "--mode", "cp-table")
    assert code == 0
    assert [row["rank"] for row in report["table"]] == [2, 2, 1]
    assert all(row["is_free"] for row in report["table"])


def test_validate_s3(capsys):
    code, report = run_json(capsys, "--algebra", "S3", "--field", "gf:5",
                            "--mode", "validate")
    assert code == 0
    assert all(c["pass"] for c in report["checks"])
    assert report["cocommutative"] is True


def test_h_mode_rational_default_field(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--mode", "H",
                            "--max-degree", "3")
    assert code == 0
    assert report["dims"] == [1, 0, 0]


def test_hh_and_shh_modes(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "HH", "--max-degree", "3")
    assert code == 0
    assert report["dims"] == [3, 3, 3]
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SHH", "--max-degree", "3")
    assert code == 0
    assert report["dims"] == [3, 3, 3]


def test_sh_cross_check(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SH", "--max-degree", "3", "--cross-check")
    assert code == 0
    assert report["routes"]["homogeneous"] == report["routes"]["nonhomogeneous"]
    assert report["checks"] == [{"name": "realizations_agree", "pass": True}]


def test_sh_resolution_route(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:5", "--field", "gf:5",
                            "--mode", "SH", "--max-degree", "7",
                            "--route", "resolution")
    assert code == 0
    assert report["dims"] == [1, 1, 1, 1, 1, 0, 0]


def test_resolution_mode(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "resolution", "--max-degree", "3")
    assert code == 0
    assert report["dims"] == [3, 3, 1, 0]
    assert all(c["pass"] for c in report["checks"])


def test_corollary_check_mode(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "corollary-check", "--max-degree", "3")
    assert code == 0
    assert report["routes"]["SHH"] == [3, 3, 3]


def test_compare_adjoint_mode(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "compare-adjoint", "--max-degree", "3")
    assert code == 0
    assert report["routes"]["SHH"] == report["routes"]["SH_adjoint"]


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("SYMCOH_BUDGET", "1000")
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SH", "--max-degree", "6")
    assert code == 3
    assert report["error"]["code"] == 3


def test_schema_error_exit_code(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:4",
                            "--mode", "SH")
    assert code == 2
    code, report = run_json(capsys, "--algebra", "/nonexistent.json",
                            "--mode", "SH")
    assert code == 2


def test_not_commutative_exit_code(capsys):
    code, report = run_json(capsys, "--algebra", "S3", "--field", "gf:5",
                            "--mode", "corollary-check")
    assert code == 1
    assert "NotCommutative" in report["error"]["reason"]


def test_inline_algebra_roundtrip(tmp_path, capsys):
    h = group_algebra(3, cyclic_group_table(3), GF3)
    path = tmp_path / "kc3.json"
    path.write_text(json.dumps(hopf_to_json(h)))
    code, report = run_json(capsys, "--algebra", str(path), "--mode", "SH",
                            "--max-degree", "4")
    assert code == 0
    assert report["dims"] == [1, 1, 1, 0]
    # the serialized form parses back to a valid Hopf algebra
    code, report = run_json(capsys, "--algebra", str(path), "--mode", "validate")
    assert code == 0


def test_inline_algebra_field_override(tmp_path, capsys):
    h = group_algebra(3, cyclic_group_table(3), GF3)
    path = tmp_path / "kc3.json"
    path.write_text(json.dumps(hopf_to_json(h)))
    code, report = run_json(capsys, "--algebra", str(path), "--field", "q",
                            "--mode", "SH", "--max-degree", "3")
    assert code == 0
    assert report["dims"] == [1, 0, 0]


def test_noncocommutative_rejected(tmp_path, capsys):
    # the dual of kS3 is commutative but not cocommutative
    from symcoh.hopf import HopfAlgebra, symmetric_group_table
    h = group_algebra(6, symmetric_group_table(3), Field.prime(5))
    fld = h.field
    mult = [[{} for _ in range(6)] for _ in range(6)]
    for k in range(6):
        for (i, j), c in h.comult[k].items():
            mult[i][j][k] = c
    comult = [dict() for _ in range(6)]
    for i in range(6):
        for j in range(6):
            for k, c in h.mult[i][j].items():
                comult[k][(i, j)] = c
    dual = HopfAlgebra(fld, 6, [f"f{i}" for i in range(6)], mult,
                       list(h.counit), comult, list(h.unit),
                       h.antipode.transpose())
    assert validate_hopf(dual).passed
    path = tmp_path / "dual.json"
    path.write_text(json.dumps(hopf_to_json(dual)))
    code, report = run_json(capsys, "--algebra", str(path), "--mode", "SH",
                            "--max-degree", "2")
    assert code == 1
    assert "NotCocommutative" in report["error"]["reason"]


def test_module_json_loading(tmp_path, capsys):
    # the trivial module written out explicitly
    mod = {"dim": 1, "left_action": [[["1"]], [["1"]], [["1"]]]}
    path = tmp_path / "mod.json"
    path.write_text(json.dumps(mod))
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SH", "--max-degree", "3",
                            "--module", str(path))
    assert code == 0
    assert report["dims"] == [1, 1, 1]


def test_max_degree_must_be_positive(capsys):
    code, report = run_json(capsys, "--algebra", "Cp:3", "--field", "gf:3",
                            "--mode", "SH", "--max-degree", "0")
    assert code == 2
