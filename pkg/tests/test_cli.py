"""Command-line contract: verbs, formats, exit codes, and shipped TOML files.

The CLI promises deterministic output (fixed orderings, sorted JSON keys),
exit code 0 on success, 1 on computation failure, and 2 on validation
failure.  The packaged descriptor files must rebuild the exact descent data
of the registry builders.
"""

import json
from importlib import resources

import pytest

from parahoric import cli
from parahoric import descriptors as dlib
from parahoric.hecke import HeckeAlgebra, element_from_json
from parahoric.iwahori import IwahoriWeylGroup
from parahoric.rootdata import relative_root_data


def run_cli(*argv):
    return cli.run(list(argv))


def make_algebra(name):
    descent = dlib.build_descriptor(name)
    return HeckeAlgebra(IwahoriWeylGroup(relative_root_data(descent)))


# -- shipped descriptor files --------------------------------------------------------


@pytest.mark.parametrize("name", dlib.descriptor_names())
def test_shipped_toml_rebuilds_the_builder(name):
    text = (resources.files("parahoric") / "descriptors" / f"{name}.toml").read_text()
    loaded = dlib.descent_from_toml(text)
    built = dlib.build_descriptor(name)
    assert loaded.q == built.q
    assert loaded.e == built.e
    assert loaded.f == built.f
    assert loaded.frobenius == built.frobenius
    assert loaded.inertia_gens == built.inertia_gens
    assert loaded.datum.rank == built.datum.rank
    assert loaded.datum.roots == built.datum.roots
    assert loaded.datum.coroots == built.datum.coroots
    assert loaded.datum.simple_indices == built.datum.simple_indices
    assert loaded.datum.pairing == built.datum.pairing


def test_toml_text_round_trip():
    built = dlib.build_descriptor("res_gl2_ram2")
    again = dlib.descent_from_toml(dlib.descent_to_toml(built, "x"))
    assert again.datum.roots == built.datum.roots
    assert again.inertia_gens == built.inertia_gens


def test_load_descriptor_accepts_paths(tmp_path):
    path = tmp_path / "custom.toml"
    path.write_text(dlib.descent_to_toml(dlib.build_descriptor("gl2"), "custom"))
    loaded = dlib.load_descriptor(str(path))
    assert loaded.datum.rank == 2
    with pytest.raises(Exception):
        dlib.load_descriptor("no_such_descriptor")


# -- describe -----------------------------------------------------------------------


def test_describe_split_gl2():
    code, out = run_cli("describe", "--descriptor", "gl2", "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "relative type A1, pi_1 = Z, Omega = Z"


def test_describe_ramified_torus_reports_galois_action():
    code, out = run_cli("describe", "--descriptor", "res_gm_ram2",
                        "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "relative type torus, pi_1 = Z, Omega = Z"
    assert "inertia_image_order = 2" in lines
    assert "frobenius_order = 1" in lines


def test_describe_json_fields():
    code, out = run_cli("describe", "--descriptor", "gl3")
    assert code == 0
    data = json.loads(out)
    assert data["relative_type"] == "A2"
    assert data["omega"] == "Z"
    assert data["affine_nodes"] == [0, 1, 2]


def test_describe_malformed_pairing_names_invariant(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(
        'name = "bad"\n\n[datum]\nrank = 2\n'
        "roots = [[1, -1], [-1, 1]]\ncoroots = [[1, -1], [-1, 1]]\n"
        "simple_indices = [0]\npairing = [[2, -1], [-1, 2]]\n\n"
        "[descent]\nq = 3\nfrobenius = [[1, 0], [0, 1]]\n"
    )
    code, out = run_cli("describe", "--descriptor", str(path))
    assert code == 2
    assert "alpha" in out


# -- adm ----------------------------------------------------------------------------


def test_adm_gl2_standard_class():
    code, out = run_cli("adm", "--descriptor", "gl2", "--mu", "1,0")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3
    assert [e["reduced_word"] for e in data["elements"]] == [[], [0], [1]]
    assert all(e["omega_label"] == [1] for e in data["elements"])


def test_adm_facet_collapses_minuscule_class_to_one_coset():
    code, out = run_cli("adm", "--descriptor", "gl2", "--mu", "1,0",
                        "--facet", "1")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 1
    assert data["elements"][0]["reduced_word"] == []


def test_adm_rejects_wrong_class_length():
    code, out = run_cli("adm", "--descriptor", "gl2", "--mu", "1,0,0")
    assert code == 2
    assert "coordinates" in out


def test_adm_csv_format():
    code, out = run_cli("adm", "--descriptor", "gl2", "--mu", "1,0",
                        "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "omega_label,reduced_word"
    assert len(rows) == 4


# -- bernstein ----------------------------------------------------------------------


def test_bernstein_json_reconstructs_the_element():
    code, out = run_cli("bernstein", "--descriptor", "gl2", "--mu", "1,0")
    assert code == 0
    data = json.loads(out)
    alg = make_algebra("gl2")
    assert element_from_json(alg, data) == alg.z_element((1, 0))


def test_bernstein_deterministic_output():
    first = run_cli("bernstein", "--descriptor", "gl3", "--mu", "1,1,0")
    second = run_cli("bernstein", "--descriptor", "gl3", "--mu", "1,1,0")
    assert first == second
    assert first[0] == 0


# -- testfn -------------------------------------------------------------------------


def test_testfn_semisimple_gl2():
    code, out = run_cli("testfn", "--descriptor", "gl2", "--mu", "1,0")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "iwahori_matsumoto"
    assert data["lift"] == "ss"
    assert data["coefficients"] == {"1,0": "1"}
    assert data["admissible_check"] == {"ok": True, "violations": []}
    assert data["integrality_report"]["ok"] is True
    assert data["integrality_report"]["twist"] == 1
    assert len(data["support"]["terms"]) == 3


def test_testfn_explicit_lift_on_restricted_torus():
    code, out = run_cli("testfn", "--descriptor", "res_gm_ram2", "--mu", "1,1",
                        "--lift", "0")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == {"2": "1"}
    assert data["class"] == [2]

    code, _ = run_cli("testfn", "--descriptor", "res_gm_ram2", "--mu", "1,1",
                      "--lift", "9")
    assert code == 2


def test_testfn_facet_average_stays_integral():
    code, out = run_cli("testfn", "--descriptor", "gl2", "--mu", "1,0",
                        "--facet", "1")
    assert code == 0
    data = json.loads(out)
    assert data["integrality_report"]["ok"] is True
    assert data["facet"] == [1]


def test_testfn_rejects_unstable_weight():
    # the chosen weight is moved by inertia, so no lift operator exists
    code, out = run_cli("testfn", "--descriptor", "res_gm_ram2", "--mu", "1,0")
    assert code == 2
    assert "weight" in out


def test_testfn_deterministic_output():
    first = run_cli("testfn", "--descriptor", "gl3", "--mu", "1,1,0")
    second = run_cli("testfn", "--descriptor", "gl3", "--mu", "1,1,0")
    assert first == second
    assert first[0] == 0


# -- verify -------------------------------------------------------------------------


def test_verify_subset_reports_pass_lines():
    code, out = run_cli("verify", "3,7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS criterion 3:")
    assert lines[1].startswith("PASS criterion 7:")
    assert lines[-1] == "all passed"


def test_verify_rejects_unknown_criterion():
    code, out = run_cli("verify", "0")
    assert code == 2
    assert "criterion" in out
