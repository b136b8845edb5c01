import json
from fractions import Fraction

import pytest

import leibniz_algebra as la


def test_models_are_lie():
    n = la.build_n_c("3,2")
    assert n.dim == 6
    assert la.is_lie(n) and la.is_nilpotent(n)
    assert la.lower_central_dims(n) == [6, 3, 1, 0]
    assert la.characteristic_sequence(n) == [3, 2, 1]


def test_family_parameters_accept_fractions():
    L = la.build_L("2,1", [Fraction(1, 2), 0], ["-3", 1])
    assert la.identity_failures(L) == 0
    assert not la.is_lie(L)
    h = L.labels.index("h")
    e2 = L.labels.index("e2")
    assert la.product(L, e2, e2) == {h: Fraction(1, 2)}


def test_solvable_extension_is_complete_and_rigid():
    R = la.build_R_two_block(2, 1)
    assert la.center_dim(R) == 0
    assert la.right_annihilator_dim(R) == 1
    assert la.derivation_dim(R) == la.inner_derivation_dim(R)
    assert la.is_complete(R)
    report = la.cohomology(R, 2)
    assert (report["dim_CL"], report["dim_ZL"], report["dim_BL"], report["dim_HL"]) == (512, 57, 57, 0)


def test_json_round_trip():
    R = la.build_R("2,2")
    again = la.Algebra.from_json(R.to_json())
    assert again.to_json() == R.to_json()
    assert again.labels == R.labels


def test_errors_map_to_python_exceptions():
    with pytest.raises(la.InputError):
        la.Algebra.from_json("{")
    with pytest.raises(ValueError):
        la.build_n_c("1,2")
    bad = {"dim": 1, "basis": ["a"],
           "table": [{"i": 0, "j": 0, "products": [{"k": 0, "num": "1", "den": "1"}]}]}
    with pytest.raises(la.MathError):
        la.Algebra.from_json(json.dumps(bad))
    assert la.identity_failures(la.Algebra.from_json(json.dumps(bad), verify=False)) == 1
    with pytest.raises(la.GuardError):
        la.cohomology(la.build_R_two_block(2, 1), 2, max_cells=10)


def test_cli_in_process():
    code, out, _ = la.run_cli(["sweep", "--nmax", "5"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["p"] for r in rows] == [1, 2, 3, 5, 7]
    assert la.partition_count(10) == 42
    assert la.run_cli(["sweep", "--nmax", "0"])[0] == 2
