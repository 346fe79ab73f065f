import pytest

import twinrow


def test_F_coefficients_n2():
    doc = twinrow.compute("F", 2, order=3)
    assert doc["K"] == 3
    coeffs = doc["coefficients"]
    assert len(coeffs) == 4
    # t^2 coefficient is z2^2
    assert coeffs[2] == [{"exponents": [0, 2], "coeff": "1"}]


def test_schur_basis_and_hooks():
    doc = twinrow.compute("G", 4, basis="schur")
    assert doc["coefficients"][2] == [{"partition": [1, 1, 1, 1], "coefficient": "-1"}]
    assert twinrow.G_hook_sum(2, 4) == {(1, 1, 1, 1): -1}
    assert twinrow.Z_hook_sum(3, 6) == {(3, 1, 1, 1): 1, (2, 2, 2): 1}


def test_box_removal():
    assert twinrow.D1({(2, 1): 1}) == {(2,): 1, (1, 1): 1}
    assert twinrow.D2({(2, 2): 5}) == {(1, 1): 5}


def test_partitions():
    assert twinrow.conjugate([3, 1]) == [2, 1, 1]
    assert twinrow.to_frobenius([2, 2, 2]) == ([1, 0], [2, 1])
    assert twinrow.from_frobenius([1], [2]) == [2, 1, 1]
    assert twinrow.character_z([2, 1, 1], 3) == "z1 z3"


def test_verify_reports():
    doc = twinrow.verify(2)
    assert doc["passed"] + doc["failed"] == len(doc["reports"])
    failing = [(r["identity"], r["index"]) for r in doc["reports"] if r["status"] == "fail"]
    assert len(failing) == 2
    assert all(i in (2, 3) for _, i in failing)


def test_usage_error():
    with pytest.raises(twinrow.TwinrowError) as e:
        twinrow.compute("f", 9)
    assert e.value.code == 2
