import os
from fractions import Fraction

import pytest

import latcol

J22 = latcol.jordan_matrix([2, 2])


def test_scalars_are_canonical():
    assert latcol.parse_scalar("2/4-i") == "1/2-i"
    assert latcol.to_fraction("-3/6") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        latcol.to_fraction("1+i")


def test_commutant_and_alg_lat_dimensions():
    assert len(latcol.commutant(J22)) == 8
    assert len(latcol.alg_lat(J22)) == 12
    assert len(latcol.alg_lat(latcol.jordan_matrix([3, 2]))) == 15
    assert latcol.jordan_type(J22) == [2, 2]


def test_intertwiners_accept_fractions():
    a = [[0, Fraction(1, 2)], [0, 0]]
    b = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert len(latcol.intertwiners(a, b)) == 2


def test_col_check_member_and_witness():
    member = latcol.col_check(J22, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]])
    assert member["verdict"] == "MemberExact"
    refuted = latcol.col_check(J22, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]], seed=5)
    assert refuted["verdict"] == "NonMember"
    assert refuted["seed"] == 5
    assert refuted["witness"]["direction"] == "T"


def test_swap_with_spectrum():
    r = latcol.col_check([[0, 0], [0, 1]], [[0, 1], [1, 0]], spectrum=[0, 1])
    assert r["member"] and r["permutation"] == [1, 0]


def test_errors_map_to_python_exceptions():
    with pytest.raises(latcol.PreconditionError):
        latcol.alg_lat([[1, 0], [0, 1]])
    with pytest.raises(latcol.InputError):
        latcol.commutant([[1, 2], [3]])
    with pytest.raises(ValueError):
        latcol.parse_scalar("1/0")


def test_separator_and_hankel():
    assert latcol.diagonal_separator(J22)["verified"]
    s = latcol.hankel_witness(2, 3, [[0, 1, 0], [0, 0, 1]], [0, 1, 0])
    assert latcol.as_fractions(s) == [[0, 1, 0], [0, 0, 1]]


def test_cli_and_suite():
    code, out, _ = latcol.run_cli(["sample-lattice-j2j2", "--grid", "1"])
    assert code == 0 and "count: 91" in out
    data = os.environ.get("LATCOL_TEST_DATA")
    if data:
        code, _, err = latcol.run_cli(["commutant", os.path.join(data, "bad_scalar.txt")])
        assert code == 2 and "bad_scalar.txt:3:3" in err
    assert latcol.run_suite("1")["passed"]
