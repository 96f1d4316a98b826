import pytest

import permstat


EXAMPLE = [7, 8, 6, 5, 2, 9, 4, 1, 3]


def test_stat_record_of_worked_example():
    rec = permstat.stat_record(EXAMPLE, q=2)
    assert rec["inv_q"] == 23
    assert rec["ell_q"] == 23
    assert rec["Del_q"] == [3, 4, 5, 7, 8]
    assert rec["Des_q"] == [2, 3, 4, 6, 7]
    assert rec["maj_q"] == 22
    assert rec["rmaj_q"] == 23


def test_compose_and_inverse():
    assert permstat.compose([2, 1, 3], [1, 3, 2]) == [2, 3, 1]
    assert permstat.inverse([2, 3, 1]) == [3, 1, 2]
    assert permstat.inversion_count([3, 2, 1]) == 3


def test_decompose_round_trip():
    word = permstat.decompose([2, 3, 1])
    assert word == "s1 | s2"
    assert permstat.recompose(word) == [2, 3, 1]


def test_covering_map_and_fiber():
    assert permstat.f_q([2, 3, 1], 2) == [2, 1]
    members = permstat.fiber([2, 1], 2)
    assert len(members) == 4
    assert all(permstat.f_q(m, 2) == [2, 1] for m in members)


def test_avoidance():
    assert not permstat.avoids_q([1, 3, 2], 1)
    assert permstat.avoids_q([3, 2, 1], 1)
    witness = permstat.pattern_witness([1, 3, 2], 1)
    assert witness == {"positions": [1, 2], "bottom": 3}
    assert permstat.pattern_witness([3, 2, 1], 1) is None


def test_numbers():
    assert permstat.bell_q(3, 2) == 22
    assert permstat.stirling2(4, 2) == 7
    assert permstat.stirling1_unsigned(3, 2) == 3
    assert permstat.h_q(4, 2) == 22
    assert permstat.c_q(2, 2, 2) == 4
    # values beyond machine words stay exact
    assert permstat.bell_q(40, 5) % 5 == 0


def test_distribution_and_verify():
    assert permstat.distribution(3, 2, ["inv_q"]) == "2 + 4*t1"
    report = permstat.verify("qmac2", 4, 2)
    assert report["pass"] is True
    assert report["witness"] is None
    assert "qmac2" in permstat.verify_theorem_ids()


def test_alternating_layer():
    assert permstat.a_decompose([2, 3, 1]) == "a1"
    assert permstat.a_decompose([3, 1, 2]) == "a1^-1"
    assert permstat.ell_A([2, 3, 1]) == 1
    assert permstat.des_set_A([2, 3, 1]) == [1]
    assert permstat.restrict_f([2, 3, 1]) == [2, 1]


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        permstat.stat_record([1, 2, 2], q=1)
    with pytest.raises(ValueError):
        permstat.verify("nonsense", 3, 1)
