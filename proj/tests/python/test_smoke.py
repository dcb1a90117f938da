import pytest

import kcontact


def test_catalog_names():
    names = kcontact.catalog_names()
    assert names[0] == "heisenberg3"
    assert "aff1_aff1_sympl" in names
    assert len(names) == 10


def test_contact_and_reeb():
    assert kcontact.contact_check("heisenberg3") == (True, "-1/2")
    assert kcontact.contact_check("heisenberg7") == (True, "-3/4")
    assert kcontact.reeb("heisenberg5") == ["0", "0", "0", "0", "1"]


def test_kcontact_verdicts():
    assert kcontact.is_kcontact("su2", metric="g")
    assert kcontact.is_kcontact("heisenberg5")
    assert not kcontact.is_kcontact("sl2r", metric="g")


def test_round_trip():
    for name in ("r2_sympl", "r4_sympl", "aff1_aff1_sympl"):
        assert kcontact.round_trip(name)


def test_skew_normal_form():
    blocks, q, zeros = kcontact.skew_normal_form([[0, -2], [2, 0]])
    assert blocks == pytest.approx([2.0])
    assert zeros == 0
    assert abs(q[0][0] ** 2 + q[0][1] ** 2 - 1) < 1e-12
    with pytest.raises(kcontact.InputError):
        kcontact.skew_normal_form([[0, 1], [1, 0]])


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        kcontact.reeb("nosuch")
    assert issubclass(kcontact.InvariantViolation, RuntimeError)


def test_report_is_deterministic():
    code, first = kcontact.report("analyze", "heisenberg5", "--auto-metric")
    assert code == 0
    assert first["schema"] == 1
    assert first["kcontact"] and first["ad_xi_zero"]
    assert kcontact.report("analyze", "heisenberg5", "--auto-metric")[1] == first
    code, sl = kcontact.report("contact-check", "sl2r")
    assert code == 0 and sl["contact"]
