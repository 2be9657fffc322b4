import pytest

from triarray.catalog import entry_ids, list_entries, load_entry
from triarray.diffsets import multiplier_report


def test_manifest_contents():
    assert entry_ids() == ("B.3", "B.5", "C.7", "D.8", "AII.17", "J.22", "J.23", "Fano")
    assert len(list_entries()) == 8


def test_every_entry_verifies_with_printed_parameters():
    for entry in list_entries():
        group, d = entry.load()
        assert d.params == entry.expected_params
        assert set(d.member_names) == set(entry.members)


def test_unknown_id_lists_available():
    with pytest.raises(ValueError) as err:
        load_entry("Z.99")
    assert "B.3" in str(err.value)


def test_expected_reports_match():
    for entry in list_entries():
        if entry.expected_report is not None:
            _, d = entry.load()
            assert multiplier_report(d).as_row() == entry.expected_report


def test_abelian_entries_admit_minus_one():
    for eid in ("B.3", "B.5", "C.7", "D.8", "AII.17"):
        _, d = load_entry(eid)
        assert multiplier_report(d).has_minus_one_multiplier is True


def test_specific_groups():
    g_b, _ = load_entry("B.3")
    assert g_b.is_abelian and g_b.order == 16
    g_j, _ = load_entry("J.22")
    assert not g_j.is_abelian
    a, b = g_j.generators["a"], g_j.generators["b"]
    assert g_j.mul(b, a) == g_j.mul(g_j.power(a, 5), b)
    g_f, d_f = load_entry("Fano")
    assert g_f.order == 7 and d_f.member_names == ("1", "2", "4")
