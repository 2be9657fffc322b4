import pytest

from triarray.catalog import load_entry
from triarray.diffsets import multiplier_report, verify_difference_set
from triarray.errors import ParameterMismatchError, UnsupportedUError
from triarray.family import (expected_array_parameters, family_checks, family_triple_array,
                             generate_family_member, hadamard_parameters, inverse_closed,
                             menon_complement_product, square_free_part)
from triarray.groups import make_abelian


def _trivial_seed():
    g = make_abelian([2, 2], "ab", name="Z2xZ2")
    return verify_difference_set(g, [g.identity], allow_trivial=True)


def test_hadamard_parameter_classification():
    assert hadamard_parameters(16, 6, 2).u == 2
    assert hadamard_parameters(16, 6, 2).sign == "-"
    assert hadamard_parameters(16, 10, 6).sign == "+"
    assert hadamard_parameters(36, 15, 6).u == 3
    assert hadamard_parameters(4, 1, 0).u == 1
    assert hadamard_parameters(7, 3, 1) is None
    assert hadamard_parameters(16, 6, 3) is None


def test_square_free_part():
    assert square_free_part(1) == 1
    assert square_free_part(12) == 3
    assert square_free_part(144) == 1
    assert square_free_part(10) == 10


def test_menon_product_of_trivial_seeds_gives_16_6_2():
    d = menon_complement_product(_trivial_seed(), _trivial_seed())
    assert d.params == (16, 6, 2)
    assert inverse_closed(d)
    assert multiplier_report(d).has_minus_one_multiplier


def test_menon_product_with_order_36_seed():
    seed3 = generate_family_member(3).diffset
    d = menon_complement_product(_trivial_seed(), seed3)
    assert d.params == (144, 66, 30)
    assert inverse_closed(d)


def test_menon_product_of_two_16_6_2_sets():
    d8 = load_entry("D.8")[1]
    d = menon_complement_product(d8, d8)
    assert d.params == (256, 120, 56)
    assert inverse_closed(d)


def test_menon_product_rejects_non_hadamard():
    fano = load_entry("Fano")[1]
    with pytest.raises(ParameterMismatchError):
        menon_complement_product(fano, fano)


def test_generate_u2_is_the_printed_reversible_set():
    member = generate_family_member(2)
    assert member.diffset.params == (16, 6, 2)
    assert member.provenance.to_json() == {"u": 2, "seed": "D.8"}
    assert inverse_closed(member.diffset)


def test_generate_u3_uses_a_reversible_translate():
    member = generate_family_member(3)
    assert member.diffset.params == (36, 15, 6)
    assert inverse_closed(member.diffset)
    assert member.provenance.to_json()["seed"].startswith("AII.17")


def test_generate_u6_composition():
    member = generate_family_member(6)
    assert member.diffset.params == (144, 66, 30)
    tree = member.provenance.to_json()
    assert tree["u"] == 6 and "compose" in tree


def test_generate_rejects_unreachable_u():
    with pytest.raises(UnsupportedUError) as err:
        generate_family_member(5)
    assert err.value.obstruction == "square-free"
    assert "square-free" in str(err.value)

    with pytest.raises(UnsupportedUError) as err:
        generate_family_member(9)     # square-free part 1, but odd and not a seed
    assert err.value.obstruction == "no-seed-decomposition"

    with pytest.raises(UnsupportedUError) as err:
        generate_family_member(24)    # group order 2304 beyond the table cap
    assert err.value.obstruction == "order-cap"

    with pytest.raises(UnsupportedUError):
        generate_family_member(0)


def test_family_members_pass_sanity_and_parity():
    for u in (2, 3, 4, 6):
        member = generate_family_member(u)
        checks = family_checks(member)
        assert checks["reversible"]
        assert checks["has_minus_one_multiplier"]
        assert checks["sanity"].n == u * u
        assert checks["row_plus_col_even"]       # unlike the odd q x (q+1) family


def test_family_triple_array_small_u():
    for u in (2, 3):
        array, verdict, member = family_triple_array(u)
        v, k, rr, cc, rc, rows, cols = expected_array_parameters(u)
        assert verdict.describe() == f"TA({v},{k},{rr},{cc},{rc} : {rows}x{cols})"
        assert array.shape == (rows, cols)


def test_expected_parameters_table():
    assert expected_array_parameters(2) == (15, 4, 6, 2, 4, 6, 10)
    assert expected_array_parameters(3) == (35, 9, 12, 6, 9, 15, 21)
    assert expected_array_parameters(12) == (575, 144, 156, 132, 144, 276, 300)


def test_composition_preserves_reversibility():
    d8 = load_entry("D.8")[1]
    seed1 = _trivial_seed()
    for left, right in ((d8, seed1), (seed1, d8), (d8, d8)):
        assert inverse_closed(menon_complement_product(left, right))
