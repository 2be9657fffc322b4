import json

import numpy as np
import pytest

from helpers import brute_array_stats, brute_triple_criterion_values
from triarray.arrays import (BLANK, RowColumnArray, compare_constructions,
                             derive_parameters, direct_construct, rl_to_standard,
                             standard_to_rl, triple_criterion, verify_array)
from triarray.catalog import load_entry
from triarray.designs import build_youden, delete_column
from triarray.diffsets import search_difference_sets
from triarray.errors import MalformedArrayError, ParameterMismatchError
from triarray.groups import make_abelian


def _ta6x10():
    _, d = load_entry("D.8")
    return d, rl_to_standard(delete_column(build_youden(d), d.group.identity))


def test_verify_matches_pure_python_counting():
    d, std = _ta6x10()
    verdict = verify_array(std)
    rows = [[std.symbols[c] for c in row] for row in std.cells]
    sym_counts, rr, cc, rc = brute_array_stats(rows)
    assert set(sym_counts.values()) == {verdict.k}
    assert set(rr) == {verdict.lambda_rr}
    assert set(cc) == {verdict.lambda_cc}
    assert set(rc) == {verdict.lambda_rc}
    assert verdict.describe() == "TA(15,4,6,2,4 : 6x10)"
    assert verdict.extremal


def test_fano_direct_is_double_not_triple():
    _, d = load_entry("Fano")
    verdict = verify_array(direct_construct(d))
    assert verdict.double_array and not verdict.triple_array
    assert (verdict.v, verdict.k) == (6, 2)


def test_degenerate_array_flagged():
    a = RowColumnArray("standard", ("r",), ("c",), ("s",), np.array([[0]]))
    with pytest.raises(MalformedArrayError) as err:
        verify_array(a)
    assert err.value.condition == "degenerate-parameters"


def test_repeated_symbol_in_line_rejected():
    cells = np.array([[0, 0], [1, 2]])
    a = RowColumnArray("standard", ("r1", "r2"), ("c1", "c2"), ("x", "y", "z"), cells)
    with pytest.raises(MalformedArrayError):
        verify_array(a)


def test_blank_in_standard_form_rejected():
    cells = np.array([[0, 1], [1, BLANK]])
    a = RowColumnArray("standard", ("r1", "r2"), ("c1", "c2"), ("x", "y"), cells)
    with pytest.raises(MalformedArrayError):
        verify_array(a)


def test_rl_roundtrip_is_identity():
    d, std = _ta6x10()
    assert rl_to_standard(standard_to_rl(std)) == std


def test_rl_form_shape_and_fill():
    d, std = _ta6x10()
    rl = standard_to_rl(std)
    assert rl.shape == (6, 15)
    assert ((rl.cells != BLANK).sum(axis=0) == 4).all()   # k - lam filled per column


def test_verdicts_correspond_condition_by_condition():
    _, d = load_entry("B.5")
    y = build_youden(d)
    for col in (0, 7):
        rl = delete_column(y, col)
        va = verify_array(rl)
        vb = verify_array(rl_to_standard(rl))
        assert va.parameters == vb.parameters
        assert (va.double_array, va.triple_array, va.extremal) == \
               (vb.double_array, vb.triple_array, vb.extremal)
        assert (va.r, va.c, va.v) == (vb.r, vb.c, vb.v)


def test_rl_with_missing_pairing_rejected():
    cells = np.array([[0, BLANK, 1], [1, 0, BLANK]])
    a = RowColumnArray("rl", ("r1", "r2"), ("c1", "c2", "c3"), ("x", "y"), cells)
    std = rl_to_standard(a)      # both symbols paired in both rows: fine
    assert std.form == "standard"
    cells2 = np.array([[0, BLANK, BLANK], [1, 0, BLANK]])
    b = RowColumnArray("rl", ("r1", "r2"), ("c1", "c2", "c3"), ("x", "y"), cells2)
    with pytest.raises(MalformedArrayError):
        rl_to_standard(b)


def test_derive_parameters():
    assert derive_parameters(6, 10, 4) == (15, 4, 6, 2, 4)
    assert derive_parameters(15, 21, 9) == (35, 9, 12, 6, 9)
    assert derive_parameters(775, 3225, 625) == (3999, 625, 2600, 150, 625)
    with pytest.raises(ParameterMismatchError):
        derive_parameters(6, 10, 6)
    with pytest.raises(ParameterMismatchError):
        derive_parameters(6, 10, 0)


def test_direct_construct_symbol_counts():
    _, d = load_entry("Fano")
    a = direct_construct(d)
    assert a.shape == (3, 4)
    assert len(a.symbols) == 6
    counts = np.bincount(a.cells.ravel(), minlength=6)
    assert list(counts) == [2] * 6            # every symbol occurs k - lam times
    # identity never appears
    assert "0" not in a.symbols


def test_direct_construct_entries():
    _, d = load_entry("Fano")
    a = direct_construct(d)
    g = d.group
    for i, x in enumerate(d.members):
        for j, y in enumerate(int(g.index_of(c)) for c in a.col_labels):
            expected = g.mul(g.inv(x), y)
            assert a.symbols[a.cells[i, j]] == g.names[expected]


def test_triple_criterion_matches_oracle_and_verdict():
    for eid in ("B.3", "B.5", "C.7", "D.8", "J.22", "J.23", "Fano"):
        _, d = load_entry(eid)
        crit = triple_criterion(d)
        values = brute_triple_criterion_values(d.group, d.members)
        assert crit.is_constant == (len(set(values)) == 1)
        if crit.is_constant:
            assert crit.value == values[0] == d.lam
        else:
            assert crit.witness is not None
        assert crit.is_constant == verify_array(direct_construct(d)).triple_array


def test_criterion_agreement_on_searched_sets():
    g = make_abelian([4, 2, 2])
    for d in search_difference_sets(g, 6, 2)[:40]:
        assert triple_criterion(d).is_constant == \
            verify_array(direct_construct(d)).triple_array


def test_compare_constructions_identity_column():
    for eid in ("D.8", "C.7", "J.22"):
        _, d = load_entry(eid)
        std = rl_to_standard(delete_column(build_youden(d), d.group.identity))
        report = compare_constructions(d, std)
        assert report["labels_match"]


def test_json_roundtrip():
    _, std = _ta6x10()
    blob = json.dumps(std.to_json())
    back = RowColumnArray.from_json(json.loads(blob))
    assert back == std
    rl = standard_to_rl(std)
    assert RowColumnArray.from_json(json.loads(json.dumps(rl.to_json()))) == rl


def test_grid_roundtrip_preserves_verdict():
    _, std = _ta6x10()
    parsed = RowColumnArray.from_grid(std.to_grid(), form="standard")
    assert verify_array(parsed).parameters == verify_array(std).parameters
    rl = standard_to_rl(std)
    parsed_rl = RowColumnArray.from_grid(rl.to_grid(), form="rl")
    assert verify_array(parsed_rl).parameters == verify_array(rl).parameters


def test_csv_emitter_shape():
    _, std = _ta6x10()
    lines = std.to_csv().strip().splitlines()
    assert len(lines) == 7
    assert lines[0].count(",") == 10
