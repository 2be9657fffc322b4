"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``. Timed criteria measure
the work after the session-scoped kernel warmup fixture has compiled the
jit backend (pure-numpy backend: the warmup is a no-op).
"""

import contextlib
import io
import time

import pytest

import triarray as ta
from triarray.catalog import entry_ids, load_entry
from triarray.cli import main as cli_main
from triarray.errors import UnsupportedUError
from triarray.family import expected_array_parameters, family_checks
from triarray.groupring import GroupRingElement
from triarray.groups import make_abelian, make_cyclic

ORDER16_GROUPS = {
    "Z16": lambda: make_cyclic(16),
    "Z4xZ4": lambda: make_abelian([4, 4]),
    "Z4xZ2xZ2": lambda: make_abelian([4, 2, 2]),
    "Z2x2x2x2": lambda: make_abelian([2, 2, 2, 2]),
}


def _report(number: int, ok: bool, detail: str):
    print(f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def searched_sets():
    """All normalized (16,6,2) sets in the four abelian groups of order 16."""
    out = {}
    for name, build in ORDER16_GROUPS.items():
        group = build()
        out[name] = ta.search_difference_sets(group, 6, 2)
    return out


@pytest.fixture(scope="module")
def family_members():
    return {u: ta.family_triple_array(u) for u in (2, 3, 4, 6, 8, 12)}


def test_criterion_01_catalog_verification():
    t0 = time.perf_counter()
    params = []
    for eid in entry_ids():
        _, d = load_entry(eid)
        params.append(d.params)
    elapsed = time.perf_counter() - t0
    expected = [(16, 6, 2)] * 4 + [(36, 15, 6)] + [(16, 6, 2)] * 2 + [(7, 3, 1)]
    _report(1, params == expected and elapsed < 1.0,
            f"8 entries verified in {elapsed:.3f}s")


def test_criterion_02_table_rows():
    rows = {eid: ta.multiplier_report(load_entry(eid)[1]).as_row()
            for eid in ("J.22", "J.23")}
    _report(2, rows == {"J.22": (4, 8, 8), "J.23": (4, 8, 8)},
            f"J rows reproduce exactly: {rows}")


def test_criterion_03_triple_arrays_from_catalog():
    t0 = time.perf_counter()
    ok = True
    for eid, expect in (("B.3", "TA(15,4,6,2,4 : 6x10)"),
                        ("B.5", "TA(15,4,6,2,4 : 6x10)"),
                        ("C.7", "TA(15,4,6,2,4 : 6x10)"),
                        ("D.8", "TA(15,4,6,2,4 : 6x10)"),
                        ("AII.17", "TA(35,9,12,6,9 : 15x21)")):
        _, d = load_entry(eid)
        y = ta.build_youden(d)
        for col in range(d.group.order):
            rl = ta.delete_column(y, col)
            rl_verdict = ta.verify_array(rl)
            std_verdict = ta.verify_array(ta.rl_to_standard(rl))
            if not rl_verdict.triple_array or std_verdict.describe() != expect:
                ok = False
    elapsed = time.perf_counter() - t0
    _report(3, ok and elapsed < 10.0,
            f"all column deletions give the exact verdicts in {elapsed:.2f}s")


def test_criterion_04_biconditional_over_order16(searched_sets):
    t0 = time.perf_counter()
    exceptions = 0
    counts = {}
    always_double = True
    for name, sets in searched_sets.items():
        counts[name] = len(sets)
        for d in sets:
            y = ta.build_youden(d)
            verdicts = [ta.verify_array(ta.delete_column(y, col)) for col in range(16)]
            always_double = always_double and all(v.double_array for v in verdicts)
            all_columns_rta4 = all(v.triple_array for v in verdicts)
            has_reversible = ta.multiplier_report(d).reversible_translate_count > 0
            if all_columns_rta4 != has_reversible:
                exceptions += 1
    elapsed = time.perf_counter() - t0
    _report(4, exceptions == 0 and always_double and elapsed < 60.0
            and counts["Z4xZ4"] > 0,
            f"sets {counts}, {exceptions} exceptions, every deletion a double array, "
            f"{elapsed:.1f}s")


def test_criterion_05_cyclic_negative(searched_sets):
    z16_empty = len(searched_sets["Z16"]) == 0
    _, fano = load_entry("Fano")
    fano_rev = ta.multiplier_report(fano).reversible_translate_count
    no_rev_translate = all(
        frozenset(fano.group.inv(x) for x in ta.translate(fano, g).members)
        != frozenset(ta.translate(fano, g).members)
        for g in range(7))
    _report(5, z16_empty and fano_rev == 0 and no_rev_translate,
            "no (16,6,2) set in Z16; no reversible Fano translate")


def test_criterion_06_direct_construction_equivalence(searched_sets):
    checked = 0
    ok = True
    for eid in entry_ids():
        _, d = load_entry(eid)
        agree = (ta.triple_criterion(d).is_constant
                 == ta.verify_array(ta.direct_construct(d)).triple_array)
        if eid in ("J.22", "J.23") and ta.triple_criterion(d).is_constant:
            ok = False
        ok = ok and agree
        checked += 1
    for sets in searched_sets.values():
        for d in sets:
            ok = ok and (ta.triple_criterion(d).is_constant
                         == ta.verify_array(ta.direct_construct(d)).triple_array)
            checked += 1
    _report(6, ok, f"criterion == array verdict for {checked} sets; J sets double only")


def test_criterion_07_four_cycle():
    _, d = load_entry("J.22")
    rep = ta.four_cycle_blocks(d)
    sizes_ok = rep.sizes == (8, 8, 8, 8)
    blocks_ok = all(len(b) == 6 for part in (rep.b1, rep.b2, rep.b3, rep.b4) for b in part)
    unions_ok = rep.union_params == ((16, 6, 2),) * 4
    _report(7, sizes_ok and blocks_ok and unions_ok,
            f"sizes {rep.sizes}, unions {rep.union_params}")


def test_criterion_08_family(family_members):
    t0 = time.perf_counter()
    ok = True
    details = []
    for u, (array, verdict, member) in family_members.items():
        checks = family_checks(member)
        v, k, rr, cc, rc, rows, cols = expected_array_parameters(u)
        expected = f"TA({v},{k},{rr},{cc},{rc} : {rows}x{cols})"
        good = (checks["reversible"] and checks["sanity"].n == u * u
                and member.diffset.v % 2 == 0 and member.diffset.lam % 2 == 0
                and verdict.describe() == expected)
        ok = ok and good
        details.append(f"u={u}:{verdict.describe()}")
    u12_time = time.perf_counter()
    ta.family_triple_array(12)
    u12_elapsed = time.perf_counter() - u12_time
    try:
        ta.generate_family_member(5)
        ok = False
    except UnsupportedUError as err:
        ok = ok and err.obstruction == "square-free"
    _report(8, ok and u12_elapsed < 120.0,
            f"{'; '.join(details)}; u=12 rebuilt in {u12_elapsed:.1f}s; u=5 obstructed")


def test_criterion_09_group_ring_identity(searched_sets, family_members):
    suite = [load_entry(eid)[1] for eid in entry_ids()]
    suite += [d for sets in searched_sets.values() for d in sets]
    suite += [member.diffset for _, _, member in family_members.values()]
    bad = 0
    for d in suite:
        lhs = d.ring_element() * d.ring_element().power_map(-1)
        rhs = (d.n * GroupRingElement.one(d.group)
               + d.lam * GroupRingElement.whole_group(d.group))
        if lhs != rhs:
            bad += 1
    _report(9, bad == 0, f"D*D^(-1) = n*1 + lam*G exact for {len(suite)} sets")


def test_criterion_10_parameter_identities(family_members):
    ok = True
    checked = 0
    arrays = []
    for eid in ("B.3", "B.5", "C.7", "D.8", "AII.17"):
        _, d = load_entry(eid)
        arrays.append((d, ta.verify_array(ta.direct_construct(d))))
    for u, (array, verdict, member) in family_members.items():
        arrays.append((member.diffset, verdict))
    for d, verdict in arrays:
        k = verdict.k
        identities = (
            verdict.lambda_rc == verdict.r - verdict.lambda_cc
            and (verdict.lambda_rr, verdict.lambda_cc, verdict.lambda_rc)
            == (verdict.c - k, verdict.r - k, k)
            and verdict.v == verdict.r + verdict.c - 1)
        dev_params = ta.develop(d).params         # (v, b, r, k, lam)
        sbibd_link = dev_params[0] == verdict.v + 1 and \
            dev_params[3] == verdict.r and dev_params[4] == verdict.lambda_cc
        ok = ok and identities and sbibd_link
        checked += 1
    _report(10, ok, f"lambda and SBIBD-link identities hold on {checked} triple arrays")


def test_criterion_11_cli_determinism():
    commands = [
        ["ds", "search", "--group", "abelian:4,4", "--k", "6", "--lam", "2"],
        ["ds", "search", "--group", "abelian:2,2,2,2", "--k", "6", "--lam", "2"],
        ["ta", "build", "--from-ds", "catalog:D.8", "--column", "e", "--format", "grid"],
        ["ta", "direct", "--from-ds", "catalog:J.22", "--format", "csv"],
        ["family", "gen", "--u", "4", "--emit-array", "--format", "json"],
        ["report", "tables"],
        ["catalog", "list"],
    ]
    ok = True
    for argv in commands:
        outputs = []
        for workers in ("1", "4"):
            extra = ["--workers", workers] if argv[:2] == ["ds", "search"] else []
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = cli_main(argv + extra)
            outputs.append((code, buf.getvalue().encode()))
        ok = ok and outputs[0] == outputs[1] and outputs[0][0] == 0
    _report(11, ok, f"{len(commands)} commands byte-identical at workers 1 vs 4")
