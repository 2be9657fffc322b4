"""An infinite family of triple arrays from reversible Hadamard difference sets.

Hadamard difference sets have parameters (4u^2, 2u^2 +- u, u^2 +- u). The
complement-product composition takes sets for u1 and u2 to a set for
u = 2*u1*u2, and preserves reversibility; iterating it from three seeds
(u = 1, 2, 3) produces reversible sets whose direct-construction arrays are
triple arrays TA(4u^2-1, u^2, u^2+u, u^2-u, u^2 : (2u^2-u) x (2u^2+u)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arrays import ArrayVerdict, RowColumnArray, direct_construct, verify_array
from .catalog import load_entry
from .designs import build_youden, delete_column
from .diffsets import (DifferenceSet, multiplier_report, reversibility_sanity, translate,
                       verify_difference_set)
from .errors import ParameterMismatchError, TheoremViolationError, UnsupportedUError
from .groups import make_abelian, make_direct_product

DEFAULT_MAX_U = 12


@dataclass(frozen=True)
class HadamardParameters:
    u: int
    sign: str                      # "+" or "-"
    v: int
    k: int
    lam: int

    @property
    def n(self) -> int:
        return self.k - self.lam


def hadamard_parameters(v: int, k: int, lam: int) -> HadamardParameters | None:
    """Classify (v,k,lam) as Hadamard parameters, or None."""
    root = math.isqrt(v)
    if root * root != v or root % 2:
        return None
    u = root // 2
    for sign, kk, ll in (("-", 2 * u * u - u, u * u - u), ("+", 2 * u * u + u, u * u + u)):
        if (k, lam) == (kk, ll):
            return HadamardParameters(u, sign, v, k, lam)
    return None


def square_free_part(n: int) -> int:
    out, d = 1, 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return out * n


def menon_complement_product(d1: DifferenceSet, d2: DifferenceSet) -> DifferenceSet:
    """Compose Hadamard sets for u1 and u2 into one for u = 2*u1*u2.

    The set is (D1 x complement(D2)) union (complement(D1) x D2) inside the
    direct product, re-verified from scratch rather than trusted.
    """
    p1 = hadamard_parameters(*d1.params)
    p2 = hadamard_parameters(*d2.params)
    if p1 is None or p2 is None:
        raise ParameterMismatchError(
            f"inputs must carry Hadamard parameters, got {d1.params} and {d2.params}")
    g = make_direct_product(d1.group, d2.group)
    v2 = d2.group.order
    in1 = d1.member_set()
    in2 = d2.member_set()
    members = [a * v2 + b
               for a in range(d1.group.order) for b in range(v2)
               if (a in in1) != (b in in2)]
    try:
        return verify_difference_set(g, members)
    except Exception as exc:
        raise TheoremViolationError(
            f"composition of {d1.params} and {d2.params} failed verification") from exc


@dataclass(frozen=True)
class Provenance:
    """How a family member was assembled: a seed, or a composition of two plans."""

    u: int
    kind: str                              # "seed" | "compose"
    seed_id: str | None = None
    parts: tuple["Provenance", "Provenance"] | None = None

    def to_json(self) -> dict:
        if self.kind == "seed":
            return {"u": self.u, "seed": self.seed_id}
        return {"u": self.u, "compose": [p.to_json() for p in self.parts]}


@dataclass(frozen=True)
class FamilyMember:
    u: int
    diffset: DifferenceSet
    provenance: Provenance


def _seed(u: int) -> tuple[DifferenceSet, str]:
    if u == 1:
        group = make_abelian([2, 2], "ab", name="Z2xZ2")
        return (verify_difference_set(group, [group.identity], allow_trivial=True),
                "trivial(4,1,0)")
    entry_id = {2: "D.8", 3: "AII.17"}[u]
    _, d = load_entry(entry_id)
    if inverse_closed(d):
        return d, entry_id
    # the printed set only admits -1 as a multiplier; use its reversible translate
    for g in range(d.group.order):
        cand = translate(d, g)
        if inverse_closed(cand):
            return cand, f"{entry_id}*{d.group.names[g]}"
    raise TheoremViolationError(f"{entry_id} has no reversible translate")


def inverse_closed(d: DifferenceSet) -> bool:
    return frozenset(d.group.inv(x) for x in d.members) == d.member_set()


def _reachable(u: int) -> bool:
    if u in (1, 2, 3):
        return True
    if u % 2:
        return False
    half = u // 2
    return any(half % a == 0 and _reachable(a) and _reachable(half // a)
               for a in range(half, 0, -1))


def _plan(u: int) -> Provenance:
    if u in (1, 2, 3):
        return Provenance(u, "seed")
    half = u // 2
    for a in range(half, 0, -1):     # greedy: largest reachable left factor
        if half % a == 0 and _reachable(a) and _reachable(half // a):
            return Provenance(u, "compose", parts=(_plan(a), _plan(half // a)))
    raise UnsupportedUError(f"u={u} is not reachable from the seeds",
                            obstruction="no-seed-decomposition")


def generate_family_member(u: int, max_u: int = DEFAULT_MAX_U) -> FamilyMember:
    """Build the reversible Hadamard set for u, with its composition tree.

    Raises UnsupportedUError when u is out of reach: a prime other than 2, 3
    divides its square-free part, u has no decomposition into iterated
    2*u1*u2 steps over the seeds, or u exceeds ``max_u`` (the default 12
    keeps the group order 4u^2 within the Cayley-table cap).
    """
    if u < 1:
        raise UnsupportedUError(f"u must be positive, got {u}", obstruction="non-positive")
    sf = square_free_part(u)
    for p in (5, 7, 11, 13):
        if sf % p == 0:
            raise UnsupportedUError(
                f"u={u}: square-free part {sf} has prime factor {p}, so it does not "
                "divide 6 and no reversible Hadamard set of order 4u^2 exists",
                obstruction="square-free")
    if sf not in (1, 2, 3, 6):
        raise UnsupportedUError(
            f"u={u}: square-free part {sf} does not divide 6", obstruction="square-free")
    if u > max_u:
        raise UnsupportedUError(
            f"u={u} exceeds the cap {max_u} (group order 4u^2 = {4 * u * u} "
            "is beyond the supported table size)", obstruction="order-cap")
    if not _reachable(u):
        raise UnsupportedUError(
            f"u={u} cannot be written as an iterated 2*u1*u2 over the seeds 1, 2, 3",
            obstruction="no-seed-decomposition")
    plan = _plan(u)

    def build(node: Provenance) -> tuple[DifferenceSet, Provenance]:
        if node.kind == "seed":
            d, seed_id = _seed(node.u)
            return d, Provenance(node.u, "seed", seed_id=seed_id)
        (left, lp) = build(node.parts[0])
        (right, rp) = build(node.parts[1])
        return menon_complement_product(left, right), Provenance(
            node.u, "compose", parts=(lp, rp))
    d, resolved = build(plan)
    if not inverse_closed(d):
        raise TheoremViolationError(f"family member u={u} is not reversible")
    expected = (4 * u * u, 2 * u * u - u, u * u - u)
    if d.params != expected:
        raise TheoremViolationError(f"family member u={u} has {d.params}, expected {expected}")
    return FamilyMember(u, d, resolved)


def expected_array_parameters(u: int) -> tuple[int, int, int, int, int, int, int]:
    """(v, k, lam_rr, lam_cc, lam_rc, rows, cols) for the family array at u."""
    uu = u * u
    return (4 * uu - 1, uu, uu + u, uu - u, uu, 2 * uu - u, 2 * uu + u)


def family_triple_array(u: int, max_u: int = DEFAULT_MAX_U
                        ) -> tuple[RowColumnArray, ArrayVerdict, FamilyMember]:
    """Construct and brute-force-verify the family triple array for u.

    Both construction routes are run: the direct array A(G, D) and the
    Youden-square route (identity column deleted). Their verdicts must agree
    with each other and with the closed-form parameters.
    """
    member = generate_family_member(u, max_u=max_u)
    array = direct_construct(member.diffset)
    verdict = verify_array(array)

    rl = delete_column(build_youden(member.diffset), member.diffset.group.identity)
    rl_verdict = verify_array(rl)
    if (verdict.triple_array, verdict.parameters) != (rl_verdict.triple_array,
                                                      rl_verdict.parameters):
        raise TheoremViolationError(
            f"u={u}: direct and Youden routes disagree: "
            f"{verdict.describe()} vs {rl_verdict.describe()}")

    v, k, rr, cc, rc, rows, cols = expected_array_parameters(u)
    got = (verdict.v, verdict.k, verdict.lambda_rr, verdict.lambda_cc, verdict.lambda_rc,
           verdict.r, verdict.c)
    if not verdict.triple_array or got != (v, k, rr, cc, rc, rows, cols):
        raise TheoremViolationError(
            f"u={u}: counted verdict {verdict.describe()} does not match "
            f"TA({v},{k},{rr},{cc},{rc} : {rows}x{cols})")
    return array, verdict, member


def family_checks(member: FamilyMember) -> dict:
    """Diagnostics bundle: reversibility, sanity facts, and parity of r + c."""
    d = member.diffset
    sanity = reversibility_sanity(d)
    rep = multiplier_report(d)
    return {"reversible": inverse_closed(d),
            "has_minus_one_multiplier": rep.has_minus_one_multiplier,
            "sanity": sanity,
            "row_plus_col_sum": d.v,      # k + (v-k); even for this family
            "row_plus_col_even": d.v % 2 == 0}
