"""Difference sets: verification, translates, multiplier statistics, search.

A (v,k,lam) difference set is a k-subset D of a group of order v such that
every non-identity element has exactly lam representations x*y^-1 with
x, y in D. Verification tabulates all ordered quotients; the search module
enumerates k-subsets exhaustively with the identity pinned into the set.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice

import numpy as np

from . import _backend
from .errors import (BudgetExceededError, NotADifferenceSetError, ParameterMismatchError,
                     TheoremViolationError, UnsupportedOperationError)
from .groupring import GroupRingElement
from .groups import FiniteGroup, is_subgroup

DEFAULT_SEARCH_CAP = 10_000_000
_CHUNK = 2048


@dataclass(frozen=True)
class DifferenceSet:
    """A verified (or debug-asserted) difference set with its parameters."""

    group: FiniteGroup
    members: tuple[int, ...]
    v: int
    k: int
    lam: int

    @property
    def n(self) -> int:
        return self.k - self.lam

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.v, self.k, self.lam)

    @property
    def member_names(self) -> tuple[str, ...]:
        return tuple(self.group.names[i] for i in self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def ring_element(self) -> GroupRingElement:
        return GroupRingElement.from_subset(self.group, self.members)

    def __repr__(self) -> str:
        return f"<DifferenceSet ({self.v},{self.k},{self.lam}) in {self.group.name}>"


def verify_difference_set(group: FiniteGroup, members, allow_trivial: bool = False) -> DifferenceSet:
    """Tabulate all ordered quotients and accept iff the counts are constant.

    Trivial sets (order n = k - lam <= 1) are rejected unless
    ``allow_trivial`` is set; they are only useful as composition seeds.
    """
    idx = group.resolve_subset(members)
    v, k = group.order, len(idx)
    if k == 0 or k == v:
        raise NotADifferenceSetError(
            f"members must be a nonempty proper subset (got k={k} of v={v})",
            condition="not-proper")
    arr = np.asarray(idx, dtype=np.int64)
    counts = _backend.quotient_counts(group.mul_table, group.inverse, arr, group.identity)
    non_identity = [i for i in range(v) if i != group.identity]
    lam = int(counts[non_identity[0]])
    for z in non_identity:
        if counts[z] != lam:
            raise NotADifferenceSetError(
                f"element {group.names[z]} occurs {int(counts[z])} times as a quotient, "
                f"expected {lam}",
                condition="non-constant-differences",
                element=z, count=int(counts[z]))
    if not allow_trivial and k - lam <= 1:
        raise NotADifferenceSetError(
            f"({v},{k},{lam}) is trivial (order n={k - lam} <= 1)",
            condition="trivial")
    return DifferenceSet(group, idx, v, k, lam)


def complement(d: DifferenceSet, allow_trivial: bool = False) -> DifferenceSet:
    """The complementary difference set on G minus D, re-verified."""
    rest = sorted(set(range(d.group.order)) - set(d.members))
    return verify_difference_set(d.group, rest, allow_trivial=allow_trivial)


def translate(d: DifferenceSet, g, side: str = "right") -> DifferenceSet:
    """Dg (right) or gD (left); parameters carry over, re-verified only in debug."""
    gi = d.group.index_of(g)
    table = d.group.mul_table
    if side == "right":
        new = tuple(sorted(int(table[x, gi]) for x in d.members))
    elif side == "left":
        new = tuple(sorted(int(table[gi, x]) for x in d.members))
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    out = DifferenceSet(d.group, new, d.v, d.k, d.lam)
    assert verify_difference_set(d.group, new, allow_trivial=True).params == d.params
    return out


def inverse_members(d: DifferenceSet) -> frozenset:
    return frozenset(int(d.group.inverse[x]) for x in d.members)


def dev_sets(d: DifferenceSet, side: str = "right") -> list[frozenset]:
    """All translates as index sets, in translator order (may repeat as sets)."""
    table = d.group.mul_table
    m = np.asarray(d.members, dtype=np.intp)
    if side == "right":
        return [frozenset(int(x) for x in table[m, g]) for g in range(d.group.order)]
    return [frozenset(int(x) for x in table[g, m]) for g in range(d.group.order)]


@dataclass(frozen=True)
class MultiplierReport:
    """Counts behind the reversible / weak-multiplier / left=right statistics."""

    reversible_translate_count: int
    weak_minus_one_count: int
    left_equals_right_count_s: int
    has_minus_one_multiplier: bool | None
    fixed_reversible_translate: int | None

    def as_row(self) -> tuple[int, int, int]:
        return (self.reversible_translate_count, self.weak_minus_one_count,
                self.left_equals_right_count_s)


def multiplier_report(d: DifferenceSet) -> MultiplierReport:
    """Tabulate, over all right translates Dg, the three classical statistics.

    reversible: (Dg)^(-1) = Dg; weak -1: (Dg)^(-1) is itself a right
    translate; s: the size of S = {x : xD = Dy for some y}. For abelian
    groups, having -1 as a numerical multiplier is equivalent to having at
    least one reversible translate.
    """
    group = d.group
    table, inverse = group.mul_table, group.inverse
    m = np.asarray(d.members, dtype=np.intp)
    right = [frozenset(int(x) for x in table[m, g]) for g in range(group.order)]
    right_set = set(right)

    reversible = 0
    fixed = None
    weak = 0
    for g in range(group.order):
        inv_img = frozenset(int(inverse[x]) for x in right[g])
        if inv_img == right[g]:
            reversible += 1
            if fixed is None:
                fixed = g
        if inv_img in right_set:
            weak += 1

    s_members = s_subgroup(d)
    has_minus_one = (reversible > 0) if group.is_abelian else None
    return MultiplierReport(reversible, weak, len(s_members), has_minus_one, fixed)


def s_subgroup(d: DifferenceSet) -> tuple[int, ...]:
    """S = {x : xD = Dy for some y}, verified to be a subgroup."""
    group = d.group
    table = group.mul_table
    m = np.asarray(d.members, dtype=np.intp)
    right_set = {frozenset(int(v) for v in table[m, g]) for g in range(group.order)}
    s = tuple(x for x in range(group.order)
              if frozenset(int(v) for v in table[x, m]) in right_set)
    if not is_subgroup(group, s):
        raise TheoremViolationError("S = {x : xD = Dy} failed the subgroup check")
    return s


def numerical_multiplier_check(d: DifferenceSet, t: int) -> bool:
    """True iff x -> x^t maps D onto one of its right translates (abelian only)."""
    if not d.group.is_abelian:
        raise UnsupportedOperationError("numerical multipliers are defined for abelian groups")
    image = frozenset(d.group.power(x, t) for x in d.members)
    if len(image) != d.k:
        return False
    return image in set(dev_sets(d))


def _odd_prime_divisors(n: int) -> set[int]:
    out, p = set(), 3
    while n % 2 == 0:
        n //= 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True)
class ReversibilitySanity:
    v: int
    lam: int
    n: int
    n_root: int
    odd_primes_of_v: tuple[int, ...]


def reversibility_sanity(d: DifferenceSet) -> ReversibilitySanity:
    """Necessary conditions for an abelian set with a reversible translate.

    Checks v even, lam even, n a perfect square, and that v and n share the
    same odd prime divisors; a failure means a bug upstream, not bad input.
    """
    if not d.group.is_abelian:
        raise UnsupportedOperationError("reversibility sanity applies to abelian groups")
    rep = multiplier_report(d)
    if rep.reversible_translate_count == 0:
        raise ParameterMismatchError("set has no reversible translate")
    n = d.n
    root = math.isqrt(n)
    if d.v % 2 or d.lam % 2 or root * root != n:
        raise TheoremViolationError(
            f"reversible set with v={d.v}, lam={d.lam}, n={n}: parity/square conditions failed")
    pv, pn = _odd_prime_divisors(d.v), _odd_prime_divisors(n)
    if pv != pn:
        raise TheoremViolationError(
            f"v={d.v} and n={n} have different odd prime divisors {pv} vs {pn}")
    return ReversibilitySanity(d.v, d.lam, n, root, tuple(sorted(pv)))


def search_difference_sets(group: FiniteGroup, k: int, lam: int, normalize: bool = True,
                           cap: int = DEFAULT_SEARCH_CAP, workers: int | None = None
                           ) -> list[DifferenceSet]:
    """Exhaustively enumerate (v,k,lam) difference sets in lexicographic order.

    With ``normalize`` the identity is fixed as a member (every set has a
    translate containing it), shrinking the space to C(v-1, k-1). Candidate
    chunks are dispatched to a thread pool; results are collected in chunk
    order, so the output is independent of ``workers``.
    """
    v = group.order
    if k * (k - 1) != lam * (v - 1):
        raise ParameterMismatchError(
            f"k(k-1) = {k * (k - 1)} but lam(v-1) = {lam * (v - 1)}: no such parameters")
    pool_elems = [i for i in range(v) if i != group.identity]
    if normalize:
        total = math.comb(v - 1, k - 1)
        combo_iter = combinations(pool_elems, k - 1)
        prefix = (group.identity,)
    else:
        total = math.comb(v, k)
        combo_iter = combinations(range(v), k)
        prefix = ()
    if total > cap:
        raise BudgetExceededError(
            f"{total} candidates exceed the cap of {cap}", candidate_count=total)

    table, inverse = group.mul_table, group.inverse

    def chunks():
        while True:
            block = list(islice(combo_iter, _CHUNK))
            if not block:
                return
            yield np.array([prefix + c for c in block], dtype=np.int64)

    def run(chunk):
        return chunk, _backend.diffset_batch_mask(table, inverse, chunk, lam)

    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    found = []

    def collect(chunk, mask):
        for row in chunk[mask]:
            members = tuple(sorted(int(x) for x in row))
            found.append(DifferenceSet(group, members, v, k, lam))

    if workers <= 1:
        for chunk in chunks():
            collect(*run(chunk))
    else:
        # bounded waves keep memory flat; in-order collection keeps output
        # independent of the worker count
        gen = chunks()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            while True:
                wave = list(islice(gen, workers * 4))
                if not wave:
                    break
                for chunk, mask in pool.map(run, wave):
                    collect(chunk, mask)
    return found


def group_ring_identity_holds(d: DifferenceSet) -> bool:
    """Exact check of D * D^(-1) = n*1_G + lam*G in the integral group ring."""
    lhs = d.ring_element() * d.ring_element().power_map(-1)
    rhs = d.n * GroupRingElement.one(d.group) + d.lam * GroupRingElement.whole_group(d.group)
    return lhs == rhs
