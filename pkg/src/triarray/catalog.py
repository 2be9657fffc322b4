"""Built-in difference-set fixtures.

Labels follow Kibler's classical enumeration of small difference sets
(group letter + set number); the Fano set in Z7 ships as the canonical
cyclic counter-example. Member words are kept exactly as printed in the
classical listings so the fixtures are easy to eyeball.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .diffsets import DifferenceSet, verify_difference_set
from .errors import TheoremViolationError
from .groups import FiniteGroup, make_abelian, make_cyclic, make_metacyclic


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    group_label: str
    set_label: str
    build_group: Callable[[], FiniteGroup]
    members: tuple[str, ...]
    expected_params: tuple[int, int, int]
    expected_report: tuple[int, int, int] | None   # (reversible, weak -1, s) when known
    note: str

    def load(self) -> tuple[FiniteGroup, DifferenceSet]:
        group = self.build_group()
        d = verify_difference_set(group, self.members)
        if d.params != self.expected_params:
            raise TheoremViolationError(
                f"catalog entry {self.id}: verified as {d.params}, "
                f"expected {self.expected_params}")
        return group, d


def _group_b() -> FiniteGroup:
    return make_abelian([4, 4], "ab", name="B")


def _group_c() -> FiniteGroup:
    return make_abelian([4, 2, 2], "abc", name="C")


def _group_d() -> FiniteGroup:
    return make_abelian([2, 2, 2, 2], "abcd", name="D")


def _group_a2() -> FiniteGroup:
    return make_abelian([3, 3, 2, 2], "abcd", name="AII")


def _group_j() -> FiniteGroup:
    return make_metacyclic(8, 2, 5, name="J")


_ENTRIES = [
    CatalogEntry("B.3", "B", "3", _group_b,
                 ("1", "a", "a^2", "b", "ab^2", "a^2b^3"),
                 (16, 6, 2), None,
                 "abelian <a,b:a^4=b^4=1>, admits -1 as multiplier"),
    CatalogEntry("B.5", "B", "5", _group_b,
                 ("1", "a", "b", "a^2b", "ab^2", "a^2b^2"),
                 (16, 6, 2), None,
                 "abelian <a,b:a^4=b^4=1>, admits -1 as multiplier"),
    CatalogEntry("C.7", "C", "7", _group_c,
                 ("1", "a", "a^2", "ab", "ac", "a^3bc"),
                 (16, 6, 2), None,
                 "abelian <a,b,c:a^4=b^2=c^2=1>, admits -1 as multiplier"),
    CatalogEntry("D.8", "D", "8", _group_d,
                 ("1", "a", "b", "c", "d", "abcd"),
                 (16, 6, 2), None,
                 "elementary abelian 2-group, reversible as printed"),
    CatalogEntry("AII.17", "AII", "17", _group_a2,
                 ("1", "a", "a^2", "c", "a^2c", "bc", "a^2bc", "b^2c", "a^2b^2c",
                  "ad", "a^2bd", "b^2d", "acd", "bcd", "a^2b^2cd"),
                 (36, 15, 6), None,
                 "abelian <a,b,c,d:a^3=b^3=c^2=d^2=1>, admits -1 as multiplier"),
    CatalogEntry("J.22", "J", "22", _group_j,
                 ("1", "a", "a^2", "a^5", "a^4b", "a^2b"),
                 (16, 6, 2), (4, 8, 8),
                 "non-abelian <a,b:a^8=b^2=1,ba=a^5b> (corrected presentation)"),
    CatalogEntry("J.23", "J", "23", _group_j,
                 ("1", "a", "a^3", "a^4", "a^3b", "a^5b"),
                 (16, 6, 2), (4, 8, 8),
                 "non-abelian <a,b:a^8=b^2=1,ba=a^5b> (corrected presentation)"),
    CatalogEntry("Fano", "Z7", "Fano", lambda: make_cyclic(7),
                 ("1", "2", "4"),
                 (7, 3, 1), None,
                 "quadratic residues mod 7; cyclic, so no reversible translate"),
]

_BY_ID = {e.id: e for e in _ENTRIES}


def entry_ids() -> tuple[str, ...]:
    return tuple(e.id for e in _ENTRIES)


def list_entries() -> tuple[CatalogEntry, ...]:
    return tuple(_ENTRIES)


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise ValueError(
            f"unknown catalog id {entry_id!r}; available: {', '.join(entry_ids())}") from None


def load_entry(entry_id: str) -> tuple[FiniteGroup, DifferenceSet]:
    """Build the group, parse the member words, verify, and return both."""
    return get_entry(entry_id).load()
