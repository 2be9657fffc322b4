"""Integer group-ring arithmetic: formal Z-linear combinations of group elements.

A subset S of the group is identified with the 0/1 combination over S, which
is how the difference-set identity D * D^(-1) = n*1 + lam*G is checked.
"""

from __future__ import annotations

import numpy as np

from . import _backend
from .errors import MismatchedGroupError
from .groups import FiniteGroup


class GroupRingElement:
    """Immutable coefficient vector over a group's elements."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs):
        arr = np.array(coeffs, dtype=np.int64)
        if arr.shape != (group.order,):
            raise ValueError(f"need {group.order} coefficients, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, *_):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def from_subset(cls, group: FiniteGroup, members) -> "GroupRingElement":
        coeffs = np.zeros(group.order, dtype=np.int64)
        coeffs[list(group.resolve_subset(members))] = 1
        return cls(group, coeffs)

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, np.zeros(group.order, dtype=np.int64))

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupRingElement":
        coeffs = np.zeros(group.order, dtype=np.int64)
        coeffs[group.identity] = 1
        return cls(group, coeffs)

    @classmethod
    def whole_group(cls, group: FiniteGroup) -> "GroupRingElement":
        return cls(group, np.ones(group.order, dtype=np.int64))

    def _same_group(self, other: "GroupRingElement"):
        if other.group is not self.group:
            raise MismatchedGroupError("operands belong to different groups")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._same_group(other)
        return GroupRingElement(self.group, self.coeffs + other.coeffs)

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._same_group(other)
        return GroupRingElement(self.group, self.coeffs - other.coeffs)

    def __neg__(self):
        return GroupRingElement(self.group, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, self.coeffs * int(other))
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._same_group(other)
        # convolution over the group; order of factors matters when non-abelian
        return GroupRingElement(
            self.group, _backend.convolve(self.group.mul_table, self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, self.coeffs * int(other))
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, GroupRingElement)
                and other.group is self.group
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((id(self.group), self.coeffs.tobytes()))

    @property
    def cardinality(self) -> int:
        """Coefficient sum |A|."""
        return int(self.coeffs.sum())

    def power_map(self, t: int) -> "GroupRingElement":
        """Transport coefficients along g -> g^t; t = -1 gives the inverse image."""
        target = self.group.power_vector(t)
        out = np.zeros(self.group.order, dtype=np.int64)
        np.add.at(out, target, self.coeffs)
        return GroupRingElement(self.group, out)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.nonzero(self.coeffs)[0])

    def __repr__(self) -> str:
        terms = [f"{c if c != 1 else ''}{self.group.names[i]}"
                 for i, c in enumerate(self.coeffs) if c]
        shown = " + ".join(terms[:8]) + (" + ..." if len(terms) > 8 else "")
        return f"<ZG {shown or '0'}>"
