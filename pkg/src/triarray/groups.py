"""Small finite groups stored as dense Cayley tables.

Elements are the indices 0..order-1 throughout; ``mul_table[i, j]`` is the
index of the product. Groups of order up to 1024 are supported, which keeps
a full int16 table at ~2 MB worst case and makes every product an O(1)
lookup inside the search and verification loops.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import GroupConstructionError, MismatchedGroupError

ORDER_CAP = 1024
_ASSOCIATIVITY_CHECK_MAX = 64
_GEN_ALPHABET = "abcdefghijklmnop"


class FiniteGroup:
    """Finite group of order <= 1024 backed by a full multiplication table.

    Construction validates the group axioms: the table must be a Latin
    square with a two-sided identity and unique two-sided inverses, and for
    order <= 64 associativity is checked exhaustively (larger groups in this
    package only arise from constructions where associativity is structural).
    Instances are immutable and safe for concurrent reads.
    """

    def __init__(self, mul_table, names=None, generators=None, name="", check=True):
        table = np.array(mul_table, dtype=np.int16)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise GroupConstructionError("multiplication table must be square")
        v = int(table.shape[0])
        if v == 0:
            raise GroupConstructionError("invalid order: a group has at least one element")
        if v > ORDER_CAP:
            raise GroupConstructionError(f"order {v} exceeds the cap of {ORDER_CAP}")

        aranged = np.arange(v, dtype=np.int16)
        if check:
            if table.min() < 0 or table.max() >= v:
                raise GroupConstructionError("table entries must be element indices")
            if not (np.sort(table, axis=1) == aranged).all():
                bad = int(np.argmin((np.sort(table, axis=1) == aranged).all(axis=1)))
                raise GroupConstructionError(f"row {bad} is not a permutation (cancellation fails)")
            if not (np.sort(table, axis=0) == aranged[:, None]).all():
                bad = int(np.argmin((np.sort(table, axis=0) == aranged[:, None]).all(axis=0)))
                raise GroupConstructionError(f"column {bad} is not a permutation (cancellation fails)")

        row_ident = np.nonzero((table == aranged).all(axis=1))[0]
        candidates = [int(e) for e in row_ident if (table[:, e] == aranged).all()]
        if len(candidates) != 1:
            raise GroupConstructionError("table has no unique two-sided identity")
        identity = candidates[0]

        inverse = np.empty(v, dtype=np.int16)
        where_i, where_j = np.nonzero(table == identity)
        inverse[where_i] = where_j.astype(np.int16)
        if check and not (table[inverse, aranged] == identity).all():
            raise GroupConstructionError("left and right inverses disagree")

        if check and v <= _ASSOCIATIVITY_CHECK_MAX:
            t = table.astype(np.intp)
            if not (t[t, :] == t[:, t]).all():
                raise GroupConstructionError("table is not associative")

        if names is None:
            names = [str(i) for i in range(v)]
        names = tuple(str(n) for n in names)
        if len(names) != v:
            raise GroupConstructionError("need one name per element")
        name_to_index = {n: i for i, n in enumerate(names)}
        if len(name_to_index) != v:
            raise GroupConstructionError("element names must be distinct")

        table.setflags(write=False)
        inverse.setflags(write=False)
        self.mul_table = table
        self.order = v
        self.identity = identity
        self.inverse = inverse
        self.names = names
        self.generators = dict(generators or {})
        self.name = name or f"group{v}"
        self.is_abelian = bool((table == table.T).all())
        self._name_to_index = name_to_index

    # -- raw index arithmetic -------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def power(self, i: int, t: int) -> int:
        """i-th element raised to any integer power, by binary exponentiation."""
        if t < 0:
            return self.power(self.inv(i), -t)
        acc, base = self.identity, int(i)
        while t:
            if t & 1:
                acc = int(self.mul_table[acc, base])
            base = int(self.mul_table[base, base])
            t >>= 1
        return acc

    def power_vector(self, t: int) -> np.ndarray:
        """The map g -> g^t over all elements, as an index vector."""
        return np.array([self.power(i, t) for i in range(self.order)], dtype=np.int16)

    def center(self) -> tuple[int, ...]:
        mask = (self.mul_table == self.mul_table.T).all(axis=1)
        return tuple(int(i) for i in np.nonzero(mask)[0])

    # -- element handles -------------------------------------------------------

    def element(self, spec) -> "Element":
        return Element(self, self.index_of(spec))

    def index_of(self, spec) -> int:
        """Resolve an element given an index, a display name, or a generator word."""
        if isinstance(spec, Element):
            if spec.group is not self:
                raise MismatchedGroupError("element belongs to a different group")
            return spec.index
        if isinstance(spec, (int, np.integer)):
            i = int(spec)
            if not 0 <= i < self.order:
                raise ValueError(f"element index {i} out of range for order {self.order}")
            return i
        label = str(spec).strip()
        if label in self._name_to_index:
            return self._name_to_index[label]
        return self.parse_word(label)

    def parse_word(self, word: str) -> int:
        """Fold a generator word such as ``a^2b`` or ``abcd`` into an element index."""
        w = word.strip()
        if w in ("1", "e") and w not in self.generators:
            return self.identity
        if not self.generators:
            raise ValueError(f"unknown element {word!r} (group has no named generators)")
        acc = self.identity
        pos = 0
        while pos < len(w):
            ch = w[pos]
            if ch in " *":
                pos += 1
                continue
            if ch == "1":
                pos += 1
                continue
            if ch not in self.generators:
                raise ValueError(f"unknown generator {ch!r} in word {word!r}")
            pos += 1
            exp = 1
            if pos < len(w) and w[pos] == "^":
                pos += 1
                start = pos
                if pos < len(w) and w[pos] == "-":
                    pos += 1
                while pos < len(w) and w[pos].isdigit():
                    pos += 1
                if pos == start:
                    raise ValueError(f"missing exponent after '^' in {word!r}")
                exp = int(w[start:pos])
            acc = int(self.mul_table[acc, self.power(self.generators[ch], exp)])
        return acc

    def resolve_subset(self, items) -> tuple[int, ...]:
        """Normalise a collection of element specs into sorted distinct indices."""
        indices = sorted({self.index_of(x) for x in items})
        return tuple(indices)

    # -- interchange format ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "names": list(self.names),
            "table": self.mul_table.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "FiniteGroup":
        if "table" in data:
            return cls(data["table"], names=data.get("names"), name=name or data.get("name", ""))
        if "generators" in data and "degree" in data:
            return make_from_permutation_generators(
                int(data["degree"]), data["generators"],
                gen_names=data.get("generator_names"), name=name or data.get("name", ""))
        raise GroupConstructionError("group JSON needs either a 'table' or 'degree'+'generators'")

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} order={self.order} abelian={self.is_abelian}>"


@dataclass(frozen=True)
class Element:
    """Handle pairing an element index with its owning group."""

    group: FiniteGroup
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise ValueError(f"index {self.index} out of range")

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if other.group is not self.group:
            raise MismatchedGroupError("cannot multiply elements of different groups")
        return Element(self.group, self.group.mul(self.index, other.index))

    def inverse(self) -> "Element":
        return Element(self.group, self.group.inv(self.index))

    def __pow__(self, t: int) -> "Element":
        return Element(self.group, self.group.power(self.index, t))

    @property
    def name(self) -> str:
        return self.group.names[self.index]

    def __repr__(self) -> str:
        return f"Element({self.name!r})"


def _word_name(gen_names, exps) -> str:
    parts = []
    for g, e in zip(gen_names, exps):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "".join(parts) or "1"


def make_cyclic(n: int, name: str = "") -> FiniteGroup:
    """Cyclic group Z_n with elements named by their residues."""
    if n < 1:
        raise GroupConstructionError(f"invalid order {n}: cyclic groups need n >= 1")
    idx = np.arange(n, dtype=np.int16)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, names=[str(i) for i in range(n)],
                       generators={"g": 1 % n}, name=name or f"Z{n}")


def make_abelian(orders, gen_names=None, name: str = "") -> FiniteGroup:
    """Direct product of cyclic groups with generator-word element names.

    ``make_abelian([4, 4])`` is <a,b : a^4 = b^4 = 1> with elements named
    1, a, a^2, ..., ab^2, ... in the usual word convention.
    """
    orders = [int(n) for n in orders]
    if not orders or any(n < 1 for n in orders):
        raise GroupConstructionError("factor orders must be positive")
    v = math.prod(orders)
    if v > ORDER_CAP:
        raise GroupConstructionError(f"order {v} exceeds the cap of {ORDER_CAP}")
    if gen_names is None:
        gen_names = _GEN_ALPHABET[: len(orders)]
    gen_names = list(gen_names)
    if len(gen_names) != len(orders):
        raise GroupConstructionError("need one generator name per factor")

    strides = np.ones(len(orders), dtype=np.int64)
    for i in range(len(orders) - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]
    idx = np.arange(v, dtype=np.int64)
    exps = np.stack([(idx // strides[f]) % orders[f] for f in range(len(orders))], axis=1)

    table = np.zeros((v, v), dtype=np.int64)
    for f, n in enumerate(orders):
        table += ((exps[:, None, f] + exps[None, :, f]) % n) * strides[f]
    names = [_word_name(gen_names, e) for e in exps]
    generators = {g: int(strides[f]) for f, g in enumerate(gen_names) if orders[f] > 1}
    label = name or "x".join(f"Z{n}" for n in orders)
    return FiniteGroup(table.astype(np.int16), names=names, generators=generators, name=label)


def make_direct_product(g1: FiniteGroup, g2: FiniteGroup, name: str = "") -> FiniteGroup:
    """Direct product with componentwise multiplication and pair names."""
    v1, v2 = g1.order, g2.order
    if v1 * v2 > ORDER_CAP:
        raise GroupConstructionError(f"order {v1 * v2} exceeds the cap of {ORDER_CAP}")
    first = np.repeat(np.arange(v1), v2)
    second = np.tile(np.arange(v2), v1)
    table = (g1.mul_table[np.ix_(first, first)].astype(np.int32) * v2
             + g2.mul_table[np.ix_(second, second)])
    names = [f"({g1.names[a]},{g2.names[b]})" for a, b in zip(first, second)]
    return FiniteGroup(table.astype(np.int16), names=names,
                       name=name or f"{g1.name}x{g2.name}")


def make_metacyclic(m: int, n: int, r: int, gen_names=("a", "b"), name: str = "") -> FiniteGroup:
    """The group <a,b : a^m = b^n = 1, b*a = a^r*b> in the normal form a^i b^j.

    Requires gcd(r, m) = 1 and r^n = 1 (mod m) so the presentation defines a
    group of order m*n.
    """
    if m < 1 or n < 1:
        raise GroupConstructionError("factor orders must be positive")
    if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise GroupConstructionError(f"twist r={r} invalid: need gcd(r,m)=1 and r^n=1 mod m")
    v = m * n
    if v > ORDER_CAP:
        raise GroupConstructionError(f"order {v} exceeds the cap of {ORDER_CAP}")
    idx = np.arange(v)
    i_part, j_part = idx // n, idx % n
    rpow = np.array([pow(r, j, m) for j in range(n)], dtype=np.int64)
    # (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*r^j1) b^(j1+j2)
    table = (((i_part[:, None] + i_part[None, :] * rpow[j_part][:, None]) % m) * n
             + (j_part[:, None] + j_part[None, :]) % n)
    ga, gb = gen_names
    names = [_word_name([ga, gb], (i, j)) for i, j in zip(i_part, j_part)]
    generators = {}
    if m > 1:
        generators[ga] = n
    if n > 1:
        generators[gb] = 1
    return FiniteGroup(table.astype(np.int16), names=names, generators=generators,
                       name=name or f"<{ga},{gb}|{ga}^{m}={gb}^{n}=1,{gb}{ga}={ga}^{r}{gb}>")


def _compose(p: tuple, q: tuple) -> tuple:
    """Apply p first, then q."""
    return tuple(q[x] for x in p)


def make_from_permutation_generators(degree: int, generators, gen_names=None,
                                     cap: int = ORDER_CAP, name: str = "") -> FiniteGroup:
    """Close a set of permutations of {0..degree-1} under composition.

    The product convention matches the group operation: x*y acts by x first,
    then y. Element names are the first generator words found by breadth-first
    closure, compressed to the usual power notation.
    """
    if degree < 1:
        raise GroupConstructionError("degree must be positive")
    gens = []
    for p in generators:
        p = tuple(int(x) for x in p)
        if sorted(p) != list(range(degree)):
            raise GroupConstructionError(f"{p} is not a permutation of 0..{degree - 1}")
        gens.append(p)
    if not gens:
        raise GroupConstructionError("need at least one generator")
    if gen_names is None:
        gen_names = [_GEN_ALPHABET[i] for i in range(len(gens))]
    gen_names = [str(g) for g in gen_names]

    ident = tuple(range(degree))
    index = {ident: 0}
    perms = [ident]
    words: list[tuple[int, ...]] = [()]
    head = 0
    while head < len(perms):
        base = perms[head]
        for gi, p in enumerate(gens):
            prod = _compose(base, p)
            if prod not in index:
                if len(perms) >= cap:
                    raise GroupConstructionError(
                        f"closure exceeds the cap of {cap} elements")
                index[prod] = len(perms)
                perms.append(prod)
                words.append(words[head] + (gi,))
        head += 1

    v = len(perms)
    table = np.empty((v, v), dtype=np.int16)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[_compose(p, q)]

    def word_label(word):
        exps, last, run = [], None, 0
        out = []
        for gi in word:
            if gi == last:
                run += 1
            else:
                if last is not None:
                    out.append((last, run))
                last, run = gi, 1
        if last is not None:
            out.append((last, run))
        return "".join(gen_names[g] if e == 1 else f"{gen_names[g]}^{e}" for g, e in out) or "1"

    names = [word_label(w) for w in words]
    if len(set(names)) != v:  # collisions possible for exotic words; fall back to indices
        names = None
    generators_map = {gen_names[gi]: index[p] for gi, p in enumerate(gens)}
    return FiniteGroup(table, names=names, generators=generators_map,
                       name=name or f"perm{degree}gen{len(gens)}")


def is_subgroup(group: FiniteGroup, subset) -> bool:
    """True iff the subset is nonempty and closed under products and inverses."""
    indices = group.resolve_subset(subset)
    if not indices:
        return False
    members = set(indices)
    for x in indices:
        if group.inv(x) not in members:
            return False
        for y in indices:
            if group.mul(x, y) not in members:
                return False
    return True


def group_from_spec(spec: str) -> FiniteGroup:
    """Build a group from a spec string or a JSON file path.

    Recognised specs: ``cyclic:N``, ``abelian:n1,n2,...``,
    ``metacyclic:m,n,r``; anything else is treated as a path to a JSON file
    in the interchange format.
    """
    s = spec.strip()
    if s.startswith("cyclic:"):
        return make_cyclic(int(s.split(":", 1)[1]))
    if s.startswith("abelian:"):
        return make_abelian([int(x) for x in s.split(":", 1)[1].split(",")])
    if s.startswith("metacyclic:"):
        m, n, r = (int(x) for x in s.split(":", 1)[1].split(","))
        return make_metacyclic(m, n, r)
    path = Path(s)
    if not path.exists():
        raise ValueError(f"unrecognised group spec {spec!r} (not a builtin, not a file)")
    return FiniteGroup.from_json(json.loads(path.read_text()), name=path.stem)
