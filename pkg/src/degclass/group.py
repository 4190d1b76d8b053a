"""Permutation groups with a deterministic base and strong generating set.

Construction does two independent things and cross-checks them:

* a deterministic (non-randomized) Schreier-Sims run yields the base, the
  strong generators, the transversals used for membership testing, and the
  exact group order as a product of basic orbit lengths;
* for groups no larger than the enumeration cap, a breadth-first closure of
  the generating set yields the full element list, sorted lexicographically
  by image tuple.

If the two orders ever disagree the constructor raises: that is an internal
bug, never a recoverable condition.  Base points are always the first moved
points, orbits are explored in FIFO order with generators applied in input
order, so rebuilding a group from the same generator sequence reproduces the
identical BSGS byte for byte.

Groups are immutable after construction; all derived data (element index,
inverses, element orders) is precomputed here so concurrent readers never
race.
"""

from __future__ import annotations

import math
from typing import Iterable

from .perm import Permutation, identity

DEFAULT_ENUMERATION_CAP = 20000

_RawPerm = tuple[int, ...]


class GroupTooLargeError(RuntimeError):
    """The operation needs the element cache but the group exceeds its cap."""


class _Level:
    """One stabilizer level: base point, generators fixing all earlier points,
    and a transversal mapping each orbit point to a coset representative."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[_RawPerm] = []
        self.transversal: dict[int, _RawPerm] = {point: tuple(range(degree))}


def _mul(a: _RawPerm, b: _RawPerm) -> _RawPerm:
    return tuple(b[x] for x in a)


def _inv(a: _RawPerm) -> _RawPerm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _first_moved(a: _RawPerm) -> int:
    for i, j in enumerate(a):
        if i != j:
            return i
    raise ValueError("identity moves no point")


def _schreier_sims(degree: int, raw_gens: list[_RawPerm]) -> tuple[list[int], list[_RawPerm], list[_Level], int]:
    ident = tuple(range(degree))
    gens = [g for g in dict.fromkeys(raw_gens) if g != ident]
    base: list[int] = []
    levels: list[_Level] = []

    def rebuild_orbit(level: _Level) -> None:
        tr = {level.point: ident}
        queue = [level.point]
        while queue:
            x = queue.pop(0)
            ux = tr[x]
            for s in level.gens:
                y = s[x]
                if y not in tr:
                    tr[y] = _mul(ux, s)
                    queue.append(y)
        level.transversal = tr

    def strip(g: _RawPerm, start: int) -> tuple[_RawPerm, int]:
        for i in range(start, len(levels)):
            lvl = levels[i]
            x = g[lvl.point]
            u = lvl.transversal.get(x)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(levels)

    # initial base: every input generator must move some base point
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
            levels.append(_Level(base[-1], degree))
    for i, lvl in enumerate(levels):
        lvl.gens = [g for g in gens if all(g[b] == b for b in base[:i])]
        rebuild_orbit(lvl)

    strong = list(gens)
    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        added = False
        for x in sorted(lvl.transversal):
            ux = lvl.transversal[x]
            for s in lvl.gens:
                uy = lvl.transversal[s[x]]
                sch = _mul(_mul(ux, s), _inv(uy))  # fixes base[: i + 1]
                if sch == ident:
                    continue
                h, j = strip(sch, i + 1)
                if h == ident:
                    continue
                strong.append(h)
                if j == len(levels):
                    base.append(_first_moved(h))
                    levels.append(_Level(base[-1], degree))
                for k in range(i + 1, j + 1):
                    levels[k].gens.append(h)
                    rebuild_orbit(levels[k])
                i = j
                added = True
                break
            if added:
                break
        if not added:
            i -= 1

    order = math.prod(len(lvl.transversal) for lvl in levels)
    return base, strong, levels, order


def _closure(degree: int, raw_gens: list[_RawPerm]) -> list[_RawPerm]:
    ident = tuple(range(degree))
    members = {ident}
    frontier = [ident]
    gens = [g for g in dict.fromkeys(raw_gens) if g != ident]
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                prod = tuple(g[x] for x in m)
                if prod not in members:
                    members.add(prod)
                    fresh.append(prod)
        frontier = fresh
    return sorted(members)


class Group:
    """A finite permutation group; use :func:`build_group` to construct one."""

    __slots__ = (
        "degree",
        "generators",
        "base",
        "strong_generators",
        "order",
        "enumeration_cap",
        "elements",
        "_levels",
        "_raw",
        "_index",
        "_inverse_index",
        "_element_orders",
        "_generator_indices",
    )

    def __init__(self, degree: int, generators: tuple[Permutation, ...], *, enumeration_cap: int):
        self.degree = degree
        self.generators = generators
        self.enumeration_cap = enumeration_cap

        raw_gens = [g.images for g in generators]
        base, strong, levels, order = _schreier_sims(degree, raw_gens)
        self.base = tuple(base)
        self.strong_generators = tuple(Permutation(g) for g in strong)
        self._levels = levels
        self.order = order

        if order <= enumeration_cap:
            raw = _closure(degree, raw_gens)
            if len(raw) != order:
                raise RuntimeError(
                    f"internal error: BSGS order {order} != closure size {len(raw)}"
                )
            self._raw = tuple(raw)
            self.elements = tuple(Permutation(t) for t in raw)
            self._index = {t: i for i, t in enumerate(raw)}
            self._inverse_index = tuple(self._index[_inv(t)] for t in raw)
            self._element_orders = tuple(p.order() for p in self.elements)
            self._generator_indices = tuple(self._index[g] for g in dict.fromkeys(raw_gens))
        else:
            self._raw = None
            self.elements = None
            self._index = None
            self._inverse_index = None
            self._element_orders = None
            self._generator_indices = None

    # -- membership ----------------------------------------------------

    def __contains__(self, p: Permutation) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        g = p.images
        for lvl in self._levels:
            u = lvl.transversal.get(g[lvl.point])
            if u is None:
                return False
            g = _mul(g, _inv(u))
        return g == tuple(range(self.degree))

    # -- element cache access -------------------------------------------

    @property
    def has_element_cache(self) -> bool:
        return self.elements is not None

    def _require_cache(self) -> None:
        if self.elements is None:
            raise GroupTooLargeError(
                f"group too large: order {self.order} exceeds enumeration cap "
                f"{self.enumeration_cap}"
            )

    def index_of(self, p: Permutation) -> int:
        self._require_cache()
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p!r} is not an element of this group") from None

    def i_mul(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j] (left-to-right composition)."""
        a = self._raw[i]
        b = self._raw[j]
        return self._index[tuple(b[x] for x in a)]

    def i_inv(self, i: int) -> int:
        return self._inverse_index[i]

    def i_conj(self, i: int, g: int) -> int:
        """Index of elements[g]^-1 * elements[i] * elements[g]."""
        return self.i_mul(self.i_mul(self.i_inv(g), i), g)

    def i_comm(self, i: int, j: int) -> int:
        """Index of the commutator elements[i]^-1 elements[j]^-1 elements[i] elements[j]."""
        return self.i_mul(self.i_mul(self.i_inv(i), self.i_inv(j)), self.i_mul(i, j))

    def element_order(self, i: int) -> int:
        return self._element_orders[i]

    @property
    def identity_index(self) -> int:
        # the identity image tuple is lexicographically minimal, hence index 0
        return 0

    @property
    def generator_indices(self) -> tuple[int, ...]:
        self._require_cache()
        return self._generator_indices

    def identity(self) -> Permutation:
        return identity(self.degree)

    def __repr__(self) -> str:
        return f"<Group degree={self.degree} order={self.order}>"


def build_group(
    degree: int,
    generators: Iterable[Permutation],
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> Group:
    """Build a group from generators acting on {0..degree-1}.

    An empty generator list explicitly denotes the trivial group on the given
    points.  The element cache is populated exactly when the order does not
    exceed ``enumeration_cap``.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != group degree {degree}")
    return Group(degree, gens, enumeration_cap=enumeration_cap)


def enumerate_elements(group: Group) -> tuple[Permutation, ...]:
    """All elements sorted lexicographically by image tuple.

    Raises GroupTooLargeError when the order exceeds the enumeration cap;
    the list is never silently truncated.
    """
    group._require_cache()
    return group.elements


def direct_product(g: Group, h: Group, enumeration_cap: int | None = None) -> Group:
    """External direct product acting on the disjoint union of the point sets."""
    cap = max(g.enumeration_cap, h.enumeration_cap) if enumeration_cap is None else enumeration_cap
    dg, dh = g.degree, h.degree
    gens: list[Permutation] = []
    for a in g.generators:
        gens.append(Permutation(a.images + tuple(range(dg, dg + dh))))
    for b in h.generators:
        gens.append(Permutation(tuple(range(dg)) + tuple(x + dg for x in b.images)))
    prod = build_group(dg + dh, gens, enumeration_cap=cap)
    if prod.order != g.order * h.order:
        raise RuntimeError(
            f"internal error: direct product order {prod.order} != {g.order} * {h.order}"
        )
    return prod
