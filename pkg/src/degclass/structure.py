"""Conjugacy classes and brute-force structural oracles.

Everything in this module works over the full element enumeration of the
group, so it requires the element cache and fails with GroupTooLargeError
above the cap.  Oracles are deliberately exhaustive: correctness and
auditability beat asymptotics at the intended scale, and normality checks
conjugate members explicitly instead of trusting theory, so theorem
verification stays genuinely two-sided.

Subgroups are plain index sets into the parent enumeration; equality of
subgroups is equality of those sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .arith import PrimeSet, is_prime, prime_set, valuation
from .group import Group
from .perm import Permutation


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    member_indices: frozenset[int]


class ConjugacyClassSet:
    """The conjugacy classes of a group, ordered by smallest member index.

    ``class_index[i]`` is the class of element i; ``inverse_pairing[c]`` is
    the class holding the inverses of class c.
    """

    def __init__(self, group: Group):
        group._require_cache()
        self.group = group
        n = group.order
        gen_idx = group.generator_indices
        class_index = [-1] * n
        classes: list[ConjugacyClass] = []
        for start in range(n):
            if class_index[start] >= 0:
                continue
            cid = len(classes)
            orbit = [start]
            class_index[start] = cid
            queue = [start]
            while queue:
                x = queue.pop(0)
                for g in gen_idx:
                    y = group.i_conj(x, g)
                    if class_index[y] < 0:
                        class_index[y] = cid
                        orbit.append(y)
                        queue.append(y)
            classes.append(
                ConjugacyClass(group.elements[start], len(orbit), frozenset(orbit))
            )
        self.classes = tuple(classes)
        self.class_index = tuple(class_index)
        self.inverse_pairing = tuple(
            class_index[group.i_inv(group.index_of(c.representative))] for c in classes
        )

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def class_of(self, element_index: int) -> int:
        return self.class_index[element_index]


def conjugacy_classes(group: Group) -> ConjugacyClassSet:
    return ConjugacyClassSet(group)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as an index set into the parent's element enumeration."""

    parent: Group
    member_indices: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.member_indices)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def contains(self, other: "Subgroup") -> bool:
        return other.member_indices <= self.member_indices

    def perms(self) -> list[Permutation]:
        return [self.parent.elements[i] for i in sorted(self.member_indices)]

    def is_abelian(self) -> bool:
        members = sorted(self.member_indices)
        g = self.parent
        return all(
            g.i_mul(a, b) == g.i_mul(b, a) for a in members for b in members if b > a
        )

    def is_normal(self) -> bool:
        """Explicit check: conjugate every member by every parent generator."""
        g = self.parent
        return all(
            g.i_conj(m, x) in self.member_indices
            for m in self.member_indices
            for x in g.generator_indices
        )

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"


def _closure(group: Group, seed: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by the seed indices (identity always included)."""
    seeds = sorted(set(seed))
    members = {group.identity_index, *seeds}
    frontier = sorted(members)
    while frontier:
        fresh = []
        for m in frontier:
            for s in seeds:
                k = group.i_mul(m, s)
                if k not in members:
                    members.add(k)
                    fresh.append(k)
        frontier = fresh
    return frozenset(members)


def subgroup_from_indices(group: Group, indices: Iterable[int]) -> Subgroup:
    return Subgroup(group, _closure(group, indices))


def trivial_subgroup(group: Group) -> Subgroup:
    group._require_cache()
    return Subgroup(group, frozenset({group.identity_index}))


def full_subgroup(group: Group) -> Subgroup:
    group._require_cache()
    return Subgroup(group, frozenset(range(group.order)))


def centralizer(group: Group, perms: Iterable[Permutation]) -> Subgroup:
    """Elements commuting with every permutation in ``perms`` (all must be members)."""
    group._require_cache()
    targets = [group.index_of(p) for p in perms]
    members = frozenset(
        i
        for i in range(group.order)
        if all(group.i_mul(i, t) == group.i_mul(t, i) for t in targets)
    )
    return Subgroup(group, members)


def centre(group: Group) -> Subgroup:
    return centralizer(group, group.generators)


def normalizer(group: Group, sub: Subgroup) -> Subgroup:
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    members = frozenset(
        g
        for g in range(group.order)
        if all(group.i_conj(m, g) in sub.member_indices for m in sub.member_indices)
    )
    return Subgroup(group, members)


def derived_subgroup(group: Group) -> Subgroup:
    """Closure of all commutators [x, y] over the whole enumeration."""
    group._require_cache()
    n = group.order
    comms = {group.i_comm(i, j) for i in range(n) for j in range(n)}
    return Subgroup(group, _closure(group, comms))


def derived_of(sub: Subgroup) -> Subgroup:
    """Derived subgroup of a subgroup, as a subgroup of the same parent."""
    g = sub.parent
    members = sorted(sub.member_indices)
    comms = {g.i_comm(i, j) for i in members for j in members}
    return Subgroup(g, _closure(g, comms))


def commutator_subgroup_of(sub: Subgroup, group: Group) -> Subgroup:
    """[N, G] for N normal in G; raises if N is not normal."""
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    if not sub.is_normal():
        raise ValueError("subgroup is not normal in its parent")
    comms = {
        group.i_comm(x, y) for x in sub.member_indices for y in range(group.order)
    }
    return Subgroup(group, _closure(group, comms))


def lower_central_last(group: Group) -> Subgroup:
    """Stable term of the lower central series K_{i+1} = [K_i, G]."""
    group._require_cache()
    current = frozenset(range(group.order))
    while True:
        comms = {group.i_comm(x, y) for x in current for y in range(group.order)}
        nxt = _closure(group, comms)
        if nxt == current:
            return Subgroup(group, current)
        current = nxt


def hypercentre(group: Group) -> Subgroup:
    """Stable term of the upper central series.

    Z_1 = Z(G); Z_{i+1} = {x : [x, g] in Z_i for all g}, iterated until the
    set stops growing.
    """
    group._require_cache()
    current = centre(group).member_indices
    everyone = range(group.order)
    while True:
        nxt = frozenset(
            x for x in everyone if all(group.i_comm(x, g) in current for g in everyone)
        )
        if nxt == current:
            return Subgroup(group, current)
        current = nxt


def p_residual(group: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with p-group quotient: closure of all p'-elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    group._require_cache()
    seed = [i for i in range(group.order) if group.element_order(i) % p != 0]
    return Subgroup(group, _closure(group, seed))


def p_prime_residual(group: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with p'-group quotient: closure of all p-elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    group._require_cache()
    seed = [i for i in range(group.order) if _is_p_power(group.element_order(i), p)]
    return Subgroup(group, _closure(group, seed))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _is_pi_number(n: int, pi: PrimeSet) -> bool:
    for p in pi:
        while n % p == 0:
            n //= p
    return n == 1


def sylow_subgroup(group: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically.

    Starting from the trivial subgroup, repeatedly adjoin the least-index
    p-element of N_G(P) \\ P and close; each step multiplies |P| by a power
    of p, so the loop reaches |G|_p exactly.  Returns the trivial subgroup
    when p does not divide |G|.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    group._require_cache()
    target = p ** valuation(group.order, p)
    members = frozenset({group.identity_index})
    while len(members) < target:
        norm = normalizer(group, Subgroup(group, members))
        candidate = min(
            i
            for i in sorted(norm.member_indices)
            if i not in members and _is_p_power(group.element_order(i), p)
        )
        members = _closure(group, set(members) | {candidate})
    return Subgroup(group, members)


def pi_elements_subgroup(group: Group, pi: Iterable[int]) -> Optional[Subgroup]:
    """The set of pi-elements as a Subgroup iff it is product-closed, else None.

    When it is closed it is the unique normal Hall pi-subgroup of the group.
    """
    sub, _ = _pi_elements_closure(group, pi)
    return sub


def _pi_elements_closure(
    group: Group, pi: Iterable[int]
) -> tuple[Optional[Subgroup], Optional[tuple[int, int]]]:
    """Like pi_elements_subgroup but also reports the first closure failure."""
    ps = prime_set(pi)
    group._require_cache()
    members = [i for i in range(group.order) if _is_pi_number(group.element_order(i), ps)]
    mset = frozenset(members)
    for a in members:
        for b in members:
            if group.i_mul(a, b) not in mset:
                return None, (a, b)
    return Subgroup(group, mset), None


@dataclass(frozen=True)
class DirectProductWitness:
    """Outcome of testing G = P x H for P the p-part and H the p'-part."""

    holds: bool
    p_part: Optional[Subgroup]
    p_complement: Optional[Subgroup]
    failure: Optional[str]


def is_direct_product_p(group: Group, p: int) -> DirectProductWitness:
    """True iff both the p-elements and the p'-elements form subgroups.

    Both sets are conjugation-invariant, so success makes them normal with
    trivial intersection and complementary orders: G = P x H automatically.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    from .arith import primes_of

    p_side, p_fail = _pi_elements_closure(group, (p,))
    if p_side is None:
        a, b = p_fail
        return DirectProductWitness(False, None, None, f"{p}-elements not closed at pair ({a},{b})")
    complement = tuple(q for q in primes_of(group.order) if q != p)
    h_side, h_fail = _pi_elements_closure(group, complement)
    if h_side is None:
        a, b = h_fail
        return DirectProductWitness(
            False, p_side, None, f"{p}'-elements not closed at pair ({a},{b})"
        )
    return DirectProductWitness(True, p_side, h_side, None)


def has_central_hall(group: Group, pi: Iterable[int]) -> bool:
    """The pi-elements form a subgroup lying inside the centre."""
    sub = pi_elements_subgroup(group, pi)
    return sub is not None and sub.member_indices <= centre(group).member_indices


def has_normal_abelian_hall(group: Group, pi: Iterable[int]) -> bool:
    """The pi-elements form an abelian subgroup (necessarily a normal Hall one)."""
    sub = pi_elements_subgroup(group, pi)
    return sub is not None and sub.is_abelian()


def q_r_elements_commute(group: Group, p: int) -> bool:
    """For all distinct primes q, r != p dividing |G|, every q-element
    commutes with every r-element (exhaustive test)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    from .arith import primes_of

    group._require_cache()
    others = [q for q in primes_of(group.order) if q != p]
    by_prime = {
        q: [i for i in range(group.order) if _is_p_power(group.element_order(i), q)]
        for q in others
    }
    for qi, q in enumerate(others):
        for r in others[qi + 1 :]:
            for a in by_prime[q]:
                for b in by_prime[r]:
                    if group.i_mul(a, b) != group.i_mul(b, a):
                        return False
    return True
