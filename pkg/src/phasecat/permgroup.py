"""Finite permutation groups and subgroup-level primitives.

Groups are given by generators acting on the points ``{0, ..., degree-1}``;
all subgroup machinery (lattice, conjugacy, transporters, normalizers, Weyl
groups) works with exhaustive element lists.  Compact groups degenerate here
to finite ones: every morphism space downstream is already discrete, so the
pi_0 step of the discretized orbit category is the identity.

Everything is immutable after construction and all operations are pure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapExceededError, ValidationError

Perm = tuple[int, ...]

#: Hard cap on group order; subgroup-lattice enumeration is exponential-ish.
ORDER_CAP = 1024
#: Orders above this trigger a runtime warning but still run.
ORDER_WARN = 200


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Composite permutation (p after q): x -> p[q[x]]."""
    return tuple(p[q[x]] for x in range(len(p)))


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def check_perm(images, degree: int) -> Perm:
    """Validate an image array as a permutation of {0,...,degree-1}."""
    images = tuple(int(x) for x in images)
    if len(images) != degree:
        raise ValidationError(
            f"permutation has {len(images)} images, expected {degree}")
    if sorted(images) != list(range(degree)):
        raise ValidationError(f"images {images} are not a bijection "
                              f"on 0..{degree - 1}")
    return images


class FiniteGroup:
    """A permutation group with its full, canonically ordered element list.

    ``elements`` is the closure of the generators, sorted lexicographically
    by image tuple, so identical generator data always produces identical
    element indexing.
    """

    def __init__(self, degree: int, generators, _elements=None):
        if degree <= 0:
            raise ValidationError("degree must be positive")
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(
            check_perm(g, degree) for g in generators)
        if _elements is None:
            _elements = _closure_elements(degree, self.generators)
        self.elements: tuple[Perm, ...] = tuple(sorted(_elements))
        self._index: dict[Perm, int] = {
            p: i for i, p in enumerate(self.elements)}
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inv_cache: dict[int, int] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def identity_index(self) -> int:
        return self._index[identity_perm(self.degree)]

    def index(self, p: Perm) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise ValidationError(f"{p} is not an element of the group")

    def mul(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j] (i applied after j)."""
        key = (i, j)
        got = self._mul_cache.get(key)
        if got is None:
            got = self._index[perm_mul(self.elements[i], self.elements[j])]
            self._mul_cache[key] = got
        return got

    def inv(self, i: int) -> int:
        got = self._inv_cache.get(i)
        if got is None:
            got = self._index[perm_inv(self.elements[i])]
            self._inv_cache[i] = got
        return got

    def conj(self, g: int, h: int) -> int:
        """Index of g h g^-1."""
        return self.mul(self.mul(g, h), self.inv(g))

    def __repr__(self):
        return (f"FiniteGroup(degree={self.degree}, order={self.order}, "
                f"generators={len(self.generators)})")


def _closure_elements(degree: int, generators) -> set[Perm]:
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = perm_mul(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > ORDER_CAP:
                        raise CapExceededError(
                            f"group order exceeds cap {ORDER_CAP}")
        frontier = nxt
    if len(seen) > ORDER_WARN:
        warnings.warn(
            f"group order {len(seen)} > {ORDER_WARN}; subgroup enumeration "
            "may be slow", stacklevel=3)
    return seen


def closure(degree: int, generators) -> FiniteGroup:
    """Smallest permutation group containing the generators."""
    return FiniteGroup(degree, generators)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent``, stored as a sorted element-index tuple."""
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def contains(self, g: int) -> bool:
        return g in self.member_set

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        return Subgroup(G, tuple(G.conj(g, h) for h in self.members))

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup on the same points."""
        G = self.parent
        elems = {G.elements[i] for i in self.members}
        return FiniteGroup(G.degree, sorted(elems), _elements=elems)

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={self.members})"


def subgroup_closure(G: FiniteGroup, seed) -> frozenset[int]:
    """Close a set of element indices under multiplication and inverse."""
    members = {G.identity_index}
    members.update(G.inv(i) for i in seed)
    members.update(seed)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (G.mul(a, b), G.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(members)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (G.identity_index,))


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of G, sorted by (order, member tuple).

    Layered closure: seed with all cyclic subgroups, then repeatedly extend
    each known subgroup by one extra element and close.  Terminates because
    the subgroup lattice is finite; exhaustive because every subgroup is
    reachable by adjoining its elements one at a time.
    """
    if G.order > ORDER_CAP:
        raise CapExceededError(f"group order {G.order} exceeds {ORDER_CAP}")
    known: set[frozenset[int]] = {frozenset({G.identity_index})}
    for g in range(G.order):
        known.add(subgroup_closure(G, (g,)))
    frontier = set(known)
    while frontier:
        new: set[frozenset[int]] = set()
        for members in frontier:
            for g in range(G.order):
                if g in members:
                    continue
                ext = subgroup_closure(G, tuple(members) + (g,))
                if ext not in known:
                    new.add(ext)
        known.update(new)
        frontier = new
    subs = [Subgroup(G, tuple(sorted(m))) for m in known]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with a canonical representative."""
    representative: Subgroup
    orbit_of_subgroups: tuple[Subgroup, ...]
    class_index: int

    @property
    def order(self) -> int:
        return self.representative.order

    def __repr__(self):
        return (f"SubgroupClass(#{self.class_index}, order={self.order}, "
                f"size={len(self.orbit_of_subgroups)})")


def conjugacy_classes_of_subgroups(
        G: FiniteGroup, subgroups: list[Subgroup] | None = None
) -> list[SubgroupClass]:
    """Partition of the subgroup lattice into conjugation orbits.

    Representatives are the subgroups with minimal member tuple in their
    orbit; classes are sorted by (order, representative members) and indexed
    in that order.
    """
    if subgroups is None:
        subgroups = all_subgroups(G)
    remaining = {s.members: s for s in subgroups}
    classes = []
    while remaining:
        members, sub = min(remaining.items())
        orbit = {}
        for g in range(G.order):
            c = sub.conjugate(g)
            orbit[c.members] = c
        for m in orbit:
            remaining.pop(m, None)
        reps = sorted(orbit)
        classes.append((Subgroup(G, reps[0]),
                        tuple(orbit[m] for m in reps)))
    classes.sort(key=lambda pair: (pair[0].order, pair[0].members))
    return [SubgroupClass(rep, orbit, i)
            for i, (rep, orbit) in enumerate(classes)]


def transporter(G: FiniteGroup, H0: Subgroup, H1: Subgroup) -> frozenset[int]:
    """{g in G | g H0 g^-1 <= H1}."""
    target = H1.member_set
    out = []
    for g in range(G.order):
        if all(G.conj(g, h) in target for h in H0.members):
            out.append(g)
    return frozenset(out)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """{g | g H g^-1 = H}; for finite H, containment forces equality."""
    return Subgroup(G, tuple(sorted(transporter(G, H, H))))


def left_cosets(G: FiniteGroup, H: Subgroup,
                within: Subgroup | None = None) -> list[tuple[int, ...]]:
    """Left cosets gH inside ``within`` (default: all of G), each a sorted
    tuple, listed in order of their minimal element."""
    ambient = within.members if within is not None else range(G.order)
    seen: set[int] = set()
    cosets = []
    for g in ambient:
        if g in seen:
            continue
        coset = tuple(sorted(G.mul(g, h) for h in H.members))
        seen.update(coset)
        cosets.append(coset)
    cosets.sort(key=lambda c: c[0])
    return cosets


def weyl_group(G: FiniteGroup, H: Subgroup) -> FiniteGroup:
    """W_G(H) = N_G(H)/H as a permutation group on the cosets of H in N."""
    N = normalizer(G, H)
    cosets = left_cosets(G, H, within=N)
    where = {g: i for i, coset in enumerate(cosets) for g in coset}
    perms = {tuple(where[G.mul(n, c[0])] for c in cosets) for n in N.members}
    return FiniteGroup(len(cosets), sorted(perms), _elements=perms)
