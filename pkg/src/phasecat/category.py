"""Finite categories with explicit hom-sets and composition tables.

This is the shared output shape for the orbit category, the phase diagram,
and stratified-set diagrams: a list of labeled objects, a global morphism
list, per-object identities, and a total composition table on composable
pairs.  Associativity and unit laws are checkable exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import CapExceededError, ValidationError

#: categoryIsomorphic refuses categories bigger than this.
ISO_OBJECT_GUARD = 64


@dataclass(frozen=True)
class Morphism:
    src: int
    dst: int
    label: str
    data: Any = None


class FiniteCategory:
    """Objects, morphisms, identities and a total composition table.

    ``compose_table[(m2, m1)]`` is the index of m2 after m1, defined exactly
    when ``morphisms[m1].dst == morphisms[m2].src``.
    """

    def __init__(self, objects: list[str], morphisms: list[Morphism],
                 identity: list[int],
                 compose_table: dict[tuple[int, int], int]):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.identity = list(identity)
        self.compose_table = dict(compose_table)
        self._hom: dict[tuple[int, int], list[int]] = {}
        for i, m in enumerate(self.morphisms):
            self._hom.setdefault((m.src, m.dst), []).append(i)
        self._validate()

    def _validate(self):
        if len(self.identity) != len(self.objects):
            raise ValidationError("one identity required per object")
        for o, i in enumerate(self.identity):
            m = self.morphisms[i]
            if m.src != o or m.dst != o:
                raise ValidationError(f"identity of object {o} has "
                                      f"endpoints ({m.src},{m.dst})")
        for (m2, m1), r in self.compose_table.items():
            a, b, c = self.morphisms[m1], self.morphisms[m2], self.morphisms[r]
            if a.dst != b.src or c.src != a.src or c.dst != b.dst:
                raise ValidationError(
                    f"composition table entry ({m2},{m1})->{r} mismatched")

    def hom(self, src: int, dst: int) -> list[int]:
        return list(self._hom.get((src, dst), []))

    def compose(self, m2: int, m1: int) -> int:
        if self.morphisms[m1].dst != self.morphisms[m2].src:
            raise ValidationError(f"morphisms {m2} and {m1} not composable")
        return self.compose_table[(m2, m1)]

    def is_identity(self, m: int) -> bool:
        return self.identity[self.morphisms[m].src] == m

    def aut_order(self, obj: int) -> int:
        return len(self._hom.get((obj, obj), []))

    def composable_pairs(self):
        for m1, a in enumerate(self.morphisms):
            for m2 in range(len(self.morphisms)):
                if self.morphisms[m2].src == a.dst:
                    yield m2, m1

    def check_category_laws(self):
        """Exhaustively verify totality, units and associativity."""
        for m2, m1 in self.composable_pairs():
            if (m2, m1) not in self.compose_table:
                raise ValidationError(f"missing composition ({m2},{m1})")
        for m, mor in enumerate(self.morphisms):
            if self.compose(m, self.identity[mor.src]) != m:
                raise ValidationError(f"right unit fails at {m}")
            if self.compose(self.identity[mor.dst], m) != m:
                raise ValidationError(f"left unit fails at {m}")
        for m1, a in enumerate(self.morphisms):
            for m2 in range(len(self.morphisms)):
                if self.morphisms[m2].src != a.dst:
                    continue
                for m3 in range(len(self.morphisms)):
                    if self.morphisms[m3].src != self.morphisms[m2].dst:
                        continue
                    left = self.compose(m3, self.compose(m2, m1))
                    right = self.compose(self.compose(m3, m2), m1)
                    if left != right:
                        raise ValidationError(
                            f"associativity fails on ({m3},{m2},{m1})")
        return True


@dataclass
class IsoWitness:
    """A category isomorphism: bijections on objects and on morphisms."""
    object_map: list[int]
    morphism_map: list[int]


def category_isomorphic(A: FiniteCategory,
                        B: FiniteCategory) -> IsoWitness | None:
    """Search for an isomorphism of finite categories.

    Backtracks over object bijections (pruned by hom-set cardinalities),
    then over morphism bijections with forced closure under composition.
    Intended for desk-scale categories only.
    """
    if max(len(A.objects), len(B.objects)) > ISO_OBJECT_GUARD:
        raise CapExceededError(
            f"isomorphism search capped at {ISO_OBJECT_GUARD} objects")
    if (len(A.objects) != len(B.objects)
            or len(A.morphisms) != len(B.morphisms)):
        return None

    n = len(A.objects)

    def hom_signature(C: FiniteCategory, o: int):
        ins = sorted(len(C.hom(x, o)) for x in range(len(C.objects)))
        outs = sorted(len(C.hom(o, x)) for x in range(len(C.objects)))
        return tuple(ins), tuple(outs)

    sig_a = [hom_signature(A, o) for o in range(n)]
    sig_b = [hom_signature(B, o) for o in range(n)]

    obj_map: list[int] = [-1] * n
    used_obj = [False] * n

    def objects_ok(i: int, j: int) -> bool:
        if sig_a[i] != sig_b[j]:
            return False
        for x in range(n):
            if obj_map[x] < 0:
                continue
            if len(A.hom(i, x)) != len(B.hom(j, obj_map[x])):
                return False
            if len(A.hom(x, i)) != len(B.hom(obj_map[x], j)):
                return False
        return True

    def assign_objects(i: int):
        if i == n:
            got = _find_morphism_map(A, B, obj_map)
            if got is not None:
                yield got
            return
        for j in range(n):
            if used_obj[j] or not objects_ok(i, j):
                continue
            obj_map[i] = j
            used_obj[j] = True
            yield from assign_objects(i + 1)
            obj_map[i] = -1
            used_obj[j] = False

    for mmap in assign_objects(0):
        return IsoWitness(object_map=list(obj_map), morphism_map=mmap)
    return None


def _find_morphism_map(A: FiniteCategory, B: FiniteCategory,
                       obj_map: list[int]) -> list[int] | None:
    nm = len(A.morphisms)
    mmap = [-1] * nm
    used = [False] * nm
    # target candidates by (src, dst) under the object bijection
    comp_a: dict[int, list[tuple[int, int]]] = {m: [] for m in range(nm)}
    for (m2, m1), r in A.compose_table.items():
        comp_a[m2].append((m2, m1))
        comp_a[m1].append((m2, m1))

    def assign(m: int, target: int, trail: list[int]) -> bool:
        """Set mmap[m] = target and propagate forced compositions."""
        if mmap[m] >= 0:
            return mmap[m] == target
        if used[target]:
            return False
        ma, mb = A.morphisms[m], B.morphisms[target]
        if obj_map[ma.src] != mb.src or obj_map[ma.dst] != mb.dst:
            return False
        mmap[m] = target
        used[target] = True
        trail.append(m)
        for (m2, m1) in comp_a[m]:
            if mmap[m2] < 0 or mmap[m1] < 0:
                continue
            r = A.compose_table[(m2, m1)]
            rb = B.compose_table.get((mmap[m2], mmap[m1]))
            if rb is None:
                return False
            if not assign(r, rb, trail):
                return False
        return True

    def undo(trail: list[int], mark: int):
        while len(trail) > mark:
            m = trail.pop()
            used[mmap[m]] = False
            mmap[m] = -1

    trail: list[int] = []
    for o, i in enumerate(A.identity):
        if not assign(i, B.identity[obj_map[o]], trail):
            undo(trail, 0)
            return None

    def next_unassigned() -> int | None:
        best, best_count = None, None
        for m in range(nm):
            if mmap[m] >= 0:
                continue
            ma = A.morphisms[m]
            cands = sum(
                1 for t in B.hom(obj_map[ma.src], obj_map[ma.dst])
                if not used[t])
            if best_count is None or cands < best_count:
                best, best_count = m, cands
        return best

    def search() -> bool:
        m = next_unassigned()
        if m is None:
            return True
        ma = A.morphisms[m]
        for t in B.hom(obj_map[ma.src], obj_map[ma.dst]):
            if used[t]:
                continue
            mark = len(trail)
            if assign(m, t, trail) and search():
                return True
            undo(trail, mark)
        return False

    if search():
        return list(mmap)
    undo(trail, 0)
    return None
