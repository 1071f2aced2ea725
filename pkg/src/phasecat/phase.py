"""Phase diagrams: the category of elements of pi_0 of the fixed-point
presheaf, the quotient functor from the transformation groupoid, the
forgetful functor to the orbit category, and the stratified-set variant.

Objects of the phase diagram are pairs (subgroup class H, component c of
Fix(H)); a morphism (H0,c0) -> (H1,c1) is an orbit-category morphism
alpha: H0 -> H1 whose induced map on components sends c1 to c0.  With this
direction convention, arrows run toward larger symmetry, matching the
symmetry-breaking reading of degenerations.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .category import FiniteCategory, Morphism
from .errors import ValidationError
from .gspace import (FixPresheaf, GComplex, close_under_faces, components,
                     isotropy, pi0_fix_presheaf)
from .orbitcat import OrbitCategory, build_orbit_category
from .permgroup import FiniteGroup, Subgroup, conjugacy_classes_of_subgroups

Simplex = frozenset[int]


@dataclass(frozen=True)
class PhaseObject:
    subgroup_class: int
    component_id: int

    @property
    def label(self) -> str:
        return f"(H{self.subgroup_class},c{self.component_id})"


class PhaseCategory:
    """Phi_0[X/G] with its forgetful data down to O_0(G)."""

    def __init__(self, orbit: OrbitCategory, presheaf: FixPresheaf):
        self.orbit = orbit
        self.presheaf = presheaf
        (self.category, self.objects, self.forgetful_objects,
         self.forgetful_morphisms) = _build_phase(orbit, presheaf)

    @property
    def aut_orders(self) -> list[int]:
        return [self.category.aut_order(o) for o in range(len(self.objects))]

    def object_index(self, subgroup_class: int, component_id: int) -> int:
        for i, o in enumerate(self.objects):
            if (o.subgroup_class, o.component_id) == (subgroup_class,
                                                      component_id):
                return i
        raise ValidationError(
            f"no phase object (H{subgroup_class},c{component_id})")

    def fiber(self, class_index: int) -> list[int]:
        """Phase objects lying over a given orbit-category object."""
        return [i for i, o in enumerate(self.objects)
                if o.subgroup_class == class_index]


def _build_phase(orbit: OrbitCategory, presheaf: FixPresheaf):
    classes = orbit.classes
    objects: list[PhaseObject] = []
    obj_index: dict[tuple[int, int], int] = {}
    for c in range(len(classes)):
        for comp_id in range(len(presheaf.comps[c])):
            obj_index[(c, comp_id)] = len(objects)
            objects.append(PhaseObject(c, comp_id))

    induced: dict[int, list[int]] = {}
    for m, om in enumerate(orbit.orbit_morphisms):
        induced[m] = presheaf.induced_map(om.source_class, om.target_class,
                                          om.coset_rep)

    morphisms: list[Morphism] = []
    mor_index: dict[tuple[int, int], int] = {}
    forget_mor: list[int] = []
    for m, om in enumerate(orbit.orbit_morphisms):
        for c1 in range(len(presheaf.comps[om.target_class])):
            c0 = induced[m][c1]
            src = obj_index[(om.source_class, c0)]
            dst = obj_index[(om.target_class, c1)]
            mor_index[(m, c1)] = len(morphisms)
            morphisms.append(Morphism(
                src, dst, f"{orbit.category.morphisms[m].label}@c{c1}",
                (m, c1)))
            forget_mor.append(m)

    identity = []
    for o in objects:
        base = orbit.category.identity[o.subgroup_class]
        identity.append(mor_index[(base, o.component_id)])

    table: dict[tuple[int, int], int] = {}
    for i1, mor1 in enumerate(morphisms):
        m1, comp1 = mor1.data
        for i2, mor2 in enumerate(morphisms):
            if mor2.src != mor1.dst:
                continue
            m2, comp2 = mor2.data
            base = orbit.category.compose_table[(m2, m1)]
            table[(i2, i1)] = mor_index[(base, comp2)]

    cat = FiniteCategory([o.label for o in objects], morphisms, identity,
                         table)
    forget_obj = [o.subgroup_class for o in objects]
    return cat, objects, forget_obj, forget_mor


def build_phase_diagram(G: FiniteGroup, X: GComplex,
                        orbit: OrbitCategory | None = None) -> PhaseCategory:
    """Grothendieck category of elements of pi_0 Fix over O_0(G)."""
    if X.group is not G:
        raise ValidationError("complex must carry an action of the group")
    if orbit is None:
        orbit = build_orbit_category(G)
    presheaf = pi0_fix_presheaf(X, orbit.classes)
    return PhaseCategory(orbit, presheaf)


@dataclass
class QuotientFunctor:
    """The functor [X/G] -> Phi_0[X/G] generalizing X -> pi_0 X.

    ``vertex_object[v]`` is the phase object of vertex v;
    ``arrow_image(g, v)`` is the phase morphism that the groupoid arrow
    g: v -> gv maps to.
    """
    phase: PhaseCategory
    vertex_object: list[int]
    _conjugator: list[int]

    def arrow_image(self, g: int, v: int) -> int:
        X = self.phase.presheaf.X
        G = X.group
        w = X.element_maps[g][v]
        k0, k1 = self._conjugator[v], self._conjugator[w]
        # k1^-1 g k0 normalizes the class representative of Iso(v)
        n = G.mul(G.inv(k1), G.mul(g, k0))
        src = self.phase.objects[self.vertex_object[v]]
        dst = self.phase.objects[self.vertex_object[w]]
        base = self.phase.orbit.morphism_index(
            src.subgroup_class, dst.subgroup_class, n)
        for m, mor in enumerate(self.phase.category.morphisms):
            if mor.data == (base, dst.component_id):
                if (mor.src, mor.dst) != (self.vertex_object[v],
                                          self.vertex_object[w]):
                    raise ValidationError(
                        f"arrow image of (g={g}, v={v}) has wrong endpoints")
                return m
        raise ValidationError(f"no phase morphism for arrow (g={g}, v={v})")


def quotient_functor(phase: PhaseCategory) -> QuotientFunctor:
    presheaf = phase.presheaf
    X, G = presheaf.X, presheaf.X.group
    classes = phase.orbit.classes
    class_of_members = {}
    for c in classes:
        for sub in c.orbit_of_subgroups:
            class_of_members[sub.members] = c.class_index

    vertex_object: list[int] = []
    conjugator: list[int] = []
    for v in range(X.vertex_count):
        iso = isotropy(X, v)
        c = class_of_members[iso.members]
        rep = classes[c].representative
        k = next(g for g in range(G.order)
                 if rep.conjugate(g).members == iso.members)
        conjugator.append(k)
        # v lies in Fix(k H k^-1); k^-1 v lies in Fix(H)
        v_rep = X.element_maps[G.inv(k)][v]
        comp = presheaf.component_of_vertex(c, v_rep)
        vertex_object.append(phase.object_index(c, comp))
    return QuotientFunctor(phase, vertex_object, conjugator)


@dataclass
class ForgetfulFunctor:
    """Phi_0[X/G] -> O_0(G): strips the component coordinate."""
    phase: PhaseCategory
    object_map: list[int]
    morphism_map: list[int]


def forgetful_functor(phase: PhaseCategory) -> ForgetfulFunctor:
    return ForgetfulFunctor(phase, list(phase.forgetful_objects),
                            list(phase.forgetful_morphisms))


class StratifiedComplex:
    """A simplicial complex stratified over a finite poset.

    ``relations`` are pairs (i, j) meaning i <= j; the reflexive-transitive
    closure is taken.  The closure condition (faces live in lower strata)
    and the frontier condition (closure of a lower stratum is contained in
    the closure of any higher one) are both validated -- the latter is what
    makes i |-> pi_0(closure X_i) a functor on the poset.
    """

    def __init__(self, vertex_count: int, simplices, assignment,
                 relations, codim=None):
        self.vertex_count = vertex_count
        raw = [frozenset(s) for s in simplices]
        if len(set(raw)) != len(raw):
            raise ValidationError("duplicate simplices")
        closed = close_under_faces(raw)
        if closed != frozenset(raw):
            missing = next(iter(closed - set(raw)))
            raise ValidationError(
                f"simplex list not closed under faces: missing "
                f"{sorted(missing)}")
        if len(assignment) != len(raw):
            raise ValidationError("one stratum index per simplex required")
        self.simplices = raw
        self.assignment = {s: int(i) for s, i in zip(raw, assignment)}
        self.strata = sorted(set(self.assignment.values()))
        self.leq = _poset_closure(self.strata, relations)
        self.codim = dict(codim) if codim else None
        self._validate()

    def _validate(self):
        for s, i in self.assignment.items():
            for v in s:
                face = s - {v}
                if not face:
                    continue
                j = self.assignment[face]
                if (j, i) not in self.leq:
                    raise ValidationError(
                        f"closure condition violated: face {sorted(face)} "
                        f"(stratum {j}) of simplex {sorted(s)} (stratum {i})")
        for (i, j) in self.leq:
            if i != j and not self.stratum_closure(i) <= \
                    self.stratum_closure(j):
                s = next(iter(self.stratum_closure(i)
                              - self.stratum_closure(j)))
                raise ValidationError(
                    f"frontier condition violated: stratum {i} <= {j} but "
                    f"simplex {sorted(s)} of closure({i}) is outside "
                    f"closure({j})")
        if self.codim is not None:
            for (i, j) in self.leq:
                ci, cj = self.codim.get(i), self.codim.get(j)
                if ci is None or cj is None:
                    continue
                if i != j and ci < cj:
                    warnings.warn(
                        f"codimension not monotone decreasing along "
                        f"{i} <= {j}", stacklevel=3)

    def stratum_closure(self, i: int) -> frozenset[Simplex]:
        own = [s for s, k in self.assignment.items() if k == i]
        return close_under_faces(own) if own else frozenset()


def _poset_closure(strata, relations) -> set[tuple[int, int]]:
    leq = {(i, i) for i in strata}
    for (i, j) in relations:
        if i not in strata or j not in strata:
            raise ValidationError(f"relation ({i},{j}) names unused strata")
        leq.add((int(i), int(j)))
    changed = True
    while changed:
        changed = False
        for (a, b) in list(leq):
            for (c, d) in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    for (i, j) in leq:
        if i != j and (j, i) in leq:
            raise ValidationError(f"poset relation has a cycle {i} ~ {j}")
    return leq


def strata_category(strat: StratifiedComplex) -> FiniteCategory:
    """Category of elements of i |-> pi_0(closure of stratum i).

    Objects are (stratum, component) pairs; there is exactly one arrow
    (i,c) -> (j,c') when i <= j and the closure inclusion carries c into c'.
    """
    comps = {i: components(strat.stratum_closure(i)) for i in strat.strata}
    objects: list[tuple[int, int]] = []
    obj_index: dict[tuple[int, int], int] = {}
    for i in strat.strata:
        for c in range(len(comps[i])):
            obj_index[(i, c)] = len(objects)
            objects.append((i, c))

    def component_of(i: int, vertex: int) -> int:
        for c, comp in enumerate(comps[i]):
            if vertex in comp:
                return c
        raise ValidationError(
            f"vertex {vertex} missing from closure of stratum {i}")

    morphisms: list[Morphism] = []
    mor_index: dict[tuple[int, int, int], int] = {}
    for (i, j) in sorted(strat.leq):
        for c, comp in enumerate(comps[i]):
            cj = component_of(j, comp[0])
            mor_index[(i, c, j)] = len(morphisms)
            morphisms.append(Morphism(
                obj_index[(i, c)], obj_index[(j, cj)],
                f"{i}.c{c}<={j}", (i, c, j)))
    identity = [mor_index[(i, c, i)] for (i, c) in objects]
    table: dict[tuple[int, int], int] = {}
    for m1, mor1 in enumerate(morphisms):
        i, c, j = mor1.data
        for m2, mor2 in enumerate(morphisms):
            j2, c2, k = mor2.data
            if mor2.src != mor1.dst:
                continue
            table[(m2, m1)] = mor_index[(i, c, k)]
    labels = [f"(S{i},c{c})" for (i, c) in objects]
    return FiniteCategory(labels, morphisms, identity, table)
