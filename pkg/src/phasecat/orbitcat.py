"""The discretized orbit category of a finite permutation group.

Objects are conjugacy classes of subgroups; a morphism H0 -> H1 is a class
of transporter elements under left H1-multiplication, i.e. the coset datum
of an equivariant map G/H0 -> G/H1 (acting by x H0 |-> x g^-1 H1).  This
quotient reproduces Aut(H) = N(H)/H and matches the brute-force count of
equivariant maps between coset spaces, which is the ground truth the
category is meant to model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory, Morphism
from .errors import ValidationError
from .permgroup import (FiniteGroup, Subgroup, SubgroupClass,
                        conjugacy_classes_of_subgroups, transporter)


@dataclass(frozen=True)
class OrbitMorphism:
    """A morphism of the orbit category, by canonical transporter coset rep."""
    source_class: int
    target_class: int
    coset_rep: int


def transporter_coset_reps(G: FiniteGroup, H0: Subgroup,
                           H1: Subgroup) -> list[int]:
    """Canonical (minimal) representatives of the H1-cosets H1*g of the
    transporter of H0 into H1; one per equivariant map G/H0 -> G/H1."""
    trans = transporter(G, H0, H1)
    reps = {min(G.mul(h, g) for h in H1.members) for g in trans}
    return sorted(reps)


def canonical_coset_rep(G: FiniteGroup, H1: Subgroup, g: int) -> int:
    return min(G.mul(h, g) for h in H1.members)


class OrbitCategory:
    """O_0(G) together with the class data used to build it."""

    def __init__(self, G: FiniteGroup,
                 classes: list[SubgroupClass] | None = None):
        self.group = G
        self.classes = (classes if classes is not None
                        else conjugacy_classes_of_subgroups(G))
        self.category, self.orbit_morphisms = _build(G, self.classes)

    def hom_set(self, c0: int, c1: int) -> list[OrbitMorphism]:
        return [self.orbit_morphisms[m] for m in self.category.hom(c0, c1)]

    def morphism_index(self, c0: int, c1: int, rep: int) -> int:
        """Index of the morphism c0 -> c1 whose coset contains element rep."""
        H1 = self.classes[c1].representative
        canon = canonical_coset_rep(self.group, H1, rep)
        for m in self.category.hom(c0, c1):
            if self.orbit_morphisms[m].coset_rep == canon:
                return m
        raise ValidationError(
            f"element {rep} does not represent a morphism {c0} -> {c1}")

    def compose(self, m2: int, m1: int) -> int:
        return self.category.compose(m2, m1)


def _build(G: FiniteGroup, classes: list[SubgroupClass]):
    objects = [f"H{c.class_index}|{c.order}" for c in classes]
    morphisms: list[Morphism] = []
    data: list[OrbitMorphism] = []
    index: dict[tuple[int, int, int], int] = {}
    for c0 in range(len(classes)):
        for c1 in range(len(classes)):
            reps = transporter_coset_reps(G, classes[c0].representative,
                                          classes[c1].representative)
            for g in reps:
                om = OrbitMorphism(c0, c1, g)
                index[(c0, c1, g)] = len(morphisms)
                morphisms.append(Morphism(c0, c1, f"g{g}:{c0}->{c1}", om))
                data.append(om)
    identity = []
    for c, cls in enumerate(classes):
        e = canonical_coset_rep(G, cls.representative, G.identity_index)
        identity.append(index[(c, c, e)])
    table: dict[tuple[int, int], int] = {}
    for m1, om1 in enumerate(data):
        for m2, om2 in enumerate(data):
            if om2.source_class != om1.target_class:
                continue
            g = G.mul(om2.coset_rep, om1.coset_rep)
            canon = canonical_coset_rep(
                G, classes[om2.target_class].representative, g)
            table[(m2, m1)] = index[(om1.source_class, om2.target_class,
                                     canon)]
    return FiniteCategory(objects, morphisms, identity, table), data


def build_orbit_category(G: FiniteGroup,
                         classes: list[SubgroupClass] | None = None
                         ) -> OrbitCategory:
    """O_0(G): subgroup classes as objects, transporter cosets as arrows."""
    return OrbitCategory(G, classes)
