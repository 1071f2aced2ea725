import pytest

from phasecat import (GComplex, ValidationError, components,
                      conjugacy_classes_of_subgroups, fixed_subcomplex,
                      isotropy, orbit_of, pi0_fix_presheaf, subdivide)
from phasecat.permgroup import Subgroup, full_subgroup, trivial_subgroup


class TestValidation:
    def test_rejects_non_simplicial_map(self, c2):
        # swap 0<->1 does not preserve the edge {1,2}
        with pytest.raises(ValidationError):
            GComplex(c2, 3, [[0, 1], [1, 2]], [[1, 0, 2]])

    def test_rejects_relation_violation(self, s3):
        # sending the 3-cycle generator to a swap breaks r^3 = 1
        with pytest.raises(ValidationError):
            GComplex(s3, 2, [[0], [1]], [[0, 1], [1, 0]])

    def test_warns_on_setwise_fixed_edge(self, c2):
        # edge flip fixes {0,1} setwise but not pointwise
        with pytest.warns(UserWarning):
            GComplex(c2, 2, [[0, 1]], [[1, 0]])

    def test_faces_added_automatically(self, square_reflection):
        sizes = sorted(len(s) for s in square_reflection.simplices)
        assert sizes == [1, 1, 1, 1, 2, 2, 2, 2]


class TestFixedSubcomplex:
    def test_reflection_fixes_two_isolated_vertices(self, c2,
                                                    square_reflection):
        fix = fixed_subcomplex(square_reflection, full_subgroup(c2))
        assert fix == frozenset({frozenset({0}), frozenset({2})})

    def test_trivial_subgroup_fixes_everything(self, c2, square_reflection):
        fix = fixed_subcomplex(square_reflection, trivial_subgroup(c2))
        assert fix == square_reflection.simplices

    def test_halfturn_fixes_nothing(self, c2, square_halfturn):
        assert fixed_subcomplex(square_halfturn, full_subgroup(c2)) \
            == frozenset()

    def test_monotone_in_subgroup(self, c2, square_reflection):
        small = fixed_subcomplex(square_reflection, trivial_subgroup(c2))
        big = fixed_subcomplex(square_reflection, full_subgroup(c2))
        assert big <= small


class TestComponents:
    def test_path_is_connected(self):
        path = [frozenset(s) for s in
                ({0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3})]
        assert components(path) == [(0, 1, 2, 3)]

    def test_two_isolated_vertices(self):
        assert components([frozenset({0}), frozenset({2})]) \
            == [(0,), (2,)]

    def test_square_boundary_connected(self, square_reflection):
        assert components(square_reflection.simplices) == [(0, 1, 2, 3)]


class TestIsotropyAndOrbits:
    def test_fixed_vertex_has_full_isotropy(self, c2, square_reflection):
        assert isotropy(square_reflection, 0).order == 2
        assert orbit_of(square_reflection, 0) == frozenset({0})

    def test_moved_vertex(self, c2, square_reflection):
        assert isotropy(square_reflection, 1).order == 1
        assert orbit_of(square_reflection, 1) == frozenset({1, 3})

    def test_free_action_vertex(self, c2, square_halfturn):
        assert isotropy(square_halfturn, 0).order == 1
        assert orbit_of(square_halfturn, 0) == frozenset({0, 2})

    def test_orbit_stabilizer(self, c2, square_reflection, square_halfturn):
        for X in (square_reflection, square_halfturn):
            for v in range(X.vertex_count):
                assert len(orbit_of(X, v)) * isotropy(X, v).order \
                    == X.group.order

    def test_vertex_out_of_range(self, square_reflection):
        with pytest.raises(ValidationError):
            isotropy(square_reflection, 9)


class TestFixPresheaf:
    def test_point_every_class_one_component(self, s3):
        X = GComplex(s3, 1, [[0]], [[0], [0]])
        classes = conjugacy_classes_of_subgroups(s3)
        pre = pi0_fix_presheaf(X, classes)
        assert all(len(c) == 1 for c in pre.comps)

    def test_square_reflection_components(self, c2, square_reflection):
        classes = conjugacy_classes_of_subgroups(c2)
        pre = pi0_fix_presheaf(square_reflection, classes)
        triv = next(c.class_index for c in classes if c.order == 1)
        refl = next(c.class_index for c in classes if c.order == 2)
        assert len(pre.comps[triv]) == 1
        assert len(pre.comps[refl]) == 2
        # the unique arrow sends both reflection components to the big one
        assert pre.induced_map(triv, refl, c2.identity_index) == [0, 0]

    def test_halfturn_components(self, c2, square_halfturn):
        classes = conjugacy_classes_of_subgroups(c2)
        pre = pi0_fix_presheaf(square_halfturn, classes)
        triv = next(c.class_index for c in classes if c.order == 1)
        free = next(c.class_index for c in classes if c.order == 2)
        assert len(pre.comps[triv]) == 1
        assert len(pre.comps[free]) == 0

    def test_induced_map_coset_independent(self, s3):
        # exhaustive over transporter elements: the induced component map
        # must not depend on the representative
        from phasecat.gspace import GComplex
        from phasecat.permgroup import transporter
        # S3 permuting a triangle boundary
        X = GComplex(s3, 3, [[0, 1], [1, 2], [2, 0]],
                     [[1, 0, 2], [1, 2, 0]], warn_setwise=False)
        classes = conjugacy_classes_of_subgroups(s3)
        pre = pi0_fix_presheaf(X, classes)
        for c0 in classes:
            for c1 in classes:
                trans = transporter(s3, c0.representative,
                                    c1.representative)
                # per H1-coset the induced map must be constant
                for g in trans:
                    h1 = c1.representative
                    for h in h1.members:
                        assert pre.induced_map(
                            c0.class_index, c1.class_index, g) \
                            == pre.induced_map(
                                c0.class_index, c1.class_index,
                                s3.mul(h, g))

    def test_weyl_action_well_defined(self, c2, square_reflection):
        # elements of H act trivially on Fix(H), so the normalizer action
        # on components factors through W(H)
        classes = conjugacy_classes_of_subgroups(c2)
        pre = pi0_fix_presheaf(square_reflection, classes)
        refl = next(c.class_index for c in classes if c.order == 2)
        for n in range(c2.order):
            for h in range(2):
                assert pre.weyl_component_action(refl, n) \
                    == pre.weyl_component_action(refl, c2.mul(h, n))


class TestSubdivide:
    def test_subdivision_counts(self, c2, square_reflection):
        sd = subdivide(square_reflection)
        # 8 simplices become vertices; each edge contributes 2 new edges
        assert sd.vertex_count == 8
        assert sorted(len(s) for s in sd.simplices).count(2) == 8

    def test_setwise_fix_resolved_by_subdivision(self, c2):
        import warnings
        with pytest.warns(UserWarning):
            X = GComplex(c2, 2, [[0, 1]], [[1, 0]])
        sd = subdivide(X)
        # the flipped edge's barycenter is a genuine fixed vertex now
        fix = fixed_subcomplex(sd, full_subgroup(c2))
        assert len(fix) == 1
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            subdivide(X)  # no setwise warning after subdivision
