from fractions import Fraction

import pytest

from phasecat import (NonIsolated, QuasihomogeneousGerm, ValidationError,
                      corpus_adjacency, euler_apply, euler_eigenvalue,
                      local_algebra, milnor_number, modality, parse_germ,
                      relative_cokernel, spectrum_grading, stabilize,
                      weight_milnor)

F = Fraction


@pytest.fixture(scope="module")
def corpus():
    return corpus_adjacency()


def bf_milnor_one_variable(k):
    """mu of x^{k+1} is k: the Jacobian ideal is (x^k)."""
    return k


class TestMilnorNumber:
    def test_a3_plane_curve(self):
        assert milnor_number(parse_germ("x^4")) == 3

    def test_e6(self):
        assert milnor_number(parse_germ("x^3 + y^4")) == 6

    def test_a_series_oracle(self):
        for k in range(1, 9):
            f = parse_germ(f"x^{k + 1}")
            assert milnor_number(f) == bf_milnor_one_variable(k)

    def test_morse_point(self):
        assert milnor_number(parse_germ("x^2 + y^2")) == 1

    def test_three_variables(self):
        assert milnor_number(parse_germ("x^2 + y^2 + z^2")) == 1
        assert milnor_number(parse_germ("x^3 + y^3 + z^3")) == 8

    def test_corpus_values(self, corpus):
        for entry in corpus.entries.values():
            assert milnor_number(entry.germ) == entry.mu

    def test_weight_formula_cross_check(self, corpus):
        for entry in corpus.entries.values():
            assert weight_milnor(entry.weights) == entry.mu

    def test_coefficients_do_not_matter(self):
        assert milnor_number(parse_germ("2*x^3 + 1/3*y^4")) == 6

    def test_non_isolated_rejected(self):
        with pytest.raises(NonIsolated):
            milnor_number(parse_germ("x^2*y"))

    def test_vanishing_partial_rejected_fast(self):
        # "y^2" read in two variables: the x-partial vanishes identically
        with pytest.raises(NonIsolated):
            milnor_number(parse_germ("y^2"))

    def test_basis_is_monomial_and_deterministic(self):
        alg = local_algebra(parse_germ("x^3 + y^4"))
        assert alg.dimension == 6
        assert alg.monomial_basis == [(0, 0), (0, 1), (1, 0), (0, 2),
                                      (1, 1), (1, 2)]


class TestWeightMilnor:
    def test_bad_weight_rejected(self):
        with pytest.raises(ValidationError):
            weight_milnor([F(1)])
        with pytest.raises(ValidationError):
            weight_milnor([F(1, 2), F(3, 2)])

    def test_e8(self):
        assert weight_milnor([F(1, 3), F(1, 5)]) == 8


class TestQuasihomogeneous:
    def test_accepts_valid_weights(self):
        q = QuasihomogeneousGerm(parse_germ("x^3 + y^4"),
                                 (F(1, 3), F(1, 4)))
        assert q.monomial_weight((1, 1)) == F(7, 12)

    def test_rejects_wrong_weights(self):
        with pytest.raises(ValidationError):
            QuasihomogeneousGerm(parse_germ("x^3 + y^4"),
                                 (F(1, 3), F(1, 3)))

    def test_rejects_weight_count_mismatch(self):
        with pytest.raises(ValidationError):
            QuasihomogeneousGerm(parse_germ("x^3"), (F(1, 3), F(1, 4)))


class TestEulerGrading:
    def test_germ_is_fixed_by_euler_derivation(self, corpus):
        for entry in corpus.entries.values():
            q = entry.quasihomogeneous
            assert euler_apply(q) == q.germ.term_dict

    def test_monomial_eigenvalue(self):
        q = QuasihomogeneousGerm(parse_germ("x^3 + y^4"),
                                 (F(1, 3), F(1, 4)))
        assert euler_eigenvalue(q, (1, 1)) == F(7, 12)

    def test_spectrum_of_cusp(self):
        q = QuasihomogeneousGerm(parse_germ("x^3"), (F(1, 3),))
        assert spectrum_grading(q) == [F(0), F(1, 3)]

    def test_spectrum_of_morse(self):
        q = QuasihomogeneousGerm(parse_germ("x^2"), (F(1, 2),))
        assert spectrum_grading(q) == [F(0)]

    def test_e6_spectrum_exact(self):
        q = QuasihomogeneousGerm(parse_germ("x^3 + y^4"),
                                 (F(1, 3), F(1, 4)))
        assert spectrum_grading(q) == [F(0), F(1, 4), F(1, 3), F(1, 2),
                                       F(7, 12), F(5, 6)]

    def test_duality_of_spectrum(self, corpus):
        # the grading is symmetric about half the maximal eigenvalue
        for entry in corpus.entries.values():
            spec = spectrum_grading(entry.quasihomogeneous)
            top = sum(1 - 2 * w for w in entry.weights)
            assert spec[-1] == top
            assert [top - s for s in reversed(spec)] == spec


class TestModality:
    def test_simple_singularities_have_modality_zero(self, corpus):
        for entry in corpus.entries.values():
            assert modality(entry.mu, entry.codim) == 0

    def test_positive_modality(self):
        assert modality(10, 8) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            modality(3, 5)

    def test_negative_codim_rejected(self):
        with pytest.raises(ValidationError):
            modality(3, -1)


class TestStabilize:
    def test_adds_square_variable(self):
        g = stabilize(parse_germ("x^3"))
        assert g.variable_count == 2
        assert g.term_dict == {(3, 0): F(1), (0, 2): F(1)}

    def test_preserves_milnor_number(self, corpus):
        for name in ("A2", "A3", "D4", "E6"):
            entry = corpus.entries[name]
            assert milnor_number(stabilize(entry.germ)) == entry.mu

    def test_refuses_three_variables(self):
        with pytest.raises(ValidationError):
            stabilize(parse_germ("x*y*z"))


class TestCorpus:
    def test_entry_names(self, corpus):
        expected = {f"A{k}" for k in range(1, 9)} \
            | {f"D{k}" for k in range(4, 9)} | {"E6", "E7", "E8"}
        assert set(corpus.entries) == expected

    def test_codim_is_mu_minus_one(self, corpus):
        for entry in corpus.entries.values():
            assert entry.codim == entry.mu - 1

    def test_arrows_drop_mu_by_one(self, corpus):
        for src, dst in corpus.arrows:
            assert corpus.entries[src].mu - corpus.entries[dst].mu == 1

    def test_expected_arrows_present(self, corpus):
        for pair in (("A3", "A2"), ("D5", "D4"), ("D4", "A3"),
                     ("E6", "A5"), ("E6", "D5"), ("E7", "E6"),
                     ("E8", "D7")):
            assert corpus.has_arrow(*pair)

    def test_no_upward_arrows(self, corpus):
        for src, dst in corpus.arrows:
            assert not corpus.has_arrow(dst, src)


class TestRelativeCokernel:
    def test_a2_to_a1(self, corpus):
        rc = relative_cokernel(corpus, "A2", "A1")
        assert rc.dimension == 1
        assert rc.top_weight == F(1, 3)

    def test_self_is_zero(self, corpus):
        rc = relative_cokernel(corpus, "E6", "E6")
        assert rc.dimension == 0
        assert rc.top_weight is None

    def test_e6_to_d5(self, corpus):
        rc = relative_cokernel(corpus, "E6", "D5")
        assert rc.dimension == 1
        assert rc.top_weight == F(5, 6)

    def test_missing_arrow_rejected(self, corpus):
        with pytest.raises(ValidationError):
            relative_cokernel(corpus, "A2", "E6")
