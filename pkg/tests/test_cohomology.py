import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulicoh.bigraded import BigradedPolynomial, exact_divide
from modulicoh.cohomology import (
    GLCohomology,
    ProjectiveSpaceCohomology,
    SphereModel,
    gl_poincare,
    gl_poincare_serre,
    inversion_involution,
    sphere_fibration_check,
    transposition_involution,
)
from modulicoh.exterior import ExteriorAlgebraDescriptor, ExteriorElement, wedge

P = BigradedPolynomial


class TestGLPoincare:
    def test_circle(self):
        assert gl_poincare(1) == P({(0, 0): 1, (1, 0): 1})

    def test_rank_two(self):
        assert gl_poincare(2) == P({(0, 0): 1, (1, 0): 1, (3, 0): 1, (4, 0): 1})

    def test_rank_three_shape(self):
        p = gl_poincare(3)
        assert len(p.terms) == 8
        assert p.max_t_exponent() == 9
        assert all(c == 1 for c in p.terms.values())

    def test_trivial_group(self):
        assert gl_poincare(0) == P.one()

    @given(st.integers(min_value=1, max_value=10))
    def test_total_dimension_and_top_degree(self, n):
        p = gl_poincare(n)
        assert p.evaluate(1, 1) == 2 ** n
        assert p.max_t_exponent() == n ** 2


class TestGLPoincareSerre:
    def test_rank_one_weight(self):
        assert gl_poincare_serre(1) == P({(0, 0): 1, (1, 2): 1})

    def test_rank_two_expansion(self):
        assert gl_poincare_serre(2) == P({(0, 0): 1, (1, 2): 1, (3, 4): 1, (4, 6): 1})

    @given(st.integers(min_value=0, max_value=6))
    def test_specializing_u_recovers_poincare(self, n):
        assert gl_poincare_serre(n).specialize_u(1) == gl_poincare(n)

    @given(st.integers(min_value=1, max_value=8))
    def test_weights_exceed_degrees_by_subset_size(self, n):
        # a monomial t^a u^b collects the generator subsets with degree sum a
        # and weight sum b; each generator adds one more weight than degree,
        # so b - a counts the subset size
        for (a, b), c in gl_poincare_serre(n).terms.items():
            assert c.denominator == 1 and c >= 1
            assert b % 2 == 0
            assert 0 <= b - a <= n

    @given(st.integers(min_value=1, max_value=8))
    def test_removing_top_factor_restricts_to_smaller_group(self, n):
        top = P({(0, 0): 1, (2 * n - 1, 2 * n): 1})
        assert exact_divide(gl_poincare_serre(n), top) == gl_poincare_serre(n - 1)


class TestSphere:
    def test_two_terms(self):
        ps = SphereModel(3).poincare_serre
        assert ps == P({(0, 0): 1, (5, 6): 1})

    @given(st.integers(min_value=2, max_value=10))
    def test_fibration_identity(self, n):
        assert sphere_fibration_check(n)

    def test_wrong_sphere_breaks_identity(self):
        wrong = P({(0, 0): 1, (2, 2): 1})
        assert wrong * gl_poincare_serre(1) != gl_poincare_serre(2)

    def test_requires_n_at_least_two(self):
        with pytest.raises(ValueError):
            sphere_fibration_check(1)


class TestGLCohomology:
    def test_generator_data(self):
        gl = GLCohomology(4)
        assert gl.algebra.generator_degrees == (1, 3, 5, 7)
        assert gl.weights == (2, 4, 6, 8)
        assert gl.total_dimension == 16
        assert gl.top_degree == 16

    def test_generator_degree(self):
        gl = GLCohomology(3)
        assert gl.generator(2).degree() == 3

    def test_polynomials_match_module_functions(self):
        gl = GLCohomology(3)
        assert gl.poincare() == gl_poincare(3)
        assert gl.poincare_serre() == gl_poincare_serre(3)


class TestProjectiveSpace:
    def test_hyperplane_nilpotence(self):
        proj = ProjectiveSpaceCohomology(2)
        h = proj.hyperplane()
        assert (h * h).coefficient(2) == 1
        assert h * h * h == proj.one() * 0

    def test_point_has_no_hyperplane_class(self):
        proj = ProjectiveSpaceCohomology(0)
        assert proj.hyperplane() == proj.one() * 0


class TestInvolutions:
    def test_transposition_signs_on_generators(self):
        gl = GLCohomology(3)
        assert transposition_involution(gl.generator(1)) == gl.generator(1)
        assert transposition_involution(gl.generator(2)) == -gl.generator(2)
        top = gl.generator(1) * gl.generator(2) * gl.generator(3)
        assert transposition_involution(top) == -top

    def test_inversion_signs(self):
        gl = GLCohomology(2)
        assert inversion_involution(gl.generator(1)) == -gl.generator(1)
        prod = gl.generator(1) * gl.generator(2)
        assert inversion_involution(prod) == prod
        one = ExteriorElement.scalar(gl.algebra, 1)
        assert inversion_involution(one) == one

    def test_non_gl_algebra_rejected(self):
        odd = ExteriorAlgebraDescriptor((1, 5))
        x = ExteriorElement.generator(odd, 1)
        with pytest.raises(ValueError, match="GL"):
            transposition_involution(x)
        with pytest.raises(ValueError, match="GL"):
            inversion_involution(x)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_composition_gives_alternating_sign(self, n):
        gl = GLCohomology(n)
        for ell in range(1, n + 1):
            eta = gl.generator(ell)
            composed = inversion_involution(transposition_involution(eta))
            assert composed == (-1) ** ell * eta

    @pytest.mark.parametrize("involution", [transposition_involution, inversion_involution])
    def test_involutions_square_to_identity(self, involution):
        gl = GLCohomology(4)
        x = gl.generator(1) + 2 * (gl.generator(2) * gl.generator(4)) - gl.generator(3)
        assert involution(involution(x)) == x

    @pytest.mark.parametrize("involution", [transposition_involution, inversion_involution])
    def test_involutions_are_ring_maps(self, involution):
        gl = GLCohomology(4)
        x = gl.generator(1) + gl.generator(2) * gl.generator(3)
        y = gl.generator(4) - 3 * gl.generator(2)
        assert involution(wedge(x, y)) == wedge(involution(x), involution(y))
