import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shapovalov.exact_algebra import (
    Hyperplane,
    Poly,
    Weight,
    bilinear_form,
    eval_at,
    h_of_weight,
    hyperplane_member,
    param_poly,
    reduce_mod,
    rho,
    sample_hyperplane,
    symbolic_weight,
)

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=6
)


def rand_weight(rng, m, n, span=12):
    return Weight(m, n, [Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(m + n)])


def rand_poly(rng, nvars=4, nterms=3, deg=2):
    p = Poly.zero()
    for _ in range(nterms):
        term = Poly.const(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        for _ in range(rng.randint(0, deg)):
            term = term * Poly.x(rng.randint(1, nvars))
        p = p + term
    return p


def all_roots(m, n):
    out = []
    for i in range(1, m + n + 1):
        for j in range(1, m + n + 1):
            if i != j:
                out.append(Weight.basis(m, n, i) - Weight.basis(m, n, j))
    return out


class TestBilinearForm:
    def test_defining_values(self):
        assert bilinear_form(Weight.eps(2, 2, 1), Weight.eps(2, 2, 1)) == 1
        assert bilinear_form(Weight.delta(2, 2, 1), Weight.delta(2, 2, 1)) == -1
        assert bilinear_form(Weight.eps(2, 2, 1), Weight.delta(2, 2, 1)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            bilinear_form(Weight.eps(2, 1, 1), Weight.eps(2, 2, 1))

    @given(st.lists(rationals, min_size=5, max_size=5),
           st.lists(rationals, min_size=5, max_size=5),
           st.lists(rationals, min_size=5, max_size=5),
           rationals)
    @settings(max_examples=60, deadline=None)
    def test_symmetric_and_bilinear(self, a, b, c, t):
        u, v, w = (Weight(3, 2, x) for x in (a, b, c))
        assert bilinear_form(u, v) == bilinear_form(v, u)
        assert bilinear_form(u + t * v, w) == bilinear_form(u, w) + t * bilinear_form(v, w)


class TestRho:
    def test_pairings_gl32(self):
        r = rho(3, 2)
        for k in range(1, 3):
            alpha = Weight.eps(3, 2, k) - Weight.eps(3, 2, k + 1)
            assert bilinear_form(r, alpha) == 1
        beta = Weight.eps(3, 2, 3) - Weight.delta(3, 2, 1)
        assert bilinear_form(r, beta) == 0
        gamma = Weight.delta(3, 2, 1) - Weight.delta(3, 2, 2)
        assert bilinear_form(r, gamma) == -1

    def test_pairings_gl4(self):
        r = rho(4, 0)
        for k in range(1, 4):
            alpha = Weight.eps(4, 0, k) - Weight.eps(4, 0, k + 1)
            assert bilinear_form(r, alpha) == 1

    def test_coordinate_sum_zero(self):
        for m, n in [(2, 0), (3, 2), (2, 2), (4, 1), (3, 3)]:
            assert sum(rho(m, n).coords, Fraction(0)) == 0

    def test_radical_invariance(self):
        # adding any multiple of the radical leaves pairings with roots alone
        m, n = 3, 2
        r = rho(m, n)
        zeta = Weight(m, n, [1] * m + [-1] * n)
        for t in [Fraction(1), Fraction(-7, 3), Fraction(5, 2)]:
            shifted = r + t * zeta
            for root in all_roots(m, n):
                assert bilinear_form(shifted, root) == bilinear_form(r, root)


class TestCartanPolynomials:
    def test_h_of_simple_roots(self):
        alpha = Weight.eps(2, 0, 1) - Weight.eps(2, 0, 2)
        assert h_of_weight(alpha) == Poly.x(1) - Poly.x(2)
        beta = Weight.eps(2, 2, 2) - Weight.delta(2, 2, 1)
        assert h_of_weight(beta) == Poly.x(2) + Poly.x(3)
        assert h_of_weight(Weight.zero(2, 2)) == Poly.zero()

    def test_h_reproduces_form(self):
        rng = random.Random(0)
        for _ in range(100):
            mu = rand_weight(rng, 3, 2)
            beta = rand_weight(rng, 3, 2)
            # beta(h_mu) computed by evaluating the diagonal polynomial at beta
            assert eval_at(h_of_weight(mu), beta) == bilinear_form(mu, beta)

    def test_eval_examples(self):
        lam = Weight(2, 0, [3, 1])
        assert eval_at(Poly.x(1) - Poly.x(2), lam) == 2
        assert eval_at(Poly.one(), lam) == 1

    def test_eval_sigma_coefficient(self):
        # h_{sigma_1} + (rho, sigma_1) - 1 evaluates to (lam+rho, sigma_1) - 1
        rng = random.Random(1)
        m, n = 3, 2
        sigma = Weight.eps(m, n, 1) - Weight.eps(m, n, 2)
        p = h_of_weight(sigma) + Poly.const(bilinear_form(rho(m, n), sigma) - 1)
        for _ in range(20):
            lam = rand_weight(rng, m, n)
            assert eval_at(p, lam) == bilinear_form(lam + rho(m, n), sigma) - 1

    @given(st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_eval_is_ring_morphism(self, seed):
        rng = random.Random(seed)
        p, q = rand_poly(rng), rand_poly(rng)
        lam = rand_weight(rng, 2, 2, span=6)
        assert eval_at(p * q, lam) == eval_at(p, lam) * eval_at(q, lam)
        assert eval_at(p + q, lam) == eval_at(p, lam) + eval_at(q, lam)

    def test_poly_pow_and_subs(self):
        p = Poly.x(1) + Poly.const(1)
        assert p ** 2 == Poly.x(1) * Poly.x(1) + 2 * Poly.x(1) + Poly.const(1)
        assert p.shifted({1: -1}) == Poly.x(1)


class TestHyperplane:
    def test_isotropic_membership(self):
        eta = Weight.eps(2, 2, 1) - Weight.delta(2, 2, 2)
        hp = Hyperplane(eta)
        lam = -1 * rho(2, 2)
        assert hyperplane_member(lam, hp)  # (lam+rho, eta) = 0 = rhs

    def test_even_rhs_is_multiplicity(self):
        m = 4
        eta = Weight.eps(m, 0, 1) - Weight.eps(m, 0, m)
        for mult in (1, 2, 3):
            assert Hyperplane(eta, mult).rhs() == mult

    def test_minus_rho_membership(self):
        eta = Weight.eps(3, 0, 1) - Weight.eps(3, 0, 3)
        lam = -1 * rho(3, 0)
        assert not Hyperplane(eta, 1).member(lam)  # rhs = 1 != 0

    def test_isotropic_rejects_multiplicity(self):
        eta = Weight.eps(1, 1, 1) - Weight.delta(1, 1, 1)
        with pytest.raises(ValueError):
            Hyperplane(eta, 2)

    def test_sampling(self):
        eta = Weight.eps(2, 2, 1) - Weight.delta(2, 2, 2)
        hp = Hyperplane(eta)
        pts = sample_hyperplane(hp, seed=3, count=3)
        assert pts == sample_hyperplane(hp, seed=3, count=3)
        assert len({p.coords for p in pts}) == 3
        for p in pts:
            assert hp.member(p)
            for c in p.coords:
                assert abs(c.numerator) <= 1000 and c.denominator <= 1000

    def test_constraint_poly_vanishes_on_samples(self):
        eta = Weight.eps(3, 0, 1) - Weight.eps(3, 0, 3)
        hp = Hyperplane(eta, 2)
        c = hp.constraint_poly()
        for lam in sample_hyperplane(hp, 0, 4):
            assert eval_at(c, lam) == 0


class TestSymbolicReduction:
    def test_reduce_mod_linear(self):
        # x1 + x2 - 3 = 0 makes x1^2 - (3 - x2)^2 vanish
        c = Poly.x(1) + Poly.x(2) - Poly.const(3)
        p = Poly.x(1) ** 2 - (Poly.const(3) - Poly.x(2)) ** 2
        assert reduce_mod(p, [c]).is_zero()
        assert not reduce_mod(Poly.x(1), [c]).is_zero()

    def test_param_block_is_disjoint(self):
        lam = symbolic_weight(2, 2)
        p = eval_at(h_of_weight(Weight.eps(2, 2, 1)), lam)
        assert p == Poly.x(5)
        c = param_poly(Poly.x(1) - Poly.const(2), 2, 2)
        assert c == Poly.x(5) - Poly.const(2)
        assert reduce_mod(p - Poly.const(2), [c]).is_zero()


class TestSerialization:
    def test_weight_roundtrip(self):
        w = Weight(2, 2, [Fraction(1, 2), -3, 0, Fraction(7, 5)])
        data = json.loads(json.dumps(w.to_json()))
        assert Weight.from_json(2, 2, data) == w

    def test_poly_roundtrip(self):
        p = Poly.x(1) * Poly.x(3) - Poly.const(Fraction(2, 3)) + Poly.x(2) ** 2
        data = json.loads(json.dumps(p.to_json()))
        assert Poly.from_json(data) == p
