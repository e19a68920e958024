#include "doctest.h"

#include "hopfaz/en_family.hpp"
#include "hopfaz/error.hpp"
#include "oracles.hpp"

using namespace hopfaz;

namespace {

std::shared_ptr<const HopfAlgebra> shared_en(std::size_t n) { return std::make_shared<const HopfAlgebra>(build_en(n)); }

ENParams sample(std::size_t n, std::uint32_t seed)
{
    oracle::Sampler s(seed);
    return s.params(n, -2, 2, {1, 2, -1});
}

} // namespace

TEST_CASE("the base field is Azumaya")
{
    auto h = shared_en(1);
    ComoduleAlgebra k = trivial_comodule_algebra(h);
    Functional2 r = rform_en(Matrix(h->field(), 1, 1));
    BraidedMapMatrix f = build_F(k, r);
    CHECK(f.matrix == Matrix::identity(h->field(), 1));
    CHECK(is_azumaya(k, r).azumaya);
    CHECK(check_F_morphism(k, r).all_passed());
    CHECK(check_G_morphism(k, r).all_passed());
}

TEST_CASE("F and G are comodule algebra maps")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        auto h = shared_en(n);
        ENParams p = sample(n, 14);
        ComoduleAlgebra a = build_a_sigma(*h, cocycle_en(p, *h));
        Functional2 r = rform_en(p.A);
        CHECK(check_F_morphism(a, r).all_passed());
        CHECK(check_G_morphism(a, r).all_passed());
    }
    auto h = shared_en(1);
    ComoduleAlgebra a = hopf_opposite_comodule_algebra(h);
    Functional2 r = rform_en(Matrix::identity(h->field(), 1));
    CHECK(check_F_morphism(a, r).all_passed());
    CHECK(check_G_morphism(a, r).all_passed());
}

TEST_CASE("F and G through the twisted r-form agree with the braided product form")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        auto h = shared_en(n);
        ENParams p = sample(n, 15);
        Functional2 sigma = cocycle_en(p, *h);
        Functional2 r = rform_en(p.A);
        ComoduleAlgebra a = build_a_sigma(*h, sigma);
        CHECK(build_F_via_twisted_rform(*h, sigma, r).matrix == build_F(a, r).matrix);
        CHECK(build_G_via_twisted_rform(*h, sigma, r).matrix == build_G(a, r).matrix);
    }
}

TEST_CASE("theta_r is a Hopf map and rejects non-r-forms")
{
    oracle::Sampler s(5);
    for (std::size_t n = 1; n <= 2; ++n) {
        HopfAlgebra h = build_en(n);
        Functional2 r = rform_en(s.matrix(n, n, -2, 2));
        CHECK(check_theta_hopf_map(r, h).all_passed());
        CHECK(theta_of_rform(r, h).matrix == r.values);
    }
    HopfAlgebra h = build_en(1);
    CHECK_THROWS_AS(theta_of_rform(counit_functional2(h), h), StructuralError);
}

TEST_CASE("trivial cocycle reduces the cleft test to H^op")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        auto h = shared_en(n);
        oracle::Sampler s(40 + static_cast<std::uint32_t>(n));
        for (int trial = 0; trial < 4; ++trial) {
            Matrix a = s.matrix(n, n, -1, 1);
            Functional2 r = rform_en(a);
            CleftEvidence ev = is_azumaya_cleft(*h, counit_functional2(*h), r);
            CHECK(ev.r_sigma == r);
            CHECK(ev.azumaya == is_azumaya(hopf_opposite_comodule_algebra(h), r).azumaya);
            CHECK(ev.azumaya == !det(a).is_zero());
        }
    }
}

TEST_CASE("left integral of the dual")
{
    HopfAlgebra g = oracle::group_algebra_z2();
    Functional1 z = left_integral_dual(g);
    Field q = g.field();
    CHECK(z.values == Vector{q.one(), q.zero()});

    for (std::size_t n = 1; n <= 2; ++n) {
        HopfAlgebra h = build_en(n);
        Functional1 zeta = left_integral_dual(h);
        for (std::size_t i = 0; i < h.dim(); ++i) {
            Vector lhs = zero_vector(q, h.dim());
            for (const auto& t : h.comult(i)) axpy(lhs, t.coeff * zeta(t.right), h.basis(t.left));
            Vector rhs = zero_vector(q, h.dim());
            axpy(rhs, zeta(i), h.algebra.unit);
            CHECK(lhs == rhs);
            if (MonomialBasis::mask(i) + 1 != (1u << n)) CHECK(zeta(i).is_zero());
        }
    }
    HopfAlgebra broken = build_en(1);
    broken.coalgebra.comult[2] = {{q.one(), 2, 2}};
    CHECK_THROWS_AS(left_integral_dual(broken), StructuralError);
}

TEST_CASE("v and w functionals and their identities")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        HopfAlgebra h = build_en(n);
        Functional1 zeta = left_integral_dual(h);
        IntegralMaps maps = integral_maps(h, zeta);
        CHECK_FALSE(det(maps.v).is_zero());
        auto [v, w] = v_w_functionals(h, zeta, 1);
        for (std::size_t k = 0; k < h.dim(); ++k) CHECK(v(k) == zeta.apply(h.multiply(h.basis(k), h.antipode.column(1))));
        Matrix s_inv = antipode_inverse(h);
        for (std::size_t k = 0; k < h.dim(); ++k) CHECK(w(k) == v.apply(s_inv.column(k)));
        CHECK(check_integral_identities(h).all_passed());
    }
    HopfAlgebra h = build_en(1);
    CHECK_THROWS_AS(integral_maps(h, Functional1{zero_vector(h.field(), 4)}), StructuralError);
}

TEST_CASE("S_1 and S_2")
{
    HopfAlgebra h = build_en(1);
    Functional2 eps = counit_functional2(h);
    Matrix s_inv = antipode_inverse(h);
    for (std::size_t i = 0; i < 4; ++i) {
        SMaps s = s1_s2(h, eps, i);
        CHECK(s.s1 == h.antipode.column(i));
        CHECK(s.s2 == s_inv.column(i));
    }
    for (std::size_t n = 1; n <= 2; ++n) {
        HopfAlgebra en = build_en(n);
        for (std::uint32_t seed : {3u, 4u}) {
            Report rep = check_s_identities(en, cocycle_en(sample(n, seed), en));
            CHECK(rep.all_passed());
        }
    }
}

TEST_CASE("rank-one preimages")
{
    HopfAlgebra h = build_en(1);
    Field q = h.field();
    for (ENParams p : {ENParams::h4(q.from_int(1), q.zero(), q.zero(), q.from_int(1)),
                       ENParams::h4(q.from_int(2), q.from_int(1), q.from_int(3), q.from_int(5))}) {
        Functional2 sigma = cocycle_en(p, h);
        Functional2 r = rform_en(p.A);
        ComoduleAlgebra a = build_a_sigma(h, sigma);
        Matrix f = build_F(a, r).matrix, g = build_G(a, r).matrix;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Functional1 eta{basis_vector(q, 4, i)};
                Vector m = basis_vector(q, 4, j);
                RankOnePreimage pre = rank_one_preimage(h, sigma, r, eta, m);
                Vector target = rank_one_endomorphism(eta, m);
                CHECK(f * pre.gamma == target);
                CHECK(g * pre.gamma_prime == target);
            }
        Functional1 eps = counit_functional(h);
        RankOnePreimage pre = rank_one_preimage(h, sigma, r, eps, h.algebra.unit);
        CHECK(f * pre.gamma == rank_one_endomorphism(eps, h.algebra.unit));
    }
    ENParams singular = ENParams::h4(q.one(), q.zero(), q.zero(), q.zero());
    CHECK_THROWS_AS(rank_one_preimage(h, cocycle_en(singular, h), rform_en(singular.A), counit_functional(h),
                                      h.algebra.unit),
                    NotInvertible);
}

TEST_CASE("dual picture")
{
    HopfAlgebra h = build_en(1);
    Field q = h.field();
    Matrix phi = self_duality_map(1);
    for (int t : {0, 1, -2}) {
        ENParams p = ENParams::h4(q.one(), q.zero(), q.zero(), q.from_int(t));
        Matrix R = transport_to_element(rform_en(p.A), phi);
        Matrix one(q, 4, 4);
        one(0, 0) = q.one();
        DualPictureEvidence ev = dual_picture_test(h, R, one);
        CHECK(ev.consistent);
        CHECK(ev.det_theta == det(R));
        CHECK(ev.azumaya == (t != 0));
    }
    Matrix one(q, 4, 4);
    one(0, 0) = q.one();
    CHECK_THROWS_AS(dual_picture_test(h, one, one), StructuralError);
    CHECK_THROWS_AS(dual_picture_test(h, Matrix(q, 3, 3), one), DimensionError);
}
