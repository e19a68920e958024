#include "doctest.h"

#include "hopfaz/en_family.hpp"
#include "hopfaz/error.hpp"
#include "oracles.hpp"

using namespace hopfaz;

namespace {

std::string first_failure(const Report& r)
{
    const CheckResult* c = r.find(r.first_failure());
    return c ? c->name + " at " + c->witness : "";
}

} // namespace

TEST_CASE("E(n) satisfies every Hopf axiom")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        HopfAlgebra h = build_en(n);
        CHECK(h.dim() == (std::size_t{2} << n));
        Report rep = verify_hopf_axioms(h);
        INFO(first_failure(rep));
        CHECK(rep.all_passed());
    }
    CHECK(verify_hopf_axioms(build_en(2, Field::prime(7))).all_passed());
    CHECK_THROWS_AS(build_en(0), ParameterError);
}

TEST_CASE("E(1) is Sweedler's four-dimensional algebra")
{
    HopfAlgebra h = build_en(1);
    Field q = h.field();
    const std::size_t c = 1, x = 2, cx = 3;
    CHECK(h.labels == std::vector<std::string>{"1", "c", "x1", "cx1"});
    CHECK(is_zero(h.product(x, x)));
    CHECK(h.product(c, c) == h.basis(0));
    CHECK(h.product(c, x) == h.basis(cx));
    Vector minus_cx = zero_vector(q, 4);
    minus_cx[cx] = -q.one();
    CHECK(h.product(x, c) == minus_cx);
    CHECK(h.antipode.column(x) == h.basis(cx));
    Vector minus_x = zero_vector(q, 4);
    minus_x[x] = -q.one();
    CHECK(h.antipode.column(cx) == minus_x);
}

TEST_CASE("E(n) products agree with bubble-sort rewriting")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        HopfAlgebra h = build_en(n);
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (std::size_t j = 0; j < h.dim(); ++j) {
                auto [sign, idx] = oracle::bubble_en_product(i, j);
                Vector expected = zero_vector(h.field(), h.dim());
                if (sign != 0) expected[idx] = h.field().from_int(sign);
                CHECK(h.product(i, j) == expected);
            }
    }
}

TEST_CASE("E(2) coproduct and counit")
{
    HopfAlgebra h = build_en(2);
    const std::size_t x1x2 = MonomialBasis::index(0, 3);
    CHECK(h.comult(x1x2).size() == 4);
    for (std::size_t i = 0; i < h.dim(); ++i)
        CHECK(h.coalgebra.counit[i] == (MonomialBasis::mask(i) == 0 ? h.field().one() : h.field().zero()));
}

TEST_CASE("S^2 is conjugation by c")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        HopfAlgebra h = build_en(n);
        Matrix conj(h.field(), h.dim(), h.dim());
        for (std::size_t i = 0; i < h.dim(); ++i)
            conj.set_column(i, h.multiply(h.multiply(h.basis(MonomialBasis::c), h.basis(i)), h.basis(MonomialBasis::c)));
        CHECK(h.antipode * h.antipode == conj);
    }
}

TEST_CASE("k[Z_2] and its dual function algebra")
{
    HopfAlgebra g = oracle::group_algebra_z2();
    CHECK(verify_hopf_axioms(g).all_passed());
    HopfAlgebra d = dualize(g);
    CHECK(verify_hopf_axioms(d).all_passed());
    CHECK(d.labels == std::vector<std::string>{"1*", "g*"});
    CHECK(d.product(0, 0) == d.basis(0));
    CHECK(is_zero(d.product(0, 1)));
    CHECK(d.product(1, 1) == d.basis(1));
}

TEST_CASE("corrupted antipode is reported with a witness")
{
    HopfAlgebra h = build_en(1);
    h.antipode(3, 2) = h.field().zero();
    h.antipode(2, 2) = h.field().one();
    Report rep = verify_hopf_axioms(h);
    const CheckResult* c = rep.find("antipode");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(c->witness.find("x1") != std::string::npos);
}

TEST_CASE("broken associativity is reported")
{
    HopfAlgebra h = build_en(1);
    h.algebra.mult[2 * 4 + 1] = h.basis(3);
    Report rep = verify_hopf_axioms(h);
    CHECK_FALSE(rep.all_passed());
    CHECK_FALSE(rep.find("associativity")->passed);
}

TEST_CASE("dual, op and cop variants are Hopf algebras")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        HopfAlgebra h = build_en(n);
        HopfAlgebra d = dualize(h);
        CHECK(verify_hopf_axioms(d).all_passed());
        CHECK(dualize(d) == h);
        CHECK(dualize(d).labels == h.labels);
        for (OppositeKind k : {OppositeKind::op, OppositeKind::cop, OppositeKind::opcop}) {
            HopfAlgebra o = opposite_variant(h, k);
            INFO(n, " ", static_cast<int>(k));
            CHECK(verify_hopf_axioms(o).all_passed());
        }
        HopfAlgebra opcop = opposite_variant(h, OppositeKind::opcop);
        CHECK(opcop.antipode == h.antipode);
    }
}

TEST_CASE("tensor square coalgebra")
{
    HopfAlgebra h = build_en(1);
    Coalgebra sq = tensor_square_coalgebra(h.coalgebra);
    CHECK(sq.dim == 16);
    CHECK(check_coalgebra(sq).all_passed());
}

TEST_CASE("antipode inverse")
{
    HopfAlgebra h = build_en(2);
    CHECK(antipode_inverse(h) * h.antipode == Matrix::identity(h.field(), h.dim()));
    h.antipode = Matrix(h.field(), h.dim(), h.dim());
    CHECK_THROWS_AS(antipode_inverse(h), StructuralError);
}

TEST_CASE("self-duality map of E(n) is a Hopf isomorphism")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        HopfAlgebra h = build_en(n);
        Matrix phi = self_duality_map(n);
        CHECK(check_hopf_morphism(h, dualize(h), phi).all_passed());
        CHECK_FALSE(det(phi).is_zero());
    }
    HopfAlgebra h = build_en(1);
    CHECK_FALSE(check_hopf_morphism(h, dualize(h), Matrix::identity(h.field(), 4)).all_passed());
}
