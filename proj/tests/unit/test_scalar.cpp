#include "doctest.h"

#include <stdexcept>

#include "hopfaz/error.hpp"
#include "hopfaz/scalar.hpp"

using namespace hopfaz;

TEST_CASE("field specs parse")
{
    CHECK(Field::parse("rational").is_rational());
    CHECK(Field::parse("prime:7").modulus() == 7);
    CHECK(Field::parse("prime:7").to_string() == "prime:7");
    CHECK_THROWS_AS(Field::parse("prime:2"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("prime:9"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("prime:"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("real"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and canonical")
{
    Field q = Field::rational();
    Scalar a = q.parse_scalar("6/4");
    CHECK(a.to_string() == "3/2");
    CHECK(q.parse_scalar("-2/-4").to_string() == "1/2");
    CHECK((a * a.inverse()).is_one());
    CHECK(a + q.from_fraction(-3, 2) == q.zero());
    CHECK((q.from_int(1) / q.from_int(3) + q.from_int(1) / q.from_int(6)).to_string() == "1/2");
    CHECK_THROWS_AS(q.zero().inverse(), std::domain_error);
    CHECK_THROWS_AS(q.parse_scalar("1/0"), std::domain_error);
    CHECK_THROWS_AS(q.parse_scalar("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(q.parse_scalar(""), std::invalid_argument);
}

TEST_CASE("prime field residues")
{
    Field f = Field::prime(7);
    CHECK(f.from_int(-1).residue() == 6);
    CHECK(f.parse_scalar("3/4").residue() == 6);
    CHECK(f.from_int(9) == f.from_int(2));
    for (long long v = 1; v < 7; ++v) CHECK((f.from_int(v) * f.from_int(v).inverse()).is_one());
    CHECK(f.from_int(14).is_zero());
    CHECK_THROWS_AS(f.parse_scalar("1/7"), std::domain_error);
    CHECK(f.from_rational(mpq_class(-5, 3)) == f.from_int(-5) / f.from_int(3));
}

TEST_CASE("fields never mix")
{
    Scalar a = Field::rational().one();
    Scalar b = Field::prime(7).one();
    Scalar c = Field::prime(11).one();
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(b * c, FieldMismatch);
    CHECK_THROWS_AS(b.rational(), FieldMismatch);
    CHECK_FALSE(a == b);
}
