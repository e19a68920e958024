#include "doctest.h"

#include "hopfaz/error.hpp"
#include "hopfaz/matrix.hpp"
#include "oracles.hpp"

using namespace hopfaz;

namespace {

Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<Vector> rs;
    for (auto r : rows) {
        Vector v;
        for (int x : r) v.push_back(f.from_int(x));
        rs.push_back(v);
    }
    return Matrix::from_rows(f, rs);
}

} // namespace

TEST_CASE("det of small fixed matrices")
{
    Field q = Field::rational();
    CHECK(det(from_ints(q, {{0, 1}, {1, 0}})) == q.from_int(-1));
    CHECK(det(from_ints(q, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == q.from_int(30));
    CHECK(det(from_ints(q, {{1, 2}, {2, 4}})).is_zero());
    // pivot in the last row forces row swaps
    CHECK(det(from_ints(q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == q.from_int(-1));
    CHECK(det(Matrix(q, 0, 0)).is_one());
    CHECK_THROWS_AS(det(Matrix(q, 2, 3)), DimensionError);
}

TEST_CASE("det agrees with cofactor expansion")
{
    for (Field f : {Field::rational(), Field::prime(7), Field::prime(101)}) {
        oracle::Sampler s(17, f);
        for (std::size_t n = 1; n <= 6; ++n)
            for (int trial = 0; trial < 8; ++trial) {
                Matrix m = s.matrix(n, n, -3, 3);
                if (trial % 4 == 0 && n > 1) m.set_column(n - 1, m.column(0));
                CHECK(det(m) == oracle::cofactor_det(m));
            }
    }
    oracle::Sampler s(5);
    Matrix m = s.matrix(5, 5, -9, 9);
    Field q = Field::rational();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = m(i, j) / q.from_int(static_cast<int>(i + j + 1));
    CHECK(det(m) == oracle::cofactor_det(m));
}

TEST_CASE("det is multiplicative")
{
    oracle::Sampler s(99);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = s.matrix(4, 4, -4, 4), b = s.matrix(4, 4, -4, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transpose()) == det(a));
    }
}

TEST_CASE("kernel basis, rank and nullity")
{
    for (Field f : {Field::rational(), Field::prime(5)}) {
        oracle::Sampler s(3, f);
        for (int trial = 0; trial < 12; ++trial) {
            std::size_t r = 2 + trial % 3, c = 3 + trial % 4;
            Matrix m = s.matrix(r, c, -2, 2);
            if (trial % 2) {
                Vector sum = m.column(0);
                axpy(sum, f.one(), m.column(1));
                m.set_column(c - 1, sum);
            }
            auto ker = kernel_basis(m);
            CHECK(ker.size() + rank(m) == c);
            for (const auto& v : ker) CHECK(is_zero(m * v));
            if (!ker.empty()) CHECK(rank(Matrix::from_columns(f, c, ker)) == ker.size());
        }
    }
}

TEST_CASE("rank over F_5 matches kernel enumeration")
{
    oracle::Sampler s(41, Field::prime(5));
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = s.matrix(3 + trial % 2, 4, 0, 4);
        CHECK(rank(m) == oracle::brute_force_rank(m));
    }
}

TEST_CASE("inverse and solve")
{
    Field q = Field::rational();
    oracle::Sampler s(8);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = s.matrix(4, 4, -5, 5);
        if (det(m).is_zero()) {
            CHECK_THROWS_AS(inverse(m), NotInvertible);
            continue;
        }
        CHECK(inverse(m) * m == Matrix::identity(q, 4));
        Vector b = s.vector(4, -5, 5);
        CHECK(m * solve(m, b) == b);
    }
    CHECK_THROWS_AS(inverse(from_ints(q, {{1, 2}, {2, 4}})), NotInvertible);
    CHECK_THROWS_AS(solve(Matrix(q, 2, 3), Vector(2)), DimensionError);
}

TEST_CASE("kron matches the loop definition and is associative")
{
    oracle::Sampler s(11);
    Matrix a = s.matrix(2, 3, -3, 3), b = s.matrix(3, 2, -3, 3), c = s.matrix(2, 2, -3, 3);
    CHECK(kron(a, b) == oracle::loop_kron(a, b));
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    Matrix d = s.matrix(3, 2, -3, 3), e = s.matrix(2, 3, -3, 3);
    CHECK(kron(a, b) * kron(d, e) == kron(a * d, b * e));
    Matrix sq1 = s.matrix(2, 2, -3, 3), sq2 = s.matrix(3, 3, -3, 3);
    Scalar d1 = det(sq1), d2 = det(sq2);
    CHECK(det(kron(sq1, sq2)) == d1 * d1 * d1 * d2 * d2);
}

TEST_CASE("pair flattening")
{
    Field q = Field::rational();
    Vector a{q.from_int(1), q.from_int(2)}, b{q.from_int(3), q.from_int(5), q.from_int(7)};
    Matrix col_a = Matrix::from_columns(q, 2, {a}), col_b = Matrix::from_columns(q, 3, {b});
    CHECK(kron(col_a, col_b).column(0)[pair_index(1, 2, 3)] == q.from_int(14));
}
