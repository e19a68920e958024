#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfaz/matrix.hpp"
#include "hopfaz/report.hpp"

namespace hopfaz {

/// One summand coeff * e_left (x) e_right of a sparse tensor.
struct Term {
    Scalar coeff;
    std::size_t left;
    std::size_t right;

    friend bool operator==(const Term&, const Term&) = default;
};

/// One summand of an iterated coproduct, coeff * e_a (x) e_b (x) e_c.
struct Term3 {
    Scalar coeff;
    std::size_t a;
    std::size_t b;
    std::size_t c;
};

/// Finite-dimensional unital algebra by structure constants.
/// mult[i * dim + j] holds the coordinates of e_i e_j.
struct Algebra {
    Field field = Field::rational();
    std::size_t dim = 0;
    std::vector<Vector> mult;
    Vector unit;

    const Vector& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector basis(std::size_t i) const { return basis_vector(field, dim, i); }
    /// Same space, reversed product.
    Algebra opposite() const;

    friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// Finite-dimensional counital coalgebra; comult[k] lists the terms of Delta(e_k).
struct Coalgebra {
    Field field = Field::rational();
    std::size_t dim = 0;
    std::vector<std::vector<Term>> comult;
    Vector counit;

    /// Delta applied to a vector, flattened to length dim^2.
    Vector apply_comult(const Vector& v) const;
    Scalar apply_counit(const Vector& v) const;
    /// (Delta (x) id) Delta(e_k), merged by index triple.
    std::vector<Term3> comult2(std::size_t k) const;
    Coalgebra co_opposite() const;

    /// Compares coproducts as tensors, independent of term order.
    friend bool operator==(const Coalgebra& a, const Coalgebra& b);
};

/// Finite-dimensional Hopf algebra by structure constants. The antipode
/// matrix has S(e_j) as its j-th column.
struct HopfAlgebra {
    std::vector<std::string> labels;
    Algebra algebra;
    Coalgebra coalgebra;
    Matrix antipode{Field::rational(), 0, 0};

    const Field& field() const { return algebra.field; }
    std::size_t dim() const { return algebra.dim; }
    const std::string& label(std::size_t i) const { return labels.at(i); }
    Vector multiply(const Vector& a, const Vector& b) const { return algebra.multiply(a, b); }
    const Vector& product(std::size_t i, std::size_t j) const { return algebra.product(i, j); }
    const std::vector<Term>& comult(std::size_t k) const { return coalgebra.comult[k]; }
    Vector basis(std::size_t i) const { return algebra.basis(i); }

    friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b)
    {
        return a.algebra == b.algebra && a.coalgebra == b.coalgebra && a.antipode == b.antipode;
    }
};

/// Outer product of coordinate vectors, flattened with pair_index.
Vector tensor(const Vector& a, const Vector& b);

/// Associativity and unitality, exhaustively on basis triples.
Report check_algebra(const Algebra& a, const std::vector<std::string>& labels = {});
/// Coassociativity and counitality.
Report check_coalgebra(const Coalgebra& c, const std::vector<std::string>& labels = {});

/// Every Hopf algebra axiom checked exactly on all basis tuples. Each failing
/// check carries the first failing tuple as witness.
Report verify_hopf_axioms(const HopfAlgebra& h);

/// H* on the dual basis. Labels become "label*".
HopfAlgebra dualize(const HopfAlgebra& h);

enum class OppositeKind { op, cop, opcop };
HopfAlgebra opposite_variant(const HopfAlgebra& h, OppositeKind which);

/// Coalgebra structure of H (x) H with Delta(h (x) k) = (h1 (x) k1) (x) (h2 (x) k2).
Coalgebra tensor_square_coalgebra(const Coalgebra& c);

/// Whether the matrix (column j = image of e_j) is a Hopf algebra map src -> dst:
/// unit, product, counit, coproduct and antipode are preserved.
Report check_hopf_morphism(const HopfAlgebra& src, const HopfAlgebra& dst, const Matrix& map);

/// Exact inverse of S; throws StructuralError when S is singular.
Matrix antipode_inverse(const HopfAlgebra& h);

} // namespace hopfaz
