#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfaz/azumaya.hpp"

namespace hopfaz {

/// Parameters of the pair (r_A, sigma(alpha, gamma, Lambda)) on E(n).
struct ENParams {
    std::size_t n = 1;
    Matrix A{Field::rational(), 1, 1};
    Scalar alpha = Field::rational().one();
    Vector gamma;
    Matrix Lambda{Field::rational(), 1, 1};

    /// All-zero A, gamma, Lambda and alpha = 1.
    static ENParams zero(std::size_t n, const Field& f = Field::rational());
    /// n = 1 shorthand: A = (t), Lambda = (lambda).
    static ENParams h4(const Scalar& alpha, const Scalar& gamma, const Scalar& lambda, const Scalar& t);

    const Field& field() const { return A.field(); }
    /// Throws ParameterError for alpha = 0, shape mismatches, a nonzero strictly
    /// upper part of Lambda, or mixed fields.
    void validate() const;
    /// b_ij = a_ij - lambda_ij - lambda_ji
    Matrix B() const;
    /// Gamma_ij = gamma_i gamma_j
    Matrix Gamma() const;
};

/// Basis c^a x_P of E(n) (and u^a v_P of the Clifford algebras), index 2 * mask(P) + a.
struct MonomialBasis {
    std::size_t n;

    std::size_t size() const { return std::size_t{2} << n; }
    static std::size_t index(unsigned a, unsigned mask) { return std::size_t{mask} * 2 + a; }
    static unsigned c_power(std::size_t i) { return static_cast<unsigned>(i % 2); }
    static unsigned mask(std::size_t i) { return static_cast<unsigned>(i / 2); }
    /// Index of x_i (i counted from 1), of c x_i, of c.
    static std::size_t x(std::size_t i) { return index(0, 1u << (i - 1)); }
    static std::size_t cx(std::size_t i) { return index(1, 1u << (i - 1)); }
    static constexpr std::size_t c = 1;
    /// "1", "c", "x1", "cx1", "x1x2", ... or with u/v for the Clifford algebras.
    std::string label(std::size_t i, char group = 'c', char nilpotent = 'x') const;
    std::vector<std::string> labels(char group = 'c', char nilpotent = 'x') const;
};

/// E(n) over the given field; throws ParameterError for n = 0.
HopfAlgebra build_en(std::size_t n, const Field& f = Field::rational());

/// The universal r-form r_A on E(n), n = A.rows().
Functional2 rform_en(const Matrix& A);

/// Cl(alpha, gamma, Lambda) with u^2 = alpha, uv_i + v_iu = gamma_i, v_i^2 = lambda_ii,
/// v_iv_j + v_jv_i = lambda_ij + lambda_ji, and rho(u) = u (x) c,
/// rho(v_j) = 1 (x) x_j + v_j (x) c. A right E(n)-comodule algebra (CoactionSide::plain).
ComoduleAlgebra build_clifford(const ENParams& p);
ComoduleAlgebra build_clifford(const ENParams& p, std::shared_ptr<const HopfAlgebra> en);

/// sigma(h (x) k) = coefficient of 1_B in sum phi(h_1) phi(k_1) phi^-1(h_2 k_2), where
/// phi(e_h) = e_section[h]. Throws NotInvertible if phi is not convolution
/// invertible and StructuralError on a non-scalar value.
Functional2 derive_cocycle_from_cleft(const ComoduleAlgebra& b, const HopfAlgebra& h,
                                      const std::vector<std::size_t>& section);

/// sigma(alpha, gamma, Lambda) on all of E(n) (x) E(n), read off Cl(alpha, gamma, Lambda).
Functional2 cocycle_en(const ENParams& p);
Functional2 cocycle_en(const ENParams& p, const HopfAlgebra& en);

struct CriterionResult {
    bool azumaya;
    Scalar det;
    Matrix matrix;
};

/// det(2 alpha (A - Lambda - Lambda^t) + Gamma) != 0.
CriterionResult en_azumaya_criterion(const ENParams& p);

/// One row of a generator table: a computed value next to its closed form.
struct TableEntry {
    std::string family;
    std::string left;
    std::string right;
    Scalar computed;
    Scalar expected;

    bool matches() const { return computed == expected; }
};

/// The nine families of values of r_{A, sigma} on generators, for every index choice.
std::vector<TableEntry> rsigma_generator_table(const ENParams& p);
/// Values of sigma and sigma^-1 on generators next to their closed forms, for every index choice.
std::vector<TableEntry> sigma_generator_table(const ENParams& p);

/// The Hopf isomorphism E(n) -> E(n)* with c -> 1* - c*, x_j -> x_j* + (cx_j)*,
/// extended multiplicatively. Column j is the image of e_j in the dual basis.
Matrix self_duality_map(std::size_t n, const Field& f = Field::rational());

/// Moves a functional on E(n) (x) E(n) to an element of E(n) (x) E(n) through
/// the self-duality map phi: the result R satisfies R(f, g) = omega(phi^-1 f, phi^-1 g).
Matrix transport_to_element(const Functional2& omega, const Matrix& phi);

} // namespace hopfaz
