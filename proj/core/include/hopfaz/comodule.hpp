#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfaz/functional.hpp"

namespace hopfaz {

/// Finite-dimensional right H-comodule; coaction[a] lists the terms
/// coeff * e_left (x) h_right of rho(e_a).
struct Comodule {
    std::vector<std::string> labels;
    std::size_t dim = 0;
    std::vector<std::vector<Term>> coaction;
    std::shared_ptr<const HopfAlgebra> hopf;

    const Field& field() const { return hopf->field(); }
};

/// A right H-comodule together with an algebra structure. Whether the
/// coaction is multiplicative into H or into H^op is a property checked by
/// check_comodule_algebra, not part of the type.
struct ComoduleAlgebra {
    std::vector<std::string> labels;
    Algebra algebra;
    std::vector<std::vector<Term>> coaction;
    std::shared_ptr<const HopfAlgebra> hopf;

    std::size_t dim() const { return algebra.dim; }
    const Field& field() const { return algebra.field; }
    Comodule comodule() const { return {labels, algebra.dim, coaction, hopf}; }
};

/// Which multiplication the coaction must respect in its second tensorand.
/// `opposite` is an algebra in the braided category M^H (an H^op-comodule
/// algebra); `plain` is an ordinary right H-comodule algebra such as a crossed
/// product or Cl(alpha, gamma, Lambda) with its native coaction.
enum class CoactionSide { opposite, plain };

Report check_comodule(const Comodule& p);
Report check_comodule_algebra(const ComoduleAlgebra& a, CoactionSide side = CoactionSide::opposite);

/// The coaction applied to a vector of A, flattened over A (x) H.
Vector apply_coaction(const std::vector<std::vector<Term>>& coaction, std::size_t dim_a, std::size_t dim_h,
                      const Vector& v);

/// H as a right comodule over itself via Delta.
Comodule regular_comodule(std::shared_ptr<const HopfAlgebra> h);
/// k with rho(1) = 1 (x) 1.
ComoduleAlgebra trivial_comodule_algebra(std::shared_ptr<const HopfAlgebra> h);
/// H^op with coaction Delta: an algebra in M^H.
ComoduleAlgebra hopf_opposite_comodule_algebra(std::shared_ptr<const HopfAlgebra> h);

/// Braided product A # B over (H, r):
///   (a # b)(c # d) = sum a c_0 # b_0 d r(c_1 (x) b_1),
///   rho(m (x) n)   = sum m_0 (x) n_0 (x) n_1 m_1.
/// Basis element (a, b) sits at pair_index(a, b, dim B).
ComoduleAlgebra smash_product(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const Functional2& r);

/// Opposite in the braided category: a o b = sum b_0 a_0 r(b_1 (x) a_1).
ComoduleAlgebra braided_opposite(const ComoduleAlgebra& a, const Functional2& r);

/// Ordinary opposite algebra with unchanged coaction. Turns an H-comodule
/// algebra into an H^op-comodule algebra and back.
ComoduleAlgebra ordinary_opposite(const ComoduleAlgebra& a);

enum class EndVariant { plain, op };

/// End(P) (composition, coaction f -> f(a_0)_(0) (x) S^-1(a_1) f(a_0)_(1)) or
/// End(P)^op (reversed composition, coaction f -> f(a_0)_(0) (x) f(a_0)_(1) S(a_1)).
/// The matrix unit E_ij (e_j -> e_i) is basis element pair_index(i, j, dim P).
ComoduleAlgebra end_algebra(const Comodule& p, EndVariant variant);

} // namespace hopfaz
