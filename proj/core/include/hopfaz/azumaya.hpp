#pragma once

#include <utility>

#include "hopfaz/convolution.hpp"

namespace hopfaz {

enum class MapKind { F, G, theta_r, theta_sigma };

/// Matrix of one of the canonical maps. For F and G the source basis is the
/// braided product basis pair_index(a, b, m) and the target basis is the
/// matrix-unit basis of End(A) (E_ij at pair_index(i, j, m)). For theta the
/// j-th column is the functional r(- (x) e_j) in dual-basis coordinates.
struct BraidedMapMatrix {
    MapKind kind;
    std::size_t source_dim;
    std::size_t target_dim;
    Matrix matrix;
};

/// F: A # Abar -> End(A), F(a # b)(c) = sum a c_0 b_0 r(c_1 (x) b_1).
BraidedMapMatrix build_F(const ComoduleAlgebra& a, const Functional2& r);
/// G: Abar # A -> End(A)^op, G(a # b)(c) = sum r(a_1 (x) c_1) a_0 c_0 b.
BraidedMapMatrix build_G(const ComoduleAlgebra& a, const Functional2& r);

/// F as an algebra map A # Abar -> End(A) and a comodule map, on all basis pairs.
Report check_F_morphism(const ComoduleAlgebra& a, const Functional2& r);
/// G as an algebra map Abar # A -> End(A)^op and a comodule map.
Report check_G_morphism(const ComoduleAlgebra& a, const Functional2& r);

/// F and G for A_sigma assembled through the twisted r-form instead of the
/// braided product:
///   F(h # k)(l) = sum r_s(l_1 (x) k_1) h . k_2 . l_2
///   G(h # k)(l) = sum r_s(h_1 (x) l_1) l_2 . h_2 . k
BraidedMapMatrix build_F_via_twisted_rform(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r);
BraidedMapMatrix build_G_via_twisted_rform(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r);

/// theta_r: H^op -> H*, h -> r(- (x) h). Throws StructuralError when r fails
/// check_dqt_rform.
BraidedMapMatrix theta_of_rform(const Functional2& r, const HopfAlgebra& h);
/// theta_r as a Hopf algebra map H^op -> H* (unit, counit, products into the
/// convolution algebra, coproducts).
Report check_theta_hopf_map(const Functional2& r, const HopfAlgebra& h);

struct AzumayaEvidence {
    bool azumaya;
    Scalar det_F;
    Scalar det_G;
};

/// Azumaya iff both det F and det G are nonzero.
AzumayaEvidence is_azumaya(const ComoduleAlgebra& a, const Functional2& r);

struct CleftEvidence {
    bool azumaya;
    Scalar det_theta;
    Functional2 r_sigma;
};

/// A_sigma is (H, r)-Azumaya iff theta_sigma is invertible, where
/// theta_sigma = theta of (s tau) * r * s^-1 on the Doi twist.
CleftEvidence is_azumaya_cleft(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r);

/// Spanning vector of the one-dimensional space of left integrals of H*,
/// sum h_1 z(h_2) = z(h) 1, scaled so its first nonzero entry is 1.
Functional1 left_integral_dual(const HopfAlgebra& h);

/// v(h)(k) = z(k S(h)) and w(h)(k) = v(h)(S^-1(k)).
std::pair<Functional1, Functional1> v_w_functionals(const HopfAlgebra& h, const Functional1& zeta, std::size_t index);

/// Columns v(e_h) and w(e_h). Throws StructuralError when h -> v(h) is not bijective.
struct IntegralMaps {
    Matrix v;
    Matrix w;
};
IntegralMaps integral_maps(const HopfAlgebra& h, const Functional1& zeta);

/// The three Hopf-module identities satisfied by v and w, on all basis pairs.
Report check_integral_identities(const HopfAlgebra& h);

/// S_1(h) = sum s^-1(S(h_2) (x) h_3) S(h_1),  S_2(h) = sum s^-1(h_3 (x) S^-1(h_2)) S^-1(h_1).
struct SMaps {
    Vector s1;
    Vector s2;
};
SMaps s1_s2(const HopfAlgebra& h, const Functional2& sigma, std::size_t index);

/// In A_sigma, for every basis h:
///   sum h_2 . S_1(h_1) = eps(h) = sum S_2(h_1) . h_2,
///   sum S_1(h_2) . h_1 = eps(h),  sum h_1 . S_2(h_2) = eps(h).
Report check_s_identities(const HopfAlgebra& h, const Functional2& sigma);

/// Elements Gamma in A_s # Abar_s and Gamma' in Abar_s # A_s with
/// F(Gamma) = G(Gamma') = (l -> <eta, l> m). Requires theta_sigma invertible
/// (NotInvertible otherwise).
struct RankOnePreimage {
    Vector gamma;
    Vector gamma_prime;
};
RankOnePreimage rank_one_preimage(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r,
                                  const Functional1& eta, const Vector& m);
/// The flattened matrix of l -> <eta, l> m in the End(A) basis.
Vector rank_one_endomorphism(const Functional1& eta, const Vector& m);

struct DualPictureEvidence {
    bool azumaya;
    Scalar det_theta;
    /// det of theta_sigma computed on H* by is_azumaya_cleft.
    Scalar det_theta_dual_route;
    bool consistent;
};

/// Quasitriangular side. R and C are elements of H (x) H given by
/// coefficient matrices (R = sum R(i,j) e_i (x) e_j). Forms R_C = (tau C) R C^-1
/// in H (x) H and tests invertibility of f -> sum R_C^(1) <f, R_C^(2)>. Cross-checked
/// against is_azumaya_cleft on H* with r = R and sigma = C. Throws
/// StructuralError if R is not quasitriangular or C is not a cocycle for H*.
DualPictureEvidence dual_picture_test(const HopfAlgebra& h, const Matrix& R, const Matrix& C);

} // namespace hopfaz
