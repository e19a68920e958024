#pragma once

#include "hopfaz/comodule.hpp"

namespace hopfaz {

/// (f * g)(c) = sum f(c_1) g(c_2) over an arbitrary coalgebra.
Vector convolve(const Vector& f, const Vector& g, const Coalgebra& c);
Functional1 convolve(const Functional1& f, const Functional1& g, const HopfAlgebra& h);
/// Convolution in (H (x) H)*, using the tensor-square coalgebra of H.
Functional2 convolve(const Functional2& f, const Functional2& g, const HopfAlgebra& h);

/// Solves f * x = eps through the left-multiplication matrix of f, then
/// confirms x * f = eps. Throws NotInvertible("not convolution invertible").
Vector conv_inverse(const Vector& f, const Coalgebra& c);
Functional1 conv_inverse(const Functional1& f, const HopfAlgebra& h);
Functional2 conv_inverse(const Functional2& f, const HopfAlgebra& h);

/// Normalization and the left cocycle identity
///   sum s(k_1 (x) m_1) s(h (x) k_2 m_2) = sum s(h_1 (x) k_1) s(h_2 k_2 (x) m)
/// on all basis triples, plus the two derived expansions of s(k (x) lm) and
/// s(kl (x) m) through s^-1.
Report check_left_2cocycle(const Functional2& sigma, const HopfAlgebra& h);

/// Universal r-form axioms: convolution invertibility,
///   r(ab (x) c) = sum r(a (x) c_1) r(b (x) c_2),
///   r(a (x) bc) = sum r(a_1 (x) c) r(a_2 (x) b),
///   sum b_1 a_1 r(a_2 (x) b_2) = sum r(a_1 (x) b_1) a_2 b_2,
/// and the normalization r(1 (x) h) = r(h (x) 1) = eps(h).
Report check_dqt_rform(const Functional2& r, const HopfAlgebra& h);

/// Doi's twist _sH_{s^-1}: same coalgebra, product
/// h . k = sum s(h_1 (x) k_1) h_2 k_2 s^-1(h_3 (x) k_3). The antipode is
/// recomputed by solving sum S(h_1) . h_2 = eps(h) 1.
HopfAlgebra doi_twist(const HopfAlgebra& h, const Functional2& sigma);

/// (s o tau) * r * s^-1, a universal r-form for doi_twist(h, s).
Functional2 twisted_rform(const Functional2& r, const Functional2& sigma, const HopfAlgebra& h);

/// Crossed product _sH: H's basis, h . k = sum s(h_1 (x) k_1) h_2 k_2, coaction Delta.
/// A right H-comodule algebra (CoactionSide::plain). Throws StructuralError on
/// a cocycle failure.
ComoduleAlgebra crossed_product(const HopfAlgebra& h, const Functional2& sigma);

/// A_s = _{s tau}H^op: h . k = sum s(k_1 (x) h_1) k_2 h_2, coaction Delta.
/// Checks that s tau is a cocycle for H^op and that the result is an algebra
/// in M^H; throws StructuralError otherwise.
ComoduleAlgebra build_a_sigma(const HopfAlgebra& h, const Functional2& sigma);

/// w^t(h (x) k) = sum t(h_1) t(k_1) w(h_2 (x) k_2) t^-1(h_3 k_3).
Functional2 cohomologous_twist(const Functional2& omega, const Functional1& theta, const HopfAlgebra& h);

} // namespace hopfaz
