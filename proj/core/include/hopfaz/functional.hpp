#pragma once

#include "hopfaz/hopf.hpp"

namespace hopfaz {

/// Linear functional on H: values[i] = f(e_i).
struct Functional1 {
    Vector values;

    Scalar operator()(std::size_t i) const { return values.at(i); }
    Scalar apply(const Vector& v) const { return dot(values, v); }
    friend bool operator==(const Functional1&, const Functional1&) = default;
};

/// Linear functional on H (x) H: values(i, j) = f(e_i (x) e_j).
struct Functional2 {
    Matrix values;

    Scalar operator()(std::size_t i, std::size_t j) const { return values(i, j); }
    /// f(u (x) v) for coordinate vectors u, v.
    Scalar apply(const Vector& u, const Vector& v) const;
    /// f(e_i (x) v)
    Scalar apply_right(std::size_t i, const Vector& v) const;
    /// f(u (x) e_j)
    Scalar apply_left(const Vector& u, std::size_t j) const;
    /// f o tau, i.e. (h (x) k) -> f(k (x) h).
    Functional2 flipped() const { return {values.transpose()}; }
    Vector flatten() const;
    static Functional2 unflatten(const Field& f, std::size_t d, const Vector& flat);

    friend bool operator==(const Functional2&, const Functional2&) = default;
};

Functional1 counit_functional(const HopfAlgebra& h);
/// eps (x) eps, the unit of the convolution algebra (H (x) H)*.
Functional2 counit_functional2(const HopfAlgebra& h);

} // namespace hopfaz
