#include "hopfaz/functional.hpp"

#include "hopfaz/error.hpp"

namespace hopfaz {

Scalar Functional2::apply(const Vector& u, const Vector& v) const
{
    if (u.size() != values.rows() || v.size() != values.cols()) throw DimensionError("functional on H(x)H: argument length mismatch");
    Scalar s = values.field().zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        s += u[i] * apply_right(i, v);
    }
    return s;
}

Scalar Functional2::apply_right(std::size_t i, const Vector& v) const
{
    Scalar s = values.field().zero();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero() && !values(i, j).is_zero()) s += values(i, j) * v[j];
    return s;
}

Scalar Functional2::apply_left(const Vector& u, std::size_t j) const
{
    Scalar s = values.field().zero();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !values(i, j).is_zero()) s += u[i] * values(i, j);
    return s;
}

Vector Functional2::flatten() const
{
    Vector out;
    out.reserve(values.rows() * values.cols());
    for (std::size_t i = 0; i < values.rows(); ++i)
        for (std::size_t j = 0; j < values.cols(); ++j) out.push_back(values(i, j));
    return out;
}

Functional2 Functional2::unflatten(const Field& f, std::size_t d, const Vector& flat)
{
    if (flat.size() != d * d) throw DimensionError("unflatten: length is not d^2");
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = flat[pair_index(i, j, d)];
    return {m};
}

Functional1 counit_functional(const HopfAlgebra& h) { return {h.coalgebra.counit}; }

Functional2 counit_functional2(const HopfAlgebra& h)
{
    const auto& e = h.coalgebra.counit;
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) m(i, j) = e[i] * e[j];
    return {m};
}

} // namespace hopfaz
