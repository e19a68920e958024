#include "hopfaz/hopf.hpp"

#include <map>
#include <tuple>

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

std::string name_of(const std::vector<std::string>& labels, std::size_t i)
{
    return i < labels.size() ? labels[i] : "e" + std::to_string(i);
}

std::string tuple_witness(const std::vector<std::string>& labels, std::initializer_list<std::size_t> idx)
{
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ",";
        s += name_of(labels, i);
        first = false;
    }
    return s + ")";
}

} // namespace

Vector Algebra::multiply(const Vector& a, const Vector& b) const
{
    if (a.size() != dim || b.size() != dim) throw DimensionError("multiply: vector length differs from algebra dimension");
    Vector out = zero_vector(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            const Vector& p = product(i, j);
            Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!p[k].is_zero()) out[k] += c * p[k];
        }
    }
    return out;
}

Algebra Algebra::opposite() const
{
    Algebra o = *this;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) o.mult[i * dim + j] = product(j, i);
    return o;
}

Vector Coalgebra::apply_comult(const Vector& v) const
{
    Vector out = zero_vector(field, dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (v[k].is_zero()) continue;
        for (const auto& t : comult[k]) out[pair_index(t.left, t.right, dim)] += v[k] * t.coeff;
    }
    return out;
}

Scalar Coalgebra::apply_counit(const Vector& v) const { return dot(counit, v); }

std::vector<Term3> Coalgebra::comult2(std::size_t k) const
{
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
    for (const auto& outer : comult[k])
        for (const auto& inner : comult[outer.left]) {
            auto key = std::make_tuple(inner.left, inner.right, outer.right);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, outer.coeff * inner.coeff);
            else
                it->second += outer.coeff * inner.coeff;
        }
    std::vector<Term3> out;
    for (auto& [key, c] : acc)
        if (!c.is_zero()) out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    return out;
}

Coalgebra Coalgebra::co_opposite() const
{
    Coalgebra o = *this;
    for (auto& terms : o.comult)
        for (auto& t : terms) std::swap(t.left, t.right);
    return o;
}

bool operator==(const Coalgebra& a, const Coalgebra& b)
{
    if (a.field != b.field || a.dim != b.dim || a.counit != b.counit) return false;
    for (std::size_t k = 0; k < a.dim; ++k) {
        Vector e = basis_vector(a.field, a.dim, k);
        if (a.apply_comult(e) != b.apply_comult(e)) return false;
    }
    return true;
}

Vector tensor(const Vector& a, const Vector& b)
{
    if (a.empty() || b.empty()) return {};
    Vector out = zero_vector(a[0].field(), a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[pair_index(i, j, b.size())] = a[i] * b[j];
    }
    return out;
}

Report check_algebra(const Algebra& a, const std::vector<std::string>& labels)
{
    Report rep;
    const std::size_t d = a.dim;
    bool ok = a.mult.size() == d * d && a.unit.size() == d;
    rep.add("algebra-shape", ok, "structure tensor has wrong shape");
    if (!ok) return rep;

    std::string witness;
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        for (std::size_t j = 0; j < d && witness.empty(); ++j) {
            Vector ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vector lhs = a.multiply(ij, a.basis(k));
                Vector rhs = a.multiply(a.basis(i), a.product(j, k));
                if (lhs != rhs) {
                    witness = tuple_witness(labels, {i, j, k});
                    break;
                }
            }
        }
    rep.add("associativity", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < d; ++i) {
        Vector e = a.basis(i);
        if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e) {
            witness = tuple_witness(labels, {i});
            break;
        }
    }
    rep.add("unitality", witness.empty(), witness);
    return rep;
}

Report check_coalgebra(const Coalgebra& c, const std::vector<std::string>& labels)
{
    Report rep;
    const std::size_t d = c.dim;
    bool ok = c.comult.size() == d && c.counit.size() == d;
    for (const auto& terms : c.comult)
        for (const auto& t : terms) ok = ok && t.left < d && t.right < d;
    rep.add("coalgebra-shape", ok, "comultiplication or counit has wrong shape");
    if (!ok) return rep;

    std::string witness;
    for (std::size_t k = 0; k < d && witness.empty(); ++k) {
        // (Delta (x) id) Delta vs (id (x) Delta) Delta, both flattened to d^3.
        Vector lhs = zero_vector(c.field, d * d * d), rhs = lhs;
        for (const auto& t : c.comult[k]) {
            for (const auto& u : c.comult[t.left]) lhs[(u.left * d + u.right) * d + t.right] += t.coeff * u.coeff;
            for (const auto& u : c.comult[t.right]) rhs[(t.left * d + u.left) * d + u.right] += t.coeff * u.coeff;
        }
        if (lhs != rhs) witness = tuple_witness(labels, {k});
    }
    rep.add("coassociativity", witness.empty(), witness);

    witness.clear();
    for (std::size_t k = 0; k < d && witness.empty(); ++k) {
        Vector left = zero_vector(c.field, d), right = left;
        for (const auto& t : c.comult[k]) {
            left[t.right] += c.counit[t.left] * t.coeff;
            right[t.left] += c.counit[t.right] * t.coeff;
        }
        Vector e = basis_vector(c.field, d, k);
        if (left != e || right != e) witness = tuple_witness(labels, {k});
    }
    rep.add("counitality", witness.empty(), witness);
    return rep;
}

Report verify_hopf_axioms(const HopfAlgebra& h)
{
    Report rep;
    const std::size_t d = h.dim();
    const auto& L = h.labels;
    rep.append(check_algebra(h.algebra, L));
    rep.append(check_coalgebra(h.coalgebra, L));
    bool shape = h.coalgebra.dim == d && h.antipode.rows() == d && h.antipode.cols() == d;
    rep.add("hopf-shape", shape, "coalgebra or antipode dimension differs from algebra");
    if (!rep.all_passed()) return rep;

    const auto& C = h.coalgebra;
    std::string witness;
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector lhs = C.apply_comult(h.product(i, j));
            Vector rhs = zero_vector(h.field(), d * d);
            for (const auto& s : C.comult[i])
                for (const auto& t : C.comult[j])
                    axpy(rhs, s.coeff * t.coeff, tensor(h.product(s.left, t.left), h.product(s.right, t.right)));
            if (lhs != rhs) {
                witness = tuple_witness(L, {i, j});
                break;
            }
        }
    rep.add("comult-multiplicative", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (C.apply_counit(h.product(i, j)) != C.counit[i] * C.counit[j]) {
                witness = tuple_witness(L, {i, j});
                break;
            }
    rep.add("counit-multiplicative", witness.empty(), witness);

    bool unit_ok = C.apply_comult(h.algebra.unit) == tensor(h.algebra.unit, h.algebra.unit) &&
                   C.apply_counit(h.algebra.unit).is_one();
    rep.add("unit-grouplike", unit_ok, "Delta(1) != 1(x)1 or eps(1) != 1");

    witness.clear();
    for (std::size_t k = 0; k < d && witness.empty(); ++k) {
        Vector left = zero_vector(h.field(), d), right = left;
        for (const auto& t : C.comult[k]) {
            axpy(left, t.coeff, h.multiply(h.antipode.column(t.left), h.basis(t.right)));
            axpy(right, t.coeff, h.multiply(h.basis(t.left), h.antipode.column(t.right)));
        }
        Vector expect = h.algebra.unit;
        for (auto& s : expect) s *= C.counit[k];
        if (left != expect || right != expect) witness = tuple_witness(L, {k});
    }
    rep.add("antipode", witness.empty(), witness);

    rep.add("antipode-invertible", !det(h.antipode).is_zero(), "antipode matrix is singular");
    return rep;
}

HopfAlgebra dualize(const HopfAlgebra& h)
{
    const std::size_t d = h.dim();
    const Field& f = h.field();
    HopfAlgebra dual;
    for (const auto& l : h.labels) dual.labels.push_back(l.size() > 1 && l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*");
    dual.algebra.field = f;
    dual.algebra.dim = d;
    dual.algebra.mult.assign(d * d, zero_vector(f, d));
    for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : h.comult(k)) dual.algebra.mult[t.left * d + t.right][k] += t.coeff;
    dual.algebra.unit = h.coalgebra.counit;

    dual.coalgebra.field = f;
    dual.coalgebra.dim = d;
    dual.coalgebra.comult.assign(d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector& p = h.product(i, j);
            for (std::size_t k = 0; k < d; ++k)
                if (!p[k].is_zero()) dual.coalgebra.comult[k].push_back({p[k], i, j});
        }
    dual.coalgebra.counit = h.algebra.unit;
    dual.antipode = h.antipode.transpose();
    return dual;
}

Matrix antipode_inverse(const HopfAlgebra& h)
{
    try {
        return inverse(h.antipode);
    } catch (const NotInvertible&) {
        throw StructuralError("antipode is singular: input is not a finite-dimensional Hopf algebra");
    }
}

HopfAlgebra opposite_variant(const HopfAlgebra& h, OppositeKind which)
{
    HopfAlgebra o = h;
    switch (which) {
    case OppositeKind::op:
        o.algebra = h.algebra.opposite();
        o.antipode = antipode_inverse(h);
        break;
    case OppositeKind::cop:
        o.coalgebra = h.coalgebra.co_opposite();
        o.antipode = antipode_inverse(h);
        break;
    case OppositeKind::opcop:
        o.algebra = h.algebra.opposite();
        o.coalgebra = h.coalgebra.co_opposite();
        break;
    }
    return o;
}

Coalgebra tensor_square_coalgebra(const Coalgebra& c)
{
    const std::size_t d = c.dim;
    Coalgebra sq;
    sq.field = c.field;
    sq.dim = d * d;
    sq.comult.resize(d * d);
    sq.counit = zero_vector(c.field, d * d);
    for (std::size_t h = 0; h < d; ++h)
        for (std::size_t k = 0; k < d; ++k) {
            auto& terms = sq.comult[pair_index(h, k, d)];
            for (const auto& s : c.comult[h])
                for (const auto& t : c.comult[k])
                    terms.push_back({s.coeff * t.coeff, pair_index(s.left, t.left, d), pair_index(s.right, t.right, d)});
            sq.counit[pair_index(h, k, d)] = c.counit[h] * c.counit[k];
        }
    return sq;
}

} // namespace hopfaz

namespace hopfaz {

Report check_hopf_morphism(const HopfAlgebra& src, const HopfAlgebra& dst, const Matrix& map)
{
    if (map.rows() != dst.dim() || map.cols() != src.dim()) throw DimensionError("check_hopf_morphism: map has the wrong shape");
    const std::size_t d = src.dim(), e = dst.dim();
    Report rep;
    rep.add("morphism-unit", map * src.algebra.unit == dst.algebra.unit, "image of 1 is not 1");

    std::string witness;
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (map * src.product(i, j) != dst.multiply(map.column(i), map.column(j))) {
                witness = "(" + src.label(i) + "," + src.label(j) + ")";
                break;
            }
    rep.add("morphism-multiplicative", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        if (dot(dst.coalgebra.counit, map.column(i)) != src.coalgebra.counit[i]) witness = src.label(i);
    rep.add("morphism-counit", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < d && witness.empty(); ++i) {
        Vector lhs = dst.coalgebra.apply_comult(map.column(i));
        Vector rhs = zero_vector(dst.field(), e * e);
        for (const auto& t : src.comult(i)) axpy(rhs, t.coeff, tensor(map.column(t.left), map.column(t.right)));
        if (lhs != rhs) witness = src.label(i);
    }
    rep.add("morphism-comultiplicative", witness.empty(), witness);

    witness.clear();
    for (std::size_t i = 0; i < d && witness.empty(); ++i)
        if (map * src.antipode.column(i) != dst.antipode * map.column(i)) witness = src.label(i);
    rep.add("morphism-antipode", witness.empty(), witness);
    return rep;
}

} // namespace hopfaz
