#include "hopfaz/comodule.hpp"

#include <map>

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

std::string name_of(const std::vector<std::string>& labels, std::size_t i)
{
    return i < labels.size() ? labels[i] : "e" + std::to_string(i);
}

// Collects coeff * e_a (x) h (h given as a coordinate vector) into merged terms.
class TermAccumulator {
public:
    void add(const Scalar& c, std::size_t a, const Vector& h)
    {
        for (std::size_t k = 0; k < h.size(); ++k)
            if (!h[k].is_zero()) add(c * h[k], a, k);
    }
    void add(const Scalar& c, std::size_t a, std::size_t k)
    {
        auto it = acc_.find({a, k});
        if (it == acc_.end())
            acc_.emplace(std::make_pair(a, k), c);
        else
            it->second += c;
    }
    std::vector<Term> terms() const
    {
        std::vector<Term> out;
        for (const auto& [key, c] : acc_)
            if (!c.is_zero()) out.push_back({c, key.first, key.second});
        return out;
    }

private:
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc_;
};

} // namespace

Vector apply_coaction(const std::vector<std::vector<Term>>& coaction, std::size_t dim_a, std::size_t dim_h,
                      const Vector& v)
{
    if (v.size() != dim_a) throw DimensionError("apply_coaction: vector length differs from comodule dimension");
    Vector out = zero_vector(v.empty() ? Field::rational() : v[0].field(), dim_a * dim_h);
    for (std::size_t a = 0; a < dim_a; ++a) {
        if (v[a].is_zero()) continue;
        for (const auto& t : coaction[a]) out[pair_index(t.left, t.right, dim_h)] += v[a] * t.coeff;
    }
    return out;
}

Report check_comodule(const Comodule& p)
{
    Report rep;
    const HopfAlgebra& h = *p.hopf;
    const std::size_t dh = h.dim(), m = p.dim;
    bool ok = p.coaction.size() == m;
    for (const auto& terms : p.coaction)
        for (const auto& t : terms) ok = ok && t.left < m && t.right < dh;
    rep.add("coaction-shape", ok, "coaction has wrong shape");
    if (!ok) return rep;

    std::string witness;
    for (std::size_t a = 0; a < m && witness.empty(); ++a) {
        Vector lhs = zero_vector(h.field(), m * dh * dh), rhs = lhs;
        for (const auto& t : p.coaction[a]) {
            for (const auto& u : p.coaction[t.left]) lhs[(u.left * dh + u.right) * dh + t.right] += t.coeff * u.coeff;
            for (const auto& u : h.comult(t.right)) rhs[(t.left * dh + u.left) * dh + u.right] += t.coeff * u.coeff;
        }
        if (lhs != rhs) witness = name_of(p.labels, a);
    }
    rep.add("coaction-coassociative", witness.empty(), witness);

    witness.clear();
    for (std::size_t a = 0; a < m && witness.empty(); ++a) {
        Vector v = zero_vector(h.field(), m);
        for (const auto& t : p.coaction[a]) v[t.left] += t.coeff * h.coalgebra.counit[t.right];
        if (v != basis_vector(h.field(), m, a)) witness = name_of(p.labels, a);
    }
    rep.add("coaction-counital", witness.empty(), witness);
    return rep;
}

Report check_comodule_algebra(const ComoduleAlgebra& a, CoactionSide side)
{
    Report rep;
    rep.append(check_algebra(a.algebra, a.labels));
    rep.append(check_comodule(a.comodule()));
    if (!rep.all_passed()) return rep;

    const HopfAlgebra& h = *a.hopf;
    const std::size_t m = a.dim(), dh = h.dim();
    std::string witness;
    for (std::size_t i = 0; i < m && witness.empty(); ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vector lhs = apply_coaction(a.coaction, m, dh, a.algebra.product(i, j));
            Vector rhs = zero_vector(h.field(), m * dh);
            for (const auto& s : a.coaction[i])
                for (const auto& t : a.coaction[j]) {
                    const Vector& hp = side == CoactionSide::opposite ? h.product(t.right, s.right) : h.product(s.right, t.right);
                    axpy(rhs, s.coeff * t.coeff, tensor(a.algebra.product(s.left, t.left), hp));
                }
            if (lhs != rhs) {
                witness = "(" + name_of(a.labels, i) + "," + name_of(a.labels, j) + ")";
                break;
            }
        }
    rep.add(side == CoactionSide::opposite ? "coaction-multiplicative-op" : "coaction-multiplicative", witness.empty(),
            witness);
    bool unit_ok = apply_coaction(a.coaction, m, dh, a.algebra.unit) == tensor(a.algebra.unit, h.algebra.unit);
    rep.add("coaction-unit", unit_ok, "rho(1) != 1(x)1");
    return rep;
}

Comodule regular_comodule(std::shared_ptr<const HopfAlgebra> h)
{
    Comodule p;
    p.labels = h->labels;
    p.dim = h->dim();
    p.coaction = h->coalgebra.comult;
    p.hopf = std::move(h);
    return p;
}

ComoduleAlgebra trivial_comodule_algebra(std::shared_ptr<const HopfAlgebra> h)
{
    const Field& f = h->field();
    ComoduleAlgebra a;
    a.labels = {"1"};
    a.algebra.field = f;
    a.algebra.dim = 1;
    a.algebra.mult = {Vector{f.one()}};
    a.algebra.unit = Vector{f.one()};
    TermAccumulator acc;
    acc.add(f.one(), 0, h->algebra.unit);
    a.coaction = {acc.terms()};
    a.hopf = std::move(h);
    return a;
}

ComoduleAlgebra hopf_opposite_comodule_algebra(std::shared_ptr<const HopfAlgebra> h)
{
    ComoduleAlgebra a;
    a.labels = h->labels;
    a.algebra = h->algebra.opposite();
    a.coaction = h->coalgebra.comult;
    a.hopf = std::move(h);
    return a;
}

namespace {

void require_same_hopf(const ComoduleAlgebra& a, const ComoduleAlgebra& b)
{
    if (a.hopf != b.hopf && !(*a.hopf == *b.hopf))
        throw DimensionError("comodule algebras are over different Hopf algebras");
}

} // namespace

ComoduleAlgebra smash_product(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const Functional2& r)
{
    require_same_hopf(a, b);
    const HopfAlgebra& h = *a.hopf;
    const Field& f = a.field();
    const std::size_t ma = a.dim(), mb = b.dim(), m = ma * mb;

    ComoduleAlgebra s;
    for (std::size_t i = 0; i < ma; ++i)
        for (std::size_t j = 0; j < mb; ++j) s.labels.push_back(name_of(a.labels, i) + "#" + name_of(b.labels, j));
    s.algebra.field = f;
    s.algebra.dim = m;
    s.algebra.mult.assign(m * m, zero_vector(f, m));
    s.algebra.unit = tensor(a.algebra.unit, b.algebra.unit);

    // (a#b)(c#d) = sum a c_0 # b_0 d r(c_1 (x) b_1)
    for (std::size_t ia = 0; ia < ma; ++ia)
        for (std::size_t ib = 0; ib < mb; ++ib)
            for (std::size_t ic = 0; ic < ma; ++ic)
                for (std::size_t id = 0; id < mb; ++id) {
                    Vector& out = s.algebra.mult[pair_index(ia, ib, mb) * m + pair_index(ic, id, mb)];
                    for (const auto& ct : a.coaction[ic])
                        for (const auto& bt : b.coaction[ib]) {
                            const Scalar& rv = r.values(ct.right, bt.right);
                            if (rv.is_zero()) continue;
                            axpy(out, ct.coeff * bt.coeff * rv,
                                 tensor(a.algebra.product(ia, ct.left), b.algebra.product(bt.left, id)));
                        }
                }

    // rho(m (x) n) = sum m_0 (x) n_0 (x) n_1 m_1
    s.coaction.resize(m);
    for (std::size_t ia = 0; ia < ma; ++ia)
        for (std::size_t ib = 0; ib < mb; ++ib) {
            TermAccumulator acc;
            for (const auto& at : a.coaction[ia])
                for (const auto& bt : b.coaction[ib])
                    acc.add(at.coeff * bt.coeff, pair_index(at.left, bt.left, mb), h.product(bt.right, at.right));
            s.coaction[pair_index(ia, ib, mb)] = acc.terms();
        }
    s.hopf = a.hopf;
    return s;
}

ComoduleAlgebra braided_opposite(const ComoduleAlgebra& a, const Functional2& r)
{
    const std::size_t m = a.dim();
    ComoduleAlgebra o = a;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vector p = zero_vector(a.field(), m);
            for (const auto& jt : a.coaction[j])
                for (const auto& it : a.coaction[i]) {
                    const Scalar& rv = r.values(jt.right, it.right);
                    if (!rv.is_zero()) axpy(p, jt.coeff * it.coeff * rv, a.algebra.product(jt.left, it.left));
                }
            o.algebra.mult[i * m + j] = std::move(p);
        }
    return o;
}

ComoduleAlgebra ordinary_opposite(const ComoduleAlgebra& a)
{
    ComoduleAlgebra o = a;
    o.algebra = a.algebra.opposite();
    return o;
}

ComoduleAlgebra end_algebra(const Comodule& p, EndVariant variant)
{
    const HopfAlgebra& h = *p.hopf;
    const Field& f = h.field();
    const std::size_t m = p.dim, n = m * m;
    const Matrix s = h.antipode;
    const Matrix s_inv = variant == EndVariant::plain ? inverse(h.antipode) : h.antipode;

    ComoduleAlgebra e;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) e.labels.push_back("E(" + name_of(p.labels, i) + "," + name_of(p.labels, j) + ")");
    e.algebra.field = f;
    e.algebra.dim = n;
    e.algebra.mult.assign(n * n, zero_vector(f, n));
    e.algebra.unit = zero_vector(f, n);
    for (std::size_t i = 0; i < m; ++i) e.algebra.unit[pair_index(i, i, m)] = f.one();
    // E_ij E_jl = E_il; the op variant reverses the factors.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < m; ++l) {
                std::size_t x = pair_index(i, j, m), y = pair_index(j, l, m);
                if (variant == EndVariant::plain)
                    e.algebra.mult[x * n + y][pair_index(i, l, m)] = f.one();
                else
                    e.algebra.mult[y * n + x][pair_index(i, l, m)] = f.one();
            }

    // rho(E_ij)(e_a) = sum over (e_j (x) h) in rho(e_a) and (e_i' (x) h') in rho(e_i)
    // of e_i' (x) S^-1(h) h'   (plain)   or   e_i' (x) h' S(h)   (op).
    e.coaction.resize(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            TermAccumulator acc;
            for (std::size_t a = 0; a < m; ++a)
                for (const auto& at : p.coaction[a]) {
                    if (at.left != j) continue;
                    for (const auto& it : p.coaction[i]) {
                        Vector hv = variant == EndVariant::plain
                                        ? h.multiply(s_inv.column(at.right), h.basis(it.right))
                                        : h.multiply(h.basis(it.right), s.column(at.right));
                        acc.add(at.coeff * it.coeff, pair_index(it.left, a, m), hv);
                    }
                }
            e.coaction[pair_index(i, j, m)] = acc.terms();
        }
    e.hopf = p.hopf;
    return e;
}

} // namespace hopfaz
