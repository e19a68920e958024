#include "hopfaz/convolution.hpp"

#include <optional>

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

std::string triple(const HopfAlgebra& h, std::size_t a, std::size_t b, std::size_t c)
{
    return "(" + h.label(a) + "," + h.label(b) + "," + h.label(c) + ")";
}

std::string pair(const HopfAlgebra& h, std::size_t a, std::size_t b)
{
    return "(" + h.label(a) + "," + h.label(b) + ")";
}

std::vector<std::vector<Term3>> all_comult2(const Coalgebra& c)
{
    std::vector<std::vector<Term3>> out(c.dim);
    for (std::size_t k = 0; k < c.dim; ++k) out[k] = c.comult2(k);
    return out;
}

void require_dim(const Functional2& f, const HopfAlgebra& h)
{
    if (f.values.rows() != h.dim() || f.values.cols() != h.dim())
        throw DimensionError("functional on H(x)H has shape " + std::to_string(f.values.rows()) + "x" +
                             std::to_string(f.values.cols()) + ", expected " + std::to_string(h.dim()) + "x" +
                             std::to_string(h.dim()));
}

} // namespace

Vector convolve(const Vector& f, const Vector& g, const Coalgebra& c)
{
    if (f.size() != c.dim || g.size() != c.dim) throw DimensionError("convolve: functional length differs from coalgebra dimension");
    Vector out = zero_vector(c.field, c.dim);
    for (std::size_t k = 0; k < c.dim; ++k)
        for (const auto& t : c.comult[k])
            if (!f[t.left].is_zero() && !g[t.right].is_zero()) out[k] += t.coeff * f[t.left] * g[t.right];
    return out;
}

Functional1 convolve(const Functional1& f, const Functional1& g, const HopfAlgebra& h)
{
    return {convolve(f.values, g.values, h.coalgebra)};
}

Functional2 convolve(const Functional2& f, const Functional2& g, const HopfAlgebra& h)
{
    require_dim(f, h);
    require_dim(g, h);
    const std::size_t d = h.dim();
    Matrix out(h.field(), d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Scalar s = h.field().zero();
            for (const auto& s1 : h.comult(a))
                for (const auto& t1 : h.comult(b)) {
                    const Scalar& fv = f.values(s1.left, t1.left);
                    if (fv.is_zero()) continue;
                    const Scalar& gv = g.values(s1.right, t1.right);
                    if (gv.is_zero()) continue;
                    s += s1.coeff * t1.coeff * fv * gv;
                }
            out(a, b) = s;
        }
    return {out};
}

Vector conv_inverse(const Vector& f, const Coalgebra& c)
{
    if (f.size() != c.dim) throw DimensionError("conv_inverse: functional length differs from coalgebra dimension");
    Matrix left(c.field, c.dim, c.dim);
    for (std::size_t k = 0; k < c.dim; ++k)
        for (const auto& t : c.comult[k])
            if (!f[t.left].is_zero()) left(k, t.right) += t.coeff * f[t.left];
    Vector x;
    try {
        x = solve(left, c.counit);
    } catch (const NotInvertible&) {
        throw NotInvertible("not convolution invertible");
    }
    if (convolve(x, f, c) != c.counit) throw NotInvertible("not convolution invertible (left inverse is not a right inverse)");
    return x;
}

Functional1 conv_inverse(const Functional1& f, const HopfAlgebra& h) { return {conv_inverse(f.values, h.coalgebra)}; }

Functional2 conv_inverse(const Functional2& f, const HopfAlgebra& h)
{
    require_dim(f, h);
    Coalgebra sq = tensor_square_coalgebra(h.coalgebra);
    return Functional2::unflatten(h.field(), h.dim(), conv_inverse(f.flatten(), sq));
}

Report check_left_2cocycle(const Functional2& sigma, const HopfAlgebra& h)
{
    require_dim(sigma, h);
    Report rep;
    const std::size_t d = h.dim();
    const Vector& unit = h.algebra.unit;
    const Vector& eps = h.coalgebra.counit;

    std::optional<Functional2> inv;
    try {
        inv = conv_inverse(sigma, h);
        rep.add("convolution-invertible", true);
    } catch (const NotInvertible& e) {
        rep.add("convolution-invertible", false, e.what());
    }

    std::string witness;
    for (std::size_t k = 0; k < d && witness.empty(); ++k)
        if (sigma.apply_left(unit, k) != eps[k] || sigma.apply_right(k, unit) != eps[k]) witness = h.label(k);
    rep.add("normalization", witness.empty(), witness);

    witness.clear();
    for (std::size_t a = 0; a < d && witness.empty(); ++a)
        for (std::size_t b = 0; b < d && witness.empty(); ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Scalar lhs = h.field().zero(), rhs = lhs;
                for (const auto& bt : h.comult(b))
                    for (const auto& ct : h.comult(c)) {
                        const Scalar& s1 = sigma.values(bt.left, ct.left);
                        if (!s1.is_zero()) lhs += bt.coeff * ct.coeff * s1 * sigma.apply_right(a, h.product(bt.right, ct.right));
                    }
                for (const auto& at : h.comult(a))
                    for (const auto& bt : h.comult(b)) {
                        const Scalar& s1 = sigma.values(at.left, bt.left);
                        if (!s1.is_zero()) rhs += at.coeff * bt.coeff * s1 * sigma.apply_left(h.product(at.right, bt.right), c);
                    }
                if (lhs != rhs) {
                    witness = triple(h, a, b, c);
                    break;
                }
            }
    rep.add("cocycle", witness.empty(), witness);

    if (!inv) return rep;

    // s(k (x) lm) = sum s^-1(l1 (x) m1) s(k1 (x) l2) s(k2 l3 (x) m2)
    // s(kl (x) m) = sum s^-1(k1 (x) l1) s(l2 (x) m1) s(k2 (x) l3 m2)
    auto cube = all_comult2(h.coalgebra);
    std::string w_right, w_left;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m) {
                if (!w_right.empty() && !w_left.empty()) break;
                if (w_right.empty()) {
                    Scalar lhs = sigma.apply_right(k, h.product(l, m));
                    Scalar rhs = h.field().zero();
                    for (const auto& lt : cube[l])
                        for (const auto& mt : h.comult(m)) {
                            const Scalar& si = inv->values(lt.a, mt.left);
                            if (si.is_zero()) continue;
                            for (const auto& kt : h.comult(k)) {
                                const Scalar& s2 = sigma.values(kt.left, lt.b);
                                if (s2.is_zero()) continue;
                                rhs += lt.coeff * mt.coeff * kt.coeff * si * s2 *
                                       sigma.apply_left(h.product(kt.right, lt.c), mt.right);
                            }
                        }
                    if (lhs != rhs) w_right = triple(h, k, l, m);
                }
                if (w_left.empty()) {
                    Scalar lhs = sigma.apply_left(h.product(k, l), m);
                    Scalar rhs = h.field().zero();
                    for (const auto& lt : cube[l])
                        for (const auto& kt : h.comult(k)) {
                            const Scalar& si = inv->values(kt.left, lt.a);
                            if (si.is_zero()) continue;
                            for (const auto& mt : h.comult(m)) {
                                const Scalar& s2 = sigma.values(lt.b, mt.left);
                                if (s2.is_zero()) continue;
                                rhs += lt.coeff * mt.coeff * kt.coeff * si * s2 *
                                       sigma.apply_right(kt.right, h.product(lt.c, mt.right));
                            }
                        }
                    if (lhs != rhs) w_left = triple(h, k, l, m);
                }
            }
    rep.add("cocycle-expand-k-lm", w_right.empty(), w_right);
    rep.add("cocycle-expand-kl-m", w_left.empty(), w_left);
    return rep;
}

Report check_dqt_rform(const Functional2& r, const HopfAlgebra& h)
{
    require_dim(r, h);
    Report rep;
    const std::size_t d = h.dim();
    try {
        conv_inverse(r, h);
        rep.add("convolution-invertible", true);
    } catch (const NotInvertible& e) {
        rep.add("convolution-invertible", false, e.what());
    }

    std::string witness;
    for (std::size_t a = 0; a < d && witness.empty(); ++a)
        for (std::size_t b = 0; b < d && witness.empty(); ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Scalar lhs = r.apply_left(h.product(a, b), c);
                Scalar rhs = h.field().zero();
                for (const auto& ct : h.comult(c)) rhs += ct.coeff * r.values(a, ct.left) * r.values(b, ct.right);
                if (lhs != rhs) {
                    witness = triple(h, a, b, c);
                    break;
                }
            }
    rep.add("multiplicative-left", witness.empty(), witness);

    witness.clear();
    for (std::size_t a = 0; a < d && witness.empty(); ++a)
        for (std::size_t b = 0; b < d && witness.empty(); ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Scalar lhs = r.apply_right(a, h.product(b, c));
                Scalar rhs = h.field().zero();
                for (const auto& at : h.comult(a)) rhs += at.coeff * r.values(at.left, c) * r.values(at.right, b);
                if (lhs != rhs) {
                    witness = triple(h, a, b, c);
                    break;
                }
            }
    rep.add("multiplicative-right", witness.empty(), witness);

    witness.clear();
    for (std::size_t a = 0; a < d && witness.empty(); ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vector lhs = zero_vector(h.field(), d), rhs = lhs;
            for (const auto& at : h.comult(a))
                for (const auto& bt : h.comult(b)) {
                    Scalar c = at.coeff * bt.coeff;
                    const Scalar& r1 = r.values(at.right, bt.right);
                    if (!r1.is_zero()) axpy(lhs, c * r1, h.product(bt.left, at.left));
                    const Scalar& r2 = r.values(at.left, bt.left);
                    if (!r2.is_zero()) axpy(rhs, c * r2, h.product(at.right, bt.right));
                }
            if (lhs != rhs) {
                witness = pair(h, a, b);
                break;
            }
        }
    rep.add("quasi-commutative", witness.empty(), witness);

    witness.clear();
    const Vector& unit = h.algebra.unit;
    for (std::size_t k = 0; k < d && witness.empty(); ++k)
        if (r.apply_left(unit, k) != h.coalgebra.counit[k] || r.apply_right(k, unit) != h.coalgebra.counit[k])
            witness = h.label(k);
    rep.add("normalization", witness.empty(), witness);
    return rep;
}

HopfAlgebra doi_twist(const HopfAlgebra& h, const Functional2& sigma)
{
    require_dim(sigma, h);
    const Functional2 inv = conv_inverse(sigma, h);
    const std::size_t d = h.dim();
    const Field& f = h.field();
    auto cube = all_comult2(h.coalgebra);

    HopfAlgebra tw = h;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vector p = zero_vector(f, d);
            for (const auto& at : cube[a])
                for (const auto& bt : cube[b]) {
                    const Scalar& s = sigma.values(at.a, bt.a);
                    if (s.is_zero()) continue;
                    const Scalar& si = inv.values(at.c, bt.c);
                    if (si.is_zero()) continue;
                    axpy(p, at.coeff * bt.coeff * s * si, h.product(at.b, bt.b));
                }
            tw.algebra.mult[a * d + b] = std::move(p);
        }

    // Unknown S(e_j) coordinate a lives at a * d + j; equation (k, out) is the
    // out-coordinate of sum S(k_1) . k_2 = eps(k) 1.
    Matrix system(f, d * d, d * d);
    Vector rhs = zero_vector(f, d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (const auto& t : h.comult(k))
            for (std::size_t a = 0; a < d; ++a) {
                const Vector& p = tw.product(a, t.right);
                for (std::size_t out = 0; out < d; ++out)
                    if (!p[out].is_zero()) system(k * d + out, a * d + t.left) += t.coeff * p[out];
            }
        for (std::size_t out = 0; out < d; ++out) rhs[k * d + out] = h.coalgebra.counit[k] * h.algebra.unit[out];
    }
    Vector s;
    try {
        s = solve(system, rhs);
    } catch (const NotInvertible&) {
        throw StructuralError("twisted algebra admits no antipode");
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) tw.antipode(a, j) = s[a * d + j];
    return tw;
}

Functional2 twisted_rform(const Functional2& r, const Functional2& sigma, const HopfAlgebra& h)
{
    return convolve(convolve(sigma.flipped(), r, h), conv_inverse(sigma, h), h);
}

namespace {

void require_cocycle(const Functional2& sigma, const HopfAlgebra& h, const char* what)
{
    Report rep = check_left_2cocycle(sigma, h);
    if (!rep.all_passed()) {
        auto name = rep.first_failure();
        throw StructuralError(std::string(what) + ": " + name + " fails at " + rep.find(name)->witness);
    }
}

} // namespace

ComoduleAlgebra crossed_product(const HopfAlgebra& h, const Functional2& sigma)
{
    require_cocycle(sigma, h, "crossed product");
    const std::size_t d = h.dim();
    ComoduleAlgebra a;
    a.labels = h.labels;
    a.algebra = h.algebra;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = zero_vector(h.field(), d);
            for (const auto& it : h.comult(i))
                for (const auto& jt : h.comult(j)) {
                    const Scalar& s = sigma.values(it.left, jt.left);
                    if (!s.is_zero()) axpy(p, it.coeff * jt.coeff * s, h.product(it.right, jt.right));
                }
            a.algebra.mult[i * d + j] = std::move(p);
        }
    a.coaction = h.coalgebra.comult;
    a.hopf = std::make_shared<const HopfAlgebra>(h);
    Report rep = check_comodule_algebra(a, CoactionSide::plain);
    if (!rep.all_passed()) throw StructuralError("crossed product is not an H-comodule algebra: " + rep.first_failure());
    return a;
}

ComoduleAlgebra build_a_sigma(const HopfAlgebra& h, const Functional2& sigma)
{
    require_cocycle(sigma, h, "A_sigma");
    HopfAlgebra hop = opposite_variant(h, OppositeKind::op);
    require_cocycle(sigma.flipped(), hop, "A_sigma (flipped cocycle on H^op)");

    const std::size_t d = h.dim();
    ComoduleAlgebra a;
    a.labels = h.labels;
    a.algebra = h.algebra;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = zero_vector(h.field(), d);
            for (const auto& it : h.comult(i))
                for (const auto& jt : h.comult(j)) {
                    const Scalar& s = sigma.values(jt.left, it.left);
                    if (!s.is_zero()) axpy(p, it.coeff * jt.coeff * s, h.product(jt.right, it.right));
                }
            a.algebra.mult[i * d + j] = std::move(p);
        }
    a.coaction = h.coalgebra.comult;
    a.hopf = std::make_shared<const HopfAlgebra>(h);
    Report rep = check_comodule_algebra(a, CoactionSide::opposite);
    if (!rep.all_passed()) throw StructuralError("A_sigma is not an algebra in M^H: " + rep.first_failure());
    return a;
}

Functional2 cohomologous_twist(const Functional2& omega, const Functional1& theta, const HopfAlgebra& h)
{
    require_dim(omega, h);
    Functional1 inv;
    try {
        inv = conv_inverse(theta, h);
    } catch (const NotInvertible&) {
        throw NotInvertible("theta is not convolution invertible");
    }
    const std::size_t d = h.dim();
    auto cube = all_comult2(h.coalgebra);
    Matrix out(h.field(), d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Scalar s = h.field().zero();
            for (const auto& at : cube[a]) {
                const Scalar& ta = theta.values[at.a];
                if (ta.is_zero()) continue;
                for (const auto& bt : cube[b]) {
                    const Scalar& tb = theta.values[bt.a];
                    if (tb.is_zero()) continue;
                    const Scalar& w = omega.values(at.b, bt.b);
                    if (w.is_zero()) continue;
                    s += at.coeff * bt.coeff * ta * tb * w * inv.apply(h.product(at.c, bt.c));
                }
            }
            out(a, b) = s;
        }
    return {out};
}

} // namespace hopfaz
