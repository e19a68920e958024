#include "hopfaz/azumaya.hpp"

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

std::string name_of(const std::vector<std::string>& labels, std::size_t i)
{
    return i < labels.size() ? labels[i] : "e" + std::to_string(i);
}

std::string pair_label(const std::vector<std::string>& labels, std::size_t a, std::size_t b)
{
    return "(" + name_of(labels, a) + "," + name_of(labels, b) + ")";
}

// v . e_j in an algebra given by structure constants.
Vector times_basis(const Algebra& alg, const Vector& v, std::size_t j)
{
    Vector out = zero_vector(alg.field, alg.dim);
    for (std::size_t k = 0; k < alg.dim; ++k)
        if (!v[k].is_zero()) axpy(out, v[k], alg.product(k, j));
    return out;
}

Vector basis_times(const Algebra& alg, std::size_t i, const Vector& v)
{
    Vector out = zero_vector(alg.field, alg.dim);
    for (std::size_t k = 0; k < alg.dim; ++k)
        if (!v[k].is_zero()) axpy(out, v[k], alg.product(i, k));
    return out;
}

// Stores the endomorphism value f(e_c) = out as column entries of an End(A) vector.
void store_value(Matrix& m, std::size_t col, std::size_t c, const Vector& out, std::size_t dim)
{
    for (std::size_t i = 0; i < dim; ++i)
        if (!out[i].is_zero()) m(pair_index(i, c, dim), col) = out[i];
}

// The m x m matrix of an End(A) vector, entry (i, c) = coefficient of e_i in f(e_c).
Matrix as_square(const Field& f, const Vector& v, std::size_t m)
{
    Matrix out(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) out(i, c) = v[pair_index(i, c, m)];
    return out;
}

Vector flatten_square(const Matrix& sq)
{
    const std::size_t m = sq.rows();
    Vector out = zero_vector(sq.field(), m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) out[pair_index(i, c, m)] = sq(i, c);
    return out;
}

Report check_morphism(const ComoduleAlgebra& src, const ComoduleAlgebra& end, const Matrix& map, std::size_t m,
                      bool reversed)
{
    Report rep;
    const Field& f = src.field();
    const std::size_t n = src.dim();
    const std::size_t dh = src.hopf->dim();

    std::vector<Matrix> images;
    images.reserve(n);
    for (std::size_t x = 0; x < n; ++x) images.push_back(as_square(f, map.column(x), m));

    bool unit_ok = flatten_square(as_square(f, map * src.algebra.unit, m)) == flatten_square(Matrix::identity(f, m));
    rep.add("unit", unit_ok, "image of 1 is not the identity");

    std::string witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector lhs = map * src.algebra.product(x, y);
            Matrix comp = reversed ? images[y] * images[x] : images[x] * images[y];
            if (lhs != flatten_square(comp)) {
                witness = pair_label(src.labels, x, y);
                break;
            }
        }
    rep.add("algebra-map", witness.empty(), witness);

    witness.clear();
    for (std::size_t x = 0; x < n && witness.empty(); ++x) {
        Vector lhs = apply_coaction(end.coaction, m * m, dh, map.column(x));
        Vector rhs = zero_vector(f, m * m * dh);
        for (const auto& t : src.coaction[x]) {
            Vector img = map.column(t.left);
            for (std::size_t e = 0; e < m * m; ++e)
                if (!img[e].is_zero()) rhs[pair_index(e, t.right, dh)] += t.coeff * img[e];
        }
        if (lhs != rhs) witness = name_of(src.labels, x);
    }
    rep.add("comodule-map", witness.empty(), witness);
    return rep;
}

void require_square(const Functional2& r, std::size_t d, const char* what)
{
    if (r.values.rows() != d || r.values.cols() != d)
        throw DimensionError(std::string(what) + ": r-form shape does not match the Hopf algebra");
}

// Matrix whose j-th column is S_1(e_j) (which = 1) or S_2(e_j) (which = 2).
Matrix s_matrix(const HopfAlgebra& h, const Functional2& sigma_inv, const Matrix& s_inv, int which)
{
    const std::size_t d = h.dim();
    Matrix out(h.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vector v = zero_vector(h.field(), d);
        for (const auto& t : h.coalgebra.comult2(j)) {
            if (which == 1) {
                Scalar c = sigma_inv.apply_left(h.antipode.column(t.b), t.c);
                if (!c.is_zero()) axpy(v, t.coeff * c, h.antipode.column(t.a));
            } else {
                Scalar c = sigma_inv.apply_right(t.c, s_inv.column(t.b));
                if (!c.is_zero()) axpy(v, t.coeff * c, s_inv.column(t.a));
            }
        }
        out.set_column(j, v);
    }
    return out;
}

// Product in H (x) H on coefficient matrices: (a (x) b)(c (x) d) = ac (x) bd.
Matrix tensor_square_product(const HopfAlgebra& h, const Matrix& x, const Matrix& y)
{
    const std::size_t d = h.dim();
    Matrix out(h.field(), d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (x(a, b).is_zero()) continue;
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    if (y(c, e).is_zero()) continue;
                    Scalar coeff = x(a, b) * y(c, e);
                    const Vector& left = h.product(a, c);
                    const Vector& right = h.product(b, e);
                    for (std::size_t i = 0; i < d; ++i) {
                        if (left[i].is_zero()) continue;
                        for (std::size_t j = 0; j < d; ++j)
                            if (!right[j].is_zero()) out(i, j) += coeff * left[i] * right[j];
                    }
                }
        }
    return out;
}

Matrix tensor_square_inverse(const HopfAlgebra& h, const Matrix& x)
{
    const std::size_t d = h.dim();
    const Field& f = h.field();
    Matrix left(f, d * d, d * d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
            Matrix unit(f, d, d);
            unit(c, e) = f.one();
            Matrix prod = tensor_square_product(h, x, unit);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) left(pair_index(i, j, d), pair_index(c, e, d)) = prod(i, j);
        }
    Vector one = tensor(h.algebra.unit, h.algebra.unit);
    Vector sol;
    try {
        sol = solve(left, one);
    } catch (const NotInvertible&) {
        throw StructuralError("C is not invertible in H(x)H");
    }
    Matrix inv(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv(i, j) = sol[pair_index(i, j, d)];
    Matrix unit_m(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) unit_m(i, j) = one[pair_index(i, j, d)];
    if (tensor_square_product(h, inv, x) != unit_m) throw StructuralError("C has no two-sided inverse in H(x)H");
    return inv;
}

} // namespace

BraidedMapMatrix build_F(const ComoduleAlgebra& a, const Functional2& r)
{
    const std::size_t m = a.dim();
    const Algebra& alg = a.algebra;
    require_square(r, a.hopf->dim(), "build_F");
    Matrix out(a.field(), m * m, m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                Vector value = zero_vector(a.field(), m);
                for (const auto& ct : a.coaction[c])
                    for (const auto& bt : a.coaction[b]) {
                        const Scalar& rv = r.values(ct.right, bt.right);
                        if (rv.is_zero()) continue;
                        axpy(value, ct.coeff * bt.coeff * rv, times_basis(alg, alg.product(x, ct.left), bt.left));
                    }
                store_value(out, pair_index(x, b, m), c, value, m);
            }
    return {MapKind::F, m * m, m * m, out};
}

BraidedMapMatrix build_G(const ComoduleAlgebra& a, const Functional2& r)
{
    const std::size_t m = a.dim();
    const Algebra& alg = a.algebra;
    require_square(r, a.hopf->dim(), "build_G");
    Matrix out(a.field(), m * m, m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                Vector value = zero_vector(a.field(), m);
                for (const auto& xt : a.coaction[x])
                    for (const auto& ct : a.coaction[c]) {
                        const Scalar& rv = r.values(xt.right, ct.right);
                        if (rv.is_zero()) continue;
                        axpy(value, xt.coeff * ct.coeff * rv, times_basis(alg, alg.product(xt.left, ct.left), b));
                    }
                store_value(out, pair_index(x, b, m), c, value, m);
            }
    return {MapKind::G, m * m, m * m, out};
}

Report check_F_morphism(const ComoduleAlgebra& a, const Functional2& r)
{
    ComoduleAlgebra src = smash_product(a, braided_opposite(a, r), r);
    ComoduleAlgebra end = end_algebra(a.comodule(), EndVariant::plain);
    return check_morphism(src, end, build_F(a, r).matrix, a.dim(), false);
}

Report check_G_morphism(const ComoduleAlgebra& a, const Functional2& r)
{
    ComoduleAlgebra src = smash_product(braided_opposite(a, r), a, r);
    ComoduleAlgebra end = end_algebra(a.comodule(), EndVariant::op);
    return check_morphism(src, end, build_G(a, r).matrix, a.dim(), true);
}

BraidedMapMatrix build_F_via_twisted_rform(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r)
{
    ComoduleAlgebra as = build_a_sigma(h, sigma);
    Functional2 rs = twisted_rform(r, sigma, h);
    const std::size_t d = h.dim();
    Matrix out(h.field(), d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l) {
                Vector value = zero_vector(h.field(), d);
                for (const auto& lt : h.comult(l))
                    for (const auto& kt : h.comult(k)) {
                        const Scalar& rv = rs.values(lt.left, kt.left);
                        if (rv.is_zero()) continue;
                        axpy(value, lt.coeff * kt.coeff * rv, times_basis(as.algebra, as.algebra.product(x, kt.right), lt.right));
                    }
                store_value(out, pair_index(x, k, d), l, value, d);
            }
    return {MapKind::F, d * d, d * d, out};
}

BraidedMapMatrix build_G_via_twisted_rform(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r)
{
    ComoduleAlgebra as = build_a_sigma(h, sigma);
    Functional2 rs = twisted_rform(r, sigma, h);
    const std::size_t d = h.dim();
    Matrix out(h.field(), d * d, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l) {
                Vector value = zero_vector(h.field(), d);
                for (const auto& xt : h.comult(x))
                    for (const auto& lt : h.comult(l)) {
                        const Scalar& rv = rs.values(xt.left, lt.left);
                        if (rv.is_zero()) continue;
                        axpy(value, xt.coeff * lt.coeff * rv, times_basis(as.algebra, as.algebra.product(lt.right, xt.right), k));
                    }
                store_value(out, pair_index(x, k, d), l, value, d);
            }
    return {MapKind::G, d * d, d * d, out};
}

BraidedMapMatrix theta_of_rform(const Functional2& r, const HopfAlgebra& h)
{
    require_square(r, h.dim(), "theta_of_rform");
    Report rep = check_dqt_rform(r, h);
    if (!rep.all_passed()) {
        const CheckResult* bad = rep.find(rep.first_failure());
        throw StructuralError("not a universal r-form: " + bad->name + " fails at " + bad->witness);
    }
    return {MapKind::theta_r, h.dim(), h.dim(), r.values};
}

Report check_theta_hopf_map(const Functional2& r, const HopfAlgebra& h)
{
    require_square(r, h.dim(), "check_theta_hopf_map");
    Report rep;
    const std::size_t d = h.dim();
    const Vector& eps = h.coalgebra.counit;
    const Vector& one = h.algebra.unit;

    std::string witness;
    for (std::size_t a = 0; a < d && witness.empty(); ++a)
        if (r.apply(h.basis(a), one) != eps[a]) witness = h.label(a);
    rep.add("theta-unit", witness.empty(), witness);

    witness.clear();
    for (std::size_t x = 0; x < d && witness.empty(); ++x)
        if (r.apply_right(x, one) != eps[x]) witness = h.label(x);
    rep.add("theta-counit", witness.empty(), witness);

    // theta(kh) = theta(h) * theta(k) in H*, and theta(h)(xy) = sum theta(h_1)(x) theta(h_2)(y).
    witness.clear();
    for (std::size_t k = 0; k < d && witness.empty(); ++k)
        for (std::size_t hh = 0; hh < d && witness.empty(); ++hh) {
            Functional1 left{zero_vector(h.field(), d)};
            for (std::size_t a = 0; a < d; ++a) left.values[a] = r.apply(h.basis(a), h.product(k, hh));
            Functional1 th{r.values.column(hh)}, tk{r.values.column(k)};
            if (left != convolve(th, tk, h)) witness = "(" + h.label(k) + "," + h.label(hh) + ")";
        }
    rep.add("theta-multiplicative", witness.empty(), witness);

    witness.clear();
    for (std::size_t hh = 0; hh < d && witness.empty(); ++hh)
        for (std::size_t x = 0; x < d && witness.empty(); ++x)
            for (std::size_t y = 0; y < d; ++y) {
                Scalar lhs = r.apply(h.product(x, y), h.basis(hh));
                Scalar rhs = h.field().zero();
                for (const auto& t : h.comult(hh)) rhs += t.coeff * r.values(x, t.left) * r.values(y, t.right);
                if (lhs != rhs) {
                    witness = "(" + h.label(hh) + "," + h.label(x) + "," + h.label(y) + ")";
                    break;
                }
            }
    rep.add("theta-comultiplicative", witness.empty(), witness);
    return rep;
}

AzumayaEvidence is_azumaya(const ComoduleAlgebra& a, const Functional2& r)
{
    Scalar df = det(build_F(a, r).matrix);
    Scalar dg = det(build_G(a, r).matrix);
    return {!df.is_zero() && !dg.is_zero(), df, dg};
}

CleftEvidence is_azumaya_cleft(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r)
{
    Functional2 rs = twisted_rform(r, sigma, h);
    BraidedMapMatrix theta = theta_of_rform(rs, doi_twist(h, sigma));
    Scalar dt = det(theta.matrix);
    return {!dt.is_zero(), dt, rs};
}

Functional1 left_integral_dual(const HopfAlgebra& h)
{
    const std::size_t d = h.dim();
    Matrix system(h.field(), d * d, d);
    for (std::size_t x = 0; x < d; ++x) {
        for (const auto& t : h.comult(x)) system(pair_index(x, t.left, d), t.right) += t.coeff;
        for (std::size_t out = 0; out < d; ++out)
            if (!h.algebra.unit[out].is_zero()) system(pair_index(x, out, d), x) -= h.algebra.unit[out];
    }
    std::vector<Vector> ker = kernel_basis(system);
    if (ker.size() != 1)
        throw StructuralError("space of left integrals of H* has dimension " + std::to_string(ker.size()) + ", expected 1");
    Vector z = ker.front();
    for (const auto& c : z)
        if (!c.is_zero()) {
            Scalar inv = c.inverse();
            for (auto& x : z) x = x * inv;
            break;
        }
    return {z};
}

IntegralMaps integral_maps(const HopfAlgebra& h, const Functional1& zeta)
{
    const std::size_t d = h.dim();
    Matrix v(h.field(), d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t x = 0; x < d; ++x) v(k, x) = zeta.apply(basis_times(h.algebra, k, h.antipode.column(x)));
    if (det(v).is_zero()) throw StructuralError("h -> v(h) is not bijective; zeta is not a nonzero left integral");
    Matrix w = antipode_inverse(h).transpose() * v;
    return {v, w};
}

std::pair<Functional1, Functional1> v_w_functionals(const HopfAlgebra& h, const Functional1& zeta, std::size_t index)
{
    IntegralMaps maps = integral_maps(h, zeta);
    return {Functional1{maps.v.column(index)}, Functional1{maps.w.column(index)}};
}

Report check_integral_identities(const HopfAlgebra& h)
{
    const std::size_t d = h.dim();
    const Field& f = h.field();
    IntegralMaps maps = integral_maps(h, left_integral_dual(h));
    Matrix s_inv = antipode_inverse(h);
    Report rep;
    std::string w1, w2, w3;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < d; ++k) {
            Vector l1 = zero_vector(f, d), r1 = l1, l2 = l1, r2 = l1, l3 = l1, r3 = l1;
            for (const auto& t : h.comult(k)) {
                l1[t.left] += t.coeff * maps.v(t.right, x);
                axpy(l2, t.coeff * maps.w(t.left, x), s_inv.column(t.right));
                l3[t.right] += t.coeff * maps.w(t.left, x);
            }
            for (const auto& t : h.comult(x)) {
                r1[t.right] += t.coeff * maps.v(k, t.left);
                r2[t.right] += t.coeff * maps.w(k, t.left);
                axpy(r3, t.coeff * maps.w(k, t.left), h.antipode.column(t.right));
            }
            std::string where = "(" + h.label(x) + "," + h.label(k) + ")";
            if (w1.empty() && l1 != r1) w1 = where;
            if (w2.empty() && l2 != r2) w2 = where;
            if (w3.empty() && l3 != r3) w3 = where;
        }
    rep.add("v-hopf-module", w1.empty(), w1);
    rep.add("w-hopf-module", w2.empty(), w2);
    rep.add("w-antipode", w3.empty(), w3);
    return rep;
}

SMaps s1_s2(const HopfAlgebra& h, const Functional2& sigma, std::size_t index)
{
    Functional2 inv = conv_inverse(sigma, h);
    Matrix s_inv = antipode_inverse(h);
    return {s_matrix(h, inv, s_inv, 1).column(index), s_matrix(h, inv, s_inv, 2).column(index)};
}

Report check_s_identities(const HopfAlgebra& h, const Functional2& sigma)
{
    const std::size_t d = h.dim();
    const Field& f = h.field();
    ComoduleAlgebra as = build_a_sigma(h, sigma);
    Functional2 inv = conv_inverse(sigma, h);
    Matrix s_inv = antipode_inverse(h);
    Matrix s1 = s_matrix(h, inv, s_inv, 1), s2 = s_matrix(h, inv, s_inv, 2);

    Report rep;
    std::string w[4];
    for (std::size_t x = 0; x < d; ++x) {
        Vector sums[4] = {zero_vector(f, d), zero_vector(f, d), zero_vector(f, d), zero_vector(f, d)};
        for (const auto& t : h.comult(x)) {
            axpy(sums[0], t.coeff, basis_times(as.algebra, t.right, s1.column(t.left)));
            axpy(sums[1], t.coeff, times_basis(as.algebra, s2.column(t.left), t.right));
            axpy(sums[2], t.coeff, times_basis(as.algebra, s1.column(t.right), t.left));
            axpy(sums[3], t.coeff, basis_times(as.algebra, t.left, s2.column(t.right)));
        }
        Vector expected = zero_vector(f, d);
        axpy(expected, h.coalgebra.counit[x], as.algebra.unit);
        for (int i = 0; i < 4; ++i)
            if (w[i].empty() && sums[i] != expected) w[i] = h.label(x);
    }
    rep.add("h2.S1(h1)", w[0].empty(), w[0]);
    rep.add("S2(h1).h2", w[1].empty(), w[1]);
    rep.add("S1(h2).h1", w[2].empty(), w[2]);
    rep.add("h1.S2(h2)", w[3].empty(), w[3]);
    return rep;
}

Vector rank_one_endomorphism(const Functional1& eta, const Vector& m)
{
    if (eta.values.size() != m.size()) throw DimensionError("rank_one_endomorphism: eta and m have different lengths");
    const std::size_t d = m.size();
    Vector out = zero_vector(m.empty() ? Field::rational() : m.front().field(), d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[pair_index(i, j, d)] = m[i] * eta.values[j];
    return out;
}

RankOnePreimage rank_one_preimage(const HopfAlgebra& h, const Functional2& sigma, const Functional2& r,
                                  const Functional1& eta, const Vector& m)
{
    const std::size_t d = h.dim();
    const Field& f = h.field();
    if (eta.values.size() != d || m.size() != d) throw DimensionError("rank_one_preimage: eta and m must have length dim H");

    ComoduleAlgebra as = build_a_sigma(h, sigma);
    HopfAlgebra twisted = doi_twist(h, sigma);
    Functional2 rs = twisted_rform(r, sigma, h);
    Matrix t_inv = inverse(rs.values);
    Matrix t_inv_tr = t_inv.transpose();
    Functional2 inv = conv_inverse(sigma, h);
    Matrix s_inv = antipode_inverse(h);
    Matrix s1 = s_matrix(h, inv, s_inv, 1), s2 = s_matrix(h, inv, s_inv, 2);
    IntegralMaps maps = integral_maps(h, left_integral_dual(h));
    Vector pre = solve(maps.w, eta.values);

    const Algebra& alg = as.algebra;
    RankOnePreimage out{zero_vector(f, d * d), zero_vector(f, d * d)};
    for (std::size_t x = 0; x < d; ++x) {
        if (pre[x].is_zero()) continue;
        for (const auto& t : h.comult(x)) {
            Scalar c0 = pre[x] * t.coeff;
            Vector w1 = maps.w.column(t.left);
            Vector sh2 = h.antipode.column(t.right);
            Vector left_factor = alg.multiply(m, s2 * sh2);
            Vector right_factor = alg.multiply(s1 * sh2, m);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    Scalar c = c0 * dot(w1, twisted.product(a, b));
                    if (c.is_zero()) continue;
                    Vector g_left = alg.multiply(left_factor, s1 * t_inv.column(b));
                    Vector g = tensor(g_left, t_inv.column(a));
                    axpy(out.gamma, c, g);
                    Vector gp_right = alg.multiply(s2 * t_inv_tr.column(a), right_factor);
                    axpy(out.gamma_prime, c, tensor(t_inv_tr.column(b), gp_right));
                }
        }
    }
    return out;
}

DualPictureEvidence dual_picture_test(const HopfAlgebra& h, const Matrix& R, const Matrix& C)
{
    const std::size_t d = h.dim();
    if (R.rows() != d || R.cols() != d || C.rows() != d || C.cols() != d)
        throw DimensionError("dual_picture_test: R and C must be dim H x dim H");
    HopfAlgebra hd = dualize(h);
    Report rq = check_dqt_rform(Functional2{R}, hd);
    if (!rq.all_passed()) throw StructuralError("R is not quasitriangular: " + rq.first_failure() + " fails");
    Report rc = check_left_2cocycle(Functional2{C}, hd);
    if (!rc.all_passed()) throw StructuralError("C is not a cocycle for H*: " + rc.first_failure() + " fails");

    Matrix rc_elem = tensor_square_product(h, tensor_square_product(h, C.transpose(), R), tensor_square_inverse(h, C));
    Scalar direct = det(rc_elem);
    CleftEvidence dual = is_azumaya_cleft(hd, Functional2{C}, Functional2{R});
    return {!direct.is_zero(), direct, dual.det_theta, direct == dual.det_theta && dual.r_sigma.values == rc_elem};
}

} // namespace hopfaz
