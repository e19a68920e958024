#include "hopfaz/en_family.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "hopfaz/error.hpp"

namespace hopfaz {

namespace {

int popcount(unsigned m) { return std::popcount(m); }

// Sign of sorting the concatenation x_P x_Q into increasing order; 0 on overlap.
int merge_sign(unsigned p, unsigned q)
{
    if (p & q) return 0;
    int swaps = 0;
    for (unsigned i = 0; i < 32; ++i)
        if ((q >> i) & 1u) swaps += popcount(p >> (i + 1));
    return swaps % 2 ? -1 : 1;
}

int permutation_sign(const std::vector<std::size_t>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::vector<std::size_t> mask_elements(unsigned mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

// Product of two elements of an algebra (x) H given as dense vectors over pair_index.
Vector tensor_product_in(const Algebra& left, const Algebra& right, const Vector& x, const Vector& y)
{
    const std::size_t dl = left.dim, dr = right.dim;
    Vector out = zero_vector(left.field, dl * dr);
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < y.size(); ++q) {
            if (y[q].is_zero()) continue;
            Scalar c = x[p] * y[q];
            const Vector& l = left.product(p / dr, q / dr);
            const Vector& r = right.product(p % dr, q % dr);
            for (std::size_t i = 0; i < dl; ++i) {
                if (l[i].is_zero()) continue;
                for (std::size_t j = 0; j < dr; ++j)
                    if (!r[j].is_zero()) out[pair_index(i, j, dr)] += c * l[i] * r[j];
            }
        }
    }
    return out;
}

std::vector<Term> to_terms(const Vector& flat, std::size_t dr)
{
    std::vector<Term> out;
    for (std::size_t p = 0; p < flat.size(); ++p)
        if (!flat[p].is_zero()) out.push_back({flat[p], p / dr, p % dr});
    return out;
}

// Generators 0 = u (or c), i = v_i (or x_i); a word is a sequence of generators.
using Word = std::vector<std::size_t>;

std::size_t word_index(const Word& w)
{
    unsigned a = 0, mask = 0;
    for (std::size_t g : w) {
        if (g == 0)
            a = 1;
        else
            mask |= 1u << (g - 1);
    }
    return MonomialBasis::index(a, mask);
}

Word index_word(std::size_t i)
{
    Word w;
    if (MonomialBasis::c_power(i)) w.push_back(0);
    for (std::size_t e : mask_elements(MonomialBasis::mask(i))) w.push_back(e + 1);
    return w;
}

// Normal-order rewriting of a word in the Clifford generators: g g -> square(g),
// b a -> kappa(a, b) - a b for b > a.
template <class Square, class Kappa>
std::map<Word, Scalar> normal_form(const Word& word, const Field& f, Square square, Kappa kappa)
{
    std::map<Word, Scalar> result;
    std::vector<std::pair<Word, Scalar>> stack{{word, f.one()}};
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (c.is_zero()) continue;
        std::size_t k = 0;
        while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            auto it = result.find(w);
            if (it == result.end())
                result.emplace(w, c);
            else
                it->second += c;
            continue;
        }
        std::size_t b = w[k], a = w[k + 1];
        Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
        if (a == b) {
            stack.emplace_back(shorter, c * square(a));
        } else {
            stack.emplace_back(shorter, c * kappa(a, b));
            Word swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            stack.emplace_back(std::move(swapped), -c);
        }
    }
    return result;
}

Vector pair_vector(const Field& f, std::size_t dl, std::size_t dr, std::size_t i, std::size_t j)
{
    Vector v = zero_vector(f, dl * dr);
    v[pair_index(i, j, dr)] = f.one();
    return v;
}

} // namespace

ENParams ENParams::zero(std::size_t n, const Field& f)
{
    if (n == 0) throw ParameterError("n must be at least 1");
    ENParams p;
    p.n = n;
    p.A = Matrix(f, n, n);
    p.alpha = f.one();
    p.gamma = zero_vector(f, n);
    p.Lambda = Matrix(f, n, n);
    return p;
}

ENParams ENParams::h4(const Scalar& alpha, const Scalar& gamma, const Scalar& lambda, const Scalar& t)
{
    ENParams p = zero(1, alpha.field());
    p.alpha = alpha;
    p.gamma = {gamma};
    p.Lambda(0, 0) = lambda;
    p.A(0, 0) = t;
    return p;
}

void ENParams::validate() const
{
    if (n == 0) throw ParameterError("n must be at least 1");
    if (A.rows() != n || A.cols() != n) throw ParameterError("A must be " + std::to_string(n) + "x" + std::to_string(n));
    if (Lambda.rows() != n || Lambda.cols() != n)
        throw ParameterError("Lambda must be " + std::to_string(n) + "x" + std::to_string(n));
    if (gamma.size() != n) throw ParameterError("gamma must have length " + std::to_string(n));
    const Field& f = field();
    if (!(Lambda.field() == f) || !(alpha.field() == f)) throw FieldMismatch("parameters live in different fields");
    for (const auto& g : gamma)
        if (!(g.field() == f)) throw FieldMismatch("parameters live in different fields");
    if (alpha.is_zero()) throw ParameterError("alpha must be nonzero");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!Lambda(i, j).is_zero())
                throw ParameterError("Lambda must be lower triangular; entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") is nonzero");
}

Matrix ENParams::B() const { return A - Lambda - Lambda.transpose(); }

Matrix ENParams::Gamma() const
{
    Matrix g(field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = gamma[i] * gamma[j];
    return g;
}

std::string MonomialBasis::label(std::size_t i, char group, char nilpotent) const
{
    std::string out;
    if (c_power(i)) out += group;
    for (std::size_t e : mask_elements(mask(i))) out += nilpotent + std::to_string(e + 1);
    return out.empty() ? "1" : out;
}

std::vector<std::string> MonomialBasis::labels(char group, char nilpotent) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(label(i, group, nilpotent));
    return out;
}

HopfAlgebra build_en(std::size_t n, const Field& f)
{
    if (n == 0) throw ParameterError("n must be at least 1");
    if (n > 8) throw ParameterError("n is limited to 8");
    MonomialBasis basis{n};
    const std::size_t d = basis.size();
    HopfAlgebra h;
    h.labels = basis.labels();

    Algebra& alg = h.algebra;
    alg.field = f;
    alg.dim = d;
    alg.mult.assign(d * d, zero_vector(f, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            unsigned p = MonomialBasis::mask(i), q = MonomialBasis::mask(j);
            int sign = merge_sign(p, q);
            if (sign == 0) continue;
            // x_P c^b = (-1)^{b|P|} c^b x_P
            if (MonomialBasis::c_power(j) && popcount(p) % 2) sign = -sign;
            unsigned a = MonomialBasis::c_power(i) ^ MonomialBasis::c_power(j);
            alg.mult[i * d + j][MonomialBasis::index(a, p | q)] = f.from_int(sign);
        }
    alg.unit = basis_vector(f, d, 0);

    // Delta(c) = c (x) c, Delta(x_i) = 1 (x) x_i + x_i (x) c, extended multiplicatively.
    Coalgebra& co = h.coalgebra;
    co.field = f;
    co.dim = d;
    co.comult.resize(d);
    const std::size_t c = MonomialBasis::c;
    for (std::size_t i = 0; i < d; ++i) {
        Vector delta = pair_vector(f, d, d, 0, 0);
        for (std::size_t g : index_word(i)) {
            Vector gen = g == 0 ? pair_vector(f, d, d, c, c) : pair_vector(f, d, d, 0, MonomialBasis::x(g));
            if (g != 0) gen[pair_index(MonomialBasis::x(g), c, d)] = f.one();
            delta = tensor_product_in(alg, alg, delta, gen);
        }
        co.comult[i] = to_terms(delta, d);
    }
    co.counit = zero_vector(f, d);
    co.counit[0] = f.one();
    co.counit[c] = f.one();

    // S(c) = c, S(x_j) = c x_j, anti-multiplicative.
    h.antipode = Matrix(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector s = basis_vector(f, d, 0);
        for (std::size_t g : index_word(i)) {
            Vector sg = basis_vector(f, d, g == 0 ? c : MonomialBasis::cx(g));
            s = alg.multiply(sg, s);
        }
        h.antipode.set_column(i, s);
    }
    return h;
}

Functional2 rform_en(const Matrix& A)
{
    if (!A.is_square() || A.rows() == 0) throw ParameterError("A must be a nonempty square matrix");
    const std::size_t n = A.rows();
    const Field& f = A.field();
    const std::size_t d = std::size_t{2} << n;
    Matrix r(f, d, d);
    for (unsigned pm = 0; pm < (1u << n); ++pm) {
        std::vector<std::size_t> p = mask_elements(pm);
        const std::size_t s = p.size();
        for (unsigned fm = 0; fm < (1u << n); ++fm) {
            if (static_cast<std::size_t>(popcount(fm)) != s) continue;
            std::vector<std::size_t> fe = mask_elements(fm);
            std::vector<std::size_t> eta(s);
            for (std::size_t k = 0; k < s; ++k) eta[k] = k;
            Scalar coeff = f.zero();
            do {
                Scalar term = f.from_int(permutation_sign(eta));
                for (std::size_t k = 0; k < s; ++k) term *= A(p[k], fe[eta[k]]);
                coeff += term;
            } while (std::next_permutation(eta.begin(), eta.end()));
            if ((s * (s - 1) / 2) % 2) coeff = -coeff;
            if (coeff.is_zero()) continue;
            Scalar parity = s % 2 ? -f.one() : f.one();
            r(MonomialBasis::index(0, pm), MonomialBasis::index(0, fm)) += coeff;
            r(MonomialBasis::index(1, pm), MonomialBasis::index(0, fm)) += coeff;
            r(MonomialBasis::index(0, pm), MonomialBasis::index(1, fm)) += parity * coeff;
            r(MonomialBasis::index(1, pm), MonomialBasis::index(1, fm)) -= parity * coeff;
        }
    }
    return {r};
}

ComoduleAlgebra build_clifford(const ENParams& p) { return build_clifford(p, std::make_shared<const HopfAlgebra>(build_en(p.n, p.field()))); }

ComoduleAlgebra build_clifford(const ENParams& p, std::shared_ptr<const HopfAlgebra> en)
{
    p.validate();
    const std::size_t n = p.n;
    const Field& f = p.field();
    MonomialBasis basis{n};
    const std::size_t d = basis.size();
    if (!en || en->dim() != d) throw DimensionError("build_clifford: Hopf algebra is not E(" + std::to_string(n) + ")");

    auto square = [&](std::size_t g) { return g == 0 ? p.alpha : p.Lambda(g - 1, g - 1); };
    auto kappa = [&](std::size_t a, std::size_t b) {
        if (a == 0) return p.gamma[b - 1];
        return p.Lambda(a - 1, b - 1) + p.Lambda(b - 1, a - 1);
    };

    ComoduleAlgebra cl;
    cl.labels = basis.labels('u', 'v');
    cl.algebra.field = f;
    cl.algebra.dim = d;
    cl.algebra.mult.assign(d * d, zero_vector(f, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Word w = index_word(i);
            Word wj = index_word(j);
            w.insert(w.end(), wj.begin(), wj.end());
            for (const auto& [nf, c] : normal_form(w, f, square, kappa)) cl.algebra.mult[i * d + j][word_index(nf)] += c;
        }
    cl.algebra.unit = basis_vector(f, d, 0);

    const std::size_t c = MonomialBasis::c;
    cl.coaction.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector rho = pair_vector(f, d, d, 0, 0);
        for (std::size_t g : index_word(i)) {
            Vector gen = g == 0 ? pair_vector(f, d, d, c, c) : pair_vector(f, d, d, 0, MonomialBasis::x(g));
            if (g != 0) gen[pair_index(MonomialBasis::x(g), c, d)] = f.one();
            rho = tensor_product_in(cl.algebra, en->algebra, rho, gen);
        }
        cl.coaction[i] = to_terms(rho, d);
    }
    cl.hopf = std::move(en);
    return cl;
}

Functional2 derive_cocycle_from_cleft(const ComoduleAlgebra& b, const HopfAlgebra& h,
                                      const std::vector<std::size_t>& section)
{
    const std::size_t d = h.dim(), m = b.dim();
    const Field& f = h.field();
    if (section.size() != d) throw DimensionError("section must assign a basis element of B to every basis element of H");
    if (m != d) throw DimensionError("a cleft extension of the base field has the dimension of H");
    for (std::size_t s : section)
        if (s >= m) throw DimensionError("section index out of range");

    // psi = phi^-1: sum phi(h_1) psi(h_2) = eps(h) 1_B, unknown psi[h2][k] at h2 * m + k.
    Matrix system(f, d * m, d * m);
    Vector rhs = zero_vector(f, d * m);
    for (std::size_t x = 0; x < d; ++x) {
        for (const auto& t : h.comult(x))
            for (std::size_t k = 0; k < m; ++k) {
                const Vector& prod = b.algebra.product(section[t.left], k);
                for (std::size_t q = 0; q < m; ++q)
                    if (!prod[q].is_zero()) system(x * m + q, t.right * m + k) += t.coeff * prod[q];
            }
        for (std::size_t q = 0; q < m; ++q) rhs[x * m + q] = h.coalgebra.counit[x] * b.algebra.unit[q];
    }
    Vector sol;
    try {
        sol = solve(system, rhs);
    } catch (const NotInvertible&) {
        throw NotInvertible("section is not convolution invertible");
    }
    std::vector<Vector> psi(d, zero_vector(f, m));
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < m; ++k) psi[x][k] = sol[x * m + k];
    auto psi_of = [&](const Vector& v) {
        Vector out = zero_vector(f, m);
        for (std::size_t x = 0; x < d; ++x)
            if (!v[x].is_zero()) axpy(out, v[x], psi[x]);
        return out;
    };

    std::size_t unit_pos = 0;
    while (unit_pos < m && b.algebra.unit[unit_pos].is_zero()) ++unit_pos;
    if (unit_pos == m) throw StructuralError("B has zero unit");
    Scalar unit_inv = b.algebra.unit[unit_pos].inverse();

    Matrix sigma(f, d, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector total = zero_vector(f, m);
            for (const auto& xt : h.comult(x))
                for (const auto& yt : h.comult(y)) {
                    const Vector& phi_prod = b.algebra.product(section[xt.left], section[yt.left]);
                    Vector inv = psi_of(h.product(xt.right, yt.right));
                    axpy(total, xt.coeff * yt.coeff, b.algebra.multiply(phi_prod, inv));
                }
            Scalar value = total[unit_pos] * unit_inv;
            Vector expected = zero_vector(f, m);
            axpy(expected, value, b.algebra.unit);
            if (total != expected)
                throw StructuralError("non-scalar cocycle value at (" + h.label(x) + "," + h.label(y) + ")");
            sigma(x, y) = value;
        }
    return {sigma};
}

Functional2 cocycle_en(const ENParams& p) { return cocycle_en(p, build_en(p.n, p.field())); }

Functional2 cocycle_en(const ENParams& p, const HopfAlgebra& en)
{
    ComoduleAlgebra cl = build_clifford(p, std::make_shared<const HopfAlgebra>(en));
    std::vector<std::size_t> section(en.dim());
    for (std::size_t i = 0; i < section.size(); ++i) section[i] = i;
    return derive_cocycle_from_cleft(cl, en, section);
}

CriterionResult en_azumaya_criterion(const ENParams& p)
{
    p.validate();
    Scalar two_alpha = p.field().from_int(2) * p.alpha;
    Matrix m = two_alpha * p.B() + p.Gamma();
    Scalar d = det(m);
    return {!d.is_zero(), d, m};
}

std::vector<TableEntry> rsigma_generator_table(const ENParams& p)
{
    p.validate();
    HopfAlgebra en = build_en(p.n, p.field());
    Functional2 rs = twisted_rform(rform_en(p.A), cocycle_en(p, en), en);
    const Field& f = p.field();
    const Scalar ainv = p.alpha.inverse();
    const Matrix b = p.B();
    const std::size_t c = MonomialBasis::c;
    std::vector<TableEntry> out;
    auto add = [&](const std::string& family, std::size_t l, std::size_t r, const Scalar& expected) {
        out.push_back({family, en.label(l), en.label(r), rs.values(l, r), expected});
    };
    add("r(c,c)", c, c, -f.one());
    for (std::size_t j = 1; j <= p.n; ++j) {
        const Scalar& g = p.gamma[j - 1];
        add("r(x_j,c)", MonomialBasis::x(j), c, -ainv * g);
        add("r(c,x_j)", c, MonomialBasis::x(j), -ainv * g);
        add("r(c,cx_j)", c, MonomialBasis::cx(j), g);
        add("r(cx_j,c)", MonomialBasis::cx(j), c, g);
    }
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = 1; j <= p.n; ++j) {
            const Scalar& bij = b(i - 1, j - 1);
            add("r(cx_i,cx_j)", MonomialBasis::cx(i), MonomialBasis::cx(j), p.alpha * bij);
            add("r(x_i,x_j)", MonomialBasis::x(i), MonomialBasis::x(j), ainv * bij);
            add("r(cx_i,x_j)", MonomialBasis::cx(i), MonomialBasis::x(j), bij + ainv * p.gamma[i - 1] * p.gamma[j - 1]);
            add("r(x_i,cx_j)", MonomialBasis::x(i), MonomialBasis::cx(j), -bij);
        }
    return out;
}

std::vector<TableEntry> sigma_generator_table(const ENParams& p)
{
    p.validate();
    HopfAlgebra en = build_en(p.n, p.field());
    Functional2 s = cocycle_en(p, en);
    Functional2 si = conv_inverse(s, en);
    const Field& f = p.field();
    const Scalar ainv = p.alpha.inverse();
    const std::size_t c = MonomialBasis::c;
    std::vector<TableEntry> out;
    auto add = [&](const Functional2& fn, const std::string& family, std::size_t l, std::size_t r, const Scalar& expected) {
        out.push_back({family, en.label(l), en.label(r), fn.values(l, r), expected});
    };
    add(s, "sigma(c,c)", c, c, p.alpha);
    add(si, "sigma^-1(c,c)", c, c, ainv);
    for (std::size_t j = 1; j <= p.n; ++j) {
        const Scalar& g = p.gamma[j - 1];
        add(s, "sigma(x_i,c)", MonomialBasis::x(j), c, g);
        add(s, "sigma(c,x_i)", c, MonomialBasis::x(j), f.zero());
        add(s, "sigma(cx_i,c)", MonomialBasis::cx(j), c, g);
        add(s, "sigma(c,cx_i)", c, MonomialBasis::cx(j), f.zero());
        add(si, "sigma^-1(c,x_j)", c, MonomialBasis::x(j), f.zero());
        add(si, "sigma^-1(x_j,c)", MonomialBasis::x(j), c, -ainv * g);
        add(si, "sigma^-1(c,cx_j)", c, MonomialBasis::cx(j), f.zero());
        add(si, "sigma^-1(cx_j,c)", MonomialBasis::cx(j), c, -ainv * g);
    }
    for (std::size_t i = 1; i <= p.n; ++i)
        for (std::size_t j = 1; j <= p.n; ++j) {
            const Scalar& l = p.Lambda(i - 1, j - 1);
            add(s, "sigma(x_i,x_j)", MonomialBasis::x(i), MonomialBasis::x(j), l);
            add(s, "sigma(cx_i,x_j)", MonomialBasis::cx(i), MonomialBasis::x(j), l);
            add(s, "sigma(x_i,cx_j)", MonomialBasis::x(i), MonomialBasis::cx(j), -l);
            add(s, "sigma(cx_i,cx_j)", MonomialBasis::cx(i), MonomialBasis::cx(j), -p.alpha * l);
            add(si, "sigma^-1(x_i,x_j)", MonomialBasis::x(i), MonomialBasis::x(j), -ainv * l);
            add(si, "sigma^-1(cx_i,x_j)", MonomialBasis::cx(i), MonomialBasis::x(j), -l);
            add(si, "sigma^-1(x_i,cx_j)", MonomialBasis::x(i), MonomialBasis::cx(j), l);
            add(si, "sigma^-1(cx_i,cx_j)", MonomialBasis::cx(i), MonomialBasis::cx(j), l);
        }
    return out;
}

Matrix self_duality_map(std::size_t n, const Field& f)
{
    HopfAlgebra en = build_en(n, f);
    HopfAlgebra dual = dualize(en);
    const std::size_t d = en.dim();
    Matrix phi(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector v = dual.algebra.unit;
        for (std::size_t g : index_word(i)) {
            Vector gen = zero_vector(f, d);
            if (g == 0) {
                gen[0] = f.one();
                gen[MonomialBasis::c] = -f.one();
            } else {
                gen[MonomialBasis::x(g)] = f.one();
                gen[MonomialBasis::cx(g)] = f.one();
            }
            v = dual.multiply(v, gen);
        }
        phi.set_column(i, v);
    }
    return phi;
}

Matrix transport_to_element(const Functional2& omega, const Matrix& phi)
{
    Matrix p = inverse(phi);
    return p.transpose() * omega.values * p;
}

} // namespace hopfaz
