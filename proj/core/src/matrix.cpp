#include "hopfaz/matrix.hpp"

#include <string>
#include <utility>

#include "hopfaz/error.hpp"

namespace hopfaz {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector basis_vector(const Field& f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

void axpy(Vector& y, const Scalar& a, const Vector& x)
{
    if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size() || a.empty()) throw DimensionError("dot: length mismatch");
    Scalar s = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v)
{
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero())
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw DimensionError("from_rows: ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix p(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
        }
    return p;
}

Matrix operator*(const Scalar& s, Matrix m)
{
    for (auto& x : m.data_) x *= s;
    return m;
}

Vector operator*(const Matrix& m, const Vector& v)
{
    if (m.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
    Vector out = zero_vector(m.field_, m.rows_);
    for (std::size_t c = 0; c < m.cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < m.rows_; ++r)
            if (!m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    bool odd_swaps = false;
};

// Row echelon form. Over Q the update is the fraction-free Bareiss step, so
// every intermediate entry is a minor of the input; over F_p it is plain
// Gaussian elimination. Stops after `stop_col` columns.
Echelon row_echelon(Matrix a, std::size_t stop_col)
{
    const bool bareiss = a.field().is_rational();
    Echelon e{std::move(a), {}, false};
    Matrix& m = e.reduced;
    Scalar prev = m.field().one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < stop_col && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
            e.odd_swaps = !e.odd_swaps;
        }
        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Scalar lead = m(i, c);
            if (bareiss) {
                for (std::size_t j = c + 1; j < m.cols(); ++j) {
                    Scalar v = pivot * m(i, j);
                    if (!lead.is_zero() && !m(r, j).is_zero()) v -= lead * m(r, j);
                    if (!v.is_zero()) v /= prev;
                    m(i, j) = std::move(v);
                }
            } else if (!lead.is_zero()) {
                const Scalar f = lead / pivot;
                for (std::size_t j = c + 1; j < m.cols(); ++j)
                    if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
            m(i, c) = m.field().zero();
        }
        if (bareiss) prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

Scalar det(const Matrix& m)
{
    if (!m.is_square()) throw DimensionError("det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    if (n == 0) return m.field().one();
    Echelon e = row_echelon(m, n);
    if (e.pivot_cols.size() < n) return m.field().zero();
    Scalar d = m.field().one();
    if (m.field().is_rational()) {
        d = e.reduced(n - 1, n - 1);
    } else {
        for (std::size_t i = 0; i < n; ++i) d *= e.reduced(i, i);
    }
    return e.odd_swaps ? -d : d;
}

std::size_t rank(const Matrix& m) { return row_echelon(m, m.cols()).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const Matrix& m)
{
    Echelon e = row_echelon(m, m.cols());
    const Matrix& a = e.reduced;
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector x = zero_vector(f, m.cols());
        x[free] = f.one();
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Scalar s = f.zero();
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (!a(k, j).is_zero() && !x[j].is_zero()) s += a(k, j) * x[j];
            x[pc] = -s / a(k, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns the solution block.
Matrix gauss_jordan(const Matrix& a, Matrix rhs)
{
    if (!a.is_square()) throw DimensionError("solve: coefficient matrix is not square");
    if (rhs.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong length");
    const std::size_t n = a.rows();
    Matrix m = a;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw NotInvertible("matrix is singular");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(p, j), rhs(c, j));
        }
        const Scalar inv = m(c, c).inverse();
        for (std::size_t j = c; j < n; ++j) m(c, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                if (!rhs(c, j).is_zero()) rhs(i, j) -= f * rhs(c, j);
        }
    }
    return rhs;
}

} // namespace

Matrix inverse(const Matrix& m) { return gauss_jordan(m, Matrix::identity(m.field(), m.rows())); }

Vector solve(const Matrix& a, const Vector& b)
{
    return gauss_jordan(a, Matrix::from_columns(a.field(), b.size(), {b})).column(0);
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(pair_index(i, p, b.rows()), pair_index(j, q, b.cols())) = a(i, j) * b(p, q);
        }
    return k;
}

} // namespace hopfaz
