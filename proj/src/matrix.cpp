#include "hodgedr/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hodgedr {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const
{
    Matrix t = *this;
    for (auto& x : t.a_)
        x = x.conj();
    return t;
}

Matrix Matrix::conj_transpose() const
{
    return transpose().conj();
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const
{
    Matrix s(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s(r, c) = (*this)(rows[r], cols[c]);
    return s;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_real() const
{
    for (const auto& x : a_)
        if (!x.is_real())
            return false;
    return true;
}

std::size_t Matrix::nonzero_count() const
{
    std::size_t n = 0;
    for (const auto& x : a_)
        n += x.is_zero() ? 0 : 1;
    return n;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : a_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero())
                    p(r, c) += x * b(k, c);
        }
    return p;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (!a(r, c).is_zero() && !v[c].is_zero())
                out[r] += a(r, c) * v[c];
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            m(r, a.cols_ + c) = b(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            m(a.rows_ + r, c) = b(r, c);
    return m;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector conj(const Vector& v)
{
    Vector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        w[k] = v[k].conj();
    return w;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector size mismatch");
    Vector w = a;
    for (std::size_t k = 0; k < a.size(); ++k)
        w[k] += b[k];
    return w;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vector size mismatch");
    Vector w = a;
    for (std::size_t k = 0; k < a.size(); ++k)
        w[k] -= b[k];
    return w;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector w = v;
    for (auto& x : w)
        x *= s;
    return w;
}

Echelon row_echelon(Matrix m)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));

        const Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= f * m(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m)
{
    return row_echelon(m).pivots.size();
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return Scalar(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            const Scalar f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Echelon e = row_echelon(Matrix::hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::domain_error("inverse of singular matrix");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Signature congruence_signature(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("congruence_signature: matrix is not square");
    if (!m.is_real())
        throw std::invalid_argument("congruence_signature: matrix has non-real entries");
    if (!(m == m.transpose()))
        throw std::invalid_argument("congruence_signature: matrix is not symmetric");

    const std::size_t n = m.rows();
    Matrix a = m;
    auto swap_both = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(a(r, i), a(r, j));
    };
    // row_i += row_j, col_i += col_j
    auto add_both = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c)
            a(i, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r)
            a(r, i) += a(r, j);
    };

    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, pivot).is_zero())
            ++pivot;
        if (pivot == n) {
            // Zero diagonal: a nonzero off-diagonal a_ij makes (e_i + e_j) anisotropic.
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!a(i, j).is_zero()) {
                        add_both(i, j);
                        pivot = i;
                        found = true;
                    }
            if (!found) {
                s.zero += n - k;
                break;
            }
        }
        swap_both(k, pivot);
        const Scalar inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero())
                continue;
            const Scalar f = a(i, k) * inv;
            for (std::size_t c = k; c < n; ++c)
                a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r)
                a(r, i) -= f * a(r, k);
        }
        if (a(k, k).re().sign() > 0)
            ++s.positive;
        else
            ++s.negative;
    }
    return s;
}

} // namespace hodgedr
