#include "hodgedr/subspace.hpp"

#include <stdexcept>

namespace hodgedr {

Vector EchelonBuilder::reduce(Vector v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (v[p].is_zero())
            continue;
        const Scalar f = v[p];
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!rows_[k][c].is_zero())
                v[c] -= f * rows_[k][c];
    }
    return v;
}

bool EchelonBuilder::add(const Vector& v)
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector of wrong ambient dimension");
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero())
        ++p;
    if (p == ambient_)
        return false;
    const Scalar inv = r[p].inverse();
    for (auto& x : r)
        x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool EchelonBuilder::in_span(const Vector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector of wrong ambient dimension");
    return is_zero(reduce(v));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    Subspace s(ambient);
    EchelonBuilder eb(ambient);
    for (const auto& v : vectors)
        if (eb.add(v))
            s.basis_.push_back(v);
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
        Vector e(ambient);
        e[k] = Scalar(1);
        s.basis_.push_back(std::move(e));
    }
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& coords)
{
    std::vector<Vector> vs;
    for (std::size_t k : coords) {
        Vector e(ambient);
        e.at(k) = Scalar(1);
        vs.push_back(std::move(e));
    }
    return span(ambient, vs);
}

Matrix Subspace::basis_matrix() const
{
    return Matrix::from_columns(basis_, ambient_);
}

bool Subspace::contains(const Vector& v) const
{
    EchelonBuilder eb(ambient_);
    for (const auto& b : basis_)
        eb.add(b);
    return eb.in_span(v);
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        return false;
    EchelonBuilder eb(ambient_);
    for (const auto& b : basis_)
        eb.add(b);
    for (const auto& v : other.basis_)
        if (!eb.in_span(v))
            return false;
    return true;
}

Subspace Subspace::conj() const
{
    Subspace s(ambient_);
    for (const auto& v : basis_)
        s.basis_.push_back(hodgedr::conj(v));
    return s;
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

Subspace kernel(const Matrix& m)
{
    const Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

Subspace image(const Matrix& m)
{
    std::vector<Vector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return Subspace::span(m.rows(), cols);
}

Subspace image(const Matrix& m, const Subspace& u)
{
    if (u.ambient_dim() != m.cols())
        throw std::invalid_argument("image: subspace not in the domain");
    std::vector<Vector> vs;
    vs.reserve(u.dim());
    for (const auto& b : u.basis())
        vs.push_back(m * b);
    return Subspace::span(m.rows(), vs);
}

Matrix annihilator(const Subspace& v)
{
    // w with w . b = 0 for every basis vector b: the kernel of B^T.
    const Subspace ann = kernel(v.basis_matrix().transpose());
    return Matrix::from_rows(ann.basis(), v.ambient_dim());
}

Subspace preimage(const Matrix& m, const Subspace& v)
{
    if (v.ambient_dim() != m.rows())
        throw std::invalid_argument("preimage: subspace not in the codomain");
    const Matrix w = annihilator(v);
    if (w.rows() == 0)
        return Subspace::full(m.cols());
    return kernel(w * m);
}

SumIntersection sum_intersect(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("sum_intersect: ambient dimension mismatch");
    const std::size_t n = u.ambient_dim();

    std::vector<Vector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    Subspace s = Subspace::span(n, all);

    // (a, b) with U a - V b = 0 gives U a in the intersection.
    const Matrix uv = Matrix::hstack(u.basis_matrix(), v.basis_matrix() * Scalar(-1));
    const Subspace rel = kernel(uv);
    std::vector<Vector> meet;
    for (const auto& coeffs : rel.basis()) {
        Vector x(n);
        for (std::size_t k = 0; k < u.dim(); ++k)
            if (!coeffs[k].is_zero())
                x = x + coeffs[k] * u.basis()[k];
        meet.push_back(std::move(x));
    }
    return {std::move(s), Subspace::span(n, meet)};
}

Subspace sum(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<Vector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), all);
}

Subspace intersect(const Subspace& u, const Subspace& v)
{
    return sum_intersect(u, v).intersection;
}

std::size_t quotient_dim(const Subspace& u, const Subspace& d)
{
    return sum(u, d).dim() - d.dim();
}

std::vector<Vector> complement_basis(const Subspace& u, const Subspace& d)
{
    EchelonBuilder eb(u.ambient_dim());
    for (const auto& b : d.basis())
        eb.add(b);
    std::vector<Vector> out;
    for (const auto& b : u.basis())
        if (eb.add(b))
            out.push_back(b);
    return out;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v, std::size_t ambient)
{
    const Matrix aug = Matrix::hstack(Matrix::from_columns(basis, ambient), Matrix::from_columns({v}, ambient));
    const Echelon e = row_echelon(aug);
    const std::size_t k = basis.size();
    if (!e.pivots.empty() && e.pivots.back() == k)
        return std::nullopt;
    if (e.pivots.size() != k)
        throw std::invalid_argument("coordinates: basis is linearly dependent");
    Vector c(k);
    for (std::size_t r = 0; r < k; ++r)
        c[e.pivots[r]] = e.reduced(r, k);
    return c;
}

} // namespace hodgedr
