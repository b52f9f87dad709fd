#include "hodgedr/exterior.hpp"

#include <stdexcept>

namespace hodgedr {

namespace {

void combos(std::size_t n, std::size_t k, std::size_t start, Mask acc, std::vector<Mask>& out)
{
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + k <= n; ++i)
        combos(n, k - 1, i + 1, acc | (Mask{1} << i), out);
}

std::vector<std::size_t> indices_of(Mask m)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; m >> k; ++k)
        if ((m >> k) & 1U)
            out.push_back(k);
    return out;
}

} // namespace

std::vector<Mask> monomials(std::size_t generators, std::size_t degree)
{
    std::vector<Mask> out;
    if (degree <= generators)
        combos(generators, degree, 0, 0, out);
    return out;
}

int wedge_sign(Mask a, Mask b)
{
    if (a & b)
        return 0;
    // Each pair (i in a, j in b) with i > j costs one transposition.
    std::size_t inversions = 0;
    for (Mask bb = b; bb; bb &= bb - 1) {
        const Mask low = bb & (~bb + 1);
        inversions += popcount(a & ~((low << 1) - 1));
    }
    return inversions % 2 ? -1 : 1;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Form Form::monomial(std::size_t generators, Mask m, Scalar coeff)
{
    Form f(generators);
    f.c_.at(m) = std::move(coeff);
    return f;
}

Form Form::from_coordinates(std::size_t generators, std::size_t degree, const Vector& coords)
{
    const auto basis = monomials(generators, degree);
    if (coords.size() != basis.size())
        throw std::invalid_argument("form coordinates of wrong length");
    Form f(generators);
    for (std::size_t k = 0; k < basis.size(); ++k)
        f.c_[basis[k]] = coords[k];
    return f;
}

Vector Form::coordinates(std::size_t degree) const
{
    const auto basis = monomials(n_, degree);
    Vector v(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        v[k] = c_[basis[k]];
    return v;
}

bool Form::is_zero() const
{
    for (const auto& x : c_)
        if (!x.is_zero())
            return false;
    return true;
}

Form& Form::operator+=(const Form& o)
{
    if (n_ != o.n_)
        throw std::invalid_argument("forms over different generator sets");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

Form& Form::operator*=(const Scalar& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

Form wedge(const Form& a, const Form& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("forms over different generator sets");
    Form out(a.n_);
    for (Mask i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (Mask j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero())
                continue;
            const int s = wedge_sign(i, j);
            if (s == 0)
                continue;
            Scalar t = a.c_[i] * b.c_[j];
            if (s < 0)
                out.c_[i | j] -= t;
            else
                out.c_[i | j] += t;
        }
    }
    return out;
}

ExteriorDerivation::ExteriorDerivation(std::vector<Form> on_generators) : on_generators_(std::move(on_generators))
{
    for (const auto& f : on_generators_)
        if (f.generators() != on_generators_.size())
            throw std::invalid_argument("derivation images over the wrong generator set");
}

Form ExteriorDerivation::apply(Mask monomial) const
{
    const std::size_t n = generators();
    Form out(n);
    const auto idx = indices_of(monomial);
    // d(e_{i1} ∧ ... ∧ e_{ik}) = Σ_s (-1)^s e_{i1} ∧ .. ∧ d e_{is} ∧ .. ∧ e_{ik}
    for (std::size_t s = 0; s < idx.size(); ++s) {
        Mask prefix = 0;
        Mask suffix = 0;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (t < s)
                prefix |= Mask{1} << idx[t];
            else if (t > s)
                suffix |= Mask{1} << idx[t];
        }
        Form term = wedge(wedge(Form::monomial(n, prefix), on_generators_[idx[s]]), Form::monomial(n, suffix));
        out += term * Scalar(s % 2 ? -1 : 1);
    }
    return out;
}

Form ExteriorDerivation::apply(const Form& f) const
{
    Form out(generators());
    for (Mask m = 0; m < (Mask{1} << generators()); ++m)
        if (!f[m].is_zero())
            out += apply(m) * f[m];
    return out;
}

Matrix ExteriorDerivation::matrix(std::size_t degree) const
{
    const std::size_t n = generators();
    const auto src = monomials(n, degree);
    const auto dst = monomials(n, degree + 1);
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Form image = apply(src[c]);
        for (std::size_t r = 0; r < dst.size(); ++r)
            m(r, c) = image[dst[r]];
    }
    return m;
}

Matrix exterior_power(const Matrix& p, std::size_t k)
{
    if (p.rows() != p.cols())
        throw std::invalid_argument("exterior_power of non-square matrix");
    const auto basis = monomials(p.rows(), k);
    Matrix out(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto ri = indices_of(basis[r]);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto ci = indices_of(basis[c]);
            out(r, c) = k == 0 ? Scalar(1) : determinant(p.submatrix(ri, ci));
        }
    }
    return out;
}

} // namespace hodgedr
