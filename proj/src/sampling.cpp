#include "hodgedr/sampling.hpp"

#include <stdexcept>

namespace hodgedr {

long Sampler::integer(long lo, long hi)
{
    // Modulo reduction of the raw engine output keeps sequences identical across
    // standard library implementations.
    const auto span = static_cast<std::uint32_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long range, long max_den)
{
    const long den = integer(1, max_den);
    return Rational(integer(-range, range), den);
}

Matrix Sampler::invertible(std::size_t n, long range)
{
    for (;;) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = Scalar(rational(range));
        if (!determinant(m).is_zero())
            return m;
    }
}

LieAlgebraPresentation change_basis(const LieAlgebra& g, const Matrix& a)
{
    const std::size_t n = g.dimension();
    if (a.rows() != n || a.cols() != n || !a.is_real())
        throw std::invalid_argument("change of basis must be a real square matrix of the algebra's dimension");
    const Matrix inv = inverse(a);

    LieAlgebraPresentation out{g.presentation().name, n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // [Y_i, Y_j] in X coordinates.
            std::vector<Rational> x(n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational w = a(k, i).re() * a(l, j).re();
                    if (w.is_zero())
                        continue;
                    for (std::size_t s = 0; s < n; ++s)
                        x[s] += w * g.structure_constant(k, l, s);
                }
            for (std::size_t t = 0; t < n; ++t) {
                Rational c;
                for (std::size_t s = 0; s < n; ++s)
                    c += inv(t, s).re() * x[s];
                if (!c.is_zero())
                    out.brackets.push_back({i, j, t, c});
            }
        }
    return out;
}

AlmostComplexStructure change_basis(const AlmostComplexStructure& acs, const Matrix& a)
{
    return {acs.name, inverse(a) * acs.j * a};
}

Matrix standard_structure(std::size_t dimension)
{
    Matrix j(dimension, dimension);
    for (std::size_t k = 0; k + 1 < dimension; k += 2) {
        j(k + 1, k) = Scalar(1);
        j(k, k + 1) = Scalar(-1);
    }
    return j;
}

AlmostComplexStructure random_structure(Sampler& s, std::size_t dimension, long range)
{
    const Matrix b = s.invertible(dimension, range);
    return {"random", b * standard_structure(dimension) * inverse(b)};
}

} // namespace hodgedr
