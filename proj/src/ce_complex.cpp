#include "hodgedr/ce_complex.hpp"

#include <stdexcept>

#include "hodgedr/errors.hpp"

namespace hodgedr {

Subspace CochainComplex::cocycles(std::size_t n) const
{
    return kernel(d.at(n));
}

Subspace CochainComplex::coboundaries(std::size_t n) const
{
    if (n == 0)
        return Subspace(rank_in_degree(0));
    return image(d.at(n - 1));
}

std::size_t CochainComplex::betti(std::size_t n) const
{
    return cocycles(n).dim() - coboundaries(n).dim();
}

std::vector<std::size_t> CochainComplex::betti_numbers() const
{
    std::vector<std::size_t> b;
    for (std::size_t n = 0; n <= generators; ++n)
        b.push_back(betti(n));
    return b;
}

CEComplex ce_differential(const LieAlgebra& g)
{
    const std::size_t n = g.dimension();
    std::vector<Form> images;
    for (std::size_t k = 0; k < n; ++k) {
        Form dx(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Rational& c = g.structure_constant(i, j, k);
                if (!c.is_zero())
                    dx[(Mask{1} << i) | (Mask{1} << j)] -= Scalar(c);
            }
        images.push_back(std::move(dx));
    }

    CEComplex ce{CochainComplex{n, {}}, ExteriorDerivation(std::move(images))};
    for (std::size_t deg = 0; deg <= n; ++deg)
        ce.complex.d.push_back(ce.derivation.matrix(deg));
    for (std::size_t deg = 0; deg + 1 <= n; ++deg)
        if (!(ce.complex.d[deg + 1] * ce.complex.d[deg]).is_zero())
            throw InternalInconsistency("d∘d != 0 in degree " + std::to_string(deg));
    return ce;
}

std::vector<std::size_t> betti_numbers(const CEComplex& c)
{
    return c.complex.betti_numbers();
}

CohomologyRing::CohomologyRing(const CochainComplex& c) : generators_(c.generators)
{
    for (std::size_t n = 0; n <= generators_; ++n) {
        cocycles_.push_back(c.cocycles(n));
        coboundaries_.push_back(c.coboundaries(n));
        reps_.push_back(complement_basis(cocycles_.back(), coboundaries_.back()));
    }
}

std::vector<std::size_t> CohomologyRing::betti_numbers() const
{
    std::vector<std::size_t> b;
    for (const auto& r : reps_)
        b.push_back(r.size());
    return b;
}

Vector CohomologyRing::class_of(std::size_t n, const Vector& cocycle) const
{
    std::vector<Vector> basis = reps_.at(n);
    const auto& exact = coboundaries_.at(n).basis();
    basis.insert(basis.end(), exact.begin(), exact.end());
    const auto coords = coordinates(basis, cocycle, binomial(generators_, n));
    if (!coords)
        throw std::invalid_argument("class_of: form of degree " + std::to_string(n) + " is not closed");
    return Vector(coords->begin(), coords->begin() + static_cast<std::ptrdiff_t>(reps_[n].size()));
}

bool CohomologyRing::is_exact(std::size_t n, const Vector& form) const
{
    return coboundaries_.at(n).contains(form);
}

Vector CohomologyRing::cup(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const
{
    const Form fa = Form::from_coordinates(generators_, i, reps_.at(i).at(a));
    const Form fb = Form::from_coordinates(generators_, j, reps_.at(j).at(b));
    return class_of(i + j, wedge(fa, fb).coordinates(i + j));
}

IntersectionForm intersection_form(const CohomologyRing& ring, const Vector& orientation)
{
    const std::size_t top = ring.generators();
    if (top % 4 != 0)
        throw std::invalid_argument("intersection_form: dimension must be a multiple of 4");
    if (ring.betti(top) != 1)
        throw DegenerateOrientation("top cohomology has dimension " + std::to_string(ring.betti(top)));
    if (is_zero(orientation))
        throw DegenerateOrientation("orientation form is zero");
    if (ring.is_exact(top, orientation))
        throw DegenerateOrientation("orientation form is exact");

    IntersectionForm out;
    out.fundamental_scale = ring.class_of(top, orientation).at(0);
    const std::size_t mid = top / 2;
    const std::size_t b = ring.betti(mid);
    out.pairing = Matrix(b, b);
    for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
            out.pairing(r, c) = ring.cup(mid, r, mid, c).at(0) / out.fundamental_scale;
    out.signature = congruence_signature(out.pairing);
    return out;
}

} // namespace hodgedr
