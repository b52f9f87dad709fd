#pragma once

#include <cstdint>
#include <random>

#include "hodgedr/acs.hpp"

namespace hodgedr {

// Deterministic source of small rational data.
class Sampler {
public:
    explicit Sampler(std::uint32_t seed) : rng_(seed) {}

    // Integer in [lo, hi].
    long integer(long lo, long hi);
    // a/b with |a| <= range and 1 <= b <= max_den.
    Rational rational(long range, long max_den = 1);
    // Rational entries in [-range, range]; retries until invertible.
    Matrix invertible(std::size_t n, long range = 2);

private:
    std::mt19937 rng_;
};

// Brackets rewritten in the basis Y_i = Σ_k a(k, i) X_k. `a` must be real and invertible.
LieAlgebraPresentation change_basis(const LieAlgebra& g, const Matrix& a);

// The same structure expressed in the basis Y_i = Σ_k a(k, i) X_k: J' = a⁻¹ J a.
AlmostComplexStructure change_basis(const AlmostComplexStructure& acs, const Matrix& a);

// B J0 B⁻¹ for J0 the standard structure (J0 X_{2k} = X_{2k+1}) and a random rational B.
AlmostComplexStructure random_structure(Sampler& s, std::size_t dimension, long range = 2);

// The standard structure J X_{2k} = X_{2k+1}, J X_{2k+1} = -X_{2k}.
Matrix standard_structure(std::size_t dimension);

} // namespace hodgedr
