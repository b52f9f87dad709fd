#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodgedr/rational.hpp"

namespace hodgedr {

// [X_i, X_j] contains coeff * X_k. Indices are 0-based and i < j.
struct Bracket {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational coeff;

    friend bool operator==(const Bracket&, const Bracket&) = default;
};

struct LieAlgebraPresentation {
    std::string name;
    std::size_t dimension = 0;
    std::vector<Bracket> brackets;

    friend bool operator==(const LieAlgebraPresentation&, const LieAlgebraPresentation&) = default;
};

// A presentation that passed validate(): antisymmetric structure constants
// satisfying the Jacobi identity.
class LieAlgebra {
public:
    const LieAlgebraPresentation& presentation() const { return presentation_; }
    std::size_t dimension() const { return presentation_.dimension; }
    bool nilpotent() const { return nilpotent_; }

    // c^k_{ij}, antisymmetric in (i, j).
    const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const
    {
        return c_[(i * dimension() + j) * dimension() + k];
    }

private:
    friend LieAlgebra validate(const LieAlgebraPresentation&, bool);

    LieAlgebraPresentation presentation_;
    std::vector<Rational> c_;
    bool nilpotent_ = false;
};

// Checks index ranges and ordering, rejects duplicate entries, verifies the
// Jacobi identity exactly and computes the lower central series.
// Throws BadIndex, JacobiViolation, or NotNilpotent (unless allow_non_nilpotent).
LieAlgebra validate(const LieAlgebraPresentation& p, bool allow_non_nilpotent = false);

} // namespace hodgedr
