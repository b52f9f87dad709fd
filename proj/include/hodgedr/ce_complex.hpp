#pragma once

#include <cstddef>
#include <vector>

#include "hodgedr/exterior.hpp"
#include "hodgedr/lie_algebra.hpp"
#include "hodgedr/subspace.hpp"

namespace hodgedr {

// Finite cochain complex on the exterior algebra of `generators` generators,
// in the monomials() basis of each degree. d[n] maps degree n to n+1; the last
// one (degree = generators) is the zero map to a 0-dimensional space.
struct CochainComplex {
    std::size_t generators = 0;
    std::vector<Matrix> d;

    std::size_t rank_in_degree(std::size_t n) const { return binomial(generators, n); }
    Subspace cocycles(std::size_t n) const;
    Subspace coboundaries(std::size_t n) const;
    std::size_t betti(std::size_t n) const;
    std::vector<std::size_t> betti_numbers() const;
};

// Chevalley–Eilenberg complex of left-invariant forms in the dual basis
// x^1..x^n, with d x^k = -Σ_{i<j} c^k_{ij} x^i ∧ x^j (dα(X, Y) = -α([X, Y])).
struct CEComplex {
    CochainComplex complex;
    ExteriorDerivation derivation;
};

// Builds the complex and verifies d∘d = 0 exactly (InternalInconsistency otherwise).
CEComplex ce_differential(const LieAlgebra& g);

std::vector<std::size_t> betti_numbers(const CEComplex& c);

// Real cohomology with chosen representatives: for each degree, a first-fit
// extension of a basis of exact forms to a basis of closed forms.
class CohomologyRing {
public:
    explicit CohomologyRing(const CochainComplex& c);

    std::size_t generators() const { return generators_; }
    std::size_t betti(std::size_t n) const { return reps_.at(n).size(); }
    std::vector<std::size_t> betti_numbers() const;
    const std::vector<Vector>& representatives(std::size_t n) const { return reps_.at(n); }

    // Coordinates of the class of a closed form in the representative basis.
    // Throws std::invalid_argument when the form is not closed.
    Vector class_of(std::size_t n, const Vector& cocycle) const;
    bool is_exact(std::size_t n, const Vector& form) const;

    // [rep^i_a ∧ rep^j_b] in the degree i+j representative basis.
    Vector cup(std::size_t i, std::size_t a, std::size_t j, std::size_t b) const;

private:
    std::size_t generators_;
    std::vector<Subspace> cocycles_;
    std::vector<Subspace> coboundaries_;
    std::vector<std::vector<Vector>> reps_;
};

struct IntersectionForm {
    // pairing(a, b) = <rep_a ∧ rep_b, [M]> where the orientation form has pairing 1.
    Matrix pairing;
    // Coefficient of the orientation class on the top representative.
    Scalar fundamental_scale;
    Signature signature;
};

// Intersection form on the middle cohomology of a complex whose dimension is a
// multiple of 4. `orientation` holds top-degree coordinates of the form declared
// positive. Throws DegenerateOrientation when it is zero or exact, or when the
// top cohomology is not one-dimensional.
IntersectionForm intersection_form(const CohomologyRing& ring, const Vector& orientation);

} // namespace hodgedr
