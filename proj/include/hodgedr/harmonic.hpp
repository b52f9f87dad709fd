#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodgedr/invariants.hpp"

namespace hodgedr {

// Hermitian inner product on g*⊗C written in the complex coframe ψ:
// gram(a, b) = <ψ^b, ψ^a>, so <x, y> = y^H gram x.
struct HermitianMetric {
    Matrix gram;

    // The coframe declared orthonormal.
    static HermitianMetric standard(std::size_t dimension);
    friend bool operator==(const HermitianMetric&, const HermitianMetric&) = default;
};

// Throws MetricNotPositive unless gram is Hermitian, positive definite, makes
// the (1,0) and (0,1) parts orthogonal, and comes from a real metric
// (its (0,1) block is the conjugate of its (1,0) block).
void validate_metric(const HermitianMetric& m, std::size_t dimension);

// Gram matrix of the induced inner product on the A^{p,q} monomial basis.
Matrix induced_gram(const BigradedComplex& b, const HermitianMetric& m, int p, int q);

// ∂̄* : A^{p,q+1} → A^{p,q}, the adjoint of ∂̄ restricted to A^{p,q}.
Matrix dbar_adjoint(const BigradedComplex& b, const HermitianMetric& m, int p, int q);

// <∂̄x, y> = <x, ∂̄*y> for every pair of basis vectors, at every bidegree.
bool adjoint_identity_holds(const BigradedComplex& b, const HermitianMetric& m);

// dim(ker ∂̄ ∩ ker ∂̄*) on left-invariant (p,q)-forms.
Grid harmonic_numbers(const BigradedComplex& b, const HermitianMetric& m);

struct NoetherReport {
    // dim ker - dim coker of ∂̄ + ∂̄* : A^{0,0} ⊕ A^{0,2} → A^{0,1}.
    long index = 0;
    Rational todd;
    bool todd_integral = false;
    // h^{0,1} >= 1 + h^{2,0} - Td on the left-invariant grid (advisory).
    long bound_lhs = 0;
    Rational bound_rhs;
    bool bound_holds = false;
};

NoetherReport noether_quantities(const BigradedComplex& b, const HermitianMetric& m, const Grid& harmonic,
                                 const InvariantReport& r);

struct MetricDependence {
    HermitianMetric other;
    Grid default_grid;
    Grid other_grid;
};

// Tries a fixed list of metrics and returns the first whose harmonic grid
// differs from that of `reference`.
std::optional<MetricDependence> find_metric_dependence(const BigradedComplex& b, const HermitianMetric& reference);

struct HarmonicReport {
    HermitianMetric metric;
    Grid grid;
    bool adjoint_identity = false;
    bool serre_symmetric = false;
    // Closed (p,0)-forms lie in the harmonic (p,0) space, per p.
    std::vector<bool> closed_contained;
    NoetherReport noether;
    std::optional<MetricDependence> dependence;
};

HarmonicReport harmonic_report(const BigradedComplex& b, const HermitianMetric& m, const InvariantReport& r,
                               bool scan_metrics = true);

} // namespace hodgedr
