#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodgedr/acs.hpp"

namespace hodgedr {

// Dimension grid indexed [p][q], 0 <= p, q <= m.
using Grid = std::vector<std::vector<std::size_t>>;

// F^p A^n = (Ker μ̄ ∩ A^{p,n-p}) ⊕ ⊕_{s>p} A^{s,n-s} on left-invariant forms.
class HodgeFiltration {
public:
    explicit HodgeFiltration(BigradedComplex b);

    const BigradedComplex& complex() const { return b_; }
    // Defined for every integer p and n: the whole space for p <= 0, zero for
    // p > min(n, m), and a zero-dimensional space outside 0 <= n <= dim.
    Subspace level(int p, int n) const;

    // (p, n) pairs where d(F^p A^n) is not contained in F^p A^{n+1}.
    const std::vector<std::pair<int, int>>& incompatibilities() const { return bad_; }
    bool compatible() const { return bad_.empty(); }

private:
    BigradedComplex b_;
    std::vector<std::vector<Subspace>> levels_; // [n][p], 0 <= p <= m
    std::vector<std::pair<int, int>> bad_;
};

HodgeFiltration build_filtration(const BigradedComplex& b);

struct PageDifferential {
    Bidegree source;
    Bidegree target;
    // Columns: chosen representatives of E_r^{source}; rows: those of E_r^{target}.
    Matrix matrix;
};

struct SpectralPage {
    int r = 0;
    Grid dims;
    std::vector<PageDifferential> differentials;
    bool stabilized = false;

    std::size_t total(std::size_t n) const;
};

// E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}) with
// Z_r^{p,q} = F^p A^{p+q} ∩ d^{-1} F^{p+r} A^{p+q+1}. Any r >= 0 is accepted.
SpectralPage page(const HodgeFiltration& f, int r);

// dim E_{r+1}^{p,q} = dim ker δ_r - rank(incoming δ_r) at every bidegree.
bool transition_consistent(const SpectralPage& current, const SpectralPage& next);

// E_1 from its quotient description {x : μ̄x = 0, ∂̄x = μ̄y} / {μ̄a + ∂̄b : μ̄b = 0}.
Grid e1_explicit(const BigradedComplex& b);

// E_2 from {x : μ̄x = 0, ∂̄x = μ̄y, ∂x = ∂̄y + μ̄z}
//         / {μ̄a + ∂̄b + ∂c : μ̄b + ∂̄c = 0, μ̄c = 0}.
Grid e2_explicit(const BigradedComplex& b);

struct Stabilization {
    Grid limit;
    // Smallest r whose page already equals E_∞.
    int first_stable = 0;
    // Pages 1 .. first_stable + 1.
    std::vector<SpectralPage> pages;
    bool monotone = true;
    bool transitions_consistent = true;
};

// Iterates pages until both the dimensions repeat and the total dimensions
// match the Betti numbers. Throws NoStabilization past r = dim + 1.
Stabilization stabilize(const HodgeFiltration& f, const std::vector<std::size_t>& betti);

// Filtration induced on H^1 and H^2 (complex coefficients) of a 4-dimensional
// complex. Each F is stored as the subspace of closed forms it spans together
// with the exact forms.
struct CohomologyFiltration {
    std::vector<Subspace> closed;
    std::vector<Subspace> exact;
    Subspace f1h1;
    Subspace f1h2;
    Subspace f2h2;

    std::size_t betti(std::size_t n) const { return closed.at(n).dim() - exact.at(n).dim(); }
    std::size_t dim_f1h1() const { return f1h1.dim() - exact.at(1).dim(); }
    std::size_t dim_f1h2() const { return f1h2.dim() - exact.at(2).dim(); }
    std::size_t dim_f2h2() const { return f2h2.dim() - exact.at(2).dim(); }
};

CohomologyFiltration cohomology_filtration(const BigradedComplex& b);

enum class PurityStatus { Holds, Fails, HypothesisNotMet };

const char* purity_status_name(PurityStatus s);

struct PurityReport {
    PurityStatus weight2 = PurityStatus::Fails;
    PurityStatus weight1 = PurityStatus::HypothesisNotMet;
    std::size_t b1 = 0;
    std::size_t b2 = 0;
    std::size_t dim_f1h1 = 0;
    std::size_t dim_f1h2 = 0;
    std::size_t dim_f2h2 = 0;
    // dim(F^1H^2 + conj F^2H^2) and dim(F^1H^1 + conj F^1H^1).
    std::size_t span_weight2 = 0;
    std::size_t span_weight1 = 0;
};

// Weight 2: F^1H^2 ⊕ conj(F^2H^2) = H^2 (and the conjugate pairing).
// Weight 1: F^1H^1 ⊕ conj(F^1H^1) = H^1, evaluated only when h^{0,1} = h^{1,0}.
PurityReport purity_check(const CohomologyFiltration& cf, const BigradedComplex& b, const Grid& diamond);

} // namespace hodgedr
