#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hodgedr/ce_complex.hpp"

namespace hodgedr {

// Left-invariant almost complex structure: column k of `j` holds the
// coordinates of J(X_k). Entries must be rational.
struct AlmostComplexStructure {
    std::string name;
    Matrix j;

    friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;
};

// Throws JNotComplexStructure unless j is a real square matrix of even size with J² = -Id.
void check_complex_structure(const AlmostComplexStructure& acs);

// Complex coframe ψ = (φ^1..φ^m, φ̄^1..φ̄^m) of g*⊗C. Column b of `coframe`
// holds the x-coordinates of ψ^b; the φ^a span the +i eigenspace of the dual
// action α ↦ α∘J.
struct ComplexFrame {
    std::size_t dimension = 0;
    Matrix coframe;
    Matrix inverse;

    std::size_t half() const { return dimension / 2; }
};

// φ^a is x^k - i(x^k∘J) for the first x^k (in index order) that is independent of
// the previously chosen ones, divided by its leading nonzero coefficient.
ComplexFrame complex_frame(const AlmostComplexStructure& acs, std::size_t dimension);

// x-coordinates of the top form (i/2)^m φ^1∧φ̄^1∧...∧φ^m∧φ̄^m, which an almost
// complex structure declares positive. Always real and nonzero.
Vector orientation_form(const ComplexFrame& frame);

enum class Component { MuBar, DelBar, Del, Mu };

inline constexpr std::array<Component, 4> all_components{Component::MuBar, Component::DelBar, Component::Del,
                                                         Component::Mu};

struct Bidegree {
    int p = 0;
    int q = 0;
};

// (-1,2), (0,1), (1,0), (2,-1).
Bidegree shift(Component c);
const char* component_name(Component c);

// The CE complex rewritten in the complex coframe, with monomials bigraded by
// the number of φ and φ̄ factors and d split into μ̄ + ∂̄ + ∂ + μ.
class BigradedComplex {
public:
    std::size_t dimension() const { return frame_.dimension; }
    std::size_t half() const { return frame_.half(); }
    const ComplexFrame& frame() const { return frame_; }
    // Total complex in the ψ basis.
    const CochainComplex& total() const { return total_; }

    Bidegree bidegree(Mask m) const;
    bool in_range(int p, int q) const;
    // Positions of the (p, q) monomials inside the degree p+q basis, in order.
    const std::vector<std::size_t>& positions(int p, int q) const;
    std::size_t dim(int p, int q) const;
    // dim A^{p,q} x dim A^{p+q} coordinate injection.
    Matrix embedding(int p, int q) const;

    // Component c restricted to A^{p,q}, as a matrix A^{p,q} → A^{(p,q)+shift(c)}.
    // Rows are empty when the target bidegree is out of range.
    Matrix component(Component c, int p, int q) const;

    // Complex conjugation on degree-n coordinates; antilinear.
    Vector conjugate(std::size_t n, const Vector& v) const;
    Subspace conjugate(std::size_t n, const Subspace& s) const;

    // μ̄+∂̄+∂+μ reassembled and mapped back to the x basis equals the CE differential.
    bool reassembly_holds() const { return reassembly_; }

private:
    friend BigradedComplex split_differential(const ComplexFrame&, const CEComplex&);

    ComplexFrame frame_;
    CochainComplex total_;
    std::vector<std::vector<std::vector<std::size_t>>> positions_; // [p][q]
    std::vector<std::vector<std::pair<std::size_t, int>>> conj_map_; // per degree: target position, sign
    bool reassembly_ = false;
};

// Throws InternalInconsistency if d has a component outside the four allowed
// bidegrees or if the reassembly identity fails.
BigradedComplex split_differential(const ComplexFrame& frame, const CEComplex& ce);

struct D2Relation {
    std::string name;
    // Total bidegree shift of the relation's operators.
    Bidegree shift;
    bool holds = true;
    // Nonzero entries of the relation's operator, summed over source bidegrees.
    std::size_t nonzero_entries = 0;
};

// The seven bigraded components of d∘d = 0, from μ² = 0 down to μ̄² = 0.
std::vector<D2Relation> verify_d2_relations(const BigradedComplex& b);

// True iff μ̄ vanishes in every bidegree.
bool is_integrable(const BigradedComplex& b);

// Composite operator Σ A∘B over component pairs with the given total shift,
// restricted to A^{p,q}.
Matrix composite(const BigradedComplex& b, Component outer, Component inner, int p, int q);

} // namespace hodgedr
