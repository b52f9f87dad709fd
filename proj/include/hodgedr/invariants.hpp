#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodgedr/rational.hpp"
#include "hodgedr/spectral.hpp"

namespace hodgedr {

// Hodge-de Rham numbers h[p][q] = dim E_∞^{p,q} of a 4-dimensional structure.
struct HodgeDiamond {
    Grid h;

    std::size_t at(int p, int q) const { return h.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }
    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

// Verifies h00 = h22 = 1 and Serre symmetry (SerreViolation) and the Betti
// sums (DegenerationViolation).
HodgeDiamond hodge_de_rham_numbers(const Grid& limit, const std::vector<std::size_t>& betti);

enum class CheckStatus { Pass, Fail, Skip };

const char* check_status_name(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct Classification {
    // integrable-b1-even, integrable-b1-odd or non-integrable.
    std::string label;
    // Set when the Betti numbers, integrability and diamond match a reference row.
    std::string family;
    int type = 0;
};

struct InvariantReport {
    std::vector<std::size_t> betti;
    HodgeDiamond diamond;
    long q = 0;
    long p_g = 0;
    long chi = 0;
    long sigma_tilde = 0;
    long euler = 0;
    long sigma = 0;
    std::size_t b_plus = 0;
    std::size_t b_minus = 0;
    long c1_squared = 0;
    Rational todd;
    bool integrable = false;
    // dim ᴸE_1^{0,1} - dim ᴸE_1^{1,0}.
    long left_invariant_i = 0;
    Classification classification;
    std::vector<Check> checks;
    std::vector<std::string> annotations;
};

InvariantReport derived_invariants(const HodgeDiamond& d, const std::vector<std::size_t>& betti, const Signature& sig,
                                   bool integrable, const Grid& e1);

// Everything the identity suite consumes beyond the invariant report. Absent
// pieces turn the corresponding checks into skips.
struct SuiteContext {
    std::vector<D2Relation> d2;
    std::optional<bool> filtration_compatible;
    std::optional<bool> reassembly;
    std::optional<Grid> page1;
    std::optional<Grid> page2;
    std::optional<Grid> e1_explicit;
    std::optional<Grid> e2_explicit;
    std::optional<Stabilization> stabilization;
    std::optional<PurityReport> purity;
};

std::vector<Check> identity_suite(const InvariantReport& r, const SuiteContext& ctx);

Classification classify(const InvariantReport& r);

// Reference row for a classified structure, if any.
struct ReferenceRow {
    std::string family;
    int type = 0;
    bool integrable = false;
    std::vector<std::size_t> betti;
    Grid diamond;
    long q = 0;
    long sigma_tilde = 0;
    long sigma = 0;
    long chi = 0;
    long p_g = 0;
};

const std::vector<ReferenceRow>& reference_rows();

// Five text rows, top vertex h22 first and bottom vertex h00 last. The row
// above h00 holds h10 (left) and h01 (right); in general h^{p,q} sits in column
// 2 - (p - q). Cells are padded to the widest entry; trailing spaces trimmed.
std::string diamond_render(const HodgeDiamond& d);

} // namespace hodgedr
