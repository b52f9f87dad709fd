#pragma once

#include <string>
#include <vector>

#include "hodgedr/pipeline.hpp"

namespace hodgedr {

struct CorpusExpectation {
    std::vector<std::size_t> betti;
    Grid diamond;
    long q = 0;
    long sigma_tilde = 0;
    long sigma = 0;
    long chi = 0;
    long p_g = 0;
    bool integrable = false;
    int first_stable = 0;
    std::string label;
    std::string family;
    int type = 0;
    PurityStatus weight1 = PurityStatus::Holds;
};

struct CorpusFixture {
    std::string id;
    AnalysisInput input;
    CorpusExpectation expected;
};

LieAlgebraPresentation torus_algebra();
LieAlgebraPresentation filiform_algebra();
LieAlgebraPresentation kodaira_thurston_algebra();

// J from pairs (a, b) meaning J X_a = X_b and J X_b = -X_a, 0-based.
Matrix structure_from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t dimension = 4);

// torus, filiform-J1, filiform-J2, kodaira-thurston-J1, kodaira-thurston-J2.
const std::vector<CorpusFixture>& corpus_fixtures();

// Scan families: filiform J1 moved to J2 along (1-t) Id + t P; the constant
// J2 family; J2 conjugated by Id + t E for small t.
ScanInput filiform_interpolation_scan();
ScanInput filiform_constant_scan();
ScanInput filiform_perturbation_scan();

struct CorpusComparison {
    std::string fixture;
    std::string field;
    std::string expected;
    std::string actual;
    bool match = false;
    std::string note;
};

struct CorpusSummary {
    std::vector<CorpusComparison> comparisons;
    std::vector<double> seconds;
    // Random left-invariant structures on the Kodaira-Thurston algebra.
    std::size_t scanned = 0;
    long max_q = 0;
    bool type3_absent = false;

    bool passed() const;
};

CorpusSummary corpus_verify(bool parallel = true, std::size_t random_structures = 32);
Json corpus_json(const CorpusSummary& s);
std::string corpus_text(const CorpusSummary& s);

} // namespace hodgedr
