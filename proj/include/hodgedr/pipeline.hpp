#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgedr/io.hpp"

namespace hodgedr {

inline constexpr const char* engine_version = "hodgedr 0.1.0";

struct AnalysisResult {
    AnalysisInput input;
    std::vector<std::size_t> betti;
    std::vector<D2Relation> d2;
    bool filtration_compatible = false;
    Stabilization stabilization;
    Grid e1_explicit;
    Grid e2_explicit;
    PurityReport purity;
    InvariantReport report;
    std::optional<HarmonicReport> harmonic;

    // No check in report.checks (and none of the harmonic checks) failed.
    bool passed() const;
    const SpectralPage& page_at(int r) const;
};

// validate → CE complex → bigrading → filtration → pages → diamond →
// invariants → identity suite (→ harmonic sidecar). Throws ParseError or
// ValidationError subclasses for bad input and ValidationError for dimensions
// other than 4. Failed identities are recorded, not thrown.
AnalysisResult analyze(const AnalysisInput& in);

// Throws CheckFailed naming the first failed check.
void require_passing(const AnalysisResult& r);

Json report_json(const AnalysisResult& r);
std::string report_text(const AnalysisResult& r);

struct ScanRow {
    std::string tag;
    bool ok = false;
    std::string error;
    long q = 0;
    std::size_t h10 = 0;
    std::size_t b1 = 0;
    Grid diamond;
    std::string diamond_hash;
    bool checks_passed = false;
    // A neighboring sample has strictly larger h^{1,0}.
    bool flagged = false;
    std::vector<std::string> notes;
};

struct ScanResult {
    std::string name;
    std::vector<ScanRow> rows;

    // Every sample analyzed and passed its checks.
    bool passed() const;
};

// FNV-1a (64-bit) of the diamond entries, as 16 hex digits.
std::string diamond_hash(const Grid& g);

ScanResult scan(const ScanInput& in, bool parallel = true);
Json scan_json(const ScanResult& s);
std::string scan_text(const ScanResult& s);

} // namespace hodgedr
