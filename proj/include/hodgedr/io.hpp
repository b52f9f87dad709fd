#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hodgedr/harmonic.hpp"

namespace hodgedr {

using Json = nlohmann::ordered_json;

struct AnalysisFlags {
    bool allow_non_nilpotent = false;
    bool include_harmonic = false;

    friend bool operator==(const AnalysisFlags&, const AnalysisFlags&) = default;
};

// Brackets are stored 0-based; the file format uses 1-based indices.
struct AnalysisInput {
    LieAlgebraPresentation algebra;
    Matrix j;
    std::optional<HermitianMetric> metric;
    AnalysisFlags flags;

    friend bool operator==(const AnalysisInput&, const AnalysisInput&) = default;
};

struct ScanSample {
    std::string tag;
    Matrix j;

    friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

struct ScanInput {
    LieAlgebraPresentation algebra;
    std::vector<ScanSample> samples;
    AnalysisFlags flags;

    friend bool operator==(const ScanInput&, const ScanInput&) = default;
};

// Throw ParseError (syntax, with line:col; structure, with a field path such
// as "J[1][2]") or JNotComplexStructure naming the matrix that fails J² = -Id.
AnalysisInput parse_analysis_input(std::string_view text);
ScanInput parse_scan_input(std::string_view text);
// A document {"gram": [[...]]} with Gaussian-rational strings; not validated.
HermitianMetric parse_metric(std::string_view text);

Json to_json(const AnalysisInput& in);
Json to_json(const ScanInput& in);
Json to_json(const HermitianMetric& m);
Json to_json(const LieAlgebraPresentation& p);
Json matrix_json(const Matrix& m);
Json grid_json(const Grid& g);

// Two-space indented JSON in which arrays of scalars stay on one line; ends
// with a newline.
std::string pretty(const Json& doc);

// Canonical text of pretty(to_json(...)).
std::string serialize(const AnalysisInput& in);
std::string serialize(const ScanInput& in);
std::string serialize(const HermitianMetric& m);

// Throws Error when the file cannot be read.
std::string read_file(const std::string& path);

} // namespace hodgedr
