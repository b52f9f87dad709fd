#include <gtest/gtest.h>

#include "hodgedr/errors.hpp"
#include "support.hpp"

using namespace hodgedr;

namespace {

std::string data(const std::string& name)
{
    return read_file(std::string(HODGEDR_DATA_DIR) + "/" + name);
}

template <class F>
std::string parse_error_location(F&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.location();
    }
    return "<no ParseError>";
}

const std::string minimal = R"({
  "name": "t",
  "dimension": 4,
  "brackets": [],
  "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]]
})";

} // namespace

TEST(Io, DataFilesMatchBuiltInFixtures)
{
    for (const auto& fx : corpus_fixtures()) {
        const std::string text = data(fx.id + ".json");
        const AnalysisInput in = parse_analysis_input(text);
        EXPECT_EQ(in.algebra.dimension, fx.input.algebra.dimension) << fx.id;
        EXPECT_EQ(in.algebra.brackets, fx.input.algebra.brackets) << fx.id;
        EXPECT_EQ(in.j, fx.input.j) << fx.id;
        EXPECT_EQ(serialize(in), text) << fx.id;
    }
    EXPECT_EQ(serialize(parse_scan_input(data("scan-filiform-interpolation.json"))).empty(), false);
    EXPECT_EQ(parse_scan_input(data("scan-filiform-interpolation.json")).samples,
              filiform_interpolation_scan().samples);
    EXPECT_EQ(parse_scan_input(data("scan-filiform-constant.json")).samples, filiform_constant_scan().samples);
    EXPECT_EQ(parse_scan_input(data("scan-filiform-perturbation.json")).samples,
              filiform_perturbation_scan().samples);
}

TEST(Io, RoundTripProperty)
{
    Sampler s(808);
    for (auto r : gen::random_inputs(808, 30)) {
        AnalysisInput& in = r.input;
        if (s.integer(0, 1)) {
            Matrix g = Matrix::identity(4) * Scalar(3);
            const Scalar t(s.rational(1, 3), s.rational(1, 3));
            g(0, 1) = t;
            g(1, 0) = t.conj();
            g(2, 3) = t.conj();
            g(3, 2) = t;
            in.metric = HermitianMetric{g};
        }
        in.flags.include_harmonic = s.integer(0, 1) == 1;
        const std::string text = serialize(in);
        const AnalysisInput back = parse_analysis_input(text);
        EXPECT_EQ(back, in);
        EXPECT_EQ(serialize(back), text);
    }
    for (const ScanInput& in : {filiform_interpolation_scan(), filiform_perturbation_scan()}) {
        const ScanInput back = parse_scan_input(serialize(in));
        EXPECT_EQ(back.samples, in.samples);
        EXPECT_EQ(back.algebra.brackets, in.algebra.brackets);
    }
    const HermitianMetric m = parse_metric(data("metric-scaled.json"));
    EXPECT_EQ(parse_metric(serialize(m)), m);
}

TEST(Io, DivisionByZeroIsAParseErrorAtItsEntry)
{
    const std::string text = data("invalid/j-division-by-zero.json");
    EXPECT_THROW(parse_analysis_input(text), ParseError);
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(text); }), "J[0][1]");
}

TEST(Io, NonComplexStructureIsAValidationError)
{
    const std::string text = data("invalid/j-not-complex.json");
    try {
        parse_analysis_input(text);
        FAIL() << "accepted J with J^2 != -Id";
    } catch (const JNotComplexStructure& e) {
        EXPECT_NE(std::string(e.what()).find("'J'"), std::string::npos) << e.what();
    }
}

TEST(Io, SyntaxErrorsCarryLineAndColumn)
{
    const std::string text = "{\n  \"name\": \"x\",\n  \"dimension\": 4,,\n}";
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(text); }), "3:18");
}

TEST(Io, StructuralErrorsNameTheirField)
{
    auto edit = [](std::string from, std::string to) {
        std::string t = minimal;
        t.replace(t.find(from), from.size(), to);
        return t;
    };
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(edit("\"brackets\": []", "\"brackets\": [[1, 5, 2, \"1\"]]")); }),
              "brackets[0][1]");
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(edit("\"brackets\": []", "\"brackets\": [[2, 1, 3, \"1\"]]")); }),
              "brackets[0]");
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(edit("\"brackets\": []", "\"brackets\": [[1, 2, 3, \"x\"]]")); }),
              "brackets[0][3]");
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(edit("[\"0\",\"-1\",\"0\",\"0\"]", "[\"0\",\"-1\",\"0\"]")); }),
              "J[0]");
    EXPECT_EQ(parse_error_location([&] { parse_analysis_input(edit("\"J\"", "\"K\"")); }), "J");
    EXPECT_NO_THROW(parse_analysis_input(minimal));
}

TEST(Io, ScanSampleErrorsNameTheSample)
{
    std::string text = data("scan-filiform-constant.json");
    // Break the third sample's J.
    std::size_t at = 0;
    for (int k = 0; k < 3; ++k)
        at = text.find("\"J\"", at + 1);
    const std::size_t one = text.find("\"1\"", at);
    text.replace(one, 3, "\"2\"");
    try {
        parse_scan_input(text);
        FAIL() << "accepted a broken sample";
    } catch (const JNotComplexStructure& e) {
        EXPECT_NE(std::string(e.what()).find("samples[2].J"), std::string::npos) << e.what();
    }
}
