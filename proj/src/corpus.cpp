#include "hodgedr/corpus.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>

#include "hodgedr/errors.hpp"
#include "hodgedr/sampling.hpp"

namespace hodgedr {

LieAlgebraPresentation torus_algebra()
{
    return {"torus", 4, {}};
}

LieAlgebraPresentation filiform_algebra()
{
    return {"filiform", 4, {{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}}};
}

LieAlgebraPresentation kodaira_thurston_algebra()
{
    return {"kodaira-thurston", 4, {{0, 1, 2, Rational(-1)}}};
}

Matrix structure_from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t dimension)
{
    Matrix j(dimension, dimension);
    for (auto [a, b] : pairs) {
        j(b, a) = Scalar(1);
        j(a, b) = Scalar(-1);
    }
    return j;
}

namespace {

// Basis order X, Y, Z, W for the Kodaira-Thurston algebra, [X, Y] = -Z.
Matrix kt_j2()
{
    // J W = X, J Z = Y.
    return structure_from_pairs({{3, 0}, {2, 1}});
}

AnalysisInput fixture_input(LieAlgebraPresentation a, Matrix j)
{
    return {std::move(a), std::move(j), std::nullopt, {}};
}

} // namespace

const std::vector<CorpusFixture>& corpus_fixtures()
{
    using PS = PurityStatus;
    static const std::vector<CorpusFixture> fixtures{
        {"torus",
         fixture_input(torus_algebra(), structure_from_pairs({{0, 1}, {2, 3}})),
         {{1, 4, 6, 4, 1}, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}, 2, 0, 0, 0, 1, true, 1, "integrable-b1-even", "", 0,
          PS::Holds}},
        {"filiform-J1",
         fixture_input(filiform_algebra(), structure_from_pairs({{0, 1}, {2, 3}})),
         {{1, 2, 2, 2, 1}, {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}, 1, 0, 0, 0, 0, false, 2, "non-integrable", "filiform", 1,
          PS::Holds}},
        {"filiform-J2",
         fixture_input(filiform_algebra(), structure_from_pairs({{0, 3}, {1, 2}})),
         {{1, 2, 2, 2, 1}, {{1, 2, 0}, {0, 2, 0}, {0, 2, 1}}, 2, -4, 0, -1, 0, false, 1, "non-integrable", "filiform",
          2, PS::HypothesisNotMet}},
        {"kodaira-thurston-J1",
         fixture_input(kodaira_thurston_algebra(), structure_from_pairs({{0, 1}, {2, 3}})),
         {{1, 3, 4, 3, 1}, {{1, 2, 1}, {1, 2, 1}, {1, 2, 1}}, 2, 0, 0, 0, 1, true, 1, "integrable-b1-odd",
          "kodaira-thurston", 1, PS::HypothesisNotMet}},
        {"kodaira-thurston-J2",
         fixture_input(kodaira_thurston_algebra(), kt_j2()),
         {{1, 3, 4, 3, 1}, {{1, 2, 0}, {1, 4, 1}, {0, 2, 1}}, 2, -4, 0, -1, 0, false, 1, "non-integrable",
          "kodaira-thurston", 2, PS::HypothesisNotMet}},
    };
    return fixtures;
}

namespace {

std::string fraction_tag(long num, long den)
{
    return "t=" + Rational(num, den).str();
}

ScanSample conjugated(const Matrix& j, const Matrix& a, std::string tag)
{
    return {std::move(tag), a * j * inverse(a)};
}

} // namespace

ScanInput filiform_interpolation_scan()
{
    const Matrix j1 = structure_from_pairs({{0, 1}, {2, 3}});
    // P e1 = X1, P e2 = X4, P e3 = X2, P e4 = X3, so P J1 P⁻¹ = J2.
    Matrix p(4, 4);
    p(0, 0) = Scalar(1);
    p(3, 1) = Scalar(1);
    p(1, 2) = Scalar(1);
    p(2, 3) = Scalar(1);
    ScanInput in{filiform_algebra(), {}, {}};
    const long steps = 8;
    for (long k = 0; k <= steps; ++k) {
        const Rational t(k, steps);
        const Matrix a = Matrix::identity(4) * Scalar(Rational(1) - t) + p * Scalar(t);
        if (determinant(a).is_zero())
            continue;
        in.samples.push_back(conjugated(j1, a, fraction_tag(k, steps)));
    }
    return in;
}

ScanInput filiform_constant_scan()
{
    const Matrix j2 = structure_from_pairs({{0, 3}, {1, 2}});
    ScanInput in{filiform_algebra(), {}, {}};
    for (long k = 0; k < 5; ++k)
        in.samples.push_back({fraction_tag(k, 4), j2});
    return in;
}

ScanInput filiform_perturbation_scan()
{
    const Matrix j2 = structure_from_pairs({{0, 3}, {1, 2}});
    Matrix e(4, 4);
    e(0, 1) = Scalar(1);
    e(2, 0) = Scalar(-1);
    e(3, 2) = Scalar(1);
    e(1, 3) = Scalar(2);
    ScanInput in{filiform_algebra(), {}, {}};
    for (long k = -3; k <= 3; ++k) {
        const Matrix a = Matrix::identity(4) + e * Scalar(Rational(k, 64));
        in.samples.push_back(conjugated(j2, a, fraction_tag(k, 64)));
    }
    return in;
}

bool CorpusSummary::passed() const
{
    for (const auto& c : comparisons)
        if (!c.match)
            return false;
    return type3_absent;
}

namespace {

std::string grid_text(const Grid& g)
{
    std::string s;
    for (std::size_t p = 0; p < g.size(); ++p) {
        s += p ? " / " : "";
        for (std::size_t q = 0; q < g[p].size(); ++q)
            s += (q ? " " : "") + std::to_string(g[p][q]);
    }
    return s;
}

std::string list_text(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

struct Outcome {
    std::optional<AnalysisResult> result;
    std::string error;
    double seconds = 0;
};

Outcome run(const AnalysisInput& in)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        o.result = analyze(in);
    } catch (const Error& e) {
        o.error = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

void compare_fixture(const CorpusFixture& fx, const Outcome& o, std::vector<CorpusComparison>& out)
{
    auto add = [&](std::string field, std::string expected, std::string actual, std::string note = {}) {
        const bool match = expected == actual;
        out.push_back({fx.id, std::move(field), std::move(expected), std::move(actual), match, std::move(note)});
    };
    if (!o.result) {
        add("analysis", "ok", "error: " + o.error);
        return;
    }
    const AnalysisResult& r = *o.result;
    const CorpusExpectation& x = fx.expected;
    const InvariantReport& inv = r.report;
    add("betti", list_text(x.betti), list_text(r.betti));
    add("diamond", grid_text(x.diamond), grid_text(inv.diamond.h));
    add("q", std::to_string(x.q), std::to_string(inv.q));
    add("p_g", std::to_string(x.p_g), std::to_string(inv.p_g));
    add("chi", std::to_string(x.chi), std::to_string(inv.chi));
    add("sigma", std::to_string(x.sigma), std::to_string(inv.sigma));
    std::string note;
    for (const auto& row : reference_rows())
        if (row.family == x.family && row.type == x.type && row.sigma_tilde != x.sigma_tilde)
            note = "reference table lists " + std::to_string(row.sigma_tilde)
                   + "; sigma_tilde = 4*chi - e forces " + std::to_string(x.sigma_tilde);
    add("sigma_tilde", std::to_string(x.sigma_tilde), std::to_string(inv.sigma_tilde), note);
    add("integrable", x.integrable ? "yes" : "no", inv.integrable ? "yes" : "no");
    add("first_stable_page", std::to_string(x.first_stable), std::to_string(r.stabilization.first_stable));
    add("classification", x.label, inv.classification.label);
    add("type", x.type ? x.family + " " + std::to_string(x.type) : "-",
        inv.classification.type ? inv.classification.family + " " + std::to_string(inv.classification.type) : "-");
    add("purity_weight2", "holds", purity_status_name(r.purity.weight2));
    add("purity_weight1", purity_status_name(x.weight1), purity_status_name(r.purity.weight1));
    std::size_t failed = 0;
    for (const auto& c : inv.checks)
        failed += c.status == CheckStatus::Fail;
    add("failed_checks", "0", std::to_string(failed));
}

} // namespace

CorpusSummary corpus_verify(bool parallel, std::size_t random_structures)
{
    const auto& fixtures = corpus_fixtures();
    std::vector<AnalysisInput> inputs;
    for (const auto& fx : fixtures)
        inputs.push_back(fx.input);
    Sampler sampler(20240611);
    for (std::size_t k = 0; k < random_structures; ++k)
        inputs.push_back(fixture_input(kodaira_thurston_algebra(), random_structure(sampler, 4).j));

    std::vector<Outcome> outcomes;
    if (parallel) {
        std::vector<std::future<Outcome>> jobs;
        for (const auto& in : inputs)
            jobs.push_back(std::async(std::launch::async, [&in] { return run(in); }));
        for (auto& j : jobs)
            outcomes.push_back(j.get());
    } else {
        for (const auto& in : inputs)
            outcomes.push_back(run(in));
    }

    CorpusSummary s;
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        compare_fixture(fixtures[k], outcomes[k], s.comparisons);
        s.seconds.push_back(outcomes[k].seconds);
    }
    s.type3_absent = true;
    for (std::size_t k = fixtures.size(); k < outcomes.size(); ++k) {
        const Outcome& o = outcomes[k];
        ++s.scanned;
        if (!o.result) {
            s.type3_absent = false;
            continue;
        }
        s.max_q = std::max(s.max_q, o.result->report.q);
        const Classification& c = o.result->report.classification;
        if (o.result->report.q > 2 || (c.family == "kodaira-thurston" && c.type == 3))
            s.type3_absent = false;
    }
    return s;
}

Json corpus_json(const CorpusSummary& s)
{
    Json doc;
    doc["engine"] = engine_version;
    Json rows = Json::array();
    for (const auto& c : s.comparisons)
        rows.push_back({{"fixture", c.fixture},
                        {"field", c.field},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"match", c.match},
                        {"note", c.note}});
    doc["comparisons"] = std::move(rows);
    doc["kodaira_thurston_type3"] = {
        {"random_structures", s.scanned}, {"max_q", s.max_q}, {"absent", s.type3_absent}};
    doc["status"] = s.passed() ? "pass" : "fail";
    return doc;
}

std::string corpus_text(const CorpusSummary& s)
{
    std::ostringstream out;
    out << engine_version << "\ncorpus verification\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %-18s %-26s %-26s %s\n", "fixture", "field", "expected", "actual", "");
    out << buf;
    std::size_t deviations = 0;
    for (const auto& c : s.comparisons) {
        deviations += !c.match;
        std::snprintf(buf, sizeof buf, "%-20s %-18s %-26s %-26s %s\n", c.fixture.c_str(), c.field.c_str(),
                      c.expected.c_str(), c.actual.c_str(), c.match ? "ok" : "DEVIATION");
        out << buf;
        if (!c.note.empty())
            out << "    note: " << c.note << "\n";
    }
    out << "kodaira-thurston Type 3 among " << s.scanned << " random left-invariant structures: "
        << (s.type3_absent ? "absent" : "FOUND or analysis failed") << " (max q = " << s.max_q << ")\n";
    out << deviations << " deviation(s); " << (s.passed() ? "corpus verified" : "corpus verification FAILED") << "\n";
    return out.str();
}

} // namespace hodgedr
