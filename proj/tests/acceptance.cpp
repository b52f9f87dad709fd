// Acceptance run: one line per criterion, then timing lines. Exit status is
// nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hodgedr/corpus.hpp"
#include "hodgedr/errors.hpp"
#include "hodgedr/sampling.hpp"

using namespace hodgedr;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
};

int failed = 0;

void report(const std::string& name, const Outcome& o)
{
    std::printf("%s  %s%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.empty() ? "" : "  -- ",
                o.detail.c_str());
    failed += !o.ok;
}

void criterion(const std::string& name, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.expect(false, std::string("exception: ") + e.what());
    }
    report(name, o);
}

const CorpusFixture& fixture(const std::string& id)
{
    for (const auto& f : corpus_fixtures())
        if (f.id == id)
            return f;
    throw std::out_of_range(id);
}

const AnalysisResult& result(const std::string& id)
{
    static std::vector<std::pair<std::string, AnalysisResult>> cache;
    for (const auto& [k, v] : cache)
        if (k == id)
            return v;
    AnalysisInput in = fixture(id).input;
    in.flags.include_harmonic = true;
    cache.emplace_back(id, analyze(in));
    return cache.back().second;
}

std::vector<AnalysisInput> random_inputs(std::size_t count)
{
    Sampler s(20240613);
    std::vector<AnalysisInput> out;
    for (std::size_t k = 0; k < count; ++k) {
        const int which = static_cast<int>(s.integer(0, 2));
        const LieAlgebraPresentation base =
            which == 0 ? torus_algebra() : which == 1 ? filiform_algebra() : kodaira_thurston_algebra();
        const LieAlgebraPresentation p = change_basis(validate(base), s.invertible(4, 2));
        out.push_back({p, random_structure(s, 4).j, std::nullopt, {}});
    }
    return out;
}

std::string grid_str(const Grid& g)
{
    std::string s;
    for (const auto& row : g) {
        s += s.empty() ? "" : " | ";
        for (std::size_t q = 0; q < row.size(); ++q)
            s += (q ? " " : "") + std::to_string(row[q]);
    }
    return s;
}

void expect_row(Outcome& o, const std::string& id, const std::vector<std::size_t>& betti, const Grid& diamond, long q,
                long sigma_tilde, long sigma, long chi, long p_g)
{
    const InvariantReport& r = result(id).report;
    o.expect(r.betti == betti, id + " betti");
    o.expect(r.diamond.h == diamond, id + " diamond " + grid_str(r.diamond.h));
    o.expect(r.q == q, id + " q = " + std::to_string(r.q));
    o.expect(r.sigma_tilde == sigma_tilde, id + " sigma_tilde = " + std::to_string(r.sigma_tilde));
    o.expect(r.sigma == sigma, id + " sigma = " + std::to_string(r.sigma));
    o.expect(r.chi == chi, id + " chi = " + std::to_string(r.chi));
    o.expect(r.p_g == p_g, id + " p_g = " + std::to_string(r.p_g));
}

std::size_t failures(const std::vector<Check>& checks, std::string& first)
{
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail && n++ == 0)
            first = c.name;
    return n;
}

} // namespace

int main()
{
    const auto suite_start = Clock::now();

    // Corpus entries are timed first, one full analysis each (harmonic included).
    std::vector<std::pair<std::string, double>> timings;
    for (const auto& fx : corpus_fixtures()) {
        const auto t0 = Clock::now();
        result(fx.id);
        timings.emplace_back(fx.id, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    const std::vector<AnalysisInput> randoms = random_inputs(24);

    criterion("1 corpus: filiform", [](Outcome& o) {
        expect_row(o, "filiform-J1", {1, 2, 2, 2, 1}, {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}, 1, 0, 0, 0, 0);
        expect_row(o, "filiform-J2", {1, 2, 2, 2, 1}, {{1, 2, 0}, {0, 2, 0}, {0, 2, 1}}, 2, -4, 0, -1, 0);
        const auto& notes = result("filiform-J2").report.annotations;
        bool annotated = false;
        for (const auto& a : notes)
            annotated |= a.find("sigma_tilde") != std::string::npos;
        o.expect(annotated, "filiform-J2 sigma_tilde discrepancy not annotated");
        o.expect(result("filiform-J1").report.classification.type == 1, "filiform-J1 not Type 1");
        o.expect(result("filiform-J2").report.classification.type == 2, "filiform-J2 not Type 2");
    });

    criterion("2 corpus: Kodaira-Thurston", [](Outcome& o) {
        expect_row(o, "kodaira-thurston-J1", {1, 3, 4, 3, 1}, {{1, 2, 1}, {1, 2, 1}, {1, 2, 1}}, 2, 0, 0, 0, 1);
        expect_row(o, "kodaira-thurston-J2", {1, 3, 4, 3, 1}, {{1, 2, 0}, {1, 4, 1}, {0, 2, 1}}, 2, -4, 0, -1, 0);
        o.expect(result("kodaira-thurston-J1").report.integrable, "J1 not integrable");
        o.expect(!result("kodaira-thurston-J2").report.integrable, "J2 integrable");
        o.expect(result("kodaira-thurston-J1").report.classification.type == 1, "J1 not Type 1");
        o.expect(result("kodaira-thurston-J2").report.classification.type == 2, "J2 not Type 2");
    });

    criterion("3 first stable pages", [](Outcome& o) {
        const std::vector<std::pair<std::string, int>> want{{"filiform-J1", 2},
                                                            {"filiform-J2", 1},
                                                            {"kodaira-thurston-J1", 1},
                                                            {"kodaira-thurston-J2", 1},
                                                            {"torus", 1}};
        for (const auto& [id, r] : want) {
            const int got = result(id).stabilization.first_stable;
            o.expect(got == r, id + " first stable page " + std::to_string(got));
        }
    });

    criterion("4 explicit E1/E2 equal generic pages (corpus + 24 random)", [&](Outcome& o) {
        for (const auto& fx : corpus_fixtures()) {
            const AnalysisResult& r = result(fx.id);
            o.expect(r.e1_explicit == r.page_at(1).dims, fx.id + " E1");
            o.expect(r.e2_explicit == r.page_at(2).dims, fx.id + " E2");
        }
        for (std::size_t k = 0; k < randoms.size(); ++k) {
            const AnalysisResult r = analyze(randoms[k]);
            o.expect(r.e1_explicit == r.page_at(1).dims, "random " + std::to_string(k) + " E1");
            o.expect(r.e2_explicit == r.page_at(2).dims, "random " + std::to_string(k) + " E2");
        }
    });

    criterion("5 identity suite (corpus + 24 random)", [&](Outcome& o) {
        std::size_t evaluated = 0;
        auto run = [&](const std::string& name, const AnalysisResult& r) {
            std::string first;
            const std::size_t n = failures(r.report.checks, first);
            o.expect(n == 0, name + ": " + std::to_string(n) + " failed, first '" + first + "'");
            std::size_t d2 = 0;
            for (const auto& c : r.d2)
                d2 += c.holds;
            o.expect(d2 == 7, name + ": d^2 relations");
            for (const auto& c : r.report.checks)
                evaluated += c.status == CheckStatus::Pass;
        };
        for (const auto& fx : corpus_fixtures())
            run(fx.id, result(fx.id));
        for (std::size_t k = 0; k < randoms.size(); ++k)
            run("random " + std::to_string(k), analyze(randoms[k]));
        o.expect(evaluated > 0, "no checks evaluated");
    });

    criterion("6 purity", [](Outcome& o) {
        for (const auto& fx : corpus_fixtures()) {
            const AnalysisResult& r = result(fx.id);
            o.expect(r.purity.weight2 == PurityStatus::Holds, fx.id + " weight 2");
            const bool hyp = r.report.diamond.at(0, 1) == r.report.diamond.at(1, 0);
            o.expect(r.purity.weight1 == (hyp ? PurityStatus::Holds : PurityStatus::HypothesisNotMet),
                     fx.id + " weight 1 " + purity_status_name(r.purity.weight1));
        }
    });

    criterion("7 torus baseline", [](Outcome& o) {
        const AnalysisResult& r = result("torus");
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; q <= 2; ++q)
                o.expect(r.report.diamond.h[p][q] == binomial(2, p) * binomial(2, q), "torus h^{p,q}");
        for (const auto& pg : r.stabilization.pages)
            for (const auto& d : pg.differentials)
                o.expect(d.matrix.is_zero(), "nonzero differential on page " + std::to_string(pg.r));
        o.expect(r.report.sigma == 0, "sigma");
        o.expect(r.report.classification.label == "integrable-b1-even", r.report.classification.label);
    });

    criterion("8 harmonic sidecar (default metric)", [](Outcome& o) {
        std::string found;
        for (const auto& fx : corpus_fixtures()) {
            const AnalysisResult& r = result(fx.id);
            if (!r.harmonic) {
                o.expect(false, fx.id + " no harmonic report");
                continue;
            }
            const HarmonicReport& h = *r.harmonic;
            o.expect(h.metric == HermitianMetric::standard(4), fx.id + " metric is not the default");
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q)
                    o.expect(h.grid[p][q] == h.grid[2 - p][2 - q], fx.id + " harmonic Serre symmetry");
            for (bool c : h.closed_contained)
                o.expect(c, fx.id + " closed (p,0) forms not harmonic");
            o.expect(h.noether.todd_integral, fx.id + " Td not integral");
            if (h.dependence && found.empty())
                found = fx.id;
        }
        std::printf("INFO  metric dependence: %s\n",
                    found.empty() ? "none found" : ("found on " + found).c_str());
    });

    criterion("9 determinism and round-trip", [&](Outcome& o) {
        for (const auto& fx : corpus_fixtures()) {
            AnalysisInput in = fx.input;
            in.flags.include_harmonic = true;
            const std::string a = pretty(report_json(analyze(in)));
            const std::string b = pretty(report_json(analyze(in)));
            o.expect(a == b, fx.id + " report differs between runs");
            o.expect(report_text(analyze(in)) == report_text(analyze(in)), fx.id + " text report differs");
            const std::string text = serialize(in);
            o.expect(parse_analysis_input(text) == in, fx.id + " parse(serialize) != input");
            o.expect(serialize(parse_analysis_input(text)) == text, fx.id + " serialize not stable");
        }
        for (std::size_t k = 0; k < randoms.size(); ++k) {
            const std::string text = serialize(randoms[k]);
            o.expect(parse_analysis_input(text) == randoms[k], "random " + std::to_string(k) + " round-trip");
        }
        for (const ScanInput& s : {filiform_interpolation_scan(), filiform_constant_scan(), filiform_perturbation_scan()}) {
            o.expect(parse_scan_input(serialize(s)) == s, s.algebra.name + " scan round-trip");
            o.expect(pretty(scan_json(scan(s))) == pretty(scan_json(scan(s, false))), "scan output depends on threading");
        }
    });

    for (const auto& [id, sec] : timings) {
        Outcome o;
        o.expect(sec < 1.0, "limit 1 s");
        char buf[128];
        std::snprintf(buf, sizeof buf, "time %-22s %.3f s", id.c_str(), sec);
        report(buf, o);
    }
    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    Outcome o;
    o.expect(total < 30.0, "limit 30 s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "time full acceptance suite %.3f s", total);
    report(buf, o);

    std::printf("%s\n", failed ? "acceptance: FAILED" : "acceptance: all criteria pass");
    return failed ? 1 : 0;
}
