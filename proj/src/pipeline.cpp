#include "hodgedr/pipeline.hpp"

#include <cstdio>
#include <future>
#include <sstream>

#include "hodgedr/errors.hpp"

namespace hodgedr {

bool AnalysisResult::passed() const
{
    for (const auto& c : report.checks)
        if (c.status == CheckStatus::Fail)
            return false;
    return true;
}

const SpectralPage& AnalysisResult::page_at(int r) const
{
    for (const auto& p : stabilization.pages)
        if (p.r == r)
            return p;
    throw std::out_of_range("page " + std::to_string(r) + " was not computed");
}

namespace {

void add_harmonic_checks(std::vector<Check>& checks, const HarmonicReport& h)
{
    checks.push_back({"harmonic: adjoint identity", h.adjoint_identity ? CheckStatus::Pass : CheckStatus::Fail,
                      h.adjoint_identity ? "true" : "false", "true", "left-invariant"});
    checks.push_back({"harmonic: Serre symmetry", h.serre_symmetric ? CheckStatus::Pass : CheckStatus::Fail,
                      h.serre_symmetric ? "true" : "false", "true", "left-invariant"});
    for (std::size_t p = 0; p < h.closed_contained.size(); ++p)
        checks.push_back({"harmonic: closed (" + std::to_string(p) + ",0)-forms are harmonic",
                          h.closed_contained[p] ? CheckStatus::Pass : CheckStatus::Fail,
                          h.closed_contained[p] ? "true" : "false", "true", "left-invariant"});
}

} // namespace

AnalysisResult analyze(const AnalysisInput& in)
{
    if (in.algebra.dimension != 4)
        throw ValidationError("the invariant suite needs a 4-dimensional Lie algebra, got dimension "
                              + std::to_string(in.algebra.dimension));
    AnalysisResult r;
    r.input = in;

    const LieAlgebra g = validate(in.algebra, in.flags.allow_non_nilpotent);
    const CEComplex ce = ce_differential(g);
    r.betti = betti_numbers(ce);

    const ComplexFrame frame = complex_frame({"J", in.j}, g.dimension());
    const BigradedComplex b = split_differential(frame, ce);
    r.d2 = verify_d2_relations(b);

    const HodgeFiltration f = build_filtration(b);
    r.filtration_compatible = f.compatible();
    r.stabilization = stabilize(f, r.betti);
    r.e1_explicit = e1_explicit(b);
    r.e2_explicit = e2_explicit(b);

    const CohomologyRing ring(ce.complex);
    const IntersectionForm form = intersection_form(ring, orientation_form(frame));

    const HodgeDiamond diamond{r.stabilization.limit};
    const Grid& page1 = r.page_at(1).dims;
    r.report = derived_invariants(diamond, r.betti, form.signature, is_integrable(b), page1);
    if (!g.nilpotent())
        r.report.annotations.push_back("the Lie algebra is not nilpotent: all numbers describe the Lie algebra and "
                                       "need not match any compact quotient");

    const CohomologyFiltration cf = cohomology_filtration(b);
    r.purity = purity_check(cf, b, diamond.h);

    SuiteContext ctx;
    ctx.d2 = r.d2;
    ctx.filtration_compatible = r.filtration_compatible;
    ctx.reassembly = b.reassembly_holds();
    ctx.page1 = page1;
    ctx.page2 = r.page_at(2).dims;
    ctx.e1_explicit = r.e1_explicit;
    ctx.e2_explicit = r.e2_explicit;
    ctx.stabilization = r.stabilization;
    ctx.purity = r.purity;
    r.report.checks = identity_suite(r.report, ctx);

    if (in.flags.include_harmonic || in.metric) {
        const HermitianMetric m = in.metric ? *in.metric : HermitianMetric::standard(g.dimension());
        r.harmonic = harmonic_report(b, m, r.report);
        add_harmonic_checks(r.report.checks, *r.harmonic);
    }
    return r;
}

void require_passing(const AnalysisResult& r)
{
    for (const auto& c : r.report.checks)
        if (c.status == CheckStatus::Fail)
            throw CheckFailed(c.name, "check failed: " + c.name + " (" + c.lhs + " vs " + c.rhs + ")");
}

namespace {

Json bidegree_json(const Bidegree& b)
{
    return Json::array({b.p, b.q});
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

Json classification_json(const Classification& c)
{
    Json j;
    j["label"] = c.label;
    j["family"] = c.family.empty() ? Json(nullptr) : Json(c.family);
    j["type"] = c.type ? Json(c.type) : Json(nullptr);
    return j;
}

Json harmonic_json(const HarmonicReport& h)
{
    Json j;
    j["label"] = "left-invariant";
    j["metric"] = matrix_json(h.metric.gram);
    j["grid"] = grid_json(h.grid);
    j["adjoint_identity"] = h.adjoint_identity;
    j["serre_symmetric"] = h.serre_symmetric;
    j["closed_p0_contained"] = h.closed_contained;
    j["noether"] = {{"index", h.noether.index},
                    {"todd", h.noether.todd.str()},
                    {"todd_integral", h.noether.todd_integral},
                    {"bound", {{"lhs", h.noether.bound_lhs},
                               {"rhs", h.noether.bound_rhs.str()},
                               {"holds", h.noether.bound_holds},
                               {"advisory", true}}}};
    if (h.dependence)
        j["metric_dependence"] = {{"metric", matrix_json(h.dependence->other.gram)},
                                  {"grid", grid_json(h.dependence->other_grid)}};
    else
        j["metric_dependence"] = nullptr;
    return j;
}

std::string grid_rows(const Grid& g)
{
    std::string s;
    for (std::size_t p = 0; p < g.size(); ++p) {
        s += p ? "  " : "";
        s += "[";
        for (std::size_t q = 0; q < g[p].size(); ++q)
            s += (q ? " " : "") + std::to_string(g[p][q]);
        s += "]";
    }
    return s;
}

} // namespace

Json report_json(const AnalysisResult& r)
{
    const InvariantReport& inv = r.report;
    Json doc;
    doc["engine"] = engine_version;
    doc["input"] = to_json(r.input);
    doc["betti"] = r.betti;
    doc["integrable"] = inv.integrable;
    doc["classification"] = classification_json(inv.classification);

    Json pages = Json::array();
    for (const auto& p : r.stabilization.pages) {
        Json diffs = Json::array();
        for (const auto& d : p.differentials)
            diffs.push_back({{"source", bidegree_json(d.source)},
                             {"target", bidegree_json(d.target)},
                             {"rank", rank(d.matrix)},
                             {"matrix", matrix_json(d.matrix)}});
        pages.push_back({{"r", p.r}, {"dims", grid_json(p.dims)}, {"stabilized", p.stabilized},
                         {"differentials", std::move(diffs)}});
    }
    doc["spectral_sequence"] = {{"label", "left-invariant"},
                                {"first_stable_page", r.stabilization.first_stable},
                                {"pages", std::move(pages)},
                                {"e1_explicit", grid_json(r.e1_explicit)},
                                {"e2_explicit", grid_json(r.e2_explicit)}};

    doc["diamond"] = grid_json(inv.diamond.h);
    doc["diamond_text"] = lines(diamond_render(inv.diamond));
    doc["invariants"] = {{"q", inv.q},
                         {"p_g", inv.p_g},
                         {"chi", inv.chi},
                         {"sigma_tilde", inv.sigma_tilde},
                         {"e", inv.euler},
                         {"sigma", inv.sigma},
                         {"b_plus", inv.b_plus},
                         {"b_minus", inv.b_minus},
                         {"c1_squared", inv.c1_squared},
                         {"todd", inv.todd.str()},
                         {"left_invariant_I", inv.left_invariant_i}};
    doc["purity"] = {{"weight2", purity_status_name(r.purity.weight2)},
                     {"weight1", purity_status_name(r.purity.weight1)},
                     {"dim_F1H1", r.purity.dim_f1h1},
                     {"dim_F1H2", r.purity.dim_f1h2},
                     {"dim_F2H2", r.purity.dim_f2h2}};

    Json checks = Json::array();
    for (const auto& c : inv.checks)
        checks.push_back(
            {{"name", c.name}, {"status", check_status_name(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}});
    doc["checks"] = std::move(checks);
    doc["annotations"] = inv.annotations;
    if (r.harmonic)
        doc["harmonic"] = harmonic_json(*r.harmonic);
    doc["status"] = r.passed() ? "pass" : "fail";
    return doc;
}

std::string report_text(const AnalysisResult& r)
{
    const InvariantReport& inv = r.report;
    std::ostringstream out;
    out << engine_version << "\n";
    out << "structure: " << r.input.algebra.name << "\n";
    out << "betti:";
    for (auto b : r.betti)
        out << ' ' << b;
    out << "\nintegrable: " << (inv.integrable ? "yes" : "no") << "\n";
    out << "classification: " << inv.classification.label;
    if (inv.classification.type)
        out << " (" << inv.classification.family << " Type " << inv.classification.type << ")";
    out << "\n\nleft-invariant spectral sequence, first stable page " << r.stabilization.first_stable << "\n";
    for (const auto& p : r.stabilization.pages)
        out << "  E" << p.r << ": " << grid_rows(p.dims) << (p.stabilized ? "  stable" : "") << "\n";
    out << "  E1 explicit: " << grid_rows(r.e1_explicit) << "\n";
    out << "  E2 explicit: " << grid_rows(r.e2_explicit) << "\n";

    out << "\nHodge-de Rham diamond:\n";
    for (const auto& l : lines(diamond_render(inv.diamond)))
        out << "  " << l << "\n";

    out << "\nq = " << inv.q << "  p_g = " << inv.p_g << "  chi = " << inv.chi << "  sigma_tilde = " << inv.sigma_tilde
        << "\ne = " << inv.euler << "  sigma = " << inv.sigma << "  b+ = " << inv.b_plus << "  b- = " << inv.b_minus
        << "\nc1^2 = " << inv.c1_squared << "  Td = " << inv.todd.str() << "  left-invariant I = "
        << inv.left_invariant_i << "\n";
    out << "purity: weight 2 " << purity_status_name(r.purity.weight2) << ", weight 1 "
        << purity_status_name(r.purity.weight1) << "\n";

    if (r.harmonic) {
        const HarmonicReport& h = *r.harmonic;
        out << "\nleft-invariant dbar-harmonic numbers: " << grid_rows(h.grid) << "\n";
        out << "  Noether index " << h.noether.index << ", Td " << h.noether.todd.str() << ", bound h01 >= 1 + h20 - Td: "
            << h.noether.bound_lhs << " >= " << h.noether.bound_rhs.str() << " "
            << (h.noether.bound_holds ? "holds" : "does not hold") << " (advisory)\n";
        if (h.dependence)
            out << "  another metric gives " << grid_rows(h.dependence->other_grid) << "\n";
    }

    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& c : inv.checks)
        (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skip)++;
    out << "\nchecks: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
    for (const auto& c : inv.checks)
        if (c.status == CheckStatus::Fail)
            out << "  FAIL " << c.name << ": " << c.lhs << " vs " << c.rhs << "\n";
    for (const auto& a : inv.annotations)
        out << "note: " << a << "\n";
    return out.str();
}

bool ScanResult::passed() const
{
    for (const auto& r : rows)
        if (!r.ok || !r.checks_passed)
            return false;
    return true;
}

std::string diamond_hash(const Grid& g)
{
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (const auto& row : g) {
        for (auto v : row) {
            for (char c : std::to_string(v))
                mix(static_cast<unsigned char>(c));
            mix(',');
        }
        mix(';');
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

ScanRow scan_one(const ScanInput& in, const ScanSample& s)
{
    ScanRow row;
    row.tag = s.tag;
    try {
        AnalysisInput a{in.algebra, s.j, std::nullopt, in.flags};
        a.flags.include_harmonic = false;
        const AnalysisResult r = analyze(a);
        row.ok = true;
        row.q = r.report.q;
        row.h10 = r.report.diamond.at(1, 0);
        row.b1 = r.betti.at(1);
        row.diamond = r.report.diamond.h;
        row.diamond_hash = diamond_hash(row.diamond);
        row.checks_passed = r.passed();
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace

ScanResult scan(const ScanInput& in, bool parallel)
{
    ScanResult out;
    out.name = in.algebra.name;
    if (parallel) {
        std::vector<std::future<ScanRow>> jobs;
        for (const auto& s : in.samples)
            jobs.push_back(std::async(std::launch::async, [&in, &s] { return scan_one(in, s); }));
        for (auto& j : jobs)
            out.rows.push_back(j.get());
    } else {
        for (const auto& s : in.samples)
            out.rows.push_back(scan_one(in, s));
    }

    auto& rows = out.rows;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!rows[k].ok)
            continue;
        std::vector<std::size_t> nbrs;
        if (k > 0 && rows[k - 1].ok)
            nbrs.push_back(k - 1);
        if (k + 1 < rows.size() && rows[k + 1].ok)
            nbrs.push_back(k + 1);
        for (auto n : nbrs)
            if (rows[n].h10 > rows[k].h10) {
                rows[k].flagged = true;
                rows[k].notes.push_back("neighbor " + rows[n].tag + " has larger h^{1,0} (" + std::to_string(rows[n].h10)
                                        + " > " + std::to_string(rows[k].h10) + ")");
            }
        if (rows[k].q == static_cast<long>(rows[k].b1)) {
            bool same = true;
            for (auto n : nbrs)
                same = same && rows[n].diamond == rows[k].diamond;
            rows[k].notes.push_back(std::string("q = b^1: diamond predicted constant nearby; neighbors ")
                                    + (same ? "agree" : "differ (advisory, sampling resolution)"));
        }
    }
    return out;
}

Json scan_json(const ScanResult& s)
{
    Json doc;
    doc["engine"] = engine_version;
    doc["name"] = s.name;
    Json rows = Json::array();
    for (const auto& r : s.rows) {
        Json j;
        j["tag"] = r.tag;
        if (!r.ok) {
            j["error"] = r.error;
        } else {
            j["q"] = r.q;
            j["h10"] = r.h10;
            j["b1"] = r.b1;
            j["diamond"] = grid_json(r.diamond);
            j["diamond_hash"] = r.diamond_hash;
            j["checks_passed"] = r.checks_passed;
            j["flagged"] = r.flagged;
            j["notes"] = r.notes;
        }
        rows.push_back(std::move(j));
    }
    doc["samples"] = std::move(rows);
    doc["status"] = s.passed() ? "pass" : "fail";
    return doc;
}

std::string scan_text(const ScanResult& s)
{
    std::ostringstream out;
    out << engine_version << "\nscan: " << s.name << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-16s %3s %4s %-16s %s\n", "tag", "q", "h10", "diamond", "flag");
    out << buf;
    for (const auto& r : s.rows) {
        if (!r.ok) {
            out << r.tag << "  error: " << r.error << "\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%-16s %3ld %4zu %-16s %s\n", r.tag.c_str(), r.q, r.h10,
                      r.diamond_hash.c_str(), r.flagged ? "*" : "");
        out << buf;
        for (const auto& n : r.notes)
            out << "    " << n << "\n";
    }
    out << (s.passed() ? "all samples analyzed\n" : "some samples failed\n");
    return out.str();
}

} // namespace hodgedr
