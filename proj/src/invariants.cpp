#include "hodgedr/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "hodgedr/errors.hpp"

namespace hodgedr {

namespace {

long to_signed(std::size_t v)
{
    return static_cast<long>(v);
}

std::string num(long v)
{
    return std::to_string(v);
}

std::string grid_str(const Grid& g)
{
    std::string s;
    for (std::size_t p = 0; p < g.size(); ++p) {
        if (p)
            s += " / ";
        for (std::size_t q = 0; q < g[p].size(); ++q) {
            if (q)
                s += ' ';
            s += std::to_string(g[p][q]);
        }
    }
    return s;
}

// Floor modulus, so that negative values land in [0, m).
long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

Check compare(std::string name, long lhs, long rhs, std::string note = {})
{
    return {std::move(name), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail, num(lhs), num(rhs), std::move(note)};
}

Check at_most(std::string name, long lhs, long rhs)
{
    return {std::move(name), lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail, num(lhs), num(rhs), "lhs <= rhs"};
}

Check skipped(std::string name, std::string why)
{
    return {std::move(name), CheckStatus::Skip, "", "", std::move(why)};
}

Check boolean(std::string name, bool ok, std::string note = {})
{
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "true" : "false", "true", std::move(note)};
}

Check grids_equal(std::string name, const Grid& lhs, const Grid& rhs)
{
    return {std::move(name), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail, grid_str(lhs), grid_str(rhs), ""};
}

} // namespace

HodgeDiamond hodge_de_rham_numbers(const Grid& limit, const std::vector<std::size_t>& betti)
{
    if (limit.size() != 3)
        throw std::invalid_argument("Hodge diamonds are defined for dimension 4 only");
    HodgeDiamond d{limit};
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            if (d.at(p, q) != d.at(2 - p, 2 - q))
                throw SerreViolation("Serre duality", "h^{" + std::to_string(p) + "," + std::to_string(q) + "} = "
                                     + std::to_string(d.at(p, q)) + " but its Serre dual is "
                                     + std::to_string(d.at(2 - p, 2 - q)));
    if (d.at(0, 0) != 1)
        throw SerreViolation("h^{0,0} = 1", "h^{0,0} = " + std::to_string(d.at(0, 0)));
    for (std::size_t n = 0; n < betti.size(); ++n) {
        std::size_t t = 0;
        for (std::size_t p = 0; p <= 2; ++p)
            if (n >= p && n - p <= 2)
                t += limit[p][n - p];
        if (t != betti[n])
            throw DegenerationViolation("degeneration", "sum of h^{p,q} with p+q = " + std::to_string(n) + " is " + std::to_string(t)
                                        + ", Betti number is " + std::to_string(betti[n]));
    }
    return d;
}

const char* check_status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Skip:
        return "skip";
    }
    return "";
}

InvariantReport derived_invariants(const HodgeDiamond& d, const std::vector<std::size_t>& betti, const Signature& sig,
                                   bool integrable, const Grid& e1)
{
    InvariantReport r;
    r.betti = betti;
    r.diamond = d;
    r.integrable = integrable;
    r.q = to_signed(d.at(0, 1));
    r.p_g = to_signed(d.at(0, 2));
    r.chi = 1 - r.q + r.p_g;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            r.sigma_tilde += (q % 2 ? -1 : 1) * to_signed(d.at(p, q));
    for (std::size_t k = 0; k < betti.size(); ++k)
        r.euler += (k % 2 ? -1 : 1) * to_signed(betti[k]);
    r.b_plus = sig.positive;
    r.b_minus = sig.negative;
    r.sigma = sig.sigma();
    r.c1_squared = 3 * r.sigma + 2 * r.euler;
    r.todd = Rational(r.c1_squared + r.euler, 12);
    r.left_invariant_i = to_signed(e1.at(0).at(1)) - to_signed(e1.at(1).at(0));
    r.classification = classify(r);

    for (const auto& row : reference_rows())
        if (row.family == r.classification.family && row.type == r.classification.type
            && row.sigma_tilde != r.sigma_tilde)
            r.annotations.push_back("reference table lists sigma_tilde = " + num(row.sigma_tilde) + " for "
                                    + row.family + " Type " + num(row.type)
                                    + "; the identity sigma_tilde = 4*chi - e gives " + num(4 * r.chi - r.euler)
                                    + " and the computed value is " + num(r.sigma_tilde));
    return r;
}

std::vector<Check> identity_suite(const InvariantReport& r, const SuiteContext& ctx)
{
    std::vector<Check> out;
    const HodgeDiamond& d = r.diamond;
    auto h = [&](int p, int q) { return to_signed(d.at(p, q)); };
    auto b = [&](std::size_t k) { return k < r.betti.size() ? to_signed(r.betti[k]) : 0L; };

    if (ctx.d2.empty())
        out.push_back(skipped("d^2 relations", "not evaluated"));
    for (const auto& rel : ctx.d2)
        out.push_back({"d^2: " + rel.name, rel.holds ? CheckStatus::Pass : CheckStatus::Fail,
                       num(to_signed(rel.nonzero_entries)), "0", "nonzero entries of the composite"});

    if (ctx.reassembly)
        out.push_back(boolean("reassembly mubar + delbar + del + mu = d", *ctx.reassembly));
    else
        out.push_back(skipped("reassembly mubar + delbar + del + mu = d", "not evaluated"));
    if (ctx.filtration_compatible)
        out.push_back(boolean("filtration compatible d(F^p) in F^p", *ctx.filtration_compatible));
    else
        out.push_back(skipped("filtration compatible d(F^p) in F^p", "not evaluated"));

    if (ctx.page1 && ctx.e1_explicit)
        out.push_back(grids_equal("E1 explicit = E1 generic", *ctx.e1_explicit, *ctx.page1));
    else
        out.push_back(skipped("E1 explicit = E1 generic", "not evaluated"));
    if (ctx.page2 && ctx.e2_explicit)
        out.push_back(grids_equal("E2 explicit = E2 generic", *ctx.e2_explicit, *ctx.page2));
    else
        out.push_back(skipped("E2 explicit = E2 generic", "not evaluated"));

    if (ctx.stabilization) {
        out.push_back(boolean("pages monotone", ctx.stabilization->monotone));
        out.push_back(boolean("page transitions dim E_{r+1} = ker - incoming rank",
                              ctx.stabilization->transitions_consistent));
    }

    out.push_back(compare("h^{0,0} = 1", h(0, 0), 1));
    out.push_back(compare("h^{2,2} = 1", h(2, 2), 1));
    const std::pair<int, int> serre[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    for (auto [p, q] : serre)
        out.push_back(compare("Serre h^{" + num(p) + "," + num(q) + "} = h^{" + num(2 - p) + "," + num(2 - q) + "}",
                              h(p, q), h(2 - p, 2 - q)));

    for (int k = 0; k <= 4; ++k) {
        long s = 0;
        for (int p = 0; p <= 2; ++p)
            if (k - p >= 0 && k - p <= 2)
                s += h(p, k - p);
        out.push_back(compare("degeneration sum h^{p,q} (p+q=" + num(k) + ") = b^" + num(k), s,
                              b(static_cast<std::size_t>(k))));
    }

    long e_from_h = 0;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            e_from_h += ((p + q) % 2 ? -1 : 1) * h(p, q);
    out.push_back(compare("Euler sum (-1)^k b^k = sum (-1)^{p+q} h^{p,q}", r.euler, e_from_h));
    out.push_back(compare("sigma_tilde = 4 chi - e", r.sigma_tilde, 4 * r.chi - r.euler));

    const Rational four_td = Rational(4) * r.todd;
    out.push_back({"e + sigma = 4 Td", Rational(r.euler + r.sigma) == four_td ? CheckStatus::Pass : CheckStatus::Fail,
                   num(r.euler + r.sigma), four_td.str(), "c1^2 := 3 sigma + 2 e"});
    const Rational rhs34 = Rational(4) * (r.todd - Rational(r.chi));
    out.push_back({"sigma - sigma_tilde = 4 (Td - chi)",
                   Rational(r.sigma - r.sigma_tilde) == rhs34 ? CheckStatus::Pass : CheckStatus::Fail,
                   num(r.sigma - r.sigma_tilde), rhs34.str(), ""});
    out.push_back(compare("sigma = -e mod 4", mod(r.sigma, 4), mod(-r.euler, 4)));
    out.push_back(compare("c1^2 + e = 0 mod 12", mod(r.c1_squared + r.euler, 12), 0));
    out.push_back({"Td integral", r.todd.is_integer() ? CheckStatus::Pass : CheckStatus::Fail, r.todd.str(), "integer",
                   ""});

    out.push_back(at_most("h^{1,0} <= h^{0,1}", h(1, 0), h(0, 1)));
    out.push_back(at_most("b^1 <= 2q", b(1), 2 * r.q));
    out.push_back(at_most("2q <= 2 b^1", 2 * r.q, 2 * b(1)));
    if (b(1) <= 1)
        out.push_back(compare("q = b^1 when b^1 <= 1", r.q, b(1)));
    else
        out.push_back(skipped("q = b^1 when b^1 <= 1", "b^1 = " + num(b(1))));

    if (!r.integrable) {
        out.push_back(compare("non-integrable: h^{1,1} = b^2", h(1, 1), b(2)));
        out.push_back(compare("non-integrable: h^{2,0} = 0", h(2, 0), 0));
        out.push_back(compare("non-integrable: h^{0,2} = 0", h(0, 2), 0));
    } else {
        for (const char* n : {"non-integrable: h^{1,1} = b^2", "non-integrable: h^{2,0} = 0",
                              "non-integrable: h^{0,2} = 0"})
            out.push_back(skipped(n, "structure is integrable"));
    }

    const std::string int_only = "structure is not integrable";
    if (r.integrable) {
        if (ctx.page1 && ctx.page2)
            out.push_back(grids_equal("integrable: E1 = E2", *ctx.page1, *ctx.page2));
        else
            out.push_back(skipped("integrable: E1 = E2", "pages not evaluated"));
        out.push_back({"integrable: b+ >= 2 p_g", to_signed(r.b_plus) >= 2 * r.p_g ? CheckStatus::Pass
                                                                                     : CheckStatus::Fail,
                       num(to_signed(r.b_plus)), num(2 * r.p_g), "lhs >= rhs"});
        const long bm = to_signed(r.b_minus);
        if (b(1) % 2 == 0) {
            out.push_back(compare("integrable, b^1 even: h^{0,1} = h^{1,0}", h(0, 1), h(1, 0)));
            out.push_back(compare("integrable, b^1 even: h^{1,1} = b- + 1", h(1, 1), bm + 1));
            out.push_back(skipped("integrable, b^1 odd: h^{0,1} = h^{1,0} + 1", "b^1 is even"));
            out.push_back(skipped("integrable, b^1 odd: h^{1,1} = b-", "b^1 is even"));
        } else {
            out.push_back(skipped("integrable, b^1 even: h^{0,1} = h^{1,0}", "b^1 is odd"));
            out.push_back(skipped("integrable, b^1 even: h^{1,1} = b- + 1", "b^1 is odd"));
            out.push_back(compare("integrable, b^1 odd: h^{0,1} = h^{1,0} + 1", h(0, 1), h(1, 0) + 1));
            out.push_back(compare("integrable, b^1 odd: h^{1,1} = b-", h(1, 1), bm));
        }
    } else {
        for (const char* n : {"integrable: E1 = E2", "integrable: b+ >= 2 p_g", "integrable, b^1 even: h^{0,1} = h^{1,0}",
                              "integrable, b^1 even: h^{1,1} = b- + 1", "integrable, b^1 odd: h^{0,1} = h^{1,0} + 1",
                              "integrable, b^1 odd: h^{1,1} = b-"})
            out.push_back(skipped(n, int_only));
    }

    if (ctx.purity) {
        const PurityReport& pr = *ctx.purity;
        out.push_back({"purity weight 2: F^1H^2 + conj F^2H^2 = H^2",
                       pr.weight2 == PurityStatus::Holds ? CheckStatus::Pass : CheckStatus::Fail,
                       num(to_signed(pr.dim_f1h2)) + " + " + num(to_signed(pr.dim_f2h2)), num(to_signed(pr.b2)),
                       "span " + num(to_signed(pr.span_weight2))});
        if (pr.weight1 == PurityStatus::HypothesisNotMet)
            out.push_back(skipped("purity weight 1: F^1H^1 + conj F^1H^1 = H^1", "hypothesis h^{0,1} = h^{1,0} not met"));
        else
            out.push_back({"purity weight 1: F^1H^1 + conj F^1H^1 = H^1",
                           pr.weight1 == PurityStatus::Holds ? CheckStatus::Pass : CheckStatus::Fail,
                           num(2 * to_signed(pr.dim_f1h1)), num(to_signed(pr.b1)),
                           "span " + num(to_signed(pr.span_weight1))});
    } else {
        out.push_back(skipped("purity weight 2: F^1H^2 + conj F^2H^2 = H^2", "not evaluated"));
        out.push_back(skipped("purity weight 1: F^1H^1 + conj F^1H^1 = H^1", "not evaluated"));
    }
    return out;
}

const std::vector<ReferenceRow>& reference_rows()
{
    static const std::vector<ReferenceRow> rows{
        {"filiform", 1, false, {1, 2, 2, 2, 1}, {{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}, 1, 0, 0, 0, 0},
        {"filiform", 2, false, {1, 2, 2, 2, 1}, {{1, 2, 0}, {0, 2, 0}, {0, 2, 1}}, 2, 4, 0, -1, 0},
        {"kodaira-thurston", 1, true, {1, 3, 4, 3, 1}, {{1, 2, 1}, {1, 2, 1}, {1, 2, 1}}, 2, 0, 0, 0, 1},
        {"kodaira-thurston", 2, false, {1, 3, 4, 3, 1}, {{1, 2, 0}, {1, 4, 1}, {0, 2, 1}}, 2, -4, 0, -1, 0},
        {"kodaira-thurston", 3, false, {1, 3, 4, 3, 1}, {{1, 3, 0}, {0, 4, 0}, {0, 3, 1}}, 3, -8, 0, -2, 0},
    };
    return rows;
}

Classification classify(const InvariantReport& r)
{
    Classification c;
    if (!r.integrable)
        c.label = "non-integrable";
    else
        c.label = r.betti.size() > 1 && r.betti[1] % 2 == 0 ? "integrable-b1-even" : "integrable-b1-odd";
    for (const auto& row : reference_rows())
        if (row.betti == r.betti && row.integrable == r.integrable && row.diamond == r.diamond.h) {
            c.family = row.family;
            c.type = row.type;
            break;
        }
    return c;
}

std::string diamond_render(const HodgeDiamond& d)
{
    std::size_t width = 1;
    for (const auto& row : d.h)
        for (auto v : row)
            width = std::max(width, std::to_string(v).size());

    std::ostringstream out;
    for (int n = 4; n >= 0; --n) {
        std::vector<std::string> cells(5, std::string(width, ' '));
        for (int p = 0; p <= 2; ++p) {
            const int q = n - p;
            if (q < 0 || q > 2)
                continue;
            std::string v = std::to_string(d.at(p, q));
            v.insert(0, width - v.size(), ' ');
            cells[static_cast<std::size_t>(2 - (p - q))] = v;
        }
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c)
                line += ' ';
            line += cells[c];
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    return out.str();
}

} // namespace hodgedr
