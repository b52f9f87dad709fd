#include "hodgedr/spectral.hpp"

#include <algorithm>

#include "hodgedr/errors.hpp"

namespace hodgedr {

namespace {

std::size_t degree_rank(const BigradedComplex& b, int n)
{
    if (n < 0 || n > static_cast<int>(b.dimension()))
        return 0;
    return b.total().rank_in_degree(static_cast<std::size_t>(n));
}

// Embeds a subspace of A^{p,q} into the total degree p+q space.
Subspace embed(const BigradedComplex& b, int p, int q, const Subspace& local)
{
    const Matrix e = b.embedding(p, q);
    return image(e, local);
}

Grid empty_grid(std::size_t m)
{
    return Grid(m + 1, std::vector<std::size_t>(m + 1, 0));
}

} // namespace

HodgeFiltration::HodgeFiltration(BigradedComplex b) : b_(std::move(b))
{
    const int m = static_cast<int>(b_.half());
    const int top = static_cast<int>(b_.dimension());
    for (int n = 0; n <= top; ++n) {
        const std::size_t ambient = degree_rank(b_, n);
        std::vector<Subspace> per_p;
        for (int p = 0; p <= m; ++p) {
            if (p > n) {
                per_p.emplace_back(ambient);
                continue;
            }
            Subspace s = embed(b_, p, n - p, kernel(b_.component(Component::MuBar, p, n - p)));
            std::vector<std::size_t> higher;
            for (int s2 = p + 1; s2 <= m; ++s2) {
                const auto& pos = b_.positions(s2, n - s2);
                higher.insert(higher.end(), pos.begin(), pos.end());
            }
            std::sort(higher.begin(), higher.end());
            per_p.push_back(sum(s, Subspace::coordinate(ambient, higher)));
        }
        levels_.push_back(std::move(per_p));
    }

    for (int n = 0; n < top; ++n)
        for (int p = 0; p <= m; ++p) {
            const Subspace img = image(b_.total().d[static_cast<std::size_t>(n)], level(p, n));
            if (!level(p, n + 1).contains(img))
                bad_.emplace_back(p, n);
        }
}

Subspace HodgeFiltration::level(int p, int n) const
{
    const std::size_t ambient = degree_rank(b_, n);
    if (n < 0 || n > static_cast<int>(b_.dimension()))
        return Subspace(0);
    if (p <= 0)
        return Subspace::full(ambient);
    if (p > static_cast<int>(b_.half()))
        return Subspace(ambient);
    return levels_[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
}

HodgeFiltration build_filtration(const BigradedComplex& b)
{
    return HodgeFiltration(b);
}

std::size_t SpectralPage::total(std::size_t n) const
{
    std::size_t t = 0;
    for (std::size_t p = 0; p < dims.size(); ++p)
        if (n >= p && n - p < dims.size())
            t += dims[p][n - p];
    return t;
}

namespace {

Subspace cycles(const HodgeFiltration& f, int r, int p, int n)
{
    const BigradedComplex& b = f.complex();
    if (n < 0 || n > static_cast<int>(b.dimension()))
        return Subspace(0);
    const Matrix& d = b.total().d[static_cast<std::size_t>(n)];
    return intersect(f.level(p, n), preimage(d, f.level(p + r, n + 1)));
}

Subspace boundaries(const HodgeFiltration& f, int r, int p, int n)
{
    const BigradedComplex& b = f.complex();
    Subspace lower = cycles(f, r - 1, p + 1, n);
    if (n == 0)
        return lower;
    const Matrix& d = b.total().d[static_cast<std::size_t>(n - 1)];
    return sum(lower, image(d, cycles(f, r - 1, p - r + 1, n - 1)));
}

} // namespace

SpectralPage page(const HodgeFiltration& f, int r)
{
    const BigradedComplex& b = f.complex();
    const int m = static_cast<int>(b.half());
    SpectralPage pg;
    pg.r = r;
    pg.dims = empty_grid(b.half());

    std::vector<std::vector<std::vector<Vector>>> reps(m + 1, std::vector<std::vector<Vector>>(m + 1));
    std::vector<std::vector<Subspace>> dens(m + 1, std::vector<Subspace>(m + 1));
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const int n = p + q;
            const Subspace num = cycles(f, r, p, n);
            Subspace den = boundaries(f, r, p, n);
            if (!num.contains(den))
                throw InternalInconsistency("page " + std::to_string(r) + ": boundaries not inside cycles at ("
                                            + std::to_string(p) + "," + std::to_string(q) + ")");
            pg.dims[p][q] = num.dim() - den.dim();
            reps[p][q] = complement_basis(num, den);
            dens[p][q] = std::move(den);
        }

    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const int tp = p + r;
            const int tq = q - r + 1;
            if (!b.in_range(tp, tq) || reps[p][q].empty() || reps[tp][tq].empty())
                continue;
            const Matrix& d = b.total().d[static_cast<std::size_t>(p + q)];
            const auto& target = reps[tp][tq];
            std::vector<Vector> basis = target;
            const auto& den = dens[tp][tq].basis();
            basis.insert(basis.end(), den.begin(), den.end());

            Matrix delta(target.size(), reps[p][q].size());
            for (std::size_t c = 0; c < reps[p][q].size(); ++c) {
                const auto coords = coordinates(basis, d * reps[p][q][c], degree_rank(b, tp + tq));
                if (!coords)
                    throw InternalInconsistency("page differential leaves the target cycles");
                for (std::size_t row = 0; row < target.size(); ++row)
                    delta(row, c) = (*coords)[row];
            }
            pg.differentials.push_back({{p, q}, {tp, tq}, std::move(delta)});
        }
    return pg;
}

bool transition_consistent(const SpectralPage& current, const SpectralPage& next)
{
    const std::size_t m = current.dims.size() - 1;
    Grid expected = current.dims;
    for (const auto& d : current.differentials) {
        const std::size_t rk = rank(d.matrix);
        expected[static_cast<std::size_t>(d.source.p)][static_cast<std::size_t>(d.source.q)] -= rk;
        expected[static_cast<std::size_t>(d.target.p)][static_cast<std::size_t>(d.target.q)] -= rk;
    }
    for (std::size_t p = 0; p <= m; ++p)
        for (std::size_t q = 0; q <= m; ++q)
            if (expected[p][q] != next.dims[p][q])
                return false;
    return true;
}

namespace {

// Matrix assembled from blocks; sizes give the row and column partition.
struct Block {
    std::size_t row;
    std::size_t col;
    Matrix m;
};

Matrix assemble(const std::vector<std::size_t>& row_sizes, const std::vector<std::size_t>& col_sizes,
                const std::vector<Block>& blocks)
{
    std::vector<std::size_t> row_off{0}, col_off{0};
    for (auto s : row_sizes)
        row_off.push_back(row_off.back() + s);
    for (auto s : col_sizes)
        col_off.push_back(col_off.back() + s);
    Matrix out(row_off.back(), col_off.back());
    for (const auto& blk : blocks) {
        if (blk.m.rows() != row_sizes[blk.row] || blk.m.cols() != col_sizes[blk.col])
            throw InternalInconsistency("block size mismatch");
        for (std::size_t r = 0; r < blk.m.rows(); ++r)
            for (std::size_t c = 0; c < blk.m.cols(); ++c)
                out(row_off[blk.row] + r, col_off[blk.col] + c) = blk.m(r, c);
    }
    return out;
}

// Projection of a subspace of X ⊕ (rest) onto its first `head` coordinates.
Subspace project_head(const Subspace& s, std::size_t head)
{
    std::vector<Vector> vs;
    for (const auto& v : s.basis())
        vs.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(head));
    return Subspace::span(head, vs);
}

Matrix negate(Matrix m)
{
    return m * Scalar(-1);
}

std::size_t checked_quotient(const Subspace& num, const Subspace& den, const char* what)
{
    if (!num.contains(den))
        throw InternalInconsistency(std::string(what) + ": denominator not inside numerator");
    return num.dim() - den.dim();
}

} // namespace

Grid e1_explicit(const BigradedComplex& b)
{
    const int m = static_cast<int>(b.half());
    Grid g = empty_grid(b.half());
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const Matrix mubar_x = b.component(Component::MuBar, p, q);
            const Matrix delbar_x = b.component(Component::DelBar, p, q);
            // ∂̄x ∈ μ̄(A^{p+1,q-1})
            const Subspace hit = image(b.component(Component::MuBar, p + 1, q - 1));
            Subspace num = intersect(kernel(mubar_x), preimage(delbar_x, hit));

            const Subspace from_a = image(b.component(Component::MuBar, p + 1, q - 2));
            const Subspace from_b =
                image(b.component(Component::DelBar, p, q - 1), kernel(b.component(Component::MuBar, p, q - 1)));
            Subspace den = sum(from_a, from_b);
            g[p][q] = checked_quotient(num, den, "e1_explicit");
        }
    return g;
}

Grid e2_explicit(const BigradedComplex& b)
{
    using C = Component;
    const int m = static_cast<int>(b.half());
    Grid g = empty_grid(b.half());
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            // Numerator on (x, y, z) ∈ A^{p,q} ⊕ A^{p+1,q-1} ⊕ A^{p+2,q-2}.
            const std::vector<std::size_t> vars{b.dim(p, q), b.dim(p + 1, q - 1), b.dim(p + 2, q - 2)};
            const std::vector<std::size_t> eqs{b.dim(p - 1, q + 2), b.dim(p, q + 1), b.dim(p + 1, q)};
            const Matrix sys = assemble(eqs, vars,
                                        {
                                            {0, 0, b.component(C::MuBar, p, q)},
                                            {1, 0, b.component(C::DelBar, p, q)},
                                            {1, 1, negate(b.component(C::MuBar, p + 1, q - 1))},
                                            {2, 0, b.component(C::Del, p, q)},
                                            {2, 1, negate(b.component(C::DelBar, p + 1, q - 1))},
                                            {2, 2, negate(b.component(C::MuBar, p + 2, q - 2))},
                                        });
            const Subspace num = project_head(kernel(sys), vars[0]);

            // Denominator: μ̄a + ∂̄b + ∂c over (a, b, c) ∈ A^{p+1,q-2} ⊕ A^{p,q-1} ⊕ A^{p-1,q}
            // subject to μ̄b + ∂̄c = 0 and μ̄c = 0.
            const std::vector<std::size_t> dvars{b.dim(p + 1, q - 2), b.dim(p, q - 1), b.dim(p - 1, q)};
            const std::vector<std::size_t> deqs{b.dim(p - 1, q + 1), b.dim(p - 2, q + 2)};
            const Matrix constraints = assemble(deqs, dvars,
                                                {
                                                    {0, 1, b.component(C::MuBar, p, q - 1)},
                                                    {0, 2, b.component(C::DelBar, p - 1, q)},
                                                    {1, 2, b.component(C::MuBar, p - 1, q)},
                                                });
            const Matrix produce = assemble({vars[0]}, dvars,
                                            {
                                                {0, 0, b.component(C::MuBar, p + 1, q - 2)},
                                                {0, 1, b.component(C::DelBar, p, q - 1)},
                                                {0, 2, b.component(C::Del, p - 1, q)},
                                            });
            const Subspace den = image(produce, kernel(constraints));
            g[p][q] = checked_quotient(num, den, "e2_explicit");
        }
    return g;
}

Stabilization stabilize(const HodgeFiltration& f, const std::vector<std::size_t>& betti)
{
    const BigradedComplex& b = f.complex();
    const int cap = static_cast<int>(b.dimension()) + 1;
    Stabilization st;

    auto matches_betti = [&](const SpectralPage& pg) {
        for (std::size_t n = 0; n < betti.size(); ++n)
            if (pg.total(n) != betti[n])
                return false;
        return true;
    };

    st.pages.push_back(page(f, 1));
    for (int r = 1; r <= cap; ++r) {
        SpectralPage next = page(f, r + 1);
        SpectralPage& cur = st.pages.back();
        st.transitions_consistent = st.transitions_consistent && transition_consistent(cur, next);
        for (std::size_t p = 0; p < cur.dims.size(); ++p)
            for (std::size_t q = 0; q < cur.dims.size(); ++q)
                st.monotone = st.monotone && next.dims[p][q] <= cur.dims[p][q];
        if (matches_betti(cur) && next.dims == cur.dims) {
            st.first_stable = r;
            st.limit = cur.dims;
            for (auto& pg : st.pages)
                pg.stabilized = pg.r >= r;
            next.stabilized = true;
            st.pages.push_back(std::move(next));
            return st;
        }
        st.pages.push_back(std::move(next));
    }
    throw NoStabilization("no stable page up to r = " + std::to_string(cap));
}

CohomologyFiltration cohomology_filtration(const BigradedComplex& b)
{
    if (b.dimension() != 4)
        throw std::invalid_argument("cohomology_filtration requires a 4-dimensional complex");
    CohomologyFiltration cf;
    for (std::size_t n = 0; n <= b.dimension(); ++n) {
        cf.closed.push_back(b.total().cocycles(n));
        cf.exact.push_back(b.total().coboundaries(n));
    }
    auto closed_of_type = [&](std::size_t n, std::vector<Bidegree> types) {
        std::vector<std::size_t> coords;
        for (const auto& t : types) {
            const auto& pos = b.positions(t.p, t.q);
            coords.insert(coords.end(), pos.begin(), pos.end());
        }
        std::sort(coords.begin(), coords.end());
        const Subspace typed = Subspace::coordinate(b.total().rank_in_degree(n), coords);
        return sum(intersect(cf.closed[n], typed), cf.exact[n]);
    };
    cf.f1h1 = closed_of_type(1, {{1, 0}});
    cf.f1h2 = closed_of_type(2, {{1, 1}, {2, 0}});
    cf.f2h2 = closed_of_type(2, {{2, 0}});
    return cf;
}

const char* purity_status_name(PurityStatus s)
{
    switch (s) {
    case PurityStatus::Holds:
        return "holds";
    case PurityStatus::Fails:
        return "fails";
    case PurityStatus::HypothesisNotMet:
        return "hypothesis not met";
    }
    return "";
}

PurityReport purity_check(const CohomologyFiltration& cf, const BigradedComplex& b, const Grid& diamond)
{
    PurityReport rep;
    rep.b1 = cf.betti(1);
    rep.b2 = cf.betti(2);
    rep.dim_f1h1 = cf.dim_f1h1();
    rep.dim_f1h2 = cf.dim_f1h2();
    rep.dim_f2h2 = cf.dim_f2h2();

    const std::size_t ex2 = cf.exact[2].dim();
    const Subspace conj_f2 = b.conjugate(2, cf.f2h2);
    const Subspace conj_f1 = b.conjugate(2, cf.f1h2);
    rep.span_weight2 = sum(cf.f1h2, conj_f2).dim() - ex2;
    const std::size_t span_other = sum(cf.f2h2, conj_f1).dim() - ex2;
    const bool direct = rep.dim_f1h2 + rep.dim_f2h2 == rep.b2;
    rep.weight2 = direct && rep.span_weight2 == rep.b2 && span_other == rep.b2 ? PurityStatus::Holds
                                                                                : PurityStatus::Fails;

    if (diamond.at(0).at(1) != diamond.at(1).at(0)) {
        rep.weight1 = PurityStatus::HypothesisNotMet;
    } else {
        const Subspace conj_h1 = b.conjugate(1, cf.f1h1);
        rep.span_weight1 = sum(cf.f1h1, conj_h1).dim() - cf.exact[1].dim();
        rep.weight1 = 2 * rep.dim_f1h1 == rep.b1 && rep.span_weight1 == rep.b1 ? PurityStatus::Holds
                                                                                 : PurityStatus::Fails;
    }
    return rep;
}

} // namespace hodgedr
