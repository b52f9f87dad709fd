#include "hodgedr/harmonic.hpp"

#include "hodgedr/errors.hpp"

namespace hodgedr {

HermitianMetric HermitianMetric::standard(std::size_t dimension)
{
    return {Matrix::identity(dimension)};
}

void validate_metric(const HermitianMetric& m, std::size_t dimension)
{
    const Matrix& g = m.gram;
    if (g.rows() != dimension || g.cols() != dimension)
        throw MetricNotPositive("metric gram must be " + std::to_string(dimension) + "x" + std::to_string(dimension));
    if (!(g.conj_transpose() == g))
        throw MetricNotPositive("metric gram is not Hermitian");
    const std::size_t h = dimension / 2;
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t c = 0; c < h; ++c) {
            if (!g(a, c + h).is_zero())
                throw MetricNotPositive("metric does not make (1,0) and (0,1) forms orthogonal");
            if (!(g(a + h, c + h) == g(a, c).conj()))
                throw MetricNotPositive("metric is not the extension of a real metric: (0,1) block must conjugate "
                                        "the (1,0) block");
        }
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < dimension; ++k) {
        idx.push_back(k);
        const Scalar minor = determinant(g.submatrix(idx, idx));
        if (!minor.is_real() || minor.re().sign() <= 0)
            throw MetricNotPositive("leading principal minor of order " + std::to_string(k + 1)
                                    + " is not positive");
    }
}

namespace {

Matrix gram_on_degree(const HermitianMetric& m, std::size_t degree)
{
    return exterior_power(m.gram, degree);
}

} // namespace

Matrix induced_gram(const BigradedComplex& b, const HermitianMetric& m, int p, int q)
{
    const auto& pos = b.positions(p, q);
    if (pos.empty())
        return Matrix(0, 0);
    const Matrix g = gram_on_degree(m, static_cast<std::size_t>(p + q));
    return g.submatrix(pos, pos);
}

Matrix dbar_adjoint(const BigradedComplex& b, const HermitianMetric& m, int p, int q)
{
    const Matrix d = b.component(Component::DelBar, p, q);
    if (d.rows() == 0 || d.cols() == 0)
        return Matrix(d.cols(), d.rows());
    const Matrix gs = induced_gram(b, m, p, q);
    const Matrix gt = induced_gram(b, m, p, q + 1);
    return inverse(gs) * d.conj_transpose() * gt;
}

bool adjoint_identity_holds(const BigradedComplex& b, const HermitianMetric& m)
{
    const int h = static_cast<int>(b.half());
    for (int p = 0; p <= h; ++p)
        for (int q = 0; q < h; ++q) {
            const Matrix d = b.component(Component::DelBar, p, q);
            const Matrix a = dbar_adjoint(b, m, p, q);
            if (d.rows() == 0 || d.cols() == 0)
                continue;
            // <∂̄x, y>_t = y^H G_t D x and <x, ∂̄*y>_s = (A y)^H G_s x.
            const Matrix lhs = induced_gram(b, m, p, q + 1) * d;
            const Matrix rhs = a.conj_transpose() * induced_gram(b, m, p, q);
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

Grid harmonic_numbers(const BigradedComplex& b, const HermitianMetric& m)
{
    const std::size_t h = b.half();
    Grid g(h + 1, std::vector<std::size_t>(h + 1, 0));
    for (int p = 0; p <= static_cast<int>(h); ++p)
        for (int q = 0; q <= static_cast<int>(h); ++q) {
            Subspace k = kernel(b.component(Component::DelBar, p, q));
            if (q > 0)
                k = intersect(k, kernel(dbar_adjoint(b, m, p, q - 1)));
            g[p][q] = k.dim();
        }
    return g;
}

NoetherReport noether_quantities(const BigradedComplex& b, const HermitianMetric& m, const Grid& harmonic,
                                 const InvariantReport& r)
{
    NoetherReport n;
    // ∂̄ on A^{0,0} and ∂̄* from A^{0,2}, side by side into A^{0,1}.
    const Matrix op = Matrix::hstack(b.component(Component::DelBar, 0, 0), dbar_adjoint(b, m, 0, 1));
    const long rk = static_cast<long>(rank(op));
    n.index = (static_cast<long>(op.cols()) - rk) - (static_cast<long>(op.rows()) - rk);
    n.todd = r.todd;
    n.todd_integral = r.todd.is_integer();
    n.bound_lhs = static_cast<long>(harmonic.at(0).at(1));
    n.bound_rhs = Rational(1 + static_cast<long>(harmonic.at(2).at(0))) - r.todd;
    n.bound_holds = Rational(n.bound_lhs) >= n.bound_rhs;
    return n;
}

namespace {

std::vector<HermitianMetric> candidate_metrics(std::size_t dimension)
{
    const std::size_t h = dimension / 2;
    std::vector<HermitianMetric> out;
    const std::vector<Scalar> off{Scalar(1), GaussianRational::i(), Scalar(Rational(1), Rational(1)),
                                  Scalar(Rational(1, 2), Rational(-1, 3))};
    const std::vector<Rational> diag{Rational(2), Rational(3), Rational(1, 2)};
    for (const auto& s : diag) {
        Matrix g = Matrix::identity(dimension);
        g(h - 1, h - 1) = Scalar(s);
        g(dimension - 1, dimension - 1) = Scalar(s);
        out.push_back({g});
    }
    if (h >= 2)
        for (const auto& t : off) {
            // 2 on the diagonal keeps every coupling below norm 2 positive definite.
            Matrix g = Matrix::identity(dimension) * Scalar(2);
            g(0, 1) = t;
            g(1, 0) = t.conj();
            g(h, h + 1) = t.conj();
            g(h + 1, h) = t;
            out.push_back({g});
        }
    return out;
}

} // namespace

std::optional<MetricDependence> find_metric_dependence(const BigradedComplex& b, const HermitianMetric& reference)
{
    const Grid base = harmonic_numbers(b, reference);
    for (const auto& m : candidate_metrics(b.dimension())) {
        if (m == reference)
            continue;
        validate_metric(m, b.dimension());
        Grid other = harmonic_numbers(b, m);
        if (other != base)
            return MetricDependence{m, base, std::move(other)};
    }
    return std::nullopt;
}

HarmonicReport harmonic_report(const BigradedComplex& b, const HermitianMetric& m, const InvariantReport& r,
                               bool scan_metrics)
{
    validate_metric(m, b.dimension());
    HarmonicReport rep;
    rep.metric = m;
    rep.grid = harmonic_numbers(b, m);
    rep.adjoint_identity = adjoint_identity_holds(b, m);

    const std::size_t h = b.half();
    rep.serre_symmetric = true;
    for (std::size_t p = 0; p <= h; ++p)
        for (std::size_t q = 0; q <= h; ++q)
            rep.serre_symmetric = rep.serre_symmetric && rep.grid[p][q] == rep.grid[h - p][h - q];

    for (int p = 0; p <= static_cast<int>(h); ++p) {
        const Matrix e = b.embedding(p, 0);
        const Subspace closed = kernel(b.total().d[static_cast<std::size_t>(p)] * e);
        // On A^{p,0} the adjoint term is absent, so the harmonic space is ker ∂̄.
        const Subspace harmonic = kernel(b.component(Component::DelBar, p, 0));
        rep.closed_contained.push_back(harmonic.contains(closed));
    }
    rep.noether = noether_quantities(b, m, rep.grid, r);
    if (scan_metrics)
        rep.dependence = find_metric_dependence(b, m);
    return rep;
}

} // namespace hodgedr
