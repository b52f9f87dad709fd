#include "hodgedr/lie_algebra.hpp"

#include <set>
#include <tuple>

#include "hodgedr/errors.hpp"
#include "hodgedr/subspace.hpp"

namespace hodgedr {

namespace {

// Coordinates of [u, v] for u, v given in the X basis.
Vector bracket(const LieAlgebra& g, const Vector& u, const Vector& v)
{
    const std::size_t n = g.dimension();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero() || i == j)
                continue;
            const Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = g.structure_constant(i, j, k);
                if (!c.is_zero())
                    out[k] += uv * Scalar(c);
            }
        }
    }
    return out;
}

Vector unit(std::size_t n, std::size_t k)
{
    Vector e(n);
    e[k] = Scalar(1);
    return e;
}

} // namespace

LieAlgebra validate(const LieAlgebraPresentation& p, bool allow_non_nilpotent)
{
    const std::size_t n = p.dimension;
    if (n == 0)
        throw BadIndex("Lie algebra '" + p.name + "' has dimension 0");

    LieAlgebra g;
    g.presentation_ = p;
    g.c_.assign(n * n * n, Rational(0));

    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& b : p.brackets) {
        const std::string where = "bracket [" + std::to_string(b.i + 1) + ", " + std::to_string(b.j + 1) + "] -> "
            + std::to_string(b.k + 1);
        if (b.i >= n || b.j >= n || b.k >= n)
            throw BadIndex(where + ": index out of range 1.." + std::to_string(n));
        if (b.i >= b.j)
            throw BadIndex(where + ": entries must satisfy i < j");
        if (!seen.emplace(b.i, b.j, b.k).second)
            throw BadIndex(where + ": duplicate entry");
        g.c_[(b.i * n + b.j) * n + b.k] += b.coeff;
        g.c_[(b.j * n + b.i) * n + b.k] -= b.coeff;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector xi = unit(n, i), xj = unit(n, j), xk = unit(n, k);
                const Vector jac = bracket(g, bracket(g, xi, xj), xk) + bracket(g, bracket(g, xj, xk), xi)
                    + bracket(g, bracket(g, xk, xi), xj);
                if (!is_zero(jac))
                    throw JacobiViolation({i, j, k},
                                          "Jacobi identity fails on (X" + std::to_string(i + 1) + ", X"
                                              + std::to_string(j + 1) + ", X" + std::to_string(k + 1) + ")");
            }

    // Lower central series g = g^1 ⊇ g^2 = [g, g] ⊇ ... ; it stabilizes within n steps.
    Subspace term = Subspace::full(n);
    for (std::size_t step = 0; step <= n && term.dim() > 0; ++step) {
        std::vector<Vector> next;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : term.basis())
                next.push_back(bracket(g, unit(n, i), v));
        Subspace s = Subspace::span(n, next);
        if (s.dim() == term.dim())
            break;
        term = std::move(s);
    }
    g.nilpotent_ = term.dim() == 0;
    if (!g.nilpotent_ && !allow_non_nilpotent)
        throw NotNilpotent("Lie algebra '" + p.name + "' is not nilpotent: lower central series stalls at dimension "
                           + std::to_string(term.dim()));
    return g;
}

} // namespace hodgedr
