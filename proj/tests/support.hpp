#pragma once

// Test-side helpers: independent oracles that share no code with the library's
// linear algebra, and deterministic generators of random valid inputs.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodgedr/corpus.hpp"
#include "hodgedr/sampling.hpp"

namespace oracle {

using QRow = std::vector<mpq_class>;

// Rank over Q by plain Gaussian elimination.
inline std::size_t rank_q(std::vector<QRow> rows)
{
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c] == 0)
                continue;
            const mpq_class f = rows[k][c] / rows[r][c];
            for (std::size_t t = c; t < cols; ++t)
                rows[k][t] -= f * rows[r][t];
        }
        ++r;
    }
    return r;
}

// Complex rank of a Q(i) matrix: the real rank of [[A, -B], [B, A]] for
// M = A + iB is twice the complex rank.
inline std::size_t rank_c(const hodgedr::Matrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<QRow> rows(2 * R, QRow(2 * C));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c) {
            const mpq_class a = m(r, c).re().value();
            const mpq_class b = m(r, c).im().value();
            rows[r][c] = a;
            rows[r][c + C] = -b;
            rows[r + R][c] = b;
            rows[r + R][c + C] = a;
        }
    const std::size_t rk = rank_q(rows);
    return rk / 2;
}

// Span dimension of a list of complex vectors.
inline std::size_t span_dim(const std::vector<hodgedr::Vector>& vs, std::size_t ambient)
{
    if (vs.empty())
        return 0;
    return rank_c(hodgedr::Matrix::from_columns(vs, ambient));
}

inline int popcount(unsigned m)
{
    return __builtin_popcount(m);
}

// Betti numbers of the CE complex from dα(X_{i0},...,X_{ik}) =
// Σ_{s<t} (-1)^{s+t} α([X_is, X_it], X_i0, ..., ^, ..., ^, ...), evaluated on
// basis tuples. Uses only structure constants c[i][j][k] (any i, j).
inline std::vector<std::size_t> ce_betti(std::size_t n, const std::vector<std::vector<std::vector<mpq_class>>>& c)
{
    std::vector<std::vector<unsigned>> mon(n + 1);
    for (unsigned m = 0; m < (1u << n); ++m)
        mon[static_cast<std::size_t>(popcount(m))].push_back(m);

    auto index_of = [&](std::size_t deg, unsigned m) {
        const auto& v = mon[deg];
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] == m)
                return k;
        return v.size();
    };

    // Value of the dual basis k-form x^J on the sorted tuple with mask `m`
    // after placing vector e_s first: sign of moving s into position.
    std::vector<std::size_t> ranks(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        // Matrix rows: (k+1)-tuples I, columns: k-forms x^J.
        std::vector<QRow> rows;
        for (unsigned I : mon[k + 1]) {
            QRow row(mon[k].size());
            std::vector<std::size_t> idx;
            for (std::size_t b = 0; b < n; ++b)
                if (I >> b & 1u)
                    idx.push_back(b);
            for (std::size_t s = 0; s < idx.size(); ++s)
                for (std::size_t t = s + 1; t < idx.size(); ++t) {
                    const int sgn = (s + t) % 2 ? -1 : 1;
                    const unsigned rest = I & ~(1u << idx[s]) & ~(1u << idx[t]);
                    for (std::size_t l = 0; l < n; ++l) {
                        const mpq_class& coeff = c[idx[s]][idx[t]][l];
                        if (coeff == 0 || (rest >> l & 1u))
                            continue;
                        // α(X_l, rest...) for α = x^{rest ∪ l}: sign of sorting l into rest.
                        int pos = 0;
                        for (std::size_t b = 0; b < l; ++b)
                            pos += rest >> b & 1u;
                        const int sort_sign = pos % 2 ? -1 : 1;
                        const std::size_t col = index_of(k, rest | (1u << l));
                        row[col] += sgn * sort_sign * coeff;
                    }
                }
            rows.push_back(std::move(row));
        }
        ranks[k] = rows.empty() || mon[k].empty() ? 0 : rank_q(rows);
    }
    std::vector<std::size_t> betti(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t dimk = mon[k].size();
        const std::size_t out = ranks[k];
        const std::size_t in = k ? ranks[k - 1] : 0;
        betti[k] = dimk - out - in;
    }
    return betti;
}

inline std::vector<std::vector<std::vector<mpq_class>>> structure_constants(const hodgedr::LieAlgebraPresentation& p)
{
    const std::size_t n = p.dimension;
    std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)));
    for (const auto& b : p.brackets) {
        c[b.i][b.j][b.k] += b.coeff.value();
        c[b.j][b.i][b.k] -= b.coeff.value();
    }
    return c;
}

} // namespace oracle

namespace gen {

// A random valid input: one of the three 4-dimensional nilpotent algebras in a
// random rational basis, with a random rational complex structure.
struct RandomInput {
    std::string family;
    hodgedr::AnalysisInput input;
};

inline RandomInput random_input(hodgedr::Sampler& s)
{
    using namespace hodgedr;
    const int which = static_cast<int>(s.integer(0, 2));
    const LieAlgebraPresentation base =
        which == 0 ? torus_algebra() : which == 1 ? filiform_algebra() : kodaira_thurston_algebra();
    const LieAlgebra g = validate(base);
    const Matrix a = s.invertible(4, 2);
    LieAlgebraPresentation p = change_basis(g, a);
    p.name = base.name + "-random";
    return {base.name, {p, random_structure(s, 4).j, std::nullopt, {}}};
}

inline std::vector<RandomInput> random_inputs(std::uint32_t seed, std::size_t count)
{
    hodgedr::Sampler s(seed);
    std::vector<RandomInput> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(random_input(s));
    return out;
}

inline hodgedr::Matrix random_matrix(hodgedr::Sampler& s, std::size_t rows, std::size_t cols, long range = 2,
                                     bool complex = true)
{
    hodgedr::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = hodgedr::Scalar(s.rational(range, 2), complex ? s.rational(range, 2) : hodgedr::Rational(0));
    return m;
}

// Random matrix of the given rank (product of random factors).
inline hodgedr::Matrix random_rank_matrix(hodgedr::Sampler& s, std::size_t rows, std::size_t cols, std::size_t rank)
{
    return random_matrix(s, rows, rank) * random_matrix(s, rank, cols);
}

} // namespace gen
