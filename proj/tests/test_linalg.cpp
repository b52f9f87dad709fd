#include <gtest/gtest.h>

#include "support.hpp"

using namespace hodgedr;

namespace {

Vector vec(std::initializer_list<Scalar> xs)
{
    return Vector(xs);
}

const Scalar I = Scalar::i();

} // namespace

TEST(Rational, LowestTermsPositiveDenominator)
{
    const Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, ParseAndErrors)
{
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("+5"), Rational(5));
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Gaussian, FieldAndConjugation)
{
    const Scalar z(Rational(1, 2), Rational(-3));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
    EXPECT_EQ(z.conj().conj(), z);
    EXPECT_EQ(z * z.conj(), Scalar(z.norm2()));
    EXPECT_EQ(I * I, Scalar(-1));
    EXPECT_EQ(Scalar(0).norm2(), Rational(0));
}

TEST(Gaussian, CanonicalStrings)
{
    EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).str(), "1/2-3*i");
    EXPECT_EQ(Scalar(Rational(0), Rational(2, 3)).str(), "0+2/3*i");
    EXPECT_EQ(Scalar(Rational(-4)).str(), "-4");
    EXPECT_EQ(Scalar::parse("i"), I);
    EXPECT_EQ(Scalar::parse("-i"), -I);
    EXPECT_EQ(Scalar::parse("2/3*i"), Scalar(Rational(0), Rational(2, 3)));
    EXPECT_EQ(Scalar::parse("1-1/2*i"), Scalar(Rational(1), Rational(-1, 2)));
}

TEST(Gaussian, RoundTripProperty)
{
    Sampler s(11);
    for (int k = 0; k < 500; ++k) {
        const Scalar z(s.rational(50, 30), s.rational(50, 30));
        EXPECT_EQ(Scalar::parse(z.str()), z) << z.str();
        EXPECT_EQ(Rational::parse(z.re().str()), z.re());
    }
}

TEST(Gaussian, FieldAxiomsProperty)
{
    Sampler s(12);
    for (int k = 0; k < 300; ++k) {
        const Scalar a(s.rational(9, 5), s.rational(9, 5));
        const Scalar b(s.rational(9, 5), s.rational(9, 5));
        const Scalar c(s.rational(9, 5), s.rational(9, 5));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_GE(a.norm2(), Rational(0));
        EXPECT_EQ(a.norm2().is_zero(), a.is_zero());
        if (!b.is_zero())
            EXPECT_EQ(a / b * b, a);
    }
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(Matrix::identity(2)), 2u);
    EXPECT_EQ(rank(Matrix(3, 4)), 0u);
    const Matrix m = Matrix::from_rows({vec({1, I}), vec({I, -1})}, 2);
    EXPECT_EQ(rank(m), 1u);
}

TEST(Rank, MatchesOracleAndConjugateTranspose)
{
    Sampler s(21);
    for (int k = 0; k < 60; ++k) {
        const std::size_t rows = static_cast<std::size_t>(s.integer(1, 6));
        const std::size_t cols = static_cast<std::size_t>(s.integer(1, 6));
        const std::size_t r = static_cast<std::size_t>(s.integer(0, static_cast<long>(std::min(rows, cols))));
        const Matrix m = gen::random_rank_matrix(s, rows, cols, r);
        const std::size_t rk = rank(m);
        EXPECT_EQ(rk, oracle::rank_c(m));
        EXPECT_EQ(rk, rank(m.conj_transpose()));
        EXPECT_EQ(m.conj_transpose().conj_transpose(), m);
        const Subspace ker = kernel(m);
        EXPECT_EQ(ker.dim() + rk, cols);
        for (const auto& v : ker.basis())
            EXPECT_TRUE(is_zero(m * v));
    }
}

TEST(Kernel, Examples)
{
    EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
    EXPECT_EQ(kernel(Matrix(2, 3)).dim(), 3u);
    const Subspace k = kernel(Matrix::from_rows({vec({1, I})}, 2));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_TRUE(k.contains(vec({-I, 1})));
}

TEST(Determinant, InverseAndSingular)
{
    const Matrix m = Matrix::from_rows({vec({1, I}), vec({2, 3})}, 2);
    EXPECT_EQ(determinant(m), Scalar(3) - Scalar(2) * I);
    EXPECT_EQ(m * inverse(m), Matrix::identity(2));
    EXPECT_THROW(inverse(Matrix::from_rows({vec({1, I}), vec({I, -1})}, 2)), std::domain_error);
}

TEST(SumIntersect, Examples)
{
    const Vector e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0});
    {
        const auto si = sum_intersect(Subspace::span(3, {e1}), Subspace::span(3, {e1}));
        EXPECT_EQ(si.sum.dim(), 1u);
        EXPECT_EQ(si.intersection.dim(), 1u);
    }
    {
        const auto si = sum_intersect(Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({0, 1})}));
        EXPECT_EQ(si.sum.dim(), 2u);
        EXPECT_EQ(si.intersection.dim(), 0u);
    }
    {
        const auto si = sum_intersect(Subspace::span(3, {e1 + e2}), Subspace::span(3, {e1 - e2, e2}));
        EXPECT_EQ(si.sum.dim(), 2u);
        EXPECT_EQ(si.intersection.dim(), 1u);
        EXPECT_TRUE(si.intersection.contains(e1 + e2));
    }
    EXPECT_THROW(sum_intersect(Subspace(2), Subspace(3)), std::invalid_argument);
}

TEST(SumIntersect, ModularityProperty)
{
    Sampler s(31);
    for (int k = 0; k < 80; ++k) {
        const std::size_t n = static_cast<std::size_t>(s.integer(1, 7));
        auto random_space = [&] {
            std::vector<Vector> vs;
            const long count = s.integer(0, static_cast<long>(n));
            // Mix random vectors with combinations of a shared pool so intersections occur.
            for (long t = 0; t < count; ++t)
                vs.push_back(gen::random_matrix(s, n, 1, 1).column(0));
            return Subspace::span(n, vs);
        };
        const Subspace u = random_space();
        Subspace v = random_space();
        if (k % 2 && u.dim() > 0)
            v = sum(v, Subspace::span(n, {u.basis()[0]}));
        const auto si = sum_intersect(u, v);
        EXPECT_EQ(si.sum.dim() + si.intersection.dim(), u.dim() + v.dim());
        EXPECT_TRUE(si.sum.contains(u));
        EXPECT_TRUE(si.sum.contains(v));
        EXPECT_TRUE(u.contains(si.intersection));
        EXPECT_TRUE(v.contains(si.intersection));
        std::vector<Vector> both = u.basis();
        both.insert(both.end(), v.basis().begin(), v.basis().end());
        EXPECT_EQ(si.sum.dim(), oracle::span_dim(both, n));
        EXPECT_EQ(quotient_dim(u, v), u.dim() - si.intersection.dim());
    }
}

TEST(Subspace, PreimageImageAndComplement)
{
    Sampler s(41);
    for (int k = 0; k < 40; ++k) {
        const Matrix m = gen::random_rank_matrix(s, 5, 4, static_cast<std::size_t>(s.integer(0, 4)));
        std::vector<Vector> vs{gen::random_matrix(s, 5, 1).column(0), gen::random_matrix(s, 5, 1).column(0)};
        const Subspace v = Subspace::span(5, vs);
        const Subspace pre = preimage(m, v);
        for (const auto& x : pre.basis())
            EXPECT_TRUE(v.contains(m * x));
        // dim m⁻¹(V) = dim ker m + dim(V ∩ im m).
        EXPECT_EQ(pre.dim(), kernel(m).dim() + intersect(v, image(m)).dim());

        const Subspace img = image(m, pre);
        EXPECT_TRUE(v.contains(img));

        const Subspace full = Subspace::full(4);
        const auto comp = complement_basis(full, pre);
        EXPECT_EQ(comp.size(), 4 - pre.dim());
        EXPECT_EQ(sum(pre, Subspace::span(4, comp)).dim(), 4u);

        const Matrix ann = annihilator(v);
        EXPECT_EQ(ann.rows(), 5 - v.dim());
        for (const auto& x : v.basis())
            EXPECT_TRUE(is_zero(ann * x));
    }
}

TEST(Subspace, CoordinatesAndConjugation)
{
    const std::vector<Vector> basis{vec({1, I, 0}), vec({0, 1, 1})};
    const Vector v = Scalar(2) * basis[0] + I * basis[1];
    const auto c = coordinates(basis, v, 3);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[0], Scalar(2));
    EXPECT_EQ((*c)[1], I);
    EXPECT_FALSE(coordinates(basis, vec({0, 0, 1}), 3).has_value());

    const Subspace u = Subspace::span(3, basis);
    EXPECT_TRUE(u.conj().contains(vec({1, -I, 0})));
    EXPECT_FALSE(u.contains(vec({1, -I, 0})));
}

TEST(Signature, Examples)
{
    const auto a = congruence_signature(Matrix::from_rows({vec({1, 0}), vec({0, -1})}, 2));
    EXPECT_EQ(a.positive, 1u);
    EXPECT_EQ(a.negative, 1u);
    EXPECT_EQ(a.zero, 0u);
    const auto b = congruence_signature(Matrix(2, 2));
    EXPECT_EQ(b.zero, 2u);
    EXPECT_EQ(b.positive + b.negative, 0u);
    const auto c = congruence_signature(Matrix::from_rows({vec({0, 1}), vec({1, 0})}, 2));
    EXPECT_EQ(c.positive, 1u);
    EXPECT_EQ(c.negative, 1u);
    EXPECT_EQ(c.zero, 0u);
}

TEST(Signature, Errors)
{
    EXPECT_THROW(congruence_signature(Matrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(congruence_signature(Matrix::from_rows({vec({0, 1}), vec({2, 0})}, 2)), std::invalid_argument);
    EXPECT_THROW(congruence_signature(Matrix::from_rows({vec({I, 0}), vec({0, 1})}, 2)), std::invalid_argument);
}

TEST(Signature, SylvesterInvarianceProperty)
{
    Sampler s(51);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = static_cast<std::size_t>(s.integer(1, 6));
        Matrix d(n, n);
        std::size_t pos = 0, neg = 0;
        for (std::size_t t = 0; t < n; ++t) {
            const long sign = s.integer(-1, 1);
            d(t, t) = Scalar(sign * s.integer(1, 4));
            pos += sign > 0;
            neg += sign < 0;
        }
        const Matrix p = s.invertible(n, 3);
        const Matrix m = p.transpose() * d * p;
        const auto sig = congruence_signature(m);
        EXPECT_EQ(sig.positive, pos);
        EXPECT_EQ(sig.negative, neg);
        EXPECT_EQ(sig.zero, n - pos - neg);
    }
}

TEST(Exterior, WedgeSignsAndPowers)
{
    EXPECT_EQ(wedge_sign(0b10, 0b01), -1);
    EXPECT_EQ(wedge_sign(0b01, 0b10), 1);
    EXPECT_EQ(wedge_sign(0b01, 0b01), 0);
    EXPECT_EQ(monomials(4, 2).size(), 6u);
    Sampler s(61);
    for (int k = 0; k < 10; ++k) {
        const Matrix a = gen::random_matrix(s, 4, 4);
        const Matrix b = gen::random_matrix(s, 4, 4);
        // Λ^k is a functor: Λ^k(ab) = Λ^k(a) Λ^k(b); Λ^4 is the determinant.
        for (std::size_t deg = 0; deg <= 4; ++deg)
            EXPECT_EQ(exterior_power(a * b, deg), exterior_power(a, deg) * exterior_power(b, deg));
        EXPECT_EQ(exterior_power(a, 4)(0, 0), determinant(a));
    }
}
