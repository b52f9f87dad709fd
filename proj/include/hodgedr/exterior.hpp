#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hodgedr/matrix.hpp"

namespace hodgedr {

// Wedge monomials over generators e_0..e_{n-1} are bitmasks; bit k set means
// e_k is a factor, factors written in increasing index order.
using Mask = std::uint32_t;

inline std::size_t popcount(Mask m)
{
    return static_cast<std::size_t>(__builtin_popcount(m));
}

// Degree-k monomials, lexicographic on strictly increasing index tuples.
std::vector<Mask> monomials(std::size_t generators, std::size_t degree);

// Sign of e_a ∧ e_b relative to the sorted monomial e_{a|b}; 0 when they share a factor.
int wedge_sign(Mask a, Mask b);

std::size_t binomial(std::size_t n, std::size_t k);

// Element of the full exterior algebra, coefficients indexed by mask.
class Form {
public:
    explicit Form(std::size_t generators = 0) : n_(generators), c_(std::size_t{1} << generators) {}

    static Form monomial(std::size_t generators, Mask m, Scalar coeff = Scalar(1));
    // Degree-`degree` form from coordinates in the monomials() basis.
    static Form from_coordinates(std::size_t generators, std::size_t degree, const Vector& coords);

    std::size_t generators() const { return n_; }
    const Scalar& operator[](Mask m) const { return c_[m]; }
    Scalar& operator[](Mask m) { return c_[m]; }

    // Coordinates of the degree-`degree` part in the monomials() basis.
    Vector coordinates(std::size_t degree) const;
    bool is_zero() const;

    Form& operator+=(const Form& o);
    Form& operator*=(const Scalar& s);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator*(Form a, const Scalar& s) { return a *= s; }
    friend Form wedge(const Form& a, const Form& b);
    friend bool operator==(const Form& a, const Form& b) = default;

private:
    std::size_t n_;
    std::vector<Scalar> c_;
};

// The degree-1 derivation of the exterior algebra determined by its values on
// the generators (each a 2-form), extended by the graded Leibniz rule.
class ExteriorDerivation {
public:
    explicit ExteriorDerivation(std::vector<Form> on_generators);

    std::size_t generators() const { return on_generators_.size(); }
    Form apply(Mask monomial) const;
    Form apply(const Form& f) const;
    // Matrix of the map Λ^degree → Λ^{degree+1} in the monomials() bases.
    Matrix matrix(std::size_t degree) const;

private:
    std::vector<Form> on_generators_;
};

// Induced map on Λ^k of the linear map with matrix p: entry (I, J) is the
// minor det p[I, J], with I and J running over monomials(n, k).
Matrix exterior_power(const Matrix& p, std::size_t k);

} // namespace hodgedr
