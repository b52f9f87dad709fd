#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodgedr/matrix.hpp"

namespace hodgedr {

// Incrementally maintained echelon basis: supports span-membership tests and
// first-fit independence filtering in insertion order.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

    // Returns true when v was independent of everything added so far.
    bool add(const Vector& v);
    bool in_span(const Vector& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    Vector reduce(Vector v) const;

    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

// A linear subspace of Q(i)^n carried by a linearly independent spanning list.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    // First-fit independent subset of `vectors`, in the given order.
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient);
    // Span of the standard basis vectors with the given coordinates.
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& coords);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    // Basis vectors as columns (ambient_dim x dim).
    Matrix basis_matrix() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace conj() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Subspace kernel(const Matrix& m);
// Column space of m.
Subspace image(const Matrix& m);
// m(U) for a subspace U of the domain of m.
Subspace image(const Matrix& m, const Subspace& u);
// {x : m x in v}.
Subspace preimage(const Matrix& m, const Subspace& v);
// Linear functionals vanishing on v, as the rows of the returned matrix.
Matrix annihilator(const Subspace& v);

struct SumIntersection {
    Subspace sum;
    Subspace intersection;
};

// Throws std::invalid_argument on ambient-dimension mismatch.
SumIntersection sum_intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// dim U / (U ∩ D).
std::size_t quotient_dim(const Subspace& u, const Subspace& d);

// Vectors of U's basis, taken first-fit in order, that extend a basis of D ∩ U
// to a basis of U. Requires D ⊆ U for the result to represent U / D.
std::vector<Vector> complement_basis(const Subspace& u, const Subspace& d);

// Coefficients c with sum c_k basis[k] = v, or nullopt if v is not in the span.
// The basis must be linearly independent.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v, std::size_t ambient);

} // namespace hodgedr
