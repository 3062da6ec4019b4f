#ifndef HOMDS_POLY_HPP
#define HOMDS_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "homds/field.hpp"
#include "homds/matrix.hpp"

namespace homds {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<std::uint32_t>;

/// Monomial order used throughout: lexicographic with the last variable most
/// significant (compare exponents right to left).
bool lex_less(const Monomial& a, const Monomial& b);

int total_degree(const Monomial& m);

struct Term {
    Monomial exp;
    Fe coeff = 0;
};

/// Sparse polynomial; terms kept sorted in lex order with nonzero
/// coefficients.
struct SparsePoly {
    std::vector<Term> terms;
};

/// A tuple of k sparse polynomials in r variables over one field, capped at
/// max_degree total degree per term.
struct PolyTuple {
    std::uint32_t r = 1;
    Field field;
    std::vector<SparsePoly> polys;
    std::uint32_t max_degree = 32;

    void validate() const;
    std::uint32_t k() const { return static_cast<std::uint32_t>(polys.size()); }
};

Fe eval_poly(const Field& f, const SparsePoly& p, std::span<const Fe> point);

/// Union of all term exponents across the tuple, sorted in lex order.
std::vector<Monomial> support_union(const PolyTuple& t);

/// k x |support| matrix of coefficients, columns following the given
/// support order.
Mat coefficient_matrix(const PolyTuple& t, const std::vector<Monomial>& support);

}  // namespace homds

#endif
