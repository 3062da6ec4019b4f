#ifndef HOMDS_REDUCE_HPP
#define HOMDS_REDUCE_HPP

#include <vector>

#include "homds/codes.hpp"
#include "homds/poly.hpp"
#include "homds/rng.hpp"

namespace homds {

bool is_linearly_independent(const PolyTuple& t);

struct LeadingBasis {
    Mat change_of_basis;             // invertible k x k
    std::vector<Monomial> leading;   // j*_1 < ... < j*_k in lex order
};

/// Greedy scan of the lex-ordered support: picks the first k exponents whose
/// coefficient vectors are independent and returns the basis change mapping
/// them onto the standard basis. After the change, row i leads with the
/// monomial at leading[i], coefficient one, and later rows vanish there.
LeadingBasis leading_monomial_basis(const PolyTuple& t);

/// The tuple with rows replaced by m * rows (coefficient-level).
PolyTuple apply_basis_change(const PolyTuple& t, const Mat& m);

/// Injective degree flattening: exponent j maps to sum_t j_t * N^(t-1).
/// Strictly monotone on lex-ordered inputs once N exceeds every total
/// degree involved (checked; NTooSmall otherwise).
std::vector<std::int64_t> to_univariate(const std::vector<Monomial>& exps, std::int64_t bigN);

struct ReductionVerdict {
    bool reduced = false;
    bool direct = false;
};

/// Runs the leading-monomial -> univariate-monomial pipeline and, side by
/// side, the direct randomized check on the polynomial code itself. Either
/// verdict is an OR over the sampled trials.
ReductionVerdict mds_ell_via_reduction(const PolyTuple& t, int ell, int trials, Rng& rng,
                                       const Budget& budget = {});

}  // namespace homds

#endif
