#ifndef HOMDS_CODES_HPP
#define HOMDS_CODES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "homds/matrix.hpp"
#include "homds/patterns.hpp"
#include "homds/poly.hpp"
#include "homds/rng.hpp"

namespace homds {

/// Evaluation points; each point is an r-tuple of field elements and points
/// must be pairwise distinct.
struct EvalPoints {
    std::uint32_t r = 1;
    std::vector<std::vector<Fe>> pts;

    std::uint32_t n() const { return static_cast<std::uint32_t>(pts.size()); }
};

enum class Family {
    ReedSolomon,
    Monomial,
    Polynomial,
    Gabidulin,
    LinearizedRS,
    Explicit,
};

/// Declarative code description. Field and k are always set; the remaining
/// members depend on the family.
struct CodeSpec {
    Family family = Family::ReedSolomon;
    std::uint32_t k = 0;
    Field field;
    std::vector<std::int64_t> exponents;   // Monomial: e_1 < ... < e_k
    std::uint64_t frobenius_q = 0;         // Gabidulin / LinearizedRS
    std::optional<PolyTuple> polys;        // Polynomial
    std::optional<Mat> explicit_matrix;    // Explicit

    /// Number of coordinates per evaluation point.
    std::uint32_t point_arity() const;
    void validate() const;
};

/// Enumeration / sampling ceilings. Checkers refuse (TooLarge or
/// BudgetExhausted) instead of approximating past these.
struct Budget {
    std::uint64_t max_families = 2'000'000;
    std::uint64_t max_patterns = 2'000'000;
    std::uint64_t max_configs = 5'000'000;
    std::uint64_t max_solver_samples = 100'000;
    std::uint64_t max_exhaustive_tuples = 2'000'000;
    std::uint64_t max_center_enumeration = 100'000;  // listdec q^n cap
};

/// Generator matrix with entry (i, j) = f_i(alpha_j).
Mat generator(const CodeSpec& spec, const EvalPoints& pts);

/// Every k x k minor nonzero. Scans minors in descending lexicographic
/// column order and reports the first dependent subset. Refuses n > 20.
bool is_mds(const Mat& g, std::vector<std::uint32_t>* witness_cols = nullptr);

/// Higher order MDS check: MDS plus a scan over all families A_1..A_l with
/// |A_i| <= k, total size (l-1)k and the null intersection property; every
/// such family must have zero intersection dimension.
bool is_mds_ell(const Mat& g, int ell, const Budget& budget = {}, SetFamily* witness = nullptr);

/// When the pattern is attainable returns the row-transformed generator
/// M * G carrying the prescribed zeros; nullopt otherwise.
std::optional<Mat> attains_zero_pattern(const Mat& g, const ZeroPattern& p);

struct SolveResult {
    EvalPoints points;
    std::uint64_t samples_used = 0;
    bool exhaustive = false;
};

/// Searches for distinct evaluation points whose code is MDS and attains the
/// pattern: seeded random sampling first, then (univariate families) an
/// exhaustive lexicographic scan within budget. nullopt = budget exhausted,
/// which proves nothing about nonexistence.
std::optional<SolveResult> gm_mds_solve(const ZeroPattern& p, const CodeSpec& spec,
                                        const Budget& budget, Rng& rng);

struct GzpWitness {
    std::optional<std::vector<std::uint32_t>> non_mds_cols;
    std::optional<ZeroPattern> pattern;
};

/// MDS plus attainment of every generic zero pattern of order <= l; the scan
/// covers the inclusion-maximal patterns, which dominate the rest.
bool is_gzp_ell(const Mat& g, int ell, const Budget& budget = {}, GzpWitness* witness = nullptr);

/// Uniform n-subset of columns, original order preserved, seed-reproducible.
Mat puncture_random(const Mat& g, std::uint32_t n, Rng& rng);

/// Distinct uniform points from F^r (rejection sampling).
EvalPoints sample_distinct_points(const Field& f, std::uint32_t r, std::uint32_t n, Rng& rng);

/// Enumerates, in non-decreasing bitmask order, every family A_1..A_l of
/// subsets of [n] with |A_i| <= k and total size (l-1)k. The callback
/// returns false to stop; count accumulates against budget.max_families.
bool scan_candidate_families(std::uint32_t n, std::uint32_t k, int ell, const Budget& budget,
                             std::uint64_t& count,
                             const std::function<bool(const std::vector<ColSet>&)>& fn);

}  // namespace homds

#endif
