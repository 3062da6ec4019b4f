#ifndef HOMDS_MDSB_HPP
#define HOMDS_MDSB_HPP

#include <optional>

#include "homds/codes.hpp"
#include "homds/matrix.hpp"
#include "homds/patterns.hpp"

namespace homds {

/// Basis matrix U (k x b, columns are the flag prefixes) together with a
/// generator matrix V (k x n). No rank requirement on U.
struct BasisCode {
    Mat U;
    Mat V;

    void validate() const;
};

enum class MdsbMode { maximal_only, all_proper };

/// dim(U_{<=sigma} + V_A) = min(sigma + |A|, k) for every sigma in [0, b]
/// and A subset of [n]. Exhaustive for n <= 16, refused above.
bool is_mdsb_1(const BasisCode& bc, Config* witness = nullptr);

/// Higher order MDS-with-a-basis check. maximal_only scans the maximal
/// configurations and demands zero intersection everywhere; all_proper scans
/// every proper configuration and compares against the generic dimension
/// formula. Both modes agree on MDSb(1) inputs.
bool is_mdsb_ell(const BasisCode& bc, int ell, MdsbMode mode = MdsbMode::maximal_only,
                 const Budget& budget = {}, Config* witness = nullptr);

struct DualPipelineResult {
    bool mdsb_transpose = false;
    bool dual_mds_ell = false;
};

/// Runs the transpose-basis check on (V^T, I_n) and, independently, the
/// higher order MDS check on a dual matrix of V. The first is a sufficient
/// condition for the second.
DualPipelineResult check_dual_pipeline(const Mat& v, int ell, const Budget& budget = {});

/// List-decoding optimality through the dual: true iff a dual matrix of g is
/// MDS and MDS(L + 1).
bool is_ld_mds(const Mat& g, int L, const Budget& budget = {});

}  // namespace homds

#endif
