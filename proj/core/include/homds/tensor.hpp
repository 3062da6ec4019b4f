#ifndef HOMDS_TENSOR_HPP
#define HOMDS_TENSOR_HPP

#include <utility>
#include <vector>

#include "homds/codes.hpp"
#include "homds/matrix.hpp"

namespace homds {

/// Erased cells of an m x n tensor codeword grid, 0-based.
struct ErasurePattern {
    std::uint32_t grid_rows = 0;
    std::uint32_t grid_cols = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;

    void validate() const;
};

/// Recoverability of E in the tensor of the (ell, ell-1) parity column code
/// with the row code generated by q_rowcode (whose parity-check matrix is
/// v_paritycheck): the E-indexed columns of the stacked parity conditions
/// [1^T (x) I_n ; I_ell (x) V] must be independent.
bool is_recoverable_parity_tensor(const Mat& q_rowcode, const Mat& v_paritycheck, int ell,
                                  const ErasurePattern& e);

struct MrWitness {
    SetFamily family;
    ErasurePattern pattern;
};

/// Maximal recoverability of the parity tensor construction over the
/// patterns that decide it: every E = union {i} x complement(A_i) coming
/// from a null-intersection family at dimension n - rows(V) must be
/// recoverable.
bool is_mr_parity_tensor(const Mat& v, int ell, const Budget& budget = {},
                         MrWitness* witness = nullptr);

}  // namespace homds

#endif
