#include "homds/tensor.hpp"

#include <algorithm>

namespace homds {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// E-indexed columns of [1^T (x) I_n ; I_ell (x) V].
Mat stacked_parity_columns(const Mat& v, int ell, const ErasurePattern& e) {
    const Field& f = v.field();
    const u32 n = v.cols();
    const u32 k = v.rows();
    Mat m(f, n + static_cast<u32>(ell) * k, static_cast<u32>(e.cells.size()));
    for (u32 c = 0; c < e.cells.size(); ++c) {
        const auto [i, j] = e.cells[c];
        m.set(j, c, f.one());
        for (u32 r = 0; r < k; ++r) m.set(n + i * k + r, c, v.at(r, j));
    }
    return m;
}

}  // namespace

void ErasurePattern::validate() const {
    for (std::size_t a = 0; a < cells.size(); ++a) {
        require(cells[a].first < grid_rows && cells[a].second < grid_cols, Err::IndexOutOfRange,
                "erased cell outside the grid");
        for (std::size_t b = a + 1; b < cells.size(); ++b)
            require(cells[a] != cells[b], Err::MalformedInput, "duplicate erased cell");
    }
}

bool is_recoverable_parity_tensor(const Mat& q_rowcode, const Mat& v_paritycheck, int ell,
                                  const ErasurePattern& e) {
    require(ell >= 1, Err::BadParams, "ell must be >= 1");
    require(q_rowcode.cols() == v_paritycheck.cols(), Err::Incompatible,
            "row code and parity check must share the length n");
    require(q_rowcode.field().same_as(v_paritycheck.field()), Err::Incompatible,
            "row code and parity check must share the field");
    const Mat product = v_paritycheck.mul(q_rowcode.transpose());
    for (u32 i = 0; i < product.rows(); ++i)
        for (u32 j = 0; j < product.cols(); ++j)
            require(product.at(i, j) == 0, Err::Incompatible, "V * Q^T must vanish");
    require(e.grid_rows == static_cast<u32>(ell) && e.grid_cols == v_paritycheck.cols(),
            Err::Incompatible, "pattern grid must be ell x n");
    e.validate();

    const Mat cols = stacked_parity_columns(v_paritycheck, ell, e);
    return rank_of(cols) == cols.cols();
}

bool is_mr_parity_tensor(const Mat& v, int ell, const Budget& budget, MrWitness* witness) {
    require(ell >= 2 && ell <= 6, Err::TooLarge, "ell must lie in [2, 6]");
    const u32 n = v.cols();
    const u32 kv = v.rows();
    require(kv <= n, Err::DimensionMismatch, "parity check cannot have more rows than columns");
    const u32 r = n - kv;  // dimension of the row code
    require(r >= 1, Err::BadParams, "row code must have positive dimension");

    // quick refusal before the scan: multiset count lower bound vs budget
    {
        long double universe = 0;
        for (u32 s = 0; s <= r && s <= n; ++s) {
            long double binom = 1;
            for (u32 t = 0; t < s; ++t) binom = binom * (n - t) / (t + 1);
            universe += binom;
        }
        long double est = 1;
        for (int i = 0; i < ell; ++i) est *= universe / (i + 1);
        require(est <= static_cast<long double>(budget.max_families) * 8, Err::TooLarge,
                "pattern enumeration exceeds the budget for this (n, ell)");
    }

    bool ok = true;
    u64 count = 0;
    scan_candidate_families(n, r, ell, budget, count, [&](const std::vector<ColSet>& fam) {
        SetFamily family{static_cast<int>(n), static_cast<int>(r), fam};
        if (!has_null_intersection(family)) return true;
        ErasurePattern e;
        e.grid_rows = static_cast<u32>(ell);
        e.grid_cols = n;
        for (u32 i = 0; i < fam.size(); ++i) {
            const ColSet missing = full_set(static_cast<int>(n)) & ~fam[i];
            for (auto j : set_to_indices(missing)) e.cells.emplace_back(i, j);
        }
        const Mat cols = stacked_parity_columns(v, ell, e);
        if (rank_of(cols) == cols.cols()) return true;
        ok = false;
        if (witness) {
            witness->family = family;
            witness->pattern = e;
        }
        return false;
    });
    return ok;
}

}  // namespace homds
