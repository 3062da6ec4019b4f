#include "homds/mdsb.hpp"

#include <algorithm>
#include <functional>

namespace homds {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

Config make_config(int k, int b, const std::vector<ConfigPair>& pairs) {
    Config c;
    c.k = k;
    c.b = b;
    c.pairs = pairs;
    return c;
}

int pair_weight(const ConfigPair& pr) { return pr.sigma + set_size(pr.cols); }

// dim(U_{<=sigma} + V_A)
u32 prefix_span_dim(const BasisCode& bc, int sigma, ColSet a) {
    const Mat joined =
        Mat::hconcat(bc.U.prefix_cols(static_cast<u32>(sigma)), bc.V.select_cols(a));
    return rank_of(joined);
}

}  // namespace

void BasisCode::validate() const {
    require(U.field().same_as(V.field()), Err::Incompatible, "U and V must share a field");
    require(U.rows() == V.rows(), Err::DimensionMismatch, "U and V must share the row count");
    require(U.cols() <= U.rows(), Err::DimensionMismatch, "basis width b must satisfy b <= k");
}

bool is_mdsb_1(const BasisCode& bc, Config* witness) {
    bc.validate();
    const int k = static_cast<int>(bc.U.rows());
    const int b = static_cast<int>(bc.U.cols());
    const int n = static_cast<int>(bc.V.cols());
    require(n <= 16, Err::TooLarge, "the (b+1)*2^n scan refuses n > 16");

    for (int sigma = 0; sigma <= b; ++sigma) {
        for (ColSet a = 0; a <= full_set(n); ++a) {
            const int expected = std::min(sigma + set_size(a), k);
            if (static_cast<int>(prefix_span_dim(bc, sigma, a)) != expected) {
                if (witness) *witness = make_config(k, b, {{sigma, a}});
                return false;
            }
        }
    }
    return true;
}

namespace {

// DFS over non-decreasing l-tuples of proper pairs (sigma, A), ordered by
// (sigma, A). exact_weight < 0 disables the weight filter.
bool scan_pair_multisets(int k, int b, int n, int ell, int exact_weight, const Budget& budget,
                         u64& count, const std::function<bool(const std::vector<ConfigPair>&)>& fn) {
    std::vector<ConfigPair> universe;
    for (int sigma = 0; sigma <= b; ++sigma)
        for (ColSet a = 0; a <= full_set(n); ++a)
            if (sigma + set_size(a) <= k) universe.push_back({sigma, a});

    std::vector<ConfigPair> chosen;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int weight) -> bool {
        const int slots = ell - static_cast<int>(chosen.size());
        if (slots == 0) {
            if (exact_weight >= 0 && weight != exact_weight) return true;
            if (++count > budget.max_configs)
                raise(Err::TooLarge, "configuration enumeration exceeded the budget");
            return fn(chosen);
        }
        for (std::size_t idx = from; idx < universe.size(); ++idx) {
            const int w = pair_weight(universe[idx]);
            if (exact_weight >= 0) {
                if (weight + w > exact_weight) continue;
                if (weight + w + (slots - 1) * k < exact_weight) continue;
            }
            chosen.push_back(universe[idx]);
            const bool keep_going = rec(idx, weight + w);
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

bool is_mdsb_ell(const BasisCode& bc, int ell, MdsbMode mode, const Budget& budget,
                 Config* witness) {
    bc.validate();
    require(ell >= 1 && ell <= 6, Err::TooLarge, "ell must lie in [1, 6]");
    require(is_mdsb_1(bc), Err::NotMdsb1, "input fails the MDSb(1) prefix-dimension formula");

    const int k = static_cast<int>(bc.U.rows());
    const int b = static_cast<int>(bc.U.cols());
    const int n = static_cast<int>(bc.V.cols());

    bool ok = true;
    u64 count = 0;
    std::vector<ColSet> fam(static_cast<std::size_t>(ell));
    std::vector<int> sigma(static_cast<std::size_t>(ell));

    auto run_check = [&](const std::vector<ConfigPair>& pairs) -> bool {
        Config c = make_config(k, b, pairs);
        for (int i = 0; i < ell; ++i) {
            fam[static_cast<std::size_t>(i)] = pairs[static_cast<std::size_t>(i)].cols;
            sigma[static_cast<std::size_t>(i)] = pairs[static_cast<std::size_t>(i)].sigma;
        }
        if (mode == MdsbMode::maximal_only) {
            if (!is_maximal_configuration(c)) return true;
            // with MDSb(1) and a proper configuration the block matrix is
            // square; zero intersection means full rank
            const Mat block = block_intersection_matrix(bc.V, fam, &bc.U, sigma);
            if (rank_of(block) == static_cast<u32>(ell) * static_cast<u32>(k)) return true;
        } else {
            if (!c.proper()) return true;
            const int expected = gid(c);
            const Mat block = block_intersection_matrix(bc.V, fam, &bc.U, sigma);
            const int dim = k + c.weight() - static_cast<int>(rank_of(block));
            if (dim == expected) return true;
        }
        ok = false;
        if (witness) *witness = c;
        return false;
    };

    const int exact_weight = (mode == MdsbMode::maximal_only) ? (ell - 1) * k : -1;
    scan_pair_multisets(k, b, n, ell, exact_weight, budget, count, run_check);
    return ok;
}

DualPipelineResult check_dual_pipeline(const Mat& v, int ell, const Budget& budget) {
    require(rank_of(v) == v.rows(), Err::RankDeficient, "pipeline input must have rank k");
    DualPipelineResult out;
    BasisCode transposed{v.transpose(), Mat::identity(v.field(), v.cols())};
    out.mdsb_transpose = is_mdsb_ell(transposed, ell, MdsbMode::maximal_only, budget);
    out.dual_mds_ell = is_mds_ell(dual_matrix(v), ell, budget);
    return out;
}

bool is_ld_mds(const Mat& g, int L, const Budget& budget) {
    require(L >= 1, Err::BadParams, "list size L must be >= 1");
    const Mat dual = dual_matrix(g);
    // rate-1 codes have an empty dual and meet the (zero-radius) bound
    if (dual.rows() == 0) return true;
    // MDS(l') for 2 <= l' <= L+1 is monotone, and is_mds_ell folds the plain
    // MDS gate in, so the top order alone decides.
    return is_mds_ell(dual, L + 1, budget);
}

}  // namespace homds
