#include "homds/reduce.hpp"

#include <algorithm>

namespace homds {

namespace {

using u32 = std::uint32_t;

Mat inverse_of(const Mat& m) {
    require(m.rows() == m.cols(), Err::NonSquare, "inverse needs a square matrix");
    const Field& f = m.field();
    const u32 k = m.rows();
    Mat aug = Mat::hconcat(m, Mat::identity(f, k));
    auto rr = rref(aug);
    require(rr.rank == k && rr.pivots.size() == k && rr.pivots.back() == k - 1,
            Err::RankDeficient, "matrix is singular");
    Mat inv(f, k, k);
    for (u32 i = 0; i < k; ++i)
        for (u32 j = 0; j < k; ++j) inv.set(i, j, rr.reduced.at(i, k + j));
    return inv;
}

}  // namespace

bool is_linearly_independent(const PolyTuple& t) {
    t.validate();
    const auto support = support_union(t);
    if (support.size() < t.k()) return false;
    return rank_of(coefficient_matrix(t, support)) == t.k();
}

LeadingBasis leading_monomial_basis(const PolyTuple& t) {
    t.validate();
    require(is_linearly_independent(t), Err::DependentInput,
            "tuple must be linearly independent");
    const Field& f = t.field;
    const u32 k = t.k();
    const auto support = support_union(t);
    const Mat coeff = coefficient_matrix(t, support);

    // greedy selection over lex-ordered support columns
    std::vector<u32> picked;
    std::vector<std::vector<Fe>> picked_cols;
    for (u32 j = 0; j < support.size() && picked.size() < k; ++j) {
        std::vector<std::vector<Fe>> trial = picked_cols;
        std::vector<Fe> col(k);
        for (u32 i = 0; i < k; ++i) col[i] = coeff.at(i, j);
        trial.push_back(col);
        Mat probe(f, static_cast<u32>(trial.size()), k);
        for (u32 a = 0; a < trial.size(); ++a)
            for (u32 b = 0; b < k; ++b) probe.set(a, b, trial[a][b]);
        if (rank_of(probe) == trial.size()) {
            picked.push_back(j);
            picked_cols.push_back(std::move(col));
        }
    }
    require(picked.size() == k, Err::DependentInput, "could not select k independent columns");

    Mat selected(f, k, k);
    for (u32 j = 0; j < k; ++j)
        for (u32 i = 0; i < k; ++i) selected.set(i, j, picked_cols[j][i]);

    LeadingBasis out{inverse_of(selected), {}};
    out.leading.reserve(k);
    for (u32 j = 0; j < k; ++j) out.leading.push_back(support[picked[j]]);
    return out;
}

PolyTuple apply_basis_change(const PolyTuple& t, const Mat& m) {
    require(m.rows() == t.k() && m.cols() == t.k(), Err::DimensionMismatch,
            "basis change must be k x k");
    const Field& f = t.field;
    const auto support = support_union(t);
    const Mat coeff = m.mul(coefficient_matrix(t, support));
    PolyTuple out;
    out.r = t.r;
    out.field = t.field;
    out.max_degree = t.max_degree;
    out.polys.resize(t.k());
    for (u32 i = 0; i < t.k(); ++i) {
        for (u32 j = 0; j < support.size(); ++j) {
            const Fe c = coeff.at(i, j);
            if (c != 0) out.polys[i].terms.push_back({support[j], c});
        }
    }
    return out;
}

std::vector<std::int64_t> to_univariate(const std::vector<Monomial>& exps, std::int64_t bigN) {
    require(bigN >= 1, Err::NTooSmall, "N must be >= 1");
    for (const auto& e : exps)
        require(total_degree(e) < bigN, Err::NTooSmall,
                "N must exceed every total degree for injectivity");
    std::vector<std::int64_t> out;
    out.reserve(exps.size());
    for (const auto& e : exps) {
        unsigned __int128 v = 0;
        unsigned __int128 place = 1;
        for (std::size_t t = 0; t < e.size(); ++t) {
            v += static_cast<unsigned __int128>(e[t]) * place;
            place *= static_cast<unsigned __int128>(bigN);
            require(v <= static_cast<unsigned __int128>(INT64_MAX), Err::TooLarge,
                    "flattened exponent overflows");
        }
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

ReductionVerdict mds_ell_via_reduction(const PolyTuple& t, int ell, int trials, Rng& rng,
                                       const Budget& budget) {
    require(ell >= 2 && ell <= 6, Err::TooLarge, "ell must lie in [2, 6]");
    require(trials >= 1, Err::BadParams, "need at least one trial");
    const LeadingBasis lb = leading_monomial_basis(t);

    std::uint32_t max_coord = 0;
    for (const auto& p : t.polys)
        for (const auto& term : p.terms)
            for (auto e : term.exp) max_coord = std::max(max_coord, e);
    const std::int64_t bigN = 1 + static_cast<std::int64_t>(t.r) * max_coord;

    CodeSpec mono;
    mono.family = Family::Monomial;
    mono.k = t.k();
    mono.field = t.field;
    mono.exponents = to_univariate(lb.leading, bigN);

    CodeSpec direct;
    direct.family = Family::Polynomial;
    direct.k = t.k();
    direct.field = t.field;
    direct.polys = t;

    const u32 n = static_cast<u32>(ell - 1) * t.k();
    require(t.field.order() >= 2 * n, Err::BadParams,
            "field too small for distinct-point sampling at this ell");
    ReductionVerdict verdict;
    for (int s = 0; s < trials; ++s) {
        if (!verdict.reduced) {
            const EvalPoints pts = sample_distinct_points(t.field, 1, n, rng);
            if (is_mds_ell(generator(mono, pts), ell, budget)) verdict.reduced = true;
        }
        if (!verdict.direct) {
            const EvalPoints pts = sample_distinct_points(t.field, t.r, n, rng);
            if (is_mds_ell(generator(direct, pts), ell, budget)) verdict.direct = true;
        }
    }
    return verdict;
}

}  // namespace homds
