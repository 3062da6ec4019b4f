#include "homds/codes.hpp"

#include <algorithm>
#include <functional>

namespace homds {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

std::int64_t checked_geometric_power(u64 q, u32 i) {
    // q^i, guarded against int64 overflow
    unsigned __int128 v = 1;
    for (u32 t = 0; t < i; ++t) {
        v *= q;
        require(v <= static_cast<unsigned __int128>(INT64_MAX), Err::TooLarge,
                "Frobenius exponent overflows");
    }
    return static_cast<std::int64_t>(v);
}

Mat stack_rows(const Field& f, u32 cols, const std::vector<std::vector<Fe>>& rows) {
    Mat m(f, static_cast<u32>(rows.size()), cols);
    for (u32 i = 0; i < rows.size(); ++i)
        for (u32 j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    return m;
}

std::vector<std::vector<Fe>> mat_rows(const Mat& m) {
    std::vector<std::vector<Fe>> rows;
    rows.reserve(m.rows());
    for (u32 i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    return rows;
}

}  // namespace

u32 CodeSpec::point_arity() const {
    switch (family) {
        case Family::LinearizedRS: return 2;
        case Family::Polynomial: return polys ? polys->r : 1;
        case Family::Explicit: return 0;
        default: return 1;
    }
}

void CodeSpec::validate() const {
    require(k >= 1, Err::BadParams, "code dimension k must be >= 1");
    switch (family) {
        case Family::ReedSolomon:
            break;
        case Family::Monomial: {
            require(exponents.size() == k, Err::BadParams, "monomial family needs k exponents");
            for (std::size_t i = 1; i < exponents.size(); ++i)
                require(exponents[i - 1] < exponents[i], Err::BadParams,
                        "monomial exponents must be strictly increasing");
            break;
        }
        case Family::Polynomial: {
            require(polys.has_value(), Err::BadParams, "polynomial family needs a tuple");
            polys->validate();
            require(polys->k() == k, Err::BadParams, "polynomial tuple must have k entries");
            require(polys->field.same_as(field), Err::BadParams, "tuple field mismatch");
            break;
        }
        case Family::Gabidulin:
        case Family::LinearizedRS: {
            require(frobenius_q >= 2, Err::BadParams, "needs the subfield size q >= 2");
            u64 q = frobenius_q;
            while (q % field.p() == 0) q /= field.p();
            require(q == 1, Err::BadParams, "q must be a power of the field characteristic");
            break;
        }
        case Family::Explicit:
            require(explicit_matrix.has_value(), Err::BadParams, "explicit family needs a matrix");
            require(explicit_matrix->rows() == k, Err::DimensionMismatch,
                    "explicit matrix must have k rows");
            break;
    }
}

Mat generator(const CodeSpec& spec, const EvalPoints& pts) {
    spec.validate();
    const Field& f = spec.field;

    if (spec.family == Family::Explicit) {
        require(pts.pts.empty(), Err::DimensionMismatch, "explicit codes take no points");
        return *spec.explicit_matrix;
    }

    require(pts.r == spec.point_arity(), Err::DimensionMismatch, "point arity mismatch");
    const u32 n = pts.n();
    for (const auto& pt : pts.pts)
        require(pt.size() == pts.r, Err::DimensionMismatch, "point arity mismatch");
    for (u32 a = 0; a < n; ++a)
        for (u32 b = a + 1; b < n; ++b)
            require(pts.pts[a] != pts.pts[b], Err::DuplicatePoints, "evaluation points must be distinct");

    Mat g(f, spec.k, n);
    switch (spec.family) {
        case Family::ReedSolomon: {
            for (u32 j = 0; j < n; ++j)
                for (u32 i = 0; i < spec.k; ++i)
                    g.set(i, j, f.pow(pts.pts[j][0], static_cast<std::int64_t>(i)));
            break;
        }
        case Family::Monomial: {
            for (u32 j = 0; j < n; ++j)
                for (u32 i = 0; i < spec.k; ++i) g.set(i, j, f.pow(pts.pts[j][0], spec.exponents[i]));
            break;
        }
        case Family::Gabidulin: {
            for (u32 i = 0; i < spec.k; ++i) {
                const std::int64_t e = checked_geometric_power(spec.frobenius_q, i);
                for (u32 j = 0; j < n; ++j) g.set(i, j, f.pow(pts.pts[j][0], e));
            }
            break;
        }
        case Family::LinearizedRS: {
            // Column j evaluates the curve (1, z, z^{1+q}, ...) at
            // gamma_j = beta_j / alpha_j^{q-1}, scaled by alpha_j.
            std::vector<Fe> gamma(n);
            for (u32 j = 0; j < n; ++j) {
                const Fe alpha = pts.pts[j][0];
                require(alpha != 0, Err::ZeroAlphaInLinearizedRS,
                        "alpha = 0 leaves gamma undefined");
                const Fe denom = f.pow(alpha, static_cast<std::int64_t>(spec.frobenius_q) - 1);
                gamma[j] = f.div(pts.pts[j][1], denom);
            }
            for (u32 a = 0; a < n; ++a)
                for (u32 b = a + 1; b < n; ++b)
                    require(gamma[a] != gamma[b], Err::DuplicatePoints,
                            "points share a gamma value; family undefined there");
            std::int64_t s = 0;  // 1 + q + ... + q^{i-2}
            for (u32 i = 0; i < spec.k; ++i) {
                if (i > 0) {
                    const unsigned __int128 next =
                        static_cast<unsigned __int128>(s) * spec.frobenius_q + 1;
                    require(next <= static_cast<unsigned __int128>(INT64_MAX), Err::TooLarge,
                            "gamma exponent overflows");
                    s = static_cast<std::int64_t>(next);
                }
                for (u32 j = 0; j < n; ++j)
                    g.set(i, j, f.mul(pts.pts[j][0], f.pow(gamma[j], s)));
            }
            break;
        }
        case Family::Polynomial: {
            const Mat coeff = coefficient_matrix(*spec.polys, support_union(*spec.polys));
            require(rank_of(coeff) == spec.k, Err::LinearlyDependentFamily,
                    "polynomials are linearly dependent");
            for (u32 j = 0; j < n; ++j)
                for (u32 i = 0; i < spec.k; ++i)
                    g.set(i, j, eval_poly(f, spec.polys->polys[i], pts.pts[j]));
            break;
        }
        case Family::Explicit:
            break;  // handled above
    }
    return g;
}

bool is_mds(const Mat& g, std::vector<u32>* witness_cols) {
    const u32 k = g.rows();
    const u32 n = g.cols();
    require(k >= 1, Err::BadParams, "is_mds needs k >= 1");
    require(n <= 20, Err::TooLarge, "minor scan refuses n > 20");
    if (k > n) {
        if (witness_cols) {
            witness_cols->clear();
            for (u32 j = 0; j < n; ++j) witness_cols->push_back(j);
        }
        return false;
    }

    // Descending lexicographic scan over k-subsets; the first dependent
    // subset found is the reported witness.
    std::vector<u32> comb(k);
    for (u32 i = 0; i < k; ++i) comb[i] = n - k + i;
    for (;;) {
        if (det(g.select_cols(comb)) == 0) {
            if (witness_cols) *witness_cols = comb;
            return false;
        }
        // previous combination in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            const u32 low = (i == 0) ? 0 : comb[static_cast<std::size_t>(i) - 1] + 1;
            if (comb[static_cast<std::size_t>(i)] > low) break;
            --i;
        }
        if (i < 0) return true;
        --comb[static_cast<std::size_t>(i)];
        for (u32 j = static_cast<u32>(i) + 1; j < k; ++j) comb[j] = n - k + j;
    }
}

// DFS over non-decreasing l-tuples of column sets with |A_i| <= k and total
// size (l-1)k; calls fn on each complete family. fn returns false to stop.
bool scan_candidate_families(u32 n, u32 k, int ell, const Budget& budget, u64& count,
                             const std::function<bool(const std::vector<ColSet>&)>& fn) {
    std::vector<ColSet> universe;
    const ColSet all = full_set(static_cast<int>(n));
    for (ColSet s = 0; s <= all; ++s)
        if (set_size(s) <= static_cast<int>(k)) universe.push_back(s);

    const int target = (ell - 1) * static_cast<int>(k);
    std::vector<ColSet> chosen;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int remaining) -> bool {
        const int slots = ell - static_cast<int>(chosen.size());
        if (slots == 0) {
            if (remaining != 0) return true;
            if (++count > budget.max_families)
                raise(Err::TooLarge, "family enumeration exceeded the budget");
            return fn(chosen);
        }
        for (std::size_t idx = from; idx < universe.size(); ++idx) {
            const int sz = set_size(universe[idx]);
            if (sz > remaining) continue;
            if (remaining - sz > (slots - 1) * static_cast<int>(k)) continue;
            chosen.push_back(universe[idx]);
            const bool keep_going = rec(idx, remaining - sz);
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(0, target);
}

bool is_mds_ell(const Mat& g, int ell, const Budget& budget, SetFamily* witness) {
    const u32 k = g.rows();
    const u32 n = g.cols();
    require(ell >= 2 && ell <= 6, Err::TooLarge, "ell must lie in [2, 6]");

    std::vector<u32> bad;
    if (!is_mds(g, &bad)) {
        if (witness) {
            witness->n = static_cast<int>(n);
            witness->k = static_cast<int>(k);
            witness->sets = {set_from_indices(bad, static_cast<int>(n))};
        }
        return false;
    }

    // With MDS established every |A_i| <= k has full column rank, so zero
    // intersection dimension is exactly full block rank.
    bool ok = true;
    u64 count = 0;
    scan_candidate_families(n, k, ell, budget, count, [&](const std::vector<ColSet>& fam) {
        SetFamily family{static_cast<int>(n), static_cast<int>(k), fam};
        if (!has_null_intersection(family)) return true;
        const Mat block = block_intersection_matrix(g, fam);
        if (rank_of(block) == static_cast<u32>(ell) * k) return true;
        ok = false;
        if (witness) *witness = family;
        return false;
    });
    return ok;
}

namespace {

// Left-kernel bases of G restricted to each pattern row; the u-space view of
// the codeword subspaces with prescribed zeros.
std::vector<Mat> row_constraint_kernels(const Mat& g, const ZeroPattern& p) {
    std::vector<Mat> kernels;
    kernels.reserve(p.sets.size());
    for (ColSet s : p.sets) kernels.push_back(left_kernel_basis(g.select_cols(s)));
    return kernels;
}

// dim(sum of K_i over I) >= |I| for every nonempty I: the exact existence
// criterion for an independent transversal of subspaces.
bool transversal_feasible(const Field& f, u32 k, const std::vector<Mat>& kernels) {
    const auto l = static_cast<u32>(kernels.size());
    for (u32 mask = 1; mask < (1u << l); ++mask) {
        std::vector<std::vector<Fe>> rows;
        for (u32 i = 0; i < l; ++i)
            if (mask & (1u << i))
                for (const auto& row : mat_rows(kernels[i])) rows.push_back(row);
        if (rank_of(stack_rows(f, k, rows)) < static_cast<u32>(std::popcount(mask))) return false;
    }
    return true;
}

bool pick_transversal(const Field& f, u32 k, const std::vector<Mat>& kernels,
                      std::vector<std::vector<Fe>>& chosen, u32 row) {
    if (row == kernels.size()) return true;
    for (const auto& cand : mat_rows(kernels[row])) {
        std::vector<std::vector<Fe>> trial = chosen;
        trial.push_back(cand);
        if (rank_of(stack_rows(f, k, trial)) != trial.size()) continue;
        // residual feasibility over the remaining rows
        bool feasible = true;
        const auto l = static_cast<u32>(kernels.size());
        const u32 rest = l - row - 1;
        for (u32 mask = 1; mask < (1u << rest) && feasible; ++mask) {
            std::vector<std::vector<Fe>> rows = trial;
            for (u32 t = 0; t < rest; ++t)
                if (mask & (1u << t))
                    for (const auto& r : mat_rows(kernels[row + 1 + t])) rows.push_back(r);
            if (rank_of(stack_rows(f, k, rows)) <
                trial.size() + static_cast<u32>(std::popcount(mask)))
                feasible = false;
        }
        if (!feasible) continue;
        chosen.push_back(cand);
        if (pick_transversal(f, k, kernels, chosen, row + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Mat> attains_zero_pattern(const Mat& g, const ZeroPattern& p) {
    p.validate();
    const u32 k = g.rows();
    require(p.k == static_cast<int>(k) && p.n == static_cast<int>(g.cols()), Err::DimensionMismatch,
            "pattern shape must match the generator");
    require(k <= 12, Err::TooLarge, "attainment scan refuses k > 12");
    require(rank_of(g) == k, Err::RankDeficient, "generator must have rank k");

    const Field& f = g.field();
    const auto kernels = row_constraint_kernels(g, p);
    if (!transversal_feasible(f, k, kernels)) return std::nullopt;

    std::vector<std::vector<Fe>> chosen;
    const bool found = pick_transversal(f, k, kernels, chosen, 0);
    require(found, Err::BadParams, "internal: transversal construction failed despite feasibility");
    const Mat m = stack_rows(f, k, chosen);
    return m.mul(g);
}

std::optional<SolveResult> gm_mds_solve(const ZeroPattern& p, const CodeSpec& spec,
                                        const Budget& budget, Rng& rng) {
    require(is_generic_zero_pattern(p), Err::NotGeneric, "pattern violates the Hall-type condition");
    spec.validate();
    require(spec.k == static_cast<u32>(p.k), Err::DimensionMismatch, "spec.k must equal pattern k");
    require(spec.family != Family::Explicit, Err::BadParams, "explicit codes have no points to solve for");

    const Field& f = spec.field;
    const u32 r = spec.point_arity();
    const u32 n = static_cast<u32>(p.n);
    // enough room for n distinct points
    bool room = true;
    unsigned __int128 space = 1;
    for (u32 t = 0; t < r; ++t) {
        space *= f.order();
        if (space > (unsigned __int128)1 << 62) break;
    }
    room = space >= n;
    require(room, Err::BadParams, "field too small for n distinct points");

    auto verify = [&](const EvalPoints& pts) -> bool {
        Mat g = generator(spec, pts);
        if (!is_mds(g)) return false;
        return attains_zero_pattern(g, p).has_value();
    };

    SolveResult result;
    for (u64 s = 0; s < budget.max_solver_samples; ++s) {
        EvalPoints pts;
        try {
            pts = sample_distinct_points(f, r, n, rng);
            result.samples_used = s + 1;
            if (verify(pts)) {
                result.points = pts;
                return result;
            }
        } catch (const Error& e) {
            if (e.kind() == Err::DuplicatePoints || e.kind() == Err::ZeroAlphaInLinearizedRS)
                continue;  // resample around degenerate draws
            throw;
        }
    }

    if (r == 1 && f.order() >= n) {
        // lexicographic scan over ordered tuples of distinct element indices
        const u64 q = f.order();
        std::vector<u64> tuple(n);
        for (u32 i = 0; i < n; ++i) tuple[i] = i;

        auto taken_before = [&](u32 pos, u64 v) {
            for (u32 t = 0; t < pos; ++t)
                if (tuple[t] == v) return true;
            return false;
        };
        auto advance = [&]() -> bool {
            int pos = static_cast<int>(n) - 1;
            while (pos >= 0) {
                u64 v = tuple[static_cast<std::size_t>(pos)] + 1;
                while (v < q && taken_before(static_cast<u32>(pos), v)) ++v;
                if (v < q) {
                    tuple[static_cast<std::size_t>(pos)] = v;
                    for (u32 j = static_cast<u32>(pos) + 1; j < n; ++j) {
                        u64 w = 0;
                        while (taken_before(j, w)) ++w;
                        tuple[j] = w;
                    }
                    return true;
                }
                --pos;
            }
            return false;
        };

        u64 used = 0;
        for (;;) {
            if (++used > budget.max_exhaustive_tuples) break;
            EvalPoints pts;
            pts.r = 1;
            for (u32 i = 0; i < n; ++i) pts.pts.push_back({f.element_at(tuple[i])});
            if (verify(pts)) {
                result.points = pts;
                result.samples_used += used;
                result.exhaustive = true;
                return result;
            }
            if (!advance()) break;
        }
        result.samples_used += used;
    }
    return std::nullopt;
}

namespace {

struct MultisetPattern {
    std::vector<std::pair<ColSet, int>> sets;  // (distinct set, multiplicity), sets ascending
    int rows() const {
        int r = 0;
        for (auto& [s, m] : sets) r += m;
        return r;
    }
};

bool generic_multiset(const std::vector<std::pair<ColSet, int>>& sets, int k) {
    const auto d = static_cast<u32>(sets.size());
    for (u32 mask = 1; mask < (1u << d); ++mask) {
        ColSet inter = ~ColSet{0};
        int mult = 0;
        for (u32 j = 0; j < d; ++j) {
            if (mask & (1u << j)) {
                inter &= sets[j].first;
                mult += sets[j].second;
            }
        }
        if (set_size(inter) > k - mult) return false;
    }
    return true;
}

std::vector<std::pair<ColSet, int>> canonical_merge(std::vector<std::pair<ColSet, int>> sets) {
    std::sort(sets.begin(), sets.end());
    std::vector<std::pair<ColSet, int>> out;
    for (auto& [s, m] : sets) {
        if (!out.empty() && out.back().first == s)
            out.back().second += m;
        else
            out.emplace_back(s, m);
    }
    return out;
}

// A pattern is maximal within order <= ell when no single-element addition
// to one row yields another generic pattern of order <= ell; only maximal
// patterns need direct attainment checks.
bool pattern_is_maximal(const MultisetPattern& pat, int n, int k, int ell) {
    const int used_rows = pat.rows();
    for (std::size_t j = 0; j < pat.sets.size(); ++j) {
        const ColSet t = pat.sets[j].first;
        for (int e = 0; e < n; ++e) {
            const ColSet bit = ColSet{1} << e;
            if (t & bit) continue;
            auto succ = pat.sets;
            if (succ[j].second == 1)
                succ[j].first = t | bit;
            else {
                succ[j].second -= 1;
                succ.emplace_back(t | bit, 1);
            }
            succ = canonical_merge(std::move(succ));
            if (static_cast<int>(succ.size()) <= ell && generic_multiset(succ, k)) return false;
        }
    }
    if (used_rows < k) {
        for (int e = 0; e < n; ++e) {
            auto succ = pat.sets;
            succ.emplace_back(ColSet{1} << e, 1);
            succ = canonical_merge(std::move(succ));
            if (static_cast<int>(succ.size()) <= ell && generic_multiset(succ, k)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_gzp_ell(const Mat& g, int ell, const Budget& budget, GzpWitness* witness) {
    const u32 k = g.rows();
    const u32 n = g.cols();
    require(ell >= 1 && ell <= 4, Err::TooLarge, "pattern order capped at 4");

    std::vector<u32> bad;
    if (!is_mds(g, &bad)) {
        if (witness) witness->non_mds_cols = bad;
        return false;
    }

    // candidate distinct sets: nonempty, size <= k-1
    std::vector<ColSet> universe;
    for (ColSet s = 1; s <= full_set(static_cast<int>(n)); ++s)
        if (set_size(s) <= static_cast<int>(k) - 1) universe.push_back(s);

    u64 scanned = 0;
    bool ok = true;
    MultisetPattern pat;
    const int maxd = std::min<int>(ell, static_cast<int>(k));

    std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int rows_used) -> bool {
        if (!pat.sets.empty()) {
            if (++scanned > budget.max_patterns)
                raise(Err::TooLarge, "pattern enumeration exceeded the budget");
            if (pattern_is_maximal(pat, static_cast<int>(n), static_cast<int>(k), ell)) {
                ZeroPattern zp;
                zp.n = static_cast<int>(n);
                zp.k = static_cast<int>(k);
                for (auto& [s, m] : pat.sets)
                    for (int c = 0; c < m; ++c) zp.sets.push_back(s);
                while (static_cast<int>(zp.sets.size()) < zp.k) zp.sets.push_back(0);
                if (!attains_zero_pattern(g, zp).has_value()) {
                    ok = false;
                    if (witness) witness->pattern = zp;
                    return false;
                }
            }
        }
        if (static_cast<int>(pat.sets.size()) == maxd) return true;
        for (std::size_t idx = from; idx < universe.size(); ++idx) {
            for (int mult = 1; rows_used + mult <= static_cast<int>(k); ++mult) {
                pat.sets.emplace_back(universe[idx], mult);
                const bool generic = generic_multiset(pat.sets, static_cast<int>(k));
                const bool keep = generic ? rec(idx + 1, rows_used + mult) : true;
                pat.sets.pop_back();
                if (!keep) return false;
                // raising the multiplicity only tightens the violated bound
                if (!generic) break;
            }
        }
        return true;
    };
    rec(0, 0);
    return ok;
}

Mat puncture_random(const Mat& g, u32 n, Rng& rng) {
    require(n <= g.cols(), Err::TooFewColumns, "puncture target exceeds column count");
    std::vector<u32> idx(g.cols());
    for (u32 i = 0; i < g.cols(); ++i) idx[i] = i;
    for (u32 i = 0; i < n; ++i) {
        const u32 j = i + static_cast<u32>(rng.below(g.cols() - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    return g.select_cols(idx);
}

EvalPoints sample_distinct_points(const Field& f, u32 r, u32 n, Rng& rng) {
    EvalPoints pts;
    pts.r = r;
    while (pts.pts.size() < n) {
        std::vector<Fe> pt(r);
        for (u32 t = 0; t < r; ++t) pt[t] = f.sample_uniform(rng);
        bool dup = false;
        for (const auto& existing : pts.pts)
            if (existing == pt) dup = true;
        if (!dup) pts.pts.push_back(std::move(pt));
    }
    return pts;
}

}  // namespace homds
