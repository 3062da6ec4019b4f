#include "homds/matrix.hpp"

#include <algorithm>

namespace homds {

Mat Mat::identity(const Field& f, std::uint32_t k) {
    Mat m(f, k, k);
    for (std::uint32_t i = 0; i < k; ++i) m.set(i, i, f.one());
    return m;
}

Mat Mat::from_rows(const Field& f, std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
    const auto r = static_cast<std::uint32_t>(rows.size());
    const auto c = r == 0 ? 0u : static_cast<std::uint32_t>(rows.begin()->size());
    Mat m(f, r, c);
    std::uint32_t i = 0;
    for (const auto& row : rows) {
        require(row.size() == c, Err::DimensionMismatch, "ragged rows");
        std::uint32_t j = 0;
        for (std::uint64_t v : row) {
            require(v < f.order(), Err::MalformedInput, "entry out of field range");
            m.set(i, j++, v);
        }
        ++i;
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(f_, cols_, rows_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Mat Mat::mul(const Mat& rhs) const {
    require(cols_ == rhs.rows_, Err::DimensionMismatch, "matrix product shape mismatch");
    Mat out(f_, rows_, rhs.cols_);
    for (std::uint32_t i = 0; i < rows_; ++i) {
        for (std::uint32_t t = 0; t < cols_; ++t) {
            const Fe a = at(i, t);
            if (a == 0) continue;
            for (std::uint32_t j = 0; j < rhs.cols_; ++j) {
                const Fe prod = f_.mul(a, rhs.at(t, j));
                out.set(i, j, f_.add(out.at(i, j), prod));
            }
        }
    }
    return out;
}

Mat Mat::select_cols(ColSet s) const { return select_cols(set_to_indices(s)); }

Mat Mat::select_cols(const std::vector<std::uint32_t>& idx) const {
    Mat out(f_, rows_, static_cast<std::uint32_t>(idx.size()));
    for (std::uint32_t j = 0; j < idx.size(); ++j) {
        require(idx[j] < cols_, Err::IndexOutOfRange, "column index out of range");
        for (std::uint32_t i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
    }
    return out;
}

Mat Mat::prefix_cols(std::uint32_t c) const {
    require(c <= cols_, Err::IndexOutOfRange, "prefix width exceeds column count");
    Mat out(f_, rows_, c);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < c; ++j) out.set(i, j, at(i, j));
    return out;
}

Mat Mat::hconcat(const Mat& a, const Mat& b) {
    require(a.rows_ == b.rows_, Err::DimensionMismatch, "hconcat row mismatch");
    Mat out(a.f_, a.rows_, a.cols_ + b.cols_);
    for (std::uint32_t i = 0; i < a.rows_; ++i) {
        for (std::uint32_t j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
        for (std::uint32_t j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
    }
    return out;
}

bool Mat::equals(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && f_.same_as(other.f_) && a_ == other.a_;
}

ColSet set_from_indices(const std::vector<std::uint32_t>& idx, int n) {
    require(n >= 0 && n <= kMaxGroundSet, Err::TooLarge, "ground set capped at 30 elements");
    ColSet s = 0;
    for (auto i : idx) {
        require(i < static_cast<std::uint32_t>(n), Err::IndexOutOfRange, "set element out of range");
        s |= ColSet{1} << i;
    }
    return s;
}

std::vector<std::uint32_t> set_to_indices(ColSet s) {
    std::vector<std::uint32_t> idx;
    while (s) {
        const auto b = static_cast<std::uint32_t>(std::countr_zero(s));
        idx.push_back(b);
        s &= s - 1;
    }
    return idx;
}

namespace {

// In-place elimination working set; rows as flat spans over scratch storage.
struct Elim {
    const Field& f;
    std::uint32_t rows, cols;
    std::vector<Fe> a;

    Elim(const Mat& m) : f(m.field()), rows(m.rows()), cols(m.cols()), a(std::size_t{rows} * cols) {
        for (std::uint32_t i = 0; i < rows; ++i)
            for (std::uint32_t j = 0; j < cols; ++j) a[std::size_t{i} * cols + j] = m.at(i, j);
    }

    Fe& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t{r} * cols + c]; }

    // Full reduced echelon form; returns pivot columns.
    std::vector<std::uint32_t> reduce() {
        std::vector<std::uint32_t> pivots;
        std::uint32_t r = 0;
        for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
            std::uint32_t sel = r;
            while (sel < rows && at(sel, c) == 0) ++sel;
            if (sel == rows) continue;
            if (sel != r)
                for (std::uint32_t j = c; j < cols; ++j) std::swap(at(r, j), at(sel, j));
            const Fe piv_inv = f.inv(at(r, c));
            for (std::uint32_t j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), piv_inv);
            for (std::uint32_t i = 0; i < rows; ++i) {
                if (i == r || at(i, c) == 0) continue;
                const Fe factor = at(i, c);
                for (std::uint32_t j = c; j < cols; ++j)
                    at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    // Forward elimination only; cheaper when just the rank is needed.
    std::uint32_t forward_rank() {
        std::uint32_t r = 0;
        for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
            std::uint32_t sel = r;
            while (sel < rows && at(sel, c) == 0) ++sel;
            if (sel == rows) continue;
            if (sel != r)
                for (std::uint32_t j = c; j < cols; ++j) std::swap(at(r, j), at(sel, j));
            const Fe piv_inv = f.inv(at(r, c));
            for (std::uint32_t i = r + 1; i < rows; ++i) {
                if (at(i, c) == 0) continue;
                const Fe factor = f.mul(at(i, c), piv_inv);
                for (std::uint32_t j = c; j < cols; ++j)
                    at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
            }
            ++r;
        }
        return r;
    }
};

}  // namespace

RrefResult rref(const Mat& m) {
    Elim e(m);
    auto pivots = e.reduce();
    Mat r(m.field(), m.rows(), m.cols());
    for (std::uint32_t i = 0; i < m.rows(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j) r.set(i, j, e.at(i, j));
    const auto rank = static_cast<std::uint32_t>(pivots.size());
    return RrefResult{std::move(r), rank, std::move(pivots)};
}

std::uint32_t rank_of(const Mat& m) {
    Elim e(m);
    return e.forward_rank();
}

Fe det(const Mat& m) {
    require(m.rows() == m.cols(), Err::NonSquare, "determinant needs a square matrix");
    const Field& f = m.field();
    const std::uint32_t n = m.rows();
    Elim e(m);
    Fe d = f.one();
    for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t sel = c;
        while (sel < n && e.at(sel, c) == 0) ++sel;
        if (sel == n) return f.zero();
        if (sel != c) {
            for (std::uint32_t j = c; j < n; ++j) std::swap(e.at(c, j), e.at(sel, j));
            d = f.neg(d);
        }
        const Fe piv = e.at(c, c);
        d = f.mul(d, piv);
        const Fe piv_inv = f.inv(piv);
        for (std::uint32_t i = c + 1; i < n; ++i) {
            if (e.at(i, c) == 0) continue;
            const Fe factor = f.mul(e.at(i, c), piv_inv);
            for (std::uint32_t j = c; j < n; ++j)
                e.at(i, j) = f.sub(e.at(i, j), f.mul(factor, e.at(c, j)));
        }
    }
    return d;
}

Mat kernel_basis(const Mat& m) {
    const Field& f = m.field();
    auto rr = rref(m);
    const std::uint32_t n = m.cols();
    const std::uint32_t rank = rr.rank;
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;

    Mat basis(f, n, n - rank);
    std::uint32_t out = 0;
    for (std::uint32_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(free_col, out, f.one());
        for (std::uint32_t r = 0; r < rank; ++r)
            basis.set(rr.pivots[r], out, f.neg(rr.reduced.at(r, free_col)));
        ++out;
    }
    return basis;
}

Mat left_kernel_basis(const Mat& m) { return kernel_basis(m.transpose()).transpose(); }

Mat dual_matrix(const Mat& v) {
    require(rank_of(v) == v.rows(), Err::RankDeficient, "dual matrix needs a full-row-rank input");
    Mat q = kernel_basis(v).transpose();
    return rref(q).reduced;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols() || !a.field().same_as(b.field())) return false;
    auto ra = rref(a);
    auto rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (std::uint32_t i = 0; i < ra.rank; ++i)
        for (std::uint32_t j = 0; j < a.cols(); ++j)
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
    return true;
}

Mat block_intersection_matrix(const Mat& v, std::span<const ColSet> fam, const Mat* u,
                              std::span<const int> sigma) {
    const Field& f = v.field();
    const std::uint32_t k = v.rows();
    const auto l = static_cast<std::uint32_t>(fam.size());
    require(u == nullptr ? sigma.empty() : sigma.size() == fam.size(), Err::DimensionMismatch,
            "sigma list must pair with the basis matrix");
    if (u) require(u->rows() == k, Err::DimensionMismatch, "basis matrix row count mismatch");

    std::uint32_t width = k;
    for (std::uint32_t i = 0; i < l; ++i) {
        if (u) {
            require(sigma[i] >= 0 && static_cast<std::uint32_t>(sigma[i]) <= u->cols(),
                    Err::IndexOutOfRange, "sigma out of range");
            width += static_cast<std::uint32_t>(sigma[i]);
        }
        require((fam[i] & ~full_set(static_cast<int>(v.cols()))) == 0, Err::IndexOutOfRange,
                "column set out of range");
        width += static_cast<std::uint32_t>(set_size(fam[i]));
    }

    Mat out(f, l * k, width);
    for (std::uint32_t i = 0; i < l; ++i)
        for (std::uint32_t r = 0; r < k; ++r) out.set(i * k + r, r, f.one());
    std::uint32_t col = k;
    for (std::uint32_t i = 0; i < l; ++i) {
        if (u) {
            for (int s = 0; s < sigma[i]; ++s) {
                for (std::uint32_t r = 0; r < k; ++r)
                    out.set(i * k + r, col, u->at(r, static_cast<std::uint32_t>(s)));
                ++col;
            }
        }
        for (auto j : set_to_indices(fam[i])) {
            for (std::uint32_t r = 0; r < k; ++r) out.set(i * k + r, col, v.at(r, j));
            ++col;
        }
    }
    return out;
}

int intersection_dimension(const Mat& v, std::span<const ColSet> fam, const Mat* u,
                           std::span<const int> sigma) {
    const std::uint32_t k = v.rows();
    int per_space_dims = 0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        Mat span_i = v.select_cols(fam[i]);
        if (u) span_i = Mat::hconcat(u->prefix_cols(static_cast<std::uint32_t>(sigma[i])), span_i);
        per_space_dims += static_cast<int>(rank_of(span_i));
    }
    const Mat block = block_intersection_matrix(v, fam, u, sigma);
    return static_cast<int>(k) + per_space_dims - static_cast<int>(rank_of(block));
}

}  // namespace homds
