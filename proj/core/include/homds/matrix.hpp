#ifndef HOMDS_MATRIX_HPP
#define HOMDS_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "homds/field.hpp"
#include "homds/sets.hpp"

namespace homds {

/// Dense row-major matrix over a Field. Small and exact; no sparse or
/// floating-point modes.
class Mat {
  public:
    Mat(Field f, std::uint32_t rows, std::uint32_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::size_t{rows} * cols, 0) {}

    static Mat identity(const Field& f, std::uint32_t k);
    /// Row-major entries given as residues/packed values (validated).
    static Mat from_rows(const Field& f, std::initializer_list<std::initializer_list<std::uint64_t>> rows);

    const Field& field() const { return f_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    Fe at(std::uint32_t r, std::uint32_t c) const { return a_[std::size_t{r} * cols_ + c]; }
    void set(std::uint32_t r, std::uint32_t c, Fe v) { a_[std::size_t{r} * cols_ + c] = v; }
    std::span<const Fe> row(std::uint32_t r) const { return {a_.data() + std::size_t{r} * cols_, cols_}; }

    Mat transpose() const;
    Mat mul(const Mat& rhs) const;
    /// Columns selected by bitmask, ascending index order.
    Mat select_cols(ColSet s) const;
    Mat select_cols(const std::vector<std::uint32_t>& idx) const;
    /// First c columns.
    Mat prefix_cols(std::uint32_t c) const;
    static Mat hconcat(const Mat& a, const Mat& b);

    bool equals(const Mat& other) const;

  private:
    Field f_;
    std::uint32_t rows_, cols_;
    std::vector<Fe> a_;
};

struct RrefResult {
    Mat reduced;
    std::uint32_t rank;
    std::vector<std::uint32_t> pivots;
};

/// Reduced row-echelon form; row space preserved, pivots strictly increasing.
RrefResult rref(const Mat& m);

std::uint32_t rank_of(const Mat& m);

/// Exact determinant by Gaussian elimination with one inversion per pivot.
Fe det(const Mat& m);

/// Columns span the right kernel; cols() == cols(m) - rank(m). Canonical
/// (derived from rref pivot structure).
Mat kernel_basis(const Mat& m);

/// Rows u with u * m = 0; canonical.
Mat left_kernel_basis(const Mat& m);

/// Canonical dual: rows span the orthogonal complement of the row space of a
/// full-row-rank k x n matrix; output is (n-k) x n in reduced echelon form.
Mat dual_matrix(const Mat& v);

/// Row spaces equal (both sides reduced and compared).
bool same_row_space(const Mat& a, const Mat& b);

/// The stacked intersection layout: l copies of I_k on the left, and block
/// row i carrying [U|_{<=sigma_i} | V|_{A_i}] on the diagonal. Dimensions
/// l*k x (k + sum(sigma_i + |A_i|)). U and sigma may be omitted together.
Mat block_intersection_matrix(const Mat& v, std::span<const ColSet> fam, const Mat* u = nullptr,
                              std::span<const int> sigma = {});

/// dim of the intersection of the subspaces U_{<=sigma_i} + V_{A_i}, through
/// the rank of the block layout above.
int intersection_dimension(const Mat& v, std::span<const ColSet> fam, const Mat* u = nullptr,
                           std::span<const int> sigma = {});

}  // namespace homds

#endif
