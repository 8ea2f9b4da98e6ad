#ifndef STED_HUNGARIAN_HPP
#define STED_HUNGARIAN_HPP

#include <cstddef>
#include <vector>

namespace sted {

/// Square cost matrix over two child lists, padded to n = max(|C1|, |C2|).
/// Phantom rows (beyond left_count) hold the insertion cost of the unmatched
/// right child; phantom columns hold the deletion cost of the unmatched left
/// child.
class CostMatrix {
public:
    CostMatrix(std::size_t left_count, std::size_t right_count, double insert_cost,
               double delete_cost);

    /// Square matrix from raw rows; throws NonSquare if ragged.
    explicit CostMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return n_; }
    std::size_t left_count() const noexcept { return left_; }
    std::size_t right_count() const noexcept { return right_; }

    double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) { cells_[i * n_ + j] = v; }

    bool is_padding_row(std::size_t i) const noexcept { return i >= left_; }
    bool is_padding_col(std::size_t j) const noexcept { return j >= right_; }

    /// Throws NonFinite if any entry is NaN/inf or negative.
    void validate() const;

private:
    std::size_t n_ = 0;
    std::size_t left_ = 0;
    std::size_t right_ = 0;
    std::vector<double> cells_;
};

struct AssignmentResult {
    /// row_to_col[i] = column matched to row i (perfect matching).
    std::vector<std::size_t> row_to_col;
    double total_cost = 0.0;
};

/// Minimum-cost perfect matching in O(n^3). Among equal-cost optima the
/// result is canonicalized so lower rows take lower columns.
AssignmentResult hungarian_solve(const CostMatrix& matrix);
AssignmentResult hungarian_solve(const std::vector<std::vector<double>>& rows);

} // namespace sted

#endif // STED_HUNGARIAN_HPP
