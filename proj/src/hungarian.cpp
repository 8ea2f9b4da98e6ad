#include "sted/hungarian.hpp"

#include "sted/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sted {

CostMatrix::CostMatrix(std::size_t left_count, std::size_t right_count, double insert_cost,
                       double delete_cost)
    : n_(std::max(left_count, right_count)), left_(left_count), right_(right_count),
      cells_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i >= left_ && j < right_) {
                set(i, j, insert_cost); // phantom row: right child j inserted
            } else if (j >= right_ && i < left_) {
                set(i, j, delete_cost); // phantom column: left child i deleted
            }
        }
    }
}

CostMatrix::CostMatrix(const std::vector<std::vector<double>>& rows)
    : n_(rows.size()), left_(rows.size()), right_(rows.size()), cells_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw NonSquare("cost matrix must be square");
        }
        for (std::size_t j = 0; j < n_; ++j) {
            set(i, j, rows[i][j]);
        }
    }
}

void CostMatrix::validate() const {
    for (double v : cells_) {
        if (!std::isfinite(v)) {
            throw NonFinite("cost matrix entries must be finite");
        }
        if (v < 0.0) {
            throw NonFinite("cost matrix entries must be non-negative");
        }
    }
}

namespace {

// Kuhn-Munkres with row/column potentials, shortest augmenting paths.
std::vector<std::size_t> solve_potentials(const CostMatrix& m) {
    const std::size_t n = m.size();
    const double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; p[j] = row assigned to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        row_to_col[p[j] - 1] = j - 1;
    }
    return row_to_col;
}

// Among equal-cost optima prefer the assignment where lower rows take lower
// columns: swap any cost-neutral transposition that improves the order.
void canonicalize(const CostMatrix& m, std::vector<std::size_t>& a) {
    const std::size_t n = a.size();
    bool changed = true;
    std::size_t guard = 0;
    while (changed && guard++ <= n * n) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a[j] >= a[i]) continue;
                const double keep = m.at(i, a[i]) + m.at(j, a[j]);
                const double swap = m.at(i, a[j]) + m.at(j, a[i]);
                if (keep == swap) {
                    std::swap(a[i], a[j]);
                    changed = true;
                }
            }
        }
    }
}

} // namespace

AssignmentResult hungarian_solve(const CostMatrix& matrix) {
    matrix.validate();
    AssignmentResult result;
    if (matrix.size() == 0) {
        return result;
    }
    result.row_to_col = solve_potentials(matrix);
    canonicalize(matrix, result.row_to_col);
    double total = 0.0;
    for (std::size_t i = 0; i < result.row_to_col.size(); ++i) {
        total += matrix.at(i, result.row_to_col[i]);
    }
    result.total_cost = total;
    return result;
}

AssignmentResult hungarian_solve(const std::vector<std::vector<double>>& rows) {
    return hungarian_solve(CostMatrix(rows));
}

} // namespace sted
