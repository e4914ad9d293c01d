#pragma once

#include <cstddef>
#include <vector>

namespace graphlab::linalg {

// Minimal dense row-major matrix for the desk-scale linear systems in this
// project (hitting times, grounded Laplacians). Systems are capped at
// kMaxDenseDim unknowns; callers reject larger graphs up front.
constexpr std::size_t kMaxDenseDim = 2000;

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

// Solve A x = b by LU decomposition with partial pivoting, followed by one
// pass of iterative refinement. Throws std::runtime_error on a singular
// pivot and std::invalid_argument on shape errors.
std::vector<double> lu_solve(const Matrix& a, const std::vector<double>& b);

}  // namespace graphlab::linalg
