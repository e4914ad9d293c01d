#include "graphlab/linalg.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphlab::linalg {

namespace {

struct LuFactors {
    Matrix lu;
    std::vector<std::size_t> perm;
};

LuFactors factorize(Matrix a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::fabs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::fabs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(perm[col], perm[pivot]);
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            a(r, col) = f;
            if (f == 0.0) continue;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return LuFactors{std::move(a), std::move(perm)};
}

std::vector<double> substitute(const LuFactors& f, const std::vector<double>& b) {
    const std::size_t n = f.lu.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s / f.lu(i, i);
    }
    return x;
}

}  // namespace

std::vector<double> lu_solve(const Matrix& a, const std::vector<double>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("lu_solve: matrix must be square");
    if (b.size() != n) throw std::invalid_argument("lu_solve: dimension mismatch");
    if (n > kMaxDenseDim)
        throw std::invalid_argument("lu_solve: system exceeds the dense-solver cap of " +
                                    std::to_string(kMaxDenseDim));
    if (n == 0) return {};

    const LuFactors factors = factorize(a);
    std::vector<double> x = substitute(factors, b);

    // One pass of iterative refinement keeps componentwise residuals near
    // machine precision even for ill-scaled conductances.
    std::vector<double> residual(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t j = 0; j < n; ++j) s -= a(i, j) * x[j];
        residual[i] = s;
    }
    const std::vector<double> correction = substitute(factors, residual);
    for (std::size_t i = 0; i < n; ++i) x[i] += correction[i];
    return x;
}

}  // namespace graphlab::linalg
