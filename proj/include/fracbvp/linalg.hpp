#pragma once

// Small dense row-major matrix and an LU solver with partial pivoting.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "fracbvp/errors.hpp"

namespace fracbvp {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    /// Maximum absolute column sum.
    double norm1() const noexcept {
        double best = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            double s = 0.0;
            for (std::size_t r = 0; r < rows_; ++r) s += std::fabs((*this)(r, c));
            best = std::max(best, s);
        }
        return best;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// PA = LU factorization of a square matrix.
class LuDecomposition {
public:
    explicit LuDecomposition(DenseMatrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
        const std::size_t n = lu_.rows();
        if (lu_.cols() != n) throw InvalidArgument("LuDecomposition: matrix must be square");
        norm1_ = lu_.norm1();
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});

        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            double best = std::fabs(lu_(k, k));
            for (std::size_t r = k + 1; r < n; ++r) {
                if (std::fabs(lu_(r, k)) > best) {
                    best = std::fabs(lu_(r, k));
                    p = r;
                }
            }
            if (best == 0.0 || !std::isfinite(best))
                throw SingularSystem("LuDecomposition: zero pivot in column " + std::to_string(k));
            if (p != k) {
                for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(p, c));
                std::swap(perm_[k], perm_[p]);
            }
            const double piv = lu_(k, k);
            for (std::size_t r = k + 1; r < n; ++r) {
                const double f = lu_(r, k) / piv;
                lu_(r, k) = f;
                if (f == 0.0) continue;
                for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
            }
        }
    }

    std::size_t size() const noexcept { return lu_.rows(); }

    std::vector<double> solve(std::span<const double> b) const {
        const std::size_t n = size();
        if (b.size() != n) throw InvalidArgument("LuDecomposition::solve: size mismatch");
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b[perm_[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
            x[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = x[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
            x[i] = s / lu_(i, i);
        }
        return x;
    }

    /// 1-norm condition number, from the explicit inverse. O(n^3); fine for
    /// the few-hundred-unknown systems assembled here.
    double condition_number() const {
        const std::size_t n = size();
        std::vector<double> e(n, 0.0);
        double inv_norm = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            std::fill(e.begin(), e.end(), 0.0);
            e[c] = 1.0;
            const auto col = solve(e);
            double s = 0.0;
            for (double x : col) s += std::fabs(x);
            inv_norm = std::max(inv_norm, s);
        }
        return norm1_ * inv_norm;
    }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    double norm1_ = 0.0;
};

/// Solve A x = b, rejecting systems whose condition number exceeds max_cond.
inline std::vector<double> solve_dense(DenseMatrix a, std::span<const double> b,
                                       double max_cond = 1e12) {
    const LuDecomposition lu(std::move(a));
    const double cond = lu.condition_number();
    if (!(cond <= max_cond))
        throw SingularSystem("solve_dense: condition number " + std::to_string(cond) +
                             " exceeds " + std::to_string(max_cond));
    return lu.solve(b);
}

}  // namespace fracbvp
