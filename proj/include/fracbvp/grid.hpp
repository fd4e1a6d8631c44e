#pragma once

// Shifted integer grids N_a = {a, a+1, ...} and sampled functions on them.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracbvp/errors.hpp"

namespace fracbvp {

/// Offsets of two grids closer than this are considered equal.
inline constexpr double kOffsetTolerance = 1e-9;

/// The points offset, offset+1, ..., offset+count-1.
class ShiftedGrid {
public:
    ShiftedGrid(double offset, std::size_t count) : offset_(offset), count_(count) {
        if (count < 1) throw InvalidArgument("ShiftedGrid: count must be >= 1");
        if (!std::isfinite(offset)) throw InvalidArgument("ShiftedGrid: offset must be finite");
    }

    double offset() const noexcept { return offset_; }
    std::size_t count() const noexcept { return count_; }
    double point(std::size_t k) const noexcept { return offset_ + static_cast<double>(k); }
    double last() const noexcept { return point(count_ - 1); }

    bool aligned_with(const ShiftedGrid& other) const noexcept {
        return std::fabs(offset_ - other.offset_) <= kOffsetTolerance;
    }

    bool operator==(const ShiftedGrid& other) const noexcept {
        return count_ == other.count_ && aligned_with(other);
    }

private:
    double offset_;
    std::size_t count_;
};

inline ShiftedGrid make_grid(double offset, long long count) {
    if (count < 1) throw InvalidArgument("make_grid: count must be >= 1");
    return ShiftedGrid(offset, static_cast<std::size_t>(count));
}

/// A real-valued function sampled on a ShiftedGrid.
class GridFn {
public:
    GridFn(ShiftedGrid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.count())
            throw InvalidArgument("GridFn: expected " + std::to_string(grid_.count()) +
                                  " values, got " + std::to_string(values_.size()));
        for (double x : values_)
            if (!std::isfinite(x)) throw InvalidArgument("GridFn: values must be finite");
    }

    /// Sample f at every grid point.
    template <typename F>
    static GridFn sample(const ShiftedGrid& grid, F&& f) {
        std::vector<double> vals(grid.count());
        for (std::size_t k = 0; k < grid.count(); ++k) vals[k] = f(grid.point(k));
        return GridFn(grid, std::move(vals));
    }

    static GridFn constant(const ShiftedGrid& grid, double c) {
        return GridFn(grid, std::vector<double>(grid.count(), c));
    }

    const ShiftedGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    double offset() const noexcept { return grid_.offset(); }
    double point(std::size_t k) const noexcept { return grid_.point(k); }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double at(std::size_t k) const { return values_.at(k); }
    std::span<const double> values() const noexcept { return values_; }

    /// Index of grid point t, or throws if t is not on the grid.
    std::size_t index_of(double t) const {
        const double r = t - grid_.offset();
        const double k = std::round(r);
        if (std::fabs(r - k) > kOffsetTolerance || k < 0 ||
            k >= static_cast<double>(grid_.count()))
            throw InvalidArgument("GridFn: point " + std::to_string(t) + " is not on the grid");
        return static_cast<std::size_t>(k);
    }

    double operator()(double t) const { return values_[index_of(t)]; }

    double sup_norm() const noexcept {
        double m = 0.0;
        for (double x : values_) m = std::fmax(m, std::fabs(x));
        return m;
    }

    friend GridFn operator+(const GridFn& a, const GridFn& b) { return combine(a, 1.0, b, 1.0); }
    friend GridFn operator-(const GridFn& a, const GridFn& b) { return combine(a, 1.0, b, -1.0); }
    friend GridFn operator*(double c, const GridFn& a) {
        std::vector<double> v(a.values_);
        for (double& x : v) x *= c;
        return GridFn(a.grid_, std::move(v));
    }

    /// alpha*a + beta*b on a common grid.
    static GridFn combine(const GridFn& a, double alpha, const GridFn& b, double beta) {
        if (!(a.grid_ == b.grid_)) throw InvalidArgument("GridFn: grids do not match");
        std::vector<double> v(a.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = alpha * a.values_[k] + beta * b.values_[k];
        return GridFn(a.grid_, std::move(v));
    }

private:
    ShiftedGrid grid_;
    std::vector<double> values_;
};

/// order-th forward difference. The result keeps the offset and loses
/// `order` points from the end.
inline GridFn delta(const GridFn& f, std::size_t order) {
    if (order >= f.size())
        throw InvalidArgument("delta: order " + std::to_string(order) +
                              " needs more than " + std::to_string(f.size()) + " points");
    std::vector<double> v(f.values().begin(), f.values().end());
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = v[k + 1] - v[k];
        v.pop_back();
    }
    const ShiftedGrid grid(f.offset(), v.size());
    return GridFn(grid, std::move(v));
}

}  // namespace fracbvp
