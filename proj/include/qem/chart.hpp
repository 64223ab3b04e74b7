#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qem/errors.hpp"

namespace qem {

inline constexpr int kMaxDim = 4;

using Point = std::array<double, kMaxDim>;       // unused coordinates stay 0
using MultiIndex = std::array<int, kMaxDim>;     // partial-derivative orders

inline int total_order(const MultiIndex& mi) {
    return mi[0] + mi[1] + mi[2] + mi[3];
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

struct CoordChart {
    int dim = 3;
    std::array<Interval, kMaxDim> ranges{};
    std::array<int, kMaxDim> grid{};  // default per-axis sample counts

    void validate() const {
        if (dim < 2 || dim > kMaxDim)
            throw Error(ErrorCode::Argument, "chart dimension must be 2..4");
        for (int a = 0; a < dim; ++a) {
            if (!(ranges[a].length() > 0.0))
                throw Error(ErrorCode::Argument, "chart range must have positive length");
            if (grid[a] < 3)
                throw Error(ErrorCode::Argument, "chart grid count must be >= 3");
        }
    }

    bool contains(const Point& p) const {
        for (int a = 0; a < dim; ++a)
            if (!ranges[a].contains(p[a])) return false;
        return true;
    }

    // distance from p to the chart boundary (min over axes)
    double boundary_distance(const Point& p) const {
        double d = 1e300;
        for (int a = 0; a < dim; ++a) {
            d = std::min(d, p[a] - ranges[a].lo);
            d = std::min(d, ranges[a].hi - p[a]);
        }
        return d;
    }
};

// Uniform sampling of a chart. Counts of 0 fall back to the chart defaults.
class Grid {
public:
    Grid(const CoordChart& chart, std::array<int, kMaxDim> counts = {})
        : chart_(chart) {
        for (int a = 0; a < chart.dim; ++a) {
            counts_[a] = counts[a] > 0 ? counts[a] : chart.grid[a];
            if (counts_[a] < 2)
                throw Error(ErrorCode::Argument, "grid needs at least 2 samples per axis");
        }
    }

    long size() const {
        long n = 1;
        for (int a = 0; a < chart_.dim; ++a) n *= counts_[a];
        return n;
    }

    Point point(long flat) const {
        Point p{};
        for (int a = chart_.dim - 1; a >= 0; --a) {
            long i = flat % counts_[a];
            flat /= counts_[a];
            const auto& r = chart_.ranges[a];
            p[a] = r.lo + (r.hi - r.lo) * double(i) / double(counts_[a] - 1);
        }
        return p;
    }

    int count(int axis) const { return counts_[axis]; }
    const CoordChart& chart() const { return chart_; }

private:
    CoordChart chart_;
    std::array<int, kMaxDim> counts_{};
};

}  // namespace qem
