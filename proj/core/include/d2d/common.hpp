#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace d2d {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Vec2& a, const Vec2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Dense row-major matrix of doubles. Small helper; rows/cols are fixed after
// construction.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols, double init = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative extent");
    }

    double& operator()(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

}  // namespace d2d
