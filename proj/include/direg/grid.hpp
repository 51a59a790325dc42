#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>
#include <vector>

#include "direg/rng.hpp"
#include "json.hpp"

namespace direg {

using Point2 = Eigen::Vector2d;

/// Regular observation grid on (0,1]^2 with points (p/side, q/side),
/// 1 <= p,q <= side, stored in lexicographic (t1, t2) order.
class RegularGrid {
 public:
  explicit RegularGrid(int side_count);

  int side_count() const { return side_; }
  Eigen::Index point_count() const {
    return static_cast<Eigen::Index>(side_) * side_;
  }
  double spacing() const { return 1.0 / side_; }

  /// Flat index of the point at 1-based axis positions (p, q).
  Eigen::Index index(int p, int q) const {
    return static_cast<Eigen::Index>(p - 1) * side_ + (q - 1);
  }

  Point2 point(Eigen::Index m) const {
    const int p = static_cast<int>(m / side_) + 1;
    const int q = static_cast<int>(m % side_) + 1;
    return Point2(static_cast<double>(p) / side_, static_cast<double>(q) / side_);
  }

  /// Nearest 1-based axis position to coordinate x, clamped to [1, side].
  /// Exact half-way ties resolve to the smaller position, which makes
  /// nearest_index() pick the lexicographically smallest of tied points.
  int axis_index(double x) const {
    const double k = std::ceil(x * side_ - 0.5);
    if (k < 1.0) return 1;
    if (k > side_) return side_;
    return static_cast<int>(k);
  }

  /// Index of the grid point closest to q in Euclidean distance; ties broken
  /// by lexicographic order of (t1, t2), out-of-domain queries clamp to the
  /// boundary. Total on finite inputs.
  Eigen::Index nearest_index(const Point2& q) const {
    return index(axis_index(q.x()), axis_index(q.y()));
  }

  /// Closest grid point distinct from point m (lexicographic tie-break among
  /// equidistant candidates). Used by the noise-variance estimator.
  Eigen::Index nearest_distinct_index(Eigen::Index m) const;

  bool operator==(const RegularGrid& o) const { return side_ == o.side_; }

 private:
  int side_;
};

RegularGrid build_grid(int side_count);

/// One realization observed on a grid.
struct Surface {
  RegularGrid grid;
  Eigen::ArrayXd values;
};

/// N surfaces sharing one grid. Values are stored as an N x M0 matrix,
/// one row per surface, columns in the grid's lexicographic point order.
class FunctionalDataset {
 public:
  FunctionalDataset(RegularGrid grid, Eigen::MatrixXd values, double noise_sd,
                    nlohmann::json meta = {});

  const RegularGrid& grid() const { return grid_; }
  Eigen::Index surface_count() const { return values_.rows(); }
  const Eigen::MatrixXd& values() const { return values_; }
  double noise_sd() const { return noise_sd_; }
  const nlohmann::json& meta() const { return meta_; }

  Surface surface(Eigen::Index j) const {
    return Surface{grid_, values_.row(j).transpose().array()};
  }

 private:
  RegularGrid grid_;
  Eigen::MatrixXd values_;
  double noise_sd_;
  nlohmann::json meta_;
};

/// Adds independent centered Gaussian noise, scaled by sd, to every value.
/// Deterministic for a given stream seed; sd = 0 returns an identical copy.
FunctionalDataset add_noise(const FunctionalDataset& dataset, double sd,
                            rng::Stream& stream);

}  // namespace direg
