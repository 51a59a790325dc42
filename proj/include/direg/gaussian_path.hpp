#pragma once

#include <Eigen/Dense>

#include "direg/rng.hpp"

namespace direg {

enum class ProcessKind { fbm, fou };

/// Which sampling backend to use. Auto means circulant embedding with a
/// dense-Cholesky fallback if the embedding fails to be nonnegative definite.
enum class PathBackend { automatic, circulant, cholesky };

/// Specification of a one-dimensional Gaussian path on [0, extent].
struct PathSpec {
  ProcessKind kind = ProcessKind::fbm;
  double hurst = 0.5;      // H for fbm; rho/2 for fOU
  double scale_a = 1.0;    // fOU decay parameter a; ignored for fbm
  int n_points = 256;      // grid has n_points + 1 abscissae
  double extent = 1.0;
};

/// Sampled path: n_points + 1 increasing abscissae with matching values.
/// Paths produced by the simulators are uniform grids starting at 0.
struct Path1D {
  Eigen::ArrayXd abscissae;
  Eigen::ArrayXd values;

  Eigen::Index size() const { return abscissae.size(); }

  /// Index of the abscissa nearest to x (half-way ties resolve down).
  Eigen::Index nearest_index(double x) const;
  double value_at_nearest(double x) const { return values[nearest_index(x)]; }
};

/// Exact-in-distribution fractional Brownian motion sample on the grid
/// {k * extent / n_points}. Circulant embedding of the fractional Gaussian
/// noise covariance; the embedding is doubled until its spectrum is
/// nonnegative (tiny negatives are clipped), with a dense Cholesky fallback.
Path1D simulate_fbm_path(const PathSpec& spec, rng::Stream& stream,
                         PathBackend backend = PathBackend::automatic);

/// Stationary fractional Ornstein-Uhlenbeck sample, covariance
/// exp(-a |t-s|^rho) with rho = 2 * hurst, same embedding policy.
Path1D simulate_fou_path(const PathSpec& spec, rng::Stream& stream,
                         PathBackend backend = PathBackend::automatic);

/// Value of a zero-at-origin stationary-increments path at abscissa s,
/// extended to s < 0 through the pathwise mapping B(-s) := -B(s).
double sample_two_sided(const Path1D& path, double s);

/// Extends a path (zero at the origin) to the given nonpositive abscissae via
/// B(-s) := -B(s), matching |s| to the nearest grid abscissa. The result
/// concatenates the negative part (ascending) with the original path.
Path1D extend_stationary_increments(const Path1D& path,
                                    const Eigen::ArrayXd& neg_abscissae);

}  // namespace direg
