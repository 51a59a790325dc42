#include "direg/grid.hpp"

namespace direg {

RegularGrid::RegularGrid(int side_count) : side_(side_count) {
  if (side_count < 2)
    throw std::invalid_argument("RegularGrid: side_count must be >= 2");
}

RegularGrid build_grid(int side_count) { return RegularGrid(side_count); }

Eigen::Index RegularGrid::nearest_distinct_index(Eigen::Index m) const {
  const int p = static_cast<int>(m / side_) + 1;
  const int q = static_cast<int>(m % side_) + 1;
  // All candidates at the minimal distance (one grid step) are the axis
  // neighbours; the lexicographically smallest is (p-1, q), then (p, q-1).
  if (p >= 2) return index(p - 1, q);
  if (q >= 2) return index(p, q - 1);
  return index(1, 2);
}

FunctionalDataset::FunctionalDataset(RegularGrid grid, Eigen::MatrixXd values,
                                     double noise_sd, nlohmann::json meta)
    : grid_(grid),
      values_(std::move(values)),
      noise_sd_(noise_sd),
      meta_(std::move(meta)) {
  if (values_.rows() < 1)
    throw std::invalid_argument("FunctionalDataset: need at least one surface");
  if (values_.cols() != grid_.point_count())
    throw std::invalid_argument(
        "FunctionalDataset: value count does not match the grid");
  if (noise_sd_ < 0)
    throw std::invalid_argument("FunctionalDataset: noise_sd must be >= 0");
}

FunctionalDataset add_noise(const FunctionalDataset& dataset, double sd,
                            rng::Stream& stream) {
  if (sd < 0) throw std::invalid_argument("add_noise: sd must be >= 0");
  Eigen::MatrixXd noisy = dataset.values();
  if (sd > 0) {
    for (Eigen::Index j = 0; j < noisy.rows(); ++j)
      for (Eigen::Index m = 0; m < noisy.cols(); ++m)
        noisy(j, m) += sd * stream.gaussian();
  }
  return FunctionalDataset(dataset.grid(), std::move(noisy), sd,
                           dataset.meta());
}

}  // namespace direg
