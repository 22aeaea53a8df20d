#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "hsindt/error.hpp"
#include "hsindt/preprocess.hpp"

namespace hsindt {

PcaResult pca(const Hypercube& cube, std::size_t components) {
  const std::size_t bands = cube.bands();
  const std::size_t n = cube.valid_count();
  if (components < 1 || components > bands || components > n) {
    throw InvalidArgument("pca: component count " + std::to_string(components) + " outside [1, min(B=" +
                          std::to_string(bands) + ", pixels=" + std::to_string(n) + ")]");
  }
  for (double v : cube.values()) {
    if (!std::isfinite(v)) throw InvalidArgument("pca: cube contains non-finite values");
  }

  // Valid pixel spectra as rows, in row-major pixel order.
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(bands));
  std::vector<std::size_t> pixel_of_row;
  pixel_of_row.reserve(n);
  for (std::size_t i = 0; i < cube.lines(); ++i) {
    for (std::size_t j = 0; j < cube.samples(); ++j) {
      if (!cube.valid(i, j)) continue;
      const auto row = static_cast<Eigen::Index>(pixel_of_row.size());
      for (std::size_t b = 0; b < bands; ++b) x(row, static_cast<Eigen::Index>(b)) = cube.at(i, j, b);
      pixel_of_row.push_back(i * cube.samples() + j);
    }
  }

  PcaModel model;
  model.mean_spectrum.resize(bands);
  for (std::size_t b = 0; b < bands; ++b) {
    const double ref = x(0, static_cast<Eigen::Index>(b));
    double sum = 0.0;
    for (Eigen::Index r = 0; r < x.rows(); ++r) sum += x(r, static_cast<Eigen::Index>(b)) - ref;
    model.mean_spectrum[b] = ref + sum / static_cast<double>(n);
  }
  for (std::size_t b = 0; b < bands; ++b) x.col(static_cast<Eigen::Index>(b)).array() -= model.mean_spectrum[b];

  const Eigen::MatrixXd covariance = (x.transpose() * x) / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
  if (solver.info() != Eigen::Success) throw Error("pca: eigendecomposition failed");

  // Eigen returns ascending eigenvalues; walk from the top.
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (std::size_t p = 0; p < components; ++p) {
    const auto col = static_cast<Eigen::Index>(bands - 1 - p);
    std::vector<double> loading(bands);
    std::size_t largest = 0;
    for (std::size_t b = 0; b < bands; ++b) {
      loading[b] = vectors(static_cast<Eigen::Index>(b), col);
      if (std::fabs(loading[b]) > std::fabs(loading[largest])) largest = b;
    }
    if (loading[largest] < 0.0) {
      for (double& v : loading) v = -v;
    }
    model.components.push_back(std::move(loading));
    model.explained_variance.push_back(values(col));
  }

  Hypercube scores(cube.lines(), cube.samples(), components, CubeKind::kFeature);
  scores.set_provenance(cube.provenance());
  scores.set_validity(cube.validity());
  for (std::size_t p = 0; p < components; ++p) {
    const auto& loading = model.components[p];
    auto plane = scores.band(p);
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      double s = 0.0;
      for (std::size_t b = 0; b < bands; ++b) s += x(r, static_cast<Eigen::Index>(b)) * loading[b];
      plane[pixel_of_row[static_cast<std::size_t>(r)]] = s;
    }
  }
  scores.append_provenance("pca", "k=" + std::to_string(components));
  return {std::move(model), std::move(scores)};
}

Image first_principal_component(const Hypercube& cube) { return slice_band(pca(cube, 1).scores, 0); }

}  // namespace hsindt
