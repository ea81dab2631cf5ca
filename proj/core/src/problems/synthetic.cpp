#include "smoothcvx/problems/synthetic.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

LabeledDataset make_classification_data(std::size_t n, std::size_t d, Rng& rng,
                                        double margin_scale) {
  if (n == 0 || d == 0) throw InputError("empty synthetic problem");
  const auto dd = static_cast<Eigen::Index>(d);
  Point w(dd);
  for (auto& v : w) v = rng.normal();
  w *= margin_scale / w.norm();
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), dd);
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < dd; ++j) X(i, j) = rng.normal() * scale;
    const double p = 1.0 / (1.0 + std::exp(-X.row(i).dot(w)));
    y[i] = rng.uniform() < p ? 1.0 : -1.0;
  }
  return dataset_from_dense(X, y);
}

LabeledDataset make_regression_data(std::size_t n, const Point& spectrum, double noise, Rng& rng) {
  const auto d = spectrum.size();
  if (n == 0 || d == 0) throw InputError("empty synthetic problem");
  Point w(d);
  for (auto& v : w) v = rng.normal();
  w /= std::sqrt(static_cast<double>(d));
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), d);
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) X(i, j) = rng.normal() * std::sqrt(spectrum[j]);
    y[i] = X.row(i).dot(w) + noise * rng.normal();
  }
  return dataset_from_dense(X, y);
}

LabeledDataset make_low_rank_regression_data(std::size_t n, std::size_t d, std::size_t rank, double noise,
                                             Rng& rng) {
  if (n == 0 || d == 0 || rank == 0 || rank > d) throw InputError("low-rank design needs 1 <= rank <= d and n >= 1");
  const auto nn = static_cast<Eigen::Index>(n), dd = static_cast<Eigen::Index>(d), rr = static_cast<Eigen::Index>(rank);
  Eigen::MatrixXd B(rr, dd);
  for (auto& v : B.reshaped()) v = rng.normal();
  Point w(dd);
  for (auto& v : w) v = rng.normal();
  w /= std::sqrt(static_cast<double>(d));
  Eigen::MatrixXd X(nn, dd);
  Eigen::VectorXd y(nn);
  for (Eigen::Index i = 0; i < nn; ++i) {
    Point z(rr);
    for (auto& v : z) v = rng.normal();
    X.row(i) = (B.transpose() * z).transpose();
    X.row(i) /= X.row(i).norm();
    y[i] = X.row(i).dot(w) + noise * rng.normal();
  }
  return dataset_from_dense(X, y);
}

Point geometric_spectrum(std::size_t d, double top, double bottom) {
  Point s(static_cast<Eigen::Index>(d));
  if (d == 1) {
    s[0] = top;
    return s;
  }
  const double r = std::log(bottom / top) / static_cast<double>(d - 1);
  for (std::size_t j = 0; j < d; ++j) s[static_cast<Eigen::Index>(j)] = top * std::exp(r * static_cast<double>(j));
  return s;
}

Matrix random_orthogonal(std::size_t d, Rng& rng) {
  const auto dd = static_cast<Eigen::Index>(d);
  Matrix G(dd, dd);
  for (Eigen::Index i = 0; i < dd; ++i)
    for (Eigen::Index j = 0; j < dd; ++j) G(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dd; ++j)
    if (R(j, j) < 0) Q.col(j) *= -1.0;
  return Q;
}

Matrix random_psd(const Point& eigs, Rng& rng) {
  const Matrix Q = random_orthogonal(static_cast<std::size_t>(eigs.size()), rng);
  Matrix A = Q * eigs.asDiagonal() * Q.transpose();
  return 0.5 * (A + A.transpose());
}

}  // namespace smoothcvx
