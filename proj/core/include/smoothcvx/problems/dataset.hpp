#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

namespace smoothcvx {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct LabeledDataset {
  // (index, value) pairs with 1-based, strictly increasing indices.
  std::vector<std::vector<std::pair<std::size_t, double>>> rows;
  std::vector<double> labels;
  std::size_t d = 0;  // largest feature index seen

  std::size_t size() const { return labels.size(); }
  bool is_classification() const;
  // n x d row-major matrix with 0-based columns.
  SparseMatrix matrix() const;
  // Scales every row to unit Euclidean norm (zero rows are left alone).
  void normalize_rows();
};

// LIBSVM text: "label idx:val idx:val ...", '#' starts a comment, blank lines skipped.
LabeledDataset parse_libsvm(std::istream& in, bool normalize = false);
LabeledDataset load_libsvm(const std::string& path, bool normalize = false);

// Builds a dataset from dense rows (zeros dropped).
LabeledDataset dataset_from_dense(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

}  // namespace smoothcvx
