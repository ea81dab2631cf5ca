#include "smoothcvx/problems/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {
namespace {

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end && std::isfinite(out);
}

bool parse_index(std::string_view s, std::size_t& out) {
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

}  // namespace

bool LabeledDataset::is_classification() const {
  for (double y : labels)
    if (y != 1.0 && y != -1.0) return false;
  return !labels.empty();
}

SparseMatrix LabeledDataset::matrix() const {
  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i])
      trip.emplace_back(static_cast<int>(i), static_cast<int>(j - 1), v);
  SparseMatrix X(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
  X.setFromTriplets(trip.begin(), trip.end());
  X.makeCompressed();
  return X;
}

void LabeledDataset::normalize_rows() {
  for (auto& row : rows) {
    double s = 0.0;
    for (const auto& e : row) s += e.second * e.second;
    if (s <= 0.0) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (auto& e : row) e.second *= inv;
  }
}

LabeledDataset parse_libsvm(std::istream& in, bool normalize) {
  LabeledDataset ds;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < sv.size()) {
      while (pos < sv.size() && std::isspace(static_cast<unsigned char>(sv[pos]))) ++pos;
      std::size_t end = pos;
      while (end < sv.size() && !std::isspace(static_cast<unsigned char>(sv[end]))) ++end;
      if (end > pos) tokens.push_back(sv.substr(pos, end - pos));
      pos = end;
    }
    if (tokens.empty()) continue;

    double label = 0.0;
    if (!parse_double(tokens[0], label))
      throw ParseError(lineno, "malformed label '" + std::string(tokens[0]) + "'");
    if (label == 0.0) throw ParseError(lineno, "zero label");

    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto tok = tokens[k];
      const auto colon = tok.find(':');
      std::size_t idx = 0;
      double val = 0.0;
      if (colon == std::string_view::npos || !parse_index(tok.substr(0, colon), idx) || idx == 0 ||
          !parse_double(tok.substr(colon + 1), val))
        throw ParseError(lineno, "malformed feature '" + std::string(tok) + "'");
      if (!row.empty() && idx <= row.back().first)
        throw ParseError(lineno, "feature indices must be strictly increasing");
      row.emplace_back(idx, val);
      ds.d = std::max(ds.d, idx);
    }
    ds.rows.push_back(std::move(row));
    ds.labels.push_back(label);
  }
  if (ds.labels.empty()) throw InputError("no examples");
  if (normalize) ds.normalize_rows();
  return ds;
}

LabeledDataset load_libsvm(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_libsvm(in, normalize);
}

LabeledDataset dataset_from_dense(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (X.rows() != y.size()) throw InputError("dataset_from_dense: row count mismatch");
  if (X.rows() == 0) throw InputError("no examples");
  LabeledDataset ds;
  ds.d = static_cast<std::size_t>(X.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    std::vector<std::pair<std::size_t, double>> row;
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      if (X(i, j) != 0.0) row.emplace_back(static_cast<std::size_t>(j + 1), X(i, j));
    ds.rows.push_back(std::move(row));
    ds.labels.push_back(y[i]);
  }
  return ds;
}

}  // namespace smoothcvx
