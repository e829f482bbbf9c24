#include "robustopt/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace robustopt {

Norm dual(Norm p) {
  switch (p) {
    case Norm::L1:
      return Norm::Linf;
    case Norm::L2:
      return Norm::L2;
    case Norm::Linf:
      return Norm::L1;
  }
  return Norm::L2;
}

std::string_view to_string(Norm p) {
  switch (p) {
    case Norm::L1:
      return "L1";
    case Norm::L2:
      return "L2";
    case Norm::Linf:
      return "Linf";
  }
  return "?";
}

Norm parse_norm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "l1") return Norm::L1;
  if (lower == "l2") return Norm::L2;
  if (lower == "linf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected l1, l2 or linf)");
}

double norm(const Vector& v, Norm p) {
  switch (p) {
    case Norm::L1:
      return v.lpNorm<1>();
    case Norm::L2:
      return v.norm();
    case Norm::Linf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

namespace {

std::size_t rank_from_singular_values(const Vector& sv) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = kRankCutoff * sv(0);
  return static_cast<std::size_t>((sv.array() > cutoff).count());
}

}  // namespace

std::size_t numerical_rank(const Matrix& X) {
  if (X.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(X);
  return rank_from_singular_values(svd.singularValues());
}

Vector min_norm_least_squares(const Matrix& X, const Vector& y) {
  if (X.rows() != y.size()) {
    throw DimensionError("min_norm_least_squares: X has " + std::to_string(X.rows()) +
                         " rows but y has length " + std::to_string(y.size()));
  }
  if (X.cols() == 0) return Vector();

  const auto rows = static_cast<std::size_t>(X.rows());
  if (rows <= static_cast<std::size_t>(X.cols()) && numerical_rank(X) == rows) {
    const Matrix gram = X * X.transpose();
    Eigen::LLT<Matrix> llt(gram);
    if (llt.info() == Eigen::Success) {
      const Vector alpha = llt.solve(y);
      return X.transpose() * alpha;
    }
  }

  Eigen::JacobiSVD<Matrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  const std::size_t r = rank_from_singular_values(sv);
  Vector w = Vector::Zero(X.cols());
  for (std::size_t k = 0; k < r; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    w += (svd.matrixU().col(i).dot(y) / sv(i)) * svd.matrixV().col(i);
  }
  return w;
}

Vector project_rowspace(const Matrix& X, const Vector& w) {
  if (X.cols() != w.size()) {
    throw DimensionError("project_rowspace: X has " + std::to_string(X.cols()) +
                         " columns but w has length " + std::to_string(w.size()));
  }
  // w_par = X^+ (X w): the min-norm solution of X z = X w.
  return min_norm_least_squares(X, X * w);
}

std::vector<Vector> nullspace_basis(const Matrix& X) {
  std::vector<Vector> basis;
  const Eigen::Index d = X.cols();
  if (d == 0) return basis;
  if (X.rows() == 0) {
    for (Eigen::Index j = 0; j < d; ++j) basis.push_back(Vector::Unit(d, j));
    return basis;
  }

  Eigen::JacobiSVD<Matrix> svd(X, Eigen::ComputeFullV);
  const std::size_t r = rank_from_singular_values(svd.singularValues());
  const Matrix& V = svd.matrixV();
  for (Eigen::Index k = static_cast<Eigen::Index>(r); k < d; ++k) {
    Vector u = V.col(k);
    Eigen::Index arg = 0;
    u.cwiseAbs().maxCoeff(&arg);
    if (u(arg) < 0) u = -u;
    basis.push_back(std::move(u));
  }
  return basis;
}

double min_symmetric_eigenvalue(const Matrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("min_symmetric_eigenvalue: matrix is not square");
  if (A.size() == 0) throw DimensionError("min_symmetric_eigenvalue: empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(A, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

void require_finite(const Vector& v, std::string_view what) {
  if (v.size() == 0) throw std::invalid_argument(std::string(what) + ": empty vector");
  if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

void require_finite(const Matrix& A, std::string_view what) {
  if (!A.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

}  // namespace robustopt
