// Dense linear algebra shared by every other module.
//
// Vectors and matrices are plain Eigen types. The functions here add the
// handful of operations the rest of the library needs on top of Eigen:
// minimum-norm least squares, rowspace projection, nullspace bases, and the
// L1/L2/Linf norms together with their duals.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "robustopt/errors.hpp"

namespace robustopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Norm { L1, L2, Linf };

/// Norm dual to `p`: dual(L2) = L2, dual(Linf) = L1, dual(L1) = Linf.
Norm dual(Norm p);

std::string_view to_string(Norm p);
/// Accepts "l1", "l2", "linf" (case-insensitive); throws std::invalid_argument otherwise.
Norm parse_norm(std::string_view text);

double norm(const Vector& v, Norm p);

/// Singular values below kRankCutoff * (largest singular value) count as zero.
inline constexpr double kRankCutoff = 1e-10;

std::size_t numerical_rank(const Matrix& X);

/// X^+ y: the least-squares solution of minimal L2 norm.
///
/// When the rows of X are linearly independent the solve goes through the
/// Gram system (X X^T) a = y, w = X^T a. Otherwise a thin SVD with the
/// relative cutoff above is used.
Vector min_norm_least_squares(const Matrix& X, const Vector& y);

/// Orthogonal projection of w onto rowspace(X).
Vector project_rowspace(const Matrix& X, const Vector& w);

/// Orthonormal basis of nullspace(X); empty when the nullspace is trivial.
///
/// Each basis vector is sign-normalized so that its entry of largest
/// magnitude (lowest index on ties) is positive, which makes the basis
/// deterministic for a given X.
std::vector<Vector> nullspace_basis(const Matrix& X);

/// Smallest eigenvalue of a symmetric matrix.
double min_symmetric_eigenvalue(const Matrix& A);

/// Throws std::invalid_argument if v is empty or has a non-finite entry.
void require_finite(const Vector& v, std::string_view what);
void require_finite(const Matrix& A, std::string_view what);

}  // namespace robustopt
