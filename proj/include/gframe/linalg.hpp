#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gframe {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

// Thrown when an input file or table is malformed (index out of range,
// inconsistent dimensions).  Distinct from a failed mathematical check,
// which is reported, not thrown.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's mathematical precondition is violated
// (non-admissible window, spectral gap too small, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest singular value.
double op_norm(const Mat& a);

/// Smallest eigenvalue of the Hermitian part (a + a^H)/2.
double min_hermitian_eig(const Mat& a);

// Deterministic phase convention: rotate each column so that its first
// entry with modulus above cutoff*max|entry| is real and positive.
void canonicalize_columns(Mat& cols, double cutoff = 1e-9);

/// Orthonormal basis of the column space, singular values below
/// rel_cutoff * sigma_max dropped.  Columns carry the canonical phase.
Mat orthonormal_range(const Mat& a, double rel_cutoff = 1e-10);

/// Orthogonal projection onto the column space of a.
Mat range_projection(const Mat& a, double rel_cutoff = 1e-10);

int numerical_rank(const Mat& a, double rel_cutoff = 1e-10);

/// Orthonormal basis of {x : a x = 0}, relative cutoff on singular values.
Mat nullspace(const Mat& a, double rel_cutoff = 1e-10);

// Span comparison for subspaces given by orthonormal bases: operator norm
// of the difference of the two orthogonal projections.  0 = equal spans,
// 1 = some direction of one span orthogonal to the other.
double span_gap(const Mat& q1, const Mat& q2);

/// Largest cosine of a principal angle between the two column spans
/// (sigma_max of q1^H q2 for orthonormal bases).  0 = orthogonal subspaces.
double max_principal_cosine(const Mat& q1, const Mat& q2);

}  // namespace gframe
