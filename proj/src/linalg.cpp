#include "gframe/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gframe {

double op_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
}

double min_hermitian_eig(const Mat& a) {
    Mat h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

void canonicalize_columns(Mat& cols, double cutoff) {
    for (Eigen::Index j = 0; j < cols.cols(); ++j) {
        const double big = cols.col(j).cwiseAbs().maxCoeff();
        if (big == 0.0) continue;
        for (Eigen::Index i = 0; i < cols.rows(); ++i) {
            const Complex v = cols(i, j);
            if (std::abs(v) > cutoff * big) {
                cols.col(j) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

namespace {

Eigen::JacobiSVD<Mat> full_svd(const Mat& a) {
    return Eigen::JacobiSVD<Mat>(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

Mat orthonormal_range(const Mat& a, double rel_cutoff) {
    auto svd = full_svd(a);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() ? sv(0) * rel_cutoff : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
    Mat q = svd.matrixU().leftCols(r);
    canonicalize_columns(q);
    return q;
}

Mat range_projection(const Mat& a, double rel_cutoff) {
    Mat q = orthonormal_range(a, rel_cutoff);
    return q * q.adjoint();
}

int numerical_rank(const Mat& a, double rel_cutoff) {
    auto svd = full_svd(a);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() ? sv(0) * rel_cutoff : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
    return r;
}

Mat nullspace(const Mat& a, double rel_cutoff) {
    auto svd = full_svd(a);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() ? sv(0) * rel_cutoff : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
    Mat q = svd.matrixV().rightCols(a.cols() - r);
    canonicalize_columns(q);
    return q;
}

double span_gap(const Mat& q1, const Mat& q2) {
    return op_norm(q1 * q1.adjoint() - q2 * q2.adjoint());
}

double max_principal_cosine(const Mat& q1, const Mat& q2) {
    if (q1.cols() == 0 || q2.cols() == 0) return 0.0;
    return op_norm(q1.adjoint() * q2);
}

}  // namespace gframe
