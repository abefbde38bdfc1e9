#pragma once

#include "gframe/group.hpp"

namespace gframe {

enum class Side { left, right };

/// Convolution with respect to the Haar weights:
/// (f * g)(s) = sum_t w(t) f(t) g(t^-1 s), summed in fixed index order.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// f^flat(s) = conj(f(s^-1)).
GroupFunction flat(const GroupFunction& f);

/// f^sharp(s) = delta_G(s^-1) conj(f(s^-1)).
GroupFunction sharp(const GroupFunction& f);

/// Matrix of the left regular representation, [lambda(s)f](t) = f(s^-1 t).
Mat lambda_matrix(const GroupTable& g, int s);

/// Matrix of the right regular representation,
/// [rho(s)f](t) = delta_G(s)^{1/2} f(t s).
Mat rho_matrix(const GroupTable& g, int s);

Mat regular_rep(const GroupTable& g, Side side, int s);

struct ConvolutionOperator {
    Side side;
    GroupFunction symbol;
    Mat matrix;
    double operator_norm;  // largest singular value; finite by construction
};

/// Right: matrix of f -> f * g.  Left: matrix of f -> g * f.
ConvolutionOperator conv_operator(Side side, const GroupFunction& g);

// An antilinear operator x -> scale .* conj(x[perm]); matrices cannot
// encode antilinearity, so the (permutation, diagonal, conjugation)
// factorization is stored explicitly.
struct AntilinearMap {
    std::vector<int> perm;
    RealVec scale;

    Vec apply(const Vec& x) const;

    /// Real matrix r with (this)(x) = r * conj(x).
    Mat linear_part() const;

    /// The linear operator x -> (this)(a((this)(x))).
    Mat sandwich(const Mat& a) const;
};

/// The modular operator (diagonal), modular conjugation J, and the two
/// involution closures S = Delta^{-1/2} J and F = Delta^{1/2} J.
struct ModularPair {
    const GroupTable* group = nullptr;
    RealVec delta_diag;
    AntilinearMap conjugation;  // J
    AntilinearMap involution_sharp;  // S
    AntilinearMap involution_flat;   // F

    /// Diagonal matrix of Delta^t.
    Mat delta_power(double t) const;
};

ModularPair modular_pair(const GroupTable& g);

struct IdempotentReport {
    double involution_residual = 0.0;   // ||e - e^flat|| (or sharp on the left)
    double idempotency_residual = 0.0;  // ||e - e*e||
    double projection_residual = 0.0;   // eigenvalue distance of pi(e) from {0,1}
    bool selfadjoint_idempotent = false;
    bool projection = false;
};

/// e = e^flat = e*e (right side; sharp on the left), cross-checked against
/// the spectrum of the convolution operator being {0,1}.
IdempotentReport is_selfadjoint_idempotent(Side side, const GroupFunction& e, double tol);

struct ConeReport {
    bool in_p_flat = false;
    bool in_p_sharp = false;
    bool in_p = false;
    double min_eig_right = 0.0;        // min eigenvalue of herm(pi_r(f))
    double min_eig_left = 0.0;         // min eigenvalue of herm(pi_l(f))
    double min_eig_twisted = 0.0;      // same for pi_r(Delta^{1/4} f)
    double hermiticity_residual = 0.0;
};

/// Cone membership via positive semidefiniteness of the convolution
/// operators; the twisted cone is tested after applying Delta^{1/4}.
ConeReport cone_membership(const GroupFunction& f, double tol);

}  // namespace gframe
