#pragma once

#include "gframe/linalg.hpp"

namespace gframe {

/// A signal sampled on a uniform grid x_i = grid_start + i*grid_step.
struct SampledSignal {
    Vec samples;
    double grid_start = 0.0;
    double grid_step = 0.0;

    double norm() const;  // sqrt(grid_step * sum |samples|^2)
    Complex mean_integral() const;  // grid_step * sum samples

    /// Linear interpolation between samples, zero outside the grid.
    Complex at(double x) const;
};

SampledSignal make_signal(Vec samples, double grid_start, double grid_step);

/// grid_step-weighted L2 inner product; the two signals must share a grid.
Complex signal_inner(const SampledSignal& a, const SampledSignal& b);

/// Quadrature grid on the affine group, log-uniform in scale and uniform
/// in shift, with weights for the left Haar measure da db / a^2.  Under
/// u = log a the measure is du db / a, so the midpoint-rule weight of the
/// cell around (a_j, b_k) is (dlog a)(db)/a_j.
struct AffineGrid {
    RealVec scales;  // a_j, strictly increasing, midpoints in log scale
    RealVec shifts;  // b_k, midpoints of uniform cells
    double dlog = 0.0;
    double db = 0.0;

    double weight(int j) const { return dlog * db / scales(j); }

    static AffineGrid logarithmic(double a_min, double a_max, int n_scales, double b_min,
                                  double b_max, int n_shifts);
};

/// Coefficients c_jk = (psi | pi(a_j, b_k) eta) for the affine-group
/// representation pi(a,b) eta(x) = a^{-1/2} eta((x-b)/a), computed by
/// quadrature on the signal grid with the dilated window interpolated
/// linearly.  The wavelet must have (numerically) zero mean.
Mat affine_analysis(const SampledSignal& psi, const SampledSignal& eta,
                    const AffineGrid& grid);

struct CalderonResult {
    double constant = 0.0;  // C_eta
    double rescale = 0.0;   // multiply eta by this to get C = 1
    double excluded_radius = 0.0;  // neighborhood of omega = 0 left out
};

/// Scalar admissibility constant of the affine group, computed in the
/// frequency domain (zero-padded DFT, one-bin exclusion around 0) with
/// the convention that makes the resolution-of-identity constant equal
/// C_eta exactly.
CalderonResult calderon_constant(const SampledSignal& eta);

struct ResolutionReport {
    Complex quadrature;  // sum_jk w_jk c^psi_jk conj(c^phi_jk)
    Complex exact;       // (psi | phi)
    double relative_error = 0.0;
    double c_eta = 0.0;     // grid version of the normalization constant
    double calderon = 0.0;  // C_eta of the supplied wavelet
    bool coverage_ok = false;
};

/// The group-quadrature form of the inner product against the exact
/// value.  The wavelet must be normalized (C_eta = 1 within 1e-3); a
/// relative error above the coverage bound flags the grid as too small.
ResolutionReport resolution_of_identity(const SampledSignal& psi, const SampledSignal& phi,
                                        const SampledSignal& eta, const AffineGrid& grid);

}  // namespace gframe
