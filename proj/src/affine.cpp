#include "gframe/affine.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

namespace gframe {

namespace {

constexpr double kZeroMeanTol = 1e-6;
constexpr double kCoverageBound = 0.05;
constexpr double kPi = 3.14159265358979323846;

void require_same_grid(const SampledSignal& a, const SampledSignal& b) {
    if (a.samples.size() != b.samples.size() || a.grid_start != b.grid_start ||
        a.grid_step != b.grid_step)
        throw PreconditionError("signals live on different grids");
}

void require_zero_mean(const SampledSignal& eta) {
    if (std::abs(eta.mean_integral()) > kZeroMeanTol * std::max(1.0, eta.norm()))
        throw PreconditionError("wavelet must have zero mean");
}

}  // namespace

double SampledSignal::norm() const { return std::sqrt(grid_step * samples.squaredNorm()); }

Complex SampledSignal::mean_integral() const { return grid_step * samples.sum(); }

Complex SampledSignal::at(double x) const {
    const double t = (x - grid_start) / grid_step;
    const auto m = samples.size();
    if (t < 0.0 || t > static_cast<double>(m - 1)) return 0.0;
    const auto i = static_cast<Eigen::Index>(t);
    if (i >= m - 1) return samples(m - 1);
    const double frac = t - static_cast<double>(i);
    return (1.0 - frac) * samples(i) + frac * samples(i + 1);
}

SampledSignal make_signal(Vec samples, double grid_start, double grid_step) {
    if (samples.size() < 2) throw StructuralError("signal needs at least two samples");
    if (!(grid_step > 0.0)) throw StructuralError("grid step must be positive");
    return SampledSignal{std::move(samples), grid_start, grid_step};
}

Complex signal_inner(const SampledSignal& a, const SampledSignal& b) {
    require_same_grid(a, b);
    return a.grid_step * b.samples.dot(a.samples);  // conjugate-linear in b
}

AffineGrid AffineGrid::logarithmic(double a_min, double a_max, int n_scales, double b_min,
                                   double b_max, int n_shifts) {
    if (!(a_min > 0.0 && a_max > a_min) || n_scales < 1)
        throw StructuralError("bad scale range");
    if (!(b_max > b_min) || n_shifts < 1) throw StructuralError("bad shift range");
    AffineGrid g;
    g.dlog = (std::log(a_max) - std::log(a_min)) / n_scales;
    g.db = (b_max - b_min) / n_shifts;
    g.scales.resize(n_scales);
    for (int j = 0; j < n_scales; ++j)
        g.scales(j) = std::exp(std::log(a_min) + (j + 0.5) * g.dlog);
    g.shifts.resize(n_shifts);
    for (int k = 0; k < n_shifts; ++k) g.shifts(k) = b_min + (k + 0.5) * g.db;
    return g;
}

Mat affine_analysis(const SampledSignal& psi, const SampledSignal& eta,
                    const AffineGrid& grid) {
    if (grid.scales.size() == 0 || grid.shifts.size() == 0)
        throw StructuralError("empty affine grid");
    require_zero_mean(eta);
    const auto m = psi.samples.size();
    Mat c(grid.scales.size(), grid.shifts.size());
    for (Eigen::Index j = 0; j < grid.scales.size(); ++j) {
        const double a = grid.scales(j);
        const double root = 1.0 / std::sqrt(a);
        for (Eigen::Index k = 0; k < grid.shifts.size(); ++k) {
            const double b = grid.shifts(k);
            Complex acc = 0.0;
            for (Eigen::Index i = 0; i < m; ++i) {
                const double x = psi.grid_start + static_cast<double>(i) * psi.grid_step;
                acc += psi.samples(i) * std::conj(root * eta.at((x - b) / a));
            }
            c(j, k) = psi.grid_step * acc;
        }
    }
    return c;
}

CalderonResult calderon_constant(const SampledSignal& eta) {
    require_zero_mean(eta);
    const auto m = eta.samples.size();
    const Eigen::Index padded = 4 * m;
    std::vector<Complex> in(static_cast<std::size_t>(padded), Complex(0.0, 0.0));
    for (Eigen::Index i = 0; i < m; ++i) in[static_cast<std::size_t>(i)] = eta.samples(i);
    std::vector<Complex> out;
    Eigen::FFT<double> fft;
    fft.fwd(out, in);

    // |eta_hat(omega_l)|^2 with the unitary transform convention is
    // (step^2 / 2 pi) |DFT_l|^2 at omega_l = 2 pi l / (padded * step);
    // the resolution-of-identity constant is pi * int |eta_hat|^2/|w| dw.
    const double domega = 2.0 * kPi / (static_cast<double>(padded) * eta.grid_step);
    const double scale = eta.grid_step * eta.grid_step / (2.0 * kPi);
    double integral = 0.0;
    for (Eigen::Index l = 0; l < padded; ++l) {
        const Eigen::Index signed_l = l <= padded / 2 ? l : l - padded;
        const double omega = static_cast<double>(signed_l) * domega;
        if (std::abs(omega) < domega) continue;  // one-bin exclusion at 0
        integral += scale * std::norm(out[static_cast<std::size_t>(l)]) / std::abs(omega);
    }
    CalderonResult res;
    res.constant = kPi * integral * domega;
    res.rescale = 1.0 / std::sqrt(res.constant);
    res.excluded_radius = domega;
    return res;
}

ResolutionReport resolution_of_identity(const SampledSignal& psi, const SampledSignal& phi,
                                        const SampledSignal& eta, const AffineGrid& grid) {
    require_same_grid(psi, phi);
    const CalderonResult cal = calderon_constant(eta);
    if (std::abs(cal.constant - 1.0) > 1e-3)
        throw PreconditionError("wavelet is not normalized: Calderon constant " +
                                std::to_string(cal.constant));

    const Mat c_psi = affine_analysis(psi, eta, grid);
    const Mat c_phi = affine_analysis(phi, eta, grid);
    const Mat c_eta = affine_analysis(SampledSignal{eta.samples, eta.grid_start, eta.grid_step},
                                      eta, grid);

    ResolutionReport rep;
    rep.calderon = cal.constant;
    Complex quad = 0.0;
    double eta_quad = 0.0;
    for (Eigen::Index j = 0; j < grid.scales.size(); ++j) {
        const double w = grid.weight(static_cast<int>(j));
        for (Eigen::Index k = 0; k < grid.shifts.size(); ++k) {
            quad += w * c_psi(j, k) * std::conj(c_phi(j, k));
            eta_quad += w * std::norm(c_eta(j, k));
        }
    }
    rep.quadrature = quad;
    rep.exact = signal_inner(psi, phi);
    const double denom = std::max(std::abs(rep.exact), psi.norm() * phi.norm());
    rep.relative_error = std::abs(rep.quadrature - rep.exact) / denom;
    const double eta_norm2 = eta.grid_step * eta.samples.squaredNorm();
    rep.c_eta = eta_quad / eta_norm2;
    rep.coverage_ok = rep.relative_error <= kCoverageBound;
    return rep;
}

}  // namespace gframe
