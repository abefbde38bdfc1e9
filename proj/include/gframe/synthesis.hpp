#pragma once

#include <functional>

#include "gframe/representation.hpp"

namespace gframe {

/// Polar decomposition A = VH = KV of the right convolution operator of a
/// symbol g, with the eigendecompositions of both absolute values.
/// Eigenvalues ascend; eigenvectors carry the canonical phase, and the
/// columns of V are paired so that A = VH holds exactly.
struct SpectralData {
    GroupFunction symbol;
    Mat A;  // pi_r(g)
    Mat H;  // (A^H A)^{1/2}
    Mat K;  // (A A^H)^{1/2}
    Mat V;  // partial isometry
    RealVec eigvals;   // shared spectrum of H and K, ascending
    Mat eigvecs_h;     // columns: eigenvectors of H
    Mat eigvecs_k;     // columns: eigenvectors of K
    double gap_threshold = 0.0;   // 1e-6 * ||H||
    double numerical_zero = 0.0;  // 1e-12 * ||H||; below this = exact zero
    double spectral_gap = 0.0;    // smallest eigenvalue above numerical_zero
    bool zero_isolated = false;   // no eigenvalue strictly inside the band

    /// Eigendecomposition functional calculus of H; eigenvalues at or
    /// below numerical_zero are passed to phi as exact zeros.
    Mat apply_to_h(const std::function<double(double)>& phi) const;

    /// Sum of eigenprojections of K with eigenvalue in [lo, hi].
    Mat k_eigenprojection(double lo, double hi) const;

    /// Orthonormal basis of the range of A (eigenvectors of K with
    /// eigenvalue above numerical_zero).
    Mat range_basis() const;
};

SpectralData spectral_data(const GroupFunction& g);

/// g_phi = A phi(H) flat(g) with phi(t) = [t in alpha]/t^2, a self-adjoint
/// idempotent whose right convolution operator is the spectral projection
/// E_K(alpha).  The interval must meet the spectrum and stay away from 0.
GroupFunction spectral_window_idempotent(const SpectralData& sd, double lo, double hi,
                                         double tol = 1e-9);

struct ConstructionReport {
    int h0_dim = 0;                    // dim span{lambda(s) g}
    double membership_residual = 0.0;  // distance of g_adm from H_0
    double involution_residual = 0.0;
    double idempotency_residual = 0.0;
    double projection_residual = 0.0;  // ||pi_r(g_adm) - P_{H_0}||
    AdmissibilityReport admissibility;  // for lambda restricted to H_0
    bool pass = false;
};

struct ConstructionResult {
    GroupFunction g_adm;
    ConstructionReport report;
};

/// g_adm = A H^{-2} flat(g) (pseudo-inverse above the gap threshold),
/// admissible for the restriction of lambda to H_0 = span{lambda(s) g}.
/// Refuses when the spectrum accumulates at zero inside the gap band.
ConstructionResult construct_admissible(const GroupFunction& g, double tol);

struct InvariantIdempotent {
    GroupFunction e;
    double projection_residual = 0.0;  // ||pi_r(e) - P||
    IdempotentReport certificate;
};

/// e = P delta_e for a lambda-invariant orthogonal projection P; the
/// unique self-adjoint idempotent with pi_r(e) = P.
InvariantIdempotent idempotent_from_invariant_subspace(const GroupTable& g, const Mat& p,
                                                       double tol);

/// Dimension of the commutant of the restriction of lambda to the span of
/// the orthonormal columns q (1 iff the restriction is irreducible).
int restricted_commutant_dimension(const GroupTable& g, const Mat& q);

struct UniqueIdempotent {
    GroupFunction e;
    double agreement_residual = 0.0;  // two independent seeds, same answer
    ConstructionReport report;        // from the first seed
};

/// The unique self-adjoint idempotent in an irreducible lambda-invariant
/// subspace, certified by running the construction from two seeds.
UniqueIdempotent irreducible_unique_idempotent(const GroupTable& g, const Mat& h0_basis,
                                               double tol);

}  // namespace gframe
