#pragma once

#include "gframe/hilbert.hpp"

namespace gframe {

/// A unitary representation of a finite group: one unitary matrix per
/// group element.
struct UnitaryRep {
    const GroupTable* group = nullptr;
    int dim = 0;
    std::vector<Mat> matrices;

    /// The left regular representation on L2(G).
    static UnitaryRep regular(const GroupTable& g);

    /// Unitarity, homomorphism and identity residuals against tol.
    ValidationReport validate(double tol = 1e-10) const;
};

UnitaryRep make_rep(const GroupTable& g, int dim, std::vector<Mat> matrices);

/// The analysis operator of a window eta: the n x d matrix whose row s is
/// the functional psi -> (psi | U(s) eta).
struct AnalysisOperator {
    const UnitaryRep* rep = nullptr;
    Vec window;
    Mat matrix;

    /// g = L eta, the correlation function s -> (eta | U(s) eta).
    GroupFunction symbol() const;

    GroupFunction apply(const Vec& psi) const;
};

AnalysisOperator analysis_operator(const UnitaryRep& rep, const Vec& eta);

struct AdmissibilityReport {
    double gram_residual = 0.0;        // ||L^H W L - I||
    double isometry_residual = 0.0;    // worst basis-vector norm defect
    double resolution_residual = 0.0;  // direct-sum resolution of identity
    double invariance_residual = 0.0;  // [P_range, lambda(s)] worst norm
    double c_eta = 0.0;                // normalization constant; 1 when admissible
    int range_rank = 0;
    double max_residual = 0.0;
    bool admissible = false;
};

/// Four independently computed equivalent verdicts; the report is graded
/// (max residual), with the boolean cut at tol.
AdmissibilityReport check_admissible(const AnalysisOperator& op, double tol);

struct IdempotentCharReport {
    double involution_residual = 0.0;    // ||g - g^inv||
    double idempotency_residual = 0.0;   // ||g - g*g||
    double projection_residual = 0.0;    // ||pi(g) - P_range||
    double reproducing_residual = 0.0;   // worst over a basis of the range
    double annihilation_residual = 0.0;  // worst over a basis of the complement
    bool pass = false;
};

/// Right-sided characterization: g = L eta is a self-adjoint idempotent
/// whose right convolution operator is the projection onto the range of L.
IdempotentCharReport check_idempotent_characterization(const AnalysisOperator& op, double tol);

/// Left-sided dual: J g is a sharp self-adjoint idempotent whose left
/// convolution operator projects onto J(range of L).
IdempotentCharReport check_dual_characterization(const AnalysisOperator& op, double tol);

struct WindowComparisonReport {
    bool second_admissible = false;
    double factorization_residual = 0.0;  // ||g1 - xi^flat * xi||
    bool factorization_holds = false;
    double symmetry_residual = 0.0;  // ||xi - xi^flat||
    // Populated when the cross-correlation is symmetric and both windows
    // are admissible:
    double matrix_coefficient_residual = 0.0;  // ||g1 - g2||
    double range_gap = 0.0;                    // span gap of the two ranges
};

/// Tests the factorization criterion relating a second window xi to a
/// reference admissible window eta through xi_eta = L_eta xi.
WindowComparisonReport compare_two_windows(const AnalysisOperator& op1,
                                           const AnalysisOperator& op2, double tol);

}  // namespace gframe
