#pragma once

#include <cstdint>

#include "gframe/representation.hpp"

namespace gframe {

enum class AlgebraKind { left_group, right_group, commutant, center, generated };

/// A *-algebra of n x n matrices given by a linearly independent spanning
/// set (as a vector space).
struct AlgebraBasis {
    int ambient_dim = 0;
    std::vector<Mat> basis;
    AlgebraKind kind = AlgebraKind::generated;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// span{lambda(s)} or span{rho(s)}; for a finite group these spans are
/// already closed under products and adjoints.
AlgebraBasis group_algebra(const GroupTable& g, Side side);

/// Worst distance of a product or adjoint of basis elements from the span
/// (Hilbert-Schmidt norm); 0 for a genuine algebra.
double algebra_closure_residual(const AlgebraBasis& a);

/// Condition number of the Gram matrix of the basis in the
/// Hilbert-Schmidt inner product.
double basis_condition(const AlgebraBasis& a);

/// {X : XB = BX for every basis element B}, solved as the null space of
/// the stacked commutation system; basis orthonormal in Hilbert-Schmidt.
AlgebraBasis commutant(const AlgebraBasis& a);

/// Closure of the span under products and adjoints (iterated until the
/// dimension stabilizes).
AlgebraBasis generated_algebra(const AlgebraBasis& a);

/// Intersection of the left and right group algebra spans: the center of
/// the group von Neumann algebra.
AlgebraBasis center_algebra(const GroupTable& g);

/// Span gap between two matrix families viewed as vectors (operator norm
/// of the projection difference in the vectorized picture).
double algebra_span_gap(const AlgebraBasis& a, const AlgebraBasis& b);

/// The central subspace attached to an admissible window: the vector
/// Delta^{-1/4} g_eta and the span of its left translates.
struct CentralSubspace {
    const GroupTable* group = nullptr;
    GroupFunction window_symbol;  // g_eta
    GroupFunction vector;         // Delta^{-1/4} g_eta
    Mat basis;                    // orthonormal basis of the span
    Mat projection;
};

struct CentralVectorReport {
    double twist_residual = 0.0;    // Delta^{-1/4} g vs Delta^{1/4} Jg
    double j_fixed_residual = 0.0;  // vector vs J(vector)
    double left_right_gap = 0.0;    // translate spans from the two sides
    double centrality_residual = 0.0;  // [P, lambda(s)] and [P, rho(s)]
    ConeReport cone;                   // of the window symbol
    bool pass = false;
};

struct CentralVectorResult {
    CentralSubspace subspace;
    CentralVectorReport report;
};

CentralVectorResult central_vector(const AnalysisOperator& op, double tol);

struct CyclicSeparatingReport {
    double cyclic_margin = 0.0;      // smallest needed singular value, left side
    double separating_margin = 0.0;  // same on the commutant (right) side
    bool cyclic = false;
    bool separating = false;
};

/// Cyclicity of the vector for the reduced left algebra, and separation
/// certified as cyclicity for the reduced right algebra.
CyclicSeparatingReport certify_cyclic_separating(const CentralSubspace& cs, double tol);

struct ReducedIdentityReport {
    double restriction_residual = 0.0;  // pi_r(vector) restricted, vs identity
    bool flat_in_subspace = false;
    double global_residual = 0.0;  // pi_r(vector) vs projection, when applicable
    bool pass = false;
};

ReducedIdentityReport reduced_identity_check(const CentralSubspace& cs, double tol);

struct StandardFormReport {
    double j_commutes_residual = 0.0;      // J vs the subspace projection
    double j_squared_residual = 0.0;       // J^2 = I on the subspace
    double jlj_span_gap = 0.0;             // J L J vs R, reduced
    double central_adjoint_residual = 0.0; // JAJ = A* for central A
    double cone_j_fixed_residual = 0.0;    // J fixes sampled cone elements
    double cone_stability_min_eig = 0.0;   // AJAJ keeps samples in the cone
    int cone_samples = 0;
    bool pass = false;
};

/// The standard-form axioms on the reduced space, with sampled checks for
/// the cone statements.  A replacement conjugation can be supplied to
/// exercise the negative direction.
StandardFormReport standard_form_axioms(const CentralSubspace& cs, double tol,
                                        int samples = 50, std::uint64_t seed = 1,
                                        const AntilinearMap* conjugation = nullptr);

struct OrthogonalityReport {
    double vector_pairing = 0.0;     // |(v1 | v2)| / (||v1|| ||v2||)
    double max_cone_pairing = 0.0;   // worst sampled cross pairing, normalized
    double max_cosine = 0.0;         // largest principal cosine of the subspaces
    bool vectors_orthogonal = false;
    bool cones_orthogonal = false;
    bool subspaces_orthogonal = false;
    bool consistent = false;  // the three verdicts agree
};

/// Vector, cone, and subspace orthogonality of two central subspaces; the
/// three verdicts are equivalent and the report checks that they agree.
OrthogonalityReport orthogonality_relations(const CentralSubspace& cs1,
                                            const CentralSubspace& cs2, double tol,
                                            int samples = 50, std::uint64_t seed = 1);

}  // namespace gframe
