#include "gframe/representation.hpp"

#include <cmath>

namespace gframe {

UnitaryRep UnitaryRep::regular(const GroupTable& g) {
    UnitaryRep rep;
    rep.group = &g;
    rep.dim = g.order;
    rep.matrices.reserve(g.order);
    for (int s = 0; s < g.order; ++s) rep.matrices.push_back(lambda_matrix(g, s));
    return rep;
}

UnitaryRep make_rep(const GroupTable& g, int dim, std::vector<Mat> matrices) {
    if (dim <= 0) throw StructuralError("representation dimension must be positive");
    if (static_cast<int>(matrices.size()) != g.order)
        throw StructuralError("need one matrix per group element");
    for (const auto& m : matrices)
        if (m.rows() != dim || m.cols() != dim)
            throw StructuralError("representation matrix has wrong shape");
    return UnitaryRep{&g, dim, std::move(matrices)};
}

ValidationReport UnitaryRep::validate(double tol) const {
    ValidationReport report;
    const Mat id = Mat::Identity(dim, dim);
    for (int s = 0; s < group->order; ++s) {
        if (op_norm(matrices[s].adjoint() * matrices[s] - id) > tol)
            report.issues.push_back({IssueKind::inverse,
                                     {s},
                                     "matrix " + std::to_string(s) + " is not unitary"});
        for (int t = 0; t < group->order; ++t)
            if (op_norm(matrices[s] * matrices[t] - matrices[group->mul(s, t)]) > tol)
                report.issues.push_back({IssueKind::associativity,
                                         {s, t},
                                         "homomorphism fails at (" + std::to_string(s) + "," +
                                             std::to_string(t) + ")"});
    }
    if (op_norm(matrices[group->identity] - id) > tol)
        report.issues.push_back({IssueKind::identity, {}, "U(e) is not the identity"});
    return report;
}

AnalysisOperator analysis_operator(const UnitaryRep& rep, const Vec& eta) {
    if (eta.size() != rep.dim) throw StructuralError("window dimension mismatch");
    if (eta.norm() == 0.0) throw PreconditionError("window must be nonzero");
    const int n = rep.group->order;
    Mat m(n, rep.dim);
    for (int s = 0; s < n; ++s) m.row(s) = (rep.matrices[s] * eta).adjoint();
    return AnalysisOperator{&rep, eta, std::move(m)};
}

GroupFunction AnalysisOperator::symbol() const { return apply(window); }

GroupFunction AnalysisOperator::apply(const Vec& psi) const {
    return GroupFunction{rep->group, matrix * psi};
}

namespace {

Eigen::DiagonalMatrix<double, Eigen::Dynamic> haar_diag(const GroupTable& g) {
    RealVec w(g.order);
    for (int s = 0; s < g.order; ++s) w(s) = g.haar_weight[s];
    return w.asDiagonal();
}

}  // namespace

AdmissibilityReport check_admissible(const AnalysisOperator& op, double tol) {
    if (tol <= 0) throw PreconditionError("tolerance must be positive");
    const UnitaryRep& rep = *op.rep;
    const GroupTable& G = *rep.group;
    const int n = G.order;
    const int d = rep.dim;
    AdmissibilityReport rep_out;

    // (a) Gram identity through the weighted adjoint.
    const Mat gram = op.matrix.adjoint() * haar_diag(G) * op.matrix;
    rep_out.gram_residual = op_norm(gram - Mat::Identity(d, d));

    // (b) isometry on the canonical basis of the representation space.
    double iso = 0.0;
    for (int i = 0; i < d; ++i) {
        double nrm2 = 0.0;
        for (int s = 0; s < n; ++s) nrm2 += G.haar_weight[s] * std::norm(op.matrix(s, i));
        iso = std::max(iso, std::abs(std::sqrt(nrm2) - 1.0));
    }
    rep_out.isometry_residual = iso;

    // (c) resolution of identity on all basis pairs, direct summation.
    double res = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (int s = 0; s < n; ++s) {
                const Complex ci = op.matrix(s, i);        // (e_i | U(s) eta)
                const Complex cj = std::conj(op.matrix(s, j));  // (U(s) eta | e_j)
                acc += G.haar_weight[s] * ci * cj;
            }
            res = std::max(res, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    rep_out.resolution_residual = res;

    // (d) the range is invariant under the left regular representation.
    const Mat p = range_projection(op.matrix);
    double invres = 0.0;
    for (int s = 0; s < n; ++s) {
        const Mat lam = lambda_matrix(G, s);
        invres = std::max(invres, op_norm(lam * p - p * lam));
    }
    rep_out.invariance_residual = invres;

    const GroupFunction g_eta = op.symbol();
    const double eta_norm2 = op.window.squaredNorm();
    double coeff2 = 0.0;
    for (int s = 0; s < n; ++s) coeff2 += G.haar_weight[s] * std::norm(g_eta.values(s));
    rep_out.c_eta = coeff2 / eta_norm2;

    rep_out.range_rank = numerical_rank(op.matrix);
    rep_out.max_residual =
        std::max({rep_out.gram_residual, rep_out.isometry_residual,
                  rep_out.resolution_residual, rep_out.invariance_residual});
    rep_out.admissible = rep_out.max_residual <= tol;
    return rep_out;
}

IdempotentCharReport check_idempotent_characterization(const AnalysisOperator& op, double tol) {
    IdempotentCharReport out;
    const GroupFunction g = op.symbol();
    out.involution_residual = (g.values - flat(g).values).norm();
    out.idempotency_residual = (g.values - convolve(g, g).values).norm();

    const Mat q = orthonormal_range(op.matrix);
    const Mat p = q * q.adjoint();
    const Mat pr = conv_operator(Side::right, g).matrix;
    out.projection_residual = op_norm(pr - p);

    // Reproducing identity f = f * g^flat on the range, annihilation on
    // the complement.
    const GroupFunction gf = flat(g);
    const GroupTable& G = *g.group;
    const int n = G.order;
    double reproduce = 0.0;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const GroupFunction f{&G, q.col(j)};
        reproduce = std::max(reproduce, (f.values - convolve(f, gf).values).norm());
    }
    out.reproducing_residual = reproduce;

    const Mat comp = orthonormal_range(Mat::Identity(n, n) - p);
    double annihilate = 0.0;
    for (Eigen::Index j = 0; j < comp.cols(); ++j) {
        const GroupFunction f{&G, comp.col(j)};
        annihilate = std::max(annihilate, convolve(f, gf).values.norm());
    }
    out.annihilation_residual = annihilate;

    out.pass = out.involution_residual <= tol && out.idempotency_residual <= tol &&
               out.projection_residual <= tol && out.reproducing_residual <= tol &&
               out.annihilation_residual <= tol;
    return out;
}

IdempotentCharReport check_dual_characterization(const AnalysisOperator& op, double tol) {
    IdempotentCharReport out;
    const GroupTable& G = *op.rep->group;
    const ModularPair mp = modular_pair(G);
    const GroupFunction g = op.symbol();
    const GroupFunction jg{&G, mp.conjugation.apply(g.values)};

    out.involution_residual = (jg.values - sharp(jg).values).norm();
    out.idempotency_residual = (jg.values - convolve(jg, jg).values).norm();

    const Mat q = orthonormal_range(op.matrix);
    Mat jq(q.rows(), q.cols());
    for (Eigen::Index j = 0; j < q.cols(); ++j) jq.col(j) = mp.conjugation.apply(q.col(j));
    const Mat p = jq * jq.adjoint();
    const Mat pl = conv_operator(Side::left, jg).matrix;
    out.projection_residual = op_norm(pl - p);

    // Dual reproducing identity Jf = Jg * Jf on the range of the analysis
    // operator.
    double reproduce = 0.0;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const GroupFunction jf{&G, mp.conjugation.apply(q.col(j))};
        reproduce = std::max(reproduce, (jf.values - convolve(jg, jf).values).norm());
    }
    out.reproducing_residual = reproduce;

    const int n = G.order;
    const Mat comp = orthonormal_range(Mat::Identity(n, n) - p);
    double annihilate = 0.0;
    for (Eigen::Index j = 0; j < comp.cols(); ++j) {
        const GroupFunction f{&G, comp.col(j)};
        annihilate = std::max(annihilate, convolve(jg, f).values.norm());
    }
    out.annihilation_residual = annihilate;

    out.pass = out.involution_residual <= tol && out.idempotency_residual <= tol &&
               out.projection_residual <= tol && out.reproducing_residual <= tol &&
               out.annihilation_residual <= tol;
    return out;
}

WindowComparisonReport compare_two_windows(const AnalysisOperator& op1,
                                           const AnalysisOperator& op2, double tol) {
    if (op1.rep != op2.rep && !(op1.rep->group->same_as(*op2.rep->group) &&
                                op1.rep->dim == op2.rep->dim))
        throw PreconditionError("windows must be analyzed through the same representation");
    const AdmissibilityReport ref = check_admissible(op1, tol);
    if (!ref.admissible)
        throw PreconditionError("reference window is not admissible");

    WindowComparisonReport out;
    const GroupFunction g1 = op1.symbol();
    const GroupFunction xi = op1.apply(op2.window);  // L_eta xi
    const GroupFunction fact = convolve(flat(xi), xi);
    out.factorization_residual = (g1.values - fact.values).norm();
    out.factorization_holds = out.factorization_residual <= tol;
    out.second_admissible = check_admissible(op2, tol).admissible;
    out.symmetry_residual = (xi.values - flat(xi).values).norm();

    if (out.second_admissible && out.symmetry_residual <= tol) {
        const GroupFunction g2 = op2.symbol();
        out.matrix_coefficient_residual = (g1.values - g2.values).norm();
        out.range_gap = span_gap(orthonormal_range(op1.matrix), orthonormal_range(op2.matrix));
    }
    return out;
}

}  // namespace gframe
