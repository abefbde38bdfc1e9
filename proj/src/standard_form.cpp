#include "gframe/standard_form.hpp"

#include <cmath>
#include <random>

namespace gframe {

namespace {

Vec vec_of(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat vectorized(const std::vector<Mat>& mats) {
    const Eigen::Index len = mats.empty() ? 0 : mats.front().size();
    Mat out(len, static_cast<Eigen::Index>(mats.size()));
    for (std::size_t j = 0; j < mats.size(); ++j) out.col(j) = vec_of(mats[j]);
    return out;
}

std::vector<Mat> unvectorized(const Mat& cols, int n) {
    std::vector<Mat> out;
    out.reserve(cols.cols());
    for (Eigen::Index j = 0; j < cols.cols(); ++j)
        out.push_back(Eigen::Map<const Mat>(cols.col(j).data(), n, n));
    return out;
}

Vec random_complex(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
    return v;
}

}  // namespace

AlgebraBasis group_algebra(const GroupTable& g, Side side) {
    AlgebraBasis a;
    a.ambient_dim = g.order;
    a.kind = side == Side::left ? AlgebraKind::left_group : AlgebraKind::right_group;
    a.basis.reserve(g.order);
    for (int s = 0; s < g.order; ++s) a.basis.push_back(regular_rep(g, side, s));
    return a;
}

double algebra_closure_residual(const AlgebraBasis& a) {
    const Mat q = orthonormal_range(vectorized(a.basis));
    double worst = 0.0;
    auto distance = [&](const Mat& m) {
        const Vec v = vec_of(m);
        return (v - q * (q.adjoint() * v)).norm() / std::max(1.0, v.norm());
    };
    for (const Mat& b : a.basis) worst = std::max(worst, distance(b.adjoint()));
    for (const Mat& b : a.basis)
        for (const Mat& c : a.basis) worst = std::max(worst, distance(b * c));
    return worst;
}

double basis_condition(const AlgebraBasis& a) {
    const int k = a.dim();
    Mat gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram(i, j) = (a.basis[j].adjoint() * a.basis[i]).trace();
    Eigen::JacobiSVD<Mat> svd(gram);
    const auto& sv = svd.singularValues();
    return sv(0) / sv(sv.size() - 1);
}

AlgebraBasis commutant(const AlgebraBasis& a) {
    const int n = a.ambient_dim;
    Mat stacked(static_cast<Eigen::Index>(a.dim()) * n * n, n * n);
    for (int m = 0; m < a.dim(); ++m) {
        const Mat& b = a.basis[m];
        // vec(B X - X B) = (I (x) B - B^T (x) I) vec(X), column-major.
        Mat block = Mat::Zero(n * n, n * n);
        for (int i = 0; i < n; ++i) block.block(i * n, i * n, n, n) += b;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) block(j * n + k, i * n + k) -= b(i, j);
        stacked.block(static_cast<Eigen::Index>(m) * n * n, 0, n * n, n * n) = block;
    }
    AlgebraBasis out;
    out.ambient_dim = n;
    out.kind = AlgebraKind::commutant;
    out.basis = unvectorized(nullspace(stacked), n);
    return out;
}

AlgebraBasis generated_algebra(const AlgebraBasis& a) {
    const int n = a.ambient_dim;
    Mat span = orthonormal_range(vectorized(a.basis));
    for (;;) {
        std::vector<Mat> current = unvectorized(span, n);
        std::vector<Mat> extended = current;
        for (const Mat& b : current) extended.push_back(b.adjoint());
        for (const Mat& b : current)
            for (const Mat& c : current) extended.push_back(b * c);
        Mat next = orthonormal_range(vectorized(extended));
        if (next.cols() == span.cols()) break;
        span = std::move(next);
    }
    AlgebraBasis out;
    out.ambient_dim = n;
    out.kind = AlgebraKind::generated;
    out.basis = unvectorized(span, n);
    return out;
}

AlgebraBasis center_algebra(const GroupTable& g) {
    const int n = g.order;
    // X = sum a_s lambda(s) = sum b_t rho(t): joint solve on the
    // coefficient vector (a; b).
    Mat joint(n * n, 2 * n);
    for (int s = 0; s < n; ++s) {
        joint.col(s) = vec_of(lambda_matrix(g, s));
        joint.col(n + s) = -vec_of(rho_matrix(g, s));
    }
    const Mat null_coeffs = nullspace(joint);
    std::vector<Mat> members;
    for (Eigen::Index j = 0; j < null_coeffs.cols(); ++j) {
        Mat x = Mat::Zero(n, n);
        for (int s = 0; s < n; ++s) x += null_coeffs(s, j) * lambda_matrix(g, s);
        members.push_back(std::move(x));
    }
    AlgebraBasis out;
    out.ambient_dim = n;
    out.kind = AlgebraKind::center;
    out.basis = unvectorized(orthonormal_range(vectorized(members)), n);
    return out;
}

double algebra_span_gap(const AlgebraBasis& a, const AlgebraBasis& b) {
    return span_gap(orthonormal_range(vectorized(a.basis)),
                    orthonormal_range(vectorized(b.basis)));
}

CentralVectorResult central_vector(const AnalysisOperator& op, double tol) {
    const AdmissibilityReport adm = check_admissible(op, tol);
    if (!adm.admissible) throw PreconditionError("window is not admissible");
    const GroupTable& G = *op.rep->group;
    const int n = G.order;
    const ModularPair mp = modular_pair(G);

    CentralVectorResult out;
    CentralSubspace& cs = out.subspace;
    cs.group = &G;
    cs.window_symbol = op.symbol();
    cs.vector = GroupFunction{&G, mp.delta_power(-0.25) * cs.window_symbol.values};

    const GroupFunction jg{&G, mp.conjugation.apply(cs.window_symbol.values)};
    out.report.twist_residual =
        (cs.vector.values - mp.delta_power(0.25) * jg.values).norm();
    out.report.j_fixed_residual =
        (cs.vector.values - mp.conjugation.apply(cs.vector.values)).norm();

    Mat left_translates(n, n), right_translates(n, n);
    for (int s = 0; s < n; ++s) {
        left_translates.col(s) = lambda_matrix(G, s) * cs.vector.values;
        right_translates.col(s) = rho_matrix(G, s) * cs.vector.values;
    }
    cs.basis = orthonormal_range(left_translates);
    cs.projection = cs.basis * cs.basis.adjoint();
    out.report.left_right_gap =
        span_gap(cs.basis, orthonormal_range(right_translates));

    double centrality = 0.0;
    for (int s = 0; s < n; ++s) {
        const Mat lam = lambda_matrix(G, s);
        const Mat rho = rho_matrix(G, s);
        centrality = std::max(centrality, op_norm(cs.projection * lam - lam * cs.projection));
        centrality = std::max(centrality, op_norm(cs.projection * rho - rho * cs.projection));
    }
    out.report.centrality_residual = centrality;

    out.report.cone = cone_membership(cs.vector, tol);
    const bool symbol_flat_cone = cone_membership(cs.window_symbol, tol).in_p_flat;
    const bool dual_sharp_cone = cone_membership(jg, tol).in_p_sharp;
    out.report.pass = out.report.twist_residual <= tol &&
                      out.report.j_fixed_residual <= tol &&
                      out.report.left_right_gap <= tol &&
                      out.report.centrality_residual <= tol && out.report.cone.in_p &&
                      symbol_flat_cone && dual_sharp_cone;
    return out;
}

CyclicSeparatingReport certify_cyclic_separating(const CentralSubspace& cs, double tol) {
    const GroupTable& G = *cs.group;
    const int n = G.order;
    const int d = static_cast<int>(cs.basis.cols());
    Mat left(d, n), right(d, n);
    for (int s = 0; s < n; ++s) {
        left.col(s) = cs.basis.adjoint() * (lambda_matrix(G, s) * cs.vector.values);
        right.col(s) = cs.basis.adjoint() * (rho_matrix(G, s) * cs.vector.values);
    }
    auto margin = [&](const Mat& m) {
        Eigen::JacobiSVD<Mat> svd(m);
        return svd.singularValues()(d - 1);
    };
    CyclicSeparatingReport out;
    out.cyclic_margin = margin(left);
    out.separating_margin = margin(right);
    out.cyclic = out.cyclic_margin > tol;
    out.separating = out.separating_margin > tol;
    return out;
}

ReducedIdentityReport reduced_identity_check(const CentralSubspace& cs, double tol) {
    const Mat m = conv_operator(Side::right, cs.vector).matrix;
    const int d = static_cast<int>(cs.basis.cols());
    ReducedIdentityReport out;
    out.restriction_residual =
        op_norm(cs.basis.adjoint() * m * cs.basis - Mat::Identity(d, d));

    const Vec fv = flat(cs.vector).values;
    out.flat_in_subspace =
        (fv - cs.projection * fv).norm() <= tol * std::max(1.0, fv.norm());
    if (out.flat_in_subspace) out.global_residual = op_norm(m - cs.projection);
    out.pass = out.restriction_residual <= tol &&
               (!out.flat_in_subspace || out.global_residual <= tol);
    return out;
}

StandardFormReport standard_form_axioms(const CentralSubspace& cs, double tol, int samples,
                                        std::uint64_t seed,
                                        const AntilinearMap* conjugation) {
    const GroupTable& G = *cs.group;
    const int n = G.order;
    const int d = static_cast<int>(cs.basis.cols());
    const ModularPair mp = modular_pair(G);
    const AntilinearMap& j = conjugation ? *conjugation : mp.conjugation;
    const Mat r = j.linear_part();

    StandardFormReport out;
    out.j_commutes_residual = op_norm(r * cs.projection.conjugate() - cs.projection * r);
    out.j_squared_residual = op_norm((r * r.conjugate() - Mat::Identity(n, n)) * cs.basis);

    // J L J vs R as reduced operator families.
    std::vector<Mat> jlj, rho_red;
    for (int s = 0; s < n; ++s) {
        jlj.push_back(cs.basis.adjoint() * j.sandwich(lambda_matrix(G, s)) * cs.basis);
        rho_red.push_back(cs.basis.adjoint() * rho_matrix(G, s) * cs.basis);
    }
    out.jlj_span_gap =
        span_gap(orthonormal_range(vectorized(jlj)), orthonormal_range(vectorized(rho_red)));

    std::mt19937_64 rng(seed);
    const AlgebraBasis center = center_algebra(G);
    double central = 0.0;
    auto central_residual = [&](const Mat& a) {
        return op_norm(j.sandwich(a) - a.adjoint()) / std::max(1.0, op_norm(a));
    };
    for (const Mat& a : center.basis) central = std::max(central, central_residual(a));
    for (int i = 0; i < 5; ++i) {
        Mat a = Mat::Zero(n, n);
        const Vec c = random_complex(center.dim(), rng);
        for (int m = 0; m < center.dim(); ++m) a += c(m) * center.basis[m];
        central = std::max(central, central_residual(a));
    }
    out.central_adjoint_residual = central;

    // Sampled cone elements of the reduced cone: Delta^{1/4}(h * flat(h))
    // for h in the subspace.
    const Mat quarter = mp.delta_power(0.25);
    out.cone_samples = samples;
    double j_fixed = 0.0;
    double worst_min_eig = 0.0;
    bool stable = true;
    bool first = true;
    for (int i = 0; i < samples; ++i) {
        const GroupFunction h{&G, cs.basis * random_complex(d, rng)};
        const Vec f = quarter * convolve(h, flat(h)).values;
        if (f.norm() == 0.0) continue;
        j_fixed = std::max(j_fixed, (j.apply(f) - f).norm() / f.norm());

        Mat a = Mat::Zero(n, n);
        const Vec c = random_complex(n, rng);
        for (int s = 0; s < n; ++s) a += c(s) * lambda_matrix(G, s);
        const Vec g = a * (j.linear_part() * (a * (j.linear_part() * f.conjugate())).conjugate());
        const ConeReport cr = cone_membership(GroupFunction{&G, g}, tol);
        stable = stable && cr.in_p;
        if (first || cr.min_eig_twisted < worst_min_eig) worst_min_eig = cr.min_eig_twisted;
        first = false;
    }
    out.cone_j_fixed_residual = j_fixed;
    out.cone_stability_min_eig = worst_min_eig;

    out.pass = out.j_commutes_residual <= tol && out.j_squared_residual <= tol &&
               out.jlj_span_gap <= tol && out.central_adjoint_residual <= tol &&
               out.cone_j_fixed_residual <= tol && stable;
    return out;
}

OrthogonalityReport orthogonality_relations(const CentralSubspace& cs1,
                                            const CentralSubspace& cs2, double tol,
                                            int samples, std::uint64_t seed) {
    if (!cs1.group->same_as(*cs2.group))
        throw PreconditionError("central subspaces live over different groups");
    const GroupTable& G = *cs1.group;
    const ModularPair mp = modular_pair(G);
    const Mat quarter = mp.delta_power(0.25);

    OrthogonalityReport out;
    out.vector_pairing = std::abs(inner_product(cs1.vector, cs2.vector)) /
                         (norm(cs1.vector) * norm(cs2.vector));

    std::mt19937_64 rng(seed);
    auto cone_sample = [&](const CentralSubspace& cs) {
        const GroupFunction h{&G, cs.basis * random_complex(static_cast<int>(cs.basis.cols()), rng)};
        return Vec(quarter * convolve(h, flat(h)).values);
    };
    std::vector<Vec> fam1, fam2;
    for (int i = 0; i < samples; ++i) {
        fam1.push_back(cone_sample(cs1));
        fam2.push_back(cone_sample(cs2));
    }
    double worst = 0.0;
    for (const Vec& f : fam1)
        for (const Vec& g : fam2) {
            const double denom = f.norm() * g.norm();
            if (denom > 0.0) worst = std::max(worst, std::abs(f.dot(g)) / denom);
        }
    out.max_cone_pairing = worst;
    out.max_cosine = max_principal_cosine(cs1.basis, cs2.basis);

    out.vectors_orthogonal = out.vector_pairing <= tol;
    out.cones_orthogonal = out.max_cone_pairing <= tol;
    out.subspaces_orthogonal = out.max_cosine <= tol;
    out.consistent = out.vectors_orthogonal == out.cones_orthogonal &&
                     out.cones_orthogonal == out.subspaces_orthogonal;
    return out;
}

}  // namespace gframe
