#include "gframe/hilbert.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace gframe {

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g);
    const GroupTable& G = *f.group;
    const int n = G.order;
    Vec out = Vec::Zero(n);
    for (int s = 0; s < n; ++s) {
        Complex acc = 0.0;
        for (int t = 0; t < n; ++t)
            acc += G.haar_weight[t] * f.values(t) * g.values(G.mul(G.inv(t), s));
        out(s) = acc;
    }
    return GroupFunction{&G, std::move(out)};
}

GroupFunction flat(const GroupFunction& f) {
    const GroupTable& G = *f.group;
    Vec out(G.order);
    for (int s = 0; s < G.order; ++s) out(s) = std::conj(f.values(G.inv(s)));
    return GroupFunction{&G, std::move(out)};
}

GroupFunction sharp(const GroupFunction& f) {
    const GroupTable& G = *f.group;
    Vec out(G.order);
    for (int s = 0; s < G.order; ++s)
        out(s) = G.modular[G.inv(s)] * std::conj(f.values(G.inv(s)));
    return GroupFunction{&G, std::move(out)};
}

Mat lambda_matrix(const GroupTable& g, int s) {
    if (s < 0 || s >= g.order) throw StructuralError("element index out of range");
    Mat m = Mat::Zero(g.order, g.order);
    for (int t = 0; t < g.order; ++t) m(g.mul(s, t), t) = 1.0;  // lambda(s) d_t = d_{st}
    return m;
}

Mat rho_matrix(const GroupTable& g, int s) {
    if (s < 0 || s >= g.order) throw StructuralError("element index out of range");
    const double c = std::sqrt(g.modular[s]);
    Mat m = Mat::Zero(g.order, g.order);
    for (int t = 0; t < g.order; ++t) m(g.mul(t, g.inv(s)), t) = c;  // rho(s) d_t = c d_{t s^-1}
    return m;
}

Mat regular_rep(const GroupTable& g, Side side, int s) {
    return side == Side::left ? lambda_matrix(g, s) : rho_matrix(g, s);
}

ConvolutionOperator conv_operator(Side side, const GroupFunction& g) {
    const GroupTable& G = *g.group;
    const int n = G.order;
    Mat m(n, n);
    if (side == Side::right) {
        // column t is d_t * g
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s)
                m(s, t) = G.haar_weight[t] * g.values(G.mul(G.inv(t), s));
    } else {
        // column t is g * d_t
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s)
                m(s, t) = G.haar_weight[G.mul(s, G.inv(t))] * g.values(G.mul(s, G.inv(t)));
    }
    return ConvolutionOperator{side, g, m, op_norm(m)};
}

Vec AntilinearMap::apply(const Vec& x) const {
    const int n = static_cast<int>(perm.size());
    Vec out(n);
    for (int s = 0; s < n; ++s) out(s) = scale(s) * std::conj(x(perm[s]));
    return out;
}

Mat AntilinearMap::linear_part() const {
    const int n = static_cast<int>(perm.size());
    Mat r = Mat::Zero(n, n);
    for (int s = 0; s < n; ++s) r(s, perm[s]) = scale(s);
    return r;
}

Mat AntilinearMap::sandwich(const Mat& a) const {
    const Mat r = linear_part();
    return r * a.conjugate() * r.conjugate();
}

ModularPair modular_pair(const GroupTable& g) {
    const int n = g.order;
    ModularPair mp;
    mp.group = &g;
    mp.delta_diag = RealVec(n);
    for (int s = 0; s < n; ++s) mp.delta_diag(s) = g.modular[s];

    AntilinearMap J, S, F;
    J.perm = S.perm = F.perm = g.inverse;
    J.scale = RealVec(n);
    S.scale = RealVec(n);
    F.scale = RealVec(n);
    for (int s = 0; s < n; ++s) {
        J.scale(s) = 1.0 / std::sqrt(g.modular[s]);
        S.scale(s) = g.modular[g.inv(s)];
        F.scale(s) = 1.0;
    }
    mp.conjugation = std::move(J);
    mp.involution_sharp = std::move(S);
    mp.involution_flat = std::move(F);
    return mp;
}

Mat ModularPair::delta_power(double t) const {
    const int n = static_cast<int>(delta_diag.size());
    Mat m = Mat::Zero(n, n);
    for (int s = 0; s < n; ++s) m(s, s) = std::pow(delta_diag(s), t);
    return m;
}

IdempotentReport is_selfadjoint_idempotent(Side side, const GroupFunction& e, double tol) {
    if (tol <= 0) throw PreconditionError("tolerance must be positive");
    IdempotentReport rep;
    const GroupFunction inv = side == Side::right ? flat(e) : sharp(e);
    rep.involution_residual = (e.values - inv.values).norm();
    rep.idempotency_residual = (e.values - convolve(e, e).values).norm();
    rep.selfadjoint_idempotent =
        rep.involution_residual <= tol && rep.idempotency_residual <= tol;

    const Mat m = conv_operator(side, e).matrix;
    Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const Complex ev = es.eigenvalues()(i);
        worst = std::max(worst, std::min(std::abs(ev), std::abs(ev - 1.0)));
    }
    rep.projection_residual = worst;
    rep.projection = worst <= tol && (m - m.adjoint()).norm() <= tol;
    return rep;
}

ConeReport cone_membership(const GroupFunction& f, double tol) {
    if (tol <= 0) throw PreconditionError("tolerance must be positive");
    ConeReport rep;
    const Mat mr = conv_operator(Side::right, f).matrix;
    const Mat ml = conv_operator(Side::left, f).matrix;
    const double scale_r = std::max(1.0, op_norm(mr));
    const double scale_l = std::max(1.0, op_norm(ml));

    rep.hermiticity_residual = op_norm(mr - mr.adjoint());
    rep.min_eig_right = min_hermitian_eig(mr);
    rep.min_eig_left = min_hermitian_eig(ml);
    rep.in_p_flat = rep.min_eig_right >= -tol * scale_r &&
                    op_norm(mr - mr.adjoint()) <= tol * scale_r;
    rep.in_p_sharp = rep.min_eig_left >= -tol * scale_l &&
                     op_norm(ml - ml.adjoint()) <= tol * scale_l;

    const ModularPair mp = modular_pair(*f.group);
    GroupFunction twisted = f;
    twisted.values = mp.delta_power(0.25) * f.values;
    const Mat mt = conv_operator(Side::right, twisted).matrix;
    const double scale_t = std::max(1.0, op_norm(mt));
    rep.min_eig_twisted = min_hermitian_eig(mt);
    rep.in_p = rep.min_eig_twisted >= -tol * scale_t &&
               op_norm(mt - mt.adjoint()) <= tol * scale_t;
    return rep;
}

}  // namespace gframe
