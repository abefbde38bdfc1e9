#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gframe/synthesis.hpp"

using namespace gframe;

namespace {

constexpr double kPi = 3.14159265358979323846;

GroupFunction random_function(const GroupTable& g, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    Vec v(g.order);
    for (int s = 0; s < g.order; ++s) v(s) = Complex(dist(rng), dist(rng));
    return GroupFunction{&g, std::move(v)};
}

// On Z_n the right convolution operator diagonalizes over the DFT basis,
// so the constructed admissible vector has DFT symbol equal to the
// support indicator of the seed's DFT.  Computed here from scratch as an
// independent oracle.
Vec dft_support_oracle(const Vec& seed) {
    const int n = static_cast<int>(seed.size());
    Vec hat = Vec::Zero(n);
    for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t)
            hat(k) += seed(t) * std::exp(Complex(0.0, -2.0 * kPi * k * t / n));
    Vec out = Vec::Zero(n);
    for (int t = 0; t < n; ++t)
        for (int k = 0; k < n; ++k)
            if (std::abs(hat(k)) > 1e-8)
                out(t) += std::exp(Complex(0.0, 2.0 * kPi * k * t / n)) / double(n);
    return out;
}

}  // namespace

TEST_CASE("spectral data of delta at the identity") {
    const GroupTable z4 = GroupTable::cyclic(4);
    const SpectralData sd = spectral_data(delta(z4, 0));
    CHECK(op_norm(sd.A - Mat::Identity(4, 4)) < 1e-14);
    CHECK(op_norm(sd.H - Mat::Identity(4, 4)) < 1e-14);
    CHECK(op_norm(sd.K - Mat::Identity(4, 4)) < 1e-14);
    CHECK(sd.zero_isolated);
    CHECK(sd.spectral_gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral data of scaled and rank-deficient symbols on Z_2") {
    const GroupTable z2 = GroupTable::cyclic(2);
    Vec two_delta(2), ones(2);
    two_delta << 2, 0;
    ones << 1, 1;

    const SpectralData scaled = spectral_data(GroupFunction{&z2, two_delta});
    CHECK(op_norm(scaled.H - 2.0 * Mat::Identity(2, 2)) < 1e-14);
    CHECK(scaled.spectral_gap == doctest::Approx(2.0).epsilon(1e-12));

    const SpectralData flat_sym = spectral_data(GroupFunction{&z2, ones});
    CHECK(flat_sym.eigvals(0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(flat_sym.eigvals(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(flat_sym.zero_isolated);
}

TEST_CASE("polar decomposition invariants on a random S_3 symbol") {
    const GroupTable s3 = GroupTable::symmetric3();
    std::mt19937_64 rng(31);
    const GroupFunction g = random_function(s3, rng);
    const SpectralData sd = spectral_data(g);
    const double scale = op_norm(sd.A);
    CHECK(op_norm(sd.A - sd.V * sd.H) < 1e-9 * scale);
    CHECK(op_norm(sd.A - sd.K * sd.V) < 1e-9 * scale);
    CHECK(min_hermitian_eig(sd.H) > -1e-12 * scale);
    CHECK(min_hermitian_eig(sd.K) > -1e-12 * scale);
    // H and K share their spectrum
    const SpectralData sd2 = spectral_data(g);
    CHECK((sd.eigvals - sd2.eigvals).norm() == 0.0);  // deterministic rerun
}

TEST_CASE("spectral window on the unit: phi(1) = 1 reproduces delta") {
    const GroupTable z4 = GroupTable::cyclic(4);
    const SpectralData sd = spectral_data(delta(z4, 0));
    const GroupFunction g_phi = spectral_window_idempotent(sd, 0.5, 2.0);
    CHECK((g_phi.values - delta(z4, 0).values).norm() < 1e-12);
}

TEST_CASE("spectral window picks out the constants on Z_2") {
    const GroupTable z2 = GroupTable::cyclic(2);
    Vec ones(2);
    ones << 1, 1;
    const SpectralData sd = spectral_data(GroupFunction{&z2, ones});
    const GroupFunction g_phi = spectral_window_idempotent(sd, 1.0, 3.0);
    CHECK(std::abs(g_phi.values(0) - 0.5) < 1e-12);
    CHECK(std::abs(g_phi.values(1) - 0.5) < 1e-12);
}

TEST_CASE("spectral windows select single eigenprojections on Z_3") {
    const GroupTable z3 = GroupTable::cyclic(3);
    // DFT values {2, 5, 5}: two distinct nonzero eigenvalues
    Vec g(3);
    g << 4, -1, -1;
    const SpectralData sd = spectral_data(GroupFunction{&z3, g});
    const GroupFunction low = spectral_window_idempotent(sd, 1.0, 3.0);
    const GroupFunction high = spectral_window_idempotent(sd, 4.0, 6.0);
    CHECK(op_norm(conv_operator(Side::right, low).matrix - sd.k_eigenprojection(1.0, 3.0)) <
          1e-10);
    CHECK(op_norm(conv_operator(Side::right, high).matrix - sd.k_eigenprojection(4.0, 6.0)) <
          1e-10);
    // disjoint windows convolve to zero and add up to the union
    CHECK(convolve(low, high).values.norm() < 1e-10);
    const GroupFunction both = spectral_window_idempotent(sd, 1.0, 6.0);
    CHECK((low.values + high.values - both.values).norm() < 1e-9);
}

TEST_CASE("spectral window preconditions") {
    const GroupTable z4 = GroupTable::cyclic(4);
    const SpectralData sd = spectral_data(delta(z4, 0));
    CHECK_THROWS_AS(spectral_window_idempotent(sd, 2.0, 3.0), PreconditionError);
    CHECK_THROWS_AS(spectral_window_idempotent(sd, 0.0, 2.0), PreconditionError);
    CHECK_THROWS_AS(spectral_data(GroupFunction{&z4, Vec::Zero(4)}), PreconditionError);
}

TEST_CASE("construction from scaled deltas") {
    const GroupTable z2 = GroupTable::cyclic(2);
    Vec two_delta(2), ones(2);
    two_delta << 2, 0;
    ones << 1, 1;

    ConstructionResult res = construct_admissible(GroupFunction{&z2, two_delta}, 1e-10);
    CHECK(res.report.pass);
    CHECK((res.g_adm.values - delta(z2, 0).values).norm() < 1e-12);
    CHECK(res.report.h0_dim == 2);

    res = construct_admissible(GroupFunction{&z2, ones}, 1e-10);
    CHECK(res.report.pass);
    CHECK(res.report.h0_dim == 1);
    CHECK(std::abs(res.g_adm.values(0) - 0.5) < 1e-12);
    CHECK(std::abs(res.g_adm.values(1) - 0.5) < 1e-12);
}

TEST_CASE("construction matches the DFT support oracle on Z_8") {
    const GroupTable z8 = GroupTable::cyclic(8);
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const GroupFunction g = random_function(z8, rng);
        const ConstructionResult res = construct_admissible(g, 1e-8);
        CHECK(res.report.pass);
        CHECK((res.g_adm.values - dft_support_oracle(g.values)).norm() < 1e-8);
    }
}

TEST_CASE("construction with a punctured spectrum still matches the oracle") {
    const GroupTable z8 = GroupTable::cyclic(8);
    // seed with DFT support {0, 2, 5}: build it from the inverse transform
    Vec hat = Vec::Zero(8);
    hat(0) = 1.5;
    hat(2) = Complex(0.0, 2.0);
    hat(5) = -0.75;
    Vec seed = Vec::Zero(8);
    for (int t = 0; t < 8; ++t)
        for (int k = 0; k < 8; ++k)
            seed(t) += hat(k) * std::exp(Complex(0.0, 2.0 * kPi * k * t / 8.0)) / 8.0;
    const ConstructionResult res = construct_admissible(GroupFunction{&z8, seed}, 1e-8);
    CHECK(res.report.pass);
    CHECK(res.report.h0_dim == 3);
    CHECK((res.g_adm.values - dft_support_oracle(seed)).norm() < 1e-8);
}

TEST_CASE("construction is scale invariant") {
    const GroupTable z8 = GroupTable::cyclic(8);
    std::mt19937_64 rng(33);
    const GroupFunction g = random_function(z8, rng);
    GroupFunction scaled = g;
    scaled.values *= 17.0;
    const ConstructionResult a = construct_admissible(g, 1e-8);
    const ConstructionResult b = construct_admissible(scaled, 1e-8);
    CHECK((a.g_adm.values - b.g_adm.values).norm() < 1e-10);
}

TEST_CASE("construction refuses a spectrum accumulating at zero") {
    const GroupTable z8 = GroupTable::cyclic(8);
    Vec hat = Vec::Ones(8);
    hat(7) = 1e-9;
    Vec seed = Vec::Zero(8);
    for (int t = 0; t < 8; ++t)
        for (int k = 0; k < 8; ++k)
            seed(t) += hat(k) * std::exp(Complex(0.0, 2.0 * kPi * k * t / 8.0)) / 8.0;
    CHECK_THROWS_AS(construct_admissible(GroupFunction{&z8, seed}, 1e-8),
                    PreconditionError);
}

TEST_CASE("idempotent from an invariant projection") {
    const GroupTable z4 = GroupTable::cyclic(4);
    const InvariantIdempotent full =
        idempotent_from_invariant_subspace(z4, Mat::Identity(4, 4), 1e-10);
    CHECK((full.e.values - delta(z4, 0).values).norm() < 1e-14);

    const Mat constants = Mat::Constant(4, 4, 0.25);
    const InvariantIdempotent uniform =
        idempotent_from_invariant_subspace(z4, constants, 1e-10);
    CHECK((uniform.e.values - Vec::Constant(4, 0.25)).norm() < 1e-14);
    CHECK(uniform.projection_residual < 1e-12);
    CHECK(uniform.certificate.projection);
}

TEST_CASE("isotypic projection of the two-dimensional S_3 block") {
    const GroupTable s3 = GroupTable::symmetric3();
    // central projection from the character (2, 0, 0, 0, -1, -1)
    const double chi[6] = {2, 0, 0, 0, -1, -1};
    Mat p = Mat::Zero(6, 6);
    for (int s = 0; s < 6; ++s) p += (2.0 / 6.0) * chi[s3.inv(s)] * lambda_matrix(s3, s);
    const InvariantIdempotent iso = idempotent_from_invariant_subspace(s3, p, 1e-10);
    CHECK(iso.projection_residual < 1e-10);
    CHECK(iso.certificate.selfadjoint_idempotent);
    // roundtrip through the convolution operator
    const Mat back = conv_operator(Side::right, iso.e).matrix;
    const InvariantIdempotent again = idempotent_from_invariant_subspace(s3, back, 1e-10);
    CHECK((again.e.values - iso.e.values).norm() < 1e-10);
}

TEST_CASE("non-invariant or non-projection inputs are rejected") {
    const GroupTable s3 = GroupTable::symmetric3();
    Mat not_proj = Mat::Identity(6, 6);
    not_proj(0, 0) = 0.5;
    CHECK_THROWS_AS(idempotent_from_invariant_subspace(s3, not_proj, 1e-10),
                    PreconditionError);
    Mat not_invariant = Mat::Zero(6, 6);
    not_invariant(0, 0) = 1.0;
    CHECK_THROWS_AS(idempotent_from_invariant_subspace(s3, not_invariant, 1e-10),
                    PreconditionError);
}

TEST_CASE("unique idempotent in the constants of Z_4") {
    const GroupTable z4 = GroupTable::cyclic(4);
    const Mat q = Mat::Constant(4, 1, 0.5);
    const UniqueIdempotent u = irreducible_unique_idempotent(z4, q, 1e-8);
    CHECK((u.e.values - Vec::Constant(4, 0.25)).norm() < 1e-10);
    CHECK(u.agreement_residual < 1e-8);
}

TEST_CASE("unique idempotent in an irreducible S_3 subspace") {
    const GroupTable s3 = GroupTable::symmetric3();
    // 2-dim irrep: permutation action restricted to the plane sum x_i = 0
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                             {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    Eigen::Matrix<double, 3, 2> basis;
    basis << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),  //
        -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),      //
        0.0, -2.0 / std::sqrt(6.0);
    Vec eta(2);
    eta << std::sqrt(1.0 / 3.0), 0.0;
    Vec g(6);
    for (int s = 0; s < 6; ++s) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
        for (int i = 0; i < 3; ++i) m(perms[s][i], i) = 1.0;
        const Eigen::Matrix2d u2 = basis.transpose() * m * basis;
        g(s) = (eta.adjoint() * u2.cast<Complex>() * eta)(0);
    }

    // H_0 = left translates of this matrix coefficient: 2-dim, invariant,
    // irreducible
    Mat translates(6, 6);
    for (int s = 0; s < 6; ++s) translates.col(s) = lambda_matrix(s3, s) * g;
    const Mat q = orthonormal_range(translates);
    CHECK(q.cols() == 2);
    CHECK(restricted_commutant_dimension(s3, q) == 1);

    const UniqueIdempotent u = irreducible_unique_idempotent(s3, q, 1e-8);
    CHECK(u.agreement_residual < 1e-8);
    // the unique idempotent is the matrix coefficient itself
    CHECK((u.e.values - g).norm() < 1e-8);
    CHECK(is_selfadjoint_idempotent(Side::right, u.e, 1e-8).selfadjoint_idempotent);
}

TEST_CASE("reducible subspaces are refused with the commutant dimension") {
    const GroupTable z2 = GroupTable::cyclic(2);
    CHECK(restricted_commutant_dimension(z2, Mat::Identity(2, 2)) == 2);
    CHECK_THROWS_WITH_AS(irreducible_unique_idempotent(z2, Mat::Identity(2, 2), 1e-8),
                         "restriction is not irreducible: commutant dimension 2",
                         PreconditionError);
}
