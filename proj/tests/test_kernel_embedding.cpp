#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "harmonic/kernel_embedding.hpp"
#include "harmonic/report.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t m)
{
    std::normal_distribution<double> nd;
    Matrix a(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) a(i, j) = a(j, i) = nd(rng);
    return a;
}

DistanceConfig hyperbolic_sample(std::uint64_t seed, std::size_t n, std::size_t m, double radius)
{
    SeededSampler s(seed);
    return DistanceConfig::from_points(random_points(s, n, m, radius));
}

const Signature kLineC13{2, 1, 2};

} // namespace

TEST(Jacobi, AgreesWithEigen)
{
    std::mt19937_64 rng(3);
    for (std::size_t m : {1u, 2u, 5u, 12u, 30u}) {
        const Matrix a = random_symmetric(rng, m);
        Eigen::MatrixXd e(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) e(i, j) = a(i, j);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
        const auto dec = jacobi_eigen(a);
        ASSERT_EQ(dec.values.size(), m);
        for (std::size_t k = 0; k < m; ++k) {
            EXPECT_NEAR(dec.values[k], solver.eigenvalues()(static_cast<Eigen::Index>(k)), 1e-11 * a.max_abs());
        }
        const Matrix r = dec.reconstruct();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) EXPECT_NEAR(r(i, j), a(i, j), 1e-11 * a.max_abs());
    }
}

TEST(Jacobi, RejectsAsymmetricInput)
{
    Matrix a(2);
    a(0, 1) = 1.0;
    EXPECT_THROW(jacobi_eigen(a), std::invalid_argument);
}

TEST(GramF, LineExamples)
{
    const auto line = DistanceConfig::from_line(LineConfig::uniform(5, -2.0, 2.0));
    const auto a = gram_f(line, 1.0 / 3.0);
    EXPECT_EQ(a.signature, kLineC13);
    EXPECT_EQ(a.rank, 3);
    const auto b = gram_f(line, 0.0);
    EXPECT_EQ(b.signature, (Signature{1, 1, 3}));

    const auto one = gram_f(DistanceConfig::from_line(LineConfig({0.3})), 1.0 / 3.0);
    ASSERT_EQ(one.matrix.size(), 1u);
    EXPECT_DOUBLE_EQ(one.matrix(0, 0), 4.0 / 3.0);
    EXPECT_EQ(one.signature, (Signature{1, 0, 0}));
}

TEST(GramF, NegativeShiftFlipsConstantDirection)
{
    const auto line = DistanceConfig::from_line(LineConfig::uniform(6, -1.0, 2.0));
    EXPECT_EQ(gram_f(line, -0.5).signature, (Signature{1, 2, 3}));
}

TEST(GramPhi, HyperbolicSignatureAndUnitDiagonal)
{
    const auto g = gram_phi(hyperbolic_sample(42, 3, 12, 3.0));
    EXPECT_EQ(g.signature, (Signature{1, 3, 8}));
    for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(g.matrix(i, i), 1.0);
    EXPECT_TRUE(g.matrix.is_symmetric());

    // distinct points: cosh d > 1 off the diagonal
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j) EXPECT_GT(g.matrix(i, j), 1.0);
}

TEST(GramPhi, ClusteredPointsHaveRankOne)
{
    const auto g = gram_phi(hyperbolic_sample(5, 3, 10, 1e-6));
    EXPECT_EQ(g.rank, 1);
    EXPECT_EQ(g.signature, (Signature{1, 0, 9}));
}

TEST(RankSaturation, LineAndHyperbolic)
{
    auto line = [](std::size_t m) { return DistanceConfig::from_line(LineConfig::uniform(m, -2.0, 2.0)); };
    const std::vector<std::size_t> m1{2, 3, 4, 5, 6};
    std::vector<int> ranks;
    for (const auto& [m, r] : rank_saturation(line, 1.0 / 3.0, m1)) ranks.push_back(r);
    EXPECT_EQ(ranks, (std::vector<int>{2, 3, 3, 3, 3}));

    ranks.clear();
    const std::vector<std::size_t> m2{3, 4, 5};
    for (const auto& [m, r] : rank_saturation(line, 0.0, m2)) ranks.push_back(r);
    EXPECT_EQ(ranks, (std::vector<int>{2, 2, 2}));

    ranks.clear();
    auto hyp = [](std::size_t m) { return hyperbolic_sample(17, 3, m, 2.0); };
    const std::vector<std::size_t> m3{2, 4, 6, 8};
    for (const auto& [m, r] : rank_saturation(hyp, 0.0, m3)) ranks.push_back(r);
    EXPECT_EQ(ranks, (std::vector<int>{2, 4, 4, 4}));

    const std::vector<std::size_t> bad{3, 3};
    EXPECT_THROW(rank_saturation(line, 0.0, bad), std::invalid_argument);
}

TEST(NondegeneracyProbe, Examples)
{
    const auto line = DistanceConfig::from_line(LineConfig::uniform(8, -2.0, 2.0));
    EXPECT_TRUE(nondegeneracy_probe(gram_f(line, 1.0 / 3.0)));
    EXPECT_TRUE(nondegeneracy_probe(gram_f(line, 0.0)));
    EXPECT_TRUE(nondegeneracy_probe(gram_phi(hyperbolic_sample(42, 3, 12, 3.0))));
    EXPECT_FALSE(nondegeneracy_probe(analyze_symmetric(Matrix(4))));

    Matrix hyperbolic_plane(2);
    hyperbolic_plane(0, 1) = hyperbolic_plane(1, 0) = 1.0;
    EXPECT_TRUE(nondegeneracy_probe(analyze_symmetric(hyperbolic_plane)));
}

TEST(DistanceConfig, Validation)
{
    Matrix d(3);
    d(0, 1) = d(1, 0) = 1.0;
    d(1, 2) = d(2, 1) = 1.0;
    d(0, 2) = d(2, 0) = 2.0;
    EXPECT_NO_THROW(DistanceConfig{d});

    Matrix tri = d;
    tri(0, 2) = tri(2, 0) = 2.5;
    EXPECT_THROW(DistanceConfig{tri}, std::invalid_argument);

    Matrix asym = d;
    asym(0, 1) = 1.5;
    EXPECT_THROW(DistanceConfig{asym}, std::invalid_argument);

    Matrix diag = d;
    diag(1, 1) = 0.1;
    EXPECT_THROW(DistanceConfig{diag}, std::invalid_argument);

    Matrix neg = d;
    neg(0, 1) = neg(1, 0) = -1.0;
    EXPECT_THROW(DistanceConfig{neg}, std::invalid_argument);
}

TEST(VelocityGram, LineAndHyperbolicKernels)
{
    EXPECT_NEAR(velocity_gram_fd(line_kernel(0.0), 1e-3), -1.0, 1e-5);
    EXPECT_NEAR(velocity_gram_fd(line_kernel(1.0 / 3.0), 1e-3), -1.0, 1e-5);

    SeededSampler s(8);
    const auto g = random_geodesic(s, 3, 2.0);
    EXPECT_NEAR(velocity_gram_fd(geodesic_kernel(g, 0.0), 1e-3), -1.0, 1e-5);

    // second-order: halving h quarters the error
    const double e1 = std::abs(velocity_gram_fd(line_kernel(), 4e-3) + 1.0);
    const double e2 = std::abs(velocity_gram_fd(line_kernel(), 2e-3) + 1.0);
    EXPECT_NEAR(e1 / e2, 4.0, 0.1);

    EXPECT_THROW(velocity_gram_fd(line_kernel(), 1e-6), std::invalid_argument);
    EXPECT_THROW(velocity_gram_fd(line_kernel(), 0.1), std::invalid_argument);
}

TEST(ThirdDerivative, ProfilesSatisfyODE)
{
    SeededSampler s(21);
    const auto g = random_geodesic(s, 3, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto q = random_points(s, 3, 1, 2.0).front();
        EXPECT_LT(third_derivative_check(g, q, 0.0, 5e-3), 1e-4);
        EXPECT_LT(third_derivative_check(g, q, 0.7, 5e-3), 1e-4);
    }
    const auto q = random_points(s, 3, 1, 2.0).front();
    EXPECT_THROW(third_derivative_check(g, q, 0.0, 1e-5), std::invalid_argument);
}

TEST(ThirdDerivative, DetectsAWrongProfile)
{
    // cosh(2t) does not satisfy u''' = u': the stencils must see it.
    const double h = 5e-3;
    auto u = [](double t) { return std::cosh(2.0 * t); };
    std::array<double, 7> v{};
    for (int k = -3; k <= 3; ++k) v[static_cast<std::size_t>(k + 3)] = u(0.5 + k * h);
    const double d1 = (-v[0] + 9.0 * v[1] - 45.0 * v[2] + 45.0 * v[4] - 9.0 * v[5] + v[6]) / (60.0 * h);
    const double d3 = (v[0] - 8.0 * v[1] + 13.0 * v[2] - 13.0 * v[4] + 8.0 * v[5] - v[6]) / (8.0 * h * h * h);
    EXPECT_NEAR(d1, 2.0 * std::sinh(1.0), 1e-9);
    EXPECT_NEAR(d3, 8.0 * std::sinh(1.0), 1e-5);
    EXPECT_GT(std::abs(d3 - d1), 1.0);
}

TEST(Lemma2, DeterminantMatchesOracles)
{
    const auto sys = lemma2_system({-1.0, 0.0, 1.0});
    EXPECT_NEAR(sys.determinant, -1.2764580206, 1e-10);
    EXPECT_NEAR(sys.determinant, lemma2_symmetric_determinant(1.0), 1e-12);
    EXPECT_NEAR(sys.determinant, oracle::leibniz_det3(sys.matrix), 1e-12);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::array<double, 3> s{u(rng), u(rng), u(rng)};
        const auto r = lemma2_system(s);
        std::vector<std::vector<double>> rows(3, std::vector<double>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) rows[i][j] = r.matrix[i][j];
        const double scale = std::max(1.0, std::abs(oracle::leibniz_det3(r.matrix)));
        EXPECT_NEAR(r.determinant, oracle::leibniz_det3(r.matrix), 1e-11 * scale * 100);
        EXPECT_NEAR(r.determinant, oracle::elimination_det(rows), 1e-11 * scale * 100);
        EXPECT_NE(r.determinant, 0.0);
    }
    EXPECT_EQ(lemma2_system({0.5, 0.5, 2.0}).determinant, 0.0);
    for (double tau : {0.1, 0.5, 2.0}) {
        EXPECT_NEAR(lemma2_system({-tau, 0.0, tau}).determinant, lemma2_symmetric_determinant(tau),
                    1e-12 * std::max(1.0, std::abs(lemma2_symmetric_determinant(tau))));
    }
}

TEST(ConeInequality, SinglePointGivesExponentialMargin)
{
    const auto o = HyperboloidPoint::basepoint(3);
    const std::vector<HyperboloidPoint> pts{o};
    const std::vector<double> w{1.0};
    for (double d : {0.5, 1.0, 2.0}) {
        const HyperboloidPoint x(MinkowskiVector{std::cosh(d), 0.0, std::sinh(d), 0.0});
        const auto m = cone_gradient_inequality(pts, w, x, 1e-3);
        EXPECT_NEAR(m.value, std::cosh(d), 1e-12);
        EXPECT_NEAR(m.gradient_norm, std::sinh(d), 1e-6 * std::cosh(d));
        EXPECT_NEAR(m.margin, std::exp(-d), 1e-6 * std::cosh(d));
    }
}

TEST(ConeInequality, ZeroWeightsAndRandomCones)
{
    SeededSampler s(77);
    const auto pts = random_points(s, 3, 5, 3.0);
    const std::vector<double> zero(5, 0.0);
    const auto x0 = random_points(s, 3, 1, 3.0).front();
    const auto z = cone_gradient_inequality(pts, zero, x0, 1e-3);
    EXPECT_EQ(z.value, 0.0);
    EXPECT_EQ(z.gradient_norm, 0.0);

    for (int trial = 0; trial < 50; ++trial) {
        const auto src = random_points(s, 3, 5, 3.0);
        std::vector<double> w(5);
        for (auto& wi : w) wi = s.uniform();
        const auto x = random_points(s, 3, 1, 3.0).front();
        EXPECT_GE(cone_gradient_inequality(src, w, x, 1e-3).margin, -1e-6);
    }
}

TEST(ConeInequality, RejectsBadInput)
{
    const auto o = HyperboloidPoint::basepoint(2);
    const HyperboloidPoint x(MinkowskiVector{std::cosh(1.0), std::sinh(1.0), 0.0});
    const std::vector<HyperboloidPoint> pts{o};
    const std::vector<double> neg{-1.0};
    const std::vector<double> two{1.0, 1.0};
    const std::vector<double> one{1.0};
    EXPECT_THROW(cone_gradient_inequality(pts, neg, x, 1e-3), std::invalid_argument);
    EXPECT_THROW(cone_gradient_inequality(pts, two, x, 1e-3), std::invalid_argument);
    EXPECT_THROW(cone_gradient_inequality(pts, one, o, 1e-3), std::invalid_argument);
}

TEST(EmbedChecks, DefaultRunPasses)
{
    const auto rep = run_embed_checks(EmbedCheckConfig{});
    EXPECT_EQ(rep.unit_norm_max_err, 0.0);
    EXPECT_LE(rep.velocity_gram_err, 1e-5);
    EXPECT_LE(rep.third_derivative_max_err, 1e-4);
    EXPECT_GE(rep.gradient_inequality_margin, -1e-6);
    EXPECT_TRUE(rep.all_pass());
}

TEST(GramAnalysisJson, Keys)
{
    const auto g = gram_f(DistanceConfig::from_line(LineConfig::uniform(5, -2.0, 2.0)), 1.0 / 3.0);
    const json j = to_json(g);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"m", "c", "eigenvalues", "rank", "signature", "tolerance"}));
    EXPECT_EQ(j["signature"], json::array({2, 1, 2}));
    EXPECT_EQ(j["m"], 5);
}
