#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "nefvol/exact_linalg.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nefvol;

namespace {

oracle::Mat to_plain(const IntMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
    return out;
}

}  // namespace

TEST(DetExact, Examples) {
    EXPECT_EQ(det_exact(IntSymMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(det_exact(IntSymMatrix{{2}}), 2);
    EXPECT_EQ(det_exact(IntSymMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 2);
    EXPECT_EQ(det_exact(IntMatrix(0, 0)), 1);
}

TEST(DetExact, MatchesCofactorExpansion) {
    testgen::Gen gen(0xde7);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 5));
        const IntMatrix m = gen.matrix(n, -5, 5);
        ASSERT_EQ(det_exact(m), oracle::cofactor_det(to_plain(m))) << "trial " << trial;
    }
}

TEST(DetExact, SingularPivotColumns) {
    EXPECT_EQ(det_exact(IntMatrix{{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}), -6);
    EXPECT_EQ(det_exact(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(det_exact(IntMatrix{{0, 0}, {0, 0}}), 0);
}

TEST(IntSymMatrix, RejectsNonSymmetricAndNonSquare) {
    EXPECT_THROW(IntSymMatrix({{1, 2}, {3, 4}}), DimensionError);
    EXPECT_THROW(IntSymMatrix(IntMatrix(2, 3)), DimensionError);
}

TEST(Signature, Examples) {
    EXPECT_EQ(signature(IntSymMatrix{{2, 0}, {0, -8}}), (Inertia{1, 1, 0}));
    EXPECT_EQ(signature(IntSymMatrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
    // Product of two CM curves, d = -1, f1 = f2 = 1.
    EXPECT_EQ(signature(IntSymMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}), (Inertia{1, 3, 0}));
    EXPECT_EQ(signature(IntSymMatrix{{0, 0}, {0, 0}}), (Inertia{0, 0, 2}));
    EXPECT_EQ(signature(IntSymMatrix{{1, 1}, {1, 1}}), (Inertia{1, 0, 1}));
    EXPECT_TRUE(is_hyperbolic(IntSymMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    EXPECT_FALSE(is_hyperbolic(IntSymMatrix{{2, 0}, {0, 2}}));
}

TEST(Signature, AgreesWithDeterminantSign) {
    // Nondegenerate inertia (p, q) must satisfy sign(det) = (-1)^q.
    testgen::Gen gen(0x5167);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 5));
        const auto s = gen.symmetric(n, -4, 4);
        const Inertia in = signature(s);
        ASSERT_EQ(in.positive + in.negative + in.zero, n);
        const int d = sgn(det_exact(s));
        if (d == 0) {
            ASSERT_GT(in.zero, 0u);
        } else {
            ASSERT_EQ(in.zero, 0u);
            ASSERT_EQ(d, in.negative % 2 == 0 ? 1 : -1);
        }
    }
}

TEST(Signature, InvariantUnderUnimodularCongruence) {
    testgen::Gen gen(0xc0ffee);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 5));
        const auto s = gen.symmetric(n, -4, 4);
        const IntMatrix u = gen.unimodular(n);
        ASSERT_EQ(std::abs(det_exact(u).get_si()), 1);
        ASSERT_EQ(signature(s.congruent(u)), signature(s)) << "trial " << trial;
    }
}

TEST(HnfBasis, Examples) {
    EXPECT_EQ(hnf_basis({ints({2, 0}), ints({0, 2}), ints({2, 2})}), (std::vector{ints({2, 0}), ints({0, 2})}));
    EXPECT_EQ(hnf_basis({ints({1, 0}), ints({0, 1})}), (std::vector{ints({1, 0}), ints({0, 1})}));
    EXPECT_TRUE(hnf_basis({}).empty());
    EXPECT_TRUE(hnf_basis({ints({0, 0})}).empty());
}

TEST(HnfBasis, SixZeroFourTwoAgainstPointEnumeration) {
    const auto pts = oracle::lattice_points({{6, 0}, {4, 2}}, 12);
    const auto ref = oracle::hnf_from_points(pts);
    ASSERT_EQ(ref, (oracle::Hnf2{2, 4, 6}));
    EXPECT_EQ(hnf_basis({ints({6, 0}), ints({4, 2})}), (std::vector{ints({2, 4}), ints({0, 6})}));
}

TEST(HnfBasis, RandomFullRank2DAgainstPointEnumeration) {
    testgen::Gen gen(0x2d);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = gen.range(-4, 4), b = gen.range(-4, 4), c = gen.range(-4, 4), d = gen.range(-4, 4);
        if (a * d - b * c == 0) continue;
        const auto ref = oracle::hnf_from_points(oracle::lattice_points({{a, b}, {c, d}}, 40));
        const auto got = hnf_basis({ints({a, b}), ints({c, d})});
        ASSERT_EQ(got.size(), 2u);
        ASSERT_EQ(got[0], ints({ref.a, ref.b})) << a << ' ' << b << ' ' << c << ' ' << d;
        ASSERT_EQ(got[1], ints({0, ref.c}));
    }
}

TEST(HnfBasis, IndependentOfGeneratorOrder) {
    testgen::Gen gen(0x0bde);
    for (int trial = 0; trial < 300; ++trial) {
        const auto dim = static_cast<std::size_t>(gen.range(1, 4));
        const auto count = static_cast<std::size_t>(gen.range(1, 5));
        std::vector<IntVector> gens(count, IntVector(dim));
        for (auto& g : gens)
            for (auto& x : g) x = gen.range(-6, 6);
        const auto base = hnf_basis(gens);
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), gen.engine());
        // Unimodular recombination of generators spans the same lattice.
        if (shuffled.size() > 1)
            for (std::size_t k = 0; k < dim; ++k) shuffled[0][k] += 3 * shuffled[1][k];
        ASSERT_EQ(hnf_basis(shuffled), base) << "trial " << trial;
    }
}

TEST(HnfBasis, RankEqualsBasisSize) {
    EXPECT_EQ(hnf_basis({ints({1, 2, 3}), ints({2, 4, 6}), ints({-1, -2, -3})}).size(), 1u);
    EXPECT_EQ(hnf_basis({ints({1, 2, 3}), ints({0, 1, 1}), ints({1, 3, 4})}).size(), 2u);
}

TEST(LeftKernel, AnnihilatesAndIsSaturated) {
    const IntMatrix m{{2, 4}, {1, 2}, {3, 6}};
    const auto ker = left_kernel(m);
    ASSERT_EQ(ker.size(), 2u);
    for (const auto& x : ker) {
        for (std::size_t c = 0; c < 2; ++c) {
            Integer acc = 0;
            for (std::size_t r = 0; r < 3; ++r) acc += x[r] * m(r, c);
            EXPECT_EQ(acc, 0);
        }
    }
    // (1, -2, 0) lies in the kernel and must be an integral combination.
    EXPECT_EQ(hnf_basis({ker[0], ker[1], ints({1, -2, 0})}), ker);
}

TEST(LorentzFrame, Examples) {
    const auto f1 = lorentz_frame(IntSymMatrix{{2}}, ints({1}));
    EXPECT_NEAR(f1.transform(0, 0), 1 / std::sqrt(2.0), 1e-15);

    const auto f2 = lorentz_frame(IntSymMatrix{{0, 1}, {1, 0}}, ints({1, 1}));
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(f2.transform(0, 0), r, 1e-15);
    EXPECT_NEAR(f2.transform(1, 0), r, 1e-15);
    EXPECT_NEAR(std::abs(f2.transform(0, 1)), r, 1e-15);
    EXPECT_NEAR(f2.transform(0, 1), -f2.transform(1, 1), 1e-15);
    EXPECT_LE(frame_residual(f2), 1e-12);

    const auto f3 = lorentz_frame(IntSymMatrix{{2, 0}, {0, -4}}, ints({1, 0}));
    EXPECT_NEAR(f3.transform(0, 0), r, 1e-15);
    EXPECT_NEAR(std::abs(f3.transform(1, 1)), 0.5, 1e-15);
    EXPECT_NEAR(f3.transform(0, 1), 0.0, 1e-15);
    EXPECT_NEAR(f3.transform(1, 0), 0.0, 1e-15);
}

TEST(LorentzFrame, RejectsBadInput) {
    EXPECT_THROW(lorentz_frame(IntSymMatrix{{2, 0}, {0, 2}}, ints({1, 0})), SignatureError);
    EXPECT_THROW(lorentz_frame(IntSymMatrix{{2, 0}, {0, -4}}, ints({0, 1})), NotPositiveError);
    EXPECT_THROW(lorentz_frame(IntSymMatrix{{2, 0}, {0, -4}}, ints({1})), DimensionError);
}

TEST(LorentzFrame, InvariantsOnRandomHyperbolicForms) {
    testgen::Gen gen(0x10e);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(gen.range(1, 5));
        const auto [s, h] = gen.hyperbolic_with_ample(n);
        const auto frame = lorentz_frame(s, h);
        ASSERT_LE(frame_residual(frame), 1e-12) << "trial " << trial;
        const double det_t = std::abs(frame.transform.determinant());
        const double det_s = std::abs(det_exact(s).get_d());
        ASSERT_NEAR(det_t * std::sqrt(det_s), 1.0, 1e-12) << "trial " << trial;
        const double hh = std::sqrt(s.square(h).get_d());
        for (std::size_t i = 0; i < n; ++i)
            ASSERT_NEAR(frame.transform(static_cast<Eigen::Index>(i), 0), h[i].get_d() / hh, 1e-14);
    }
}
