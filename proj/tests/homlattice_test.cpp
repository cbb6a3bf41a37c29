#include <numeric>

#include <gtest/gtest.h>

#include "nefvol/homlattice.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nefvol;

namespace {

constexpr long kDiscs[] = {-1, -2, -3, -5, -6, -7, -10, -11, -13, -15, -19};

QuadElem elem(long d, long u, long v) { return {FieldDesc(d), u, v}; }

Rational im_omega_sq(long d) { return im_sq(QuadElem::omega(FieldDesc(d))); }

Integer theorem_disc(long d, long f1, long f2) {
    const long l = std::lcm(f1, f2);
    const Rational v = -4 * Rational(l * l) * im_omega_sq(d);
    return v.get_num();
}

}  // namespace

TEST(HomLatticeCM, Examples) {
    const auto end = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 1));
    EXPECT_EQ(end.basis[0], elem(-1, 1, 0));
    EXPECT_EQ(end.basis[1], elem(-1, 0, 1));

    const auto h12 = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 2));
    EXPECT_EQ(h12.basis[0], elem(-1, 2, 0));
    EXPECT_EQ(h12.basis[1], elem(-1, 0, 2));
    EXPECT_EQ(h12.area_ratio, Rational(1, 2));

    // Brute-force oracle value: Hom = 3Z + 3ωZ, ratio 2/3.
    const auto h23 = hom_lattice_cm(CMLattice(-3, 2), CMLattice(-3, 3));
    EXPECT_EQ(h23.basis[0], elem(-3, 3, 0));
    EXPECT_EQ(h23.basis[1], elem(-3, 0, 3));
    EXPECT_EQ(disc_product_cm(h23), -108);

    EXPECT_THROW(CMLattice(2, 1), SpecError);
    EXPECT_THROW(CMLattice(-1, 0), SpecError);
    EXPECT_THROW(hom_lattice_cm(CMLattice(-1, 1), CMLattice(-2, 1)), FieldMismatch);
}

TEST(HomLatticeCM, MatchesBruteForceScan) {
    for (const long d : kDiscs)
        for (long f1 = 1; f1 <= 3; ++f1)
            for (long f2 = 1; f2 <= 3; ++f2) {
                const auto ref = oracle::brute_hom_cm(d, f1, f2, 10 * f1 * f2);
                const auto hom = hom_lattice_cm(CMLattice(d, f1), CMLattice(d, f2));
                ASSERT_EQ(hom.basis[0], elem(d, ref.a, ref.b)) << d << ' ' << f1 << ' ' << f2;
                ASSERT_EQ(hom.basis[1], elem(d, 0, ref.c)) << d << ' ' << f1 << ' ' << f2;
            }
    // Larger conductors on a few fields.
    for (const long d : {-1L, -3L, -7L})
        for (const auto [f1, f2] : {std::pair{4L, 6L}, {5L, 2L}, {6L, 6L}}) {
            const auto ref = oracle::brute_hom_cm(d, f1, f2, 10 * f1 * f2);
            const auto hom = hom_lattice_cm(CMLattice(d, f1), CMLattice(d, f2));
            ASSERT_EQ(hom.basis[0], elem(d, ref.a, ref.b));
            ASSERT_EQ(hom.basis[1], elem(d, 0, ref.c));
        }
}

TEST(DualHom, Examples) {
    const auto end = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 1));
    EXPECT_EQ(dual_hom(elem(-1, 0, 1), end), elem(-1, 0, -1));
    const auto h12 = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 2));
    EXPECT_EQ(dual_hom(elem(-1, 2, 0), h12), elem(-1, 1, 0));
    const auto h31 = hom_lattice_cm(CMLattice(-2, 3), CMLattice(-2, 1));
    EXPECT_EQ(dual_hom(elem(-2, 1, 3), h31), elem(-2, 3, -9));
}

TEST(DegHom, Examples) {
    const auto end = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 1));
    EXPECT_EQ(deg_hom(elem(-1, 1, 0), end), 1);
    EXPECT_EQ(deg_hom(elem(-1, 0, 1), end), 1);
    const auto h12 = hom_lattice_cm(CMLattice(-1, 1), CMLattice(-1, 2));
    EXPECT_EQ(deg_hom(elem(-1, 2, 0), h12), 2);
}

TEST(NsGramProductCM, Examples) {
    EXPECT_EQ(ns_gram_product_cm(CMLattice(-1, 1), CMLattice(-1, 1)),
              (IntSymMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}}));
    const auto g12 = ns_gram_product_cm(CMLattice(-1, 1), CMLattice(-1, 2));
    EXPECT_EQ(g12, (IntSymMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -4, 0}, {0, 0, 0, -4}}));
    EXPECT_EQ(det_exact(g12), -16);
    EXPECT_EQ(det_exact(ns_gram_product_cm(CMLattice(-3, 1), CMLattice(-3, 1))), -3);
}

TEST(DiscProductCM, Examples) {
    EXPECT_EQ(disc_product_cm(CMLattice(-1, 1), CMLattice(-1, 1)), -4);
    EXPECT_EQ(disc_product_cm(CMLattice(-1, 2), CMLattice(-1, 3)), -144);
    EXPECT_EQ(disc_product_cm(CMLattice(-5, 2), CMLattice(-5, 2)), -80);
    EXPECT_EQ(disc_product_cm(CMLattice(-3, 1), CMLattice(-3, 2)), -12);
}

TEST(DiscProductCM, ConductorTheoremOverFullGrid) {
    int pairs = 0;
    for (const long d : kDiscs)
        for (long f1 = 1; f1 <= 6; ++f1)
            for (long f2 = 1; f2 <= 6; ++f2, ++pairs) {
                const CMLattice l1(d, f1), l2(d, f2);
                const Integer expected = theorem_disc(d, f1, f2);
                const auto hom = hom_lattice_cm(l1, l2);
                ASSERT_EQ(disc_product_cm(hom), expected) << d << ' ' << f1 << ' ' << f2;
                ASSERT_EQ(det_exact(ns_gram_product_cm(hom)), expected) << d << ' ' << f1 << ' ' << f2;
                ASSERT_EQ(disc_product_cm(l2, l1), expected);
            }
    EXPECT_EQ(pairs, 396);
}

TEST(HomLatticeCM, BasisMapsSourceIntoTarget) {
    testgen::Gen gen(0x707);
    for (int trial = 0; trial < 300; ++trial) {
        const long d = kDiscs[gen.range(0, std::size(kDiscs) - 1)];
        const long f1 = gen.range(1, 6), f2 = gen.range(1, 6);
        const CMLattice l1(d, f1), l2(d, f2);
        const auto hom = hom_lattice_cm(l1, l2);
        for (int k = 0; k < 5; ++k) {
            const QuadElem mu = elem(d, gen.range(-5, 5), f1 * gen.range(-5, 5));
            ASSERT_TRUE(l1.contains(mu));
            for (const auto& sigma : hom.basis) ASSERT_TRUE(l2.contains(sigma * mu));
        }
    }
}

TEST(HomLatticeCM, DegreesArePositiveIntegers) {
    testgen::Gen gen(0x708);
    for (int trial = 0; trial < 200; ++trial) {
        const long d = kDiscs[gen.range(0, std::size(kDiscs) - 1)];
        const auto hom = hom_lattice_cm(CMLattice(d, gen.range(1, 6)), CMLattice(d, gen.range(1, 6)));
        for (long p = -3; p <= 3; ++p)
            for (long q = -3; q <= 3; ++q) {
                if (p == 0 && q == 0) continue;
                const QuadElem s = Rational(p) * hom.basis[0] + Rational(q) * hom.basis[1];
                ASSERT_GE(deg_hom(s, hom), 1);
            }
    }
}

TEST(HomLatticeCM, DiscriminantIndependentOfBasis) {
    testgen::Gen gen(0x709);
    for (int trial = 0; trial < 300; ++trial) {
        const long d = kDiscs[gen.range(0, std::size(kDiscs) - 1)];
        const auto hom = hom_lattice_cm(CMLattice(d, gen.range(1, 6)), CMLattice(d, gen.range(1, 6)));
        const IntMatrix u = gen.unimodular(2, 8);
        auto moved = hom;
        for (std::size_t r = 0; r < 2; ++r)
            moved.basis[r] = Rational(u(r, 0)) * hom.basis[0] + Rational(u(r, 1)) * hom.basis[1];
        ASSERT_EQ(disc_product_cm(moved), disc_product_cm(hom));
        ASSERT_EQ(det_exact(ns_gram_product_cm(moved)), det_exact(ns_gram_product_cm(hom)));
    }
}

TEST(MinIsogenyDegreeCM, MatchesExhaustiveSearch) {
    EXPECT_EQ(min_isogeny_degree_cm(CMLattice(-1, 1), CMLattice(-1, 1)), 1);
    ASSERT_EQ(oracle::brute_min_degree_cm(-1, 1, 2, 10), 2);
    EXPECT_EQ(min_isogeny_degree_cm(CMLattice(-1, 1), CMLattice(-1, 2)), 2);
    ASSERT_EQ(oracle::brute_min_degree_cm(-3, 2, 3, 10), 6);
    EXPECT_EQ(min_isogeny_degree_cm(CMLattice(-3, 2), CMLattice(-3, 3)), 6);
    for (const long d : kDiscs)
        for (long f1 = 1; f1 <= 4; ++f1)
            for (long f2 = 1; f2 <= 4; ++f2) {
                const mpq_class ref = oracle::brute_min_degree_cm(d, f1, f2, 6 * f1 * f2);
                ASSERT_EQ(Rational(min_isogeny_degree_cm(CMLattice(d, f1), CMLattice(d, f2))), ref)
                    << d << ' ' << f1 << ' ' << f2;
            }
}

TEST(HomNoCM, Examples) {
    const auto h11 = hom_no_cm({1, 1});
    EXPECT_EQ(h11.generator, 1);
    EXPECT_EQ(h11.min_degree, 1);
    const auto h46 = hom_no_cm({4, 6});
    EXPECT_EQ(h46.generator, 3);
    EXPECT_EQ(h46.min_degree, 6);
    EXPECT_EQ(h46.area_ratio, Rational(2, 3));
    for (long k = 1; k <= 50; ++k) {
        const auto h = hom_no_cm({1, k});
        EXPECT_EQ(h.generator, k);
        EXPECT_EQ(h.min_degree, k);
    }
}

TEST(HomNoCM, MatchesBruteForceOverSmallMultipliers) {
    // λ ∈ Z maps Z + Z·t1τ into Z + Z·t2τ iff t2 | λ·t1; minimize (t1/t2)·λ².
    for (long t1 = 1; t1 <= 12; ++t1)
        for (long t2 = 1; t2 <= 12; ++t2) {
            long best = 0;
            for (long lam = 1; lam <= 20 && best == 0; ++lam)
                if ((lam * t1) % t2 == 0) best = lam;
            ASSERT_GT(best, 0);
            const auto h = hom_no_cm({t1, t2});
            ASSERT_EQ(h.generator, best);
            ASSERT_EQ(Rational(h.min_degree), Rational(t1 * best * best) / t2);
        }
}
