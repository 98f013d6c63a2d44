#include "support.hpp"

#include <nhc/arith.hpp>
#include <nhc/real.hpp>

#include <gtest/gtest.h>

using namespace nhc;

TEST(Rational, CanonicalForm) {
    const Rational q = make_rational(-6, -4);
    EXPECT_EQ(q.get_num(), 3);
    EXPECT_EQ(q.get_den(), 2);
    const Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Iroot, Examples) {
    EXPECT_EQ(iroot(7000, 6), 4);
    EXPECT_EQ(iroot(0, 3), 0);
    EXPECT_EQ(iroot(ipow(Integer(10), 30), 2), ipow(Integer(10), 15));
    EXPECT_EQ(iroot(1, 12), 1);
    EXPECT_EQ(iroot(12345, 1), 12345);
}

TEST(Iroot, Errors) {
    EXPECT_THROW(iroot(-1, 2), std::invalid_argument);
    EXPECT_THROW(iroot(5, 0), std::invalid_argument);
}

TEST(Iroot, BracketsEveryValueUpTo1e5) {
    for (long n = 0; n <= 100000; ++n) {
        for (unsigned long k : {2ul, 3ul, 6ul}) {
            const Integer m = iroot(n, k);
            ASSERT_LE(ipow(m, k), n) << n << " " << k;
            ASSERT_GT(ipow(m + 1, k), n) << n << " " << k;
        }
    }
}

// Newton iteration checked against GMP's own mpz_root on large inputs.
TEST(Iroot, AgreesWithGmpRoot) {
    test::Gen gen(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
        Integer n = 1;
        const long words = gen.integer(1, 12);
        for (long w = 0; w < words; ++w) n = n * 1000003 + gen.integer(0, 1000002);
        const unsigned long k = static_cast<unsigned long>(gen.integer(1, 13));
        Integer expected;
        mpz_root(expected.get_mpz_t(), n.get_mpz_t(), k);
        ASSERT_EQ(iroot(n, k), expected) << n << " " << k;
        // perfect powers and their neighbours
        const Integer p = ipow(expected, k);
        mpz_root(expected.get_mpz_t(), Integer(p - 1).get_mpz_t(), k);
        ASSERT_EQ(iroot(p - 1, k), expected);
        ASSERT_EQ(iroot(p, k), iroot(n, k));
    }
}

TEST(FloorRationalRoot, Examples) {
    EXPECT_EQ(floor_rational_root(27, 2), 5);
    EXPECT_EQ(floor_rational_root(make_rational(1, 2), 6), 0);
    EXPECT_EQ(floor_rational_root(make_rational(7000, 27), 2), 16);
    EXPECT_EQ(floor_rational_root(0, 4), 0);
    EXPECT_THROW(floor_rational_root(-1, 2), std::invalid_argument);
    EXPECT_THROW(floor_rational_root(1, 0), std::invalid_argument);
}

TEST(FloorRationalRoot, AgreesWithIrootOnIntegersAndIsMonotone) {
    test::Gen gen(0x5eed02);
    for (long n = 0; n <= 3000; ++n) {
        for (unsigned long k : {1ul, 2ul, 3ul, 6ul, 12ul}) {
            ASSERT_EQ(floor_rational_root(Rational(n), k), iroot(n, k));
        }
    }
    for (int trial = 0; trial < 3000; ++trial) {
        const Rational q = abs(gen.rational(1000000, 1000));
        const unsigned long k = static_cast<unsigned long>(gen.integer(1, 12));
        const Integer m = floor_rational_root(q, k);
        ASSERT_LE(Rational(ipow(m, k)), q);
        ASSERT_GT(Rational(ipow(m + 1, k)), q);
        const Rational bigger = q + make_rational(gen.integer(0, 100), gen.integer(1, 100));
        ASSERT_LE(m, floor_rational_root(bigger, k));
    }
}

TEST(IntegerHelpers, FloorDivAndPowers) {
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, 2), 3);
    EXPECT_EQ(ipow(Integer(-2), 3), -8);
    EXPECT_EQ(rpow(make_rational(2, 3), 3), make_rational(8, 27));
    EXPECT_TRUE(is_integer(make_rational(4, 2)));
    EXPECT_FALSE(is_integer(make_rational(1, 2)));
}

TEST(Zeta, ClosedForms) {
    EXPECT_EQ(to_fixed(zeta_value(2), 15), "1.644934066848226");
    EXPECT_EQ(to_fixed(zeta_value(10), 15), "1.000994575127818");
    EXPECT_EQ(to_fixed(zeta_value(6), 15), "1.017343061984449");
    EXPECT_EQ(to_fixed(zeta_value(4), 15), "1.082323233711138");
    EXPECT_THROW(zeta_value(3), std::invalid_argument);
}

// Partial Euler-Maclaurin-free check: the series itself, summed far enough, lands on the closed form.
TEST(Zeta, MatchesDirectSeries) {
    for (int s : {4, 6, 10}) {
        Real sum = 0;
        for (int n = 200000; n >= 1; --n) sum += 1 / pow(Real(n), s);
        EXPECT_LT(abs(sum - zeta_value(s)), Real(1e-15)) << s;
    }
}
