#pragma once

#include <nhc/arith.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nhc {

struct PrimePower {
    Integer prime;
    long exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (-1)^e * prod p^(e_p) with primes strictly increasing and every e_p != 0.
/// Exponents are negative for primes of a rational's denominator.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    long ord(const Integer& p) const {
        auto it = std::lower_bound(factors.begin(), factors.end(), p,
                                   [](const PrimePower& pp, const Integer& q) { return pp.prime < q; });
        return (it != factors.end() && it->prime == p) ? it->exponent : 0;
    }

    Rational value() const {
        Integer num = sign;
        Integer den = 1;
        for (const auto& [p, e] : factors) {
            if (e > 0) {
                num *= ipow(p, static_cast<unsigned long>(e));
            } else {
                den *= ipow(p, static_cast<unsigned long>(-e));
            }
        }
        return make_rational(num, den);
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit, false);
        std::vector<std::uint32_t> out;
        out.reserve(78'498);
        for (std::uint32_t i = 2; i < kTrialDivisionLimit; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialDivisionLimit; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

// n - 1 = d * 2^s with d odd; true if a witnesses compositeness of n.
inline bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer nm1 = n - 1;
    if (x == 1 || x == nm1) {
        return false;
    }
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) {
            return false;
        }
        if (x == 1) {
            return true;
        }
    }
    return true;
}

// Below this bound the first thirteen primes form a deterministic witness set.
inline const Integer& deterministic_mr_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

inline constexpr int kRandomMillerRabinRounds = 40;

}  // namespace detail

inline bool is_prime(const Integer& n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        if (n == p) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return false;
        }
    }
    if (n < 43 * 43) {
        return true;
    }

    Integer d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (n < detail::deterministic_mr_bound()) {
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
            if (detail::miller_rabin_witness(n, Integer(a), d, s)) {
                return false;
            }
        }
        return true;
    }

    // Seeded from n so the verdict is reproducible and the call stays reentrant.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    const Integer span = n - 3;
    for (int round = 0; round < detail::kRandomMillerRabinRounds; ++round) {
        const Integer a = rng.get_z_range(span) + 2;
        if (detail::miller_rabin_witness(n, a, d, s)) {
            return false;
        }
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard's rho; n must be odd, composite and not a prime power.
inline Integer pollard_brent(const Integer& n) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    for (;;) {
        const Integer c = rng.get_z_range(n - 1) + 1;
        Integer y = rng.get_z_range(n);
        Integer x, ys, g = 1, q = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };

        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = step(y);
            }
            unsigned long k = 0;
            do {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = step(y);
                    q = q * Integer(abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

inline void split_large(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Integer r = iroot(n, k);
            if (ipow(r, k) == n) {
                std::vector<Integer> base;
                split_large(r, base);
                for (unsigned long i = 0; i < k; ++i) {
                    out.insert(out.end(), base.begin(), base.end());
                }
                return;
            }
        }
    }
    const Integer f = pollard_brent(n);
    split_large(f, out);
    split_large(n / f, out);
}

}  // namespace detail

/// Prime factorization of a nonzero integer: trial division by primes below
/// 10^6, then Miller-Rabin and Pollard-Brent on the cofactor.
inline Factorization factorize(const Integer& n) {
    if (n == 0) {
        throw std::invalid_argument("factorize: zero has no factorization");
    }
    Factorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Integer m = abs(n);

    for (std::uint32_t p : detail::small_primes()) {
        if (Integer(p) * p > m) {
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) {
            continue;
        }
        long e = 0;
        do {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0);
        result.factors.push_back({Integer(p), e});
    }
    if (m == 1) {
        return result;
    }

    const Integer limit = detail::kTrialDivisionLimit;
    if (m < limit * limit) {
        result.factors.push_back({m, 1});
        return result;
    }

    std::vector<Integer> primes;
    detail::split_large(m, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!result.factors.empty() && result.factors.back().prime == p) {
            ++result.factors.back().exponent;
        } else {
            result.factors.push_back({p, 1});
        }
    }
    return result;
}

/// Factorization of a nonzero rational; denominator primes get negative exponents.
inline Factorization factorize(const Rational& q) {
    if (q == 0) {
        throw std::invalid_argument("factorize: zero has no factorization");
    }
    Factorization num = factorize(q.get_num());
    if (q.get_den() == 1) {
        return num;
    }
    Factorization den = factorize(q.get_den());
    for (auto& pp : den.factors) {
        pp.exponent = -pp.exponent;
    }
    // numerator and denominator are coprime, so a merge never sees equal primes
    Factorization out;
    out.sign = num.sign;
    std::merge(num.factors.begin(), num.factors.end(), den.factors.begin(), den.factors.end(),
               std::back_inserter(out.factors),
               [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

/// Exponent of the prime p in the nonzero rational q.
inline long ord_p(const Rational& q, const Integer& p) {
    if (q == 0) {
        throw std::invalid_argument("ord_p: q must be nonzero");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("ord_p: " + p.get_str() + " is not prime");
    }
    auto count = [&p](Integer n) {
        long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        return e;
    };
    return count(abs(q.get_num())) - count(q.get_den());
}

inline int moebius(const Integer& n) {
    if (n < 1) {
        throw std::invalid_argument("moebius: n must be positive");
    }
    const Factorization f = factorize(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) {
            return 0;
        }
    }
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

/// True iff no prime p has p^k | n.
inline bool is_kfree(const Integer& n, unsigned long k) {
    if (k < 2) {
        throw std::invalid_argument("is_kfree: k must be at least 2");
    }
    if (n == 0) {
        throw std::invalid_argument("is_kfree: n must be nonzero");
    }
    const Factorization f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [k](const PrimePower& pp) { return pp.exponent < static_cast<long>(k); });
}

}  // namespace nhc
