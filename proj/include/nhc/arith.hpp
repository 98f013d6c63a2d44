#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nhc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& base, unsigned long e) {
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Canonical decimal form; the denominator is omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Integer k-th root: the unique m >= 0 with m^k <= n < (m+1)^k.
///
/// Newton's iteration x <- ((k-1)x + n / x^(k-1)) / k started above the root
/// (2^ceil(bits/k)) decreases monotonically to the floor of the root; a final
/// +-1 correction against exact powers guards the boundary.
inline Integer iroot(const Integer& n, unsigned long k) {
    if (k == 0) {
        throw std::invalid_argument("iroot: k must be at least 1");
    }
    if (n < 0) {
        throw std::invalid_argument("iroot: negative radicand");
    }
    if (n == 0 || k == 1) {
        return n;
    }

    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x;
    mpz_setbit(x.get_mpz_t(), (bits + k - 1) / k);

    const Integer km1 = k - 1;
    for (;;) {
        Integer y = (km1 * x + n / ipow(x, k - 1)) / k;
        if (y >= x) {
            break;
        }
        x = std::move(y);
    }
    while (ipow(x, k) > n) {
        --x;
    }
    while (ipow(x + 1, k) <= n) {
        ++x;
    }
    return x;
}

/// Largest m >= 0 with m^k <= q, decided by exact rational comparison.
inline Integer floor_rational_root(const Rational& q, unsigned long k) {
    if (k == 0) {
        throw std::invalid_argument("floor_rational_root: k must be at least 1");
    }
    if (q < 0) {
        throw std::invalid_argument("floor_rational_root: negative argument");
    }
    // floor((n/d)^(1/k)) = floor((n d^(k-1))^(1/k) / d), and flooring the inner
    // root first does not change the outer floor since d is an integer.
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    Integer m = iroot(num * ipow(den, k - 1), k) / den;

    while (m > 0 && Rational(ipow(m, k)) > q) {
        --m;
    }
    while (Rational(ipow(m + 1, k)) <= q) {
        ++m;
    }
    return m;
}

}  // namespace nhc
