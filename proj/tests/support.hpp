#pragma once

// Shared generators and slow reference implementations for the tests.

#include <nhc/arith.hpp>
#include <nhc/curve.hpp>
#include <nhc/height.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace nhc::test {

inline Rational pow10(unsigned long e) { return Rational(ipow(Integer(10), e)); }

/// Deterministic source of small integers and rationals.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    long nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) v = integer(lo, hi);
        return v;
    }

    Rational rational(long max_num, long max_den) {
        return make_rational(Integer(nonzero(-max_num, max_num)), Integer(integer(1, max_den)));
    }

private:
    std::mt19937_64 rng_;
};

/// Trial-division check that no p^k divides n.
inline bool slow_kfree(long n, int k) {
    n = n < 0 ? -n : n;
    for (long p = 2;; ++p) {
        long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (pk > n) return true;
        if (n % pk == 0) return false;
    }
}

/// All elliptic curves in the height box with H(E) <= X and j(E) = j, by direct scan.
inline std::set<std::pair<long, long>> scan_j_set(const HeightSpec& spec, const Rational& X, const Rational& j) {
    const HeightBox b = box(spec, X);
    std::set<std::pair<long, long>> out;
    for (long A = -b.x_bound.get_si(); A <= b.x_bound.get_si(); ++A) {
        for (long B = -b.y_bound.get_si(); B <= b.y_bound.get_si(); ++B) {
            const WeierstrassCurve c{A, B};
            if (is_elliptic(c) && j_invariant(c) == j) out.insert({A, B});
        }
    }
    return out;
}

}  // namespace nhc::test
