#pragma once

#include <nhc/arith.hpp>
#include <nhc/errors.hpp>
#include <nhc/factor.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nhc {

/// E_{A,B}: y^2 = x^3 + A x + B.
struct WeierstrassCurve {
    Integer A;
    Integer B;

    friend bool operator==(const WeierstrassCurve& l, const WeierstrassCurve& r) {
        return l.A == r.A && l.B == r.B;
    }
    friend bool operator<(const WeierstrassCurve& l, const WeierstrassCurve& r) {
        return l.A != r.A ? l.A < r.A : l.B < r.B;
    }
    friend std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& c) {
        return os << "(" << c.A << ", " << c.B << ")";
    }
};

inline Integer discriminant(const WeierstrassCurve& c) {
    return -16 * (4 * ipow(c.A, 3) + 27 * c.B * c.B);
}

inline bool is_elliptic(const WeierstrassCurve& c) {
    return 4 * ipow(c.A, 3) + 27 * c.B * c.B != 0;
}

namespace detail {
inline void require_elliptic(const WeierstrassCurve& c, const char* who) {
    if (!is_elliptic(c)) {
        throw SingularCurveError(std::string(who) + ": singular curve (" + c.A.get_str() + ", " +
                                 c.B.get_str() + ")");
    }
}
}  // namespace detail

/// 1728 * 4A^3 / (4A^3 + 27B^2), in lowest terms.
inline Rational j_invariant(const WeierstrassCurve& c) {
    detail::require_elliptic(c, "j_invariant");
    const Integer a3 = 4 * ipow(c.A, 3);
    return make_rational(1728 * a3, a3 + 27 * c.B * c.B);
}

/// d * E_{A,B} = E_{d^4 A, d^6 B}.
inline WeierstrassCurve twist(const WeierstrassCurve& c, const Integer& d) {
    if (d < 1) {
        throw std::invalid_argument("twist: d must be a positive integer");
    }
    return {ipow(d, 4) * c.A, ipow(d, 6) * c.B};
}

struct TwistDecomposition {
    Integer d;
    WeierstrassCurve representative;

    friend bool operator==(const TwistDecomposition&, const TwistDecomposition&) = default;
};

/// Decomposes E = d * E0 with d = prod p^gamma_p, gamma_p the largest gamma
/// with p^(4 gamma) | A and p^(6 gamma) | B. A vanishing coordinate is
/// divisible by every power, so only the other one constrains gamma_p.
inline TwistDecomposition twist_decompose(const WeierstrassCurve& c) {
    detail::require_elliptic(c, "twist_decompose");

    Integer d = 1;
    if (c.A == 0) {
        for (const auto& [p, e] : factorize(c.B).factors) {
            d *= ipow(p, static_cast<unsigned long>(e / 6));
        }
    } else if (c.B == 0) {
        for (const auto& [p, e] : factorize(c.A).factors) {
            d *= ipow(p, static_cast<unsigned long>(e / 4));
        }
    } else {
        const Integer g = gcd(c.A, c.B);
        for (const auto& pp : factorize(g).factors) {
            const long gamma = std::min(ord_p(Rational(c.A), pp.prime) / 4, ord_p(Rational(c.B), pp.prime) / 6);
            if (gamma > 0) {
                d *= ipow(pp.prime, static_cast<unsigned long>(gamma));
            }
        }
    }
    return {d, {c.A / ipow(d, 4), c.B / ipow(d, 6)}};
}

/// True iff no prime p has p^4 | A and p^6 | B.
inline bool is_representative(const WeierstrassCurve& c) {
    detail::require_elliptic(c, "is_representative");
    return twist_decompose(c).d == 1;
}

}  // namespace nhc
