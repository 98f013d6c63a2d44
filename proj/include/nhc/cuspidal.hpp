#pragma once

#include <nhc/arith.hpp>
#include <nhc/factor.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace nhc {

// Integral points on the cuspidal cubic C_a: y^2 = a x^3, a a nonzero rational.
//
// The nonzero integral points are exactly t -> (t^2/a, t^3/a) for t a nonzero
// multiple of the lattice step N_a = prod p^alpha_p(a), where
//   alpha_p(a) = ceil(ord_p(a) / 2)  if ord_p(a) >= 0,
//   alpha_p(a) = ceil(ord_p(a) / 3)  if ord_p(a) <  0.
// Writing t = N_a m, the box |x| <= T1, |y| <= T2 admits precisely the m with
//   |m|^6 <= |a|^3 T1^3 / N_a^6   and   |m|^6 <= |a|^2 T2^2 / N_a^6,
// so every bound below is an exact sixth root of a rational.

struct CubicParam {
    Rational a;
    Rational n_a;
    std::map<Integer, long> alpha_exponents;
};

inline CubicParam cubic_param(const Rational& a) {
    if (a == 0) {
        throw std::invalid_argument("cubic_param: a must be nonzero");
    }
    CubicParam param{a, 1, {}};
    Integer num = 1, den = 1;
    for (const auto& [p, e] : factorize(a).factors) {
        // ceil(e/2) for e >= 0; ceil(e/3) = -floor(-e/3) for e < 0
        const long alpha = e >= 0 ? (e + 1) / 2 : -((-e) / 3);
        if (alpha > 0) {
            num *= ipow(p, static_cast<unsigned long>(alpha));
        } else if (alpha < 0) {
            den *= ipow(p, static_cast<unsigned long>(-alpha));
        }
        param.alpha_exponents.emplace(p, alpha);
    }
    param.n_a = make_rational(num, den);
    return param;
}

struct CuspidalPoint {
    Integer m;
    Integer x;
    Integer y;

    friend bool operator==(const CuspidalPoint&, const CuspidalPoint&) = default;
};

/// phi_a(t) = (t^2/a, t^3/a) for t in N_a Z.
inline CuspidalPoint phi(const CubicParam& param, const Rational& t) {
    const Rational m = t / param.n_a;
    if (!is_integer(m)) {
        throw std::invalid_argument("phi: t = " + t.get_str() + " is not a multiple of N_a = " +
                                    param.n_a.get_str());
    }
    const Rational x = t * t / param.a;
    const Rational y = t * t * t / param.a;
    // membership in N_a Z guarantees integrality
    if (!is_integer(x) || !is_integer(y)) {
        throw std::logic_error("phi: non-integral image");
    }
    return {m.get_num(), x.get_num(), y.get_num()};
}

inline CuspidalPoint phi(const Rational& a, const Rational& t) { return phi(cubic_param(a), t); }

/// Largest M with every |m| <= M inside the box |x| <= T1, |y| <= T2.
inline Integer max_parameter(const CubicParam& param, const Rational& T1, const Rational& T2) {
    if (T1 <= 0 || T2 <= 0) {
        throw std::invalid_argument("cuspidal box bounds must be positive");
    }
    const Rational abs_a = abs(param.a);
    const Rational na6 = rpow(param.n_a, 6);
    const Integer by_x = floor_rational_root(rpow(abs_a, 3) * rpow(T1, 3) / na6, 6);
    const Integer by_y = floor_rational_root(rpow(abs_a, 2) * rpow(T2, 2) / na6, 6);
    return by_x < by_y ? by_x : by_y;
}

/// #C_a(Z; T1, T2), origin included.
inline Integer count_points(const CubicParam& param, const Rational& T1, const Rational& T2) {
    return 2 * max_parameter(param, T1, T2) + 1;
}

inline Integer count_points(const Rational& a, const Rational& T1, const Rational& T2) {
    return count_points(cubic_param(a), T1, T2);
}

/// The points of C_a(Z; T1, T2) as (m, N_a^2 m^2 / a, N_a^3 m^3 / a), m ascending.
inline std::vector<CuspidalPoint> enumerate_points(const CubicParam& param, const Rational& T1,
                                                   const Rational& T2) {
    const Integer bound = max_parameter(param, T1, T2);
    std::vector<CuspidalPoint> out;
    for (Integer m = -bound; m <= bound; ++m) {
        out.push_back(phi(param, param.n_a * m));
    }
    return out;
}

inline std::vector<CuspidalPoint> enumerate_points(const Rational& a, const Rational& T1, const Rational& T2) {
    return enumerate_points(cubic_param(a), T1, T2);
}

}  // namespace nhc
