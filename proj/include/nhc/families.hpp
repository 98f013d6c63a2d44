#pragma once

#include <nhc/arith.hpp>
#include <nhc/curve.hpp>
#include <nhc/cuspidal.hpp>
#include <nhc/errors.hpp>
#include <nhc/height.hpp>
#include <nhc/kfree.hpp>

#include <array>
#include <vector>

namespace nhc {

inline bool is_special_j(const Rational& j) { return j == 0 || j == 1728; }

/// a(j) = 4(1728 - j) / (27 j): E_{A,B} has j-invariant j iff (A, B) != (0, 0) lies on y^2 = a(j) x^3.
inline Rational a_of_j(const Rational& j) {
    if (is_special_j(j)) {
        throw SpecialJInvariantError("a(j) is undefined for j = " + j.get_str());
    }
    return Rational(4 * (1728 - j) / (27 * j));
}

/// Everything the fixed-j formulas need, for one j outside {0, 1728} and one height.
///
/// c(j; H)^6 = min(c_pow6_first, c_pow6_second) with
///   c_pow6_first  = |a|^3 / (N_a^6 alpha),
///   c_pow6_second = |a|^2 / (N_a^6 beta).
struct JInvariantData {
    Rational j;
    CubicParam cubic;
    Rational c_pow6_first;
    Rational c_pow6_second;

    const Rational& a() const { return cubic.a; }
    const Rational& n_a() const { return cubic.n_a; }
    const Rational& c_pow6() const { return c_pow6_first < c_pow6_second ? c_pow6_first : c_pow6_second; }
};

inline JInvariantData j_invariant_data(const Rational& j, const HeightSpec& spec) {
    JInvariantData data{j, cubic_param(a_of_j(j)), 0, 0};
    const Rational abs_a = abs(data.a());
    const Rational na6 = rpow(data.n_a(), 6);
    data.c_pow6_first = rpow(abs_a, 3) / (na6 * spec.alpha());
    data.c_pow6_second = rpow(abs_a, 2) / (na6 * spec.beta());
    return data;
}

/// (A(j,m), B(j,m)) = (N_a^2 m^2 / a, N_a^3 m^3 / a); (0, m) for j = 0 and (m, 0) for j = 1728.
inline WeierstrassCurve curve_from_parameter(const Rational& j, const Integer& m) {
    if (m == 0) {
        throw std::invalid_argument("curve_from_parameter: m must be nonzero");
    }
    if (j == 0) {
        return {0, m};
    }
    if (j == 1728) {
        return {m, 0};
    }
    const CubicParam cubic = cubic_param(a_of_j(j));
    const CuspidalPoint p = phi(cubic, cubic.n_a * m);
    return {p.x, p.y};
}

/// floor(c(j; H) X^(1/6)) for generic j; the j = 0 and j = 1728 families use
/// floor((X/beta)^(1/2)) and floor((X/alpha)^(1/3)).
inline Integer param_bound(const Rational& j, const HeightSpec& spec, const Rational& X) {
    detail::require_positive_bound(X, "param_bound");
    if (j == 0) {
        return floor_rational_root(X / spec.beta(), 2);
    }
    if (j == 1728) {
        return floor_rational_root(X / spec.alpha(), 3);
    }
    const JInvariantData data = j_invariant_data(j, spec);
    const Integer first = floor_rational_root(data.c_pow6_first * X, 6);
    const Integer second = floor_rational_root(data.c_pow6_second * X, 6);
    return first < second ? first : second;
}

inline Integer count_tilde_j(const Rational& j, const HeightSpec& spec, const Rational& X) {
    return 2 * param_bound(j, spec, X);
}

/// Representatives with j-invariant j: m square-free for generic j, B 6-free for j = 0, A 4-free for j = 1728.
inline Integer count_rep_j(const Rational& j, const HeightSpec& spec, const Rational& X) {
    const Integer bound = param_bound(j, spec, X);
    const unsigned long k = j == 0 ? 6 : (j == 1728 ? 4 : 2);
    return 2 * count_kfree(bound, k);
}

/// All nonsingular E_{A,B} with H(E) <= X: lattice points of the box minus the
/// points of the singular cuspidal cubic y^2 = -4/27 x^3 inside it.
inline Integer count_tilde_all(const HeightSpec& spec, const Rational& X) {
    const HeightBox b = box(spec, X);
    // N_{-4/27} = 2/3 turns the singular-point bound into the sixth-power forms X/(27 alpha), X/(4 beta).
    const Integer first = floor_rational_root(X / (27 * spec.alpha()), 6);
    const Integer second = floor_rational_root(X / (4 * spec.beta()), 6);
    const Integer singular = 2 * (first < second ? first : second) + 1;
    return b.lattice_points() - singular;
}

/// Largest twist scale d with d^12 * min(alpha, beta) <= X; every nonzero
/// integer pair has height at least min(alpha, beta).
inline Integer max_twist_scale(const HeightSpec& spec, const Rational& X) {
    detail::require_positive_bound(X, "max_twist_scale");
    const Rational& floor_height = spec.alpha() < spec.beta() ? spec.alpha() : spec.beta();
    return floor_rational_root(X / floor_height, 12);
}

/// Representatives E with H(E) <= X, by Moebius inversion of the twist decomposition
/// #E~(X) = sum_d #E(X / d^12).
inline Integer count_rep_all(const HeightSpec& spec, const Rational& X) {
    const Integer d_max = max_twist_scale(spec, X);
    if (!d_max.fits_ulong_p() || d_max.get_ui() > (1ul << 32)) {
        throw std::invalid_argument("count_rep_all: height bound too large");
    }
    const auto limit = static_cast<std::size_t>(d_max.get_ui());
    const auto mu = moebius_table(limit);
    Integer total = 0;
    for (std::size_t d = 1; d <= limit; ++d) {
        if (mu[d] == 0) {
            continue;
        }
        const Rational scaled = X / Rational(ipow(Integer(d), 12));
        const Integer term = count_tilde_all(spec, scaled);
        if (mu[d] > 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

struct MinimalCurves {
    std::array<WeierstrassCurve, 2> curves;  // m = +1 first, then m = -1
    Rational height;
};

/// The two curves of minimal height with j-invariant j: m = +1 and m = -1 of the parametrization.
inline MinimalCurves minimal_curves(const Rational& j, const HeightSpec& spec) {
    const WeierstrassCurve plus = curve_from_parameter(j, 1);
    const WeierstrassCurve minus = curve_from_parameter(j, -1);
    return {{plus, minus}, height(spec, plus)};
}

struct ParametrizedCurve {
    Integer m;
    WeierstrassCurve curve;
    Rational height;
};

/// Every curve with j-invariant j and H(E) <= X, ordered by m ascending.
/// With representatives_only, m is restricted to square-free values (6-free for
/// j = 0, 4-free for j = 1728).
inline std::vector<ParametrizedCurve> parametrize(const Rational& j, const HeightSpec& spec, const Rational& X,
                                                  bool representatives_only = false) {
    const Integer bound = param_bound(j, spec, X);
    const unsigned long k = j == 0 ? 6 : (j == 1728 ? 4 : 2);
    std::vector<ParametrizedCurve> out;
    for (Integer m = -bound; m <= bound; ++m) {
        if (m == 0 || (representatives_only && !is_kfree(m, k))) {
            continue;
        }
        WeierstrassCurve c = curve_from_parameter(j, m);
        Rational h = height(spec, c);
        out.push_back({m, std::move(c), std::move(h)});
    }
    return out;
}

}  // namespace nhc
