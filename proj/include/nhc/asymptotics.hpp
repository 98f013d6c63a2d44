#pragma once

#include <nhc/cm.hpp>
#include <nhc/families.hpp>
#include <nhc/real.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace nhc {

/// c(j; H) as the sixth root of the exact rational min; the min is decided before rounding.
inline Real c_constant(const Rational& j, const HeightSpec& spec) {
    return real_root(j_invariant_data(j, spec).c_pow6(), 6);
}

namespace detail {
inline Real x_power(const Rational& X, unsigned long k) {
    require_positive_bound(X, "main term");
    return real_root(X, k);
}
}  // namespace detail

/// Main term of #E~(X): 4 X^(5/6) / (alpha^(1/3) beta^(1/2)).
inline Real main_term_tilde_all(const HeightSpec& spec, const Rational& X) {
    const Real x6 = detail::x_power(X, 6);
    return 4 * pow(x6, 5) / (real_root(spec.alpha(), 3) * real_root(spec.beta(), 2));
}

inline Real main_term_rep_all(const HeightSpec& spec, const Rational& X) {
    return main_term_tilde_all(spec, X) / zeta_value(10);
}

/// Main term of #E~_j(X); for j = 0 and j = 1728 it is exact up to rounding of the box side.
inline Real main_term_tilde_j(const Rational& j, const HeightSpec& spec, const Rational& X) {
    if (j == 0) {
        return 2 * real_root(X / spec.beta(), 2);
    }
    if (j == 1728) {
        return 2 * real_root(X / spec.alpha(), 3);
    }
    return 2 * c_constant(j, spec) * detail::x_power(X, 6);
}

inline Real main_term_rep_j(const Rational& j, const HeightSpec& spec, const Rational& X) {
    const int s = j == 0 ? 6 : (j == 1728 ? 4 : 2);
    return main_term_tilde_j(j, spec, X) / zeta_value(s);
}

/// K(alpha, beta): the sum of c(j; H) over the eleven CM j outside {0, 1728}.
inline Real constant_K(const HeightSpec& spec) {
    Real sum = 0;
    for (const auto& order : cm_orders()) {
        const Rational j(order.j);
        if (!is_special_j(j)) {
            sum += c_constant(j, spec);
        }
    }
    return sum;
}

/// Three-term main term of #E^cm(X).
inline Real cm_asymptotic(const HeightSpec& spec, const Rational& X) {
    return main_term_rep_j(0, spec, X) + main_term_rep_j(1728, spec, X) +
           2 * constant_K(spec) * detail::x_power(X, 6) / zeta_value(2);
}

/// The same expansion for #E~^cm(X), without the zeta factors.
inline Real cm_asymptotic_tilde(const HeightSpec& spec, const Rational& X) {
    return main_term_tilde_j(0, spec, X) + main_term_tilde_j(1728, spec, X) +
           2 * constant_K(spec) * detail::x_power(X, 6);
}

enum class DensityFamily { all, j0, j1728, j_other };

inline Real density_limit(DensityFamily family) {
    switch (family) {
        case DensityFamily::all: return 1 / zeta_value(10);
        case DensityFamily::j0: return 1 / zeta_value(6);
        case DensityFamily::j1728: return 1 / zeta_value(4);
        case DensityFamily::j_other: return 1 / zeta_value(2);
    }
    throw std::invalid_argument("density_limit: unknown family");
}

struct AsymptoticReport {
    Integer exact;
    Real approximation;
    std::optional<double> relative_error;  // empty when exact = 0 and approximation != 0
};

inline AsymptoticReport report(const Integer& exact, const Real& approx) {
    if (exact < 0) {
        throw std::invalid_argument("report: exact count must be nonnegative");
    }
    AsymptoticReport r{exact, approx, std::nullopt};
    if (exact > 0) {
        const Real e = to_real(exact);
        r.relative_error = static_cast<double>(abs(approx - e) / e);
    } else if (approx == 0) {
        r.relative_error = 0.0;
    }
    return r;
}

/// Relative error as a percentage with two significant figures: "170%", "3.5%", "0.014%".
inline std::string format_percent(const std::optional<double>& relative_error) {
    if (!relative_error) {
        return "undefined";
    }
    const double pct = *relative_error * 100;
    if (pct == 0) {
        return "0%";
    }
    int exponent = static_cast<int>(std::floor(std::log10(pct)));
    double scale = std::pow(10.0, exponent - 1);
    double rounded = std::round(pct / scale) * scale;
    // rounding can carry into the next decade (9.96 -> 10)
    if (rounded >= std::pow(10.0, exponent + 1)) {
        ++exponent;
    }
    char buf[64];
    if (exponent >= 1) {
        std::snprintf(buf, sizeof buf, "%.0f%%", rounded);
    } else {
        std::snprintf(buf, sizeof buf, "%.*f%%", 1 - exponent, rounded);
    }
    return buf;
}

}  // namespace nhc
