#pragma once

#include <nhc/arith.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace nhc {

/// 50 significant decimal digits; enough headroom for 30-digit constants.
using Real = boost::multiprecision::mpfr_float_50;

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Integer& n) {
    Real r;
    mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
    return r;
}

/// q^(1/k) for q >= 0.
inline Real real_root(const Rational& q, unsigned long k) {
    if (q < 0) {
        throw std::invalid_argument("real_root: negative argument");
    }
    Real r = to_real(q);
    mpfr_rootn_ui(r.backend().data(), r.backend().data(), k, MPFR_RNDN);
    return r;
}

inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

/// zeta(s) from the closed forms for s in {2, 4, 6, 10}.
inline Real zeta_value(int s) {
    const Real p = pi();
    switch (s) {
        case 2: return pow(p, 2) / 6;
        case 4: return pow(p, 4) / 90;
        case 6: return pow(p, 6) / 945;
        case 10: return pow(p, 10) / 93555;
        default: throw std::invalid_argument("zeta_value: unsupported argument " + std::to_string(s));
    }
}

inline std::string to_fixed(const Real& x, int decimals) {
    return x.str(decimals, std::ios_base::fixed);
}

}  // namespace nhc
