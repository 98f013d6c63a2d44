#pragma once

#include <nhc/arith.hpp>
#include <nhc/curve.hpp>

#include <stdexcept>
#include <string>

namespace nhc {

/// H_{alpha,beta}(E_{A,B}) = max(alpha |A|^3, beta B^2) with positive rational weights.
class HeightSpec {
public:
    HeightSpec(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (alpha_ <= 0 || beta_ <= 0) {
            throw std::invalid_argument("HeightSpec: alpha and beta must be positive");
        }
    }

    static HeightSpec calibrated() { return {4, 27}; }
    static HeightSpec uncalibrated() { return {1, 1}; }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    bool is_calibrated() const { return alpha_ == 4 && beta_ == 27; }
    bool is_uncalibrated() const { return alpha_ == 1 && beta_ == 1; }

    friend bool operator==(const HeightSpec& l, const HeightSpec& r) {
        return l.alpha_ == r.alpha_ && l.beta_ == r.beta_;
    }

private:
    Rational alpha_;
    Rational beta_;
};

/// Integer bounds with H(E_{A,B}) <= X  <=>  |A| <= x_bound and |B| <= y_bound.
struct HeightBox {
    Integer x_bound;
    Integer y_bound;

    bool contains(const WeierstrassCurve& c) const {
        return abs(c.A) <= x_bound && abs(c.B) <= y_bound;
    }

    Integer lattice_points() const { return (2 * x_bound + 1) * (2 * y_bound + 1); }

    friend bool operator==(const HeightBox&, const HeightBox&) = default;
};

inline Rational height(const HeightSpec& spec, const WeierstrassCurve& c) {
    const Rational a_term = spec.alpha() * Rational(ipow(abs(c.A), 3));
    const Rational b_term = spec.beta() * Rational(c.B * c.B);
    return a_term >= b_term ? a_term : b_term;
}

namespace detail {
inline void require_positive_bound(const Rational& X, const char* who) {
    if (X <= 0) {
        throw std::invalid_argument(std::string(who) + ": height bound must be positive");
    }
}
}  // namespace detail

inline HeightBox box(const HeightSpec& spec, const Rational& X) {
    detail::require_positive_bound(X, "box");
    return {floor_rational_root(X / spec.alpha(), 3), floor_rational_root(X / spec.beta(), 2)};
}

/// "cal", "ncal", or "alpha/<num>:<den>,beta/<num>:<den>".
inline std::string to_string(const HeightSpec& spec) {
    if (spec.is_calibrated()) {
        return "cal";
    }
    if (spec.is_uncalibrated()) {
        return "ncal";
    }
    auto part = [](const char* name, const Rational& q) {
        return std::string(name) + "/" + q.get_num().get_str() + ":" + q.get_den().get_str();
    };
    return part("alpha", spec.alpha()) + "," + part("beta", spec.beta());
}

inline HeightSpec parse_height_spec(const std::string& text) {
    if (text == "cal") {
        return HeightSpec::calibrated();
    }
    if (text == "ncal") {
        return HeightSpec::uncalibrated();
    }
    auto bad = [&text]() {
        return std::invalid_argument("height spec '" + text +
                                     "' is not cal, ncal or alpha/<num>:<den>,beta/<num>:<den>");
    };
    auto parse_part = [&](const std::string& part, const std::string& name) {
        const std::string prefix = name + "/";
        if (part.rfind(prefix, 0) != 0) {
            throw bad();
        }
        const std::string body = part.substr(prefix.size());
        const auto colon = body.find(':');
        if (colon == std::string::npos) {
            throw bad();
        }
        Integer num, den;
        if (num.set_str(body.substr(0, colon), 10) != 0 || den.set_str(body.substr(colon + 1), 10) != 0 ||
            den == 0) {
            throw bad();
        }
        return make_rational(num, den);
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw bad();
    }
    return {parse_part(text.substr(0, comma), "alpha"), parse_part(text.substr(comma + 1), "beta")};
}

}  // namespace nhc
