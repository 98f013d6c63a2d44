#pragma once

#include <nhc/arith.hpp>
#include <nhc/cm.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace nhc {

/// Exact rational from "p/q", a decimal ("2.7", "-3375") or scientific form ("1e25", "2.7e10").
inline Rational parse_rational(const std::string& text) {
    auto bad = [&text]() { return std::invalid_argument("cannot parse '" + text + "' as a number"); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0 ||
            den == 0) {
            throw bad();
        }
        return make_rational(num, den);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
        const char c = text[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point) {
                --scale;
            }
        } else {
            throw bad();
        }
    }
    if (digits.empty()) {
        throw bad();
    }
    if (pos < text.size()) {
        const std::string exp = text.substr(pos + 1);
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exp, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != exp.size() || e > 10000 || e < -10000) {
            throw bad();
        }
        scale += e;
    }
    Integer mantissa(digits);
    if (negative) {
        mantissa = -mantissa;
    }
    const Integer power = ipow(Integer(10), static_cast<unsigned long>(scale < 0 ? -scale : scale));
    return scale >= 0 ? Rational(mantissa * power) : make_rational(mantissa, power);
}

inline Rational parse_bound(const std::string& text) {
    Rational X = parse_rational(text);
    if (X <= 0) {
        throw std::invalid_argument("height bound '" + text + "' must be positive");
    }
    return X;
}

/// A rational j-invariant, or "cm:<d_K>[:f]" for the j of a class-number-one order.
inline Rational parse_j(const std::string& text) {
    if (text.rfind("cm:", 0) != 0) {
        return parse_rational(text);
    }
    const std::string body = text.substr(3);
    const auto colon = body.find(':');
    int d_k = 0, f = 1;
    try {
        std::size_t used = 0;
        const std::string d_text = body.substr(0, colon);
        d_k = std::stoi(d_text, &used);
        if (used != d_text.size()) {
            throw std::invalid_argument("");
        }
        if (colon != std::string::npos) {
            const std::string f_text = body.substr(colon + 1);
            f = std::stoi(f_text, &used);
            if (used != f_text.size()) {
                throw std::invalid_argument("");
            }
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse CM alias '" + text + "'");
    }
    const auto order = find_cm_order(d_k, f);
    if (!order) {
        throw std::invalid_argument("no class-number-one order with d_K = " + std::to_string(d_k) +
                                    ", f = " + std::to_string(f));
    }
    return Rational(order->j);
}

}  // namespace nhc
