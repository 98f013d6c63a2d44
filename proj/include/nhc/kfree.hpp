#pragma once

#include <nhc/arith.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nhc {

/// mu(0..limit) by a linear sieve; entry 0 is unused and left at 0.
inline std::vector<std::int8_t> moebius_table(std::size_t limit) {
    std::vector<std::int8_t> mu(limit + 1, 0);
    if (limit == 0) {
        return mu;
    }
    mu[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::size_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::size_t ip = i * p;
            if (ip > limit) {
                break;
            }
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

/// Q_k(M): the number of k-free integers in [1, M], as sum_{d^k <= M} mu(d) floor(M / d^k).
inline Integer count_kfree(const Integer& bound, unsigned long k) {
    if (k < 2) {
        throw std::invalid_argument("count_kfree: k must be at least 2");
    }
    if (bound < 0) {
        throw std::invalid_argument("count_kfree: bound must be nonnegative");
    }
    if (bound == 0) {
        return 0;
    }
    const Integer root = iroot(bound, k);
    if (!root.fits_ulong_p() || root.get_ui() > (1ul << 32)) {
        throw std::invalid_argument("count_kfree: bound too large for the Moebius sieve");
    }
    const auto limit = static_cast<std::size_t>(root.get_ui());
    const auto mu = moebius_table(limit);

    Integer total = 0;
    Integer dk;
    for (std::size_t d = 1; d <= limit; ++d) {
        if (mu[d] == 0) {
            continue;
        }
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        const Integer term = bound / dk;
        if (mu[d] > 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace nhc
