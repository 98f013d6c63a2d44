#pragma once

#include <nhc/arith.hpp>
#include <nhc/curve.hpp>
#include <nhc/errors.hpp>
#include <nhc/families.hpp>
#include <nhc/height.hpp>
#include <nhc/parse.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

// Brute-force census of the height box. Everything here is checked point by
// point and shares no code path with the counting formulas beyond box().

namespace nhc {

struct JCount {
    std::uint64_t tilde = 0;
    std::uint64_t rep = 0;

    friend bool operator==(const JCount&, const JCount&) = default;
};

struct CensusResult {
    Integer box_points;
    std::uint64_t total_elliptic = 0;
    std::uint64_t total_representatives = 0;
    std::uint64_t singular_points = 0;
    std::map<Rational, JCount> per_j;

    friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

/// Height used for the default budget: the calibrated box at this height is the largest scan allowed.
inline Rational default_oracle_cap() { return Rational(ipow(Integer(10), 10)); }

/// Lattice-point budget; NHC_ORACLE_CAP (a height bound, read as calibrated) overrides the default cap.
inline Integer default_scan_budget() {
    Rational cap = default_oracle_cap();
    if (const char* env = std::getenv("NHC_ORACLE_CAP"); env != nullptr && *env != '\0') {
        cap = parse_bound(env);
    }
    return box(HeightSpec::calibrated(), cap).lattice_points();
}

struct CensusOptions {
    unsigned stripes = 0;  // 0: a few per thread
    unsigned threads = 0;  // 0: hardware concurrency
    std::optional<Integer> budget;
};

namespace detail {

using i128 = __int128;

inline void check_budget(const HeightBox& b, const std::optional<Integer>& budget) {
    const Integer limit = budget ? *budget : default_scan_budget();
    const Integer points = b.lattice_points();
    if (points > limit) {
        throw ScanBudgetError("brute-force scan of " + points.get_str() + " lattice points exceeds the budget of " +
                                  limit.get_str() + " (raise NHC_ORACLE_CAP to allow it)",
                              points.get_str(), limit.get_str());
    }
    // the kernel works in 128-bit integers
    if (b.x_bound >= Integer(1) << 40 || b.y_bound >= Integer(1) << 40) {
        throw ScanBudgetError("box sides too large for the scan kernel", points.get_str(), limit.get_str());
    }
}

inline const std::vector<std::int64_t>& scan_primes() {
    static const std::vector<std::int64_t> primes = [] {
        const std::int64_t limit = 1 << 14;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::int64_t> out;
        for (std::int64_t i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                out.push_back(i);
                for (std::int64_t k = i * i; k <= limit; k += i) {
                    composite[k] = true;
                }
            }
        }
        return out;
    }();
    return primes;
}

inline std::int64_t pow_i64(std::int64_t p, int e) {
    std::int64_t r = 1;
    while (e-- > 0) {
        r *= p;
    }
    return r;
}

/// p^6 for each prime p with p^4 | A (A != 0).
inline std::vector<std::int64_t> fourth_power_divisors(std::int64_t A) {
    std::vector<std::int64_t> out;
    const std::int64_t a = A < 0 ? -A : A;
    for (std::int64_t p : scan_primes()) {
        const std::int64_t p4 = pow_i64(p, 4);
        if (p4 > a) {
            break;
        }
        if (a % p4 == 0) {
            out.push_back(pow_i64(p, 6));
        }
    }
    return out;
}

inline bool is_sixth_power_free(std::int64_t B) {
    const std::int64_t b = B < 0 ? -B : B;
    for (std::int64_t p : scan_primes()) {
        const std::int64_t p6 = pow_i64(p, 6);
        if (p6 > b) {
            break;
        }
        if (b % p6 == 0) {
            return false;
        }
    }
    return true;
}

/// Matches points on y^2 = a x^3 for a fixed set of a-values: a long-double
/// ratio narrows the candidates and an exact integer identity decides.
class JClassifier {
public:
    explicit JClassifier(const std::vector<Rational>& generic_js) {
        for (std::size_t i = 0; i < generic_js.size(); ++i) {
            const Rational a = a_of_j(generic_js[i]);
            entries_.push_back({static_cast<long double>(a.get_d()), a.get_num(), a.get_den(), i});
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& l, const Entry& r) { return l.approx < r.approx; });
    }

    bool empty() const { return entries_.empty(); }

    /// Index into the constructor list of the j-invariant of E_{A,B}, A and B nonzero.
    std::optional<std::size_t> match(std::int64_t A, std::int64_t B) const {
        const long double a = static_cast<long double>(A);
        const long double ratio = static_cast<long double>(B) * static_cast<long double>(B) / (a * a * a);
        const long double tol = 1e-9L * (ratio < 0 ? -ratio : ratio);
        auto it = std::lower_bound(entries_.begin(), entries_.end(), ratio - tol,
                                   [](const Entry& e, long double v) { return e.approx < v; });
        for (; it != entries_.end() && it->approx <= ratio + tol; ++it) {
            const Integer b(static_cast<long>(B));
            const Integer a_int(static_cast<long>(A));
            if (b * b * it->den == it->num * a_int * a_int * a_int) {
                return it->index;
            }
        }
        return std::nullopt;
    }

private:
    struct Entry {
        long double approx;
        Integer num;
        Integer den;
        std::size_t index;
    };
    std::vector<Entry> entries_;
};

struct Partial {
    std::uint64_t elliptic = 0;
    std::uint64_t reps = 0;
    std::uint64_t singular = 0;
    std::vector<JCount> tracked;
};

}  // namespace detail

/// Scans every (A, B) with |A| <= box.x_bound, |B| <= box.y_bound.
inline CensusResult brute_census(const HeightSpec& spec, const Rational& X, const std::vector<Rational>& tracked_j,
                                 const CensusOptions& options = {}) {
    const HeightBox b = box(spec, X);
    detail::check_budget(b, options.budget);
    const std::int64_t T1 = b.x_bound.get_si();
    const std::int64_t T2 = b.y_bound.get_si();

    std::vector<Rational> js(tracked_j);
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());

    std::optional<std::size_t> idx_zero, idx_1728;
    std::vector<Rational> generic;
    std::vector<std::size_t> generic_slot;
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (js[i] == 0) {
            idx_zero = i;
        } else if (js[i] == 1728) {
            idx_1728 = i;
        } else {
            generic.push_back(js[i]);
            generic_slot.push_back(i);
        }
    }
    const detail::JClassifier classifier(generic);

    auto scan_row = [&](std::int64_t A, detail::Partial& part) {
        const detail::i128 a3 = 4 * static_cast<detail::i128>(A) * A * A;
        const std::vector<std::int64_t> sixth = A == 0 ? std::vector<std::int64_t>{} : detail::fourth_power_divisors(A);
        for (std::int64_t B = -T2; B <= T2; ++B) {
            if (a3 + 27 * static_cast<detail::i128>(B) * B == 0) {
                ++part.singular;
                continue;
            }
            ++part.elliptic;
            bool rep;
            if (A == 0) {
                rep = detail::is_sixth_power_free(B);
            } else {
                rep = std::none_of(sixth.begin(), sixth.end(), [B](std::int64_t p6) { return B % p6 == 0; });
            }
            part.reps += rep;

            std::optional<std::size_t> slot;
            if (A == 0) {
                slot = idx_zero;
            } else if (B == 0) {
                slot = idx_1728;
            } else if (!classifier.empty()) {
                if (auto k = classifier.match(A, B)) {
                    slot = generic_slot[*k];
                }
            }
            if (slot) {
                ++part.tracked[*slot].tilde;
                part.tracked[*slot].rep += rep;
            }
        }
    };

    const std::uint64_t rows = static_cast<std::uint64_t>(2 * T1 + 1);
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t stripes = options.stripes != 0 ? options.stripes : 4ull * threads;
    stripes = std::min<std::uint64_t>(stripes, rows);
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, stripes));

    detail::Partial total;
    total.tracked.assign(js.size(), {});
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next{0};

    auto worker = [&]() {
        detail::Partial part;
        part.tracked.assign(js.size(), {});
        for (std::uint64_t s = next++; s < stripes; s = next++) {
            const std::uint64_t lo = rows * s / stripes;
            const std::uint64_t hi = rows * (s + 1) / stripes;
            for (std::uint64_t r = lo; r < hi; ++r) {
                scan_row(static_cast<std::int64_t>(r) - T1, part);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.elliptic += part.elliptic;
        total.reps += part.reps;
        total.singular += part.singular;
        for (std::size_t i = 0; i < js.size(); ++i) {
            total.tracked[i].tilde += part.tracked[i].tilde;
            total.tracked[i].rep += part.tracked[i].rep;
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    CensusResult result;
    result.box_points = b.lattice_points();
    result.total_elliptic = total.elliptic;
    result.total_representatives = total.reps;
    result.singular_points = total.singular;
    for (std::size_t i = 0; i < js.size(); ++i) {
        result.per_j.emplace(js[i], total.tracked[i]);
    }
    return result;
}

struct BruteMinimal {
    std::vector<WeierstrassCurve> curves;  // sorted by (A, B)
    Rational height;
};

/// The curves of least height with j-invariant j among all H(E) <= cap, found by scanning.
inline std::optional<BruteMinimal> brute_minimal(const Rational& j, const HeightSpec& spec, const Rational& cap,
                                                 const std::optional<Integer>& budget = std::nullopt) {
    const HeightBox b = box(spec, cap);
    detail::check_budget(b, budget);
    const std::int64_t T1 = b.x_bound.get_si();
    const std::int64_t T2 = b.y_bound.get_si();

    std::optional<detail::JClassifier> classifier;
    if (!is_special_j(j)) {
        classifier.emplace(std::vector<Rational>{j});
    }

    std::optional<BruteMinimal> best;
    for (std::int64_t A = -T1; A <= T1; ++A) {
        for (std::int64_t B = -T2; B <= T2; ++B) {
            const detail::i128 disc = 4 * static_cast<detail::i128>(A) * A * A + 27 * static_cast<detail::i128>(B) * B;
            if (disc == 0) {
                continue;
            }
            bool hit;
            if (j == 0) {
                hit = A == 0;
            } else if (j == 1728) {
                hit = B == 0;
            } else {
                hit = A != 0 && B != 0 && classifier->match(A, B).has_value();
            }
            if (!hit) {
                continue;
            }
            WeierstrassCurve c{Integer(static_cast<long>(A)), Integer(static_cast<long>(B))};
            Rational h = height(spec, c);
            if (h > cap) {
                continue;
            }
            if (!best || h < best->height) {
                best = BruteMinimal{{c}, h};
            } else if (h == best->height) {
                best->curves.push_back(c);
            }
        }
    }
    if (best) {
        std::sort(best->curves.begin(), best->curves.end());
    }
    return best;
}

}  // namespace nhc
