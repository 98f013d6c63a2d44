#pragma once

#include <nhc/families.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nhc {

/// An imaginary quadratic order Z + f O_K of class number one.
struct CmOrder {
    int d_k;
    int f;
    Integer j;
};

/// The thirteen CM orders over Q and their j-invariants.
inline const std::array<CmOrder, 13>& cm_orders() {
    static const std::array<CmOrder, 13> orders{{
        {-3, 1, Integer(0)},
        {-3, 2, Integer(54000)},
        {-3, 3, Integer(-12288000)},
        {-4, 1, Integer(1728)},
        {-4, 2, Integer(287496)},
        {-7, 1, Integer(-3375)},
        {-7, 2, Integer(16581375)},
        {-8, 1, Integer(8000)},
        {-11, 1, Integer(-32768)},
        {-19, 1, Integer(-884736)},
        {-43, 1, Integer(-884736000)},
        {-67, 1, Integer(-147197952000)},
        {-163, 1, Integer("-262537412640768000")},
    }};
    return orders;
}

inline std::optional<CmOrder> find_cm_order(int d_k, int f = 1) {
    const auto& orders = cm_orders();
    auto it = std::find_if(orders.begin(), orders.end(),
                           [&](const CmOrder& o) { return o.d_k == d_k && o.f == f; });
    if (it == orders.end()) {
        return std::nullopt;
    }
    return *it;
}

inline bool is_cm_j(const Rational& j) {
    if (!is_integer(j)) {
        return false;
    }
    const auto& orders = cm_orders();
    return std::any_of(orders.begin(), orders.end(), [&](const CmOrder& o) { return o.j == j.get_num(); });
}

inline Integer count_tilde_cm(const HeightSpec& spec, const Rational& X) {
    Integer total = 0;
    for (const auto& order : cm_orders()) {
        total += count_tilde_j(Rational(order.j), spec, X);
    }
    return total;
}

inline Integer count_rep_cm(const HeightSpec& spec, const Rational& X) {
    Integer total = 0;
    for (const auto& order : cm_orders()) {
        total += count_rep_j(Rational(order.j), spec, X);
    }
    return total;
}

struct CmMinimalRow {
    CmOrder order;
    MinimalCurves minimal;
};

inline std::vector<CmMinimalRow> cm_minimal_table(const HeightSpec& spec) {
    std::vector<CmMinimalRow> rows;
    for (const auto& order : cm_orders()) {
        rows.push_back({order, minimal_curves(Rational(order.j), spec)});
    }
    return rows;
}

/// counts[i][k] = #E~_j(bounds[k]) for the i-th order; totals[k] sums column k.
struct CmCountTable {
    std::vector<Rational> bounds;
    std::vector<std::vector<Integer>> counts;
    std::vector<Integer> totals;
};

inline CmCountTable cm_count_table(const HeightSpec& spec, const std::vector<Rational>& bounds) {
    if (bounds.empty()) {
        throw std::invalid_argument("cm_count_table: no height bounds given");
    }
    CmCountTable table{bounds, {}, std::vector<Integer>(bounds.size(), 0)};
    for (const auto& order : cm_orders()) {
        std::vector<Integer> row;
        for (std::size_t k = 0; k < bounds.size(); ++k) {
            row.push_back(count_tilde_j(Rational(order.j), spec, bounds[k]));
            table.totals[k] += row.back();
        }
        table.counts.push_back(std::move(row));
    }
    return table;
}

}  // namespace nhc
