// Prints the CM curves of least height and the CM representative counts up to 10^7.

#include <nhc/asymptotics.hpp>
#include <nhc/cm.hpp>

#include <iostream>

int main() {
    using namespace nhc;
    const HeightSpec spec = HeightSpec::calibrated();

    for (const auto& row : cm_minimal_table(spec)) {
        std::cout << "d_K = " << row.order.d_k << ", f = " << row.order.f << ": " << row.minimal.curves[0]
                  << " and " << row.minimal.curves[1] << ", height " << row.minimal.height << '\n';
    }

    std::cout << '\n';
    for (unsigned long e = 1; e <= 7; ++e) {
        const Rational X(ipow(Integer(10), e));
        const AsymptoticReport r = report(count_rep_cm(spec, X), cm_asymptotic(spec, X));
        std::cout << "X = 1e" << e << ": " << r.exact << " curves, main term " << to_fixed(r.approximation, 2)
                  << " (" << format_percent(r.relative_error) << ")\n";
    }
}
