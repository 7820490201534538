#include "simplicial/euler_check.hpp"

#include <stdexcept>
#include <string>

#include "simplicial/checked.hpp"
#include "simplicial/error.hpp"
#include "simplicial/star_link.hpp"

namespace simplicial {

std::int64_t sphere_euler_characteristic(int d) {
    if (d < 0) return 0;
    return 1 + checked::sign(d);
}

EulerReport check_euler(const Complex& X, const EulerCheckOptions& options) {
    if (X.dimension() < 0) {
        throw Error(ErrorKind::kEmptyInput, "cannot classify a complex with no vertices");
    }
    EulerReport report;
    report.pure = X.is_pure();
    report.dimension = X.dimension();
    report.chi = X.euler_characteristic();
    report.theorem_applicable = report.dimension % 2 != 0;
    if (!report.pure) return report;

    const int n = report.dimension;
    // Dimensions are visited in increasing order and simplices_of_dim is
    // lexicographic, so checks come out in DimensionThenLex order.
    for (int k = 0; k <= n; ++k) {
        for (const auto& s : X.simplices_of_dim(k)) {
            const Complex lk = link(X, s);
            LinkCheck check;
            check.simplex = s;
            check.link_dim = lk.dimension();
            check.link_chi = lk.euler_characteristic();
            check.expected_chi = sphere_euler_characteristic(n - k - 1);
            if (check.link_dim != n - k - 1 ||
                check.expected_chi != sphere_euler_characteristic(check.link_dim)) {
                throw std::logic_error("link of " + describe(X, s) + " has dimension " +
                                       std::to_string(check.link_dim) + " in a pure complex of dimension " +
                                       std::to_string(n));
            }
            check.ok = check.link_chi == check.expected_chi;

            ++report.simplices_checked;
            if (!check.ok) ++report.failures;
            const bool keep = check.ok ? options.verbose
                                       : report.failures <= options.max_failures;
            if (keep) report.checks.push_back(std::move(check));
        }
    }
    report.is_euler = report.failures == 0;
    if (report.is_euler && report.theorem_applicable) {
        report.theorem_holds = report.chi == 0;
    }
    return report;
}

EulerReport verify_theorem(const Complex& X, const EulerCheckOptions& options) {
    EulerReport report = check_euler(X, options);
    if (report.is_euler && report.theorem_applicable) {
        report.summed_identity = detail::summed_link_identity_sides(X.f_vector());
    }
    return report;
}

}  // namespace simplicial
