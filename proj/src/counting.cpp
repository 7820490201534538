#include "simplicial/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "simplicial/checked.hpp"
#include "simplicial/error.hpp"
#include "simplicial/euler_check.hpp"
#include "simplicial/star_link.hpp"

namespace simplicial {

namespace {

std::int64_t size_as_count(std::size_t n) {
    if (n > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max())) {
        throw Error(ErrorKind::kOverflow, "count exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(n);
}

}  // namespace

const char* to_string(Identity id) {
    switch (id) {
        case Identity::kCofaceDoubleCount: return "coface-double-count";
        case Identity::kLinkCofaceCount: return "link-coface-count";
        case Identity::kCoefficientSum: return "coefficient-sum";
        case Identity::kSummedLinkIdentity: return "summed-link-identity";
    }
    return "unknown";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i. Cancelling gcd(result, i)
    // first makes the division exact before the multiply.
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t g = std::gcd(result, i);
        const std::int64_t factor = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(result / g, factor, &result)) {
            throw Error(ErrorKind::kOverflow, "binomial(" + std::to_string(n) + ", " +
                                                  std::to_string(k) + ") exceeds 64-bit range");
        }
    }
    return result;
}

std::int64_t count_faces(const Complex& Y, int l) {
    if (l == -1) return Y.empty() ? 0 : 1;
    return size_as_count(Y.simplices_of_dim(l).size());
}

std::int64_t count_cofaces(const Complex& X, const Simplex& s, int l) {
    if (!X.contains(s)) {
        throw Error(ErrorKind::kNotASimplex, "simplex is not in the complex");
    }
    if (l == -1) return s.empty() ? 1 : 0;
    const auto& faces = X.simplices_of_dim(l);
    return size_as_count(static_cast<std::size_t>(std::count_if(
        faces.begin(), faces.end(), [&](const Simplex& t) { return s.is_face_of(t); })));
}

LemmaReport verify_coface_double_count(const Complex& X, int k, int l) {
    if (k < 0 || k > l || l > X.dimension()) {
        throw Error(ErrorKind::kParameter,
                    "need 0 <= k <= l <= dim X, got k=" + std::to_string(k) +
                        " l=" + std::to_string(l) + " dim=" + std::to_string(X.dimension()));
    }
    LemmaReport r;
    r.identity = Identity::kCofaceDoubleCount;
    r.k = k;
    r.l = l;
    for (const auto& sigma : X.simplices_of_dim(k)) {
        r.lhs = checked::add(r.lhs, count_cofaces(X, sigma, l));
    }
    r.rhs = checked::mul(binomial(l + 1, k + 1), count_faces(X, l));
    r.holds = r.lhs == r.rhs;
    return r;
}

LemmaReport verify_link_coface_count(const Complex& X, const Simplex& s, int l) {
    if (s.empty() || !X.contains(s)) {
        throw Error(ErrorKind::kParameter, "simplex must be non-empty and in the complex");
    }
    const int k = s.dimension();
    if (l < k || l > X.dimension()) {
        throw Error(ErrorKind::kParameter,
                    "need dim s <= l <= dim X, got dim s=" + std::to_string(k) +
                        " l=" + std::to_string(l) + " dim=" + std::to_string(X.dimension()));
    }

    const Complex lk = link(X, s);
    const int p = l - k - 1;

    LemmaReport r;
    r.identity = Identity::kLinkCofaceCount;
    r.k = k;
    r.l = l;
    r.simplex = s;
    r.lhs = count_cofaces(X, s, l);
    r.rhs = count_faces(lk, p);
    r.holds = r.lhs == r.rhs;

    // The link has its own compacted ids; map its faces back by label.
    std::vector<Simplex> link_faces;
    if (p == -1) {
        if (!lk.empty()) link_faces.emplace_back();
    } else {
        for (const auto& t : lk.simplices_of_dim(p)) {
            link_faces.push_back(X.simplex_of(lk.labels_of(t)));
        }
    }

    std::set<Simplex> image;
    bool ok = true;
    for (const auto& tau : link_faces) {
        const Simplex joined = s.united_with(tau);
        if (!tau.disjoint_from(s) || joined.dimension() != l || !X.contains(joined)) {
            ok = false;
        }
        if (!image.insert(joined).second) ok = false;  // not injective
    }
    std::set<Simplex> cofaces;
    for (const auto& t : X.simplices_of_dim(l)) {
        if (s.is_face_of(t)) cofaces.insert(t);
    }
    if (image != cofaces) ok = false;  // not onto
    r.bijection = ok;
    return r;
}

std::int64_t coefficient_sum(int l) {
    if (l < 1) {
        throw Error(ErrorKind::kParameter, "coefficient_sum needs l >= 1");
    }
    std::int64_t sum = 0;
    for (int k = 0; k <= l - 1; ++k) {
        sum = checked::add(sum, checked::mul(checked::sign(l - k - 1), binomial(l + 1, k + 1)));
    }
    return sum;
}

LemmaReport verify_coefficient_sum(int l) {
    LemmaReport r;
    r.identity = Identity::kCoefficientSum;
    r.l = l;
    r.lhs = coefficient_sum(l);
    r.rhs = 1 + checked::sign(l + 1);
    r.holds = r.lhs == r.rhs;
    return r;
}

namespace detail {

LemmaReport summed_link_identity_sides(const FVector& f) {
    const int n = f.dimension();
    LemmaReport r;
    r.identity = Identity::kSummedLinkIdentity;

    std::int64_t even_sum = 0;
    for (int k = 0; k <= n; k += 2) even_sum = checked::add(even_sum, f[k]);
    r.lhs = checked::mul(2, even_sum);

    for (int k = 0; k <= n - 1; ++k) {
        for (int l = k + 1; l <= n; ++l) {
            const std::int64_t term =
                checked::mul(checked::mul(checked::sign(l - k - 1), binomial(l + 1, k + 1)), f[l]);
            r.rhs = checked::add(r.rhs, term);
        }
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace detail

LemmaReport verify_summed_link_identity(const Complex& X) {
    if (X.dimension() < 0) {
        throw Error(ErrorKind::kPrecondition, "complex has no vertices");
    }
    const EulerReport report = check_euler(X, {.max_failures = 1});
    if (!report.pure) {
        throw Error(ErrorKind::kPrecondition, "complex is not pure");
    }
    if (!report.is_euler) {
        const auto& bad = report.checks.front();
        throw Error(ErrorKind::kPrecondition,
                    "not an Euler complex: link of " + describe(X, bad.simplex) + " has chi " +
                        std::to_string(bad.link_chi) + ", expected " +
                        std::to_string(bad.expected_chi));
    }
    if (report.dimension % 2 == 0) {
        throw Error(ErrorKind::kPrecondition,
                    "dimension " + std::to_string(report.dimension) + " is not odd");
    }
    return detail::summed_link_identity_sides(X.f_vector());
}

}  // namespace simplicial
