#include "simplicial/star_link.hpp"

#include <algorithm>

#include "simplicial/error.hpp"

namespace simplicial {

namespace {

void require_nonempty_member(const Complex& X, const Simplex& s) {
    if (s.empty()) {
        throw Error(ErrorKind::kNotASimplex, "the empty simplex is not accepted here");
    }
    if (!X.contains(s)) {
        throw Error(ErrorKind::kNotASimplex, "simplex is not in the complex");
    }
}

}  // namespace

SimplexSet::SimplexSet(Complex ambient, std::vector<Simplex> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), DimensionThenLex{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto& m : members_) {
        if (!ambient_.contains(m)) {
            throw Error(ErrorKind::kNotASimplex, "set member is not in the ambient complex");
        }
    }
}

bool SimplexSet::contains(const Simplex& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, DimensionThenLex{});
}

SimplexSet star(const Complex& X, const Simplex& s) {
    require_nonempty_member(X, s);
    std::vector<Simplex> members;
    for (const auto& f : X.facets()) {
        if (!s.is_face_of(f)) continue;
        const Simplex rest = f.without(s);
        for (std::size_t size = 0; size <= rest.size(); ++size) {
            rest.for_each_face_of_size(size, [&](const Simplex& t) {
                members.push_back(t.united_with(s));
            });
        }
    }
    return SimplexSet(X, std::move(members));
}

Complex closure(const SimplexSet& S) {
    if (S.empty()) return Complex();
    return Complex::from_simplices(S.ambient().labels(), S.members());
}

Complex link(const Complex& X, const Simplex& s) {
    require_nonempty_member(X, s);
    std::vector<Simplex> generators;
    for (const auto& f : X.facets()) {
        if (s.is_face_of(f)) generators.push_back(f.without(s));
    }
    return Complex::from_simplices(X.labels(), std::move(generators));
}

Complex link_via_closed_star(const Complex& X, const Simplex& s) {
    const Complex closed_star = closure(star(X, s));

    // closure() compacts ids, so translate each face back through its labels
    // before comparing with s. The empty simplex always survives the filter.
    std::vector<Simplex> disjoint{Simplex{}};
    for (int k = 0; k <= closed_star.dimension(); ++k) {
        for (const auto& t : closed_star.simplices_of_dim(k)) {
            Simplex in_ambient = X.simplex_of(closed_star.labels_of(t));
            if (in_ambient.disjoint_from(s)) disjoint.push_back(std::move(in_ambient));
        }
    }
    return Complex::from_simplices(X.labels(), std::move(disjoint));
}

}  // namespace simplicial
