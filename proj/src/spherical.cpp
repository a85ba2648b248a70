#include "spherical.hpp"

#include <algorithm>

namespace levy {

bool SphericalMeasure::is_symmetric(double tol) const {
    std::vector<bool> used(atoms_.size(), false);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < atoms_.size(); ++j) {
            if (j == i || used[j]) continue;
            double d = 0.0;
            for (std::size_t k = 0; k < atoms_[i].u.dim(); ++k)
                d = std::max(d, std::abs(atoms_[i].u[k] + atoms_[j].u[k]));
            if (d <= tol && std::abs(atoms_[i].w - atoms_[j].w) <=
                                tol * std::max(atoms_[i].w, atoms_[j].w)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Cap> default_cap_partition(std::size_t dim, double jitter) {
    if (dim == 0) throw Error(ErrorCode::invalid_argument, "dimension must be >= 1");
    std::vector<Cap> caps;
    if (dim == 1) {
        caps.emplace_back(Direction(Vec{1.0}), M_PI / 4.0);
        caps.emplace_back(Direction(Vec{-1.0}), M_PI / 4.0);
        return caps;
    }
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (double sign : {1.0, -1.0}) {
            Vec c(dim, 0.0);
            c[axis] = sign * std::cos(jitter);
            c[(axis + 1) % dim] = sign * std::sin(jitter);
            caps.emplace_back(Direction(std::move(c)), M_PI / 4.0);
        }
    }
    return caps;
}

}  // namespace levy
