#pragma once

#include <cstddef>
#include <span>

#include "dyndeg/multipoly.hpp"

namespace dyndeg {

/// det(d forms[i] / d x_j) for 0 <= i, j < coord_vars. Further variables
/// of the ring act as symbolic parameters. Throws ArityMismatch unless
/// forms.size() == coord_vars.
template <class C>
MultiPoly<C> jacobian_det(std::span<MultiPoly<C> const> forms, std::size_t coord_vars);

/// Square system: every variable of the ring is a coordinate.
template <class C>
MultiPoly<C> jacobian_det(std::span<MultiPoly<C> const> forms) {
    if (forms.empty()) throw ArityMismatch("jacobian of an empty system");
    return jacobian_det(forms, forms.front().num_vars());
}

template <class C>
MultiPoly<C> jacobian_det(std::span<HomogeneousForm<C> const> forms);

}  // namespace dyndeg
